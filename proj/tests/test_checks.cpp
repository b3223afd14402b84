#include <doctest.h>

#include <set>

#include "mfcat/checks.hpp"

using namespace mfcat;

TEST_CASE("check registry") {
    auto& reg = check_registry();
    std::set<std::string> names;
    for (auto& c : reg) {
        CHECK(names.insert(c.name).second);
        CHECK(!c.summary.empty());
    }
    for (const char* n : {"psi-symmetry", "psi-left-assoc", "psi-right-assoc", "psi-mixed", "ev-coev", "snake", "s-additivity",
                          "s-unitor", "conjugation-scalar", "tau-monoidal", "self-braiding", "hexagons", "jw-negligible", "qdim",
                          "vd", "freeness", "equivalence", "properties"})
        CHECK_MESSAGE(find_check(n) != nullptr, n);
    CHECK(reg.size() == 18);
    CHECK(find_check("no-such-check") == nullptr);
    CHECK(find_check("vd")->min_d == 2);
}

TEST_CASE("reports carry witnesses") {
    for (auto& r : find_check("psi-symmetry")->run(3, {})) {
        CHECK(r.status == Status::Pass);
        CHECK(!r.witness.empty());
        CHECK(r.check == "psi-symmetry");
        CHECK(r.params.size() == 2);
    }
    auto vd = find_check("vd")->run(2, {});
    CHECK(vd.size() == 7);
    for (auto& r : vd) CHECK(r.status == Status::Pass);
    // a zero degree bound cannot reach the psi homotopies
    SolveOptions tight;
    tight.degree_bound = 0;
    for (auto& r : find_check("psi-symmetry")->run(3, tight)) CHECK(r.status == Status::FalseAtBound);
}
