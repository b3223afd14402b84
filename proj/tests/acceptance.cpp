// One PASS/FAIL line per acceptance criterion. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mfcat/checks.hpp"
#include "mfcat/cns_ring.hpp"
#include "mfcat/perm_cat.hpp"
#include "mfcat/properties.hpp"
#include "mfcat/tl_charged.hpp"

using namespace mfcat;

namespace {

struct Verdict {
    bool pass = true;
    long cases = 0, failures = 0;
    std::string first;  // first counterexample

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (!ok) ++failures;
        if (!ok && pass) {
            pass = false;
            first = what;
        }
    }
};

// Run named checks for each d; a case counts if the filter accepts it, and it must pass with a witness.
void suite(Verdict& v, const std::vector<std::string>& names, const std::vector<int>& ds,
           const std::function<bool(const CaseReport&)>& keep = nullptr) {
    for (auto& name : names)
        for (int d : ds) {
            const CheckDef* def = find_check(name);
            if (!def) {
                v.expect(false, "no check " + name);
                continue;
            }
            for (auto& r : def->run(d, {})) {
                if (keep && !keep(r)) continue;
                std::string at = name + " d=" + std::to_string(d);
                for (auto& [k, val] : r.params) at += " " + k + "=" + val;
                v.expect(r.status == Status::Pass && !r.witness.empty(), at + ": " + status_name(r.status) + " " + r.note);
            }
        }
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::map<PermLabel, std::size_t> counts(const std::vector<PermLabel>& v) {
    std::map<PermLabel, std::size_t> m;
    for (auto& s : v) ++m[s];
    return m;
}

void c1(Verdict& v) {
    for (int d = 3; d <= 6; ++d) {
        PermCategory C(d);
        for (auto& a : C.labels())
            for (auto& b : C.labels()) {
                auto hom = C.fusion_by_hom(a, b);
                std::erase_if(hom, [](auto& kv) { return kv.second == 0; });
                v.expect(hom == counts(C.fusion_rule(a, b)), "d=" + std::to_string(d) + " " + a.str() + " x " + b.str());
            }
    }
}

void c2(Verdict& v) {
    for (int d = 3; d <= 6; ++d) {
        PermCategory C(d);
        std::set<std::string> seen;
        for (auto& ax : ring_iso_check(C)) {
            seen.insert(ax.axiom);
            v.expect(ax.pass, "d=" + std::to_string(d) + " " + ax.axiom + ": " + ax.detail);
        }
        for (const char* need : {"bijection", "fusion-closed-form", "fusion-hom-space", "quantum-dimensions", "unit", "duals",
                                 "charge-compatibility"})
            v.expect(seen.count(need) == 1, std::string("missing axiom ") + need);
    }
}

void c3(Verdict& v) {
    for (int d = 3; d <= 6; ++d) {
        PermCategory C(d);
        std::string at = "d=" + std::to_string(d) + " ";
        CycNumber z = root_of_unity(2 * d, 1);
        for (int m = 0; m < d; ++m) {
            v.expect(C.qdim_left(C.label(m, 0)) == 1, at + "qdim_L(P_{" + std::to_string(m) + ";0})");
            CycNumber want = C.eta(-m) + C.eta(-m - 1), got = C.qdim_left(C.label(m, 1));
            v.expect(got == want, at + "qdim_L(P_{" + std::to_string(m) + ";1}) = " + got.str() + ", anchor " + want.str());
        }
        v.expect(C.qdim_spherical(C.label(0, 1)) == z + z.inverse(), at + "qdim(P_{0;1})");
        for (auto& s : C.labels()) {
            // [l+1] = (z^{l+1} - z^{-l-1}) / (z - z^{-1})
            CycNumber q = (root_of_unity(2 * d, s.l + 1) - root_of_unity(2 * d, -s.l - 1)) / (z - z.inverse());
            v.expect(C.qdim_spherical(s) == q, at + "qdim(" + s.str() + ")");
        }
    }
}

void c4(Verdict& v) {
    for (int d = 3; d <= 8; ++d) {
        TemperleyLieb tl(d);
        std::string at = "d=" + std::to_string(d) + " ";
        for (int n = 1; n <= d - 1; ++n) {
            const TLElement& p = tl.jones_wenzl(n);
            v.expect(tl.compose(p, p) == p, at + "p_" + std::to_string(n) + " idempotent");
            for (int i = 1; i < n; ++i) {
                v.expect(tl.compose(tl.e(n, i), p).is_zero(), at + "e_" + std::to_string(i) + " p_" + std::to_string(n));
                v.expect(tl.compose(p, tl.e(n, i)).is_zero(), at + "p_" + std::to_string(n) + " e_" + std::to_string(i));
            }
        }
        v.expect(tl.markov_trace(tl.jones_wenzl(d - 1)).is_zero(), at + "tr(p_{d-1})");
    }
    for (int k = 0; k <= 7; ++k) {
        long want = binomial(2 * k, k) / (k + 1);
        v.expect(static_cast<long>(enumerate_diagrams(k, k).size()) == want, "|K(" + std::to_string(k) + "," + std::to_string(k) + ")|");
        v.expect(static_cast<long>(enumerate_diagrams(2 * k, 0).size()) == want, "|K(" + std::to_string(2 * k) + ",0)|");
    }
}

void c8(Verdict& v) {
    for (int d = 3; d <= 6; ++d) {
        std::string at = "d=" + std::to_string(d) + " ";
        ChargedFusionRing R(d);
        v.expect(R.simples().size() == static_cast<std::size_t>(d * (d - 1)), at + "simple count");
        auto to_cns = [&](const ChargedSimple& s) { return cns_label(d, s.n, 2 * s.k + s.n); };
        std::set<CnsLabel> image;
        for (auto& a : R.simples()) {
            image.insert(to_cns(a));
            v.expect(to_cns(R.dual(a)) == cns_dual(d, to_cns(a)), at + "dual of " + a.str());
            for (auto& b : R.simples()) {
                std::multiset<CnsLabel> lhs, rhs;
                for (auto& c : R.fuse(a, b)) lhs.insert(to_cns(c));
                for (auto& c : cns_fuse(d, to_cns(a), to_cns(b))) rhs.insert(c);
                v.expect(lhs == rhs, at + a.str() + " x " + b.str());
            }
        }
        auto all = cns_simples(d);
        v.expect(image == std::set<CnsLabel>(all.begin(), all.end()), at + "relabelling is a bijection");
        // generator: dual <<0,1>> = <<-1,1>> = <<0,1>> (x) <<-1,0>>, charge -1
        ChargedSimple g{0, 1};
        auto shifted = R.fuse(g, R.simple(-1, 0));
        v.expect(shifted.size() == 1 && R.dual(g) == shifted[0], at + "generator self-dual of charge -1");
    }
    suite(v, {"equivalence"}, {3, 4, 5, 6}, [](const CaseReport& r) { return r.params[0].second == "tl"; });
}

void c9(Verdict& v) {
    for (auto& p : run_properties(property_seed(), 1000, {3, 4, 5})) {
        v.expect(p.cases == 1000, p.name + " ran " + std::to_string(p.cases) + " cases");
        v.expect(p.failures == 0, p.name + ": " + std::to_string(p.failures) + " failures, " + p.first_failure);
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* what;
        std::function<void(Verdict&)> body;
    };
    const std::vector<Criterion> criteria = {
        {"C1", "lg fusion from hom-space dimensions equals the closed form, d=3..6", c1},
        {"C2", "ring isomorphism with the Neveu-Schwarz ring, d=3..6", c2},
        {"C3", "left and spherical quantum dimensions, d=3..6", c3},
        {"C4", "Jones-Wenzl projectors, tr(p_{d-1}) = 0, Catalan counts, d<=8", c4},
        {"C5", "morphism identities up to homotopy with witnesses, d=3,4,5",
         [](Verdict& v) {
             suite(v, {"psi-symmetry", "ev-coev", "psi-left-assoc", "psi-right-assoc", "psi-mixed", "s-unitor", "snake",
                       "hexagons", "self-braiding"},
                   {3, 4, 5});
         }},
        {"C6", "conjugation scalars eta^{a(l-l'-l'')/2}, d=4,5", [](Verdict& v) { suite(v, {"conjugation-scalar"}, {4, 5}); }},
        {"C7", "tau monoidal in both arguments d=3,4; freeness d=3,4,5",
         [](Verdict& v) {
             suite(v, {"tau-monoidal"}, {3, 4});
             suite(v, {"freeness"}, {3, 4, 5});
         }},
        {"C8", "charged Temperley-Lieb ring, generator and relabelling, d<=6", c8},
        {"C9", "seeded property tests, 1000 cases each", c9},
    };
    int failed = 0;
    for (auto& c : criteria) {
        Verdict v;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(v);
        } catch (const std::exception& e) {
            v.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!v.pass) ++failed;
        std::printf("%s %s  %s  [%ld cases, %.1f s]", c.id, v.pass ? "PASS" : "FAIL", c.what, v.cases, secs);
        if (!v.pass) std::printf("  %ld failed, first: %s", v.failures, v.first.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
