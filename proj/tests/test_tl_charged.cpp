#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "mfcat/tl_charged.hpp"
#include "support.hpp"

using namespace mfcat;

namespace {

// Oracle: every perfect matching of n+m points, kept when the boundary word read
// around the rectangle is balanced.
long brute_force_count(int n, int m) {
    int N = n + m;
    if (N % 2) return 0;
    std::vector<int> order;  // boundary indices in circular order
    for (int i = 0; i < n; ++i) order.push_back(i);
    for (int j = m - 1; j >= 0; --j) order.push_back(n + j);
    long count = 0;
    std::vector<int> match(N, -1);
    std::function<void()> rec = [&] {
        int i = 0;
        while (i < N && match[i] >= 0) ++i;
        if (i == N) {
            std::vector<int> stack;
            for (int idx : order) {
                if (!stack.empty() && match[stack.back()] == idx)
                    stack.pop_back();
                else
                    stack.push_back(idx);
            }
            if (stack.empty()) ++count;
            return;
        }
        for (int j = i + 1; j < N; ++j)
            if (match[j] < 0) {
                match[i] = j, match[j] = i;
                rec();
                match[i] = match[j] = -1;
            }
    };
    rec();
    return count;
}

TLElement random_element(std::mt19937_64& rng, int d, int n, int m, int nterms = 4) {
    const auto& basis = enumerate_diagrams(n, m);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    TLElement r = TLElement::zero(n, m);
    for (int i = 0; i < nterms; ++i) r.add(basis[pick(rng)], mfcat::testing::random_cyc(rng, 2 * d, 3, false));
    return r;
}

}  // namespace

TEST_CASE("diagram enumeration") {
    CHECK(enumerate_diagrams(2, 2).size() == 2);
    CHECK(enumerate_diagrams(3, 1).size() == 2);  // brute force below agrees
    CHECK(enumerate_diagrams(1, 2).empty());
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m) {
            const auto& ds = enumerate_diagrams(n, m);
            CHECK(static_cast<long>(ds.size()) == brute_force_count(n, m));
            if ((n + m) % 2 == 0) CHECK(static_cast<long>(ds.size()) == catalan((n + m) / 2));
            for (auto& D : ds) CHECK(D.is_planar());
        }
    CHECK(enumerate_diagrams(7, 7).size() == 429);
}

TEST_CASE("composition and loops") {
    TemperleyLieb tl(5);
    auto e1 = tl.e(2, 1);
    CHECK(tl.compose(e1, e1) == tl.kappa() * e1);
    auto cap = TLElement::of(KauffmanDiagram::cap()), cup = TLElement::of(KauffmanDiagram::cup());
    CHECK(tl.compose(cap, cup) == tl.kappa() * tl.identity(0));
    CHECK(tl.compose(tl.identity(2), e1) == e1);

    // Snake: (cap (x) 1)(1 (x) cup) = id, with charges -1 and +1.
    auto [snake, loops] = glue(juxtapose(KauffmanDiagram::cap(), KauffmanDiagram::identity(1)),
                               juxtapose(KauffmanDiagram::identity(1), KauffmanDiagram::cup()));
    CHECK(loops == 0);
    CHECK(snake == KauffmanDiagram::identity(1));
    CHECK(KauffmanDiagram::cap().charge() == -1);
    CHECK(KauffmanDiagram::cup().charge() == 1);
}

TEST_CASE("composition is associative and charge additive") {
    std::mt19937_64 rng(mfcat::testing::kSeed);
    TemperleyLieb tl(4);
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<int> sz(0, 4);
        int a = sz(rng), b = sz(rng), c = sz(rng), e = sz(rng);
        if ((a + b) % 2 || (b + c) % 2 || (c + e) % 2) continue;
        auto f = random_element(rng, 4, c, e), g = random_element(rng, 4, b, c), h = random_element(rng, 4, a, b);
        CHECK(tl.compose(tl.compose(f, g), h) == tl.compose(f, tl.compose(g, h)));
        for (auto& [Df, cf] : f.terms)
            for (auto& [Dg, cg] : g.terms) {
                auto [D, loops] = glue(Df, Dg);
                CHECK(loops >= 0);
                CHECK(D.charge() == Df.charge() + Dg.charge());
                CHECK(juxtapose(Df, Dg).charge() == Df.charge() + Dg.charge());
            }
    }
}

TEST_CASE("Jones-Wenzl projectors") {
    {
        // Oracle: p = id + c e_1 with e_1 p = 0 forces c = -1/kappa.
        TemperleyLieb tl(5);
        CycNumber c = -CycNumber(1) / tl.kappa();
        CHECK(tl.jones_wenzl(2) == tl.identity(2) + c * tl.e(2, 1));
    }
    for (int d = 3; d <= 6; ++d) {
        TemperleyLieb tl(d);
        for (int n = 1; n <= d - 1; ++n) {
            const auto& p = tl.jones_wenzl(n);
            CHECK(tl.compose(p, p) == p);
            CHECK(p.coeff(KauffmanDiagram::identity(n)) == 1);
            for (int i = 1; i < n; ++i) {
                CHECK(tl.compose(tl.e(n, i), p).is_zero());
                CHECK(tl.compose(p, tl.e(n, i)).is_zero());
            }
            CHECK(tl.markov_trace(p) == quantum_int(d, n + 1));
        }
        CHECK(tl.markov_trace(tl.jones_wenzl(d - 1)).is_zero());
        CHECK_THROWS_AS(tl.jones_wenzl(d), Error);
    }
}

TEST_CASE("Markov trace") {
    std::mt19937_64 rng(mfcat::testing::kSeed + 1);
    TemperleyLieb tl(5);
    CycNumber k = tl.kappa();
    CHECK(tl.markov_trace(tl.identity(3)) == k * k * k);
    CHECK(tl.markov_trace(tl.e(2, 1)) == k);
    for (int t = 0; t < 10; ++t) {
        auto f = random_element(rng, 5, 3, 3), g = random_element(rng, 5, 3, 3);
        CHECK(tl.markov_trace(tl.compose(f, g)) == tl.markov_trace(tl.compose(g, f)));
    }
    CHECK_THROWS_AS(tl.markov_trace(TLElement::of(KauffmanDiagram::cap())), Error);
}

TEST_CASE("charged morphisms") {
    int d = 5;
    auto cap = charged_hom(d, {0, 2}, {1, 0});
    REQUIRE(cap.size() == 1);
    CHECK(cap[0] == KauffmanDiagram::cap());
    CHECK(charged_hom(d, {0, 2}, {0, 0}).empty());
    CHECK(charged_hom(d, {0, 2}, {-1, 0}).empty());
    CHECK(charged_hom(d, {0, 1}, {0, 1}).size() == 1);
    CHECK(charged_hom(d, {0, 1}, {0, 2}).empty());
    // Snake pieces are plain morphisms (k,1) -> (k-1,3) -> (k,1).
    for (int k = 0; k < d; ++k) {
        auto up = charged_hom(d, {k, 1}, {k - 1, 3});
        auto down = charged_hom(d, {k - 1, 3}, {k, 1});
        auto one_cup = juxtapose(KauffmanDiagram::identity(1), KauffmanDiagram::cup());
        auto one_cap = juxtapose(KauffmanDiagram::cap(), KauffmanDiagram::identity(1));
        CHECK(std::find(up.begin(), up.end(), one_cup) != up.end());
        CHECK(std::find(down.begin(), down.end(), one_cap) != down.end());
    }
}

TEST_CASE("charged fusion ring") {
    ChargedFusionRing R4(4);
    CHECK(R4.simples().size() == 12);
    auto gen = R4.simple(0, 1);
    CHECK(R4.fuse_generator(gen, gen) == std::vector<ChargedSimple>{{1, 0}, {0, 2}});
    CHECK(R4.fuse(R4.unit(), R4.simple(2, 1)) == std::vector<ChargedSimple>{{2, 1}});
    ChargedFusionRing R3(3);
    CHECK(R3.simples().size() == 6);
    CHECK(R3.fuse_generator(R3.simple(0, 1), R3.simple(0, 1)) == std::vector<ChargedSimple>{{1, 0}});
    CHECK(R3.dual(R3.simple(0, 1)) == R3.simple(2, 1));
    for (int d = 3; d <= 6; ++d) {
        ChargedFusionRing R(d);
        CHECK(R.is_commutative());
        for (auto& a : R.simples()) {
            auto b = R.dual(a);
            CHECK(R.N(a, b, R.unit()) == 1);
        }
    }
}

TEST_CASE("charged fusion from projectors") {
    for (int d = 3; d <= 6; ++d) {
        TemperleyLieb tl(d);
        ChargedFusionRing R(d);
        for (auto& a : R.simples())
            for (int l = 0; l < d; ++l) {
                ChargedSimple g{l, 1};
                for (auto& c : R.simples())
                    CHECK_MESSAGE(diagram_multiplicity(tl, a, g, c) == R.N(a, g, c), a.str(), g.str(), c.str());
            }
    }
}
