#include <doctest.h>

#include <map>
#include <random>

#include "mfcat/mf_core.hpp"
#include "mfcat/sparse.hpp"
#include "support.hpp"

using namespace mfcat;
using mfcat::testing::eta;
using mfcat::testing::kSeed;
using mfcat::testing::random_cyc;
using mfcat::testing::random_poly;

namespace {

const MultiPoly X = MultiPoly::var(0), Y = MultiPoly::var(1);

MFPtr perm(int d, std::vector<int> S) {
    MultiPoly d1(1);
    for (int k : S) d1 *= X - eta(d, k) * Y;
    MultiPoly W = pow(X, d) - pow(Y, d);
    PolyMatrix a(1, 1), b(1, 1);
    a(0, 0) = d1;
    b(0, 0) = divide_exact(W, d1);
    return mf_shift(make_mf(a, b, 0, 1, d, "P"), 1 - static_cast<int>(S.size()));
}

MFPtr random_perm(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> m(0, d - 1), l(0, d - 2);
    int mm = m(rng), ll = l(rng);
    std::vector<int> S;
    for (int k = 0; k <= ll; ++k) S.push_back((mm + k) % d);
    return perm(d, S);
}

Morphism random_mor(std::mt19937_64& rng, const MFPtr& M, const MFPtr& N, int parity) {
    Morphism f{M, N, parity, PolyMatrix(N->rank(), M->rank())};
    for (std::size_t t = 0; t < N->rank(); ++t)
        for (std::size_t s = 0; s < M->rank(); ++s)
            if ((M->parity(s) + N->parity(t) + parity) % 2 == 0) f.F(t, s) = random_poly(rng, 2 * M->d, 2, 3, 3);
    return f;
}

PolyVec random_vec(std::mt19937_64& rng, const MFPtr& M) {
    PolyVec v(M->rank());
    for (auto& p : v) p = random_poly(rng, 2 * M->d, M->nvars(), 2, 2);
    return v;
}

}  // namespace

TEST_CASE("make_mf") {
    MFPtr I = perm(3, {0});
    CHECK(I->graded);
    CHECK(I->shift == std::vector<int>{0, 2 - 3});
    CHECK(perm(5, {0, 1, 2})->shift == std::vector<int>{-2, 6 - 5 - 2});
    PolyMatrix a(1, 1), b(1, 1);
    a(0, 0) = X - Y;
    b(0, 0) = X - Y;
    CHECK_THROWS_AS(make_mf(a, b, 0, 1, 2, "bad"), Error);
    MFPtr P = perm(4, {0, 1});
    MFPtr Q = make_mf(P->d0(), P->d1(), 0, 1, 4, "swapped");
    CHECK(Q->rank0 == 1);
}

TEST_CASE("tensor products") {
    MFPtr I = perm(3, {0});
    MFPtr II = mf_tensor(I, I);
    CHECK(II->rank0 == 2);
    CHECK(II->rank1 == 2);
    CHECK(II->inner_vars == std::vector<int>{1});
    MFPtr A = perm(4, {0, 1}), B = perm(4, {2});
    MFPtr AB = mf_tensor(A, B);
    CHECK(AB->rank0 == A->rank0 * B->rank0 + A->rank1 * B->rank1);
    CHECK(AB->potential() == pow(X, 4) - pow(MultiPoly::var(2), 4));
}

TEST_CASE("hom spaces of simple objects") {
    MFPtr I = perm(3, {0});
    auto hs = hom_space(I, I, 0);
    CHECK(hs.dimension() == 1);
    CHECK(hom_space(I, I, 1).dimension() == 0);
    MFPtr P = perm(4, {0, 1});
    CHECK(find_null_homotopy(mor_identity(P)).found == false);
    auto r = homotopy_equal(mor_identity(P), mor_scale(2, mor_identity(P)));
    CHECK_FALSE(r.equal);
    CHECK(scalar_ratio(mor_scale(3, mor_identity(P)), mor_identity(P)) == CycNumber(3));
}

TEST_CASE("fusion multiplicities in degree zero") {
    // P_{0;1} (x) P_{0;1} = P_{1;0} + P_{0;2} at d = 4
    MFPtr P01 = perm(4, {0, 1});
    MFPtr T = mf_tensor(P01, P01);
    std::map<std::pair<int, int>, std::size_t> seen;
    for (int m = 0; m < 4; ++m)
        for (int l = 0; l <= 2; ++l) {
            std::vector<int> S;
            for (int k = 0; k <= l; ++k) S.push_back((m + k) % 4);
            std::size_t dim = hom_space(perm(4, S), T, 0).dimension();
            if (dim) seen[{m, l}] = dim;
        }
    std::map<std::pair<int, int>, std::size_t> want{{{1, 0}, 1}, {{0, 2}, 1}};
    CHECK(seen == want);
}

TEST_CASE("fusion multiplicities d = 6") {
    // P_{0;2} (x) P_{0;2} = P_{2;0} + P_{1;2} + P_{0;4}
    MFPtr A = perm(6, {0, 1, 2});
    MFPtr T = mf_tensor(A, A);
    std::size_t total = 0;
    for (int m = 0; m < 6; ++m)
        for (int l = 0; l <= 4; ++l) {
            std::vector<int> S;
            for (int k = 0; k <= l; ++k) S.push_back((m + k) % 6);
            total += hom_space(perm(6, S), T, 0).dimension();
        }
    CHECK(total == 3);
}

TEST_CASE("delta on simple morphisms") {
    MFPtr P = perm(4, {0, 1});
    CHECK(delta(mor_identity(P)).is_zero());
    // the graded commutator of d with itself is 2*d^2
    Morphism dP{P, P, 1, P->D};
    CHECK(delta(dP).F == CycNumber(2) * (P->D * P->D));
    Morphism zero{P, P, 0, PolyMatrix(2, 2)};
    auto r = find_null_homotopy(zero);
    REQUIRE(r.found);
    CHECK(r.h->is_zero());
    CHECK(homotopy_equal(mor_identity(P), mor_identity(P)).equal);
    CHECK(scalar_ratio(zero, mor_identity(P)).is_zero());
    std::mt19937_64 rng(kSeed);
    Morphism open = random_mor(rng, P, P, 0);
    REQUIRE_FALSE(is_closed(open));
    CHECK_THROWS_AS(find_null_homotopy(open), Error);
}

TEST_CASE("hom spaces between simples are diagonal for d = 4") {
    std::vector<MFPtr> simples;
    for (int m = 0; m < 4; ++m)
        for (int l = 0; l <= 2; ++l) {
            std::vector<int> S;
            for (int k = 0; k <= l; ++k) S.push_back((m + k) % 4);
            simples.push_back(perm(4, S));
        }
    for (std::size_t a = 0; a < simples.size(); ++a)
        for (std::size_t b = 0; b < simples.size(); ++b)
            CHECK(hom_space(simples[a], simples[b], 0).dimension() == (a == b ? 1u : 0u));
}

TEST_CASE("property: delta squares to zero") {
    std::mt19937_64 rng(kSeed);
    for (int n = 0; n < 1000; ++n) {
        int d = 3 + n % 3;
        MFPtr M = random_perm(rng, d), N = random_perm(rng, d);
        Morphism f = random_mor(rng, M, N, n % 2);
        REQUIRE(delta(delta(f)).is_zero());
    }
}

TEST_CASE("property: delta is a graded derivation") {
    std::mt19937_64 rng(kSeed + 1);
    for (int n = 0; n < 1000; ++n) {
        int d = 3 + n % 3;
        MFPtr A = random_perm(rng, d), B = random_perm(rng, d), C = random_perm(rng, d);
        int pf = n % 2, pg = (n / 2) % 2;
        Morphism f = random_mor(rng, A, B, pf), g = random_mor(rng, B, C, pg);
        Morphism lhs = delta(mor_compose(g, f));
        Morphism rhs = mor_add(mor_compose(delta(g), f), mor_scale(pg ? -1 : 1, mor_compose(g, delta(f))));
        REQUIRE(lhs.F == rhs.F);
    }
}

TEST_CASE("property: Koszul interchange") {
    std::mt19937_64 rng(kSeed + 2);
    for (int n = 0; n < 1000; ++n) {
        int d = 3 + n % 2;
        MFPtr M = random_perm(rng, d), M2 = random_perm(rng, d), N = random_perm(rng, d), N2 = random_perm(rng, d);
        int pf = n % 2, pg = (n / 2) % 2;
        OpPtr f = op_matrix(random_mor(rng, M, M2, pf)), g = op_matrix(random_mor(rng, N, N2, pg));
        OpPtr a = op_compose(op_tensor_left(f, N2), op_tensor_right(M, g));
        OpPtr b = op_compose(op_tensor_right(M2, g), op_tensor_left(f, N));
        PolyVec v = random_vec(rng, a->src());
        PolyVec x = a->apply(v), y = b->apply(v);
        CycNumber sign = pf && pg ? -1 : 1;
        for (auto& p : y) p *= sign;
        REQUIRE(x == y);
    }
}

TEST_CASE("property: tensor of closed morphisms is closed") {
    std::mt19937_64 rng(kSeed + 3);
    for (int n = 0; n < 1000; ++n) {
        int d = 3 + n % 2;
        MFPtr M = random_perm(rng, d), N = random_perm(rng, d);
        OpPtr f = n % 2 ? op_identity(M) : op_matrix(delta(random_mor(rng, M, M, 0)));
        OpPtr g = op_matrix(delta(random_mor(rng, N, N, n % 4 < 2)));
        OpPtr fg = op_tensor(f, g);
        PolyVec v = random_vec(rng, fg->src());
        for (auto& p : op_delta(fg)->apply(v)) REQUIRE(p.is_zero());
    }
}

TEST_CASE("property: sparse echelon agrees with dense rank") {
    std::mt19937_64 rng(kSeed + 4);
    for (int n = 0; n < 1000; ++n) {
        std::uniform_int_distribution<int> dim(1, 6), coin(0, 2);
        std::size_t rows = dim(rng), cols = dim(rng);
        CycMatrix A(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (coin(rng) == 0) A(r, c) = random_cyc(rng, 8, 2);
        if (n % 3 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c) A(rows - 1, c) = A(0, c) * CycNumber(2);
        Echelon e, rev;
        for (std::size_t r = 0; r < rows; ++r) {
            SparseVec v, w;
            for (std::size_t c = 0; c < cols; ++c)
                if (!A(r, c).is_zero()) v.emplace_back(c, A(r, c));
            for (std::size_t c = cols; c-- > 0;)
                if (!A(r, c).is_zero()) w.emplace_back(cols - 1 - c, A(r, c));
            e.insert(v);
            rev.insert(w);
        }
        REQUIRE(e.rank() == rank(A));
        REQUIRE(rev.rank() == e.rank());
    }
}
