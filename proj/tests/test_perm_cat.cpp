#include <doctest.h>

#include <algorithm>
#include <random>

#include "mfcat/perm_cat.hpp"
#include "support.hpp"

using namespace mfcat;
using mfcat::testing::kSeed;
using mfcat::testing::random_poly;

namespace {

PolyVec random_vec(std::mt19937_64& rng, const MFPtr& M) {
    PolyVec v(M->rank());
    for (auto& p : v) p = random_poly(rng, 2 * M->d, M->nvars(), 3, 3);
    return v;
}

bool is_identity_on(std::mt19937_64& rng, const OpPtr& f, int trials = 5) {
    for (int i = 0; i < trials; ++i) {
        PolyVec v = random_vec(rng, f->src());
        if (f->apply(v) != v) return false;
    }
    return true;
}

bool homotopic_to_id(const OpPtr& f) {
    return homotopy_equal(materialize(f), mor_identity(f->tgt())).equal;
}

}  // namespace

TEST_CASE("permutation objects") {
    PermCategory C(4);
    CHECK(C.labels().size() == 12);
    CHECK_THROWS_AS(C.label(0, 3), Error);
    CHECK_THROWS_AS(C.label(0, -1), Error);
    CHECK(C.label(-1, 1) == PermLabel{3, 1});
    CHECK(C.dual({1, 1}) == PermLabel{2, 1});
    MFPtr P = C.object({1, 1});
    CHECK(P->shift == std::vector<int>{-1, 2 * 2 - 4 - 1});
    MultiPoly X = MultiPoly::var(0), Y = MultiPoly::var(1);
    CHECK(P->D(0, 1) == (X - C.eta(1) * Y) * (X - C.eta(2) * Y));
    CHECK(C.object({1, 1}) == P);
    CHECK(C.unit()->D(0, 1) == X - Y);
}

TEST_CASE("twisted representatives") {
    for (int d : {3, 4, 5}) {
        PermCategory C(d);
        for (auto& s : C.labels())
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    auto lhs = C.twist(s, a, b)->D(0, 1);
                    auto rhs = C.eta(static_cast<long>(s.l + 1) * a) * C.object(C.shifted(s, -a - b))->D(0, 1);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("s isomorphisms are closed and additive") {
    PermCategory C(4);
    for (auto& s : C.labels())
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                Morphism f = C.s_iso(s, a, b);
                REQUIRE(is_closed(f));
                for (int a2 = 0; a2 < 4; ++a2) {
                    Morphism outer = C.s_iso(s, a2, 0);
                    Morphism inner = C.s_iso(C.shifted(s, -a2), a, b);
                    CHECK((outer.F * inner.F) == C.s_iso(s, a + a2, b).F);
                }
            }
}

TEST_CASE("unitors and their inverses") {
    std::mt19937_64 rng(kSeed);
    PermCategory C(4);
    std::vector<MFPtr> objs{C.object({0, 0}), C.object({1, 1}), C.object({3, 2}),
                            mf_tensor(C.object({1, 1}), C.object({2, 0}))};
    for (auto& M : objs) {
        CHECK(is_closed_bounded(C.unitor_left(M), 3));
        CHECK(is_closed_bounded(C.unitor_right(M), 3));
        CHECK(is_closed_bounded(C.unitor_left_inv(M), 3));
        CHECK(is_closed_bounded(C.unitor_right_inv(M), 3));
        CHECK(is_identity_on(rng, op_compose(C.unitor_left(M), C.unitor_left_inv(M))));
        CHECK(is_identity_on(rng, op_compose(C.unitor_right(M), C.unitor_right_inv(M))));
    }
}

TEST_CASE("psi maps") {
    PermCategory C(4);
    for (auto& s : C.labels())
        for (int a = 0; a < 4; ++a) {
            CHECK(is_closed_bounded(C.psi_left(a, s), 3));
            CHECK(is_closed_bounded(C.psi_right(s, a), 3));
            CHECK(homotopic_to_id(op_compose(C.psi_left(a, s), op_matrix(C.psi_left_inv(a, s)))));
            CHECK(homotopic_to_id(op_compose(C.psi_right(s, a), op_matrix(C.psi_right_inv(s, a)))));
        }
}

TEST_CASE("evaluation and coevaluation") {
    for (int d : {3, 4, 5}) {
        PermCategory C(d);
        for (auto& s : C.labels()) {
            CHECK_NOTHROW(C.coev(s));
            CHECK(is_closed_bounded(C.ev(s), 3));
        }
    }
}

TEST_CASE("snake identities") {
    for (int d : {3, 4}) {
        PermCategory C(d);
        for (auto& s : C.labels()) {
            MFPtr P = C.object(s), Q = C.object(C.dual(s));
            OpPtr cv = op_matrix(C.coev(s));
            // Q -> Q I -> Q (P Q) -> (Q P) Q -> I Q -> Q
            OpPtr a = op_tensor_right(Q, cv);
            OpPtr b = op_tensor_left(C.ev(s), Q);
            OpPtr snake1 = op_compose({C.unitor_left(Q), b, op_reassociate(a->tgt(), b->src()), a, C.unitor_right_inv(Q)});
            CHECK_MESSAGE(homotopic_to_id(snake1), s.str());
            // P -> I P -> (P Q) P -> P (Q P) -> P I -> P
            OpPtr c = op_tensor_left(cv, P);
            OpPtr e = op_tensor_right(P, C.ev(s));
            OpPtr snake2 = op_compose({C.unitor_right(P), e, op_reassociate(c->tgt(), e->src()), c, C.unitor_left_inv(P)});
            CHECK_MESSAGE(homotopic_to_id(snake2), s.str());
        }
    }
}

TEST_CASE("quantum dimensions") {
    for (int d : {3, 4, 5}) {
        PermCategory C(d);
        for (int m = 0; m < d; ++m) {
            CHECK(C.qdim_left({m, 0}) == 1);
            CHECK(C.qdim_left({m, 1}) == -(C.eta(-m) + C.eta(-m - 1)));
        }
        for (auto& s : C.labels()) CHECK(C.qdim_spherical(s) == quantum_int(d, s.l + 1));
    }
}

TEST_CASE("fusion channels split the tensor product") {
    for (int d : {3, 4}) {
        PermCategory C(d);
        for (auto& a : C.labels())
            for (auto& b : C.labels()) {
                auto chans = C.fusion_decompose(a, b);
                std::vector<PermLabel> got, want = C.fusion_rule(a, b);
                for (auto& ch : chans) got.push_back(ch.summand);
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                REQUIRE(got == want);
                for (std::size_t i = 0; i < chans.size(); ++i) {
                    CHECK(is_closed(chans[i].inclusion));
                    OpPtr incl = op_matrix(chans[i].inclusion);
                    for (std::size_t j = 0; j < chans.size(); ++j) {
                        Morphism pi = materialize(op_compose(chans[j].projection, incl));
                        if (i == j) CHECK(homotopy_equal(pi, mor_identity(C.object(chans[i].summand))).equal);
                        else CHECK(find_null_homotopy(pi).found);
                    }
                }
            }
    }
}
