#include <doctest.h>

#include <cmath>
#include <random>

#include "mfcat/cyclofield.hpp"
#include "support.hpp"

using namespace mfcat;
using mfcat::testing::random_cyc;

namespace {

// Q[t] polynomials as mpq vectors, lowest degree first.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        size_t s = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        q[s] = c;
        for (size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
        trim(a);
    }
    r = a;
}

// Inverse of a modulo m by the extended Euclidean algorithm.
QPoly ext_euclid_inverse(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a, s0, s1 = {1};
    while (!(r1.size() == 1)) {
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    for (auto& c : s1) c /= r1[0];
    QPoly q, r;
    qdivmod(s1, m, q, r);
    return r;
}

// Rank by row-major elimination choosing the last nonzero row as pivot.
size_t oracle_rank(CycMatrix M) {
    size_t rank = 0;
    std::vector<bool> used(M.rows(), false);
    for (size_t c = M.cols(); c-- > 0;) {
        size_t p = M.rows();
        for (size_t r = M.rows(); r-- > 0;)
            if (!used[r] && !M(r, c).is_zero()) {
                p = r;
                break;
            }
        if (p == M.rows()) continue;
        used[p] = true;
        ++rank;
        for (size_t r = 0; r < M.rows(); ++r) {
            if (used[r] || M(r, c).is_zero()) continue;
            CycNumber f = M(r, c) / M(p, c);
            for (size_t k = 0; k < M.cols(); ++k) M(r, k).sub_mul(f, M(p, k));
        }
    }
    return rank;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(8) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_poly(10) == std::vector<long>{1, -1, 1, -1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(14) == 6);
    CHECK_THROWS_AS(root_of_unity(1, 0), Error);
    CHECK_THROWS_AS(root_of_unity(22, 1), Error);
}

TEST_CASE("root_of_unity") {
    CHECK(root_of_unity(8, 4) == CycNumber(-1));
    CHECK(root_of_unity(8, 2) * root_of_unity(8, 2) == root_of_unity(8, 4));
    CHECK(root_of_unity(8, -3) == root_of_unity(8, 5));
    auto c = complex_embed(root_of_unity(10, 1) + root_of_unity(10, -1));
    CHECK(c.real() == doctest::Approx(2 * std::cos(M_PI / 5)).epsilon(1e-12));
    CHECK(c.real() == doctest::Approx(1.6180339887).epsilon(1e-10));
    CHECK(std::abs(c.imag()) < 1e-12);
    for (int d = 2; d <= 8; ++d) {
        CHECK(root_of_unity(2 * d, d) == CycNumber(-1));
        CHECK(root_of_unity(2 * d, 2 * d) == CycNumber(1));
    }
}

TEST_CASE("field operations") {
    CycNumber z = root_of_unity(8, 1);
    CHECK(z + CycNumber(0) == z);
    CHECK(z * root_of_unity(8, 7) == CycNumber(1));
    CHECK_THROWS_AS(CycNumber(1) / CycNumber(0), Error);
    CHECK_THROWS_AS(root_of_unity(8, 1) + root_of_unity(10, 1), Error);

    // (1+eta)^{-1} for d = 5 against the extended Euclidean algorithm in Q[t]/(Phi_10)
    CycNumber a = CycNumber(1) + root_of_unity(10, 2);
    CHECK(a * a.inverse() == CycNumber(1));
    QPoly m;
    for (long c : cyclotomic_poly(10)) m.push_back(c);
    QPoly inv = ext_euclid_inverse({1, 0, 1}, m);
    inv.resize(4);
    CHECK(a.inverse().coeffs() == inv);
    CHECK(a.inverse().coeff_strings() == std::vector<std::string>{"0/1", "1/1", "-1/1", "0/1"});
}

TEST_CASE("quantum integers") {
    for (int d = 2; d <= 8; ++d) {
        CHECK(quantum_int(d, 0).is_zero());
        CHECK(quantum_int(d, 1) == CycNumber(1));
        CHECK(quantum_int(d, 2) == root_of_unity(2 * d, 1) + root_of_unity(2 * d, -1));
        CHECK(quantum_int(d, d).is_zero());
        for (int n = 1; n < 3 * d; ++n)
            CHECK(quantum_int(d, n + 1) == quantum_int(d, 2) * quantum_int(d, n) - quantum_int(d, n - 1));
    }
    auto e = complex_embed(quantum_int(6, 2));
    CHECK(e.real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(complex_embed(CycNumber(1)) == std::complex<double>(1.0, 0.0));
    CHECK(complex_embed(root_of_unity(12, 6)).real() == doctest::Approx(-1.0));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(mfcat::testing::kSeed);
    for (int it = 0; it < 1000; ++it) {
        int order = std::vector<int>{4, 6, 8, 10, 12, 14, 16}[it % 7];
        CycNumber a = random_cyc(rng, order), b = random_cyc(rng, order), c = random_cyc(rng, order);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    for (int d = 2; d <= 8; ++d)
        for (int k = -2 * d; k <= 2 * d; ++k)
            CHECK(root_of_unity(2 * d, 2L * (k + d) * (k + d)) == root_of_unity(2 * d, 2L * k * k));
}

TEST_CASE("big integer fallback round-trips") {
    CycNumber z = root_of_unity(10, 1);
    CycNumber big = CycNumber(3) + z;
    for (int i = 0; i < 60; ++i) big *= CycNumber(1000003) + z;
    CycNumber back = big;
    for (int i = 0; i < 60; ++i) back /= CycNumber(1000003) + z;
    CHECK(back == CycNumber(3) + z);
    CHECK(big - big == CycNumber(0));
}

TEST_CASE("linear algebra") {
    SUBCASE("identity") {
        CycMatrix b = CycMatrix::column({1, root_of_unity(8, 1), 7});
        auto x = solve_linear(CycMatrix::identity(3), b);
        REQUIRE(x);
        CHECK(*x == b);
    }
    SUBCASE("zero matrix") {
        CycMatrix A(2, 2);
        CHECK(kernel_basis(A).size() == 2);
        auto x = solve_linear(A, CycMatrix(2, 1));
        CHECK(x);
    }
    SUBCASE("inconsistent") {
        CycMatrix A(2, 1);
        A(0, 0) = 1;
        A(1, 0) = 1;
        CycMatrix b = CycMatrix::column({1, 2});
        CHECK_FALSE(solve_linear(A, b));
    }
    SUBCASE("random systems over Q(zeta_8)") {
        std::mt19937_64 rng(mfcat::testing::kSeed + 1);
        for (int it = 0; it < 40; ++it) {
            CycMatrix A(5, 7);
            std::uniform_int_distribution<int> sparse(0, 2);
            for (size_t r = 0; r < 5; ++r)
                for (size_t c = 0; c < 7; ++c)
                    if (sparse(rng) != 0) A(r, c) = random_cyc(rng, 8, 3);
            // force rank deficiency on some draws
            if (it % 3 == 0)
                for (size_t c = 0; c < 7; ++c) A(4, c) = A(0, c) + root_of_unity(8, 3) * A(1, c);
            auto ker = kernel_basis(A);
            size_t r = rank(A);
            CHECK(r + ker.size() == 7);
            CHECK(r == oracle_rank(A));
            for (auto& v : ker) CHECK((A * v).is_zero());
            if (!ker.empty()) {
                CycMatrix K(7, ker.size());
                for (size_t j = 0; j < ker.size(); ++j)
                    for (size_t i = 0; i < 7; ++i) K(i, j) = ker[j](i, 0);
                CHECK(rank(K) == ker.size());
            }
            CycMatrix x0(7, 1);
            for (size_t i = 0; i < 7; ++i) x0(i, 0) = random_cyc(rng, 8, 3);
            CycMatrix b = A * x0;
            auto x = solve_linear(A, b);
            REQUIRE(x);
            CHECK(A * *x == b);
        }
    }
}

TEST_CASE("complex conjugation") {
    for (int n : {3, 4, 8, 10, 12}) {
        CycNumber z = root_of_unity(n, 1);
        CHECK(conjugate(z) == z.inverse());
        CHECK(conjugate(conjugate(z)) == z);
    }
    CHECK(conjugate(CycNumber(7)) == CycNumber(7));
    std::mt19937_64 rng(mfcat::testing::kSeed + 3);
    for (int it = 0; it < 200; ++it) {
        int order = std::vector<int>{6, 8, 10, 12}[it % 4];
        CycNumber a = random_cyc(rng, order), b = random_cyc(rng, order);
        CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
        CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
        auto ea = complex_embed(a), ec = complex_embed(conjugate(a));
        CHECK(ec.real() == doctest::Approx(ea.real()).epsilon(1e-9));
        CHECK(ec.imag() == doctest::Approx(-ea.imag()).epsilon(1e-9));
    }
}
