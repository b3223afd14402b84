#include <doctest.h>

#include <random>

#include "mfcat/polyring.hpp"
#include "support.hpp"

using namespace mfcat;
using mfcat::testing::eta;
using mfcat::testing::random_poly;

namespace {

const MultiPoly X = MultiPoly::var(0), Y = MultiPoly::var(1), Z = MultiPoly::var(2);

}  // namespace

TEST_CASE("polynomial arithmetic") {
    MultiPoly p = X * X * Y + 3;
    CHECK(p + MultiPoly() == p);
    CHECK((X - Y) * (X + Y) == X * X - Y * Y);
    MultiPoly prod(1);
    for (int j = 0; j < 4; ++j) prod *= X - eta(4, j) * Y;
    CHECK(prod == pow(X, 4) - pow(Y, 4));
    CHECK(MultiPoly().total_degree() == kNegInfDegree);
    CHECK((X * Y * Y).total_degree() == 3);
    CHECK((X * Y + Z).str() == "x*y + z");
}

TEST_CASE("scale_vars") {
    CHECK(scale_vars(X * X, {{0, 4}}, 4) == X * X);
    MultiPoly f = X * X * Y - Z;
    CHECK(scale_vars(f, {{0, 0}}, 5) == f);
    // d_1 of S = {0,1} at d = 5, twisted by a = 1, b = 2, against the direct expansion
    const int d = 5, a = 1, b = 2;
    MultiPoly d1(1), expected(1), direct(1);
    for (int j : {0, 1}) {
        d1 *= X - eta(d, j) * Y;
        expected *= X - eta(d, j + a + b) * Y;
        direct *= eta(d, -a) * X - eta(d, j + b) * Y;
    }
    CHECK(scale_vars(d1, {{0, -a}, {1, b}}, d) == direct);
    CHECK(direct == eta(d, -2 * a) * expected);
}

TEST_CASE("graded components and substitution") {
    MultiPoly p = X * X * Y + pow(Y, 3) + X;
    CHECK(graded_component(p, 3) == X * X * Y + pow(Y, 3));
    CHECK(graded_component(MultiPoly(), 2).is_zero());
    CHECK(substitute(X - Y, 1, X).is_zero());
    CHECK(substitute(X * X + Y * Z, 1, eta(5, 1) * X) == X * X + eta(5, 1) * X * Z);
    std::mt19937_64 rng(mfcat::testing::kSeed + 2);
    for (int it = 0; it < 200; ++it) {
        MultiPoly q = random_poly(rng, 10, 3, 6, 8);
        MultiPoly sum;
        for (int k = 0; k <= 6; ++k) sum += graded_component(q, k);
        CHECK(sum == q);
    }
}

TEST_CASE("exact division and monic remainder") {
    MultiPoly f = pow(X, 5) - pow(Z, 5);
    MultiPoly q = divide_exact(f, X - Z);
    CHECK(q * (X - Z) == f);
    CHECK_THROWS_AS(divide_exact(X * X + 1, X - Z), Error);
    MultiPoly D = (Y - X) * (Y - eta(5, 1) * X);
    MultiPoly r = rem_monic(pow(Y, 4) + X * Y, D, 1);
    CHECK(r.degree_in(1) <= 1);
    CHECK(divide_exact(pow(Y, 4) + X * Y - r, D) * D == pow(Y, 4) + X * Y - r);
    CHECK(coeff_in(X * Y * Y + Z * Y * Y + X, 1, 2) == X + Z);
}

TEST_CASE("varmap") {
    VarMap m;
    m.set(1, 0, eta(4, 1)).kill(2);
    CHECK(apply_varmap(X * Y + Z + Y * Y, m) == eta(4, 1) * X * X + eta(4, 2) * X * X);
}

TEST_CASE("scale_vars properties") {
    std::mt19937_64 rng(mfcat::testing::kSeed + 3);
    for (int it = 0; it < 1000; ++it) {
        const int d = 3 + it % 4;
        MultiPoly p = random_poly(rng, 2 * d, 3, 4, 4), q = random_poly(rng, 2 * d, 3, 4, 4);
        std::uniform_int_distribution<int> amt(-2 * d, 2 * d);
        std::map<int, long> s1{{0, amt(rng)}, {1, amt(rng)}, {2, amt(rng)}};
        std::map<int, long> s2{{0, amt(rng)}, {2, amt(rng)}};
        CHECK(scale_vars(p * q, s1, d) == scale_vars(p, s1, d) * scale_vars(q, s1, d));
        std::map<int, long> sum = s1;
        for (auto& [v, a] : s2) sum[v] += a;
        CHECK(scale_vars(scale_vars(p, s1, d), s2, d) == scale_vars(p, sum, d));
        int k = it % 5;
        MultiPoly h = graded_component(p, k);
        long a = amt(rng);
        CHECK(scale_vars(h, {{0, a}, {1, a}, {2, a}}, d) == eta(d, a * k) * h);
        MultiPoly lhs = graded_component(p * q, k), rhs;
        for (int j = 0; j <= k; ++j) rhs += graded_component(p, j) * graded_component(q, k - j);
        CHECK(lhs == rhs);
    }
}
