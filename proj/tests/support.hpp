#pragma once

#include <random>

#include "mfcat/cyclofield.hpp"

namespace mfcat::testing {

inline constexpr unsigned kSeed = 20240917;

inline CycNumber random_cyc(std::mt19937_64& rng, int order, int range = 5, bool allow_den = true) {
    std::uniform_int_distribution<int> num(-range, range), den(1, allow_den ? 4 : 1);
    int phi = euler_phi(order);
    std::vector<mpq_class> c(phi);
    for (auto& x : c) {
        x = mpq_class(num(rng), den(rng));
        x.canonicalize();
    }
    return CycNumber::from_coeffs(order, c);
}

}  // namespace mfcat::testing

#include "mfcat/polyring.hpp"

namespace mfcat::testing {

inline MultiPoly random_poly(std::mt19937_64& rng, int order, int nvars, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> var(0, nvars - 1), deg(0, maxdeg);
    std::vector<MultiPoly::Term> terms;
    for (int i = 0; i < nterms; ++i) {
        int target = deg(rng);
        std::vector<int> e(nvars, 0);
        for (int k = 0; k < target; ++k) ++e[var(rng)];
        terms.emplace_back(mono_from(e), random_cyc(rng, order, 3, false));
    }
    return MultiPoly::from_terms(std::move(terms));
}

inline CycNumber eta(int d, long k) { return root_of_unity(2 * d, 2 * k); }

}  // namespace mfcat::testing
