#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mfcat/cyclofield.hpp"

namespace mfcat {

// Variables are positions 0..kMaxVars-1, printed as x y z w u v s t.
inline constexpr int kMaxVars = 8;
inline constexpr int kNegInfDegree = -1000000;

const char* var_name(int v);

// Exponent vector packed 8 bits per variable, variable 0 in the low byte.
using Monomial = uint64_t;

inline int mono_exp(Monomial m, int v) { return static_cast<int>((m >> (8 * v)) & 0xff); }
inline Monomial mono_var(int v, int e = 1) { return static_cast<Monomial>(e) << (8 * v); }
int mono_degree(Monomial m);
Monomial mono_from(const std::vector<int>& exps);
// All monomials of total degree deg in the given variables, in increasing key order.
std::vector<Monomial> monomials_of_degree(const std::vector<int>& vars, int deg);

class MultiPoly {
public:
    using Term = std::pair<Monomial, CycNumber>;

    MultiPoly() = default;
    MultiPoly(const CycNumber& c);  // NOLINT: constants promote implicitly
    MultiPoly(long c) : MultiPoly(CycNumber(c)) {}
    MultiPoly(int c) : MultiPoly(CycNumber(static_cast<long>(c))) {}
    static MultiPoly var(int v);
    static MultiPoly monomial(Monomial m, const CycNumber& c);
    // Takes ownership; sorts and merges duplicates, drops zeros.
    static MultiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;
    int min_degree() const;
    int degree_in(int v) const;
    bool is_homogeneous() const;
    uint32_t var_mask() const;
    CycNumber coeff(Monomial m) const;
    CycNumber constant_term() const { return coeff(0); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const CycNumber& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const CycNumber& c) { return a *= c; }
    friend MultiPoly operator*(const CycNumber& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // this += c * m * p, the inner loop of every linear map
    void add_scaled(const MultiPoly& p, const CycNumber& c, Monomial m = 0);

    std::string str() const;

private:
    std::vector<Term> terms_;  // sorted by monomial key, no zero coefficients
};

MultiPoly pow(const MultiPoly& p, int e);
MultiPoly graded_component(const MultiPoly& p, int k);
MultiPoly substitute(const MultiPoly& p, int v, const MultiPoly& q);
// x_v -> eta^{a_v} x_v with eta = zeta_{2d}^2.
MultiPoly scale_vars(const MultiPoly& p, const std::map<int, long>& scales, int d);

// Each variable v goes to coef[v] * x_{target[v]}, or to 0 when target[v] < 0.
struct VarMap {
    std::array<int8_t, kMaxVars> target;
    std::array<CycNumber, kMaxVars> coef;
    VarMap();
    static VarMap identity();
    VarMap& set(int v, int t, const CycNumber& c = CycNumber(1));
    VarMap& kill(int v);
    bool operator==(const VarMap& o) const;
};
MultiPoly apply_varmap(const MultiPoly& p, const VarMap& m);

// Exact quotient p / q; throws precondition-violated if q does not divide p.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q);
// Remainder of p modulo D, D monic in v.
MultiPoly rem_monic(const MultiPoly& p, const MultiPoly& D, int v);
// Coefficient of x_v^k, as a polynomial in the other variables.
MultiPoly coeff_in(const MultiPoly& p, int v, int k);

}  // namespace mfcat
