#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mfcat/error.hpp"

namespace mfcat {

// Element of Q(zeta_n), stored in the power basis of Q[t]/(Phi_n(t)).
// order 0 marks a plain rational that adapts to whichever field it meets.
class CycNumber {
public:
    static constexpr int kMaxPhi = 8;

    CycNumber() = default;
    CycNumber(long v);  // NOLINT: implicit on purpose, used for 0/1/-1 literals
    CycNumber(int v) : CycNumber(static_cast<long>(v)) {}
    static CycNumber rational(const mpq_class& q);
    static CycNumber from_coeffs(int order, const std::vector<mpq_class>& coeffs);

    int order() const { return order_; }
    int phi() const;
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    std::vector<mpq_class> coeffs() const;  // length phi(order), or 1 for order 0
    mpq_class coeff(int i) const;
    CycNumber with_order(int order) const;

    CycNumber operator-() const;
    CycNumber inverse() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber& operator/=(const CycNumber& o);
    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
    friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    // a -= b*c without building the temporary twice
    void sub_mul(const CycNumber& b, const CycNumber& c);

    std::size_t hash() const;
    std::string str() const;                   // human readable, in powers of zeta
    std::vector<std::string> coeff_strings() const;  // "p/q" per basis coordinate

private:
    struct Big {
        std::vector<mpz_class> num;
        mpz_class den;
    };

    void set_big(std::vector<mpz_class> num, mpz_class den);
    void load_big(std::vector<mpz_class>& num, mpz_class& den, int order) const;
    static int join_order(const CycNumber& a, const CycNumber& b);

    uint16_t order_ = 0;
    int64_t den_ = 1;
    std::array<int64_t, kMaxPhi> num_{};
    std::shared_ptr<const Big> big_;

    friend struct CycKernel;
};

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_poly(int n);
// zeta_order^power; throws invalid-order for order < 2 or phi(order) > kMaxPhi.
CycNumber root_of_unity(int order, long power);
// [n]_zeta with zeta = zeta_{2d}; negative n allowed ([−n] = −[n]).
CycNumber quantum_int(int d, long n);
std::complex<double> complex_embed(const CycNumber& a, int order = 0);
// Complex conjugate: zeta -> zeta^{-1}.
CycNumber conjugate(const CycNumber& a);

class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static CycMatrix identity(std::size_t n);
    static CycMatrix column(const std::vector<CycNumber>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CycNumber& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const CycNumber& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    const std::vector<CycNumber>& entries() const { return e_; }

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    bool operator==(const CycMatrix& o) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycNumber> e_;
};

// Column-major first-nonzero pivoting; results are verified by substitution.
std::optional<CycMatrix> solve_linear(const CycMatrix& A, const CycMatrix& b);
std::vector<CycMatrix> kernel_basis(const CycMatrix& A);
std::size_t rank(const CycMatrix& A);

struct CycHash {
    std::size_t operator()(const CycNumber& a) const { return a.hash(); }
};

}  // namespace mfcat
