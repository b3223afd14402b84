#include "mfcat/cyclofield.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mfcat {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidOrder: return "invalid-order";
        case ErrorKind::DivByZero: return "div-by-zero";
        case ErrorKind::OrderMismatch: return "order-mismatch";
        case ErrorKind::ShapeMismatch: return "shape-mismatch";
        case ErrorKind::NotAFactorisation: return "not-a-factorisation";
        case ErrorKind::VariableMismatch: return "variable-mismatch";
        case ErrorKind::ParityMismatch: return "parity-mismatch";
        case ErrorKind::PreconditionViolated: return "precondition-violated";
        case ErrorKind::UnstableDimension: return "unstable-dimension";
        case ErrorKind::NotProportional: return "not-proportional";
        case ErrorKind::AmbiguousDimension: return "hom-space-dimension>1";
        case ErrorKind::InvalidLabel: return "invalid-label";
        case ErrorKind::ChargeMismatch: return "charge-mismatch";
        case ErrorKind::NotNegligible: return "not-negligible";
        case ErrorKind::Cancelled: return "cancelled";
        case ErrorKind::QuantumZero: return "quantum-zero";
        case ErrorKind::AssociativityViolation: return "associativity-violation";
    }
    return "error";
}

using i128 = __int128;
using u128 = unsigned __int128;

namespace {

constexpr int kMaxOrder = 64;

struct FieldTable {
    int order = 0;
    int phi = 0;
    // red[k] = t^k mod Phi_order, for 0 <= k < max(order, 2*phi - 1)
    std::vector<std::array<int64_t, CycNumber::kMaxPhi>> red;
};

std::vector<long> poly_divexact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic
    int dn = static_cast<int>(den.size()) - 1;
    int nn = static_cast<int>(num.size()) - 1;
    std::vector<long> q(nn - dn + 1, 0);
    for (int i = nn - dn; i >= 0; --i) {
        long c = num[i + dn];
        q[i] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) num[i + j] -= c * den[j];
    }
    return q;
}

const FieldTable& field_table(int order) {
    static std::array<std::once_flag, kMaxOrder + 1> flags;
    static std::array<FieldTable, kMaxOrder + 1> tables;
    if (order < 2 || order > kMaxOrder)
        throw Error(ErrorKind::InvalidOrder, "order " + std::to_string(order) + " outside [2," + std::to_string(kMaxOrder) + "]");
    std::call_once(flags[order], [order] {
        FieldTable& t = tables[order];
        t.order = order;
        std::vector<long> phi = cyclotomic_poly(order);
        t.phi = static_cast<int>(phi.size()) - 1;
        if (t.phi > CycNumber::kMaxPhi) return;
        int n = std::max(order, 2 * t.phi - 1);
        t.red.assign(n, {});
        std::vector<long> cur(t.phi, 0);
        cur[0] = 1;
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < t.phi; ++i) t.red[k][i] = cur[i];
            // multiply by t, reduce with monic Phi
            long top = cur[t.phi - 1];
            for (int i = t.phi - 1; i > 0; --i) cur[i] = cur[i - 1] - top * phi[i];
            cur[0] = -top * phi[0];
        }
    });
    const FieldTable& t = tables[order];
    if (t.phi > CycNumber::kMaxPhi)
        throw Error(ErrorKind::InvalidOrder, "phi(" + std::to_string(order) + ") exceeds supported degree");
    return t;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        if (a <= UINT64_MAX && b <= UINT64_MAX) return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
        u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits64(const mpz_class& v) {
    return v.fits_slong_p() && v != mpz_class(LONG_MIN);
}

constexpr i128 kLim = static_cast<i128>(INT64_MAX);

}  // namespace

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<long> cyclotomic_poly(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "cyclotomic index must be positive");
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int k = 1; k < n; ++k)
        if (n % k == 0) p = poly_divexact(p, cyclotomic_poly(k));
    return p;
}

// Internal arithmetic kernels; friends of CycNumber.
struct CycKernel {
    static int phi_of(int order) { return order == 0 ? 1 : field_table(order).phi; }

    // Normalise an int128 numerator vector over den > 0; returns false on int64 overflow.
    // den > 0
    static bool assign_small(CycNumber& r, int order, const i128* num, int phi, i128 den) {
        u128 g = static_cast<u128>(den);
        bool zero = true;
        for (int i = 0; i < phi && g != 1; ++i)
            if (num[i] != 0) {
                g = gcd128(g, uabs(num[i]));
                zero = false;
            }
        if (zero) {
            for (int i = 0; i < phi; ++i)
                if (num[i] != 0) zero = false;
        }
        r.order_ = static_cast<uint16_t>(order);
        r.big_.reset();
        r.num_.fill(0);
        if (zero) {
            r.den_ = 1;
            return true;
        }
        i128 gi = static_cast<i128>(g);
        i128 d = den / gi;
        if (d > kLim) return false;
        for (int i = 0; i < phi; ++i) {
            i128 v = num[i] / gi;
            if (v > kLim || v < -kLim) return false;
            r.num_[i] = static_cast<int64_t>(v);
        }
        r.den_ = static_cast<int64_t>(d);
        return true;
    }

    static void assign_big_from_i128(CycNumber& r, int order, const i128* num, int phi, i128 den) {
        std::vector<mpz_class> n(phi);
        for (int i = 0; i < phi; ++i) n[i] = mpz_from_i128(num[i]);
        r.order_ = static_cast<uint16_t>(order);
        r.set_big(std::move(n), mpz_from_i128(den));
    }

    static void add(CycNumber& a, const CycNumber& b, bool negate_b) {
        int order = CycNumber::join_order(a, b);
        int phi = phi_of(order);
        if (!a.big_ && !b.big_) {
            i128 num[CycNumber::kMaxPhi];
            i128 den;
            if (a.den_ == b.den_) {
                den = a.den_;
                for (int i = 0; i < phi; ++i) num[i] = negate_b ? i128(a.num_[i]) - b.num_[i] : i128(a.num_[i]) + b.num_[i];
                if (den == 1) {
                    bool ok = true;
                    for (int i = 0; i < phi; ++i) {
                        if (num[i] > kLim || num[i] < -kLim) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        for (int i = 0; i < phi; ++i) a.num_[i] = static_cast<int64_t>(num[i]);
                        a.order_ = static_cast<uint16_t>(order);
                        return;
                    }
                }
            } else {
                int64_t g = std::gcd(a.den_, b.den_);
                i128 fa = b.den_ / g, fb = a.den_ / g;
                den = i128(a.den_) * fa;
                for (int i = 0; i < phi; ++i) {
                    i128 x = i128(a.num_[i]) * fa, y = i128(b.num_[i]) * fb;
                    num[i] = negate_b ? x - y : x + y;
                }
            }
            if (!assign_small(a, order, num, phi, den)) assign_big_from_i128(a, order, num, phi, den);
            return;
        }
        std::vector<mpz_class> na, nb;
        mpz_class da, db;
        a.load_big(na, da, order);
        b.load_big(nb, db, order);
        std::vector<mpz_class> n(phi);
        for (int i = 0; i < phi; ++i) n[i] = negate_b ? mpz_class(na[i] * db - nb[i] * da) : mpz_class(na[i] * db + nb[i] * da);
        a.order_ = static_cast<uint16_t>(order);
        a.set_big(std::move(n), da * db);
    }

    static void mul(CycNumber& a, const CycNumber& b) {
        int order = CycNumber::join_order(a, b);
        if (order == 0 || a.is_rational() || b.is_rational()) {
            scalar_mul(a, b, order);
            return;
        }
        const FieldTable& t = field_table(order);
        int phi = t.phi;
        if (!a.big_ && !b.big_) {
            i128 c[2 * CycNumber::kMaxPhi];
            bool ok = true;
            for (int k = 0; k < 2 * phi - 1; ++k) c[k] = 0;
            for (int i = 0; i < phi && ok; ++i) {
                if (a.num_[i] == 0) continue;
                for (int j = 0; j < phi; ++j) {
                    if (b.num_[j] == 0) continue;
                    i128 p = i128(a.num_[i]) * b.num_[j];
                    if (__builtin_add_overflow(c[i + j], p, &c[i + j])) {
                        ok = false;
                        break;
                    }
                }
            }
            i128 res[CycNumber::kMaxPhi];
            for (int r = 0; r < phi && ok; ++r) {
                res[r] = c[r];
                for (int k = phi; k < 2 * phi - 1 && ok; ++k) {
                    int64_t m = t.red[k][r];
                    if (m == 0 || c[k] == 0) continue;
                    i128 p;
                    if (__builtin_mul_overflow(c[k], static_cast<i128>(m), &p) || __builtin_add_overflow(res[r], p, &res[r])) ok = false;
                }
            }
            if (ok) {
                i128 den = i128(a.den_) * b.den_;
                if (den == 1) {
                    bool fit = true;
                    for (int r = 0; r < phi; ++r)
                        if (res[r] > kLim || res[r] < -kLim) fit = false;
                    if (fit) {
                        for (int r = 0; r < phi; ++r) a.num_[r] = static_cast<int64_t>(res[r]);
                        a.order_ = static_cast<uint16_t>(order);
                        return;
                    }
                }
                if (!assign_small(a, order, res, phi, den)) assign_big_from_i128(a, order, res, phi, den);
                return;
            }
        }
        std::vector<mpz_class> na, nb;
        mpz_class da, db;
        a.load_big(na, da, order);
        b.load_big(nb, db, order);
        std::vector<mpz_class> c(2 * phi - 1);
        for (int i = 0; i < phi; ++i)
            for (int j = 0; j < phi; ++j) c[i + j] += na[i] * nb[j];
        std::vector<mpz_class> res(c.begin(), c.begin() + phi);
        for (int k = phi; k < 2 * phi - 1; ++k)
            for (int r = 0; r < phi; ++r)
                if (t.red[k][r] != 0) res[r] += c[k] * static_cast<long>(t.red[k][r]);
        a.order_ = static_cast<uint16_t>(order);
        a.set_big(std::move(res), da * db);
    }

    // one of the operands is rational (slot 0 only)
    static void scalar_mul(CycNumber& a, const CycNumber& b, int order) {
        int phi = phi_of(order);
        const CycNumber& q = b.is_rational() ? b : a;
        const CycNumber& v = b.is_rational() ? a : b;
        if (!q.big_ && !v.big_) {
            i128 num[CycNumber::kMaxPhi];
            for (int i = 0; i < phi; ++i) num[i] = i128(v.num_[i]) * q.num_[0];
            i128 den = i128(v.den_) * q.den_;
            CycNumber r;
            if (!assign_small(r, order, num, phi, den)) assign_big_from_i128(r, order, num, phi, den);
            a = std::move(r);
            return;
        }
        std::vector<mpz_class> nq, nv;
        mpz_class dq, dv;
        q.load_big(nq, dq, order);
        v.load_big(nv, dv, order);
        for (auto& x : nv) x *= nq[0];
        CycNumber r;
        r.order_ = static_cast<uint16_t>(order);
        r.set_big(std::move(nv), dq * dv);
        a = std::move(r);
    }
};

void CycNumber::set_big(std::vector<mpz_class> num, mpz_class den) {
    if (den < 0) {
        den = -den;
        for (auto& x : num) x = -x;
    }
    mpz_class g = den;
    bool zero = true;
    for (auto& x : num)
        if (x != 0) {
            zero = false;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
    num_.fill(0);
    den_ = 1;
    big_.reset();
    if (zero) return;
    if (g != 1) {
        for (auto& x : num) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    bool fit = fits64(den);
    for (auto& x : num) fit = fit && fits64(x);
    if (fit) {
        for (std::size_t i = 0; i < num.size(); ++i) num_[i] = num[i].get_si();
        den_ = den.get_si();
        return;
    }
    auto b = std::make_shared<Big>();
    b->num = std::move(num);
    b->den = std::move(den);
    big_ = std::move(b);
}

void CycNumber::load_big(std::vector<mpz_class>& num, mpz_class& den, int order) const {
    int phi = CycKernel::phi_of(order);
    num.assign(phi, 0);
    if (big_) {
        for (std::size_t i = 0; i < big_->num.size(); ++i) num[i] = big_->num[i];
        den = big_->den;
        return;
    }
    for (int i = 0; i < phi; ++i) num[i] = static_cast<long>(num_[i]);
    den = static_cast<long>(den_);
}

int CycNumber::join_order(const CycNumber& a, const CycNumber& b) {
    if (a.order_ == b.order_ || b.order_ == 0) return a.order_;
    if (a.order_ == 0) return b.order_;
    throw Error(ErrorKind::OrderMismatch, "orders " + std::to_string(a.order_) + " and " + std::to_string(b.order_));
}

CycNumber::CycNumber(long v) {
    if (v == LONG_MIN) {
        set_big({mpz_class(v)}, 1);
        return;
    }
    num_[0] = v;
}

CycNumber CycNumber::rational(const mpq_class& q) {
    CycNumber r;
    r.set_big({q.get_num()}, q.get_den());
    return r;
}

CycNumber CycNumber::from_coeffs(int order, const std::vector<mpq_class>& coeffs) {
    int phi = order == 0 ? 1 : field_table(order).phi;
    if (static_cast<int>(coeffs.size()) != phi) throw Error(ErrorKind::ShapeMismatch, "coefficient count differs from phi(order)");
    mpz_class den = 1;
    for (auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> num(phi);
    for (int i = 0; i < phi; ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    CycNumber r;
    r.order_ = static_cast<uint16_t>(order);
    r.set_big(std::move(num), den);
    return r;
}

int CycNumber::phi() const { return CycKernel::phi_of(order_); }

bool CycNumber::is_zero() const {
    if (big_) return false;
    for (auto v : num_)
        if (v != 0) return false;
    return true;
}

bool CycNumber::is_one() const { return !big_ && den_ == 1 && num_[0] == 1 && is_rational(); }

bool CycNumber::is_rational() const {
    if (big_) {
        for (std::size_t i = 1; i < big_->num.size(); ++i)
            if (big_->num[i] != 0) return false;
        return true;
    }
    for (int i = 1; i < kMaxPhi; ++i)
        if (num_[i] != 0) return false;
    return true;
}

std::vector<mpq_class> CycNumber::coeffs() const {
    std::vector<mpz_class> n;
    mpz_class d;
    load_big(n, d, order_);
    std::vector<mpq_class> r(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        r[i] = mpq_class(n[i], d);
        r[i].canonicalize();
    }
    return r;
}

mpq_class CycNumber::coeff(int i) const {
    auto c = coeffs();
    return i < static_cast<int>(c.size()) ? c[i] : mpq_class(0);
}

CycNumber CycNumber::with_order(int order) const {
    if (order_ == order) return *this;
    if (order_ != 0) throw Error(ErrorKind::OrderMismatch, "cannot re-home a non-rational element");
    CycNumber r = *this;
    if (order != 0) field_table(order);
    r.order_ = static_cast<uint16_t>(order);
    return r;
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    if (big_) {
        std::vector<mpz_class> n = big_->num;
        for (auto& x : n) x = -x;
        r.set_big(std::move(n), big_->den);
        return r;
    }
    for (auto& v : r.num_) v = -v;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    if (o.is_zero()) {
        order_ = static_cast<uint16_t>(join_order(*this, o));
        return *this;
    }
    CycKernel::add(*this, o, false);
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    if (o.is_zero()) {
        order_ = static_cast<uint16_t>(join_order(*this, o));
        return *this;
    }
    CycKernel::add(*this, o, true);
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    CycKernel::mul(*this, o);
    return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& o) {
    int order = join_order(*this, o);
    CycNumber inv = o.inverse();
    CycKernel::mul(*this, inv);
    order_ = static_cast<uint16_t>(order);
    return *this;
}

void CycNumber::sub_mul(const CycNumber& b, const CycNumber& c) {
    if (b.is_zero() || c.is_zero()) return;
    CycNumber p = b;
    p *= c;
    *this -= p;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivByZero, "inverse of zero");
    if (is_rational()) {
        auto c = coeffs();
        CycNumber r = rational(1 / c[0]);
        r.order_ = order_;
        return r;
    }
    // Solve (multiplication by this) * v = e_0 over Q.
    const FieldTable& t = field_table(order_);
    int phi = t.phi;
    auto a = coeffs();
    std::vector<std::vector<mpq_class>> M(phi, std::vector<mpq_class>(phi + 1));
    for (int j = 0; j < phi; ++j) {
        // column j = a * t^j
        for (int i = 0; i < phi; ++i) {
            if (a[i] == 0) continue;
            const auto& red = t.red[i + j];
            for (int r = 0; r < phi; ++r)
                if (red[r] != 0) M[r][j] += a[i] * static_cast<long>(red[r]);
        }
    }
    M[0][phi] = 1;
    for (int col = 0; col < phi; ++col) {
        int piv = col;
        while (M[piv][col] == 0) ++piv;
        std::swap(M[piv], M[col]);
        mpq_class inv = 1 / M[col][col];
        for (int k = col; k <= phi; ++k) M[col][k] *= inv;
        for (int r = 0; r < phi; ++r) {
            if (r == col || M[r][col] == 0) continue;
            mpq_class f = M[r][col];
            for (int k = col; k <= phi; ++k) M[r][k] -= f * M[col][k];
        }
    }
    std::vector<mpq_class> v(phi);
    for (int i = 0; i < phi; ++i) v[i] = M[i][phi];
    return from_coeffs(order_, v);
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.order_ != b.order_ && a.order_ != 0 && b.order_ != 0) return false;
    if (!a.big_ && !b.big_) return a.den_ == b.den_ && a.num_ == b.num_;
    if (!a.big_ || !b.big_) return false;
    return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
}

std::size_t CycNumber::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ull; };
    if (!big_) {
        mix(static_cast<std::size_t>(den_));
        for (auto v : num_) mix(static_cast<std::size_t>(v));
        return h;
    }
    mix(mpz_get_ui(big_->den.get_mpz_t()));
    for (auto& v : big_->num) mix(mpz_get_ui(v.get_mpz_t()));
    return h;
}

std::vector<std::string> CycNumber::coeff_strings() const {
    std::vector<std::string> out;
    for (auto& c : coeffs()) out.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    return out;
}

std::string CycNumber::str() const {
    auto c = coeffs();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        mpq_class v = c[i];
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        first = false;
        mpq_class av = abs(v);
        if (i == 0) {
            os << av.get_str();
        } else {
            if (av != 1) os << av.get_str() << "*";
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycNumber root_of_unity(int order, long power) {
    if (order < 2) throw Error(ErrorKind::InvalidOrder, "order must be >= 2");
    const FieldTable& t = field_table(order);
    long p = ((power % order) + order) % order;
    CycNumber r;
    std::vector<mpq_class> c(t.phi);
    for (int i = 0; i < t.phi; ++i) c[i] = static_cast<long>(t.red[p][i]);
    return CycNumber::from_coeffs(order, c);
}

CycNumber quantum_int(int d, long n) {
    int order = 2 * d;
    if (n < 0) return -quantum_int(d, -n);
    CycNumber r = CycNumber(0).with_order(order);
    for (long j = 0; j < n; ++j) r += root_of_unity(order, n - 1 - 2 * j);
    return r;
}

CycNumber conjugate(const CycNumber& a) {
    if (a.order() == 0) return a;
    auto c = a.coeffs();
    CycNumber r;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) r += CycNumber::rational(c[i]) * root_of_unity(a.order(), -static_cast<long>(i));
    return r;
}

std::complex<double> complex_embed(const CycNumber& a, int order) {
    int n = a.order() != 0 ? a.order() : order;
    auto c = a.coeffs();
    std::complex<double> r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        double ang = n == 0 ? 0.0 : 2.0 * M_PI * static_cast<double>(i) / n;
        r += c[i].get_d() * std::polar(1.0, ang);
    }
    return r;
}

CycMatrix CycMatrix::identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

CycMatrix CycMatrix::column(const std::vector<CycNumber>& v) {
    CycMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product");
    CycMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const CycNumber& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
        }
    return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
    CycMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference");
    CycMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool CycMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const CycNumber& a) { return a.is_zero(); });
}

namespace {

// Reduced row echelon form in place; returns pivot columns (only among the first ncols).
std::vector<std::size_t> rref(CycMatrix& M, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < M.rows(); ++c) {
        std::size_t p = row;
        while (p < M.rows() && M(p, c).is_zero()) ++p;
        if (p == M.rows()) continue;
        if (p != row)
            for (std::size_t k = 0; k < M.cols(); ++k) std::swap(M(p, k), M(row, k));
        CycNumber inv = M(row, c).inverse();
        for (std::size_t k = c; k < M.cols(); ++k) M(row, k) *= inv;
        for (std::size_t r = 0; r < M.rows(); ++r) {
            if (r == row || M(r, c).is_zero()) continue;
            CycNumber f = M(r, c);
            for (std::size_t k = c; k < M.cols(); ++k)
                if (!M(row, k).is_zero()) M(r, k).sub_mul(f, M(row, k));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<CycMatrix> solve_linear(const CycMatrix& A, const CycMatrix& b) {
    if (A.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve_linear: row counts differ");
    CycMatrix M(A.rows(), A.cols() + b.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = A(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) M(i, A.cols() + j) = b(i, j);
    }
    auto piv = rref(M, A.cols());
    for (std::size_t r = piv.size(); r < M.rows(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!M(r, A.cols() + j).is_zero()) return std::nullopt;
    CycMatrix x(A.cols(), b.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = M(r, A.cols() + j);
    if (!(A * x == b)) throw Error(ErrorKind::PreconditionViolated, "solve_linear: substitution check failed");
    return x;
}

std::vector<CycMatrix> kernel_basis(const CycMatrix& A) {
    CycMatrix M = A;
    auto piv = rref(M, A.cols());
    std::vector<bool> is_piv(A.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<CycMatrix> out;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_piv[f]) continue;
        CycMatrix v(A.cols(), 1);
        v(f, 0) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v(piv[r], 0) = -M(r, f);
        if (!(A * v).is_zero()) throw Error(ErrorKind::PreconditionViolated, "kernel_basis: vector not in kernel");
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const CycMatrix& A) {
    CycMatrix M = A;
    return rref(M, A.cols()).size();
}

}  // namespace mfcat
