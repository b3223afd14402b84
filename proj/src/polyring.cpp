#include "mfcat/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace mfcat {

const char* var_name(int v) {
    static const char* names[kMaxVars] = {"x", "y", "z", "w", "u", "v", "s", "t"};
    return v >= 0 && v < kMaxVars ? names[v] : "?";
}

int mono_degree(Monomial m) {
    int d = 0;
    for (; m != 0; m >>= 8) d += static_cast<int>(m & 0xff);
    return d;
}

Monomial mono_from(const std::vector<int>& exps) {
    Monomial m = 0;
    for (std::size_t v = 0; v < exps.size(); ++v) m |= mono_var(static_cast<int>(v), exps[v]);
    return m;
}

std::vector<Monomial> monomials_of_degree(const std::vector<int>& vars, int deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    if (vars.empty()) {
        if (deg == 0) out.push_back(0);
        return out;
    }
    std::vector<int> rest(vars.begin() + 1, vars.end());
    for (int e = 0; e <= deg; ++e)
        for (Monomial m : monomials_of_degree(rest, deg - e)) out.push_back(m + mono_var(vars[0], e));
    std::sort(out.begin(), out.end());
    return out;
}

MultiPoly::MultiPoly(const CycNumber& c) {
    if (!c.is_zero()) terms_.emplace_back(0, c);
}

MultiPoly MultiPoly::var(int v) { return monomial(mono_var(v), 1); }

MultiPoly MultiPoly::monomial(Monomial m, const CycNumber& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    MultiPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) p.terms_.back().second += t.second;
        else {
            if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
    return p;
}

int MultiPoly::total_degree() const {
    int d = kNegInfDegree;
    for (auto& t : terms_) d = std::max(d, mono_degree(t.first));
    return d;
}

int MultiPoly::min_degree() const {
    if (terms_.empty()) return kNegInfDegree;
    int d = 1 << 30;
    for (auto& t : terms_) d = std::min(d, mono_degree(t.first));
    return d;
}

int MultiPoly::degree_in(int v) const {
    int d = kNegInfDegree;
    for (auto& t : terms_) d = std::max(d, mono_exp(t.first, v));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = mono_degree(terms_[0].first);
    for (auto& t : terms_)
        if (mono_degree(t.first) != d) return false;
    return true;
}

uint32_t MultiPoly::var_mask() const {
    uint32_t m = 0;
    for (auto& t : terms_)
        for (int v = 0; v < kMaxVars; ++v)
            if (mono_exp(t.first, v) != 0) m |= 1u << v;
    return m;
}

CycNumber MultiPoly::coeff(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return CycNumber(0);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

void MultiPoly::add_scaled(const MultiPoly& p, const CycNumber& c, Monomial m) {
    if (p.terms_.empty() || c.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + p.terms_.size());
    auto a = terms_.begin();
    auto b = p.terms_.begin();
    bool unit = c.is_one();
    while (a != terms_.end() || b != p.terms_.end()) {
        if (b == p.terms_.end() || (a != terms_.end() && a->first < b->first + m)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first + m < a->first) {
            out.emplace_back(b->first + m, unit ? b->second : b->second * c);
            ++b;
        } else {
            CycNumber v = std::move(a->second);
            if (unit) v += b->second;
            else v += b->second * c;
            if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    add_scaled(o, CycNumber(1));
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    add_scaled(o, CycNumber(-1));
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const CycNumber& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.second *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return MultiPoly();
    const MultiPoly& small = a.size() <= b.size() ? a : b;
    const MultiPoly& large = a.size() <= b.size() ? b : a;
    if (small.size() == 1) {
        MultiPoly r;
        r.add_scaled(large, small.terms_[0].second, small.terms_[0].first);
        return r;
    }
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() * b.size());
    for (auto& s : small.terms_)
        for (auto& l : large.terms_) out.emplace_back(s.first + l.first, s.second * l.second);
    return MultiPoly::from_terms(std::move(out));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    std::vector<const Term*> order;
    for (auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        int da = mono_degree(a->first), db = mono_degree(b->first);
        return da != db ? da > db : a->first < b->first;
    });
    bool first = true;
    for (const Term* it : order) {
        if (!first) os << " + ";
        first = false;
        bool constant = it->first == 0;
        if (constant || !it->second.is_one()) {
            std::string c = it->second.str();
            if (it->second.is_rational() || constant) os << c;
            else os << "(" << c << ")";
            if (!constant) os << "*";
        }
        bool firstvar = true;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(it->first, v);
            if (e == 0) continue;
            if (!firstvar) os << "*";
            firstvar = false;
            os << var_name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, int e) {
    MultiPoly r(1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

MultiPoly graded_component(const MultiPoly& p, int k) {
    std::vector<MultiPoly::Term> out;
    for (auto& t : p.terms())
        if (mono_degree(t.first) == k) out.push_back(t);
    MultiPoly r = MultiPoly::from_terms(std::move(out));
    return r;
}

MultiPoly substitute(const MultiPoly& p, int v, const MultiPoly& q) {
    int maxe = std::max(0, p.degree_in(v));
    std::vector<MultiPoly> powers{MultiPoly(1)};
    for (int e = 1; e <= maxe; ++e) powers.push_back(powers.back() * q);
    MultiPoly r;
    Monomial mask = ~mono_var(v, 0xff);
    for (auto& t : p.terms()) {
        int e = mono_exp(t.first, v);
        r.add_scaled(powers[e], t.second, t.first & mask);
    }
    return r;
}

MultiPoly scale_vars(const MultiPoly& p, const std::map<int, long>& scales, int d) {
    std::vector<MultiPoly::Term> out;
    for (auto& t : p.terms()) {
        long e = 0;
        for (auto& [v, a] : scales) e += a * mono_exp(t.first, v);
        out.emplace_back(t.first, t.second * root_of_unity(2 * d, 2 * e));
    }
    return MultiPoly::from_terms(std::move(out));
}

VarMap::VarMap() {
    for (int v = 0; v < kMaxVars; ++v) {
        target[v] = static_cast<int8_t>(v);
        coef[v] = 1;
    }
}

VarMap VarMap::identity() { return VarMap(); }

VarMap& VarMap::set(int v, int t, const CycNumber& c) {
    target[v] = static_cast<int8_t>(t);
    coef[v] = c;
    return *this;
}

VarMap& VarMap::kill(int v) {
    target[v] = -1;
    coef[v] = 0;
    return *this;
}

bool VarMap::operator==(const VarMap& o) const { return target == o.target && coef == o.coef; }

MultiPoly apply_varmap(const MultiPoly& p, const VarMap& m) {
    std::vector<MultiPoly::Term> out;
    out.reserve(p.size());
    for (auto& t : p.terms()) {
        Monomial nm = 0;
        CycNumber c = t.second;
        bool dead = false;
        for (int v = 0; v < kMaxVars && !dead; ++v) {
            int e = mono_exp(t.first, v);
            if (e == 0) continue;
            if (m.target[v] < 0) {
                dead = true;
                break;
            }
            nm += mono_var(m.target[v], e);
            if (!m.coef[v].is_one())
                for (int i = 0; i < e; ++i) c *= m.coef[v];
        }
        if (!dead) out.emplace_back(nm, std::move(c));
    }
    return MultiPoly::from_terms(std::move(out));
}

namespace {

bool divides(Monomial a, Monomial b) {
    for (int v = 0; v < kMaxVars; ++v)
        if (mono_exp(a, v) > mono_exp(b, v)) return false;
    return true;
}

}  // namespace

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw Error(ErrorKind::DivByZero, "polynomial division by zero");
    // packed keys order monomials lexicographically, a monomial order
    const auto& lt = q.terms().back();
    CycNumber inv = lt.second.inverse();
    MultiPoly r = p, quot;
    while (!r.is_zero()) {
        const auto& t = r.terms().back();
        if (!divides(lt.first, t.first))
            throw Error(ErrorKind::PreconditionViolated, "division not exact: " + q.str() + " does not divide " + p.str());
        Monomial m = t.first - lt.first;
        CycNumber c = t.second * inv;
        quot.add_scaled(MultiPoly(1), c, m);
        r.add_scaled(q, -c, m);
    }
    return quot;
}

MultiPoly rem_monic(const MultiPoly& p, const MultiPoly& D, int v) {
    int n = D.degree_in(v);
    if (n < 0 || !(coeff_in(D, v, n) == MultiPoly(1)))
        throw Error(ErrorKind::PreconditionViolated, "rem_monic: divisor not monic in " + std::string(var_name(v)));
    MultiPoly r = p;
    for (int k = r.degree_in(v); k >= n; k = r.degree_in(v)) {
        MultiPoly c = coeff_in(r, v, k);
        r -= c * MultiPoly::monomial(mono_var(v, k - n), 1) * D;
    }
    return r;
}

MultiPoly coeff_in(const MultiPoly& p, int v, int k) {
    std::vector<MultiPoly::Term> out;
    Monomial strip = mono_var(v, k);
    for (auto& t : p.terms())
        if (mono_exp(t.first, v) == k) out.emplace_back(t.first - strip, t.second);
    return MultiPoly::from_terms(std::move(out));
}

}  // namespace mfcat
