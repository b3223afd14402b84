#include "mfcat/tl_charged.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>

namespace mfcat {

namespace {

int mod_d(long a, long d) { return static_cast<int>(((a % d) + d) % d); }

// Position of boundary index i when walking the bottom left to right, then the top right to left.
int cyclic_pos(const KauffmanDiagram& D, int i) { return i < D.bottom ? i : D.bottom + D.top - 1 - (i - D.bottom); }

}  // namespace

int KauffmanDiagram::caps() const {
    int c = 0;
    for (int i = 0; i < bottom; ++i)
        if (match[i] < bottom && match[i] > i) ++c;
    return c;
}

int KauffmanDiagram::cups() const {
    int c = 0;
    for (int i = bottom; i < bottom + top; ++i)
        if (match[i] >= bottom && match[i] > i) ++c;
    return c;
}

std::string KauffmanDiagram::str() const {
    std::ostringstream os;
    os << bottom << "->" << top << ":";
    auto name = [&](int i) { return i < bottom ? "b" + std::to_string(i) : "t" + std::to_string(i - bottom); };
    bool first = true;
    for (int i = 0; i < bottom + top; ++i) {
        if (match[i] < i) continue;
        os << (first ? "" : ",") << name(i) << "-" << name(match[i]);
        first = false;
    }
    return os.str();
}

KauffmanDiagram KauffmanDiagram::identity(int n) {
    KauffmanDiagram D{n, n, std::vector<int>(2 * n)};
    for (int i = 0; i < n; ++i) {
        D.match[i] = n + i;
        D.match[n + i] = i;
    }
    return D;
}

KauffmanDiagram KauffmanDiagram::cap() { return {2, 0, {1, 0}}; }
KauffmanDiagram KauffmanDiagram::cup() { return {0, 2, {1, 0}}; }

KauffmanDiagram KauffmanDiagram::e(int n, int i) {
    if (i < 1 || i >= n) throw Error(ErrorKind::PreconditionViolated, "e_i needs 1 <= i <= n-1");
    KauffmanDiagram D = identity(n);
    D.match[i - 1] = i;
    D.match[i] = i - 1;
    D.match[n + i - 1] = n + i;
    D.match[n + i] = n + i - 1;
    return D;
}

bool KauffmanDiagram::is_planar() const {
    int N = bottom + top;
    if (static_cast<int>(match.size()) != N) return false;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < N; ++i) {
        int j = match[i];
        if (j < 0 || j >= N || j == i || match[j] != i) return false;
        if (i < j) {
            int a = cyclic_pos(*this, i), b = cyclic_pos(*this, j);
            arcs.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    for (auto& [a, b] : arcs)
        for (auto& [c, e] : arcs)
            if (a < c && c < b && b < e) return false;
    return true;
}

long catalan(int k) {
    long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

namespace {

// Non-crossing matchings of the cyclic positions [lo, hi), as position pairs.
void enumerate_positions(int lo, int hi, std::vector<int>& pos_match, std::vector<std::vector<int>>& out,
                         std::vector<std::pair<int, int>>& pending) {
    while (lo < hi && pos_match[lo] >= 0) ++lo;
    if (lo >= hi) {
        if (pending.empty()) {
            out.push_back(pos_match);
            return;
        }
        auto [a, b] = pending.back();
        pending.pop_back();
        enumerate_positions(a, b, pos_match, out, pending);
        pending.emplace_back(a, b);
        return;
    }
    for (int p = lo + 1; p < hi; p += 2) {
        pos_match[lo] = p;
        pos_match[p] = lo;
        pending.emplace_back(p + 1, hi);
        enumerate_positions(lo + 1, p, pos_match, out, pending);
        pending.pop_back();
        pos_match[lo] = pos_match[p] = -1;
    }
}

}  // namespace

const std::vector<KauffmanDiagram>& enumerate_diagrams(int bottom, int top) {
    static std::shared_mutex mu;
    static std::map<std::pair<int, int>, std::vector<KauffmanDiagram>> cache;
    if (bottom < 0 || top < 0) throw Error(ErrorKind::PreconditionViolated, "negative boundary count");
    {
        std::shared_lock lock(mu);
        auto it = cache.find({bottom, top});
        if (it != cache.end()) return it->second;
    }
    std::vector<KauffmanDiagram> result;
    int N = bottom + top;
    if (N % 2 == 0) {
        std::vector<int> pos_match(N, -1);
        std::vector<std::vector<int>> raw;
        std::vector<std::pair<int, int>> pending;
        enumerate_positions(0, N, pos_match, raw, pending);
        KauffmanDiagram shape{bottom, top, {}};
        std::vector<int> at_pos(N);
        for (int i = 0; i < N; ++i) at_pos[cyclic_pos(shape, i)] = i;
        for (auto& pm : raw) {
            KauffmanDiagram D{bottom, top, std::vector<int>(N)};
            for (int p = 0; p < N; ++p) D.match[at_pos[p]] = at_pos[pm[p]];
            result.push_back(std::move(D));
        }
        std::sort(result.begin(), result.end());
    }
    std::unique_lock lock(mu);
    return cache.emplace(std::make_pair(bottom, top), std::move(result)).first->second;
}

std::pair<KauffmanDiagram, int> glue(const KauffmanDiagram& f, const KauffmanDiagram& g) {
    if (g.top != f.bottom) throw Error(ErrorKind::ShapeMismatch, "glue: " + g.str() + " under " + f.str());
    const int n = g.bottom, m = g.top, p = f.top;
    KauffmanDiagram R{n, p, std::vector<int>(n + p)};
    std::vector<char> seen(m, 0);
    // Follow a strand entering the middle row at j from below (via g) until it leaves.
    auto walk_up = [&](int j) {
        while (true) {
            seen[j] = 1;
            int r = f.match[j];
            if (r >= m) return n + (r - m);
            seen[r] = 1;
            int q = g.match[n + r];
            if (q < n) return q;
            j = q - n;
        }
    };
    auto walk_down = [&](int j) {
        while (true) {
            seen[j] = 1;
            int q = g.match[n + j];
            if (q < n) return q;
            seen[q - n] = 1;
            int r = f.match[q - n];
            if (r >= m) return n + (r - m);
            j = r;
        }
    };
    for (int i = 0; i < n; ++i) {
        int q = g.match[i];
        R.match[i] = q < n ? q : walk_up(q - n);
    }
    for (int k = 0; k < p; ++k) {
        int r = f.match[m + k];
        R.match[n + k] = r >= m ? n + (r - m) : walk_down(r);
    }
    int loops = 0;
    for (int j = 0; j < m; ++j) {
        if (seen[j]) continue;
        ++loops;
        int cur = j;
        do {
            seen[cur] = 1;
            int r = f.match[cur];
            seen[r] = 1;
            cur = g.match[n + r] - n;
        } while (cur != j);
    }
    return {std::move(R), loops};
}

KauffmanDiagram juxtapose(const KauffmanDiagram& f, const KauffmanDiagram& g) {
    const int B = f.bottom + g.bottom, T = f.top + g.top;
    KauffmanDiagram R{B, T, std::vector<int>(B + T)};
    auto fmap = [&](int i) { return i < f.bottom ? i : B + (i - f.bottom); };
    auto gmap = [&](int i) { return i < g.bottom ? f.bottom + i : B + f.top + (i - g.bottom); };
    for (int i = 0; i < f.bottom + f.top; ++i) R.match[fmap(i)] = fmap(f.match[i]);
    for (int i = 0; i < g.bottom + g.top; ++i) R.match[gmap(i)] = gmap(g.match[i]);
    return R;
}

int closure_loops(const KauffmanDiagram& f) {
    if (f.bottom != f.top) throw Error(ErrorKind::ShapeMismatch, "trace of " + f.str());
    const int n = f.bottom;
    std::vector<char> seen(2 * n, 0);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
        if (seen[s]) continue;
        ++loops;
        int cur = s;
        do {
            seen[cur] = 1;
            int other = f.match[cur];
            seen[other] = 1;
            cur = other < n ? other + n : other - n;  // closing arc
        } while (cur != s);
    }
    return loops;
}

TLElement TLElement::of(const KauffmanDiagram& D, const CycNumber& c) {
    TLElement r{D.bottom, D.top, {}};
    r.add(D, c);
    return r;
}

CycNumber TLElement::coeff(const KauffmanDiagram& D) const {
    auto it = terms.find(D);
    return it == terms.end() ? CycNumber(0) : it->second;
}

void TLElement::add(const KauffmanDiagram& D, const CycNumber& c) {
    if (D.bottom != bottom || D.top != top) throw Error(ErrorKind::ShapeMismatch, "term " + D.str());
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(D, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

TLElement& TLElement::operator+=(const TLElement& o) {
    if (o.bottom != bottom || o.top != top) throw Error(ErrorKind::ShapeMismatch, "TL sum");
    for (auto& [D, c] : o.terms) add(D, c);
    return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
    if (o.bottom != bottom || o.top != top) throw Error(ErrorKind::ShapeMismatch, "TL difference");
    for (auto& [D, c] : o.terms) add(D, -c);
    return *this;
}

TLElement& TLElement::operator*=(const CycNumber& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [D, v] : terms) v *= c;
    return *this;
}

bool operator==(const TLElement& a, const TLElement& b) {
    return a.bottom == b.bottom && a.top == b.top && a.terms == b.terms;
}

TemperleyLieb::TemperleyLieb(int d) : d_(d) {
    if (d < 2) throw Error(ErrorKind::PreconditionViolated, "Temperley-Lieb needs d >= 2");
    kappa_ = root_of_unity(2 * d, 1) + root_of_unity(2 * d, -1);
}

namespace {

CycNumber kappa_pow(const CycNumber& kappa, int k) {
    CycNumber r = 1;
    for (int i = 0; i < k; ++i) r *= kappa;
    return r;
}

}  // namespace

TLElement TemperleyLieb::compose(const TLElement& f, const TLElement& g) const {
    if (g.top != f.bottom) throw Error(ErrorKind::ShapeMismatch, "TL compose");
    TLElement r = TLElement::zero(g.bottom, f.top);
    std::vector<CycNumber> pw{1};
    for (auto& [Df, cf] : f.terms)
        for (auto& [Dg, cg] : g.terms) {
            auto [D, loops] = glue(Df, Dg);
            while (static_cast<int>(pw.size()) <= loops) pw.push_back(pw.back() * kappa_);
            r.add(D, cf * cg * pw[loops]);
        }
    return r;
}

TLElement TemperleyLieb::juxtapose(const TLElement& f, const TLElement& g) const {
    TLElement r = TLElement::zero(f.bottom + g.bottom, f.top + g.top);
    for (auto& [Df, cf] : f.terms)
        for (auto& [Dg, cg] : g.terms) r.add(mfcat::juxtapose(Df, Dg), cf * cg);
    return r;
}

CycNumber TemperleyLieb::markov_trace(const TLElement& f) const {
    if (f.bottom != f.top) throw Error(ErrorKind::ShapeMismatch, "trace needs an endomorphism");
    CycNumber r = 0;
    for (auto& [D, c] : f.terms) r += c * kappa_pow(kappa_, closure_loops(D));
    return r;
}

const TLElement& TemperleyLieb::jones_wenzl(int n) const {
    static std::mutex mu;
    std::lock_guard lock(mu);
    if (n < 0) throw Error(ErrorKind::PreconditionViolated, "jones_wenzl needs n >= 0");
    if (n >= d_)
        throw Error(ErrorKind::QuantumZero, "p_" + std::to_string(n) + " divides by [" + std::to_string(d_) + "] = 0");
    if (jw_.empty()) {
        jw_.push_back(identity(0));
        jw_.push_back(identity(1));
    }
    while (static_cast<int>(jw_.size()) <= n) {
        int k = static_cast<int>(jw_.size()) - 1;  // p_k known, build p_{k+1}
        CycNumber den = quantum_int(d_, k + 1);
        if (den.is_zero()) throw Error(ErrorKind::QuantumZero, "[" + std::to_string(k + 1) + "] = 0");
        TLElement pk = juxtapose(jw_[k], identity(1));
        TLElement mid = compose(compose(pk, e(k + 1, k)), pk);
        TLElement p = pk - (quantum_int(d_, k) / den) * mid;
        if (!(compose(p, p) == p)) throw Error(ErrorKind::PreconditionViolated, "p_" + std::to_string(k + 1) + " not idempotent");
        for (int i = 1; i <= k; ++i)
            if (!compose(e(k + 1, i), p).is_zero() || !compose(p, e(k + 1, i)).is_zero())
                throw Error(ErrorKind::PreconditionViolated, "p_" + std::to_string(k + 1) + " not killed by e_" + std::to_string(i));
        jw_.push_back(std::move(p));
    }
    return jw_[n];
}

std::vector<KauffmanDiagram> charged_hom(int d, const ChargedObject& src, const ChargedObject& dst) {
    if ((src.n + dst.n) % 2 != 0) return {};
    if (mod_d((dst.n - src.n) / 2 - (src.k - dst.k), d) != 0) return {};
    return enumerate_diagrams(src.n, dst.n);
}

std::string ChargedSimple::str() const { return "<<" + std::to_string(k) + "," + std::to_string(n) + ">>"; }

ChargedFusionRing::ChargedFusionRing(int d) : d_(d) {
    if (d < 3) throw Error(ErrorKind::PreconditionViolated, "charged fusion ring needs d >= 3");
    for (int n = 0; n <= d - 2; ++n)
        for (int k = 0; k < d; ++k) simples_.push_back({k, n});
    const std::size_t S = simples_.size();
    table_.assign(S * S * S, 0);

    using Vec = std::vector<int>;
    auto times_gen = [&](const Vec& v, int l) {
        Vec r(S, 0);
        for (std::size_t i = 0; i < S; ++i)
            if (v[i])
                for (auto& c : fuse_generator(simples_[i], {mod_d(l, d), 1})) r[index(c)] += v[i];
        return r;
    };
    // a (x) <<l,m>> = (a (x) <<l,m-1>>) (x) <<0,1>> - a (x) <<l+1,m-2>>
    std::map<std::pair<std::size_t, std::size_t>, Vec> memo;
    std::function<Vec(std::size_t, int, int)> mult = [&](std::size_t a, int l, int m) -> Vec {
        l = mod_d(l, d);
        auto key = std::make_pair(a, index({l, m}));
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Vec r(S, 0);
        if (m == 0) {
            r[index({mod_d(simples_[a].k + l, d), simples_[a].n})] = 1;
        } else {
            Vec e(S, 0);
            e[a] = 1;
            if (m == 1) {
                r = times_gen(e, l);
            } else {
                r = times_gen(mult(a, l, m - 1), 0);
                Vec sub = mult(a, l + 1, m - 2);
                for (std::size_t i = 0; i < S; ++i) r[i] -= sub[i];
            }
        }
        return memo[key] = r;
    };
    for (std::size_t a = 0; a < S; ++a)
        for (std::size_t b = 0; b < S; ++b) {
            Vec v = mult(a, simples_[b].k, simples_[b].n);
            for (std::size_t c = 0; c < S; ++c) {
                if (v[c] < 0)
                    throw Error(ErrorKind::AssociativityViolation,
                                "negative coefficient in " + simples_[a].str() + " x " + simples_[b].str());
                at(a, b, c) = v[c];
            }
        }

    for (std::size_t a = 0; a < S; ++a)
        for (std::size_t c = 0; c < S; ++c)
            if (at(0, a, c) != (a == c) || at(a, 0, c) != (a == c))
                throw Error(ErrorKind::AssociativityViolation, "unit axiom fails at " + simples_[a].str());
    for (std::size_t a = 0; a < S; ++a)
        for (std::size_t b = 0; b < S; ++b)
            for (std::size_t c = 0; c < S; ++c)
                for (std::size_t f = 0; f < S; ++f) {
                    long lhs = 0, rhs = 0;
                    for (std::size_t e = 0; e < S; ++e) {
                        lhs += static_cast<long>(at(a, b, e)) * at(e, c, f);
                        rhs += static_cast<long>(at(b, c, e)) * at(a, e, f);
                    }
                    if (lhs != rhs)
                        throw Error(ErrorKind::AssociativityViolation,
                                    simples_[a].str() + simples_[b].str() + simples_[c].str());
                }
}

std::size_t ChargedFusionRing::index(const ChargedSimple& s) const {
    if (s.n < 0 || s.n > d_ - 2 || s.k < 0 || s.k >= d_) throw Error(ErrorKind::InvalidLabel, s.str());
    return static_cast<std::size_t>(s.n * d_ + s.k);
}

ChargedSimple ChargedFusionRing::simple(int k, int n) const {
    if (n < 0 || n > d_ - 2) throw Error(ErrorKind::InvalidLabel, "<<" + std::to_string(k) + "," + std::to_string(n) + ">>");
    return {mod_d(k, d_), n};
}

std::vector<ChargedSimple> ChargedFusionRing::fuse_generator(const ChargedSimple& a, const ChargedSimple& b) const {
    if (b.n != 1) throw Error(ErrorKind::PreconditionViolated, "second factor must be <<l,1>>");
    std::vector<ChargedSimple> r;
    // A cap has charge -1, so the lower summand sits at charge k+l+1.
    if (a.n >= 1) r.push_back(simple(a.k + b.k + 1, a.n - 1));
    if (a.n + 1 <= d_ - 2) r.push_back(simple(a.k + b.k, a.n + 1));
    return r;
}

int ChargedFusionRing::N(const ChargedSimple& a, const ChargedSimple& b, const ChargedSimple& c) const {
    return at(index(a), index(b), index(c));
}

std::vector<ChargedSimple> ChargedFusionRing::fuse(const ChargedSimple& a, const ChargedSimple& b) const {
    std::vector<ChargedSimple> r;
    std::size_t ia = index(a), ib = index(b);
    for (std::size_t c = 0; c < simples_.size(); ++c)
        for (int k = 0; k < at(ia, ib, c); ++k) r.push_back(simples_[c]);
    return r;
}

ChargedSimple ChargedFusionRing::dual(const ChargedSimple& a) const {
    std::optional<ChargedSimple> found;
    for (auto& b : simples_)
        if (N(a, b, unit()) == 1) {
            if (found) throw Error(ErrorKind::AssociativityViolation, "two duals for " + a.str());
            found = b;
        }
    if (!found) throw Error(ErrorKind::AssociativityViolation, "no dual for " + a.str());
    return *found;
}

bool ChargedFusionRing::is_commutative() const {
    const std::size_t S = simples_.size();
    for (std::size_t a = 0; a < S; ++a)
        for (std::size_t b = 0; b < a; ++b)
            for (std::size_t c = 0; c < S; ++c)
                if (at(a, b, c) != at(b, a, c)) return false;
    return true;
}

int diagram_multiplicity(const TemperleyLieb& tl, const ChargedSimple& a, const ChargedSimple& gen,
                         const ChargedSimple& c) {
    const int d = tl.d();
    if (gen.n != 1) throw Error(ErrorKind::PreconditionViolated, "second factor must be <<l,1>>");
    ChargedObject src{mod_d(a.k + gen.k, d), a.n + 1}, dst{c.k, c.n};
    auto basis = charged_hom(d, src, dst);
    if (basis.empty()) return 0;
    TLElement p_src = tl.juxtapose(tl.jones_wenzl(a.n), tl.identity(1));
    const TLElement& p_dst = tl.jones_wenzl(c.n);
    const auto& target = enumerate_diagrams(src.n, dst.n);
    CycMatrix M(target.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        TLElement v = tl.compose(tl.compose(p_dst, TLElement::of(basis[j])), p_src);
        for (std::size_t i = 0; i < target.size(); ++i) M(i, j) = v.coeff(target[i]);
    }
    return static_cast<int>(rank(M));
}

}  // namespace mfcat
