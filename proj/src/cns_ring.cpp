#include "mfcat/cns_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mfcat {

std::string CnsLabel::str() const { return "[" + std::to_string(l) + "," + std::to_string(r) + "]"; }

CnsLabel cns_label(int d, int l, long r) {
    if (l < 0 || l > d - 2) throw Error(ErrorKind::InvalidLabel, "l = " + std::to_string(l));
    int rr = static_cast<int>(mod(r, 2 * d));
    if ((l + rr) % 2 != 0) throw Error(ErrorKind::InvalidLabel, "[l,r] needs l + r even");
    return {l, rr};
}

std::vector<CnsLabel> cns_simples(int d) {
    if (d < 3) throw Error(ErrorKind::PreconditionViolated, "cns_simples needs d >= 3");
    std::vector<CnsLabel> out;
    for (int l = 0; l <= d - 2; ++l)
        for (int r = 0; r < 2 * d; ++r)
            if ((l + r) % 2 == 0) out.push_back({l, r});
    return out;
}

std::vector<CnsLabel> cns_fuse(int d, const CnsLabel& a, const CnsLabel& b) {
    std::vector<CnsLabel> out;
    int top = std::min(a.l + b.l, 2 * d - 4 - a.l - b.l);
    for (int nu = std::abs(a.l - b.l); nu <= top; nu += 2) out.push_back(cns_label(d, nu, a.r + b.r));
    return out;
}

CycNumber cns_qdim(int d, const CnsLabel& a) { return quantum_int(d, a.l + 1); }

CnsLabel cns_dual(int d, const CnsLabel& a) { return cns_label(d, a.l, -a.r); }

CycNumber VdData::q(long k) const { return root_of_unity(2 * d, 2 * mod(k * k, d)); }

CycNumber VdData::b(long k, long l) const { return root_of_unity(2 * d, 2 * mod(2 * k * l, d)); }

CycNumber VdData::q_2d(long r) const {
    long order = 4L * d, e = mod(r * r, order);
    if (e == 0) return 1;
    long g = std::gcd(e, order);
    return root_of_unity(static_cast<int>(order / g), e / g);
}

CycNumber VdData::h(int l, int m, int n) const {
    if (m + n < d) return 1;
    CycNumber q1d = 1, q1 = q(1);
    for (int i = 0; i < d; ++i) q1d *= q1;
    CycNumber r = 1;
    for (int i = 0; i < l; ++i) r *= q1d;
    return r;
}

bool VdReport::pass() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.pass; });
}

namespace {

struct Tally {
    AxiomResult res;
    long checked = 0;
    explicit Tally(std::string name) { res.axiom = std::move(name), res.pass = true; }
    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && res.pass) {
            res.pass = false;
            res.detail = what;
        }
    }
    AxiomResult done() {
        if (res.pass) res.detail = std::to_string(checked) + " cases";
        return res;
    }
};

// zeta_n^i -> zeta_N^{iN/n}, n | N
CycNumber lift(const CycNumber& a, int N) {
    if (a.order() == 0 || a.order() == N) return a;
    int step = N / a.order();
    auto c = a.coeffs();
    CycNumber r = CycNumber(0).with_order(N);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) r += CycNumber::rational(c[i]) * root_of_unity(N, static_cast<long>(i) * step);
    return r;
}

// Equality of elements that may live in different cyclotomic fields.
bool same_value(const CycNumber& a, const CycNumber& b) {
    int n = std::max(a.order(), 1), m = std::max(b.order(), 1);
    int N = std::lcm(n, m);
    return lift(a, N) == lift(b, N);
}

std::string key3(long a, long b, long c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

VdReport vd_check(int d) {
    if (d < 2) throw Error(ErrorKind::PreconditionViolated, "vd_check needs d >= 2");
    VdData V{d};
    VdReport rep;
    rep.d = d;

    Tally well("q-well-defined"), even("q-even"), bichar("b-from-q"), biadd("b-biadditive"), assoc("associator-trivial"),
        restr("restriction-from-z2d");
    for (long k = -2 * d; k <= 2 * d; ++k) {
        well.expect(V.q(k + d) == V.q(k), "k = " + std::to_string(k));
        even.expect(V.q(-k) == V.q(k), "k = " + std::to_string(k));
    }
    for (long k = 0; k < d; ++k)
        for (long l = 0; l < d; ++l) {
            bichar.expect(V.b(k, l) == V.q(k + l) / (V.q(k) * V.q(l)), key3(k, l, 0));
            for (long j = 0; j < d; ++j) biadd.expect(V.b(k + j, l) == V.b(k, l) * V.b(j, l), key3(k, j, l));
        }
    for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) assoc.expect(V.h(l, m, n) == 1, key3(l, m, n));
    for (long k = 0; k < d; ++k) restr.expect(same_value(V.q_2d(2 * k), V.q(k)), "k = " + std::to_string(k));
    rep.axioms = {well.done(), even.done(), bichar.done(), biadd.done(), assoc.done(), restr.done()};

    for (int k = 0; k < d; ++k) {
        bool t = true;
        for (int l = 0; l < d && t; ++l) t = V.b(k, l) == 1;
        if (t) rep.transparent.push_back(k);
    }
    return rep;
}

PermLabel cns_to_perm(int d, const CnsLabel& a) {
    return {static_cast<int>(mod((a.r - a.l) / 2, d)), a.l};
}

CnsLabel perm_to_cns(int d, const PermLabel& s) { return cns_label(d, s.l, 2L * s.m + s.l); }

std::vector<AxiomResult> ring_iso_check(const PermCategory& C, const IsoOptions& opt) {
    const int d = C.d();
    auto map = opt.map ? opt.map : [d](const CnsLabel& a) { return cns_to_perm(d, a); };
    auto simples = cns_simples(d);
    auto perm = C.labels();
    std::vector<AxiomResult> out;

    Tally bij("bijection");
    std::set<PermLabel> image;
    for (auto& a : simples) image.insert(map(a));
    bij.expect(image.size() == simples.size(), "map is not injective");
    bij.expect(image == std::set<PermLabel>(perm.begin(), perm.end()), "map is not onto the simples of P_d");
    out.push_back(bij.done());

    auto as_counts = [](const std::vector<PermLabel>& v) {
        std::map<PermLabel, std::size_t> m;
        for (auto& s : v) ++m[s];
        return m;
    };
    Tally closed("fusion-closed-form"), hom("fusion-hom-space");
    for (auto& a : simples)
        for (auto& b : simples) {
            std::vector<PermLabel> lhs;
            for (auto& c : cns_fuse(d, a, b)) lhs.push_back(map(c));
            auto want = as_counts(lhs);
            std::string at = a.str() + " x " + b.str();
            closed.expect(want == as_counts(C.fusion_rule(map(a), map(b))), at);
            if (opt.hom_space) {
                auto got = C.fusion_by_hom(map(a), map(b));
                std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
                hom.expect(want == got, at);
            }
        }
    out.push_back(closed.done());
    if (opt.hom_space) out.push_back(hom.done());

    Tally qd("quantum-dimensions");
    for (auto& a : simples) qd.expect(cns_qdim(d, a) == C.qdim_spherical(map(a)), a.str());
    out.push_back(qd.done());

    Tally unit("unit");
    unit.expect(map(cns_label(d, 0, 0)) == PermLabel{0, 0}, "[0,0] is not sent to the unit");
    out.push_back(unit.done());

    Tally dual("duals");
    for (auto& a : simples) dual.expect(map(cns_dual(d, a)) == C.dual(map(a)), a.str());
    out.push_back(dual.done());

    Tally charge("charge-compatibility");
    for (int k = 0; k < d; ++k) {
        CnsLabel g = cns_label(d, 0, 2 * k);
        charge.expect(map(g) == C.label(k, 0), g.str());
        for (auto& a : simples) {
            auto prod = cns_fuse(d, g, a);
            charge.expect(prod.size() == 1 && map(prod[0]) == C.shifted(map(a), k), g.str() + " x " + a.str());
        }
    }
    out.push_back(charge.done());
    return out;
}

}  // namespace mfcat
