#include "mfcat/perm_cat.hpp"

#include <algorithm>
#include <sstream>

#include "mfcat/error.hpp"

namespace mfcat {

std::vector<int> PermLabel::set(int d) const {
    std::vector<int> s;
    for (int k = 0; k <= l; ++k) s.push_back(static_cast<int>(mod(m + k, d)));
    return s;
}

std::string PermLabel::str() const {
    std::ostringstream os;
    os << "P_{" << m << ";" << l << "}";
    return os.str();
}

namespace {

MultiPoly X() { return MultiPoly::var(0); }
MultiPoly Y() { return MultiPoly::var(1); }

VarMap rename(std::initializer_list<std::pair<int, int>> moves) {
    VarMap vm = VarMap::identity();
    for (auto [from, to] : moves) vm.set(from, to);
    return vm;
}

class TwistOp : public Op {
public:
    TwistOp(OpPtr f, long a, long b)
        : Op(mf_twist(f->src(), a, b), mf_twist(f->tgt(), a, b), f->parity()), f_(std::move(f)), a_(a), b_(b) {}
    PolyVec apply(const PolyVec& v) const override {
        int d = src_->d;
        PolyVec u(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) u[i] = scale_vars(v[i], {{0, -a_}, {src_->right_var, b_}}, d);
        PolyVec w = f_->apply(u);
        for (auto& p : w) p = scale_vars(p, {{0, a_}, {tgt_->right_var, -b_}}, d);
        return w;
    }

private:
    OpPtr f_;
    long a_, b_;
};

}  // namespace

MFPtr mf_twist(const MFPtr& M, long a, long b) {
    int d = M->d;
    a = mod(a, d);
    b = mod(b, d);
    if (a == 0 && b == 0) return M;
    if (M->left) return mf_tensor(mf_twist(M->left, a, 0), mf_twist(M->right, 0, b));
    auto R = std::make_shared<MatrixFactorisation>(*M);
    for (auto& e : R->D.e) e = scale_vars(e, {{0, a}, {M->right_var, -b}}, d);
    std::ostringstream os;
    os << "_" << a << "(" << M->name << ")_" << b;
    R->name = os.str();
    return R;
}

OpPtr op_twist(const OpPtr& f, long a, long b) { return std::make_shared<TwistOp>(f, a, b); }

OpPtr op_move_twist(const MFPtr& src, const MFPtr& tgt, long a) {
    if (!src->left || !tgt->left || src->rank() != tgt->rank() || src->right_var != tgt->right_var)
        throw Error(ErrorKind::ShapeMismatch, "op_move_twist needs binary tensors of the same shape");
    int k = src->left->right_var;
    VarMap vm = VarMap::identity();
    vm.set(k, k, root_of_unity(2 * src->d, 2 * mod(a, src->d)));
    std::vector<Component> comps;
    for (std::size_t g = 0; g < src->rank(); ++g) comps.push_back({static_cast<int>(g), static_cast<int>(g), PolyMap::map(vm)});
    return op_components(src, tgt, 0, std::move(comps));
}

PermCategory::PermCategory(int d, SolveOptions opt) : d_(d), opt_(opt) {
    if (d < 2) throw Error(ErrorKind::InvalidLabel, "d must be at least 2");
    root_of_unity(2 * d, 1);  // validates the field
}

CycNumber PermCategory::eta(long k) const { return root_of_unity(2 * d_, 2 * mod(k, d_)); }

PermLabel PermCategory::label(long m, int l) const {
    if (l < 0 || l > d_ - 2) {
        std::ostringstream os;
        os << "label (" << m << ";" << l << ") needs 0 <= l <= " << d_ - 2;
        throw Error(ErrorKind::InvalidLabel, os.str());
    }
    return {static_cast<int>(mod(m, d_)), l};
}

std::vector<PermLabel> PermCategory::labels() const {
    std::vector<PermLabel> r;
    for (int l = 0; l <= d_ - 2; ++l)
        for (int m = 0; m < d_; ++m) r.push_back({m, l});
    return r;
}

MFPtr PermCategory::object(const PermLabel& s0) const {
    PermLabel s = label(s0.m, s0.l);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = objects_.find({s.m, s.l});
        if (it != objects_.end()) return it->second;
    }
    MultiPoly d1(1);
    for (int k : s.set(d_)) d1 *= X() - eta(k) * Y();
    PolyMatrix a(1, 1), b(1, 1);
    a(0, 0) = d1;
    b(0, 0) = divide_exact(pow(X(), d_) - pow(Y(), d_), d1);
    MFPtr P = mf_shift(make_mf(a, b, 0, 1, d_, s.str()), -s.l);
    std::lock_guard<std::mutex> lk(mu_);
    return objects_.emplace(std::make_pair(s.m, s.l), P).first->second;
}

MFPtr PermCategory::twist(const PermLabel& s, long a, long b) const { return mf_twist(object(s), a, b); }

Morphism PermCategory::s_iso(const PermLabel& s, long a, long b) const {
    MFPtr src = object(shifted(s, -a - b)), tgt = twist(s, a, b);
    Morphism f{src, tgt, 0, PolyMatrix(2, 2)};
    f.F(0, 0) = 1;
    f.F(1, 1) = eta(-static_cast<long>(s.l + 1) * a);
    if (!is_closed(f)) throw Error(ErrorKind::PreconditionViolated, "s_iso is not a chain map for " + s.str());
    return f;
}

OpPtr PermCategory::unitor_left(const MFPtr& M) const {
    MFPtr src = mf_tensor(unit(), M);
    VarMap vm = VarMap::identity();
    vm.set(1, 0);
    for (int v = 2; v <= src->right_var; ++v) vm.set(v, v - 1);
    std::vector<Component> comps;
    for (std::size_t g = 0; g < src->rank(); ++g)
        if (src->src[g].first == 0) comps.push_back({src->src[g].second, static_cast<int>(g), PolyMap::map(vm)});
    return op_components(src, M, 0, std::move(comps));
}

OpPtr PermCategory::unitor_right(const MFPtr& M) const {
    MFPtr src = mf_tensor(M, unit());
    VarMap vm = VarMap::identity();
    vm.set(src->right_var, M->right_var);
    std::vector<Component> comps;
    for (std::size_t g = 0; g < src->rank(); ++g)
        if (src->src[g].second == 0) comps.push_back({src->src[g].first, static_cast<int>(g), PolyMap::map(vm)});
    return op_components(src, M, 0, std::move(comps));
}

OpPtr PermCategory::unitor_left_inv(const MFPtr& M) const {
    // e_g -> e_0 (x) e_g + sum_h Q_hg e_1 (x) e_h, Q the difference quotient of d^M in its left variable
    MFPtr tgt = mf_tensor(unit(), M);
    VarMap up = VarMap::identity();
    for (int v = 1; v <= M->right_var; ++v) up.set(v, v + 1);
    VarMap lift = up;
    lift.set(0, 1);
    std::vector<Component> comps;
    for (std::size_t g = 0; g < M->rank(); ++g) {
        comps.push_back({tgt->tensor_index(0, static_cast<int>(g)), static_cast<int>(g), PolyMap::map(up)});
        for (std::size_t h = 0; h < M->rank(); ++h) {
            const MultiPoly& e = M->D(h, g);
            if (e.is_zero()) continue;
            MultiPoly q = divide_exact(apply_varmap(e, up) - apply_varmap(e, lift), X() - Y());
            comps.push_back({tgt->tensor_index(1, static_cast<int>(h)), static_cast<int>(g), PolyMap::map(up).then_mul(q)});
        }
    }
    return op_components(M, tgt, 0, std::move(comps));
}

OpPtr PermCategory::unitor_right_inv(const MFPtr& M) const {
    // e_g -> e_g (x) e_0 - sum_h (-1)^{|h|} Q_hg e_h (x) e_1, Q the difference quotient in the right variable
    MFPtr tgt = mf_tensor(M, unit());
    int r = M->right_var;
    VarMap out = VarMap::identity();
    out.set(r, r + 1);
    std::vector<Component> comps;
    for (std::size_t g = 0; g < M->rank(); ++g) {
        comps.push_back({tgt->tensor_index(static_cast<int>(g), 0), static_cast<int>(g), PolyMap::map(out)});
        for (std::size_t h = 0; h < M->rank(); ++h) {
            const MultiPoly& e = M->D(h, g);
            if (e.is_zero()) continue;
            MultiPoly q = divide_exact(e - apply_varmap(e, out), MultiPoly::var(r) - MultiPoly::var(r + 1));
            if (M->parity(h) == 0) q = -q;
            comps.push_back({tgt->tensor_index(static_cast<int>(h), 1), static_cast<int>(g), PolyMap::map(out).then_mul(q)});
        }
    }
    return op_components(M, tgt, 0, std::move(comps));
}

OpPtr PermCategory::psi_left(long a, const PermLabel& s) const {
    MFPtr src = mf_tensor(charge(a), object(s));
    VarMap vm = VarMap::identity();
    vm.set(1, 0, eta(-a));
    vm.set(2, 1);
    std::vector<Component> comps;
    for (int j = 0; j < 2; ++j) {
        PolyMap pm = PolyMap::map(vm);
        if (j == 1) pm.scaled(eta(-a * (s.l + 1)));
        comps.push_back({j, src->tensor_index(0, j), pm});
    }
    return op_components(src, object(shifted(s, a)), 0, std::move(comps));
}

OpPtr PermCategory::psi_right(const PermLabel& s, long b) const {
    MFPtr src = mf_tensor(object(s), charge(b));
    VarMap vm = VarMap::identity();
    vm.set(1, 1, eta(b));
    vm.set(2, 1);
    std::vector<Component> comps;
    for (int i = 0; i < 2; ++i) comps.push_back({i, src->tensor_index(i, 0), PolyMap::map(vm)});
    return op_components(src, object(shifted(s, b)), 0, std::move(comps));
}

Morphism PermCategory::psi_left_inv(long a, const PermLabel& s) const {
    std::ostringstream key;
    key << "psiL " << mod(a, d_) << " " << s.m << " " << s.l;
    return section(psi_left(a, s), key.str());
}

Morphism PermCategory::psi_right_inv(const PermLabel& s, long b) const {
    std::ostringstream key;
    key << "psiR " << s.m << " " << s.l << " " << mod(b, d_);
    return section(psi_right(s, b), key.str());
}

Morphism PermCategory::coev(const PermLabel& s) const {
    MFPtr tgt = mf_tensor(object(s), object(dual(s)));
    const MFPtr& P = object(s);
    CycNumber c = (s.l % 2 == 0) ? 1 : -1;  // (-1)^{|S|+1}
    for (int k : s.set(d_)) c *= eta(k);
    VarMap to_z = rename({{0, 2}});
    auto quotient = [&](const MultiPoly& p) { return divide_exact(p - apply_varmap(p, to_z), X() - MultiPoly::var(2)); };
    Morphism f{unit(), tgt, 0, PolyMatrix(4, 2)};
    f.F(tgt->tensor_index(0, 1), 1) = c;
    f.F(tgt->tensor_index(1, 0), 1) = 1;
    f.F(tgt->tensor_index(0, 0), 0) = quotient(P->D(0, 1));
    f.F(tgt->tensor_index(1, 1), 0) = c * quotient(P->D(1, 0));
    if (!is_closed(f)) throw Error(ErrorKind::PreconditionViolated, "coev is not a chain map for " + s.str());
    return f;
}

OpPtr PermCategory::ev(const PermLabel& s) const {
    // G(f) = [y^{|S|-1}] (f mod prod_{k in S}(y - eta^k x)); components
    // (0,0) -> G, (0,1) -> G(d_1^S(y,z) f)/(x-z), the rest zero.
    // Normalised by the snake identities.
    MFPtr src = mf_tensor(object(dual(s)), object(s));
    MultiPoly D(1);
    for (int k : s.set(d_)) D *= Y() - eta(k) * X();
    MultiPoly d1_yz = apply_varmap(object(s)->D(0, 1), rename({{1, 2}, {0, 1}}));
    VarMap out = rename({{2, 1}});
    std::vector<Component> comps;
    PolyMap g00;
    g00.then_residue(D, 1, s.l).then_map(out);
    comps.push_back({0, src->tensor_index(0, 0), g00});
    PolyMap g01 = PolyMap::mul(d1_yz);
    g01.then_residue(D, 1, s.l).then_div(X() - MultiPoly::var(2)).then_map(out);
    comps.push_back({1, src->tensor_index(0, 1), g01});
    return op_components(src, unit(), 0, std::move(comps));
}

CycNumber PermCategory::qdim_left(const PermLabel& s) const {
    Morphism loop = materialize(op_compose(ev(s), op_matrix(coev(dual(s)))));
    return scalar_ratio(loop, mor_identity(unit()), opt_);
}

CycNumber PermCategory::qdim_spherical(const PermLabel& s) const {
    CycNumber q = quantum_int(d_, s.l + 1);
    CycNumber ql = qdim_left(s);
    if (q * q != ql * conjugate(ql))
        throw Error(ErrorKind::PreconditionViolated, "spherical dimension does not square to qdim_L qdim_R for " + s.str());
    return q;
}

std::vector<PermLabel> PermCategory::fusion_rule(const PermLabel& a, const PermLabel& b) const {
    std::vector<PermLabel> r;
    int hi = std::min(a.l + b.l, 2 * d_ - 4 - a.l - b.l);
    for (int nu = std::abs(a.l - b.l); nu <= hi; nu += 2) r.push_back(label(a.m + b.m + (a.l + b.l - nu) / 2, nu));
    return r;
}

std::map<PermLabel, std::size_t> PermCategory::fusion_by_hom(const PermLabel& a, const PermLabel& b) const {
    MFPtr T = mf_tensor(object(a), object(b));
    std::map<PermLabel, std::size_t> r;
    for (auto& nu : labels()) {
        std::size_t n = hom_space(object(nu), T, 0, opt_).dimension();
        if (n) r[nu] = n;
    }
    return r;
}

namespace {

Morphism normalise_first(Morphism f) {
    for (auto& e : f.F.e)
        if (!e.is_zero()) return mor_scale(e.terms().front().second.inverse(), f);
    return f;
}

}  // namespace

std::vector<FusionChannel> PermCategory::fusion_decompose(const PermLabel& a, const PermLabel& b) const {
    MFPtr T = mf_tensor(object(a), object(b));
    auto expected = fusion_rule(a, b);
    auto found = fusion_by_hom(a, b);
    std::map<PermLabel, std::size_t> want;
    for (auto& nu : expected) want[nu] += 1;
    if (want != found)
        throw Error(ErrorKind::PreconditionViolated,
                    "multiplicity-mismatch: hom spaces disagree with the fusion rule for " + a.str() + " (x) " + b.str());
    std::vector<FusionChannel> out;
    for (auto& nu : expected) {
        Morphism inc = normalise_first(hom_space(object(nu), T, 0, opt_).basis.at(0));
        // projection through the duality: P_a P_b -> P_a P_{-a} P_nu -> P_nu
        MFPtr Dnu = mf_tensor(object(dual(a)), object(nu));
        Morphism kappa = hom_space(object(b), Dnu, 0, opt_).basis.at(0);
        OpPtr step = op_tensor_right(object(a), op_matrix(kappa));
        MFPtr left = mf_tensor(mf_tensor(object(a), object(dual(a))), object(nu));
        OpPtr proj = op_compose({unitor_left(object(nu)), op_tensor_left(ev(dual(a)), object(nu)), op_reassociate(step->tgt(), left), step});
        CycNumber c = scalar_ratio(materialize(op_compose(proj, op_matrix(inc))), mor_identity(object(nu)), opt_);
        out.push_back({a, b, nu, inc, op_scale(c.inverse(), proj)});
    }
    return out;
}

OpPtr PermCategory::tau(long a, const PermLabel& s) const {
    OpPtr first = op_tensor_left(psi_left(a, s), charge(-a));
    OpPtr second = psi_right(shifted(s, a), -a);
    return op_scale(eta(a * (s.m + s.l)), op_compose(second, first));
}

OpPtr PermCategory::half_braiding(long a, const PermLabel& s) const {
    MFPtr aP = mf_tensor(charge(a), object(s));
    OpPtr pad = unitor_right_inv(aP);
    OpPtr cv = op_tensor_right(aP, op_matrix(coev(label(-a, 0))));
    MFPtr regroup = mf_tensor(mf_tensor(aP, charge(-a)), charge(a));
    OpPtr t = op_tensor_left(tau(a, s), charge(a));
    return op_compose({t, op_reassociate(cv->tgt(), regroup), cv, pad});
}

Morphism PermCategory::section(const OpPtr& f, const std::string& key) const {
    if (!key.empty()) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = sections_.find(key);
        if (it != sections_.end()) return it->second;
    }
    const MFPtr& P = f->tgt();
    HomSpace hs = hom_space(P, f->src(), 0, opt_);
    if (hs.dimension() != 1) {
        std::ostringstream os;
        os << "section: hom space from " << P->name << " into " << f->src()->name << " has dimension " << hs.dimension();
        throw Error(ErrorKind::AmbiguousDimension, os.str());
    }
    Morphism iota = hs.basis[0];
    CycNumber c = scalar_ratio(materialize(op_compose(f, op_matrix(iota))), mor_identity(P), opt_);
    iota = mor_scale(c.inverse(), iota);
    if (!key.empty()) {
        std::lock_guard<std::mutex> lk(mu_);
        sections_.emplace(key, iota);
    }
    return iota;
}

std::optional<PermLabel> PermCategory::label_of(const MFPtr& M) const {
    std::lock_guard<std::mutex> lk(mu_);
    for (auto& [key, P] : objects_)
        if (P == M) return PermLabel{key.first, key.second};
    return std::nullopt;
}

std::vector<std::pair<PermLabel, Morphism>> PermCategory::summands(const MFPtr& T) const {
    std::vector<PermLabel> candidates = labels();
    Leaves lv = leaves(T);
    std::vector<PermLabel> acc;
    bool known = true;
    for (std::size_t i = 0; i < lv.factors.size() && known; ++i) {
        auto s = label_of(lv.factors[i]);
        if (!s) {
            known = false;
        } else if (i == 0) {
            acc = {*s};
        } else {
            std::vector<PermLabel> next;
            for (auto& x : acc)
                for (auto& y : fusion_rule(x, *s)) next.push_back(y);
            acc = std::move(next);
        }
    }
    if (known) {
        std::sort(acc.begin(), acc.end());
        acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
        candidates = acc;
    }
    std::vector<std::pair<PermLabel, Morphism>> r;
    for (auto& nu : candidates)
        for (auto& b : hom_space(object(nu), T, 0, opt_).basis) r.emplace_back(nu, b);
    return r;
}

}  // namespace mfcat
