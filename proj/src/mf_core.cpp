#include "mfcat/mf_core.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "mfcat/sparse.hpp"

namespace mfcat {

bool PolyMatrix::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols != b.rows) throw Error(ErrorKind::ShapeMismatch, "polynomial matrix product");
    PolyMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error(ErrorKind::ShapeMismatch, "polynomial matrix sum");
    PolyMatrix r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error(ErrorKind::ShapeMismatch, "polynomial matrix difference");
    PolyMatrix r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

PolyMatrix operator*(const CycNumber& c, const PolyMatrix& a) {
    PolyMatrix r = a;
    for (auto& p : r.e) p *= c;
    return r;
}

namespace {

// Renumber variables by k positions (k may be negative).
MultiPoly shift_vars(const MultiPoly& p, int k) {
    if (k == 0 || p.is_zero()) return p;
    std::vector<MultiPoly::Term> out;
    out.reserve(p.size());
    for (auto& t : p.terms()) out.emplace_back(k > 0 ? t.first << (8 * k) : t.first >> (8 * -k), t.second);
    return MultiPoly::from_terms(std::move(out));
}

Monomial low_mask(int nvars) { return nvars >= 8 ? ~Monomial(0) : (Monomial(1) << (8 * nvars)) - 1; }

bool infer_shifts(const PolyMatrix& D, int d, std::vector<int>& shift) {
    std::size_t n = D.rows;
    shift.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t a = q.front();
            q.pop();
            for (std::size_t b = 0; b < n; ++b) {
                // D(t, s) of degree e forces shift[s] = shift[t] + 2e - d
                for (int dir = 0; dir < 2; ++dir) {
                    std::size_t t = dir == 0 ? a : b, s = dir == 0 ? b : a;
                    const MultiPoly& e = D(t, s);
                    if (e.is_zero()) continue;
                    if (!e.is_homogeneous()) return false;
                    int want_s = shift[t] + 2 * e.total_degree() - d;
                    int want_t = shift[s] - 2 * e.total_degree() + d;
                    std::size_t other = dir == 0 ? s : t;
                    int want = dir == 0 ? want_s : want_t;
                    if (other == a) {
                        if (want != shift[a]) return false;
                        continue;
                    }
                    if (!seen[other]) {
                        seen[other] = true;
                        shift[other] = want;
                        q.push(other);
                    } else if (shift[other] != want) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

void check_square(const MatrixFactorisation& M) {
    MultiPoly W = M.potential();
    PolyMatrix sq = M.D * M.D;
    for (std::size_t i = 0; i < sq.rows; ++i)
        for (std::size_t j = 0; j < sq.cols; ++j) {
            MultiPoly want = i == j ? W : MultiPoly();
            if (sq(i, j) != want) {
                std::ostringstream os;
                os << (M.name.empty() ? "matrix factorisation" : M.name) << ": entry (" << i << "," << j
                   << ") of d^2 has residual " << (sq(i, j) - want).str();
                throw Error(ErrorKind::NotAFactorisation, os.str());
            }
        }
}

bool same_mf(const MFPtr& a, const MFPtr& b) {
    if (a == b) return true;
    return a->d == b->d && a->right_var == b->right_var && a->rank0 == b->rank0 && a->rank1 == b->rank1 && a->D == b->D &&
           a->shift == b->shift;
}

void require_same(const MFPtr& a, const MFPtr& b, const char* what) {
    if (!same_mf(a, b))
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": " + a->name + " vs " + b->name);
}

PolyVec apply_matrix(const PolyMatrix& A, const PolyVec& v) {
    PolyVec out(A.rows);
    for (std::size_t t = 0; t < A.rows; ++t)
        for (std::size_t s = 0; s < A.cols; ++s)
            if (!A(t, s).is_zero() && !v[s].is_zero()) out[t] += A(t, s) * v[s];
    return out;
}

void check_cancel(const SolveOptions& opt) {
    if (opt.cancel && opt.cancel->load(std::memory_order_relaxed)) throw Error(ErrorKind::Cancelled, "solve interrupted");
}

}  // namespace

MultiPoly MatrixFactorisation::potential() const {
    return MultiPoly::monomial(mono_var(left_var, d), 1) - MultiPoly::monomial(mono_var(right_var, d), 1);
}

PolyMatrix MatrixFactorisation::d1() const {
    PolyMatrix r(rank0, rank1);
    for (std::size_t i = 0; i < rank0; ++i)
        for (std::size_t j = 0; j < rank1; ++j) r(i, j) = D(i, rank0 + j);
    return r;
}

PolyMatrix MatrixFactorisation::d0() const {
    PolyMatrix r(rank1, rank0);
    for (std::size_t i = 0; i < rank1; ++i)
        for (std::size_t j = 0; j < rank0; ++j) r(i, j) = D(rank0 + i, j);
    return r;
}

MFPtr make_mf(const PolyMatrix& d1, const PolyMatrix& d0, int left_var, int right_var, int d, std::string name) {
    if (left_var != 0 || right_var < 1 || right_var >= kMaxVars)
        throw Error(ErrorKind::VariableMismatch, "outer variables must be 0 and a later position");
    if (d1.rows != d0.cols || d1.cols != d0.rows) throw Error(ErrorKind::ShapeMismatch, "d1/d0 shapes incompatible");
    auto M = std::make_shared<MatrixFactorisation>();
    M->d = d;
    M->left_var = left_var;
    M->right_var = right_var;
    for (int v = left_var + 1; v < right_var; ++v) M->inner_vars.push_back(v);
    M->rank0 = d1.rows;
    M->rank1 = d1.cols;
    M->name = std::move(name);
    std::size_t n = M->rank();
    M->D = PolyMatrix(n, n);
    uint32_t allowed = (1u << (right_var + 1)) - 1;
    for (std::size_t i = 0; i < M->rank0; ++i)
        for (std::size_t j = 0; j < M->rank1; ++j) {
            M->D(i, M->rank0 + j) = d1(i, j);
            M->D(M->rank0 + j, i) = d0(j, i);
            if ((d1(i, j).var_mask() | d0(j, i).var_mask()) & ~allowed)
                throw Error(ErrorKind::VariableMismatch, "entry uses a variable outside the factorisation");
        }
    check_square(*M);
    M->graded = infer_shifts(M->D, d, M->shift);
    if (!M->graded) M->shift.assign(n, 0);
    return M;
}

MFPtr mf_shift(const MFPtr& M, int k) {
    if (!M->graded) throw Error(ErrorKind::PreconditionViolated, "cannot shift an ungraded factorisation");
    auto R = std::make_shared<MatrixFactorisation>(*M);
    for (int& q : R->shift) q += k;
    return R;
}

MFPtr mf_tensor(const MFPtr& M, const MFPtr& N) {
    if (M->d != N->d) throw Error(ErrorKind::VariableMismatch, "tensor of factorisations of different potentials");
    int k = M->right_var;
    if (k + N->right_var >= kMaxVars) throw Error(ErrorKind::VariableMismatch, "tensor product needs more than 8 variables");
    auto T = std::make_shared<MatrixFactorisation>();
    T->d = M->d;
    T->left_var = 0;
    T->right_var = k + N->right_var;
    for (int v = 1; v < T->right_var; ++v) T->inner_vars.push_back(v);
    T->left = M;
    T->right = N;
    T->name = "(" + M->name + " (x) " + N->name + ")";
    std::size_t rm = M->rank(), rn = N->rank();
    T->index_of.assign(rm * rn, -1);
    auto add = [&](int i, int j) {
        T->index_of[i * rn + j] = static_cast<int>(T->src.size());
        T->src.emplace_back(i, j);
    };
    for (int i = 0; i < static_cast<int>(M->rank0); ++i)
        for (int j = 0; j < static_cast<int>(N->rank0); ++j) add(i, j);
    for (int i = M->rank0; i < static_cast<int>(rm); ++i)
        for (int j = N->rank0; j < static_cast<int>(rn); ++j) add(i, j);
    T->rank0 = T->src.size();
    for (int i = M->rank0; i < static_cast<int>(rm); ++i)
        for (int j = 0; j < static_cast<int>(N->rank0); ++j) add(i, j);
    for (int i = 0; i < static_cast<int>(M->rank0); ++i)
        for (int j = N->rank0; j < static_cast<int>(rn); ++j) add(i, j);
    T->rank1 = T->src.size() - T->rank0;
    std::size_t n = T->rank();
    T->D = PolyMatrix(n, n);
    std::vector<MultiPoly> dn_shifted(N->D.e.size());
    for (std::size_t i = 0; i < dn_shifted.size(); ++i) dn_shifted[i] = shift_vars(N->D.e[i], k);
    for (std::size_t g = 0; g < n; ++g) {
        auto [i, j] = T->src[g];
        for (std::size_t i2 = 0; i2 < rm; ++i2)
            if (!M->D(i2, i).is_zero()) T->D(T->tensor_index(i2, j), g) += M->D(i2, i);
        CycNumber sign = M->parity(i) ? -1 : 1;
        for (std::size_t j2 = 0; j2 < rn; ++j2) {
            const MultiPoly& e = dn_shifted[j2 * rn + j];
            if (!e.is_zero()) T->D(T->tensor_index(i, j2), g) += sign * e;
        }
    }
    check_square(*T);
    T->graded = M->graded && N->graded;
    T->shift.assign(n, 0);
    if (T->graded)
        for (std::size_t g = 0; g < n; ++g) T->shift[g] = M->shift[T->src[g].first] + N->shift[T->src[g].second];
    return T;
}

MFPtr mf_tensor_chain(const std::vector<MFPtr>& factors) {
    if (factors.empty()) throw Error(ErrorKind::ShapeMismatch, "empty tensor chain");
    MFPtr r = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) r = mf_tensor(r, factors[i]);
    return r;
}

PolyMatrix Morphism::component(int i, int j) const {
    std::size_t s0 = i == 0 ? 0 : src->rank0, s1 = i == 0 ? src->rank0 : src->rank();
    std::size_t t0 = j == 0 ? 0 : tgt->rank0, t1 = j == 0 ? tgt->rank0 : tgt->rank();
    PolyMatrix r(t1 - t0, s1 - s0);
    for (std::size_t t = t0; t < t1; ++t)
        for (std::size_t s = s0; s < s1; ++s) r(t - t0, s - s0) = F(t, s);
    return r;
}

// ---- polynomial maps ----

PolyMap PolyMap::mul(const MultiPoly& p) { return PolyMap().then_mul(p); }
PolyMap PolyMap::map(const VarMap& vm) { return PolyMap().then_map(vm); }

PolyMap& PolyMap::then_mul(const MultiPoly& p) {
    steps.push_back({PolyStep::Kind::Mul, p, VarMap(), 0, 0});
    return *this;
}
PolyMap& PolyMap::then_map(const VarMap& vm) {
    steps.push_back({PolyStep::Kind::Map, MultiPoly(), vm, 0, 0});
    return *this;
}
PolyMap& PolyMap::then_residue(const MultiPoly& monic, int var, int coeff) {
    steps.push_back({PolyStep::Kind::Residue, monic, VarMap(), var, coeff});
    return *this;
}
PolyMap& PolyMap::then_div(const MultiPoly& q) {
    steps.push_back({PolyStep::Kind::Div, q, VarMap(), 0, 0});
    return *this;
}
PolyMap& PolyMap::scaled(const CycNumber& c) {
    scale *= c;
    return *this;
}

MultiPoly PolyMap::operator()(const MultiPoly& f) const {
    MultiPoly r = f;
    for (auto& st : steps) {
        if (r.is_zero()) return r;
        switch (st.kind) {
            case PolyStep::Kind::Mul: r = r * st.p; break;
            case PolyStep::Kind::Map: r = apply_varmap(r, st.vm); break;
            case PolyStep::Kind::Residue: r = coeff_in(rem_monic(r, st.p, st.var), st.var, st.coeff); break;
            case PolyStep::Kind::Div: r = divide_exact(r, st.p); break;
        }
    }
    r *= scale;
    return r;
}

// ---- operators ----

namespace {

class MatrixOp : public Op {
public:
    explicit MatrixOp(Morphism f) : Op(f.src, f.tgt, f.parity), f_(std::move(f)) {
        if (!src_->finite()) throw Error(ErrorKind::PreconditionViolated, "matrix operator needs a finite-rank source");
        frame_.set(src_->right_var, tgt_->right_var);
    }
    PolyVec apply(const PolyVec& v) const override {
        PolyVec w(v.size());
        for (std::size_t s = 0; s < v.size(); ++s) w[s] = apply_varmap(v[s], frame_);
        return apply_matrix(f_.F, w);
    }

private:
    Morphism f_;
    VarMap frame_;
};

class ComponentOp : public Op {
public:
    ComponentOp(MFPtr src, MFPtr tgt, int parity, std::vector<Component> comps)
        : Op(std::move(src), std::move(tgt), parity), comps_(std::move(comps)) {
        for (auto& c : comps_) {
            if (c.t < 0 || c.t >= static_cast<int>(tgt_->rank()) || c.s < 0 || c.s >= static_cast<int>(src_->rank()))
                throw Error(ErrorKind::ShapeMismatch, "component index out of range");
            if ((tgt_->parity(c.t) + src_->parity(c.s) + parity_) % 2 != 0)
                throw Error(ErrorKind::ParityMismatch, "component between summands of the wrong parity");
        }
    }
    PolyVec apply(const PolyVec& v) const override {
        PolyVec out(tgt_->rank());
        for (auto& c : comps_)
            if (!v[c.s].is_zero()) out[c.t] += c.map(v[c.s]);
        return out;
    }

private:
    std::vector<Component> comps_;
};

class IdentityOp : public Op {
public:
    explicit IdentityOp(const MFPtr& M) : Op(M, M, 0) {}
    PolyVec apply(const PolyVec& v) const override { return v; }
};

class DifferentialOp : public Op {
public:
    explicit DifferentialOp(const MFPtr& M) : Op(M, M, 1) {}
    PolyVec apply(const PolyVec& v) const override { return apply_matrix(src_->D, v); }
};

class ComposeOp : public Op {
public:
    ComposeOp(OpPtr g, OpPtr f) : Op(f->src(), g->tgt(), (f->parity() + g->parity()) % 2), g_(std::move(g)), f_(std::move(f)) {
        require_same(f_->tgt(), g_->src(), "composition");
    }
    PolyVec apply(const PolyVec& v) const override { return g_->apply(f_->apply(v)); }

private:
    OpPtr g_, f_;
};

class LinCombOp : public Op {
public:
    explicit LinCombOp(std::vector<std::pair<CycNumber, OpPtr>> terms)
        : Op(terms.at(0).second->src(), terms.at(0).second->tgt(), terms.at(0).second->parity()), terms_(std::move(terms)) {
        for (auto& [c, f] : terms_) {
            require_same(f->src(), src_, "linear combination");
            require_same(f->tgt(), tgt_, "linear combination");
            if (f->parity() != parity_) throw Error(ErrorKind::ParityMismatch, "linear combination of mixed parity");
        }
    }
    PolyVec apply(const PolyVec& v) const override {
        PolyVec out(tgt_->rank());
        for (auto& [c, f] : terms_) {
            if (c.is_zero()) continue;
            PolyVec w = f->apply(v);
            for (std::size_t t = 0; t < w.size(); ++t) out[t].add_scaled(w[t], c);
        }
        return out;
    }

private:
    std::vector<std::pair<CycNumber, OpPtr>> terms_;
};

class TensorLeftOp : public Op {
public:
    TensorLeftOp(OpPtr f, const MFPtr& N)
        : Op(mf_tensor(f->src(), N), mf_tensor(f->tgt(), N), f->parity()), f_(std::move(f)) {}
    PolyVec apply(const PolyVec& v) const override {
        const auto& M = f_->src();
        int k = M->right_var, k2 = f_->tgt()->right_var;
        Monomial lo = low_mask(k + 1);
        PolyVec out(tgt_->rank());
        for (std::size_t g = 0; g < v.size(); ++g) {
            if (v[g].is_zero()) continue;
            auto [i, j] = src_->src[g];
            std::map<Monomial, std::vector<MultiPoly::Term>> groups;
            for (auto& t : v[g].terms()) groups[t.first & ~lo].emplace_back(t.first & lo, t.second);
            for (auto& [hi, terms] : groups) {
                PolyVec u(M->rank());
                u[i] = MultiPoly::from_terms(std::move(terms));
                PolyVec w = f_->apply(u);
                Monomial moved = k2 >= k ? hi << (8 * (k2 - k)) : hi >> (8 * (k - k2));
                for (std::size_t i2 = 0; i2 < w.size(); ++i2)
                    if (!w[i2].is_zero()) out[tgt_->tensor_index(static_cast<int>(i2), j)].add_scaled(w[i2], 1, moved);
            }
        }
        return out;
    }

private:
    OpPtr f_;
};

class TensorRightOp : public Op {
public:
    TensorRightOp(const MFPtr& M, OpPtr g)
        : Op(mf_tensor(M, g->src()), mf_tensor(M, g->tgt()), g->parity()), g_(std::move(g)), M_(M) {}
    PolyVec apply(const PolyVec& v) const override {
        int k = M_->right_var;
        Monomial lo = low_mask(k);
        PolyVec out(tgt_->rank());
        for (std::size_t gi = 0; gi < v.size(); ++gi) {
            if (v[gi].is_zero()) continue;
            auto [i, j] = src_->src[gi];
            CycNumber sign = (g_->parity() && M_->parity(i)) ? -1 : 1;
            std::map<Monomial, std::vector<MultiPoly::Term>> groups;
            for (auto& t : v[gi].terms()) groups[t.first & lo].emplace_back(t.first >> (8 * k), t.second);
            for (auto& [low, terms] : groups) {
                PolyVec u(g_->src()->rank());
                u[j] = MultiPoly::from_terms(std::move(terms));
                PolyVec w = g_->apply(u);
                for (std::size_t j2 = 0; j2 < w.size(); ++j2)
                    if (!w[j2].is_zero())
                        out[tgt_->tensor_index(i, static_cast<int>(j2))].add_scaled(shift_vars(w[j2], k), sign, low);
            }
        }
        return out;
    }

private:
    OpPtr g_;
    MFPtr M_;
};

}  // namespace

OpPtr op_matrix(const Morphism& f) { return std::make_shared<MatrixOp>(f); }

OpPtr op_components(MFPtr src, MFPtr tgt, int parity, std::vector<Component> comps) {
    return std::make_shared<ComponentOp>(std::move(src), std::move(tgt), parity, std::move(comps));
}

OpPtr op_identity(const MFPtr& M) { return std::make_shared<IdentityOp>(M); }
OpPtr op_differential(const MFPtr& M) { return std::make_shared<DifferentialOp>(M); }
OpPtr op_compose(const OpPtr& g, const OpPtr& f) { return std::make_shared<ComposeOp>(g, f); }

OpPtr op_compose(const std::vector<OpPtr>& chain) {
    if (chain.empty()) throw Error(ErrorKind::ShapeMismatch, "empty composition");
    OpPtr r = chain.back();
    for (std::size_t i = chain.size() - 1; i-- > 0;) r = op_compose(chain[i], r);
    return r;
}

OpPtr op_lincomb(const std::vector<std::pair<CycNumber, OpPtr>>& terms) { return std::make_shared<LinCombOp>(terms); }
OpPtr op_scale(const CycNumber& c, const OpPtr& f) { return op_lincomb({{c, f}}); }
OpPtr op_sub(const OpPtr& f, const OpPtr& g) { return op_lincomb({{1, f}, {-1, g}}); }
OpPtr op_tensor_left(const OpPtr& f, const MFPtr& N) { return std::make_shared<TensorLeftOp>(f, N); }
OpPtr op_tensor_right(const MFPtr& M, const OpPtr& g) { return std::make_shared<TensorRightOp>(M, g); }

OpPtr op_tensor(const OpPtr& f, const OpPtr& g) {
    return op_compose(op_tensor_left(f, g->tgt()), op_tensor_right(f->src(), g));
}

OpPtr op_delta(const OpPtr& f) {
    CycNumber sign = f->parity() ? 1 : -1;
    return op_lincomb({{1, op_compose(op_differential(f->tgt()), f)}, {sign, op_compose(f, op_differential(f->src()))}});
}

Leaves leaves(const MFPtr& M) {
    Leaves r;
    if (!M->left) {
        r.factors.push_back(M);
        for (std::size_t g = 0; g < M->rank(); ++g) r.tuple.push_back({static_cast<int>(g)});
        return r;
    }
    Leaves a = leaves(M->left), b = leaves(M->right);
    r.factors = a.factors;
    r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
    for (auto [i, j] : M->src) {
        auto t = a.tuple[i];
        t.insert(t.end(), b.tuple[j].begin(), b.tuple[j].end());
        r.tuple.push_back(std::move(t));
    }
    return r;
}

OpPtr op_reassociate(const MFPtr& src, const MFPtr& tgt) {
    Leaves a = leaves(src), b = leaves(tgt);
    if (a.factors.size() != b.factors.size() || src->right_var != tgt->right_var)
        throw Error(ErrorKind::ShapeMismatch, "reassociation between different tensor chains");
    for (std::size_t k = 0; k < a.factors.size(); ++k) require_same(a.factors[k], b.factors[k], "reassociation");
    std::map<std::vector<int>, int> where;
    for (std::size_t g = 0; g < b.tuple.size(); ++g) where[b.tuple[g]] = static_cast<int>(g);
    std::vector<Component> comps;
    for (std::size_t g = 0; g < a.tuple.size(); ++g) comps.push_back({where.at(a.tuple[g]), static_cast<int>(g), PolyMap()});
    return op_components(src, tgt, 0, std::move(comps));
}

// ---- explicit morphisms ----

Morphism materialize(const OpPtr& f) {
    if (!f->src()->finite()) throw Error(ErrorKind::PreconditionViolated, "materialize needs a finite-rank source");
    Morphism m{f->src(), f->tgt(), f->parity(), PolyMatrix(f->tgt()->rank(), f->src()->rank())};
    for (std::size_t s = 0; s < f->src()->rank(); ++s) {
        PolyVec u(f->src()->rank());
        u[s] = 1;
        PolyVec w = f->apply(u);
        for (std::size_t t = 0; t < w.size(); ++t) m.F(t, s) = std::move(w[t]);
    }
    return m;
}

Morphism mor_identity(const MFPtr& M) { return materialize(op_identity(M)); }

Morphism mor_compose(const Morphism& g, const Morphism& f) {
    return materialize(op_compose(op_matrix(g), op_matrix(f)));
}

Morphism mor_add(const Morphism& f, const Morphism& g) {
    require_same(f.src, g.src, "sum");
    require_same(f.tgt, g.tgt, "sum");
    if (f.parity != g.parity) throw Error(ErrorKind::ParityMismatch, "sum of morphisms of different parity");
    Morphism r = f;
    r.F = f.F + g.F;
    return r;
}

Morphism mor_scale(const CycNumber& c, const Morphism& f) {
    Morphism r = f;
    r.F = c * f.F;
    return r;
}

Morphism delta(const Morphism& f) {
    VarMap frame;
    frame.set(f.src->right_var, f.tgt->right_var);
    PolyMatrix DM(f.src->rank(), f.src->rank());
    for (std::size_t i = 0; i < DM.e.size(); ++i) DM.e[i] = apply_varmap(f.src->D.e[i], frame);
    CycNumber sign = f.parity ? -1 : 1;
    Morphism r{f.src, f.tgt, 1 - f.parity, f.tgt->D * f.F - sign * (f.F * DM)};
    return r;
}

bool is_closed(const Morphism& f) { return delta(f).is_zero(); }

bool is_closed_bounded(const OpPtr& f, int deg) {
    OpPtr df = op_delta(f);
    std::vector<int> vars;
    for (int v = 0; v <= f->src()->right_var; ++v) vars.push_back(v);
    for (std::size_t s = 0; s < f->src()->rank(); ++s)
        for (int k = 0; k <= deg; ++k)
            for (Monomial m : monomials_of_degree(vars, k)) {
                PolyVec u(f->src()->rank());
                u[s] = MultiPoly::monomial(m, 1);
                PolyVec w = df->apply(u);
                for (auto& p : w)
                    if (!p.is_zero()) return false;
            }
    return true;
}

std::vector<std::pair<int, Morphism>> graded_parts(const Morphism& f) {
    if (!f.src->graded || !f.tgt->graded) throw Error(ErrorKind::PreconditionViolated, "graded_parts on ungraded objects");
    std::map<int, Morphism> parts;
    for (std::size_t t = 0; t < f.F.rows; ++t)
        for (std::size_t s = 0; s < f.F.cols; ++s)
            for (auto& term : f.F(t, s).terms()) {
                int D = 2 * mono_degree(term.first) - f.src->shift[s] + f.tgt->shift[t];
                auto it = parts.find(D);
                if (it == parts.end())
                    it = parts.emplace(D, Morphism{f.src, f.tgt, f.parity, PolyMatrix(f.F.rows, f.F.cols)}).first;
                it->second.F(t, s).add_scaled(MultiPoly(1), term.second, term.first);
            }
    return {parts.begin(), parts.end()};
}

std::string describe(const Morphism& f) {
    std::ostringstream os;
    os << "[" << f.src->name << " -> " << f.tgt->name << ", parity " << f.parity << "]";
    for (std::size_t t = 0; t < f.F.rows; ++t)
        for (std::size_t s = 0; s < f.F.cols; ++s)
            if (!f.F(t, s).is_zero()) os << "\n  (" << t << "," << s << "): " << f.F(t, s).str();
    return os.str();
}

// ---- linear algebra on morphism spaces ----

namespace {

struct EntryKey {
    Monomial m;
    uint32_t ts;  // t << 16 | s
    bool operator==(const EntryKey& o) const { return m == o.m && ts == o.ts; }
};

struct EntryKeyHash {
    std::size_t operator()(const EntryKey& k) const { return std::hash<uint64_t>()(k.m * 0x9E3779B97F4A7C15ull ^ k.ts); }
};

// Coordinates of a space of morphisms M -> N of one parity.
struct Block {
    std::vector<EntryKey> keys;
    std::unordered_map<EntryKey, uint32_t, EntryKeyHash> index;
    bool lazy = false;

    uint32_t at(const EntryKey& k) {
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        if (!lazy) throw Error(ErrorKind::PreconditionViolated, "morphism entry outside its graded block");
        uint32_t i = static_cast<uint32_t>(keys.size());
        keys.push_back(k);
        index.emplace(k, i);
        return i;
    }
    void add(const EntryKey& k) {
        index.emplace(k, static_cast<uint32_t>(keys.size()));
        keys.push_back(k);
    }
};

std::vector<int> target_vars(const MatrixFactorisation& N) {
    std::vector<int> v;
    for (int i = 0; i <= N.right_var; ++i) v.push_back(i);
    return v;
}

// Graded block: entries (t, s) of the given parity with 2*deg = D + shift_M[s] - shift_N[t].
Block graded_block(const MatrixFactorisation& M, const MatrixFactorisation& N, int parity, int D, int max_deg = 1 << 20) {
    Block b;
    auto vars = target_vars(N);
    for (std::size_t s = 0; s < M.rank(); ++s)
        for (std::size_t t = 0; t < N.rank(); ++t) {
            if ((M.parity(s) + N.parity(t) + parity) % 2 != 0) continue;
            int e = D + M.shift[s] - N.shift[t];
            if (e < 0 || e % 2 != 0 || e / 2 > max_deg) continue;
            for (Monomial m : monomials_of_degree(vars, e / 2)) b.add({m, static_cast<uint32_t>(t << 16 | s)});
        }
    return b;
}

Block bounded_block(const MatrixFactorisation& M, const MatrixFactorisation& N, int parity, int bound) {
    Block b;
    auto vars = target_vars(N);
    for (std::size_t s = 0; s < M.rank(); ++s)
        for (std::size_t t = 0; t < N.rank(); ++t) {
            if ((M.parity(s) + N.parity(t) + parity) % 2 != 0) continue;
            for (int e = 0; e <= bound; ++e)
                for (Monomial m : monomials_of_degree(vars, e)) b.add({m, static_cast<uint32_t>(t << 16 | s)});
        }
    return b;
}

// delta restricted to morphisms M -> N with one parity; source differential in target variables.
struct DeltaMap {
    const MatrixFactorisation& M;
    const MatrixFactorisation& N;
    int parity;  // parity of the inputs
    PolyMatrix DM;

    DeltaMap(const MatrixFactorisation& m, const MatrixFactorisation& n, int p) : M(m), N(n), parity(p), DM(m.rank(), m.rank()) {
        VarMap frame;
        frame.set(M.right_var, N.right_var);
        for (std::size_t i = 0; i < DM.e.size(); ++i) DM.e[i] = apply_varmap(M.D.e[i], frame);
    }

    // delta of the single-entry morphism m at (t, s), in coordinates of `out`.
    SparseVec image(const EntryKey& k, Block& out) const {
        std::size_t t = k.ts >> 16, s = k.ts & 0xffff;
        std::unordered_map<EntryKey, CycNumber, EntryKeyHash> acc;
        for (std::size_t t2 = 0; t2 < N.rank(); ++t2)
            for (auto& term : N.D(t2, t).terms()) acc[{k.m + term.first, static_cast<uint32_t>(t2 << 16 | s)}] += term.second;
        CycNumber sign = parity ? 1 : -1;  // -(-1)^{|h|}
        for (std::size_t s2 = 0; s2 < M.rank(); ++s2)
            for (auto& term : DM(s, s2).terms()) acc[{k.m + term.first, static_cast<uint32_t>(t << 16 | s2)}] += sign * term.second;
        SparseVec v;
        for (auto& [key, c] : acc)
            if (!c.is_zero()) v.emplace_back(out.at(key), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }
};

SparseVec to_coords(const Morphism& f, Block& b) {
    SparseVec v;
    for (std::size_t t = 0; t < f.F.rows; ++t)
        for (std::size_t s = 0; s < f.F.cols; ++s)
            for (auto& term : f.F(t, s).terms()) v.emplace_back(b.at({term.first, static_cast<uint32_t>(t << 16 | s)}), term.second);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
    return v;
}

Morphism from_coords(const SparseVec& v, const Block& b, const MFPtr& M, const MFPtr& N, int parity) {
    Morphism f{M, N, parity, PolyMatrix(N->rank(), M->rank())};
    for (auto& [i, c] : v) {
        const EntryKey& k = b.keys[i];
        f.F(k.ts >> 16, k.ts & 0xffff).add_scaled(MultiPoly(1), c, k.m);
    }
    return f;
}

// Echelon of delta(C_{D-d}) inside C_D, tracking preimages.
Echelon image_echelon(const MatrixFactorisation& M, const MatrixFactorisation& N, int parity, const Block& pre, Block& post,
                      bool track, const SolveOptions& opt) {
    DeltaMap dm(M, N, 1 - parity);
    Echelon e;
    for (uint32_t j = 0; j < pre.keys.size(); ++j) {
        check_cancel(opt);
        SparseVec tr;
        if (track) tr.emplace_back(j, CycNumber(1));
        e.insert(dm.image(pre.keys[j], post), tr);
    }
    return e;
}

int max_entry_degree(const Block& b) {
    int m = 0;
    for (auto& k : b.keys) m = std::max(m, mono_degree(k.m));
    return m;
}

void require_finite_pair(const Morphism& f) {
    if (!f.src->finite()) throw Error(ErrorKind::PreconditionViolated, "solver needs a finite-rank source");
}

}  // namespace

HomotopyResult find_null_homotopy(const Morphism& f, const SolveOptions& opt) {
    require_finite_pair(f);
    if (!is_closed(f)) throw Error(ErrorKind::PreconditionViolated, "find_null_homotopy: morphism is not closed");
    HomotopyResult res;
    const auto& M = *f.src;
    const auto& N = *f.tgt;
    int hp = 1 - f.parity;
    Morphism h{f.src, f.tgt, hp, PolyMatrix(N.rank(), M.rank())};
    if (M.graded && N.graded) {
        for (auto& [D, part] : graded_parts(f)) {
            Block pre = graded_block(M, N, hp, D - M.d, opt.degree_bound >= 0 ? opt.degree_bound : 1 << 20);
            Block post = graded_block(M, N, f.parity, D);
            res.bound = std::max(res.bound, max_entry_degree(pre));
            Echelon e = image_echelon(M, N, f.parity, pre, post, true, opt);
            auto r = e.reduce(to_coords(part, post));
            if (!r.rest.empty()) return res;
            for (auto& x : r.track) x.second = -x.second;
            h = mor_add(h, from_coords(r.track, pre, f.src, f.tgt, hp));
        }
    } else {
        int bound = opt.degree_bound >= 0 ? opt.degree_bound : std::max(0, f.F.e.empty() ? 0 : [&] {
            int m = 0;
            for (auto& p : f.F.e) m = std::max(m, p.total_degree());
            return m;
        }()) + 2 * M.d;
        Block pre = bounded_block(M, N, hp, bound);
        Block post;
        post.lazy = true;
        res.bound = bound;
        Echelon e = image_echelon(M, N, f.parity, pre, post, true, opt);
        auto r = e.reduce(to_coords(f, post));
        if (!r.rest.empty()) return res;
        for (auto& x : r.track) x.second = -x.second;
        h = from_coords(r.track, pre, f.src, f.tgt, hp);
    }
    if (!(delta(h).F == f.F)) throw Error(ErrorKind::PreconditionViolated, "homotopy failed re-verification");
    res.found = true;
    res.h = std::move(h);
    return res;
}

namespace {

// Closed morphisms with entries of degree <= B, modulo images of entries of degree <= B + d.
std::vector<Morphism> homology_in_degree(const MFPtr& Mp, const MFPtr& Np, int parity, int D, int B, const SolveOptions& opt) {
    const auto& M = *Mp;
    const auto& N = *Np;
    Block here = graded_block(M, N, parity, D);
    if (here.keys.empty()) return {};
    Block next = graded_block(M, N, 1 - parity, D + M.d);
    DeltaMap dm(M, N, parity);
    Echelon ker_e;
    std::vector<SparseVec> kernel;
    for (uint32_t j = 0; j < here.keys.size(); ++j) {
        check_cancel(opt);
        if (mono_degree(here.keys[j].m) > B) continue;
        auto r = ker_e.reduce(dm.image(here.keys[j], next), {{j, CycNumber(1)}});
        if (r.rest.empty()) kernel.push_back(std::move(r.track));
        else ker_e.insert_reduced(std::move(r));
    }
    if (kernel.empty()) return {};
    Block prev = graded_block(M, N, 1 - parity, D - M.d, B + M.d);
    Echelon im = image_echelon(M, N, parity, prev, here, false, opt);
    if (im.rank() > kernel.size()) throw Error(ErrorKind::PreconditionViolated, "image larger than kernel: delta^2 != 0");
    std::vector<Morphism> reps;
    if (im.rank() == kernel.size()) return reps;
    for (auto& k : kernel) {
        auto r = im.reduce(k);
        if (r.rest.empty()) continue;
        im.insert_reduced(std::move(r));
        reps.push_back(from_coords(k, here, Mp, Np, parity));
    }
    return reps;
}

}  // namespace

HomSpace hom_space(const MFPtr& M, const MFPtr& N, int parity, const SolveOptions& opt) {
    if (!M->finite()) throw Error(ErrorKind::PreconditionViolated, "hom_space needs a finite-rank source");
    if (M->d != N->d) throw Error(ErrorKind::VariableMismatch, "hom_space between different potentials");
    if (!M->graded || !N->graded) throw Error(ErrorKind::PreconditionViolated, "hom_space needs graded objects");
    int B = opt.degree_bound >= 0 ? opt.degree_bound : M->d;
    HomSpace hs;
    hs.bound = B;
    hs.basis = homology_in_degree(M, N, parity, opt.degree, B, opt);
    std::size_t wide = homology_in_degree(M, N, parity, opt.degree, B + M->d, opt).size();
    if (wide != hs.basis.size()) {
        std::ostringstream os;
        os << "hom_space(" << M->name << ", " << N->name << "): dimension " << hs.basis.size() << " at bound " << B << " but "
           << wide << " at bound " << B + M->d;
        throw Error(ErrorKind::UnstableDimension, os.str());
    }
    return hs;
}

HomotopyCertificate homotopy_equal(const Morphism& f, const Morphism& g, const SolveOptions& opt) {
    Morphism diff = mor_add(f, mor_scale(-1, g));
    auto r = find_null_homotopy(diff, opt);
    return {r.found, r.bound, r.h};
}

CycNumber scalar_ratio(const Morphism& f, const Morphism& g, const SolveOptions& opt) {
    require_finite_pair(f);
    require_same(f.src, g.src, "scalar_ratio");
    require_same(f.tgt, g.tgt, "scalar_ratio");
    if (f.parity != g.parity) throw Error(ErrorKind::ParityMismatch, "scalar_ratio");
    if (!is_closed(f) || !is_closed(g)) throw Error(ErrorKind::PreconditionViolated, "scalar_ratio: morphisms must be closed");
    if (!f.src->graded || !f.tgt->graded) throw Error(ErrorKind::PreconditionViolated, "scalar_ratio needs graded objects");
    const auto& M = *f.src;
    const auto& N = *f.tgt;
    std::map<int, std::pair<Morphism, Morphism>> parts;
    Morphism zero{f.src, f.tgt, f.parity, PolyMatrix(N.rank(), M.rank())};
    for (auto& [D, p] : graded_parts(f)) parts.emplace(D, std::make_pair(p, zero)).first->second.first = p;
    for (auto& [D, p] : graded_parts(g)) parts.emplace(D, std::make_pair(zero, p)).first->second.second = p;
    std::optional<CycNumber> c;
    std::vector<std::pair<SparseVec, SparseVec>> rems;
    for (auto& [D, fg] : parts) {
        Block pre = graded_block(M, N, 1 - f.parity, D - M.d);
        Block post = graded_block(M, N, f.parity, D);
        Echelon e = image_echelon(M, N, f.parity, pre, post, false, opt);
        SparseVec rf = e.reduce(to_coords(fg.first, post)).rest;
        SparseVec rg = e.reduce(to_coords(fg.second, post)).rest;
        if (!c && !rg.empty()) {
            CycNumber fv = 0;
            for (auto& [i, x] : rf)
                if (i == rg.front().first) fv = x;
            c = fv / rg.front().second;
        }
        rems.emplace_back(std::move(rf), std::move(rg));
    }
    if (!c) throw Error(ErrorKind::PreconditionViolated, "scalar_ratio: reference morphism is null-homotopic");
    for (auto& [rf, rg] : rems)
        if (!sparse_axpy(rf, -*c, rg).empty()) throw Error(ErrorKind::NotProportional, "morphisms are not proportional in homotopy");
    if (!homotopy_equal(f, mor_scale(*c, g), opt).equal)
        throw Error(ErrorKind::PreconditionViolated, "scalar_ratio failed re-verification");
    return *c;
}

}  // namespace mfcat
