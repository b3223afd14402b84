#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfcat/polyring.hpp"

namespace mfcat {

struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<MultiPoly> e;

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}
    MultiPoly& operator()(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    const MultiPoly& operator()(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const CycNumber& c, const PolyMatrix& a);

using PolyVec = std::vector<MultiPoly>;

class MatrixFactorisation;
using MFPtr = std::shared_ptr<const MatrixFactorisation>;

// A matrix bifactorisation of x_L^d - x_R^d over variables 0..right_var.
// Summands are indexed globally: even ones first, then odd ones.
class MatrixFactorisation {
public:
    int d = 0;
    int left_var = 0, right_var = 1;
    std::vector<int> inner_vars;
    std::size_t rank0 = 0, rank1 = 0;
    PolyMatrix D;             // odd differential on all summands, square of size rank()
    std::vector<int> shift;   // grading shifts, twice the usual units; variables have degree 2
    bool graded = false;
    std::string name;

    // Set for tensor products: summand g is left->summand src[g].first (x) right->summand src[g].second.
    MFPtr left, right;
    std::vector<std::pair<int, int>> src;
    std::vector<int> index_of;  // i * right->rank() + j -> summand

    std::size_t rank() const { return rank0 + rank1; }
    int parity(std::size_t s) const { return s < rank0 ? 0 : 1; }
    int nvars() const { return right_var + 1; }
    bool finite() const { return inner_vars.empty(); }
    MultiPoly potential() const;
    PolyMatrix d1() const;  // odd -> even
    PolyMatrix d0() const;  // even -> odd
    int tensor_index(int i, int j) const { return index_of[i * static_cast<int>(right->rank()) + j]; }
};

// Validates d1*d0 = d0*d1 = W exactly; throws not-a-factorisation otherwise.
// Grading shifts are inferred; objects admitting none are marked ungraded.
MFPtr make_mf(const PolyMatrix& d1, const PolyMatrix& d0, int left_var, int right_var, int d, std::string name = "");
// Same factorisation with every grading shift raised by k.
MFPtr mf_shift(const MFPtr& M, int k);
// M (x) N over the shared variable; N's variables are renumbered to follow M's.
MFPtr mf_tensor(const MFPtr& M, const MFPtr& N);
// Left-nested tensor product of a chain.
MFPtr mf_tensor_chain(const std::vector<MFPtr>& factors);

// Morphism with a finite-rank source, stored as an explicit matrix.
// Rows index target summands, columns source summands; entries use the
// target's variables, the source's right variable being identified with the target's.
struct Morphism {
    MFPtr src, tgt;
    int parity = 0;
    PolyMatrix F;

    // Component block between source parity i and target parity j.
    PolyMatrix component(int i, int j) const;
    bool is_zero() const { return F.is_zero(); }
};

// Polynomial transformations used as morphism components.
struct PolyStep {
    enum class Kind { Mul, Map, Residue, Div };
    Kind kind;
    MultiPoly p;   // Mul: factor; Residue: monic divisor; Div: exact divisor
    VarMap vm;     // Map
    int var = 0;   // Residue: variable
    int coeff = 0; // Residue: which power of var to read off
};

struct PolyMap {
    std::vector<PolyStep> steps;
    CycNumber scale = 1;

    static PolyMap mul(const MultiPoly& p);
    static PolyMap map(const VarMap& vm);
    PolyMap& then_mul(const MultiPoly& p);
    PolyMap& then_map(const VarMap& vm);
    PolyMap& then_residue(const MultiPoly& monic, int var, int coeff);
    PolyMap& then_div(const MultiPoly& q);
    PolyMap& scaled(const CycNumber& c);
    MultiPoly operator()(const MultiPoly& f) const;
};

// A morphism as a linear operator on coefficient vectors (source variables in,
// target variables out). Sources may carry inner variables.
class Op {
public:
    Op(MFPtr src, MFPtr tgt, int parity) : src_(std::move(src)), tgt_(std::move(tgt)), parity_(parity) {}
    virtual ~Op() = default;
    virtual PolyVec apply(const PolyVec& v) const = 0;
    const MFPtr& src() const { return src_; }
    const MFPtr& tgt() const { return tgt_; }
    int parity() const { return parity_; }
    std::string label;

protected:
    MFPtr src_, tgt_;
    int parity_;
};
using OpPtr = std::shared_ptr<const Op>;

struct Component {
    int t, s;
    PolyMap map;
};

OpPtr op_matrix(const Morphism& f);
OpPtr op_components(MFPtr src, MFPtr tgt, int parity, std::vector<Component> comps);
OpPtr op_identity(const MFPtr& M);
OpPtr op_differential(const MFPtr& M);
OpPtr op_compose(const OpPtr& g, const OpPtr& f);  // g after f
OpPtr op_compose(const std::vector<OpPtr>& chain);  // chain[0] applied last
OpPtr op_lincomb(const std::vector<std::pair<CycNumber, OpPtr>>& terms);
OpPtr op_scale(const CycNumber& c, const OpPtr& f);
OpPtr op_sub(const OpPtr& f, const OpPtr& g);
OpPtr op_tensor_left(const OpPtr& f, const MFPtr& N);   // f (x) 1_N
OpPtr op_tensor_right(const MFPtr& M, const OpPtr& g);  // 1_M (x) g, Koszul sign (-1)^{|g||i|}
OpPtr op_tensor(const OpPtr& f, const OpPtr& g);        // (f (x) 1)(1 (x) g)
OpPtr op_delta(const OpPtr& f);
// Identity between two bracketings of the same tensor chain (trivial associator).
OpPtr op_reassociate(const MFPtr& src, const MFPtr& tgt);

// Tensor factors of M in order, and for each summand of M its tuple of factor summands.
struct Leaves {
    std::vector<MFPtr> factors;
    std::vector<std::vector<int>> tuple;
};
Leaves leaves(const MFPtr& M);

// Explicit matrix of an operator with finite-rank source.
Morphism materialize(const OpPtr& f);
Morphism mor_identity(const MFPtr& M);
Morphism mor_compose(const Morphism& g, const Morphism& f);
Morphism mor_add(const Morphism& f, const Morphism& g);
Morphism mor_scale(const CycNumber& c, const Morphism& f);
Morphism delta(const Morphism& f);
bool is_closed(const Morphism& f);
// delta(f) applied to every source summand times every monomial of degree <= deg.
bool is_closed_bounded(const OpPtr& f, int deg);

struct SolveOptions {
    int degree_bound = -1;  // -1: default
    int degree = 0;         // hom_space: internal degree of the morphisms sought
    const std::atomic<bool>* cancel = nullptr;
};

struct HomotopyResult {
    bool found = false;
    int bound = 0;  // largest entry degree searched
    std::optional<Morphism> h;
};

HomotopyResult find_null_homotopy(const Morphism& f, const SolveOptions& opt = {});

struct HomSpace {
    std::vector<Morphism> basis;
    int bound = 0;
    std::size_t dimension() const { return basis.size(); }
};

// H^parity(Hom(M, N)) in internal degree opt.degree, restricted to entry
// degrees <= degree_bound; M must be finite. Throws unstable-dimension if
// raising the bound by d changes the answer.
HomSpace hom_space(const MFPtr& M, const MFPtr& N, int parity, const SolveOptions& opt = {});

struct HomotopyCertificate {
    bool equal = false;
    int bound = 0;
    std::optional<Morphism> witness;
};
HomotopyCertificate homotopy_equal(const Morphism& f, const Morphism& g, const SolveOptions& opt = {});

// c with f ~ c*g; throws not-proportional or precondition-violated (g null-homotopic).
CycNumber scalar_ratio(const Morphism& f, const Morphism& g, const SolveOptions& opt = {});

// Homogeneous components of f keyed by degree (same units as MatrixFactorisation::shift).
std::vector<std::pair<int, Morphism>> graded_parts(const Morphism& f);

std::string describe(const Morphism& f);

}  // namespace mfcat
