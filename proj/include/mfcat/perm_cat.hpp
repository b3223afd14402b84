#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mfcat/mf_core.hpp"

namespace mfcat {

// P_{m;l} with S = {m, ..., m+l} in Z_d.
struct PermLabel {
    int m = 0, l = 0;

    std::vector<int> set(int d) const;
    std::string str() const;
    friend bool operator==(const PermLabel& a, const PermLabel& b) { return a.m == b.m && a.l == b.l; }
    friend bool operator!=(const PermLabel& a, const PermLabel& b) { return !(a == b); }
    friend bool operator<(const PermLabel& a, const PermLabel& b) { return a.m != b.m ? a.m < b.m : a.l < b.l; }
};

struct FusionChannel {
    PermLabel left, right, summand;
    Morphism inclusion;  // summand -> left (x) right
    OpPtr projection;    // left (x) right -> summand
};

inline long mod(long a, long n) { return ((a % n) + n) % n; }

class PermCategory {
public:
    explicit PermCategory(int d, SolveOptions opt = {});

    int d() const { return d_; }
    const SolveOptions& options() const { return opt_; }
    CycNumber eta(long k) const;  // eta^k, eta = exp(2 pi i / d)

    // m reduced mod d; throws invalid-label unless 0 <= l <= d-2.
    PermLabel label(long m, int l) const;
    std::vector<PermLabel> labels() const;
    PermLabel shifted(const PermLabel& s, long a) const { return label(s.m + a, s.l); }
    PermLabel dual(const PermLabel& s) const { return label(-s.m - s.l, s.l); }

    MFPtr object(const PermLabel& s) const;
    MFPtr unit() const { return object({0, 0}); }
    MFPtr charge(long a) const { return object(label(a, 0)); }  // the invertible object a = P_{a;0}

    // Representative of a(P_S)b: d_S with x -> eta^a x, y -> eta^{-b} y.
    MFPtr twist(const PermLabel& s, long a, long b) const;
    // s_{a,b}: P_{S-a-b} -> a(P_S)b, identity on the even summand and eta^{-|S|a} on the odd one.
    Morphism s_iso(const PermLabel& s, long a, long b) const;

    OpPtr unitor_left(const MFPtr& M) const;   // I (x) M -> M
    OpPtr unitor_right(const MFPtr& M) const;  // M (x) I -> M
    OpPtr psi_left(long a, const PermLabel& s) const;   // a (x) P_S -> P_{S+a}
    OpPtr psi_right(const PermLabel& s, long b) const;  // P_S (x) b -> P_{S+b}
    Morphism psi_left_inv(long a, const PermLabel& s) const;   // P_{S+a} -> a (x) P_S
    Morphism psi_right_inv(const PermLabel& s, long b) const;  // P_{S+b} -> P_S (x) b
    // Explicit chain inverses, exact on the nose: unitor o inverse = id.
    OpPtr unitor_left_inv(const MFPtr& M) const;   // M -> I (x) M
    OpPtr unitor_right_inv(const MFPtr& M) const;  // M -> M (x) I

    Morphism coev(const PermLabel& s) const;  // I -> P_S (x) P_{-S}
    OpPtr ev(const PermLabel& s) const;       // P_{-S} (x) P_S -> I

    CycNumber qdim_left(const PermLabel& s) const;
    CycNumber qdim_spherical(const PermLabel& s) const;

    // Closed form of the fusion rules.
    std::vector<PermLabel> fusion_rule(const PermLabel& a, const PermLabel& b) const;
    // Multiplicities of every simple in a (x) b from hom-space dimensions.
    std::map<PermLabel, std::size_t> fusion_by_hom(const PermLabel& a, const PermLabel& b) const;
    std::vector<FusionChannel> fusion_decompose(const PermLabel& a, const PermLabel& b) const;

    // tau_{a,S}: a (x) P_S (x) (-a) -> P_S, eta^{a(m+l)} psi^R (psi^L (x) 1).
    // The factor eta^{am} alone is not monoidal in P_S.
    OpPtr tau(long a, const PermLabel& s) const;
    // beta_{a,S}: a (x) P_S -> P_S (x) a, (tau (x) 1)(1 (x) 1 (x) coev_{-a}).
    OpPtr half_braiding(long a, const PermLabel& s) const;

    // iota: P -> f.src with f o iota ~ id_P, where P = f.tgt is simple.
    // A nonempty key caches the result.
    Morphism section(const OpPtr& f, const std::string& key = "") const;
    // Label of a cached simple object, if M is one.
    std::optional<PermLabel> label_of(const MFPtr& M) const;
    // One inclusion P_nu -> T for each simple summand (with multiplicity) of T.
    // Candidates come from the fusion rules when every tensor factor is a simple object.
    std::vector<std::pair<PermLabel, Morphism>> summands(const MFPtr& T) const;

private:
    int d_;
    SolveOptions opt_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, MFPtr> objects_;
    mutable std::map<std::string, Morphism> sections_;
};

// Twisting functor on outer variables: a(M)b as a factorisation and on operators.
MFPtr mf_twist(const MFPtr& M, long a, long b);
OpPtr op_twist(const OpPtr& f, long a, long b);
// M_a (x) N -> M (x) aN between binary tensors: the contraction variable is rescaled by eta^a.
OpPtr op_move_twist(const MFPtr& src, const MFPtr& tgt, long a);

}  // namespace mfcat
