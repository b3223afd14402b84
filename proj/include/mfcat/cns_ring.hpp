#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mfcat/cyclofield.hpp"
#include "mfcat/perm_cat.hpp"

namespace mfcat {

// Simple [l, r] of the Neveu-Schwarz category: 0 <= l <= d-2, r mod 2d, l + r even.
struct CnsLabel {
    int l = 0;
    int r = 0;
    friend auto operator<=>(const CnsLabel&, const CnsLabel&) = default;
    friend bool operator==(const CnsLabel&, const CnsLabel&) = default;
    std::string str() const;
};

std::vector<CnsLabel> cns_simples(int d);  // ordered by l, then r
CnsLabel cns_label(int d, int l, long r);  // r reduced mod 2d; throws invalid-label
std::vector<CnsLabel> cns_fuse(int d, const CnsLabel& a, const CnsLabel& b);
CycNumber cns_qdim(int d, const CnsLabel& a);
CnsLabel cns_dual(int d, const CnsLabel& a);

// V_d: q(k) = eta^{k^2}, b(k,l) = eta^{2kl}.
struct VdData {
    int d;
    CycNumber q(long k) const;
    CycNumber b(long k, long l) const;
    // q~_{2d}(r) = exp(i pi r^2 / 2d)
    CycNumber q_2d(long r) const;
    // Associator scalar h(l,m,n) for 0 <= l,m,n < d.
    CycNumber h(int l, int m, int n) const;
};

struct AxiomResult {
    std::string axiom;
    bool pass = false;
    std::string detail;  // first counterexample, or a short summary
};

struct VdReport {
    int d = 0;
    std::vector<AxiomResult> axioms;
    std::vector<int> transparent;  // {k : b(k,l) = 1 for all l}
    bool pass() const;
};

VdReport vd_check(int d);

// [l, 2m+l] <-> P_{m;l}
PermLabel cns_to_perm(int d, const CnsLabel& a);
CnsLabel perm_to_cns(int d, const PermLabel& s);

struct IsoOptions {
    bool hom_space = true;  // also compare against hom-space fusion multiplicities
    // Replaces the default bijection, e.g. to run a negative control.
    std::function<PermLabel(const CnsLabel&)> map;
};

std::vector<AxiomResult> ring_iso_check(const PermCategory& C, const IsoOptions& opt = {});

}  // namespace mfcat
