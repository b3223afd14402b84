#pragma once

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "mfcat/cyclofield.hpp"

namespace mfcat {

// Non-crossing perfect matching between `bottom` points and `top` points.
// Boundary index i < bottom is bottom point i (left to right), bottom + j is top point j.
struct KauffmanDiagram {
    int bottom = 0;
    int top = 0;
    std::vector<int> match;  // involution without fixed points

    int charge() const { return (top - bottom) / 2; }  // cups minus caps
    int caps() const;                                    // arcs with both ends at the bottom
    int cups() const;
    std::string str() const;

    static KauffmanDiagram identity(int n);
    static KauffmanDiagram cap();  // 2 -> 0
    static KauffmanDiagram cup();  // 0 -> 2
    // e_i in TL_n, 1 <= i <= n-1
    static KauffmanDiagram e(int n, int i);

    bool is_planar() const;
    friend auto operator<=>(const KauffmanDiagram&, const KauffmanDiagram&) = default;
    friend bool operator==(const KauffmanDiagram&, const KauffmanDiagram&) = default;
};

long catalan(int k);

// All diagrams bottom -> top, in a fixed order. Memoised.
const std::vector<KauffmanDiagram>& enumerate_diagrams(int bottom, int top);

// Glue g (below) under f (above); returns the diagram and the number of closed loops.
std::pair<KauffmanDiagram, int> glue(const KauffmanDiagram& f, const KauffmanDiagram& g);
KauffmanDiagram juxtapose(const KauffmanDiagram& f, const KauffmanDiagram& g);
// Closed loops after joining top j to bottom j for every j.
int closure_loops(const KauffmanDiagram& f);

struct TLElement {
    int bottom = 0;
    int top = 0;
    std::map<KauffmanDiagram, CycNumber> terms;

    static TLElement of(const KauffmanDiagram& D, const CycNumber& c = 1);
    static TLElement zero(int bottom, int top) { return TLElement{bottom, top, {}}; }

    bool is_zero() const { return terms.empty(); }
    CycNumber coeff(const KauffmanDiagram& D) const;
    void add(const KauffmanDiagram& D, const CycNumber& c);

    TLElement& operator+=(const TLElement& o);
    TLElement& operator-=(const TLElement& o);
    TLElement& operator*=(const CycNumber& c);
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
    friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
    friend TLElement operator*(const CycNumber& c, TLElement a) { return a *= c; }
    friend bool operator==(const TLElement& a, const TLElement& b);
};

// TL calculus at loop value kappa = zeta + zeta^{-1}, zeta = exp(i pi / d).
class TemperleyLieb {
public:
    explicit TemperleyLieb(int d);

    int d() const { return d_; }
    const CycNumber& kappa() const { return kappa_; }

    TLElement identity(int n) const { return TLElement::of(KauffmanDiagram::identity(n)); }
    TLElement e(int n, int i) const { return TLElement::of(KauffmanDiagram::e(n, i)); }

    // f o g, needs g.top == f.bottom
    TLElement compose(const TLElement& f, const TLElement& g) const;
    TLElement juxtapose(const TLElement& f, const TLElement& g) const;
    CycNumber markov_trace(const TLElement& f) const;

    // p_n by Wenzl's recursion; checked idempotent and killed by every e_i.
    // Throws quantum-zero for n >= d.
    const TLElement& jones_wenzl(int n) const;

private:
    int d_;
    CycNumber kappa_;
    mutable std::deque<TLElement> jw_;  // references stay valid as it grows
};

// Objects (k, n) of the charged category: charge k mod d, n strands.
struct ChargedObject {
    int k = 0;
    int n = 0;
    friend auto operator<=>(const ChargedObject&, const ChargedObject&) = default;
    friend bool operator==(const ChargedObject&, const ChargedObject&) = default;
};

// Plain (charge 0 overall) morphisms (k,n) -> (l,m): all of K_{n,m} when
// (m-n)/2 == k-l mod d, empty otherwise. A cap has charge -1.
std::vector<KauffmanDiagram> charged_hom(int d, const ChargedObject& src, const ChargedObject& dst);

// Simple <<k,n>>, 0 <= n <= d-2.
struct ChargedSimple {
    int k = 0;
    int n = 0;
    friend auto operator<=>(const ChargedSimple&, const ChargedSimple&) = default;
    friend bool operator==(const ChargedSimple&, const ChargedSimple&) = default;
    std::string str() const;
};

class ChargedFusionRing {
public:
    explicit ChargedFusionRing(int d);  // builds and verifies the full table

    int d() const { return d_; }
    const std::vector<ChargedSimple>& simples() const { return simples_; }
    std::size_t index(const ChargedSimple& s) const;
    ChargedSimple simple(int k, int n) const;  // k reduced mod d, throws invalid-label on n

    // <<k,n>> (x) <<l,1>>, summands in the negligible quotient
    std::vector<ChargedSimple> fuse_generator(const ChargedSimple& a, const ChargedSimple& b) const;
    int N(const ChargedSimple& a, const ChargedSimple& b, const ChargedSimple& c) const;
    std::vector<ChargedSimple> fuse(const ChargedSimple& a, const ChargedSimple& b) const;  // with multiplicity
    ChargedSimple unit() const { return {0, 0}; }
    ChargedSimple dual(const ChargedSimple& a) const;
    bool is_commutative() const;

private:
    int d_;
    std::vector<ChargedSimple> simples_;
    std::vector<int> table_;  // N[a][b][c]
    int& at(std::size_t a, std::size_t b, std::size_t c) { return table_[(a * simples_.size() + b) * simples_.size() + c]; }
    int at(std::size_t a, std::size_t b, std::size_t c) const { return table_[(a * simples_.size() + b) * simples_.size() + c]; }
};

// Multiplicity of <<j,n'>> in <<k,n>> (x) <<l,1>> computed in the idempotent completion:
// dimension of p_{n'} K((k+l, n+1), (j, n')) (p_n (x) 1).
int diagram_multiplicity(const TemperleyLieb& tl, const ChargedSimple& a, const ChargedSimple& gen,
                         const ChargedSimple& c);

}  // namespace mfcat
