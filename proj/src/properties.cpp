#include "mfcat/properties.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <random>

#include "mfcat/mf_core.hpp"
#include "mfcat/perm_cat.hpp"

namespace mfcat {

namespace {

std::atomic<std::uint64_t> g_seed{20240917};

using Rng = std::mt19937_64;

CycNumber random_cyc(Rng& rng, int order, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    std::vector<mpq_class> c(euler_phi(order));
    for (auto& x : c) {
        x = mpq_class(num(rng), den(rng));
        x.canonicalize();
    }
    return CycNumber::from_coeffs(order, c);
}

MultiPoly random_poly(Rng& rng, int order, int nvars, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> var(0, nvars - 1), deg(0, maxdeg);
    std::vector<MultiPoly::Term> terms;
    for (int i = 0; i < nterms; ++i) {
        std::vector<int> e(nvars, 0);
        for (int k = deg(rng); k > 0; --k) ++e[var(rng)];
        terms.emplace_back(mono_from(e), random_cyc(rng, order));
    }
    return MultiPoly::from_terms(std::move(terms));
}

MFPtr random_perm(Rng& rng, const PermCategory& C) {
    std::uniform_int_distribution<int> m(0, C.d() - 1), l(0, C.d() - 2);
    int mm = m(rng);
    return C.object(C.label(mm, l(rng)));
}

Morphism random_mor(Rng& rng, const MFPtr& M, const MFPtr& N, int parity) {
    Morphism f{M, N, parity, PolyMatrix(N->rank(), M->rank())};
    for (std::size_t t = 0; t < N->rank(); ++t)
        for (std::size_t s = 0; s < M->rank(); ++s)
            if ((M->parity(s) + N->parity(t) + parity) % 2 == 0) f.F(t, s) = random_poly(rng, 2 * M->d, 2, 3, 3);
    return f;
}

PolyVec random_vec(Rng& rng, const MFPtr& M) {
    PolyVec v(M->rank());
    for (auto& p : v) p = random_poly(rng, 2 * M->d, M->nvars(), 2, 2);
    return v;
}

CycMatrix random_matrix(Rng& rng, int order, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> coin(0, 2);
    CycMatrix A(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng) != 0) A(r, c) = random_cyc(rng, order, 2);
    // rank deficiency on some draws
    if (rows > 2 && coin(rng) == 0) {
        CycNumber s = random_cyc(rng, order, 2);
        for (std::size_t c = 0; c < cols; ++c) A(rows - 1, c) = A(0, c) + s * A(1, c);
    }
    return A;
}

struct Property {
    const char* name;
    std::function<bool(Rng&, const PermCategory&, int)> body;  // false: counterexample
};

std::vector<Property> properties() {
    std::vector<Property> ps;
    ps.push_back({"delta-squared", [](Rng& rng, const PermCategory& C, int n) {
                      MFPtr M = random_perm(rng, C), N = random_perm(rng, C);
                      return delta(delta(random_mor(rng, M, N, n % 2))).is_zero();
                  }});
    ps.push_back({"graded-derivation", [](Rng& rng, const PermCategory& C, int n) {
                      MFPtr A = random_perm(rng, C), B = random_perm(rng, C), K = random_perm(rng, C);
                      int pf = n % 2, pg = (n / 2) % 2;
                      Morphism f = random_mor(rng, A, B, pf), g = random_mor(rng, B, K, pg);
                      Morphism lhs = delta(mor_compose(g, f));
                      Morphism rhs = mor_add(mor_compose(delta(g), f), mor_scale(pg ? -1 : 1, mor_compose(g, delta(f))));
                      return lhs.F == rhs.F;
                  }});
    ps.push_back({"koszul-interchange", [](Rng& rng, const PermCategory& C, int n) {
                      MFPtr M = random_perm(rng, C), M2 = random_perm(rng, C), N = random_perm(rng, C),
                            N2 = random_perm(rng, C);
                      int pf = n % 2, pg = (n / 2) % 2;
                      OpPtr f = op_matrix(random_mor(rng, M, M2, pf)), g = op_matrix(random_mor(rng, N, N2, pg));
                      OpPtr a = op_compose(op_tensor_left(f, N2), op_tensor_right(M, g));
                      OpPtr b = op_compose(op_tensor_right(M2, g), op_tensor_left(f, N));
                      PolyVec v = random_vec(rng, a->src());
                      PolyVec x = a->apply(v), y = b->apply(v);
                      CycNumber sign = pf && pg ? -1 : 1;
                      for (auto& p : y) p *= sign;
                      return x == y;
                  }});
    ps.push_back({"kernel-exactness", [](Rng& rng, const PermCategory& C, int) {
                      std::uniform_int_distribution<int> dim(1, 6);
                      std::size_t rows = dim(rng), cols = dim(rng);
                      CycMatrix A = random_matrix(rng, 2 * C.d(), rows, cols);
                      auto ker = kernel_basis(A);
                      if (rank(A) + ker.size() != cols) return false;
                      CycMatrix K(cols, ker.size());
                      for (std::size_t j = 0; j < ker.size(); ++j) {
                          if (!(A * ker[j]).is_zero()) return false;
                          for (std::size_t i = 0; i < cols; ++i) K(i, j) = ker[j](i, 0);
                      }
                      return ker.empty() || rank(K) == ker.size();
                  }});
    ps.push_back({"solve-exactness", [](Rng& rng, const PermCategory& C, int n) {
                      std::uniform_int_distribution<int> dim(1, 6);
                      std::size_t rows = dim(rng), cols = dim(rng);
                      int order = 2 * C.d();
                      CycMatrix A = random_matrix(rng, order, rows, cols);
                      CycMatrix b(rows, 1);
                      if (n % 2 == 0) {
                          CycMatrix x0(cols, 1);
                          for (std::size_t i = 0; i < cols; ++i) x0(i, 0) = random_cyc(rng, order, 2);
                          b = A * x0;
                      } else {
                          for (std::size_t i = 0; i < rows; ++i) b(i, 0) = random_cyc(rng, order, 2);
                      }
                      CycMatrix Ab(rows, cols + 1);
                      for (std::size_t r = 0; r < rows; ++r) {
                          for (std::size_t c = 0; c < cols; ++c) Ab(r, c) = A(r, c);
                          Ab(r, cols) = b(r, 0);
                      }
                      bool solvable = rank(Ab) == rank(A);
                      auto x = solve_linear(A, b);
                      if (x.has_value() != solvable) return false;
                      return !x || A * *x == b;
                  }});
    ps.push_back({"twist-homomorphism", [](Rng& rng, const PermCategory& C, int n) {
                      const int d = C.d();
                      std::uniform_int_distribution<int> amt(-d, 2 * d);
                      MFPtr M = random_perm(rng, C), N = random_perm(rng, C), K = random_perm(rng, C);
                      if (n % 3 == 0) M = mf_tensor(M, N);
                      long a = amt(rng), b = amt(rng), a2 = amt(rng), b2 = amt(rng);
                      if (!(mf_twist(mf_twist(M, a, b), a2, b2)->D == mf_twist(M, a + a2, b + b2)->D)) return false;
                      if (M->left) return true;
                      OpPtr f = op_matrix(random_mor(rng, M, N, n % 2)), g = op_matrix(random_mor(rng, N, K, (n / 2) % 2));
                      OpPtr lhs = op_twist(op_compose(g, f), a, b), rhs = op_compose(op_twist(g, a, b), op_twist(f, a, b));
                      PolyVec v = random_vec(rng, lhs->src());
                      return lhs->apply(v) == rhs->apply(v);
                  }});
    ps.push_back({"scale-homomorphism", [](Rng& rng, const PermCategory& C, int n) {
                      const int d = C.d();
                      int order = 2 * d;
                      MultiPoly p = random_poly(rng, order, 3, 4, 4), q = random_poly(rng, order, 3, 4, 4);
                      std::uniform_int_distribution<int> amt(-2 * d, 2 * d);
                      std::map<int, long> s1{{0, amt(rng)}, {1, amt(rng)}, {2, amt(rng)}};
                      std::map<int, long> s2{{0, amt(rng)}, {2, amt(rng)}};
                      if (!(scale_vars(p * q, s1, d) == scale_vars(p, s1, d) * scale_vars(q, s1, d))) return false;
                      std::map<int, long> sum = s1;
                      for (auto& [v, a] : s2) sum[v] += a;
                      if (!(scale_vars(scale_vars(p, s1, d), s2, d) == scale_vars(p, sum, d))) return false;
                      int k = n % 5;
                      MultiPoly h = graded_component(p, k);
                      long a = amt(rng);
                      return scale_vars(h, {{0, a}, {1, a}, {2, a}}, d) == C.eta(a * k) * h;
                  }});
    return ps;
}

}  // namespace

std::uint64_t property_seed() { return g_seed.load(); }
void set_property_seed(std::uint64_t seed) { g_seed.store(seed); }

std::vector<PropertyResult> run_properties(std::uint64_t seed, int cases, std::vector<int> ds) {
    if (ds.empty()) throw Error(ErrorKind::PreconditionViolated, "run_properties needs at least one d");
    std::deque<PermCategory> cats;
    for (int d : ds) cats.emplace_back(d);
    std::vector<PropertyResult> out;
    std::uint64_t salt = 0;
    for (auto& prop : properties()) {
        Rng rng(seed + 7919 * salt++);
        PropertyResult r{prop.name, cases, 0, "", 0};
        auto t0 = std::chrono::steady_clock::now();
        for (int n = 0; n < cases; ++n) {
            const PermCategory& C = cats[static_cast<std::size_t>(n) % cats.size()];
            bool ok = false;
            std::string why;
            try {
                ok = prop.body(rng, C, n);
            } catch (const Error& e) {
                why = e.what();
            }
            if (ok) continue;
            if (r.failures++ == 0)
                r.first_failure = "case " + std::to_string(n) + " (d = " + std::to_string(C.d()) + ")" + (why.empty() ? "" : ": " + why);
        }
        r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace mfcat
