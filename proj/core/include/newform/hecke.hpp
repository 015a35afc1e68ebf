#pragma once

#include <complex>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "newform/matgroups.hpp"
#include "newform/polyalg.hpp"
#include "newform/whittaker.hpp"

namespace newform {

// ---- GL_{2n+1} side: monomials f_0^{l_0} ... f_{2n}^{l_{2n}} (l_0 may be negative)

struct GLHeckeElement {
    int n = 1;
    std::map<std::vector<int>, mpq_class> terms;

    static GLHeckeElement monomial(int n, const std::vector<int>& ell, const mpq_class& c = 1);
    GLHeckeElement operator+(const GLHeckeElement& o) const;
    GLHeckeElement operator*(const GLHeckeElement& o) const;
    GLHeckeElement operator*(const mpq_class& c) const;
    bool operator==(const GLHeckeElement& o) const { return n == o.n && terms == o.terms; }
    void add_term(const std::vector<int>& ell, const mpq_class& c);
};

// f_i -> q_E^{n-i} f_{2n-i}, extended multiplicatively; q_E = p^2.
GLHeckeElement involution_iota(const GLHeckeElement& h, int p);
// Trace of the involution on the span of the degree-(m - a) monomials (0 when m < a).
mpz_class trace_count(int n, int a, int m, int p = 3);

// ---- H_n side

struct HHeckeElement {
    int n = 1, m = 0;
    std::map<std::vector<int>, mpq_class> terms;  // lambda -> coefficient of phi_{lambda,m}
};

// One left coset h R_{n,m} inside R_{n,m} p^lambda R_{n,m}, with h = p^mu v (v unipotent in B_{H_n}).
struct HCoset {
    std::vector<int> mu;
    Mat h;  // 2n x 2n, in H_n
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cosets with unipotent coordinates truncated at valuation >= -K. n in {1, 2}; budget caps the number
// of candidates examined.
std::vector<HCoset> hecke_cosets(const Field& f, const std::vector<int>& lambda, int m, int K, long budget = 100000);

struct SatakeResult {
    Poly value;  // in X_1..X_n
    int K = 0;
    long cosets = 0;
};
// delta^{1/2}(p^mu) q^{-...} times the number of cosets with torus part mu, summed into X^mu;
// vol(V cap R_{n,m}) = 1. Throws TruncationUnstable when the counts differ between K and K + 2.
SatakeResult satake_transform(const std::vector<int>& lambda, int n, int m, int p, int K = 4, long budget = 100000);
Poly satake_transform(const HHeckeElement& phi, int p, int K = 4, long budget = 100000);
mpq_class borel_delta_half(const std::vector<int>& mu, int p);

// lambda in P with at most n parts, 2 lambda_1 <= m - a (m - a - 1 for opposite parity).
std::vector<std::vector<int>> conjectural_basis_partitions(int n, int a, int m);

// ---- vectors in the span of pi(G_n) v_0 for a fixed base vector v_0, W(g) = sum c W_0(g h)

struct VectorExpr {
    int n = 1;
    std::vector<std::pair<Mat, mpq_class>> terms;

    static VectorExpr base(const Field& f, int n);
    VectorExpr translate(const Mat& t) const;  // pi(t) u
    VectorExpr operator+(const VectorExpr& o) const;
    VectorExpr operator*(const mpq_class& c) const;
};

// phi_{lambda,level} * u = sum over the cosets g R of pi(g) u (vol R_{n,0} = 1).
VectorExpr hecke_star(const std::vector<int>& lambda, int level, const VectorExpr& u, int K = 4, long budget = 100000);
// eta_{lambda,m,m'}(u) = pi(p^{-mu_l'}) phi_{lambda,e} * pi(p^{mu_l}) u
VectorExpr level_raise(const std::vector<int>& lambda, int m, int mp, const VectorExpr& u, int K = 4,
                       long budget = 100000);
// sum over K_{1,1} / (K_{1,1} cap K_{1,0}) of pi(k) u: a K_{1,1}-fixed vector built from a spherical one
VectorExpr level_one_projection(const VectorExpr& u);

// W_u(g) where base_table holds the torus values of v_0, which is K_{n,e}-fixed.
std::complex<double> whittaker_eval(const WhittakerTable& base_table, int e, const VectorExpr& u, const Mat& g);
WhittakerTable torus_table(const WhittakerTable& base_table, int e, const VectorExpr& u, int kmin, int kmax);

// Table of eta_{lambda,m,m'}(v) at n = 1 from the torus table of a K_{1,m}-fixed v, m in {0, 1}.
WhittakerTable apply_level_raising(const std::vector<int>& lambda, int m, int mp, const WhittakerTable& table,
                                   int kmin, int kmax, int K = 4, long budget = 100000);

}  // namespace newform
