#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "newform/hecke.hpp"
#include "newform/lfactors.hpp"
#include "newform/polyalg.hpp"
#include "newform/whittaker.hpp"

namespace newform {

// Torus values of a Whittaker function as Polys in nv variables. Variables 0..n-1 are reserved for
// X_1..X_n; entries are typically single symbol variables (index >= n) or rational constants.
struct PolyTable {
    int n = 1;
    int nv = 1;
    std::map<std::vector<int>, Poly> value;

    // zero for absent entries with a negative last coordinate (support), throws otherwise
    Poly at(const std::vector<int>& mu) const;
};

// Every dominant mu in [lo, hi]^n gets its own symbol; the binding vector (one complex value per
// variable, X slots left 0) is filled from `numeric` when given.
struct SymbolicTable {
    PolyTable table;
    std::vector<std::vector<int>> keys;  // keys[i] is the entry of variable n + i
    std::vector<std::complex<double>> binding;
};
SymbolicTable symbolic_table(int n, int lo, int hi, const WhittakerTable* numeric = nullptr);

// Spherical U(3) values in closed form, W(k) = Lambda q^{-2k} h_k(beta, beta^{-1}) for k >= 0 (zero below),
// over the variables X (0), beta (1), Lambda (2). Agreement with the direct integral is a test.
PolyTable u3_formula_table(int p, int kmax);
// coefficients of prod_i (1 - b_i T)(1 - b_i^{-1} T) * (1 - T), with b_i the given symbol variables
std::vector<Poly> unitary_param_coeffs(int nv, const std::vector<int>& beta_vars);

// Exact counterpart of torus_table for n = 1 symbolic tables; character values other than 1 must
// cancel in full Galois orbits (sum of primitive d-th roots of unity), otherwise this throws.
PolyTable torus_table_exact(const PolyTable& base, int e, const VectorExpr& u, int kmin, int kmax);

// kappa(mu) = delta_{B_GL_r}^{-1}(p^mu) |det p^mu|_E^{r/2 - n}
mpq_class psi_weight(const std::vector<int>& mu, int n, int p);
// sum over dominant mu with r parts and |mu| = ell of W(mu, 0..0) W_GL(mu; X) kappa(mu)
Poly psi_partial_sum(const PolyTable& table, int n, int r, int ell, int p, int lo = 0);

struct XiObject {
    int n = 1, r = 1, m = 0, a = 0, p = 3;
    int nv = 1;
    SeriesY psi, series;
    int degree_lo = 0, degree_hi = 0;  // Y-degrees kept in poly
    Poly poly;                          // series summed over [degree_lo, degree_hi] at Y = 1
};

struct XiOptions {
    int T = 12;
    int psi_lo = 0;  // lowest Psi degree (negative for vectors fixed only by R_{n,m})
    int degree_hi = kDefault;  // default (m - a - 2 psi_lo) r; the low end is psi_lo r
    static constexpr int kDefault = -1000000;
};
XiObject xi_assemble(const PolyTable& table, int n, int r, int m, int a, const UnramParam& pi, int p,
                     const XiOptions& opt = {});
// pcoeffs[k]: coefficient of T^k in P_pi (may involve symbol variables)
XiObject xi_assemble(const PolyTable& table, int n, int r, int m, int a, const std::vector<Poly>& pcoeffs, int p,
                     const XiOptions& opt = {});

// Numeric coefficients in X after binding the symbol variables.
using NumPoly = std::map<std::vector<int>, std::complex<double>>;
NumPoly bind_numeric(const Poly& P, int r, const std::vector<std::complex<double>>& binding);
double max_abs(const NumPoly& P);
NumPoly operator-(const NumPoly& a, const NumPoly& b);
NumPoly operator*(const NumPoly& a, const NumPoly& b);
NumPoly to_numpoly(const Poly& P, int r);  // rational Poly with no symbols
NumPoly scale(const NumPoly& a, std::complex<double> c);
std::string to_string(const NumPoly& P);

// Largest |coefficient| of the series in degrees (degree_hi, T] after binding; 0 means terminated.
double trailing_norm(const XiObject& x, const std::vector<std::complex<double>>& binding);
int trailing_degree_exact(const XiObject& x);  // highest nonzero degree above degree_hi, or -1

// ---- properties

struct CheckResult {
    std::string check;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    std::string detail;
};

// functional equation: poly(X^{-1}) = (X_1..X_r)^{a-m} poly(X), exactly (symbolic) or after binding
CheckResult check_functional_equation(const XiObject& x, const std::vector<std::complex<double>>* binding = nullptr,
                                      double tol = 0);
// r = n: every Y_n-graded component has degree >= 0
CheckResult check_grading(const XiObject& x);
// restriction, at the series level: Xi_{n,r}(X_1..X_{r-1}, 0; Y) = Xi_{n,r-1}(X_1..X_{r-1}; Y) up to Y^T
CheckResult check_restriction(const PolyTable& table, int n, int r, int m, int a, const std::vector<Poly>& pcoeffs,
                              int p, int T);
// kernel, contrapositive: a vanishing torus table gives Xi = 0
CheckResult check_kernel(const XiObject& x);

// Ξ constant in X within tol; returns the constant.
std::complex<double> newform_constant(const XiObject& x, const std::vector<std::complex<double>>& binding,
                                      double tol, CheckResult* report = nullptr);

// exact variant: Ξ must not involve X at all; returns the X-free Poly
Poly newform_constant_exact(const XiObject& x, CheckResult* report = nullptr);

// Hecke equivariance: Xi(phi * v) = S(phi) Xi(v)
CheckResult check_hecke_equivariance(const NumPoly& xi_phi_v, const Poly& satake, const NumPoly& xi_v, double tol);

// q_E^{(n(n-1) + (m-a))/2} (X_1..X_n)^{(m-a)/2} S * base: the closed-form oldform prediction with the q_E power
NumPoly oldform_prediction(const NumPoly& base, int n, int m, int a, const Poly& satake, int p);
// the same with the per-step eta factor q_E^{n^2/2} X_1..X_n that follows from the Psi weight
NumPoly oldform_prediction_from_weight(const NumPoly& base, int n, int m, int a, const Poly& satake, int p);
// Lambda' sum_j Y_j(X) with Lambda' the constant term of `xi`
CheckResult check_level_a_plus_one(const NumPoly& xi, int n, double tol);

// Exact solution space of: Ξ symmetric polynomial in X_1..X_n with exponents <= K, and for every
// 1 <= r <= n the restriction X_{r+1} = .. = X_n = 0 satisfies Ξ_r(X^{-1}) = (X_1..X_r)^{-shift} Ξ_r(X).
std::vector<Poly> fe_solution_space(int n, int shift, int K);

// ---- Gindikin-Karpelevich at r = 1

struct GKPoint {
    std::complex<double> s, numeric, formula;
    double error_bound = 0;
};
struct GKReport {
    std::vector<GKPoint> points;
    double max_rel = 0;
    double identity_value = 0;       // xi(I) from the section routine
    double m_scaling_residual = 0;   // |M(m+1)/M(m) - omega(p)|
};
// Section xi^m_{tau,s}(h) = (alpha q_E^{-s})^{val a} for h = (a, *; 0, conj(a)^{-1}) k, k in R_{1,m}.
std::complex<double> gk_section(const Mat& h, int m, std::complex<double> z);
GKReport gk_check(const mpq_class& alpha, int m, const std::vector<std::complex<double>>& s_values, int p, int D);

// L(2s, As) Psi(s) / L(s, pi x tau) at n = r = 1 from a numeric table (tau = |.|-twisted alpha).
std::complex<double> rs_ratio(const WhittakerTable& table, const UnramParam& pi, double alpha, std::complex<double> s,
                              int p);

}  // namespace newform
