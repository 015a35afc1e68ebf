#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace newform {

// Laurent polynomial over Q in nv variables. The first r variables play the role of X_1..X_r;
// any further variables are free symbols (e.g. unknown Whittaker values in symbolic mode).
// Powers of q_E^{1/2} = p are folded into the rational coefficients.
struct Poly {
    int nv = 0;
    std::map<std::vector<int>, mpq_class> t;  // exponent vector -> nonzero coefficient

    Poly() = default;
    explicit Poly(int nvars) : nv(nvars) {}

    static Poly constant(int nv, const mpq_class& c);
    static Poly var(int nv, int i);
    static Poly monomial(int nv, std::vector<int> e, const mpq_class& c = 1);

    bool is_zero() const { return t.empty(); }
    bool is_constant() const;
    mpq_class constant_term() const;
    void add_term(const std::vector<int>& e, const mpq_class& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly(a.nv) - a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& c);
    friend Poly operator*(const mpq_class& c, Poly a) { return std::move(a) * c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.nv == b.nv && a.t == b.t; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int k) const;  // k >= 0
    Poly invert_vars(int r) const;                       // X_i -> X_i^{-1}, i < r
    Poly permute_vars(const std::vector<int>& perm) const;  // X_i -> X_{perm[i]}
    Poly scale_var(int i, const mpq_class& c) const;    // X_i -> c X_i
    Poly shift(const std::vector<int>& e) const;        // multiply by X^e
    // X_i -> 0; throws if some term has a negative power of X_i. Drops the variable.
    Poly set_zero_drop(int i) const;
    Poly substitute(int i, const mpq_class& c) const;   // X_i -> c, variable dropped
    mpq_class eval(const std::vector<mpq_class>& x) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;

    // homogeneous parts in the first r variables
    std::map<int, Poly> graded(int r) const;
    bool is_homogeneous(int r, int deg) const;
    bool is_symmetric(int r) const;
    bool is_hyperoctahedral(int r) const;  // symmetric and invariant under each X_j -> X_j^{-1}
    mpq_class max_abs_coeff() const;

    std::string str(const std::vector<std::string>& names = {}) const;
};

// Elementary symmetric Y_j(X_1..X_r) in nv >= r variables; Y_0 = 1.
Poly elem_sym(int j, int r, int nv = -1);
Poly complete_sym(int k, int r, int nv = -1);
// Exact division of P by (X_i - X_j); throws if not divisible.
Poly divide_by_difference(const Poly& P, int i, int j);
// Schur polynomial s_lambda(X_1..X_r) as the bialternant a_{lambda+rho} / a_rho.
Poly schur_poly(const std::vector<int>& lambda, int r, int nv = -1);

// Expansion of a symmetric Laurent polynomial in the first r variables in the basis
// Y_1^{c_1} ... Y_r^{c_r} (c_r may be negative). Coefficients may involve the remaining variables.
std::map<std::vector<int>, Poly> to_elementary(const Poly& P, int r);
// Components by the degree of Y_r = X_1...X_r; reassembling gives P back.
std::map<int, Poly> yn_grade(const Poly& P, int r);

// Formal Laurent series in Y with Poly coefficients, truncated at Y^T.
struct SeriesY {
    int nv = 0;
    int T = 12;
    std::map<int, Poly> c;

    SeriesY() = default;
    SeriesY(int nvars, int trunc) : nv(nvars), T(trunc) {}

    static SeriesY from_coeffs(int nv, int T, const std::map<int, Poly>& c);
    // P(Y X_1, ..., Y X_r): coefficient of Y^k is the degree-k part of P.
    static SeriesY homogenize(const Poly& P, int r, int T);

    const Poly& at(int k) const;
    void set(int k, const Poly& p);
    int low() const;   // lowest degree with nonzero coefficient (T+1 if zero)
    bool is_zero() const { return c.empty(); }

    friend SeriesY operator+(const SeriesY& a, const SeriesY& b);
    friend SeriesY operator-(const SeriesY& a, const SeriesY& b);
    friend SeriesY operator*(const SeriesY& a, const SeriesY& b);
    // 1/a; requires the lowest coefficient to be a nonzero constant.
    SeriesY inverse() const;
    friend SeriesY operator/(const SeriesY& a, const SeriesY& b) { return a * b.inverse(); }
    // Sum of all coefficients (Y -> 1); meaningful when the series terminates.
    Poly at_one() const;
    // highest degree with nonzero coefficient
    int high() const;
};

}  // namespace newform
