#pragma once

#include <vector>

#include "newform/polyalg.hpp"

namespace newform {

// Unramified parameter: P(T) = prod (1 - c T) over the inverse roots c.
struct UnramParam {
    std::vector<mpq_class> inverse_roots;
    int a = 0;                 // conductor exponent (0 for unramified)
    bool conj_self_dual = false;

    int dim() const { return int(inverse_roots.size()); }
    // coefficients of P(T), constant term first
    std::vector<mpq_class> poly_coeffs() const;
    // parameter of the unramified principal series of U(2n+1) with Satake values beta_1..beta_n
    static UnramParam unitary(const std::vector<mpq_class>& beta);
    static UnramParam gl(const std::vector<mpq_class>& alpha);
    // inverse roots under c -> c^{-1} (conjugate-dual in the rational model)
    UnramParam dual() const;
};

// Variable layout for the (X;Y) objects: X_1..X_r are variables 0..r-1 of an nv-variable Poly, and
// Y is the series variable of SeriesY. q_E^{1/2} = p.

// prod_j P(q_E^{-1/2} X_j Y); pcoeffs[k] is the coefficient of T^k (may involve symbol variables).
SeriesY tensor_poly(const std::vector<Poly>& pcoeffs, int r, int p, int T = 12);
SeriesY tensor_poly(const UnramParam& pi, int r, int nv, int p, int T = 12);
// prod_{i<j} (1 - q_E^{-1} X_i X_j Y^2) prod_k (1 - q_E^{-1/2} X_k Y)
SeriesY asai_poly(int r, int nv, int p, int T = 12);
// (X_1...X_r)^{a-m} Y^{(a-m) r}
SeriesY epsilon_poly(int a, int m, int r, int nv, int T = 12);

enum class PieceKind { GL, Anchor };
struct ConductorPiece {
    PieceKind kind;
    int a;
};
// a_{pi_0} + 2 sum a_{tau_j}; exactly one anchor piece
int conductor_arith(const std::vector<ConductorPiece>& pieces);

// 1/P as a Y-series; P must have constant term a nonzero rational at Y^0 and nothing below.
SeriesY lfactor_eval(const SeriesY& P);

// Replace X_j by alpha_j (j < r); result has nv - r variables.
SeriesY specialize_x(const SeriesY& s, int r, const std::vector<mpq_class>& alpha);
// Numeric value of a Y-series at given variable values and Y.
std::complex<double> eval_series(const SeriesY& s, const std::vector<std::complex<double>>& x, std::complex<double> Y);

}  // namespace newform
