#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "newform/matgroups.hpp"
#include "newform/polyalg.hpp"

namespace newform {

// Whittaker values on the torus of G_n: mu -> W(diag(p^mu, 1, p^-mu)).
struct WhittakerTable {
    int n = 1;
    int p = 3;
    std::map<std::vector<int>, std::complex<double>> value;
    std::map<std::vector<int>, double> error;
    std::string normalization;
    std::map<std::string, std::string> provenance;

    bool has(const std::vector<int>& mu) const { return value.count(mu) > 0; }
    // Entry at mu; entries with mu_n < 0 vanish by the support property when absent.
    std::complex<double> at(const std::vector<int>& mu) const;
    int max_degree() const;  // largest |mu| with all dominant entries of that degree present
};

// delta_{B_GL_r}^{1/2}(p^mu) = q^{-sum_{i<j}(mu_i - mu_j)}
mpq_class gl_delta_half(const std::vector<int>& mu, int p);
// W(p^mu; X) = delta^{1/2}(p^mu) s_mu(X); zero unless mu is dominant. nv >= r variables.
Poly gl_whittaker_value(const std::vector<int>& mu, int p, int nv = -1);
mpq_class gl_whittaker_value(const std::vector<int>& mu, int p, const std::vector<mpq_class>& alpha);

struct OracleValue {
    std::complex<double> value;
    double error = 0;  // bound on the omitted shells (triangle inequality per shell)
    int shells = 0;
};

// Integral of conj(psi_E) over {x in E : val(x) = j}; vol(o_E) = 1.
std::complex<double> shell_character_integral(int p, int j);

// Jacquet integral of the spherical vector of Ind(alpha_1, alpha_2) of GL_2(E) at diag(p^mu1, p^mu2).
OracleValue jacquet_oracle_gl2(const std::vector<int>& mu, const mpq_class& a1, const mpq_class& a2, int p, int D);
// Jacquet integral for the unramified principal series of U(3) with Satake value beta at
// diag(p^k, 1, p^-k), over N = {chi_{e1}(x) chi_{2e1}(z)}.
OracleValue jacquet_oracle_u3(int k, const mpq_class& beta, int p, int D);
// Table for k = kmin..kmax (raw values; entry 0 is the normalization constant).
WhittakerTable u3_oracle_table(const mpq_class& beta, int p, int D, int kmin, int kmax);

// W_v(g) for a K_{1,e}-fixed vector v from its torus table, by the Iwasawa decomposition g = n t k.
std::complex<double> whittaker_at(const WhittakerTable& table, const Mat& g, int e);

// True when some entry of x has negative valuation, where W_v(a^ x~) = 0 is guaranteed.
bool support_vanishes(const Mat& x);

}  // namespace newform
