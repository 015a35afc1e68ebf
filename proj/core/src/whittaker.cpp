#include "newform/whittaker.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace newform {

namespace {

std::complex<double> e_angle(double a) { return std::polar(1.0, 2 * std::numbers::pi * a); }

double qpow(int p, int k) { return std::pow(double(p), k); }

// |x| in R for an exact rational
double absd(const mpq_class& x) { return std::fabs(x.get_d()); }

bool dominant(const std::vector<int>& mu) {
    for (size_t i = 1; i < mu.size(); ++i)
        if (mu[i] > mu[i - 1]) return false;
    return true;
}

}  // namespace

std::complex<double> WhittakerTable::at(const std::vector<int>& mu) const {
    auto it = value.find(mu);
    if (it != value.end()) return it->second;
    if (!mu.empty() && mu.back() < 0) return 0;
    std::string s;
    for (int x : mu) s += (s.empty() ? "" : ",") + std::to_string(x);
    throw std::out_of_range("WhittakerTable: missing entry (" + s + ")");
}

int WhittakerTable::max_degree() const {
    int best = -1;
    for (int d = 0;; ++d) {
        // every dominant mu >= 0 with |mu| = d must be present
        bool ok = true;
        std::vector<int> mu(n, 0);
        auto rec = [&](auto&& self, int i, int left, int cap) -> void {
            if (!ok) return;
            if (i == n) {
                if (left == 0 && !has(mu)) ok = false;
                return;
            }
            for (int x = std::min(left, cap); x >= 0; --x) {
                mu[i] = x;
                self(self, i + 1, left - x, x);
            }
            mu[i] = 0;
        };
        rec(rec, 0, d, d);
        if (!ok) return best;
        best = d;
        if (d > 1000) return best;
    }
}

mpq_class gl_delta_half(const std::vector<int>& mu, int p) {
    long s = 0;
    for (size_t i = 0; i < mu.size(); ++i)
        for (size_t j = i + 1; j < mu.size(); ++j) s += mu[i] - mu[j];
    return ppow(p, int(-s));
}

Poly gl_whittaker_value(const std::vector<int>& mu, int p, int nv) {
    const int r = int(mu.size());
    if (nv < 0) nv = r;
    if (!dominant(mu)) return Poly(nv);
    // central shift for a negative last part
    int c = r ? mu.back() : 0;
    std::vector<int> lam(mu);
    for (int& x : lam) x -= c;
    Poly s = schur_poly(lam, r, nv);
    std::vector<int> sh(nv, 0);
    for (int i = 0; i < r; ++i) sh[i] = c;
    return s.shift(sh) * gl_delta_half(mu, p);
}

mpq_class gl_whittaker_value(const std::vector<int>& mu, int p, const std::vector<mpq_class>& alpha) {
    Poly w = gl_whittaker_value(mu, p, int(mu.size()));
    return w.eval(alpha);
}

std::complex<double> shell_character_integral(int p, int j) {
    // shell = p^j o_E minus p^{j+1} o_E; conj(psi_E) integrates over p^k o_E to vol = q_E^{-k} when
    // k >= 0 and to an exactly vanishing finite character sum when k < 0
    auto ball = [&](int k) { return k >= 0 ? qpow(p, -2 * k) : 0.0; };
    return ball(j) - ball(j + 1);
}

OracleValue jacquet_oracle_gl2(const std::vector<int>& mu, const mpq_class& a1, const mpq_class& a2, int p, int D) {
    if (mu.size() != 2) throw std::invalid_argument("jacquet_oracle_gl2: mu needs two entries");
    if (!(absd(a1) < absd(a2))) throw std::invalid_argument("jacquet_oracle_gl2: need |alpha_1| < |alpha_2| for convergence");
    const int m1 = mu[0], m2 = mu[1];
    // g = w n(x) diag(p^m1, p^m2); bottom row (p^m1, x p^m2) gives val(b2), det gives val(b1)
    auto section = [&](int vx) {
        int v2 = std::min(m1, vx >= kInf / 2 ? m1 : vx + m2);
        int v1 = m1 + m2 - v2;
        mpq_class val = 1;
        for (int i = 0; i < std::abs(v1); ++i) val *= v1 > 0 ? a1 : mpq_class(1 / a1);
        for (int i = 0; i < std::abs(v2); ++i) val *= v2 > 0 ? a2 : mpq_class(1 / a2);
        return val.get_d() * qpow(p, -(v1 - v2));
    };
    const int J = std::max(D, -m2 + m1 + 1);  // beyond J the section is constant
    OracleValue out;
    for (int j = -D; j < J; ++j) {
        out.value += section(j) * shell_character_integral(p, j);
        ++out.shells;
    }
    out.value += section(kInf) * qpow(p, -2 * J);  // lump val(x) >= J, psi trivial there
    ++out.shells;
    // omitted shells j < -D: triangle inequality shell by shell, with the exact shell integrals
    for (int j = -D - 1; j >= -D - 60; --j) out.error += std::fabs(section(j)) * std::abs(shell_character_integral(p, j));
    return out;
}

OracleValue jacquet_oracle_u3(int k, const mpq_class& beta, int p, int D) {
    if (!(absd(beta) < 1) || sgn(beta) == 0)
        throw std::invalid_argument("jacquet_oracle_u3: need 0 < |beta| < 1 for absolute convergence");
    const Field f = Field::make(p);
    const Mat w0 = weyl_rep(f, 1, {1}, {1}, QE(f, 1));
    const Mat t = t_ell(f, 1, k);
    const mpq_class ratio = beta / (long(p) * p);  // chi delta^{1/2} on diag(p, ., p^-1)
    auto section_at = [&](const QE& x, const QE& z) {
        Mat u = root_element(f, 1, {RootKind::Ek, 1, 0}, x) * root_element(f, 1, {RootKind::TwoEk, 1, 0}, z);
        Iwasawa iw = iwasawa_decompose(w0 * u * t, 1, 0);
        int vy = iw.b(0, 0).val();
        mpq_class s = 1;
        for (int i = 0; i < std::abs(vy); ++i) s *= vy > 0 ? ratio : mpq_class(1 / ratio);
        return s.get_d();
    };
    // u' = t^{-1} u t is integral once val(x) >= k and val(z) >= 2k
    const int Jx = std::max(D, k + 1), Jz = std::max(D, 2 * k + 1);
    std::vector<std::pair<QE, std::complex<double>>> xs;
    for (int j = -D; j < Jx; ++j) xs.push_back({QE(f, ppow(p, j)), shell_character_integral(p, j)});
    xs.push_back({QE(f), qpow(p, -2 * Jx)});
    std::vector<std::pair<QE, double>> zs;
    for (int i = -D; i < Jz; ++i) zs.push_back({QE(f, ppow(p, i)), qpow(p, -i) * (1 - 1.0 / p)});
    zs.push_back({QE(f), qpow(p, -Jz)});
    OracleValue out;
    for (const auto& [x, wx] : xs) {
        if (std::abs(wx) < 1e-300) continue;  // exact zero shell: skip the decomposition
        for (const auto& [z, wz] : zs) {
            out.value += section_at(x, z) * wx * wz;
            ++out.shells;
        }
    }
    // omitted region val(x) < -D or val(z) < -D, bounded shell by shell with the exact x-shell integrals;
    // |section| = |beta/q^2|^{vy}, vy = -k - min(0, 2(j-k), i-2k)
    const double rb = absd(ratio);
    auto sec_abs = [&](int j, int i) {
        int M = std::min({0, 2 * (j - k), i - 2 * k});
        return std::pow(rb, -k - M);
    };
    const int L = 60;
    std::map<int, double> sx;
    for (int j = -D - L; j < Jx; ++j) sx[j] = std::abs(shell_character_integral(p, j));
    for (int j = -D - L; j < Jx; ++j)
        for (int i = -D - L; i < Jz; ++i) {
            if (j >= -D && i >= -D) continue;
            double vz = qpow(p, -i) * (1 - 1.0 / p);
            double term = sec_abs(j, i) * sx[j] * vz;
            if (std::isfinite(term)) out.error += term;
        }
    return out;
}

WhittakerTable u3_oracle_table(const mpq_class& beta, int p, int D, int kmin, int kmax) {
    WhittakerTable t;
    t.n = 1;
    t.p = p;
    for (int k = kmin; k <= kmax; ++k) {
        OracleValue v = jacquet_oracle_u3(k, beta, p, D);
        t.value[{k}] = v.value;
        t.error[{k}] = v.error;
    }
    t.normalization = "raw Jacquet integral, vol(o_E) = vol(o_F) = 1; entry 0 is the normalization constant";
    t.provenance = {{"oracle", "jacquet_u3"}, {"beta", beta.get_str()}, {"p", std::to_string(p)}, {"depth", std::to_string(D)}};
    return t;
}

std::complex<double> whittaker_at(const WhittakerTable& table, const Mat& g, int e) {
    if (table.n != 1) throw std::invalid_argument("whittaker_at: only n = 1 tables");
    Iwasawa iw = iwasawa_decompose(g, 1, e);
    const Mat& b = iw.b;
    int k = b(0, 0).val();
    // b = n t with t = diag(b00, b11, b22); psi_N(n) = psi_E(n_{01}), n_{01} = b01 / b11
    QE n01 = b(0, 1) * b(1, 1).inv();
    double ang = angle_E(n01).get_d();
    return e_angle(ang) * table.at({k});
}

bool support_vanishes(const Mat& x) {
    for (const auto& v : x.d)
        if (v.val() < 0) return true;
    return false;
}

}  // namespace newform
