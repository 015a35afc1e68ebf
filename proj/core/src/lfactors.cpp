#include "newform/lfactors.hpp"

#include <stdexcept>

namespace newform {

std::vector<mpq_class> UnramParam::poly_coeffs() const {
    std::vector<mpq_class> c{1};
    for (const auto& r : inverse_roots) {
        c.push_back(0);
        for (size_t k = c.size() - 1; k >= 1; --k) c[k] -= r * c[k - 1];
    }
    return c;
}

UnramParam UnramParam::unitary(const std::vector<mpq_class>& beta) {
    UnramParam u;
    for (const auto& b : beta) {
        if (sgn(b) == 0) throw std::invalid_argument("UnramParam::unitary: zero Satake value");
        u.inverse_roots.push_back(b);
    }
    u.inverse_roots.push_back(1);
    for (auto it = beta.rbegin(); it != beta.rend(); ++it) u.inverse_roots.push_back(1 / *it);
    u.conj_self_dual = true;
    return u;
}

UnramParam UnramParam::gl(const std::vector<mpq_class>& alpha) {
    UnramParam u;
    u.inverse_roots = alpha;
    return u;
}

UnramParam UnramParam::dual() const {
    UnramParam u = *this;
    for (auto& c : u.inverse_roots) c = 1 / c;
    return u;
}

SeriesY tensor_poly(const std::vector<Poly>& pcoeffs, int r, int p, int T) {
    if (pcoeffs.empty()) throw std::invalid_argument("tensor_poly: empty polynomial");
    const int nv = pcoeffs[0].nv;
    SeriesY out(nv, T);
    out.set(0, Poly::constant(nv, 1));
    for (int j = 0; j < r; ++j) {
        SeriesY f(nv, T);
        Poly xj = Poly::var(nv, j);
        mpq_class s = 1;
        for (size_t k = 0; k < pcoeffs.size(); ++k) {
            f.set(int(k), pcoeffs[k] * xj.pow(int(k)) * s);
            s /= p;
        }
        out = out * f;
    }
    return out;
}

SeriesY tensor_poly(const UnramParam& pi, int r, int nv, int p, int T) {
    std::vector<Poly> pc;
    for (const auto& c : pi.poly_coeffs()) pc.push_back(Poly::constant(nv, c));
    return tensor_poly(pc, r, p, T);
}

SeriesY asai_poly(int r, int nv, int p, int T) {
    if (r < 1) throw std::invalid_argument("asai_poly: r >= 1");
    SeriesY out(nv, T);
    out.set(0, Poly::constant(nv, 1));
    const mpq_class qe_inv(1, long(p) * p), qh_inv(1, p);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            SeriesY f(nv, T);
            f.set(0, Poly::constant(nv, 1));
            f.set(2, -(Poly::var(nv, i) * Poly::var(nv, j)) * qe_inv);
            out = out * f;
        }
    for (int k = 0; k < r; ++k) {
        SeriesY f(nv, T);
        f.set(0, Poly::constant(nv, 1));
        f.set(1, -Poly::var(nv, k) * qh_inv);
        out = out * f;
    }
    return out;
}

SeriesY epsilon_poly(int a, int m, int r, int nv, int T) {
    std::vector<int> e(nv, 0);
    for (int i = 0; i < r; ++i) e[i] = a - m;
    SeriesY out(nv, T);
    out.set((a - m) * r, Poly::monomial(nv, e));
    return out;
}

int conductor_arith(const std::vector<ConductorPiece>& pieces) {
    int anchors = 0, total = 0;
    for (const auto& pc : pieces) {
        if (pc.a < 0) throw std::invalid_argument("conductor_arith: negative conductor");
        if (pc.kind == PieceKind::Anchor) {
            ++anchors;
            total += pc.a;
        } else {
            total += 2 * pc.a;
        }
    }
    if (anchors != 1) throw std::invalid_argument("conductor_arith: need exactly one anchor piece");
    return total;
}

SeriesY lfactor_eval(const SeriesY& P) {
    if (P.low() != 0 || !P.at(0).is_constant() || P.at(0).is_zero())
        throw std::domain_error("lfactor_eval: constant term must be a nonzero rational");
    return P.inverse();
}

SeriesY specialize_x(const SeriesY& s, int r, const std::vector<mpq_class>& alpha) {
    SeriesY out(s.nv - r, s.T);
    for (const auto& [k, p] : s.c) {
        Poly q = p;
        for (int j = r - 1; j >= 0; --j) q = q.substitute(j, alpha.at(j));
        out.set(k, q);
    }
    return out;
}

std::complex<double> eval_series(const SeriesY& s, const std::vector<std::complex<double>>& x, std::complex<double> Y) {
    std::complex<double> v = 0;
    for (const auto& [k, p] : s.c) v += p.eval(x) * std::pow(Y, k);
    return v;
}

}  // namespace newform
