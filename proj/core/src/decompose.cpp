#include <numeric>

#include "newform/matgroups.hpp"

namespace newform {

HenselResult hensel_solve(const QE& beta, const QE& a, const QE& c, int m, int M) {
    const Field f = beta.field();
    const QE half(f, mpq_class(1, 2));
    auto G = [&](const QE& w) { return beta * w + half * a * QE(f, w.norm()) - c; };

    QE w = reduce_precision(c * beta.inv(), M);
    int steps = 1;
    for (;;) {
        QE r = G(w);
        if (r.val() >= M) break;
        if (steps > 64) throw ArithmeticError("hensel_solve: no convergence");
        // Jacobian over F^2 of w -> G(w) at w = u + v delta
        QE du = beta + a * QE(f, w.a);
        QE dv = beta * delta(f) - a * QE(f, mpq_class(f.eps) * w.b);
        mpq_class j11 = du.a, j21 = du.b, j12 = dv.a, j22 = dv.b;
        mpq_class det = j11 * j22 - j12 * j21;
        if (sgn(det) == 0) throw ArithmeticError("hensel_solve: singular Jacobian");
        mpq_class su = (j22 * r.a - j12 * r.b) / det;
        mpq_class sv = (-j21 * r.a + j11 * r.b) / det;
        w = reduce_precision(w - QE(f, su, sv), M);
        ++steps;
    }
    if (!w.is_zero() && w.val() < m) throw ArithmeticError("hensel_solve: solution left p^m");
    return {w, steps};
}

Mat CompactDecomp::product(int n) const {
    const Field f = z.field();
    Mat g = scale(identity(f, 2 * n + 1), z);
    for (const auto& x : minus) g = g * root_element(f, n, x.root, x.y);
    for (const auto& x : plus) g = g * root_element(f, n, x.root, x.y);
    return g * r;
}

CompactDecomp decompose_compact(const Mat& g, const LevelSpec& spec, int M, std::vector<int> plus_order) {
    const int n = spec.n, m = spec.m, N = 2 * n + 1, mid = n;
    if (m < 1) throw std::invalid_argument("decompose_compact: level must be >= 1");
    if (g.rows != N) throw std::invalid_argument("decompose_compact: size mismatch");
    if (auto bad = K_violation(g, n, m)) throw std::invalid_argument("decompose_compact: not in K_{n,m}, violated " + *bad);
    const Field f = g.field();
    const int Mw = M + 2 * m + 4;

    if (plus_order.empty()) {
        plus_order.resize(n);
        std::iota(plus_order.begin(), plus_order.end(), 1);
    }

    CompactDecomp out;
    out.prec = M;
    QE beta = g(mid, mid);
    std::vector<QE> x(n + 1);
    for (int j = 1; j <= n; ++j) {
        QE aj = g(j - 1, mid), cj = g(N - j, mid);
        HenselResult h = hensel_solve(beta, aj, cj, m, Mw);
        out.newton_steps = std::max(out.newton_steps, h.steps);
        x[j] = -h.w.conj();
        beta -= x[j] * aj;
        out.minus.push_back({{RootKind::NegEk, j, 0}, x[j]});
    }
    out.z = beta;
    QE zinv = beta.inv();
    for (int i : plus_order) out.plus.push_back({{RootKind::Ek, i, 0}, reduce_precision(g(i - 1, mid) * zinv, Mw)});

    Mat r = scale(g, zinv);
    // r = P^{-1} M^{-1} z^{-1} g
    Mat Minv = identity(f, N);
    for (auto it = out.minus.rbegin(); it != out.minus.rend(); ++it) Minv = Minv * root_element(f, n, it->root, -it->y);
    Mat Pinv = identity(f, N);
    for (auto it = out.plus.rbegin(); it != out.plus.rend(); ++it) Pinv = Pinv * root_element(f, n, it->root, -it->y);
    r = Pinv * Minv * r;

    for (int i = 0; i < N; ++i) {
        QE want = QE(f, i == mid ? 1 : 0);
        if ((r(i, mid) - want).val() < M || (r(mid, i) - want).val() < M)
            throw ArithmeticError("decompose_compact: remainder does not fix v0 to precision " + std::to_string(M));
    }
    r = reduce_precision(r, Mw);
    for (int i = 0; i < N; ++i) {
        r(i, mid) = QE(f, i == mid ? 1 : 0);
        r(mid, i) = QE(f, i == mid ? 1 : 0);
    }
    out.r = r;
    return out;
}

}  // namespace newform
