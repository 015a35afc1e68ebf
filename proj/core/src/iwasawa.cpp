#include <vector>

#include "newform/matgroups.hpp"

namespace newform {

namespace {

// Right multiplications by elements of K_{n,e} that bring the last row of g to
// (0, ..., 0, c). Returns the accumulated product X with g X having that shape.
Mat clear_last_row(Mat& g, int n, int e) {
    const Field f = g.field();
    int N = 2 * n + 1, mid = n, last = N - 1;
    Mat X = identity(f, N);
    auto apply = [&](const Mat& x) {
        g = g * x;
        X = X * x;
    };

    // weighted pivot: columns in the first block and the middle carry weight -e
    int piv = -1, best = kInf;
    for (int i = 0; i < N; ++i) {
        if (i == mid) continue;
        int v = g(last, i).val();
        if (v >= kInf) continue;
        int w = v - (i <= mid ? e : 0);
        if (w < best) { best = w; piv = i; }
    }
    if (piv < 0) throw ArithmeticError("iwasawa: last row has no usable pivot (not a group element?)");

    auto swap_perm = [&](int a) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        std::swap(perm[0], perm[a]);
        return perm;
    };
    if (piv < mid) {
        if (piv != 0) apply(weyl_rep(f, n, swap_perm(piv), {}, QE(f, 1)));
        apply(weyl_rep(f, n, {}, {1}, uniformizer_pow(f, e)));
    } else if (piv != last) {
        apply(weyl_rep(f, n, swap_perm(last - piv), {}, QE(f, 1)));
    }

    QE c = g(last, last);
    QE cinv = c.inv();
    for (int j = 2; j <= n; ++j) {
        QE rho = g(last, j - 1);
        if (!rho.is_zero()) apply(root_element(f, n, {RootKind::NegEiMinusEj, 1, j}, (rho * cinv).conj()));
    }
    for (int j = 2; j <= n; ++j) {
        QE rho = g(last, N - j);
        if (!rho.is_zero()) apply(root_element(f, n, {RootKind::NegEiPlusEj, 1, j}, (rho * cinv).conj()));
    }
    {
        QE rho = g(last, mid);
        if (!rho.is_zero()) apply(root_element(f, n, {RootKind::NegEk, 1, 0}, (rho * cinv).conj()));
    }
    {
        QE rho = g(last, 0);
        if (!rho.is_zero()) {
            QE x = -(rho * cinv) * delta(f).inv();
            if (!x.in_F()) throw ArithmeticError("iwasawa: isotropy violated (not a unitary element)");
            apply(root_element(f, n, {RootKind::NegTwoEk, 1, 0}, x));
        }
    }
    for (int j = 0; j < last; ++j)
        if (!g(last, j).is_zero()) throw std::logic_error("iwasawa: last row not cleared");
    for (int i = 1; i < N; ++i)
        if (!g(i, 0).is_zero()) throw std::logic_error("iwasawa: first column not cleared");
    return X;
}

Mat iwasawa_b(Mat g, int n, int e) {
    if (n == 0) return g;
    clear_last_row(g, n, e);
    int N = 2 * n + 1;
    Mat inner = submatrix(g, 1, 1, N - 2, N - 2);
    Mat binner = iwasawa_b(inner, n - 1, e);
    // b = g' diag(1, k''^{-1}, 1) with k'' = binner^{-1} inner
    Mat kinner = unitary_inverse(binner) * inner;
    return g * mid_embed(unitary_inverse(kinner), n);
}

}  // namespace

Iwasawa iwasawa_decompose(const Mat& g, int n, int e) {
    if (e != 0 && e != 1) throw std::invalid_argument("iwasawa_decompose: e must be 0 or 1");
    if (g.rows != 2 * n + 1) throw std::invalid_argument("iwasawa_decompose: size mismatch");
    Mat b = iwasawa_b(g, n, e);
    Mat k = unitary_inverse(b) * g;
    return {b, k};
}

}  // namespace newform
