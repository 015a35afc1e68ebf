#include <algorithm>
#include <numeric>

#include "newform/matgroups.hpp"

namespace newform {

namespace {

// w_S(p^e) with S = {1..r}; conjugates the lower parabolic onto the upper one.
Mat side_switch(const Field& f, int n, int r, int e) {
    std::vector<int> S(r);
    std::iota(S.begin(), S.end(), 1);
    return weyl_rep(f, n, {}, S, uniformizer_pow(f, e));
}

}  // namespace

HyperspecialBruhat decompose_hyperspecial(const Mat& k, int n) {
    const Field f = k.field();
    const int N = 2 * n + 1;
    if (!in_K(k, n, 0)) throw std::invalid_argument("decompose_hyperspecial: not in K_{n,0}");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> S;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) S.push_back(i + 1);
            Mat w = weyl_rep(f, n, perm, S, QE(f, 1));
            // LU without pivoting; needs unit pivots
            Mat U = k * unitary_inverse(w);
            Mat L = identity(f, N);
            bool ok = true;
            for (int c = 0; c < N && ok; ++c) {
                if (U(c, c).val() != 0) { ok = false; break; }
                QE s = U(c, c).inv();
                for (int i = c + 1; i < N; ++i) {
                    if (U(i, c).is_zero()) continue;
                    QE t = U(i, c) * s;
                    L(i, c) = t;
                    for (int j = c; j < N; ++j) U(i, j) -= t * U(c, j);
                }
            }
            if (!ok) continue;
            Mat t(N, N, f);
            for (int i = 0; i < N; ++i) t(i, i) = U(i, i);
            Mat u = U * inverse(t);
            return {L, u, t, w};
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw std::logic_error("decompose_hyperspecial: no Weyl element gives an integral LU factorisation");
}

Mat coset_representative(const Field& f, int n, int r, const LevelSpec& spec, Side side, int d) {
    if (d < 0 || d > spec.l()) throw std::invalid_argument("coset_representative: d out of range");
    if (side == Side::Pbar) return root_element(f, n, {RootKind::Ek, r, 0}, uniformizer_pow(f, d));
    return root_element(f, n, {RootKind::NegEk, r, 0}, uniformizer_pow(f, spec.e() + d));
}

ClassifyTrace coset_classify_trace(const Mat& g_in, int n, int r, const LevelSpec& spec, Side side, int M) {
    if (r < 1 || r > n) throw std::invalid_argument("coset_classify: need 1 <= r <= n");
    const Field f = g_in.field();
    const int l = spec.l();
    if (l >= M) throw Indeterminate("coset_classify: precision M must exceed l");
    Mat g = g_in;
    if (side == Side::P) g = unitary_inverse(side_switch(f, n, r, spec.e())) * g;

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    ClassifyTrace out;
    if (spec.e() == 1) {
        // (i) g = pbar * k1 with k1 in K_{n,1}: Iwasawa of w^{-1} g, w = w_{I_n}(p)
        Mat w = weyl_rep(f, n, {}, all, uniformizer_pow(f, 1));
        Iwasawa iw = iwasawa_decompose(unitary_inverse(w) * g, n, 1);
        Mat k1 = w * iw.k;
        // (ii) decompose k1; factors chi_{eps_i}, i > r, sit in the Levi of Pbar and go left
        std::vector<int> order;
        for (int i = r + 1; i <= n; ++i) order.push_back(i);
        for (int i = 1; i <= r; ++i) order.push_back(i);
        CompactDecomp dc = decompose_compact(k1, {n, 1}, M, order);
        for (const auto& x : dc.plus) {
            if (x.root.i > r) continue;
            // (iii) torus normalisation only keeps the valuation
            int v = x.y.val();
            out.di.push_back(v >= M ? kInf : v);
        }
    } else {
        Mat w = weyl_rep(f, n, {}, all, QE(f, 1));
        Iwasawa iw = iwasawa_decompose(unitary_inverse(w) * g, n, 0);
        Mat k0 = w * iw.k;
        // K_{n,0} = (Nbar cap K)(N cap K)(E^1 T cap K) W_0; the chi_{eps_i} parameters of the
        // N-factor are the entries of its middle column.
        HyperspecialBruhat hb = decompose_hyperspecial(k0, n);
        for (int i = 1; i <= r; ++i) out.di.push_back(hb.u(i - 1, n).val());
    }
    // (iv) sort by the Weyl group of GL_r and collapse adjacent pairs; trailing exponents pad to l
    std::vector<int> ds = out.di;
    std::sort(ds.begin(), ds.end());
    int d = l;
    for (int v : ds) d = std::min(d, v);
    out.d = d;
    return out;
}

int coset_classify(const Mat& g, int n, int r, const LevelSpec& spec, Side side, int M) {
    return coset_classify_trace(g, n, r, spec, side, M).d;
}

int coset_pairing_invariant(const Mat& g_in, int n, int r, const LevelSpec& spec, Side side) {
    const Field f = g_in.field();
    const int N = 2 * n + 1, mid = n, l = spec.l(), e = spec.e(), m = spec.m;
    Mat g = g_in;
    if (side == Side::P) g = unitary_inverse(side_switch(f, n, r, e)) * g;

    // v0 + (p^l e + p^m v0 + p^{l+e} f) is stable under K0_{n,m}; project g of it onto E^r = V / W^perp.
    std::vector<QE> x(r);
    for (int i = 0; i < r; ++i) x[i] = g(i, mid);
    Mat B(r, N, f);
    for (int j = 0; j < N; ++j) {
        int s = j < mid ? l : (j == mid ? m : l + e);
        QE sc = uniformizer_pow(f, s);
        for (int i = 0; i < r; ++i) B(i, j) = g(i, j) * sc;
    }
    // column Hermite reduction over o_E: first r columns become a lower triangular basis
    for (int i = 0; i < r; ++i) {
        int best = -1, bv = kInf;
        for (int j = i; j < N; ++j) {
            int v = B(i, j).val();
            if (v < bv) { bv = v; best = j; }
        }
        if (best < 0) throw ArithmeticError("pairing invariant: degenerate lattice");
        for (int k = 0; k < r; ++k) std::swap(B(k, i), B(k, best));
        QE s = B(i, i).inv();
        for (int j = i + 1; j < N; ++j) {
            if (B(i, j).is_zero()) continue;
            QE u = B(i, j) * s;
            for (int k = i; k < r; ++k) B(k, j) -= B(k, i) * u;
        }
    }
    // solve lower triangular system B c = x
    std::vector<QE> c(r, QE(f));
    int v = kInf;
    for (int i = 0; i < r; ++i) {
        QE t = x[i];
        for (int k = 0; k < i; ++k) t -= B(i, k) * c[k];
        c[i] = t * B(i, i).inv();
        v = std::min(v, c[i].val());
    }
    return l + std::min(0, v);
}

}  // namespace newform
