#include "newform/matgroups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace newform {

Mat identity(const Field& f, int N) {
    Mat r(N, N, f);
    for (int i = 0; i < N; ++i) r(i, i).a = 1;
    return r;
}

Mat antidiag(const Field& f, int N) {
    Mat r(N, N, f);
    for (int i = 0; i < N; ++i) r(i, N - 1 - i).a = 1;
    return r;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch in product");
    Mat r(x.rows, y.cols, x.field());
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const QE& xik = x(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const QE& ykj = y(k, j);
                if (ykj.is_zero()) continue;
                r(i, j) += xik * ykj;
            }
        }
    return r;
}

Mat operator+(const Mat& x, const Mat& y) {
    Mat r = x;
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] += y.d[i];
    return r;
}

Mat operator-(const Mat& x, const Mat& y) {
    Mat r = x;
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] -= y.d[i];
    return r;
}

Mat scale(const Mat& x, const QE& s) {
    Mat r = x;
    for (auto& v : r.d) v *= s;
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.cols, x.rows, x.field());
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

Mat conj(const Mat& x) {
    Mat r = x;
    for (auto& v : r.d) v = v.conj();
    return r;
}

Mat conj_transpose(const Mat& x) { return conj(transpose(x)); }

Mat inverse(const Mat& x) {
    if (x.rows != x.cols) throw std::invalid_argument("inverse of non-square matrix");
    int N = x.rows;
    Mat a = x, inv = identity(x.field(), N);
    for (int c = 0; c < N; ++c) {
        int piv = -1;
        for (int i = c; i < N; ++i)
            if (!a(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) throw ArithmeticError("singular matrix");
        if (piv != c)
            for (int j = 0; j < N; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        QE s = a(c, c).inv();
        for (int j = 0; j < N; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (int i = 0; i < N; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            QE t = a(i, c);
            for (int j = 0; j < N; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= t * a(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= t * inv(c, j);
            }
        }
    }
    return inv;
}

Mat unitary_inverse(const Mat& g) {
    // J g^* J: entry (i,j) = conj(g(N-1-j, N-1-i))
    int N = g.rows;
    Mat r(N, N, g.field());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = g(N - 1 - j, N - 1 - i).conj();
    return r;
}

Mat submatrix(const Mat& x, int r0, int c0, int nr, int nc) {
    Mat r(nr, nc, x.field());
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r(i, j) = x(r0 + i, c0 + j);
    return r;
}

Mat reduce_precision(const Mat& x, int M) {
    Mat r = x;
    for (auto& v : r.d) v = reduce_precision(v, M);
    return r;
}

int min_val(const Mat& x) {
    int v = kInf;
    for (const auto& e : x.d) v = std::min(v, e.val());
    return v;
}

std::string to_string(const Mat& x) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < x.rows; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < x.cols; ++j) os << (j ? ", " : "") << x(i, j).str();
    }
    os << "]";
    return os.str();
}

bool val_at_least(const QE& x, int t, int prec) {
    int v = x.val();
    if (v < prec) return v >= t;
    if (t <= prec) return true;
    throw Indeterminate("valuation threshold " + std::to_string(t) + " exceeds known precision " + std::to_string(prec));
}

// ---- roots

std::string Root::str() const {
    switch (kind) {
        case RootKind::EiMinusEj: return "e" + std::to_string(i) + "-e" + std::to_string(j);
        case RootKind::EiPlusEj: return "e" + std::to_string(i) + "+e" + std::to_string(j);
        case RootKind::Ek: return "e" + std::to_string(i);
        case RootKind::NegEk: return "-e" + std::to_string(i);
        case RootKind::NegEiPlusEj: return "-e" + std::to_string(i) + "+e" + std::to_string(j);
        case RootKind::NegEiMinusEj: return "-e" + std::to_string(i) + "-e" + std::to_string(j);
        case RootKind::TwoEk: return "2e" + std::to_string(i);
        case RootKind::NegTwoEk: return "-2e" + std::to_string(i);
    }
    return "?";
}

Mat root_element(const Field& f, int n, const Root& a, const QE& y) {
    int N = 2 * n + 1, mid = n;
    auto idx = [&](int i) {
        if (i < 1 || i > n) throw std::invalid_argument("root index out of range: " + a.str());
        return i - 1;
    };
    auto star = [&](int i) { return N - 1 - i; };
    bool pair = a.kind == RootKind::EiMinusEj || a.kind == RootKind::EiPlusEj || a.kind == RootKind::NegEiPlusEj ||
                a.kind == RootKind::NegEiMinusEj;
    if (pair && !(a.i < a.j)) throw std::invalid_argument("root needs i < j: " + a.str());
    Mat g = identity(f, N);
    QE yb = y.conj();
    switch (a.kind) {
        case RootKind::EiMinusEj:
        case RootKind::NegEiPlusEj: {
            int i = idx(a.i), j = idx(a.j);
            g(i, j) += y;
            g(star(j), star(i)) -= yb;
            return a.kind == RootKind::EiMinusEj ? g : transpose(g);
        }
        case RootKind::EiPlusEj:
        case RootKind::NegEiMinusEj: {
            int i = idx(a.i), j = idx(a.j);
            g(i, star(j)) += y;
            g(j, star(i)) -= yb;
            return a.kind == RootKind::EiPlusEj ? g : transpose(g);
        }
        case RootKind::Ek:
        case RootKind::NegEk: {
            int k = idx(a.i);
            g(k, mid) += y;
            g(mid, star(k)) -= yb;
            g(k, star(k)) -= y * yb * QE(f, mpq_class(1, 2));
            return a.kind == RootKind::Ek ? g : transpose(g);
        }
        case RootKind::TwoEk:
        case RootKind::NegTwoEk: {
            if (!y.in_F()) throw std::invalid_argument("parameter of " + a.str() + " must lie in F");
            int k = idx(a.i);
            QE v = y * delta(f);
            if (a.kind == RootKind::TwoEk) g(k, star(k)) += v;
            else g(star(k), k) += v;
            return g;
        }
    }
    return g;
}

Mat gl_embed(const Mat& a, int n, const Mat* g0) {
    const Field f = a.field();
    int r = a.rows, N = 2 * n + 1;
    Mat g = identity(f, N);
    Mat Jr = antidiag(f, r);
    Mat astar = Jr * conj_transpose(inverse(a)) * Jr;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            g(i, j) = a(i, j);
            g(N - r + i, N - r + j) = astar(i, j);
        }
    if (g0) {
        if (g0->rows != N - 2 * r) throw std::invalid_argument("gl_embed: middle block has wrong size");
        for (int i = 0; i < g0->rows; ++i)
            for (int j = 0; j < g0->cols; ++j) g(r + i, r + j) = (*g0)(i, j);
    }
    return g;
}

Mat weyl_rep(const Field& f, int n, const std::vector<int>& perm, const std::vector<int>& S, const QE& y) {
    if (y.is_zero()) throw std::invalid_argument("weyl_rep: y must be nonzero");
    int N = 2 * n + 1;
    Mat w = identity(f, n);
    if (!perm.empty()) {
        if (int(perm.size()) != n) throw std::invalid_argument("weyl_rep: permutation has wrong length");
        w = Mat(n, n, f);
        for (int i = 0; i < n; ++i) w(perm[i] - 1, i).a = 1;
    }
    Mat wS = identity(f, N);
    QE yi = y.conj().inv();
    for (int j : S) {
        if (j < 1 || j > n) throw std::invalid_argument("weyl_rep: index out of range");
        int a = j - 1, b = N - 1 - a;
        wS(a, a) = QE(f);
        wS(b, b) = QE(f);
        wS(a, b) = yi;
        wS(b, a) = y;
    }
    return gl_embed(w, n) * wS;
}

Mat torus(const Field& f, int n, const std::vector<QE>& t, const QE& t0) {
    Mat a(n, n, f);
    for (int i = 0; i < n; ++i) a(i, i) = t[i];
    Mat mid(1, 1, f);
    mid(0, 0) = t0;
    return gl_embed(a, n, &mid);
}

Mat h_embed(const Mat& h, int n) {
    int r2 = h.rows, r = r2 / 2, N = 2 * n + 1;
    Mat g = identity(h.field(), N);
    auto pos = [&](int i) { return i < r ? i : N - r2 + i; };
    for (int i = 0; i < r2; ++i)
        for (int j = 0; j < r2; ++j) g(pos(i), pos(j)) = h(i, j);
    return g;
}

Mat h_extract(const Mat& g, int r) {
    int N = g.rows, r2 = 2 * r;
    Mat h(r2, r2, g.field());
    auto pos = [&](int i) { return i < r ? i : N - r2 + i; };
    for (int i = 0; i < r2; ++i)
        for (int j = 0; j < r2; ++j) h(i, j) = g(pos(i), pos(j));
    return h;
}

Mat t_ell(const Field& f, int n, int l) {
    int N = 2 * n + 1;
    Mat t = identity(f, N);
    for (int i = 0; i < n; ++i) {
        t(i, i) = uniformizer_pow(f, l);
        t(N - 1 - i, N - 1 - i) = uniformizer_pow(f, -l);
    }
    return t;
}

Mat mid_embed(const Mat& g0, int n) {
    int N = 2 * n + 1, k = (N - g0.rows) / 2;
    Mat g = identity(g0.field(), N);
    for (int i = 0; i < g0.rows; ++i)
        for (int j = 0; j < g0.cols; ++j) g(k + i, k + j) = g0(i, j);
    return g;
}

// ---- membership

bool is_unitary(const Mat& g, int prec) {
    const Field f = g.field();
    int N = g.rows;
    if (g.cols != N) return false;
    Mat J = antidiag(f, N);
    Mat d = conj_transpose(g) * J * g - J;
    if (prec >= kInf) {
        for (const auto& x : d.d)
            if (!x.is_zero()) return false;
        return true;
    }
    int loss = std::min(0, min_val(g));
    for (const auto& x : d.d)
        if (x.val() < prec + 2 * loss) return false;
    return true;
}

namespace {

// block index of row/col i in the (n | 1 | n) partition
int blk(int i, int n) { return i < n ? 0 : (i == n ? 1 : 2); }

// Shape of K_{n,m}: lower valuation bound per block; the middle entry is 1 + p^m.
int k_bound(int bi, int bj, int m) {
    static const int base[3][3] = {{0, 0, -1}, {1, 0, 0}, {1, 1, 0}};
    return base[bi][bj] * m;
}

std::optional<std::string> shape_violation(const Mat& g, int n, int m, int l, int prec) {
    const Field f = g.field();
    int N = 2 * n + 1;
    if (g.rows != N || g.cols != N) return "size";
    // conjugation by t_l^{-1}: entry (i,j) gets multiplied by p^{-s_i + s_j}
    auto s = [&](int i) { return i < n ? l : (i == n ? 0 : -l); };
    static const char* names[3] = {"1", "2", "3"};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int bi = blk(i, n), bj = blk(j, n);
            int shift = s(i) - s(j);
            if (bi == 1 && bj == 1) {
                if (m == 0) {
                    if (!val_at_least(g(i, j), 0, prec)) return "block(2,2)";
                } else if (!val_at_least(g(i, j) - QE(f, 1), m, prec)) {
                    return "block(2,2)";
                }
                continue;
            }
            if (!val_at_least(g(i, j), k_bound(bi, bj, m) + shift, prec))
                return std::string("block(") + names[bi] + "," + names[bj] + ")";
        }
    if (!is_unitary(g, prec)) return "unitarity";
    return std::nullopt;
}

}  // namespace

std::optional<std::string> K_violation(const Mat& g, int n, int m, int prec) { return shape_violation(g, n, m, 0, prec); }

bool in_K(const Mat& g, int n, int m, int prec) { return !shape_violation(g, n, m, 0, prec); }

bool in_K0(const Mat& g, int n, int m, int prec) { return !shape_violation(g, n, m, m / 2, prec); }

bool in_R(const Mat& h, int r, int m, int prec) {
    int r2 = 2 * r;
    if (h.rows != r2 || h.cols != r2) return false;
    for (int i = 0; i < r2; ++i)
        for (int j = 0; j < r2; ++j) {
            int bi = i < r ? 0 : 2, bj = j < r ? 0 : 2;
            if (!val_at_least(h(i, j), k_bound(bi, bj, m), prec)) return false;
        }
    return is_unitary(h, prec);
}

namespace {

bool in_gl_o(const Mat& a, int prec) {
    for (const auto& x : a.d)
        if (!val_at_least(x, 0, prec)) return false;
    // det is a unit iff the reduction is invertible: use exact elimination on the matrix
    Mat t = a;
    int r = t.rows;
    for (int c = 0; c < r; ++c) {
        int piv = -1;
        for (int i = c; i < r; ++i)
            if (t(i, c).val() == 0) { piv = i; break; }
        if (piv < 0) return false;
        for (int j = 0; j < r; ++j) std::swap(t(c, j), t(piv, j));
        QE s = t(c, c).inv();
        for (int i = c + 1; i < r; ++i) {
            if (t(i, c).is_zero()) continue;
            QE u = t(i, c) * s;
            for (int j = c; j < r; ++j) t(i, j) -= u * t(c, j);
        }
    }
    return true;
}

}  // namespace

bool in_Gamma(const Mat& a, int m, int prec) {
    if (!in_gl_o(a, prec)) return false;
    if (m == 0) return true;
    int r = a.rows;
    for (int j = 0; j + 1 < r; ++j)
        if (!val_at_least(a(r - 1, j), m, prec)) return false;
    return val_at_least(a(r - 1, r - 1) - QE(a.field(), 1), m, prec);
}

bool in_GammaPrime(const Mat& a, int m, int prec) { return in_Gamma(transpose(a), m, prec); }

bool in_E1(const QE& z, int m, int prec) {
    QE one(z.field(), 1);
    QE nn(z.field(), z.norm());
    if (prec >= kInf) {
        if (!(nn == one)) return false;
    } else if ((nn - one).val() < prec) {
        return false;
    }
    if (m == 0) return val_at_least(z, 0, prec);
    return val_at_least(z - one, m, prec);
}

bool in_B(const Mat& g, int prec) {
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < i; ++j)
            if (!val_at_least(g(i, j), kInf, prec)) return false;
    return is_unitary(g, prec);
}

namespace {

bool zero_block(const Mat& g, int r0, int r1, int c0, int c1, int prec) {
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) {
            const QE& x = g(i, j);
            if (prec >= kInf ? !x.is_zero() : x.val() < prec) return false;
        }
    return true;
}

}  // namespace

bool in_P(const Mat& g, int n, int r, int prec) {
    int N = 2 * n + 1;
    return zero_block(g, r, N, 0, r, prec) && zero_block(g, N - r, N, r, N - r, prec) && is_unitary(g, prec);
}

bool in_Pbar(const Mat& g, int n, int r, int prec) {
    int N = 2 * n + 1;
    return zero_block(g, 0, r, r, N, prec) && zero_block(g, r, N - r, N - r, N, prec) && is_unitary(g, prec);
}

LeviPart levi_part_extract(const Mat& h, int n, int r, Side side) {
    int N = 2 * n + 1;
    if (h.rows != N || r < 1 || r > n) throw std::invalid_argument("levi_part_extract: bad shape");
    bool ok = side == Side::Pbar ? zero_block(h, 0, r, r, N, kInf) && zero_block(h, r, N - r, N - r, N, kInf)
                                 : zero_block(h, r, N, 0, r, kInf) && zero_block(h, N - r, N, r, N - r, kInf);
    if (!ok) throw std::invalid_argument("levi_part_extract: element is not in the parabolic (block shape)");
    return {submatrix(h, 0, 0, r, r), submatrix(h, r, r, N - 2 * r, N - 2 * r)};
}

std::vector<int> elementary_divisors(const Mat& g) {
    if (g.rows != g.cols) throw std::invalid_argument("elementary_divisors: square matrix expected");
    Mat a = g;
    int N = a.rows;
    std::vector<int> out;
    for (int k = 0; k < N; ++k) {
        int bi = -1, bj = -1, bv = kInf;
        for (int i = k; i < N; ++i)
            for (int j = k; j < N; ++j) {
                int v = a(i, j).val();
                if (v < bv) { bv = v; bi = i; bj = j; }
            }
        if (bi < 0) throw ArithmeticError("elementary_divisors: singular matrix");
        for (int j = 0; j < N; ++j) std::swap(a(k, j), a(bi, j));
        for (int i = 0; i < N; ++i) std::swap(a(i, k), a(i, bj));
        QE s = a(k, k).inv();
        for (int i = k + 1; i < N; ++i) {
            if (a(i, k).is_zero()) continue;
            QE u = a(i, k) * s;
            for (int j = k; j < N; ++j) a(i, j) -= u * a(k, j);
        }
        for (int j = k + 1; j < N; ++j) a(k, j) = QE(a.field());
        out.push_back(bv);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

// ---- sampling

QE Sampler::norm_one() {
    QE c = unit();
    return c / c.conj();
}

QE Sampler::norm_one_congruent(int m) {
    if (m == 0) return norm_one();
    QE c(f, random_rational(rng, f.p, 0, digits), random_rational(rng, f.p, m, digits));
    while (vp(c.a, f.p) != 0) c.a += 1;
    return c / c.conj();
}

Root Sampler::random_root(int n, bool positive_only, bool negative_only) {
    std::vector<RootKind> kinds;
    if (!negative_only) {
        kinds.push_back(RootKind::Ek);
        kinds.push_back(RootKind::TwoEk);
        if (n >= 2) {
            kinds.push_back(RootKind::EiMinusEj);
            kinds.push_back(RootKind::EiPlusEj);
        }
    }
    if (!positive_only) {
        kinds.push_back(RootKind::NegEk);
        kinds.push_back(RootKind::NegTwoEk);
        if (n >= 2) {
            kinds.push_back(RootKind::NegEiPlusEj);
            kinds.push_back(RootKind::NegEiMinusEj);
        }
    }
    RootKind k = kinds[rng() % kinds.size()];
    Root a{k, 1, 0};
    if (k == RootKind::Ek || k == RootKind::NegEk || k == RootKind::TwoEk || k == RootKind::NegTwoEk) {
        a.i = 1 + int(rng() % n);
    } else {
        a.i = 1 + int(rng() % n);
        do a.j = 1 + int(rng() % n);
        while (a.j == a.i);
        if (a.i > a.j) std::swap(a.i, a.j);
    }
    return a;
}

namespace {

// Lower valuation bound of the root group parameter inside K_{n,m}.
int k_param_bound(RootKind k, int m) {
    switch (k) {
        case RootKind::EiMinusEj:
        case RootKind::NegEiPlusEj:
        case RootKind::Ek: return 0;
        case RootKind::EiPlusEj:
        case RootKind::TwoEk: return -m;
        case RootKind::NegEk:
        case RootKind::NegEiMinusEj:
        case RootKind::NegTwoEk: return m;
    }
    return 0;
}

bool needs_F(RootKind k) { return k == RootKind::TwoEk || k == RootKind::NegTwoEk; }

}  // namespace

Mat Sampler::K_element(int n, int m) {
    Mat g = identity(f, 2 * n + 1);
    for (int step = 0; step < word_length; ++step) {
        int kind = int(rng() % 10);
        if (kind < 7) {
            Root a = random_root(n);
            int lo = k_param_bound(a.kind, m);
            QE y = needs_F(a.kind) ? f_elt(lo) : elt(lo);
            g = g * root_element(f, n, a, y);
        } else if (kind == 7) {
            std::vector<QE> t;
            for (int i = 0; i < n; ++i) t.push_back(unit());
            g = g * torus(f, n, t, norm_one_congruent(m));
        } else if (kind == 8) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> S;
            for (int i = 1; i <= n; ++i)
                if (rng() % 2) S.push_back(i);
            g = g * weyl_rep(f, n, perm, S, uniformizer_pow(f, m));
        } else {
            g = scale(g, norm_one_congruent(m));
        }
    }
    return g;
}

Mat Sampler::K0_element(int n, int m) {
    Mat t = t_ell(f, n, m / 2);
    return t * K_element(n, m) * unitary_inverse(t);
}

Mat Sampler::R_element(int r, int m) {
    Mat g = identity(f, 2 * r + 1);
    for (int step = 0; step < word_length; ++step) {
        int kind = int(rng() % 8);
        if (kind < 6) {
            Root a = random_root(r);
            if (a.kind == RootKind::Ek || a.kind == RootKind::NegEk) continue;
            int lo = k_param_bound(a.kind, m);
            QE y = needs_F(a.kind) ? f_elt(lo) : elt(lo);
            g = g * root_element(f, r, a, y);
        } else if (kind == 6) {
            std::vector<QE> t;
            for (int i = 0; i < r; ++i) t.push_back(unit());
            g = g * torus(f, r, t, QE(f, 1));
        } else {
            std::vector<int> perm(r);
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> S;
            for (int i = 1; i <= r; ++i)
                if (rng() % 2) S.push_back(i);
            g = g * weyl_rep(f, r, perm, S, uniformizer_pow(f, m));
        }
    }
    return h_extract(g, r);
}

Mat Sampler::Gamma_element(int r, int m) {
    Mat a = identity(f, r);
    for (int step = 0; step < word_length; ++step) {
        int i = int(rng() % r), j = int(rng() % r);
        Mat e = identity(f, r);
        if (i == j) {
            e(i, i) = i == r - 1 && m > 0 ? QE(f, 1) + elt(m) : unit();
            while (e(i, i).val() != 0) e(i, i) = unit();
        } else {
            e(i, j) = elt(i == r - 1 ? m : 0);
        }
        a = a * e;
    }
    return a;
}

Mat Sampler::Pbar_element(int n, int r, int spread) {
    Mat a(r, r, f);
    do {
        for (auto& x : a.d) x = elt(-spread);
    } while (a.rows > 0 && [&] {
        try {
            inverse(a);
            return false;
        } catch (const ArithmeticError&) {
            return true;
        }
    }());
    Mat g0 = n > r ? G_element(n - r, spread) : identity(f, 1);
    g0 = scale(g0, norm_one());
    Mat h = gl_embed(a, n, &g0);
    for (int step = 0; step < word_length / 2; ++step) {
        Root x = random_root(n, false, true);
        if (x.i > r) continue;  // keep to the unipotent radical (plus Levi pieces, harmless)
        QE y = needs_F(x.kind) ? f_elt(-spread) : elt(-spread);
        h = h * root_element(f, n, x, y);
    }
    return h;
}

Mat Sampler::Levi_lift(int n, int r, const LevelSpec& spec, int d) {
    const int N = 2 * n + 1, e = spec.e(), l = spec.l();
    Mat h = identity(f, N);
    for (int step = 0; step < word_length; ++step) {
        int kind = int(rng() % 5);
        if (n == r && kind >= 1) kind = 0;
        Mat x;
        if (kind == 0) {
            x = gl_embed(transpose(Gamma_element(r, l - d)), n);
        } else if (kind == 1) {
            x = mid_embed(h_embed(R_element(n - r, e), n - r), n);
        } else if (kind == 2) {
            x = mid_embed(scale(identity(f, 2 * (n - r) + 1), norm_one_congruent(spec.m)), n);
        } else {
            int j = r + 1 + int(rng() % (n - r));
            QE y = elt(0);
            if (kind == 3)
                x = root_element(f, n, {RootKind::NegEiPlusEj, r, j}, -y) *
                    root_element(f, n, {RootKind::Ek, j, 0}, y * uniformizer_pow(f, d));
            else
                x = root_element(f, n, {RootKind::NegEiMinusEj, r, j}, y.conj() * uniformizer_pow(f, e)) *
                    root_element(f, n, {RootKind::NegEk, j, 0}, y * uniformizer_pow(f, e + d));
        }
        h = h * x;
    }
    return h;
}

Mat Sampler::G_element(int n, int spread) {
    Mat g = identity(f, 2 * n + 1);
    for (int step = 0; step < word_length; ++step) {
        int kind = int(rng() % 8);
        if (kind < 6) {
            Root a = random_root(n);
            int lo = -spread + int(rng() % (2 * spread + 1));
            QE y = needs_F(a.kind) ? f_elt(lo) : elt(lo);
            g = g * root_element(f, n, a, y);
        } else if (kind == 6) {
            std::vector<QE> t;
            for (int i = 0; i < n; ++i) t.push_back(unit() * uniformizer_pow(f, int(rng() % (2 * spread + 1)) - spread));
            g = g * torus(f, n, t, norm_one());
        } else {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> S;
            for (int i = 1; i <= n; ++i)
                if (rng() % 2) S.push_back(i);
            g = g * weyl_rep(f, n, perm, S, uniformizer_pow(f, int(rng() % 3)));
        }
    }
    return g;
}

}  // namespace newform
