#include "newform/hecke.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace newform {

// ---- GL side

void GLHeckeElement::add_term(const std::vector<int>& ell, const mpq_class& c) {
    if (int(ell.size()) != 2 * n + 1) throw std::invalid_argument("GLHeckeElement: exponent vector of wrong length");
    // f_0 (and its image f_{2n} under the involution) may carry negative exponents
    for (size_t i = 1; i + 1 < ell.size(); ++i)
        if (ell[i] < 0) throw std::invalid_argument("GLHeckeElement: negative exponent on f_" + std::to_string(i));
    mpq_class& t = terms[ell];
    t += c;
    t.canonicalize();
    if (sgn(t) == 0) terms.erase(ell);
}

GLHeckeElement GLHeckeElement::monomial(int n, const std::vector<int>& ell, const mpq_class& c) {
    GLHeckeElement h;
    h.n = n;
    h.add_term(ell, c);
    return h;
}

GLHeckeElement GLHeckeElement::operator+(const GLHeckeElement& o) const {
    GLHeckeElement r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

GLHeckeElement GLHeckeElement::operator*(const GLHeckeElement& o) const {
    GLHeckeElement r;
    r.n = n;
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<int> e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

GLHeckeElement GLHeckeElement::operator*(const mpq_class& c) const {
    GLHeckeElement r;
    r.n = n;
    for (const auto& [e, c0] : terms) r.add_term(e, c0 * c);
    return r;
}

GLHeckeElement involution_iota(const GLHeckeElement& h, int p) {
    const int n = h.n, N = 2 * n + 1;
    GLHeckeElement r;
    r.n = n;
    for (const auto& [e, c] : h.terms) {
        std::vector<int> rev(N);
        long s = 0;  // exponent of q_E
        for (int i = 0; i < N; ++i) {
            rev[N - 1 - i] = e[i];
            s += long(e[i]) * (n - i);
        }
        r.add_term(rev, c * ppow(p, int(2 * s)));
    }
    return r;
}

mpz_class trace_count(int n, int a, int m, int p) {
    if (m < a) return 0;
    const int N = 2 * n + 1, ell = m - a;
    mpq_class tr = 0;
    std::vector<int> e(N, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == N - 1) {
            e[i] = left;
            GLHeckeElement img = involution_iota(GLHeckeElement::monomial(n, e), p);
            auto it = img.terms.find(e);
            if (it != img.terms.end()) tr += it->second;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, ell);
    if (tr.get_den() != 1) throw std::logic_error("trace_count: non-integral trace");
    return tr.get_num();
}

// ---- H side cosets

namespace {

// all sum_{i=lo}^{hi-1} d_i p^i with digits d_i in [0, p)
std::vector<mpq_class> digit_reps(int p, int lo, int hi) {
    std::vector<mpq_class> out{0};
    for (int i = lo; i < hi; ++i) {
        std::vector<mpq_class> next;
        mpq_class pi = ppow(p, i);
        for (const auto& x : out)
            for (int d = 0; d < p; ++d) next.push_back(x + d * pi);
        out.swap(next);
    }
    for (auto& x : out) x.canonicalize();
    return out;
}

std::vector<QE> digit_reps_E(const Field& f, int lo, int hi) {
    auto r = digit_reps(f.p, lo, hi);
    std::vector<QE> out;
    for (const auto& a : r)
        for (const auto& b : r) out.emplace_back(f, a, b);
    return out;
}

Mat h_torus(const Field& f, const std::vector<int>& mu) {
    const int n = int(mu.size());
    Mat t = identity(f, 2 * n);
    for (int i = 0; i < n; ++i) {
        t(i, i) = uniformizer_pow(f, mu[i]);
        t(2 * n - 1 - i, 2 * n - 1 - i) = uniformizer_pow(f, -mu[i]);
    }
    return t;
}

// D h D^{-1}, D = diag(p^m I_n, I_n): conjugates R_{n,m} onto R_{n,0}
Mat level_conj(const Mat& h, int m) {
    const int n = h.rows / 2;
    Mat g = h;
    const Field f = h.field();
    QE up = uniformizer_pow(f, m), dn = uniformizer_pow(f, -m);
    for (int i = 0; i < n; ++i)
        for (int j = n; j < 2 * n; ++j) {
            g(i, j) = g(i, j) * up;
            g(j, i) = g(j, i) * dn;
        }
    return g;
}

bool in_double_coset(const Mat& h, const std::vector<int>& lambda, int m) {
    const int n = int(lambda.size());
    Mat g = level_conj(h, m);
    if (min_val(g) < -lambda[0]) return false;
    std::vector<int> want(2 * n);
    for (int i = 0; i < n; ++i) {
        want[i] = lambda[i];
        want[2 * n - 1 - i] = -lambda[i];
    }
    return elementary_divisors(g) == want;
}

void check_lambda(const std::vector<int>& lambda) {
    if (lambda.empty()) throw std::invalid_argument("partition needs n >= 1 entries");
    for (size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] < 0 || (i && lambda[i] > lambda[i - 1]))
            throw std::invalid_argument("partition must be weakly decreasing and nonnegative");
}

}  // namespace

mpq_class borel_delta_half(const std::vector<int>& mu, int p) {
    const int n = int(mu.size());
    long s = 0;
    for (int k = 1; k <= n; ++k) s += long(2 * (n - k) + 1) * mu[k - 1];
    return ppow(p, int(-s));
}

std::vector<HCoset> hecke_cosets(const Field& f, const std::vector<int>& lambda, int m, int K, long budget) {
    check_lambda(lambda);
    const int n = int(lambda.size()), L = lambda[0];
    if (n > 2) throw std::invalid_argument("hecke_cosets: only n <= 2");
    std::vector<HCoset> out;
    long examined = 0;
    auto charge = [&](long c) {
        examined += c;
        if (examined > budget)
            throw BudgetExceeded("hecke_cosets: more than " + std::to_string(budget) + " candidates");
    };
    auto lo = [&](int b) { return std::max(b, -K); };
    if (n == 1) {
        for (int mu = -L; mu <= L; ++mu) {
            // (1,2) entry of D p^mu v D^{-1} is p^{mu+m} z delta
            auto zs = digit_reps(f.p, lo(-L - mu - m), -m);
            charge(long(zs.size()));
            Mat t = h_torus(f, {mu});
            for (const auto& z : zs) {
                Mat v = identity(f, 2);
                v(0, 1) = QE(f, z) * delta(f);
                Mat h = t * v;
                if (in_double_coset(h, lambda, m)) out.push_back({{mu}, h});
            }
        }
        return out;
    }
    // n = 2: v = n(x) s(B), B = [[y, z1 delta], [z2 delta, -conj y]]
    for (int mu1 = -L; mu1 <= L; ++mu1)
        for (int mu2 = -L; mu2 <= L; ++mu2) {
            const int b1 = -L - mu1 - m, b2 = -L - mu2 - m, bx = std::max(-L - mu1, -L + mu2);
            auto xs = digit_reps_E(f, lo(bx), 0);
            auto ys = digit_reps_E(f, lo(b2), -m);
            auto z2s = digit_reps(f.p, lo(b2), -m);
            auto z1s = digit_reps(f.p, lo(std::min(b1, bx + b2)), -m);
            charge(long(xs.size()) * long(ys.size()) * long(z1s.size()) * long(z2s.size()));
            Mat t = h_torus(f, {mu1, mu2});
            for (const auto& x : xs) {
                Mat nx = h_extract(root_element(f, 2, {RootKind::EiMinusEj, 1, 2}, x), 2);
                Mat tn = t * nx;
                for (const auto& y : ys)
                    for (const auto& z1 : z1s)
                        for (const auto& z2 : z2s) {
                            Mat s = identity(f, 4);
                            s(0, 2) = y;
                            s(0, 3) = QE(f, z1) * delta(f);
                            s(1, 2) = QE(f, z2) * delta(f);
                            s(1, 3) = -y.conj();
                            Mat h = tn * s;
                            if (in_double_coset(h, lambda, m)) out.push_back({{mu1, mu2}, h});
                        }
            }
        }
    return out;
}

SatakeResult satake_transform(const std::vector<int>& lambda, int n, int m, int p, int K, long budget) {
    if (int(lambda.size()) != n) throw std::invalid_argument("satake_transform: lambda needs n entries");
    const Field f = Field::make(p);
    auto count = [&](int k) {
        std::map<std::vector<int>, long> c;
        for (const auto& cs : hecke_cosets(f, lambda, m, k, budget)) ++c[cs.mu];
        return c;
    };
    auto c0 = count(K), c1 = count(K + 2);
    if (c0 != c1) throw TruncationUnstable("satake_transform: coset counts change between K and K+2; raise K");
    SatakeResult r{Poly(n), K, 0};
    for (const auto& [mu, c] : c0) {
        r.value = r.value + Poly::monomial(n, mu, borel_delta_half(mu, p) * c);
        r.cosets += c;
    }
    return r;
}

Poly satake_transform(const HHeckeElement& phi, int p, int K, long budget) {
    Poly s(phi.n);
    for (const auto& [lam, c] : phi.terms) s = s + satake_transform(lam, phi.n, phi.m, p, K, budget).value * c;
    return s;
}

std::vector<std::vector<int>> conjectural_basis_partitions(int n, int a, int m) {
    if (m < a) throw std::invalid_argument("conjectural_basis_partitions: need m >= a");
    const int bound = ((m - a) % 2 == 0 ? m - a : m - a - 1) / 2;
    std::vector<std::vector<int>> out;
    std::vector<int> lam(n, 0);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == n) {
            out.push_back(lam);
            return;
        }
        for (int x = 0; x <= cap; ++x) {
            lam[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- vectors

VectorExpr VectorExpr::base(const Field& f, int n) {
    VectorExpr u;
    u.n = n;
    u.terms.push_back({identity(f, 2 * n + 1), 1});
    return u;
}

VectorExpr VectorExpr::translate(const Mat& t) const {
    VectorExpr u = *this;
    for (auto& [h, c] : u.terms) h = t * h;
    return u;
}

VectorExpr VectorExpr::operator+(const VectorExpr& o) const {
    VectorExpr u = *this;
    u.terms.insert(u.terms.end(), o.terms.begin(), o.terms.end());
    return u;
}

VectorExpr VectorExpr::operator*(const mpq_class& c) const {
    VectorExpr u = *this;
    for (auto& [h, c0] : u.terms) c0 *= c;
    return u;
}

VectorExpr hecke_star(const std::vector<int>& lambda, int level, const VectorExpr& u, int K, long budget) {
    if (int(lambda.size()) != u.n) throw std::invalid_argument("hecke_star: lambda needs n entries");
    if (u.terms.empty()) return u;
    const Field f = u.terms[0].first.field();
    VectorExpr out;
    out.n = u.n;
    for (const auto& cs : hecke_cosets(f, lambda, level, K, budget)) {
        Mat g = h_embed(cs.h, u.n);
        for (const auto& [h, c] : u.terms) out.terms.push_back({g * h, c});
    }
    return out;
}

VectorExpr level_raise(const std::vector<int>& lambda, int m, int mp, const VectorExpr& u, int K, long budget) {
    if ((m - mp) % 2 != 0) throw std::invalid_argument("level_raise: m and m' must have the same parity");
    if (mp < m + 2 * (lambda.empty() ? 0 : lambda[0]))
        throw std::invalid_argument("level_raise: need m' >= m + 2 lambda_1");
    if (u.terms.empty()) return u;
    const Field f = u.terms[0].first.field();
    const int e = m % 2, l = m / 2, lp = mp / 2;
    VectorExpr w = u.translate(t_ell(f, u.n, l));
    w = hecke_star(lambda, e, w, K, budget);
    return w.translate(t_ell(f, u.n, -lp));
}

VectorExpr level_one_projection(const VectorExpr& u) {
    if (u.n != 1) throw std::invalid_argument("level_one_projection: n = 1 only");
    if (u.terms.empty()) return u;
    const Field f = u.terms[0].first.field();
    // R_{1,1} / (R_{1,1} cap R_{1,0}): chi_{2e1}(d/p), d = 0..p-1, and w_{I}(p)
    VectorExpr out;
    out.n = 1;
    std::vector<Mat> reps;
    for (int d = 0; d < f.p; ++d) reps.push_back(root_element(f, 1, {RootKind::TwoEk, 1, 0}, QE(f, mpq_class(d, f.p))));
    reps.push_back(weyl_rep(f, 1, {1}, {1}, uniformizer_pow(f, 1)));
    for (const auto& k : reps)
        for (const auto& [h, c] : u.terms) out.terms.push_back({k * h, c});
    return out;
}

std::complex<double> whittaker_eval(const WhittakerTable& base_table, int e, const VectorExpr& u, const Mat& g) {
    std::complex<double> s = 0;
    for (const auto& [h, c] : u.terms) s += c.get_d() * whittaker_at(base_table, g * h, e);
    return s;
}

WhittakerTable torus_table(const WhittakerTable& base_table, int e, const VectorExpr& u, int kmin, int kmax) {
    WhittakerTable t;
    t.n = u.n;
    t.p = base_table.p;
    const Field f = Field::make(base_table.p);
    for (int k = kmin; k <= kmax; ++k) {
        t.value[{k}] = whittaker_eval(base_table, e, u, t_ell(f, u.n, k));
        double err = 0;
        for (const auto& [h, c] : u.terms) err += std::abs(c.get_d());
        double base_err = 0;
        for (const auto& [mu, er] : base_table.error) base_err = std::max(base_err, er);
        t.error[{k}] = err * base_err;
    }
    t.normalization = base_table.normalization;
    t.provenance = base_table.provenance;
    return t;
}

WhittakerTable apply_level_raising(const std::vector<int>& lambda, int m, int mp, const WhittakerTable& table,
                                   int kmin, int kmax, int K, long budget) {
    if (table.n != 1) throw std::invalid_argument("apply_level_raising: n = 1 tables only");
    if (m > 1) throw std::invalid_argument("apply_level_raising: base level must be 0 or 1");
    const Field f = Field::make(table.p);
    VectorExpr u = level_raise(lambda, m, mp, VectorExpr::base(f, 1), K, budget);
    WhittakerTable t = torus_table(table, m, u, kmin, kmax);
    std::string lam;
    for (int x : lambda) lam += (lam.empty() ? "" : ",") + std::to_string(x);
    t.provenance["level_raising"] = "lambda=(" + lam + ") m=" + std::to_string(m) + " m'=" + std::to_string(mp);
    return t;
}

}  // namespace newform
