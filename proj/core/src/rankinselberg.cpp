#include "newform/rankinselberg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace newform {

namespace {

std::string key_str(const std::vector<int>& mu) {
    std::string s;
    for (int x : mu) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

// dominant mu with r parts, each >= lo, summing to ell
void dominant_parts(int r, int lo, int ell, std::vector<std::vector<int>>& out) {
    std::vector<int> mu(r, lo);
    auto rec = [&](auto&& self, int i, int left, int cap) -> void {
        if (i == r - 1) {
            if (left >= lo && left <= cap) {
                mu[i] = left;
                out.push_back(mu);
            }
            return;
        }
        // remaining r - i - 1 parts each >= lo
        for (int x = std::min(cap, left - (r - i - 1) * lo); x >= lo; --x) {
            if (x * (r - i) < left) break;  // cannot reach the total with parts <= x
            mu[i] = x;
            self(self, i + 1, left - x, x);
        }
    };
    if (r == 0) {
        if (ell == 0) out.push_back({});
        return;
    }
    rec(rec, 0, ell, ell - (r - 1) * lo);
}

// X_i -> 0 keeping the variable slot; throws on negative powers
Poly zero_var_keep(const Poly& P, int i) {
    Poly out(P.nv);
    for (const auto& [e, c] : P.t) {
        if (e[i] < 0) throw std::domain_error("zero_var_keep: negative power");
        if (e[i] == 0) out.add_term(e, c);
    }
    return out;
}

std::complex<double> cpow_int(std::complex<double> z, int k) {
    std::complex<double> r = 1;
    std::complex<double> b = k >= 0 ? z : 1.0 / z;
    for (int i = 0; i < std::abs(k); ++i) r *= b;
    return r;
}

CheckResult make_result(std::string name, double residual, double tol, std::string detail = {}) {
    CheckResult r;
    r.check = std::move(name);
    r.residual = residual;
    r.tolerance = tol;
    r.pass = residual <= tol;
    r.detail = std::move(detail);
    return r;
}

int moebius_prime_power(const mpz_class& d, int p) {
    if (d == 1) return 1;
    if (d == p) return -1;
    return 0;
}

}  // namespace

Poly PolyTable::at(const std::vector<int>& mu) const {
    auto it = value.find(mu);
    if (it != value.end()) return it->second;
    if (!mu.empty() && mu.back() < 0) return Poly(nv);
    throw std::out_of_range("PolyTable: missing entry " + key_str(mu));
}

SymbolicTable symbolic_table(int n, int lo, int hi, const WhittakerTable* numeric) {
    SymbolicTable st;
    for (int d = n * lo; d <= n * hi; ++d) {
        std::vector<std::vector<int>> mus;
        dominant_parts(n, lo, d, mus);
        for (auto& mu : mus)
            if (mu[0] <= hi) st.keys.push_back(mu);
    }
    st.table.n = n;
    st.table.nv = n + int(st.keys.size());
    st.binding.assign(st.table.nv, 0.0);
    for (size_t i = 0; i < st.keys.size(); ++i) {
        st.table.value[st.keys[i]] = Poly::var(st.table.nv, n + int(i));
        if (numeric) st.binding[n + i] = numeric->at(st.keys[i]);
    }
    return st;
}

PolyTable u3_formula_table(int p, int kmax) {
    PolyTable t;
    t.n = 1;
    t.nv = 3;
    for (int k = 0; k <= kmax; ++k) {
        Poly h(3);
        for (int i = 0; i <= k; ++i) h.add_term({0, k - 2 * i, 1}, ppow(p, -2 * k));
        t.value[{k}] = h;
    }
    return t;
}

std::vector<Poly> unitary_param_coeffs(int nv, const std::vector<int>& beta_vars) {
    std::vector<Poly> c{Poly::constant(nv, 1)};
    auto mult = [&](const Poly& root) {
        c.push_back(Poly(nv));
        for (size_t k = c.size() - 1; k >= 1; --k) c[k] -= root * c[k - 1];
    };
    for (int v : beta_vars) mult(Poly::var(nv, v));
    mult(Poly::constant(nv, 1));
    for (auto it = beta_vars.rbegin(); it != beta_vars.rend(); ++it) {
        std::vector<int> e(nv, 0);
        e[*it] = -1;
        mult(Poly::monomial(nv, e));
    }
    return c;
}

PolyTable torus_table_exact(const PolyTable& base, int e, const VectorExpr& u, int kmin, int kmax) {
    if (base.n != 1 || u.n != 1) throw std::invalid_argument("torus_table_exact: n = 1 only");
    PolyTable out;
    out.n = 1;
    out.nv = base.nv;
    for (int k = kmin; k <= kmax; ++k) {
        if (u.terms.empty()) {
            out.value[{k}] = Poly(base.nv);
            continue;
        }
        const Field fu = u.terms[0].first.field();
        Mat g = t_ell(fu, 1, k);
        std::map<mpq_class, Poly> by_angle;
        for (const auto& [h, c] : u.terms) {
            Iwasawa iw = iwasawa_decompose(g * h, 1, e);
            int kk = iw.b(0, 0).val();
            mpq_class ang = angle_E(iw.b(0, 1) * iw.b(1, 1).inv());
            Poly w = base.at({kk});
            if (w.is_zero()) continue;
            auto it = by_angle.find(ang);
            if (it == by_angle.end()) by_angle.emplace(ang, w * c);
            else it->second += w * c;
        }
        Poly s(base.nv);
        // angles grouped by denominator; each nontrivial group must be a full orbit with a common value
        std::map<mpz_class, std::vector<std::pair<mpq_class, Poly>>> by_den;
        for (auto& [a, P] : by_angle) {
            if (P.is_zero()) continue;
            by_den[a.get_den()].push_back({a, P});
        }
        for (auto& [d, group] : by_den) {
            if (d == 1) {
                for (auto& [a, P] : group) s += P;
                continue;
            }
            // count of primitive d-th roots for d a prime power p^j
            mpz_class d_over_p = d / fu.p;
            mpz_class phi = d - d_over_p;
            if (mpz_class(long(group.size())) != phi)
                throw std::domain_error("torus_table_exact: incomplete character orbit at k = " + std::to_string(k));
            for (auto& [a, P] : group)
                if (P != group[0].second)
                    throw std::domain_error("torus_table_exact: non-constant value on a character orbit");
            s += group[0].second * mpq_class(moebius_prime_power(d, fu.p));
        }
        out.value[{k}] = s;
    }
    return out;
}

mpq_class psi_weight(const std::vector<int>& mu, int n, int p) {
    const int r = int(mu.size());
    long s = 0, tot = 0;
    for (int i = 0; i < r; ++i) {
        tot += mu[i];
        for (int j = i + 1; j < r; ++j) s += mu[i] - mu[j];
    }
    return ppow(p, int(2 * s + tot * (2 * n - r)));
}

Poly psi_partial_sum(const PolyTable& table, int n, int r, int ell, int p, int lo) {
    if (r < 1 || r > n) throw std::invalid_argument("psi_partial_sum: need 1 <= r <= n");
    if (lo > 0) throw std::invalid_argument("psi_partial_sum: lo <= 0");
    if (lo < 0 && r != n) throw std::invalid_argument("psi_partial_sum: negative parts only for r = n");
    Poly out(table.nv);
    std::vector<std::vector<int>> mus;
    dominant_parts(r, lo, ell, mus);
    for (const auto& mu : mus) {
        std::vector<int> key(mu);
        key.resize(n, 0);
        Poly w = table.at(key);
        if (w.is_zero()) continue;
        out += w * gl_whittaker_value(mu, p, table.nv) * psi_weight(mu, n, p);
    }
    return out;
}

XiObject xi_assemble(const PolyTable& table, int n, int r, int m, int a, const std::vector<Poly>& pcoeffs, int p,
                     const XiOptions& opt) {
    if (table.n != n) throw std::invalid_argument("xi_assemble: table rank mismatch");
    if (table.nv < n) throw std::invalid_argument("xi_assemble: table needs at least n variables");
    XiObject x;
    x.n = n;
    x.r = r;
    x.m = m;
    x.a = a;
    x.p = p;
    x.nv = table.nv;
    const int T = opt.T;
    x.psi = SeriesY(table.nv, T);
    for (int ell = opt.psi_lo * r; ell <= T; ++ell) x.psi.set(ell, psi_partial_sum(table, n, r, ell, p, opt.psi_lo));
    SeriesY P = tensor_poly(pcoeffs, r, p, T);
    SeriesY A = asai_poly(r, table.nv, p, T);
    x.series = P * x.psi * lfactor_eval(A);
    x.degree_lo = opt.psi_lo * r;
    x.degree_hi = opt.degree_hi == XiOptions::kDefault ? (m - a - 2 * opt.psi_lo) * r : opt.degree_hi;
    x.poly = Poly(table.nv);
    for (const auto& [k, c] : x.series.c)
        if (k >= x.degree_lo && k <= x.degree_hi) x.poly += c;
    return x;
}

XiObject xi_assemble(const PolyTable& table, int n, int r, int m, int a, const UnramParam& pi, int p,
                     const XiOptions& opt) {
    std::vector<Poly> pc;
    for (const auto& c : pi.poly_coeffs()) pc.push_back(Poly::constant(table.nv, c));
    return xi_assemble(table, n, r, m, a, pc, p, opt);
}

NumPoly bind_numeric(const Poly& P, int r, const std::vector<std::complex<double>>& binding) {
    NumPoly out;
    for (const auto& [e, c] : P.t) {
        std::complex<double> v = c.get_d();
        for (int i = r; i < P.nv; ++i)
            if (e[i] != 0) {
                if (size_t(i) >= binding.size()) throw std::out_of_range("bind_numeric: unbound symbol");
                v *= cpow_int(binding[i], e[i]);
            }
        std::vector<int> key(e.begin(), e.begin() + r);
        out[key] += v;
    }
    return out;
}

NumPoly to_numpoly(const Poly& P, int r) {
    for (const auto& [e, c] : P.t)
        for (int i = r; i < P.nv; ++i)
            if (e[i] != 0) throw std::invalid_argument("to_numpoly: polynomial involves symbols");
    return bind_numeric(P, r, {});
}

double max_abs(const NumPoly& P) {
    double m = 0;
    for (const auto& [e, c] : P) m = std::max(m, std::abs(c));
    return m;
}

NumPoly operator-(const NumPoly& a, const NumPoly& b) {
    NumPoly out = a;
    for (const auto& [e, c] : b) out[e] -= c;
    return out;
}

NumPoly operator*(const NumPoly& a, const NumPoly& b) {
    NumPoly out;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            std::vector<int> e(e1);
            for (size_t i = 0; i < e.size() && i < e2.size(); ++i) e[i] += e2[i];
            out[e] += c1 * c2;
        }
    return out;
}

NumPoly scale(const NumPoly& a, std::complex<double> c) {
    NumPoly out = a;
    for (auto& [e, v] : out) v *= c;
    return out;
}

std::string to_string(const NumPoly& P) {
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (const auto& [e, c] : P) {
        if (std::abs(c) < 1e-14) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real();
        if (c.imag() != 0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
        os << ")";
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) os << "*X" << i + 1 << (e[i] == 1 ? "" : "^" + std::to_string(e[i]));
    }
    return first ? "0" : os.str();
}

double trailing_norm(const XiObject& x, const std::vector<std::complex<double>>& binding) {
    double m = 0;
    for (const auto& [k, c] : x.series.c)
        if (k > x.degree_hi || k < x.degree_lo) m = std::max(m, max_abs(bind_numeric(c, x.r, binding)));
    return m;
}

int trailing_degree_exact(const XiObject& x) {
    int best = -1;
    for (const auto& [k, c] : x.series.c)
        if (k > x.degree_hi && !c.is_zero()) best = k;
    return best;
}

CheckResult check_functional_equation(const XiObject& x, const std::vector<std::complex<double>>* binding, double tol) {
    std::vector<int> sh(x.nv, 0);
    for (int i = 0; i < x.r; ++i) sh[i] = x.a - x.m;
    Poly lhs = x.poly.invert_vars(x.r);
    Poly rhs = x.poly.shift(sh);
    if (!binding) {
        Poly d = lhs - rhs;
        return make_result("xi.functional_equation", d.max_abs_coeff().get_d(), 0, d.is_zero() ? "exact" : d.str());
    }
    double res = max_abs(bind_numeric(lhs, x.r, *binding) - bind_numeric(rhs, x.r, *binding));
    return make_result("xi.functional_equation", res, tol);
}

CheckResult check_grading(const XiObject& x) {
    if (x.r != x.n) throw std::invalid_argument("check_grading: r = n only");
    auto g = yn_grade(x.poly, x.r);
    int low = 0;
    for (const auto& [d, P] : g)
        if (!P.is_zero()) low = std::min(low, d);
    return make_result("xi.grading", low < 0 ? double(-low) : 0.0, 0, "lowest Y_n degree " + std::to_string(low));
}

CheckResult check_restriction(const PolyTable& table, int n, int r, int m, int a, const std::vector<Poly>& pcoeffs,
                              int p, int T) {
    if (r < 2) throw std::invalid_argument("check_restriction: r >= 2");
    XiOptions opt;
    opt.T = T;
    XiObject hi = xi_assemble(table, n, r, m, a, pcoeffs, p, opt);
    XiObject lo = xi_assemble(table, n, r - 1, m, a, pcoeffs, p, opt);
    const int Tc = std::min(hi.series.T, lo.series.T);
    mpq_class worst = 0;
    std::string detail = "exact through Y^" + std::to_string(Tc);
    for (int k = std::min(hi.series.low(), lo.series.low()); k <= Tc; ++k) {
        Poly d = zero_var_keep(hi.series.at(k), r - 1) - lo.series.at(k);
        if (!d.is_zero()) {
            worst = std::max(worst, d.max_abs_coeff());
            detail = "first mismatch at Y^" + std::to_string(k);
            break;
        }
    }
    return make_result("xi.restriction", worst.get_d(), 0, detail);
}

CheckResult check_kernel(const XiObject& x) {
    bool zero = x.poly.is_zero() && x.series.is_zero();
    return make_result("xi.kernel", zero ? 0.0 : 1.0, 0, zero ? "zero" : "nonzero");
}

std::complex<double> newform_constant(const XiObject& x, const std::vector<std::complex<double>>& binding, double tol,
                                      CheckResult* report) {
    NumPoly b = bind_numeric(x.poly, x.r, binding);
    std::vector<int> zero(x.r, 0);
    std::complex<double> c0 = b.count(zero) ? b[zero] : 0.0;
    double worst = 0;
    std::string off;
    for (const auto& [e, c] : b)
        if (e != zero && std::abs(c) > worst) {
            worst = std::abs(c);
            off = key_str(e);
        }
    // also the non-terminated part
    worst = std::max(worst, trailing_norm(x, binding));
    if (report) *report = make_result("xi.newform_constant", worst, tol, off.empty() ? "constant" : "largest at X^" + off);
    if (worst > tol && !report) throw std::runtime_error("newform_constant: non-constant, worst " + std::to_string(worst));
    return c0;
}

Poly newform_constant_exact(const XiObject& x, CheckResult* report) {
    Poly c(x.nv), rest(x.nv);
    for (const auto& [e, v] : x.poly.t) {
        bool xfree = true;
        for (int i = 0; i < x.r; ++i) xfree &= e[i] == 0;
        (xfree ? c : rest).add_term(e, v);
    }
    int tail = trailing_degree_exact(x);
    bool ok = rest.is_zero() && tail < 0;
    if (report)
        *report = make_result("xi.newform_constant", ok ? 0.0 : 1.0, 0,
                              ok ? "exact" : (tail >= 0 ? "series continues to Y^" + std::to_string(tail) : rest.str()));
    else if (!ok)
        throw std::runtime_error("newform_constant_exact: not constant in X");
    return c;
}

CheckResult check_hecke_equivariance(const NumPoly& xi_phi_v, const Poly& satake, const NumPoly& xi_v, double tol) {
    int r = xi_v.empty() ? satake.nv : int(xi_v.begin()->first.size());
    NumPoly pred = to_numpoly(satake, r) * xi_v;
    return make_result("xi.hecke_equivariance", max_abs(xi_phi_v - pred), tol);
}

NumPoly oldform_prediction(const NumPoly& base, int n, int m, int a, const Poly& satake, int p) {
    if ((m - a) % 2 != 0 || m < a) throw std::invalid_argument("oldform_prediction: parity mismatch");
    const int h = (m - a) / 2;
    NumPoly mono{{std::vector<int>(n, h), std::pow(double(p), n * (n - 1) + (m - a))}};
    return mono * to_numpoly(satake, n) * base;
}

NumPoly oldform_prediction_from_weight(const NumPoly& base, int n, int m, int a, const Poly& satake, int p) {
    if ((m - a) % 2 != 0 || m < a) throw std::invalid_argument("oldform_prediction_from_weight: parity mismatch");
    const int h = (m - a) / 2;
    NumPoly mono{{std::vector<int>(n, h), std::pow(double(p), n * n * h)}};
    return mono * to_numpoly(satake, n) * base;
}

CheckResult check_level_a_plus_one(const NumPoly& xi, int n, double tol) {
    std::vector<int> zero(n, 0);
    auto it = xi.find(zero);
    std::complex<double> lam = it == xi.end() ? 0.0 : it->second;
    Poly s(n);
    for (int j = 0; j <= n; ++j) s += elem_sym(j, n, n);
    NumPoly pred = scale(to_numpoly(s, n), lam);
    double scale_ref = std::max(1.0, std::abs(lam));
    return make_result("xi.level_a_plus_one", max_abs(xi - pred) / scale_ref, tol);
}

std::vector<Poly> fe_solution_space(int n, int shift, int K) {
    // monomial symmetric basis m_lambda, K >= lambda_1 >= ... >= lambda_n >= 0
    std::vector<std::vector<int>> lams;
    std::vector<int> lam(n, 0);
    auto rec = [&](auto&& self, int i, int cap) -> void {
        if (i == n) {
            lams.push_back(lam);
            return;
        }
        for (int x = 0; x <= cap; ++x) {
            lam[i] = x;
            self(self, i + 1, x);
        }
    };
    rec(rec, 0, K);
    auto msym = [&](const std::vector<int>& l) {
        Poly P(n);
        std::vector<int> e(l);
        std::sort(e.begin(), e.end());
        do P.add_term(e, 1);
        while (std::next_permutation(e.begin(), e.end()));
        return P;
    };
    std::vector<Poly> basis;
    for (const auto& l : lams) basis.push_back(msym(l));
    // rows indexed by (r, monomial)
    std::map<std::pair<int, std::vector<int>>, std::vector<mpq_class>> rows;
    const size_t N = basis.size();
    for (size_t j = 0; j < N; ++j) {
        for (int r = 1; r <= n; ++r) {
            Poly R = basis[j];
            for (int i = n - 1; i >= r; --i) R = R.set_zero_drop(i);
            std::vector<int> sh(r, -shift);
            Poly D = R.invert_vars(r) - R.shift(sh);
            for (const auto& [e, c] : D.t) {
                auto& row = rows[{r, e}];
                if (row.empty()) row.assign(N, 0);
                row[j] += c;
            }
        }
    }
    // reduced row echelon form and nullspace
    std::vector<std::vector<mpq_class>> M;
    for (auto& [k, row] : rows) M.push_back(row);
    std::vector<int> pivcol;
    size_t rank = 0;
    for (size_t c = 0; c < N && rank < M.size(); ++c) {
        size_t piv = rank;
        while (piv < M.size() && sgn(M[piv][c]) == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[rank], M[piv]);
        mpq_class inv = 1 / M[rank][c];
        for (auto& v : M[rank]) v *= inv;
        for (size_t i = 0; i < M.size(); ++i) {
            if (i == rank || sgn(M[i][c]) == 0) continue;
            mpq_class f = M[i][c];
            for (size_t k = 0; k < N; ++k) M[i][k] -= f * M[rank][k];
        }
        pivcol.push_back(int(c));
        ++rank;
    }
    std::vector<bool> is_piv(N, false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<Poly> out;
    for (size_t fcol = 0; fcol < N; ++fcol) {
        if (is_piv[fcol]) continue;
        Poly v = basis[fcol];
        for (size_t i = 0; i < pivcol.size(); ++i)
            if (sgn(M[i][fcol]) != 0) v -= basis[pivcol[i]] * M[i][fcol];
        out.push_back(v);
    }
    return out;
}

std::complex<double> gk_section(const Mat& h, int m, std::complex<double> z) {
    if (h.rows != 2 || h.cols != 2) throw std::invalid_argument("gk_section: 2x2 matrices");
    const Field f = h.field();
    const QE& c = h(1, 0);
    const QE& d = h(1, 1);
    // h = b k: the bottom row of k is conj(a) (c, d), which must lie in (p^m, o) and be primitive there
    const int vc = c.is_zero() ? kInf : c.val(), vd = d.is_zero() ? kInf : d.val();
    const int v = std::max(vc >= kInf / 2 ? -kInf : m - vc, vd >= kInf / 2 ? -kInf : -vd);
    QE abar = uniformizer_pow(f, v);
    Mat k(2, 2, f);
    k(1, 0) = abar * c;
    k(1, 1) = abar * d;
    if (-vd >= (vc >= kInf / 2 ? -kInf : m - vc)) {
        k(0, 0) = k(1, 1).conj().inv();  // unit
    } else {
        k(0, 1) = k(1, 0).conj().inv();
    }
    Mat b = h * inverse(k);
    if (!b(1, 0).is_zero() || !in_R(k, 1, m) || b(0, 0).val() != v)
        throw std::logic_error("gk_section: decomposition failed");
    return cpow_int(z, v);
}

GKReport gk_check(const mpq_class& alpha, int m, const std::vector<std::complex<double>>& s_values, int p, int D) {
    const Field f = Field::make(p);
    const double q = p;
    GKReport rep;
    const Mat w = antidiag(f, 2);
    auto u = [&](const mpq_class& x) {
        Mat t = identity(f, 2);
        t(0, 1) = QE(f, x) * delta(f);
        return t;
    };
    rep.identity_value = std::abs(gk_section(identity(f, 2), m, 0.5));
    auto M_of = [&](int mm, std::complex<double> z, double* err) {
        // integral over F of xi(w u(x)), vol(o_F) = 1; the section depends on val(x) only
        std::complex<double> s = 0;
        const int J = std::max(D, -mm + 1);
        for (int j = -D; j < J; ++j) s += gk_section(w * u(ppow(p, j)), mm, z) * std::pow(q, -j) * (1 - 1 / q);
        s += gk_section(w * u(0), mm, z) * std::pow(q, -J);
        if (err) {
            // omitted shells val(x) < -D: |z|^{-j} q^{-j}(1 - 1/q), geometric
            double rho = q * std::abs(z);
            *err = rho < 1 ? std::pow(rho, D + 1) * (1 - 1 / q) / (1 - rho) : INFINITY;
        }
        return s;
    };
    for (const auto& s : s_values) {
        std::complex<double> z = alpha.get_d() * std::pow(std::complex<double>(q), -2.0 * s);
        GKPoint pt;
        pt.s = s;
        pt.numeric = M_of(m, z, &pt.error_bound);
        pt.formula = cpow_int(q * z, m) * (1.0 - z) / (1.0 - q * z);
        rep.points.push_back(pt);
        rep.max_rel = std::max(rep.max_rel, std::abs(pt.numeric - pt.formula) / std::abs(pt.formula));
        std::complex<double> ratio = M_of(m + 1, z, nullptr) / pt.numeric;
        rep.m_scaling_residual = std::max(rep.m_scaling_residual, std::abs(ratio - q * z));
    }
    return rep;
}

std::complex<double> rs_ratio(const WhittakerTable& table, const UnramParam& pi, double alpha, std::complex<double> s,
                              int p) {
    if (table.n != 1) throw std::invalid_argument("rs_ratio: n = 1 tables");
    const double q = p;
    // q_E^{-s} alpha: the variable of both L-factors
    const std::complex<double> t = alpha * std::pow(std::complex<double>(q * q), -s);
    std::complex<double> Lten = 1;
    for (const auto& c : pi.inverse_roots) Lten /= (1.0 - c.get_d() * t);
    const std::complex<double> Las = 1.0 / (1.0 - t);
    // Psi(s) = sum_k W(k) kappa(k) (alpha q_E^{-s + 1/2})^k
    std::complex<double> psi = 0;
    const std::complex<double> y = alpha * std::pow(std::complex<double>(q * q), -s + 0.5);
    for (const auto& [mu, v] : table.value) psi += v * psi_weight(mu, 1, p).get_d() * cpow_int(y, mu[0]);
    return Las * psi / Lten;
}

}  // namespace newform
