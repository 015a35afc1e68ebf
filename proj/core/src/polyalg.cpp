#include "newform/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace newform {

namespace {

void check_same(const Poly& a, const Poly& b) {
    if (a.nv != b.nv) throw std::invalid_argument("Poly: variable count mismatch");
}

}  // namespace

Poly Poly::constant(int nv, const mpq_class& c) {
    Poly p(nv);
    p.add_term(std::vector<int>(nv, 0), c);
    return p;
}

Poly Poly::var(int nv, int i) {
    std::vector<int> e(nv, 0);
    e.at(i) = 1;
    return monomial(nv, e);
}

Poly Poly::monomial(int nv, std::vector<int> e, const mpq_class& c) {
    if (int(e.size()) != nv) throw std::invalid_argument("Poly::monomial: exponent length");
    Poly p(nv);
    p.add_term(e, c);
    return p;
}

bool Poly::is_constant() const {
    if (t.empty()) return true;
    if (t.size() > 1) return false;
    for (int x : t.begin()->first)
        if (x != 0) return false;
    return true;
}

mpq_class Poly::constant_term() const {
    auto it = t.find(std::vector<int>(nv, 0));
    return it == t.end() ? mpq_class(0) : it->second;
}

void Poly::add_term(const std::vector<int>& e, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = t.emplace(e, c);
    if (fresh) {
        it->second.canonicalize();
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) t.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    check_same(*this, o);
    for (const auto& [e, c] : o.t) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same(*this, o);
    for (const auto& [e, c] : o.t) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r(a.nv);
    std::vector<int> e(a.nv);
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            for (int i = 0; i < a.nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly operator*(Poly a, const mpq_class& c) {
    if (sgn(c) == 0) return Poly(a.nv);
    mpq_class cc = c;
    cc.canonicalize();
    for (auto& [e, x] : a.t) x *= cc;
    return a;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = constant(nv, 1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Poly Poly::invert_vars(int r) const {
    Poly o(nv);
    for (const auto& [e0, c] : t) {
        std::vector<int> e = e0;
        for (int i = 0; i < r; ++i) e[i] = -e[i];
        o.t.emplace(std::move(e), c);
    }
    return o;
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
    Poly o(nv);
    for (const auto& [e, c] : t) {
        std::vector<int> f = e;
        for (size_t i = 0; i < perm.size(); ++i) f[perm[i]] = e[i];
        o.t.emplace(std::move(f), c);
    }
    return o;
}

Poly Poly::scale_var(int i, const mpq_class& s) const {
    Poly o(nv);
    for (const auto& [e, c] : t) {
        mpq_class f = 1;
        int k = e[i];
        mpq_class base = k >= 0 ? s : mpq_class(1 / s);
        for (int j = 0; j < std::abs(k); ++j) f *= base;
        o.add_term(e, c * f);
    }
    return o;
}

Poly Poly::shift(const std::vector<int>& s) const {
    Poly o(nv);
    for (const auto& [e0, c] : t) {
        std::vector<int> e = e0;
        for (int i = 0; i < nv && i < int(s.size()); ++i) e[i] += s[i];
        o.t.emplace(std::move(e), c);
    }
    return o;
}

Poly Poly::set_zero_drop(int i) const {
    Poly o(nv - 1);
    for (const auto& [e, c] : t) {
        if (e[i] < 0) throw std::domain_error("Poly::set_zero_drop: negative power of the variable");
        if (e[i] > 0) continue;
        std::vector<int> f = e;
        f.erase(f.begin() + i);
        o.add_term(f, c);
    }
    return o;
}

Poly Poly::substitute(int i, const mpq_class& x) const {
    Poly o(nv - 1);
    for (const auto& [e, c] : t) {
        std::vector<int> f = e;
        f.erase(f.begin() + i);
        mpq_class v = 1, base = e[i] >= 0 ? x : mpq_class(1 / x);
        for (int j = 0; j < std::abs(e[i]); ++j) v *= base;
        o.add_term(f, c * v);
    }
    return o;
}

mpq_class Poly::eval(const std::vector<mpq_class>& x) const {
    mpq_class s = 0;
    for (const auto& [e, c] : t) {
        mpq_class v = c;
        for (int i = 0; i < nv; ++i) {
            if (e[i] == 0) continue;
            mpq_class base = e[i] > 0 ? x[i] : mpq_class(1 / x[i]);
            for (int j = 0; j < std::abs(e[i]); ++j) v *= base;
        }
        s += v;
    }
    return s;
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& x) const {
    std::complex<double> s = 0;
    for (const auto& [e, c] : t) {
        std::complex<double> v = c.get_d();
        for (int i = 0; i < nv; ++i)
            if (e[i]) v *= std::pow(x[i], e[i]);
        s += v;
    }
    return s;
}

std::map<int, Poly> Poly::graded(int r) const {
    std::map<int, Poly> out;
    for (const auto& [e, c] : t) {
        int d = 0;
        for (int i = 0; i < r; ++i) d += e[i];
        auto it = out.try_emplace(d, Poly(nv)).first;
        it->second.t.emplace(e, c);
    }
    return out;
}

bool Poly::is_homogeneous(int r, int deg) const {
    auto g = graded(r);
    return g.empty() || (g.size() == 1 && g.begin()->first == deg);
}

bool Poly::is_symmetric(int r) const {
    for (int i = 0; i + 1 < r; ++i) {
        std::vector<int> perm(nv);
        for (int j = 0; j < nv; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        if (permute_vars(perm) != *this) return false;
    }
    return true;
}

bool Poly::is_hyperoctahedral(int r) const {
    if (!is_symmetric(r)) return false;
    if (r == 0) return true;
    // with symmetry, inverting X_1 alone generates the rest
    Poly o(nv);
    for (const auto& [e0, c] : t) {
        std::vector<int> e = e0;
        e[0] = -e[0];
        o.t.emplace(std::move(e), c);
    }
    return o == *this;
}

mpq_class Poly::max_abs_coeff() const {
    mpq_class m = 0;
    for (const auto& [e, c] : t) m = std::max(m, mpq_class(abs(c)));
    return m;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit_mono = true;
        for (int x : e)
            if (x) unit_mono = false;
        mpq_class a = abs(c);
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        bool wrote = false;
        if (unit_mono || a != 1) { os << a.get_str(); wrote = true; }
        for (int i = 0; i < nv; ++i) {
            if (!e[i]) continue;
            if (wrote) os << "*";
            os << (i < int(names.size()) ? names[i] : "X" + std::to_string(i + 1));
            if (e[i] != 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

Poly elem_sym(int j, int r, int nv) {
    if (nv < 0) nv = r;
    if (j < 0 || j > r) throw std::invalid_argument("elem_sym: need 0 <= j <= r");
    Poly p(nv);
    // subsets of size j by bitmask
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        if (__builtin_popcount(mask) != j) continue;
        std::vector<int> e(nv, 0);
        for (int i = 0; i < r; ++i) e[i] = mask >> i & 1;
        p.add_term(e, 1);
    }
    return p;
}

Poly complete_sym(int k, int r, int nv) {
    if (nv < 0) nv = r;
    if (k < 0) return Poly(nv);
    Poly p(nv);
    std::vector<int> e(nv, 0);
    // compositions of k into r parts
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == r - 1) {
            e[i] = left;
            p.add_term(e, 1);
            e[i] = 0;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[i] = x;
            self(self, i + 1, left - x);
        }
        e[i] = 0;
    };
    if (r == 0) return k == 0 ? Poly::constant(nv, 1) : p;
    rec(rec, 0, k);
    return p;
}

Poly divide_by_difference(const Poly& P, int i, int j) {
    // P as a polynomial in X_i with coefficients in the other variables; synthetic division by (X_i - X_j)
    if (P.is_zero()) return P;
    std::map<int, Poly> coef;
    for (const auto& [e, c] : P.t) {
        std::vector<int> f = e;
        int k = f[i];
        f[i] = 0;
        coef.try_emplace(k, Poly(P.nv)).first->second.add_term(f, c);
    }
    int lo = coef.begin()->first, hi = coef.rbegin()->first;
    // shift so exponents in X_i start at 0; then Q has degree hi-lo-1
    Poly xj = Poly::var(P.nv, j);
    std::map<int, Poly> q;
    Poly carry(P.nv);
    for (int k = hi; k > lo; --k) {
        Poly ck = coef.count(k) ? coef[k] : Poly(P.nv);
        carry = ck + carry;  // q_{k-1}
        q[k - 1] = carry;
        carry = carry * xj;
    }
    Poly rem = (coef.count(lo) ? coef[lo] : Poly(P.nv)) + carry;
    if (!rem.is_zero()) throw std::domain_error("divide_by_difference: not divisible");
    Poly out(P.nv);
    for (const auto& [k, c] : q) {
        std::vector<int> s(P.nv, 0);
        s[i] = k;
        out += c.shift(s);
    }
    return out;
}

Poly schur_poly(const std::vector<int>& lambda, int r, int nv) {
    if (nv < 0) nv = r;
    if (int(lambda.size()) > r) {
        for (size_t k = r; k < lambda.size(); ++k)
            if (lambda[k] != 0) throw std::invalid_argument("schur_poly: more than r nonzero parts");
    }
    std::vector<int> lam(r, 0);
    for (int k = 0; k < r && k < int(lambda.size()); ++k) lam[k] = lambda[k];
    for (int k = 0; k < r; ++k) {
        if (lam[k] < 0) throw std::invalid_argument("schur_poly: negative part");
        if (k && lam[k] > lam[k - 1]) throw std::invalid_argument("schur_poly: parts must be nonincreasing");
    }
    if (r == 0) return Poly::constant(nv, 1);
    // alternant det(X_i^{lam_j + r - 1 - j})
    std::vector<int> perm(r);
    for (int k = 0; k < r; ++k) perm[k] = k;
    Poly a(nv);
    do {
        int inv = 0;
        for (int x = 0; x < r; ++x)
            for (int y = x + 1; y < r; ++y)
                if (perm[x] > perm[y]) ++inv;
        std::vector<int> e(nv, 0);
        for (int k = 0; k < r; ++k) e[perm[k]] = lam[k] + r - 1 - k;
        a.add_term(e, inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int x = 0; x < r; ++x)
        for (int y = x + 1; y < r; ++y) a = divide_by_difference(a, x, y);
    return a;
}

std::map<std::vector<int>, Poly> to_elementary(const Poly& P, int r) {
    std::map<std::vector<int>, Poly> out;
    if (P.is_zero()) return out;
    if (!P.is_symmetric(r)) throw std::domain_error("to_elementary: not symmetric");
    // clear negative powers with Y_r^s
    int s = 0;
    for (const auto& [e, c] : P.t)
        for (int i = 0; i < r; ++i) s = std::max(s, -e[i]);
    std::vector<int> sh(P.nv, 0);
    for (int i = 0; i < r; ++i) sh[i] = s;
    Poly R = P.shift(sh);
    auto x_part = [&](const std::vector<int>& e) { return std::vector<int>(e.begin(), e.begin() + r); };
    std::vector<Poly> Y;
    for (int j = 0; j <= r; ++j) Y.push_back(elem_sym(j, r, P.nv));
    while (!R.is_zero()) {
        // leading X-monomial in lex order, with its coefficient as a polynomial in the extra variables
        std::vector<int> lead;
        for (const auto& [e, c] : R.t) {
            auto x = x_part(e);
            if (lead.empty() || x > lead) lead = x;
        }
        Poly coeff(P.nv);
        for (const auto& [e, c] : R.t)
            if (x_part(e) == lead) {
                std::vector<int> f = e;
                for (int i = 0; i < r; ++i) f[i] = 0;
                coeff.add_term(f, c);
            }
        std::vector<int> cexp(r);
        Poly prod = Poly::constant(P.nv, 1);
        for (int j = 0; j < r; ++j) {
            cexp[j] = lead[j] - (j + 1 < r ? lead[j + 1] : 0);
            if (cexp[j] < 0) throw std::logic_error("to_elementary: leading term not dominant");
            prod = prod * Y[j + 1].pow(cexp[j]);
        }
        R -= coeff * prod;
        std::vector<int> key = cexp;
        key[r - 1] -= s;
        auto it = out.try_emplace(key, Poly(P.nv)).first;
        it->second += coeff;
        if (it->second.is_zero()) out.erase(it);
    }
    return out;
}

std::map<int, Poly> yn_grade(const Poly& P, int r) {
    std::map<int, Poly> out;
    if (r == 0) {
        if (!P.is_zero()) out.emplace(0, P);
        return out;
    }
    auto el = to_elementary(P, r);
    std::vector<Poly> Y;
    for (int j = 0; j <= r; ++j) Y.push_back(elem_sym(j, r, P.nv));
    for (const auto& [cexp, coeff] : el) {
        Poly term = coeff;
        for (int j = 0; j + 1 < r; ++j) term = term * Y[j + 1].pow(cexp[j]);
        int k = cexp[r - 1];
        std::vector<int> sh(P.nv, 0);
        for (int i = 0; i < r; ++i) sh[i] = k;
        term = term.shift(sh);
        auto it = out.try_emplace(k, Poly(P.nv)).first;
        it->second += term;
    }
    return out;
}

// ---- SeriesY

SeriesY SeriesY::from_coeffs(int nv, int T, const std::map<int, Poly>& c) {
    SeriesY s(nv, T);
    for (const auto& [k, p] : c) s.set(k, p);
    return s;
}

SeriesY SeriesY::homogenize(const Poly& P, int r, int T) {
    SeriesY s(P.nv, T);
    for (auto& [k, p] : P.graded(r)) s.set(k, p);
    return s;
}

const Poly& SeriesY::at(int k) const {
    static thread_local std::map<int, Poly> zeros;
    auto it = c.find(k);
    if (it != c.end()) return it->second;
    return zeros.try_emplace(nv, Poly(nv)).first->second;
}

void SeriesY::set(int k, const Poly& p) {
    if (k > T) return;
    if (p.nv != nv) throw std::invalid_argument("SeriesY: variable count mismatch");
    if (p.is_zero()) c.erase(k);
    else c[k] = p;
}

int SeriesY::low() const { return c.empty() ? T + 1 : c.begin()->first; }
int SeriesY::high() const { return c.empty() ? std::numeric_limits<int>::min() : c.rbegin()->first; }

SeriesY operator+(const SeriesY& a, const SeriesY& b) {
    SeriesY s(a.nv, std::min(a.T, b.T));
    for (const auto& [k, p] : a.c) s.set(k, p);
    for (const auto& [k, p] : b.c) s.set(k, s.at(k) + p);
    return s;
}

SeriesY operator-(const SeriesY& a, const SeriesY& b) {
    SeriesY s(a.nv, std::min(a.T, b.T));
    for (const auto& [k, p] : a.c) s.set(k, p);
    for (const auto& [k, p] : b.c) s.set(k, s.at(k) - p);
    return s;
}

SeriesY operator*(const SeriesY& a, const SeriesY& b) {
    // a known to a.T, b to b.T; the product is known to min(a.T + b.low, b.T + a.low)
    if (a.is_zero() || b.is_zero()) return SeriesY(a.nv, std::min(a.T, b.T));
    int T = std::min(a.T + b.low(), b.T + a.low());
    SeriesY s(a.nv, T);
    for (const auto& [i, p] : a.c)
        for (const auto& [j, q] : b.c) {
            if (i + j > T) continue;
            s.set(i + j, s.at(i + j) + p * q);
        }
    return s;
}

SeriesY SeriesY::inverse() const {
    if (c.empty()) throw std::domain_error("SeriesY::inverse: zero series");
    int d0 = low();
    const Poly& c0 = at(d0);
    if (!c0.is_constant()) throw std::domain_error("SeriesY::inverse: leading coefficient is not a constant");
    mpq_class inv0 = 1 / c0.constant_term();
    // b = 1/a with a = Y^{d0} (c0 + ...); b_k for k from -d0 to T - 2*d0... keep the same truncation
    int Tb = T - 2 * d0;
    SeriesY b(nv, Tb);
    for (int k = -d0; k <= Tb; ++k) {
        Poly s = k == -d0 ? Poly::constant(nv, 1) : Poly(nv);
        for (int j = 1; j <= k + d0; ++j) {
            const Poly& aj = at(d0 + j);
            if (aj.is_zero()) continue;
            const Poly& bk = b.at(k - j);
            if (bk.is_zero()) continue;
            s -= aj * bk;
        }
        b.set(k, s * inv0);
    }
    return b;
}

Poly SeriesY::at_one() const {
    Poly s(nv);
    for (const auto& [k, p] : c) s += p;
    return s;
}

}  // namespace newform
