#include "newform/exactnum.hpp"

#include <sstream>

namespace newform {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::make(int p) {
    if (p <= 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    for (int e = 2; e < p; ++e) {
        // Euler's criterion
        mpz_class r;
        mpz_class base = e, ex = (p - 1) / 2, mod = p;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), ex.get_mpz_t(), mod.get_mpz_t());
        if (r == p - 1) return {p, e};
    }
    throw std::logic_error("no non-residue found");
}

int vp(const mpz_class& z, int p) {
    if (z == 0) return kInf;
    mpz_class t;
    mpz_class pp = p;
    return int(mpz_remove(t.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t()));
}

int vp(const mpq_class& x, int p) {
    if (sgn(x) == 0) return kInf;
    return vp(x.get_num(), p) - vp(x.get_den(), p);
}

mpq_class ppow(int p, int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), unsigned(p), unsigned(k < 0 ? -k : k));
    if (k >= 0) return mpq_class(r);
    return mpq_class(mpz_class(1), r);
}

QE QE::conj() const {
    QE r = *this;
    r.b = -r.b;
    return r;
}

mpq_class QE::norm() const { return a * a - mpq_class(eps) * b * b; }

QE QE::inv() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in E");
    mpq_class n = norm();
    QE r = *this;
    r.a = a / n;
    r.b = -b / n;
    return r;
}

int QE::val() const {
    if (p == 0) {
        if (is_zero()) return kInf;
        throw std::logic_error("valuation of a context-free nonzero value");
    }
    return std::min(vp(a, p), vp(b, p));
}

QE& QE::operator+=(const QE& o) {
    adopt(o);
    a += o.a;
    b += o.b;
    return *this;
}

QE& QE::operator-=(const QE& o) {
    adopt(o);
    a -= o.a;
    b -= o.b;
    return *this;
}

QE& QE::operator*=(const QE& o) {
    adopt(o);
    if (sgn(b) == 0 && sgn(o.b) == 0) {
        a *= o.a;
        return *this;
    }
    mpq_class na = a * o.a + mpq_class(eps) * b * o.b;
    mpq_class nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

QE QE::operator-() const {
    QE r = *this;
    r.a = -r.a;
    r.b = -r.b;
    return r;
}

std::string QE::str() const {
    std::ostringstream os;
    if (sgn(b) == 0) {
        os << a;
    } else if (sgn(a) == 0) {
        os << b << "*d";
    } else {
        os << a << (sgn(b) > 0 ? "+" : "") << b << "*d";
    }
    return os.str();
}

QE delta(const Field& f) { return QE(f, 0, 1); }

QE uniformizer_pow(const Field& f, int k) { return QE(f, ppow(f.p, k)); }

mpq_class frac_p(const mpq_class& x, int p) {
    if (sgn(x) == 0) return 0;
    int v = vp(x, p);
    if (v >= 0) return 0;
    int k = -v;
    // x = n / (p^k d') with gcd(d', p) = 1; the p-power part of the fraction is (n d'^-1 mod p^k) / p^k.
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), unsigned(p), unsigned(k));
    mpz_class dprime = x.get_den() / pk;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), dprime.get_mpz_t(), pk.get_mpz_t()) == 0)
        throw std::logic_error("frac_p: non-invertible cofactor");
    mpz_class num = x.get_num() * inv;
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pk.get_mpz_t());
    mpq_class out(r, pk);
    out.canonicalize();
    return out;
}

mpq_class angle_F(const mpq_class& x, int p) { return frac_p(x, p); }

// (x - conj x) / (2 delta) = b
mpq_class angle_E(const QE& x) { return frac_p(x.b, x.p); }

mpq_class reduce_precision(const mpq_class& x, int p, int M) {
    if (M < 1) throw std::invalid_argument("reduce_precision: M must be >= 1");
    if (sgn(x) == 0) return 0;
    int vden = vp(x.get_den(), p);
    mpz_class pk, mod;
    mpz_ui_pow_ui(pk.get_mpz_t(), unsigned(p), unsigned(vden));
    mpz_ui_pow_ui(mod.get_mpz_t(), unsigned(p), unsigned(M + vden));
    mpz_class dprime = x.get_den() / pk;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), dprime.get_mpz_t(), mod.get_mpz_t());
    mpz_class num = x.get_num() * inv, r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    mpq_class out(r, pk);
    out.canonicalize();
    return out;
}

QE reduce_precision(const QE& x, int M) {
    QE r = x;
    r.a = reduce_precision(x.a, x.p, M);
    r.b = reduce_precision(x.b, x.p, M);
    return r;
}

mpq_class random_rational(std::mt19937_64& rng, int p, int lo, int digits) {
    std::uniform_int_distribution<int> dig(0, p - 1);
    mpz_class n = 0, pw = 1;
    for (int i = 0; i < digits; ++i) {
        n += pw * dig(rng);
        pw *= p;
    }
    if (rng() % 2) n = -n;
    mpq_class x(n);
    if (rng() % 8 == 0) x /= 2;  // unit denominator
    return x * ppow(p, lo);
}

QE random_qe(std::mt19937_64& rng, const Field& f, int lo, int digits) {
    return QE(f, random_rational(rng, f.p, lo, digits), random_rational(rng, f.p, lo, digits));
}

QE random_unit(std::mt19937_64& rng, const Field& f, int digits) {
    for (;;) {
        QE x = random_qe(rng, f, 0, digits);
        if (x.val() == 0) return x;
    }
}

}  // namespace newform
