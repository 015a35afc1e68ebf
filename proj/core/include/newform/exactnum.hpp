#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace newform {

// Valuation of zero.
inline constexpr int kInf = INT_MAX / 4;

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Residue characteristic p and the non-residue eps with delta^2 = eps.
struct Field {
    int p = 0;
    int eps = 0;

    static Field make(int p);
    long q() const { return p; }
    long qE() const { return long(p) * p; }
};

int vp(const mpz_class& z, int p);
int vp(const mpq_class& x, int p);
mpq_class ppow(int p, int k);

// a + b*delta in E = F(delta), delta^2 = eps. Carries (p, eps) so that values
// stay self-contained; a default-constructed value is an untyped zero.
class QE {
public:
    mpq_class a, b;
    int p = 0, eps = 0;

    QE() = default;
    QE(const Field& f) : p(f.p), eps(f.eps) {}
    QE(const Field& f, mpq_class a_, mpq_class b_ = 0) : a(std::move(a_)), b(std::move(b_)), p(f.p), eps(f.eps) {}

    Field field() const { return {p, eps}; }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool in_F() const { return sgn(b) == 0; }

    QE conj() const;
    QE inv() const;
    mpq_class norm() const;  // x * conj(x)
    int val() const;

    QE& operator+=(const QE& o);
    QE& operator-=(const QE& o);
    QE& operator*=(const QE& o);
    QE& operator/=(const QE& o) { return *this *= o.inv(); }
    QE operator-() const;

    friend QE operator+(QE x, const QE& y) { return x += y; }
    friend QE operator-(QE x, const QE& y) { return x -= y; }
    friend QE operator*(QE x, const QE& y) { return x *= y; }
    friend QE operator/(QE x, const QE& y) { return x /= y; }
    friend bool operator==(const QE& x, const QE& y) { return x.a == y.a && x.b == y.b; }

    std::string str() const;

private:
    void adopt(const QE& o) {
        if (p == 0) { p = o.p; eps = o.eps; }
    }
};

QE delta(const Field& f);
QE uniformizer_pow(const Field& f, int k);  // p^k

// Angles of the additive characters, as rationals in [0,1).
mpq_class frac_p(const mpq_class& x, int p);
mpq_class angle_F(const mpq_class& x, int p);
mpq_class angle_E(const QE& x);

// Canonical representative mod p^M of a rational / of each coordinate.
mpq_class reduce_precision(const mpq_class& x, int p, int M);
QE reduce_precision(const QE& x, int M);

// Random values with valuation >= lo, at most `digits` p-adic digits and an
// occasional unit denominator so that non-p-integral rationals are exercised.
mpq_class random_rational(std::mt19937_64& rng, int p, int lo, int digits);
QE random_qe(std::mt19937_64& rng, const Field& f, int lo, int digits);
QE random_unit(std::mt19937_64& rng, const Field& f, int digits);

}  // namespace newform
