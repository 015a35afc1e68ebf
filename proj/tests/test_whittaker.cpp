#include <gtest/gtest.h>

#include "newform/whittaker.hpp"

using namespace newform;

TEST(GLWhittaker, ClosedForms) {
    const int p = 3;
    EXPECT_EQ(gl_whittaker_value({0, 0}, p, 2), Poly::constant(2, 1));
    EXPECT_EQ(gl_whittaker_value({4}, p, 1), Poly::monomial(1, {4}));
    // (1,0): q_E^{-1/2}(X1 + X2) = (X1 + X2)/p
    EXPECT_EQ(gl_whittaker_value({1, 0}, p, 2), (Poly::var(2, 0) + Poly::var(2, 1)) * mpq_class(1, 3));
    EXPECT_TRUE(gl_whittaker_value({0, 1}, p, 2).is_zero());
    // central shift: (0,-1) = det^{-1} * (1,0)
    Poly c = gl_whittaker_value({0, -1}, p, 2);
    EXPECT_EQ(c, gl_whittaker_value({1, 0}, p, 2).shift({-1, -1}));
}

TEST(ShellIntegral, VolumesAndVanishing) {
    for (int p : {3, 5}) {
        for (int j = 0; j <= 3; ++j) {
            double vol = std::pow(p, -2.0 * j) * (1 - 1.0 / (p * p));
            EXPECT_NEAR(shell_character_integral(p, j).real(), vol, 1e-15);
        }
        EXPECT_EQ(shell_character_integral(p, -1), std::complex<double>(-1));
        for (int j = -6; j <= -2; ++j) EXPECT_EQ(shell_character_integral(p, j), std::complex<double>(0));
    }
}

TEST(ShellIntegral, BruteForceEnumeration) {
    // enumerate x = (a + b delta) p^j mod p^2 over digit pairs; conj(psi_E)(x) = e(-frac(b p^j))
    for (int p : {3, 5})
        for (int j = -2; j <= 0; ++j) {
            const int w = 2 - j;  // digits 0..w-1, classes mod p^2
            long N = 1;
            for (int i = 0; i < w; ++i) N *= p;
            std::complex<double> s = 0;
            for (long a = 0; a < N; ++a)
                for (long b = 0; b < N; ++b) {
                    if (a % p == 0 && b % p == 0) continue;  // valuation exactly j
                    double ang = -double(b) * std::pow(p, j);
                    s += std::polar(1.0, 2 * 3.141592653589793 * (ang - std::floor(ang)));
                }
            s *= std::pow(p, -2.0 * (j + w));  // each class has volume q_E^{-(j+w)}
            EXPECT_LT(std::abs(s - shell_character_integral(p, j)), 1e-9) << p << " " << j;
        }
}

TEST(JacquetGL2, MatchesShintani) {
    for (int p : {3, 5}) {
        const mpq_class a1(1, 2), a2(2, 3);
        OracleValue base = jacquet_oracle_gl2({0, 0}, a1, a2, p, 6);
        for (int s = 0; s <= 3; ++s)
            for (int m2 = 0; m2 <= s / 2; ++m2) {
                std::vector<int> mu{s - m2, m2};
                OracleValue v = jacquet_oracle_gl2(mu, a1, a2, p, 6);
                double want = gl_whittaker_value(mu, p, {a1, a2}).get_d();
                EXPECT_NEAR(std::abs(v.value / base.value - want), 0, 1e-6) << p << " " << mu[0] << "," << mu[1];
                EXPECT_LT(v.error, 1e-6);
            }
        // non-dominant cells vanish
        EXPECT_LT(std::abs(jacquet_oracle_gl2({0, 1}, a1, a2, p, 6).value), 1e-9);
    }
    EXPECT_THROW(jacquet_oracle_gl2({0, 0}, mpq_class(2), mpq_class(1), 3, 6), std::invalid_argument);
}

TEST(JacquetU3, SupportAndDepth) {
    const int p = 3;
    const mpq_class beta(1, 2);
    WhittakerTable t = u3_oracle_table(beta, p, 8, -2, 3);
    for (int k = -2; k < 0; ++k) EXPECT_LT(std::abs(t.at({k})), 1e-9);
    for (int k = 0; k <= 3; ++k) EXPECT_GT(std::abs(t.at({k})), 1e-6);
    for (int k = 0; k <= 3; ++k) {
        OracleValue a = jacquet_oracle_u3(k, beta, p, 8), b = jacquet_oracle_u3(k, beta, p, 10);
        EXPECT_LE(std::abs(a.value - b.value), a.error + b.error + 1e-12);
    }
    EXPECT_THROW(jacquet_oracle_u3(0, mpq_class(2), p, 6), std::invalid_argument);
}

TEST(JacquetU3, Deterministic) {
    OracleValue a = jacquet_oracle_u3(2, mpq_class(1, 3), 3, 6), b = jacquet_oracle_u3(2, mpq_class(1, 3), 3, 6);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.error, b.error);
}

TEST(Table, MissingEntries) {
    WhittakerTable t;
    t.value[{0}] = 1.0;
    EXPECT_EQ(t.at({-3}), std::complex<double>(0));
    EXPECT_THROW(t.at({2}), std::out_of_range);
    EXPECT_EQ(t.max_degree(), 0);
}

TEST(Support, Predicates) {
    Field f = Field::make(3);
    Mat x(2, 1, f);
    EXPECT_FALSE(support_vanishes(x));
    x(0, 0) = QE(f, 1);
    EXPECT_FALSE(support_vanishes(x));
    x(1, 0) = QE(f, mpq_class(1, 3));
    EXPECT_TRUE(support_vanishes(x));
}
