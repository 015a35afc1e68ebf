#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "newform/polyalg.hpp"

using namespace newform;

namespace newform {
void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }
}  // namespace newform

namespace {

Poly X(int nv, int i) { return Poly::var(nv, i); }
Poly C(int nv, mpq_class c) { return Poly::constant(nv, c); }

// s_lambda as a sum over semistandard tableaux with entries in 1..r
Poly schur_by_tableaux(const std::vector<int>& lam, int r) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < int(lam.size()); ++i)
        for (int j = 0; j < lam[i]; ++j) cells.push_back({i, j});
    std::map<std::pair<int, int>, int> T;
    Poly out(r);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            std::vector<int> e(r, 0);
            for (auto& [c, v] : T) e[v]++;
            out.add_term(e, 1);
            return;
        }
        auto [i, j] = cells[k];
        int lo = 0;
        if (j > 0) lo = std::max(lo, T[{i, j - 1}]);
        if (i > 0) lo = std::max(lo, T[{i - 1, j}] + 1);
        for (int v = lo; v < r; ++v) {
            T[{i, j}] = v;
            rec(k + 1);
        }
        T.erase({i, j});
    };
    rec(0);
    return out;
}

void partitions(int total, int maxpart, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) { out.push_back(cur); return; }
    if (parts == 0) return;
    for (int x = std::min(total, maxpart); x >= 1; --x) {
        cur.push_back(x);
        partitions(total - x, x, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST(Poly, ArithmeticIsCanonical) {
    Poly a = X(2, 0) + X(2, 1), b = X(2, 0) - X(2, 1);
    EXPECT_EQ(a * b, X(2, 0).pow(2) - X(2, 1).pow(2));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE((a - a).t.empty());
}

TEST(Poly, InvertTwiceIsIdentity) {
    Poly p = X(3, 0).pow(3) * X(3, 1) * mpq_class(2, 7) + X(3, 2) - C(3, 5);
    EXPECT_EQ(p.invert_vars(2).invert_vars(2), p);
    EXPECT_NE(p.invert_vars(2), p);
}

TEST(Series, GeometricTimesOneMinus) {
    const int nv = 1, T = 12;
    SeriesY g(nv, T), f(nv, T);
    for (int k = 0; k <= T; ++k) g.set(k, X(nv, 0).pow(k));
    f.set(0, C(nv, 1));
    f.set(1, -X(nv, 0));
    SeriesY prod = f * g;
    EXPECT_EQ(prod.c.size(), 1u);
    EXPECT_EQ(prod.at(0), C(nv, 1));
}

TEST(Series, InverseRoundTrip) {
    const int nv = 2;
    SeriesY a(nv, 12);
    a.set(0, C(nv, 1));
    a.set(1, X(nv, 0) * mpq_class(-1, 3) - X(nv, 1) * mpq_class(1, 3));
    a.set(2, X(nv, 0) * X(nv, 1) * mpq_class(1, 81));
    SeriesY one = a * a.inverse();
    EXPECT_EQ(one.at(0), C(nv, 1));
    for (int k = 1; k <= one.T; ++k) EXPECT_TRUE(one.at(k).is_zero()) << k;
    EXPECT_GE(one.T, 12);
}

TEST(Series, InverseRejectsNonConstantLead) {
    SeriesY a(1, 5);
    a.set(0, X(1, 0));
    EXPECT_THROW(a.inverse(), std::domain_error);
}

TEST(Series, HomogenizeRecoversPoly) {
    Poly p = X(2, 0).pow(2) + X(2, 0) * X(2, 1) * mpq_class(3) + C(2, 4) + X(2, 1);
    SeriesY s = SeriesY::homogenize(p, 2, 12);
    EXPECT_EQ(s.at_one(), p);
    EXPECT_TRUE(s.at(2).is_homogeneous(2, 2));
}

TEST(ElemSym, BasicsAndInversion) {
    EXPECT_EQ(elem_sym(0, 3), C(3, 1));
    EXPECT_THROW(elem_sym(4, 3), std::invalid_argument);
    for (int r = 1; r <= 4; ++r) {
        Poly Yr = elem_sym(r, r);
        Poly Yr_inv = Yr.invert_vars(r);
        for (int j = 0; j <= r; ++j) {
            // Y_j(X^{-1}) = Y_{r-j}(X) Y_r(X)^{-1}
            EXPECT_EQ(elem_sym(j, r).invert_vars(r), elem_sym(r - j, r) * Yr_inv) << r << " " << j;
        }
    }
}

TEST(ElemSym, RestrictionToZero) {
    for (int r = 2; r <= 4; ++r) {
        for (int j = 0; j < r; ++j) EXPECT_EQ(elem_sym(j, r).set_zero_drop(r - 1), elem_sym(j, r - 1));
        EXPECT_TRUE(elem_sym(r, r).set_zero_drop(r - 1).is_zero());
    }
}

TEST(Schur, SmallCases) {
    EXPECT_EQ(schur_poly({}, 3), C(3, 1));
    EXPECT_EQ(schur_poly({1}, 3), elem_sym(1, 3));
    Poly x1 = X(2, 0), x2 = X(2, 1);
    EXPECT_EQ(schur_poly({2, 1}, 2), x1 * x2 * (x1 + x2));
    EXPECT_THROW(schur_poly({1, 2}, 2), std::invalid_argument);
    EXPECT_THROW(schur_poly({1, 1, 1}, 2), std::invalid_argument);
}

TEST(Schur, MatchesTableauxAndIsPositive) {
    for (int r = 1; r <= 4; ++r)
        for (int total = 0; total <= 6; ++total) {
            std::vector<std::vector<int>> ps;
            std::vector<int> cur;
            partitions(total, total, r, cur, ps);
            for (const auto& lam : ps) {
                Poly s = schur_poly(lam, r);
                EXPECT_EQ(s, schur_by_tableaux(lam, r));
                EXPECT_TRUE(s.is_symmetric(r));
                for (const auto& [e, c] : s.t) {
                    EXPECT_GT(c, 0);
                    EXPECT_EQ(c.get_den(), 1);
                }
            }
        }
}

TEST(Schur, Complete) {
    for (int r = 1; r <= 4; ++r)
        for (int k = 0; k <= 4; ++k) EXPECT_EQ(schur_poly({k}, r), complete_sym(k, r));
}

TEST(YnGrade, Examples) {
    auto g0 = yn_grade(C(2, 7), 2);
    ASSERT_EQ(g0.size(), 1u);
    EXPECT_EQ(g0.begin()->first, 0);

    Poly Y2 = elem_sym(2, 2);
    auto g2 = yn_grade(Y2.pow(2), 2);
    ASSERT_EQ(g2.size(), 1u);
    EXPECT_EQ(g2.begin()->first, 2);

    Poly s = elem_sym(0, 2) + elem_sym(1, 2) + elem_sym(2, 2);
    auto g = yn_grade(s, 2);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g.at(0), C(2, 1) + elem_sym(1, 2));
    EXPECT_EQ(g.at(1), Y2);
}

TEST(YnGrade, ReassemblesRandomSymmetric) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + trial % 3;
        Poly p(r + 1);  // one extra symbol variable
        for (int k = 0; k < 4; ++k) {
            std::vector<int> lam(r);
            int top = rng() % 3;
            for (int i = 0; i < r; ++i) lam[i] = i == 0 ? top : int(rng() % (lam[i - 1] + 1));
            Poly s = schur_poly(lam, r, r + 1);
            std::vector<int> sh(r + 1, 0);
            for (int i = 0; i < r; ++i) sh[i] = -int(rng() % 2);
            sh[r] = rng() % 2;
            // symmetric shift by a power of Y_r keeps symmetry
            int k0 = sh[0];
            for (int i = 0; i < r; ++i) sh[i] = k0;
            p += s.shift(sh) * mpq_class(int(rng() % 7) - 3, 1 + int(rng() % 4));
        }
        auto g = yn_grade(p, r);
        Poly back(r + 1);
        for (auto& [k, c] : g) back += c;
        EXPECT_EQ(back, p);
    }
}

TEST(Poly, Hyperoctahedral) {
    Poly x = X(2, 0), y = X(2, 1);
    Poly p = x + x.invert_vars(2) + y + y.invert_vars(2);
    EXPECT_TRUE(p.is_hyperoctahedral(2));
    EXPECT_FALSE((x + y).is_hyperoctahedral(2));
}
