#include <gtest/gtest.h>

#include <functional>

#include "newform/dimension.hpp"

using namespace newform;

namespace {

// number of tuples (l_0..l_{r-1}) >= 0 with sum k
long count_tuples(int r, int k) {
    if (r == 1) return 1;
    long s = 0;
    for (int x = 0; x <= k; ++x) s += count_tuples(r - 1, k - x);
    return s;
}

}  // namespace

TEST(Dimension, Examples) {
    EXPECT_EQ(dim_oldforms(2, 3, 1), 0);
    for (int n = 0; n <= 4; ++n)
        for (int a = 0; a <= 4; ++a) EXPECT_EQ(dim_oldforms(n, a, a), 1);
    EXPECT_EQ(dim_oldforms(2, 0, 4), 6);
    EXPECT_EQ(dim_gl_oldforms(3, 1, 3), 6);
    for (int m = 2; m < 9; ++m) EXPECT_EQ(dim_gl_oldforms(1, 2, m), 1);
    EXPECT_EQ(dim_gl_oldforms(2, 3, 2), 0);
}

TEST(Dimension, GLMatchesMonomialCount) {
    for (int r = 1; r <= 4; ++r)
        for (int k = 0; k <= 6; ++k) EXPECT_EQ(dim_gl_oldforms(r, 1, 1 + k), count_tuples(r, k)) << r << " " << k;
}

TEST(Dimension, ParityAndMonotone) {
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= 3; ++a) {
            for (int t = 0; t <= 6; ++t) EXPECT_EQ(dim_oldforms(n, a, a + 2 * t), dim_oldforms(n, a, a + 2 * t + 1));
            for (int m = 0; m < 16; ++m) {
                EXPECT_LE(dim_oldforms(n, a, m), dim_oldforms(n, a, m + 1));
                if (m >= a) EXPECT_LT(dim_oldforms(n, a, m), dim_oldforms(n, a, m + 2));
            }
        }
}

TEST(Vandermonde, Sweep) {
    for (int l = 0; l <= 10; ++l)
        for (int n = 1; n <= 6; ++n)
            for (int r = 1; r <= std::min(n, 5); ++r) EXPECT_TRUE(vandermonde_check(l, r, n));
    EXPECT_THROW(vandermonde_check(1, 0, 2), std::invalid_argument);
}

TEST(Recursion, Examples) {
    EXPECT_TRUE(dim_recursion_check(3, {}, {}, 2, 7));
    EXPECT_EQ(dim_recursive(2, {1}, {0}, 0, 4), 6);
    EXPECT_TRUE(dim_recursion_check(2, {1}, {0}, 0, 4));
}

TEST(Recursion, SmallSweep) {
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= 10; ++m)
            for (int a0 = 0; a0 <= 3; ++a0) {
                for (int r1 = 1; r1 <= n; ++r1)
                    for (int t1 = 0; t1 <= 3; ++t1) {
                        EXPECT_TRUE(dim_recursion_check(n, {r1}, {t1}, a0, m));
                        for (int r2 = 1; r1 + r2 <= n; ++r2)
                            for (int t2 = 0; t2 <= 3; ++t2) EXPECT_TRUE(dim_recursion_check(n, {r1, r2}, {t1, t2}, a0, m));
                    }
            }
}
