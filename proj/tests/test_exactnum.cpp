#include <gtest/gtest.h>

#include "newform/exactnum.hpp"

using namespace newform;

TEST(Field, NonResidue) {
    EXPECT_EQ(Field::make(3).eps, 2);
    EXPECT_EQ(Field::make(5).eps, 2);
    EXPECT_EQ(Field::make(7).eps, 3);
    EXPECT_EQ(Field::make(17).eps, 3);
    EXPECT_THROW(Field::make(2), std::invalid_argument);
    EXPECT_THROW(Field::make(9), std::invalid_argument);
}

TEST(QE, Basics) {
    Field f = Field::make(5);
    QE d = delta(f);
    EXPECT_EQ(d.conj(), -d);
    EXPECT_EQ(d * d, QE(f, f.eps));
    EXPECT_EQ(d.val(), 0);
    EXPECT_EQ(QE(f, 1).val(), 0);
    EXPECT_EQ(QE(f, 5, 5).val(), 1);
    EXPECT_EQ(QE(f, mpq_class(1, 25), 3).val(), -2);
    EXPECT_EQ(QE(f).val(), kInf);
    EXPECT_THROW(QE(f).inv(), ArithmeticError);
}

TEST(QE, FieldAxiomsRandom) {
    for (int p : {3, 5, 7}) {
        Field f = Field::make(p);
        std::mt19937_64 rng(11 + p);
        for (int it = 0; it < 10000; ++it) {
            QE x = random_qe(rng, f, -2 + int(rng() % 4), 3);
            QE y = random_qe(rng, f, -2 + int(rng() % 4), 3);
            QE z = random_qe(rng, f, 0, 2);
            ASSERT_EQ((x + y) * z, x * z + y * z);
            ASSERT_EQ(x * y, y * x);
            ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
            ASSERT_EQ(x.conj().conj(), x);
            ASSERT_TRUE((x * x.conj()).in_F());
            if (!x.is_zero()) {
                ASSERT_EQ(x * x.inv(), QE(f, 1));
                if (!y.is_zero()) ASSERT_EQ((x * y).val(), x.val() + y.val());
            }
            ASSERT_GE((x + y).val(), std::min(x.val(), y.val()));
        }
    }
}

TEST(Characters, Angles) {
    int p = 3;
    Field f = Field::make(p);
    EXPECT_EQ(angle_F(mpq_class(1, 3), p), mpq_class(1, 3));
    EXPECT_EQ(angle_F(mpq_class(7, 9), p), mpq_class(7, 9));
    EXPECT_EQ(angle_F(mpq_class(1, 2), p), 0);           // unit denominators are invisible
    EXPECT_EQ(angle_F(mpq_class(1, 6), p), mpq_class(2, 3));  // 1/6 = (1/2)(1/3), 1/2 = 2 mod 3
    EXPECT_EQ(angle_E(QE(f, mpq_class(1, 3), 0)), 0);    // trivial on F
    EXPECT_EQ(angle_E(QE(f, 4, 7)), 0);                  // trivial on o_E
    EXPECT_NE(angle_E(QE(f, 0, mpq_class(1, 3))), 0);
}

TEST(Characters, AdditivityAndConductor) {
    int p = 5;
    Field f = Field::make(p);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 10000; ++it) {
        QE x = random_qe(rng, f, -3, 4), y = random_qe(rng, f, -3, 4);
        mpq_class s = angle_E(x) + angle_E(y) - angle_E(x + y);
        ASSERT_TRUE(s == 0 || s == 1);
        mpq_class a = random_rational(rng, p, -3, 4), b = random_rational(rng, p, -3, 4);
        mpq_class t = angle_F(a, p) + angle_F(b, p) - angle_F(a + b, p);
        ASSERT_TRUE(t == 0 || t == 1);
        ASSERT_EQ(angle_E(random_unit(rng, f, 3)), 0);
    }
    EXPECT_NE(angle_F(mpq_class(1, p), p), 0);
}

TEST(Precision, Reduce) {
    int p = 3;
    Field f = Field::make(p);
    EXPECT_EQ(reduce_precision(QE(f, 1 + ppow(p, 9)), 8), QE(f, 1));
    EXPECT_EQ(reduce_precision(QE(f), 5), QE(f));
    EXPECT_THROW(reduce_precision(QE(f, 1), 0), std::invalid_argument);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 2000; ++it) {
        QE x = random_qe(rng, f, -3, 12);
        int M = 1 + int(rng() % 10);
        QE r = reduce_precision(x, M);
        ASSERT_GE((r - x).val(), M);
        ASSERT_EQ(reduce_precision(r, M), r);
    }
}
