#include <gtest/gtest.h>

#include "newform/rankinselberg.hpp"

using namespace newform;

namespace {

const int P = 3;

// X, beta, Lambda
Poly X3() { return Poly::var(3, 0); }
Poly Lam3() { return Poly::var(3, 2); }

Poly satake_in3(const Poly& s) {
    Poly out(3);
    for (const auto& [e, c] : s.t) out.add_term({e[0], 0, 0}, c);
    return out;
}

XiOptions opts(int T, int lo = 0) {
    XiOptions o;
    o.T = T;
    o.psi_lo = lo;
    return o;
}

}  // namespace

TEST(PsiWeight, Values) {
    // n = r = 1: q; n = 2, r = 1: q^3; n = r = 2 on (1,0): q^{2 + 2}
    EXPECT_EQ(psi_weight({1}, 1, P), 3);
    EXPECT_EQ(psi_weight({1}, 2, P), 27);
    EXPECT_EQ(psi_weight({1, 0}, 2, P), 81);
    EXPECT_EQ(psi_weight({0, 0}, 2, P), 1);
}

TEST(PsiPartialSum, ZeroAndRankOne) {
    auto st = symbolic_table(1, 0, 6);
    EXPECT_EQ(psi_partial_sum(st.table, 1, 1, 0, P), st.table.at({0}));
    std::vector<int> e(st.table.nv, 0);
    e[0] = 3;
    EXPECT_EQ(psi_partial_sum(st.table, 1, 1, 3, P), st.table.at({3}) * Poly::monomial(st.table.nv, e, 27));
}

TEST(PsiPartialSum, Homogeneous) {
    auto st = symbolic_table(3, 0, 4);
    for (int r = 1; r <= 3; ++r)
        for (int ell = 0; ell <= 4; ++ell) {
            Poly s = psi_partial_sum(st.table, 3, r, ell, P);
            EXPECT_TRUE(s.is_homogeneous(r, ell));
            EXPECT_TRUE(s.is_symmetric(r));
        }
}

TEST(PsiPartialSum, MissingEntry) {
    auto st = symbolic_table(1, 0, 2);
    EXPECT_THROW(psi_partial_sum(st.table, 1, 1, 3, P), std::out_of_range);
}

TEST(XiAssemble, ZeroTable) {
    PolyTable t;
    t.n = 1;
    t.nv = 1;
    for (int k = 0; k <= 8; ++k) t.value[{k}] = Poly(1);
    XiObject x = xi_assemble(t, 1, 1, 0, 0, UnramParam::unitary({mpq_class(1, 2)}), P, opts(8));
    EXPECT_TRUE(check_kernel(x).pass);
    EXPECT_EQ(newform_constant(x, {0.0}, 0), std::complex<double>(0));
}

TEST(XiAssemble, HomogenizationIdentity) {
    // Ξ(Y X) as a polynomial in Y reproduces the stored series in the kept degrees
    PolyTable ft = u3_formula_table(P, 12);
    XiObject x = xi_assemble(ft, 1, 1, 0, 0, unitary_param_coeffs(3, {1}), P, opts(10));
    SeriesY h = SeriesY::homogenize(x.poly, 1, 10);
    for (int k = x.degree_lo; k <= x.degree_hi; ++k) EXPECT_EQ(h.at(k), x.series.at(k));
}

TEST(Newform, SymbolicConstant) {
    PolyTable ft = u3_formula_table(P, 14);
    XiObject x = xi_assemble(ft, 1, 1, 0, 0, unitary_param_coeffs(3, {1}), P, opts(12));
    CheckResult r;
    EXPECT_EQ(newform_constant_exact(x, &r), Lam3());
    EXPECT_TRUE(r.pass) << r.detail;
    EXPECT_TRUE(check_functional_equation(x).pass);
    EXPECT_TRUE(check_grading(x).pass);
}

TEST(Newform, OracleConstant) {
    for (auto beta : {mpq_class(1, 2), mpq_class(-1, 3), mpq_class(2, 3)}) {
        WhittakerTable wt = u3_oracle_table(beta, P, 8, 0, 13);
        auto st = symbolic_table(1, 0, 13, &wt);
        XiObject x = xi_assemble(st.table, 1, 1, 0, 0, UnramParam::unitary({beta}), P, opts(10));
        CheckResult r;
        std::complex<double> c = newform_constant(x, st.binding, 1e-3, &r);
        EXPECT_TRUE(r.pass) << r.residual;
        EXPECT_NEAR(std::abs(c - wt.at({0})), 0, 1e-9);
        EXPECT_TRUE(check_functional_equation(x, &st.binding, 1e-3).pass);
    }
}

TEST(Newform, OracleMatchesFormulaTable) {
    // the closed-form table is calibrated against the direct integral
    for (auto beta : {mpq_class(1, 2), mpq_class(-2, 5)}) {
        WhittakerTable wt = u3_oracle_table(beta, P, 8, 0, 6);
        PolyTable ft = u3_formula_table(P, 6);
        std::vector<std::complex<double>> b{0.0, beta.get_d(), wt.at({0})};
        for (int k = 0; k <= 6; ++k) {
            NumPoly v = bind_numeric(ft.at({k}), 1, b);
            EXPECT_NEAR(std::abs(v[{0}] - wt.at({k})), 0, 1e-9) << k;
        }
    }
}

TEST(Newform, RsRatioConstantInS) {
    for (auto beta : {mpq_class(1, 2), mpq_class(-1, 3), mpq_class(1, 4)}) {
        WhittakerTable wt = u3_oracle_table(beta, P, 8, 0, 16);
        UnramParam pi = UnramParam::unitary({beta});
        std::complex<double> ref = wt.at({0});
        for (double s : {1.0, 1.5, 2.0, 3.5})
            for (double alpha : {1.0, 0.5}) EXPECT_NEAR(std::abs(rs_ratio(wt, pi, alpha, s, P) - ref), 0, 1e-3);
    }
}

TEST(Properties, FunctionalEquationDetectsShift) {
    // Ξ = 1 + X has the m - a = 1 equation but not the m = a one
    XiObject x;
    x.n = x.r = 1;
    x.nv = 1;
    x.m = 1;
    x.a = 0;
    x.poly = Poly::constant(1, 1) + Poly::var(1, 0);
    EXPECT_TRUE(check_functional_equation(x).pass);
    x.m = 0;
    EXPECT_FALSE(check_functional_equation(x).pass);
}

TEST(Properties, RestrictionSymbolicRankTwo) {
    auto st = symbolic_table(2, 0, 8);
    std::vector<Poly> pc;
    // formal P_pi: independent symbols are not needed; use a generic rational parameter
    for (const auto& c : UnramParam::unitary({mpq_class(2, 7), mpq_class(-3, 5)}).poly_coeffs())
        pc.push_back(Poly::constant(st.table.nv, c));
    for (int m : {0, 2}) {
        CheckResult r = check_restriction(st.table, 2, 2, m, 0, pc, P, 6);
        EXPECT_TRUE(r.pass) << r.detail;
    }
}

TEST(Properties, RestrictionSymbolicRankThree) {
    auto st = symbolic_table(3, 0, 5);
    std::vector<Poly> pc;
    for (const auto& c : UnramParam::unitary({mpq_class(1, 2), mpq_class(1, 3), mpq_class(5, 4)}).poly_coeffs())
        pc.push_back(Poly::constant(st.table.nv, c));
    for (int r : {2, 3}) EXPECT_TRUE(check_restriction(st.table, 3, r, 0, 0, pc, P, 5).pass);
}

TEST(Properties, HeckeEquivarianceSymbolic) {
    Field f = Field::make(P);
    PolyTable ft = u3_formula_table(P, 16);
    auto pc = unitary_param_coeffs(3, {1});
    XiObject x = xi_assemble(ft, 1, 1, 0, 0, pc, P, opts(12));
    for (std::vector<int> lam : {std::vector<int>{1}, std::vector<int>{2}}) {
        Poly S = satake_in3(satake_transform(lam, 1, 0, P).value);
        PolyTable th = torus_table_exact(ft, 0, hecke_star(lam, 0, VectorExpr::base(f, 1)), -3, 12);
        XiObject xh = xi_assemble(th, 1, 1, 0, 0, pc, P, opts(11, -lam[0]));
        EXPECT_EQ(xh.poly, S * x.poly);
        EXPECT_LT(trailing_degree_exact(xh), 0);
        EXPECT_TRUE(check_functional_equation(xh).pass);
    }
}

TEST(Properties, HeckeEquivarianceOracle) {
    Field f = Field::make(P);
    WhittakerTable wt = u3_oracle_table(mpq_class(1, 2), P, 8, -2, 13);
    UnramParam pi = UnramParam::unitary({mpq_class(1, 2)});
    auto st = symbolic_table(1, -2, 13, &wt);
    XiObject x = xi_assemble(st.table, 1, 1, 0, 0, pi, P, opts(10));
    WhittakerTable th = torus_table(wt, 0, hecke_star({1}, 0, VectorExpr::base(f, 1)), -2, 11);
    auto sh = symbolic_table(1, -2, 11, &th);
    XiObject xh = xi_assemble(sh.table, 1, 1, 0, 0, pi, P, opts(10, -1));
    CheckResult r = check_hecke_equivariance(bind_numeric(xh.poly, 1, sh.binding),
                                             satake_transform({1}, 1, 0, P).value, bind_numeric(x.poly, 1, st.binding),
                                             1e-3);
    EXPECT_TRUE(r.pass) << r.residual;
}

TEST(Oldform, LevelOneShapeSymbolic) {
    Field f = Field::make(P);
    PolyTable ft = u3_formula_table(P, 14);
    PolyTable t1 = torus_table_exact(ft, 0, level_one_projection(VectorExpr::base(f, 1)), -2, 13);
    XiObject x = xi_assemble(t1, 1, 1, 1, 0, unitary_param_coeffs(3, {1}), P, opts(12));
    Poly lam1 = x.poly - x.poly;
    for (const auto& [e, c] : x.poly.t)
        if (e[0] == 0) lam1.add_term(e, c);
    EXPECT_FALSE(lam1.is_zero());
    EXPECT_EQ(x.poly, lam1 * (Poly::constant(3, 1) + X3()));
    EXPECT_TRUE(check_functional_equation(x).pass);
}

TEST(Oldform, EtaFactorFromWeight) {
    // Ξ^2(eta_{(1),0,2} v) = q X S Ξ^0(v) with the calibrated weight
    Field f = Field::make(P);
    PolyTable ft = u3_formula_table(P, 14);
    auto pc = unitary_param_coeffs(3, {1});
    XiObject x = xi_assemble(ft, 1, 1, 0, 0, pc, P, opts(12));
    PolyTable tr = torus_table_exact(ft, 0, level_raise({1}, 0, 2, VectorExpr::base(f, 1)), -2, 13);
    XiObject xr = xi_assemble(tr, 1, 1, 2, 0, pc, P, opts(11, -1));
    Poly S = satake_in3(satake_transform({1}, 1, 0, P).value);
    EXPECT_EQ(xr.poly, X3() * S * x.poly * mpq_class(P));
    EXPECT_TRUE(check_functional_equation(xr).pass);
}

TEST(Oldform, PredictionsDifferByOneHalfPowerOfQE) {
    Poly S = satake_transform({1}, 1, 0, P).value;
    NumPoly base{{{0}, 2.0}};
    NumPoly a = oldform_prediction(base, 1, 2, 0, S, P);
    NumPoly b = oldform_prediction_from_weight(base, 1, 2, 0, S, P);
    EXPECT_NEAR(std::abs(a[{1}] - double(P) * b[{1}]), 0, 1e-12);
    // lambda = 0, m' = m: base unchanged
    NumPoly c = oldform_prediction(base, 1, 0, 0, Poly::constant(1, 1), P);
    EXPECT_NEAR(max_abs(c - base), 0, 1e-15);
    EXPECT_THROW(oldform_prediction(base, 1, 1, 0, S, P), std::invalid_argument);
}

TEST(Oldform, LevelAPlusOneCheck) {
    NumPoly xi{{{0}, 3.0}, {{1}, 3.0}};
    EXPECT_TRUE(check_level_a_plus_one(xi, 1, 1e-12).pass);
    xi[{1}] = 2.0;
    EXPECT_FALSE(check_level_a_plus_one(xi, 1, 1e-3).pass);
}

TEST(FESolutions, ConstancyDerivation) {
    for (int n = 1; n <= 3; ++n) {
        auto s0 = fe_solution_space(n, 0, 3);
        ASSERT_EQ(s0.size(), 1u);
        EXPECT_EQ(s0[0], Poly::constant(n, 1));
        auto s1 = fe_solution_space(n, 1, 3);
        ASSERT_EQ(s1.size(), 1u);
        Poly sum(n);
        for (int j = 0; j <= n; ++j) sum += elem_sym(j, n, n);
        EXPECT_EQ(s1[0], sum);
    }
}

TEST(GK, MatchesFormula) {
    std::vector<std::complex<double>> s{{0.75, 0}, {1, 0.5}, {1.5, -0.3}};
    for (int m : {0, 1, 2})
        for (auto alpha : {mpq_class(1), mpq_class(1, 2), mpq_class(-2, 3)}) {
            GKReport r = gk_check(alpha, m, s, P, 40);
            EXPECT_LT(r.max_rel, 1e-3);
            EXPECT_LT(r.m_scaling_residual, 1e-3);
            EXPECT_EQ(r.identity_value, 1);
            for (const auto& pt : r.points) EXPECT_LE(std::abs(pt.numeric - pt.formula), pt.error_bound + 1e-12);
        }
}

TEST(GK, SectionDecomposition) {
    Field f = Field::make(P);
    Mat w = antidiag(f, 2);
    for (int m : {0, 1, 3})
        for (int j = -4; j <= 4; ++j) {
            Mat u = identity(f, 2);
            u(0, 1) = QE(f, ppow(P, j)) * delta(f);
            std::complex<double> z = 0.5;
            std::complex<double> v = gk_section(w * u, m, z);
            EXPECT_NEAR(std::abs(v - std::pow(0.5, std::max(m, -j))), 0, 1e-15);
        }
}
