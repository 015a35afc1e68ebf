#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "newform/dimension.hpp"
#include "newform/hecke.hpp"
#include "newform/lfactors.hpp"
#include "newform/matgroups.hpp"
#include "newform/rankinselberg.hpp"
#include "newform/whittaker.hpp"

namespace newform::harness {

using nlohmann::json;

namespace {

struct Task {
    std::string suite, check, anchor;
    json params;
    std::function<std::vector<Record>()> fn;
};

std::vector<Record> run_tasks(std::vector<Task>& tasks, int jobs) {
    std::vector<std::vector<Record>> out(tasks.size());
    auto run_one = [&](size_t i) {
        try {
            out[i] = tasks[i].fn();
        } catch (const std::exception& e) {
            Record r = make_record(tasks[i].suite, tasks[i].check, tasks[i].anchor, tasks[i].params, INFINITY, 0,
                                   std::string("exception: ") + e.what());
            out[i] = {r};
        }
    };
    unsigned hw = std::thread::hardware_concurrency();
    int nthreads = jobs > 0 ? jobs : int(hw ? hw : 1);
    nthreads = std::max(1, std::min<int>(nthreads, int(tasks.size())));
    if (nthreads == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (size_t i; (i = next++) < tasks.size();) run_one(i);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<Record> all;
    for (auto& v : out)
        for (auto& r : v) all.push_back(std::move(r));
    return all;
}

std::vector<int> range(std::optional<int> fixed, int lo, int hi) {
    std::vector<int> v;
    if (fixed) {
        v.push_back(*fixed);
        return v;
    }
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

uint64_t mix(uint64_t seed, std::initializer_list<int> xs) {
    uint64_t h = seed * 0x9E3779B97F4A7C15ULL + 0x1234567ULL;
    for (int x : xs) h = (h ^ uint64_t(x + 0x51)) * 0xBF58476D1CE4E5B9ULL;
    return h ^ (h >> 31);
}

std::string lam_str(const std::vector<int>& l) {
    std::string s;
    for (int x : l) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

Record single(const std::string& suite, const std::string& check, const std::string& anchor, const json& params,
              double res, double tol, std::string detail = {}) {
    return make_record(suite, check, anchor, params, res, tol, std::move(detail));
}

// ---------------------------------------------------------------- dims

std::vector<Task> dims_tasks(const RunConfig& cfg) {
    std::vector<Task> t;
    const std::string S = "dims";
    for (int n : range(cfg.n, 1, 3)) {
        json pr = {{"n", n}, {"a_max", 4}, {"m_minus_a_max", 8}, {"p", cfg.p}};
        t.push_back({S, "dims.trace_vs_closed_form", "oldform-dimension", pr, [=] {
                         long bad = 0, total = 0;
                         std::string first;
                         for (int a : range(cfg.a, 0, 4))
                             for (int m = a; m <= a + 8; ++m) {
                                 ++total;
                                 mpz_class tr = trace_count(n, a, m, cfg.p), d = dim_oldforms(n, a, m);
                                 if (tr != d) {
                                     ++bad;
                                     if (first.empty())
                                         first = "a=" + std::to_string(a) + " m=" + std::to_string(m) + ": trace " +
                                                 tr.get_str() + " vs " + d.get_str();
                                 }
                             }
                         return std::vector<Record>{single(S, "dims.trace_vs_closed_form", "oldform-dimension", pr,
                                                           double(bad), 0,
                                                           first.empty() ? std::to_string(total) + " cases" : first)};
                     }});
    }
    for (int n : range(cfg.n, 1, 6)) {
        json pr = {{"n", n}, {"l_max", 10}, {"r_max", std::min(n, 5)}};
        t.push_back({S, "dims.vandermonde", "vandermonde-identity", pr, [=] {
                         long bad = 0, total = 0;
                         for (int l = 0; l <= 10; ++l)
                             for (int r = 1; r <= std::min(n, 5); ++r) {
                                 ++total;
                                 // both sides recomputed here from binomials as a second route
                                 mpz_class lhs = 0;
                                 for (int d = 0; d <= l; ++d) lhs += binom(l - d + r - 1, r - 1) * binom(d + n - r, n - r);
                                 bool ok = vandermonde_check(l, r, n) && lhs == binom(l + n, n);
                                 if (!ok) ++bad;
                             }
                         return std::vector<Record>{single(S, "dims.vandermonde", "vandermonde-identity", pr, double(bad),
                                                           0, std::to_string(total) + " cases")};
                     }});
    }
    {
        json pr = {{"a0_max", 3}, {"gl_pieces_max", 2}, {"gl_conductor_max", 3}};
        t.push_back({S, "dims.conductor_recursion", "conductor-recursion", pr, [=] {
                         // second route: multiply the epsilon monomials of the constituents of the parameter
                         // (a GL piece contributes itself and its conjugate-dual, of equal conductor)
                         long bad = 0, total = 0;
                         auto eps = [](int a) { return epsilon_poly(a, 0, 1, 1, 40); };
                         std::vector<std::vector<int>> gls{{}};
                         for (int t1 = 0; t1 <= 3; ++t1) {
                             gls.push_back({t1});
                             for (int t2 = 0; t2 <= 3; ++t2) gls.push_back({t1, t2});
                         }
                         for (int a0 = 0; a0 <= 3; ++a0)
                             for (const auto& g : gls) {
                                 ++total;
                                 std::vector<ConductorPiece> pieces{{PieceKind::Anchor, a0}};
                                 SeriesY prod = eps(a0);
                                 for (int tj : g) {
                                     pieces.push_back({PieceKind::GL, tj});
                                     prod = prod * eps(tj) * eps(tj);
                                 }
                                 int a = conductor_arith(pieces);
                                 SeriesY want = eps(a);
                                 if (prod.c != want.c) ++bad;
                             }
                         return std::vector<Record>{single(S, "dims.conductor_recursion", "conductor-recursion", pr,
                                                           double(bad), 0, std::to_string(total) + " cases")};
                     }});
    }
    for (int n : range(cfg.n, 1, 5)) {
        json pr = {{"n", n}, {"k_max", 2}, {"conductor_max", 3}, {"m_max", 10}};
        t.push_back({S, "dims.recursion", "dimension-recursion", pr, [=] {
                         long bad = 0, total = 0;
                         for (int m : range(cfg.m, 0, 10))
                             for (int a0 = 0; a0 <= 3; ++a0) {
                                 ++total;
                                 if (!dim_recursion_check(n, {}, {}, a0, m)) ++bad;
                                 for (int r1 = 1; r1 <= n; ++r1)
                                     for (int t1 = 0; t1 <= 3; ++t1) {
                                         ++total;
                                         if (!dim_recursion_check(n, {r1}, {t1}, a0, m)) ++bad;
                                         for (int r2 = 1; r1 + r2 <= n; ++r2)
                                             for (int t2 = 0; t2 <= 3; ++t2) {
                                                 ++total;
                                                 if (!dim_recursion_check(n, {r1, r2}, {t1, t2}, a0, m)) ++bad;
                                             }
                                     }
                             }
                         return std::vector<Record>{single(S, "dims.recursion", "dimension-recursion", pr, double(bad), 0,
                                                           std::to_string(total) + " cases")};
                     }});
    }
    for (int n : range(cfg.n, 1, 6)) {
        json pr = {{"n", n}, {"a_max", 3}, {"m_minus_a_max", 12}};
        t.push_back({S, "dims.basis_count", "conjectural-basis", pr, [=] {
                         long bad = 0, total = 0;
                         for (int a : range(cfg.a, 0, 3))
                             for (int m = a; m <= a + 12; ++m) {
                                 ++total;
                                 if (mpz_class(long(conjectural_basis_partitions(n, a, m).size())) != dim_oldforms(n, a, m))
                                     ++bad;
                             }
                         return std::vector<Record>{single(S, "dims.basis_count", "conjectural-basis", pr, double(bad), 0,
                                                           std::to_string(total) + " cases")};
                     }});
    }
    return t;
}

// ---------------------------------------------------------------- decomp

std::vector<Task> decomp_tasks(const RunConfig& cfg) {
    std::vector<Task> t;
    const std::string S = "decomp";
    for (int n : range(cfg.n, 1, 2))
        for (int m : range(cfg.m, 1, 4)) {
            json pr = {{"n", n}, {"m", m}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"M", m + cfg.Mprec}, {"p", cfg.p}};
            t.push_back({S, "decomp.round_trip", "compact-decomposition", pr, [=] {
                             if (m < 1) throw std::invalid_argument("decomposition needs level m >= 1");
                             Field f = Field::make(cfg.p);
                             Sampler s(f, mix(cfg.seed, {4, n, m}));
                             const int M = m + cfg.Mprec;
                             long bad = 0;
                             int worst_prec = kInf;
                             std::string first;
                             for (int it = 0; it < cfg.samples; ++it) {
                                 Mat g = s.K_element(n, m);
                                 CompactDecomp dc = decompose_compact(g, {n, m}, M);
                                 int prec = min_val(dc.product(n) - g);
                                 worst_prec = std::min(worst_prec, prec);
                                 bool ok = prec >= M && in_E1(dc.z, m, M);
                                 for (const auto& x : dc.minus) ok = ok && in_K(root_element(f, n, x.root, x.y), n, m);
                                 for (const auto& x : dc.plus) ok = ok && in_K(root_element(f, n, x.root, x.y), n, m);
                                 ok = ok && in_R(h_extract(dc.r, n), n, m, M) && in_K(dc.r, n, m, M);
                                 if (!ok) {
                                     ++bad;
                                     if (first.empty()) first = "sample " + std::to_string(it);
                                 }
                             }
                             std::string detail = first.empty() ? "round trip exact mod p^" + std::to_string(M) +
                                                                      (worst_prec >= kInf / 2 ? " (exact)" : "")
                                                                : first;
                             return std::vector<Record>{
                                 single(S, "decomp.round_trip", "compact-decomposition", pr, double(bad), 0, detail)};
                         }});
        }
    return t;
}

// ---------------------------------------------------------------- cosets

std::vector<Task> cosets_tasks(const RunConfig& cfg) {
    std::vector<Task> t;
    const std::string S = "cosets";
    for (int n : range(cfg.n, 1, 2))
        for (int r : range(cfg.r, 1, n)) {
            if (r > n) continue;
            for (int m : range(cfg.m, 0, 4))
                for (Side side : {Side::Pbar, Side::P}) {
                    const std::string sd = side == Side::P ? "P" : "Pbar";
                    json pr = {{"n", n}, {"r", r}, {"m", m}, {"side", sd}, {"samples", cfg.samples}, {"seed", cfg.seed},
                               {"p", cfg.p}};
                    t.push_back({S, "cosets.representatives", "double-coset-classifier", pr, [=] {
                                     Field f = Field::make(cfg.p);
                                     LevelSpec spec{n, m};
                                     std::vector<int> ds;
                                     long bad = 0;
                                     for (int d = 0; d <= spec.l(); ++d) {
                                         Mat g = coset_representative(f, n, r, spec, side, d);
                                         int c = coset_classify(g, n, r, spec, side, m + cfg.Mprec);
                                         if (c != d || coset_pairing_invariant(g, n, r, spec, side) != d) ++bad;
                                         ds.push_back(c);
                                     }
                                     std::sort(ds.begin(), ds.end());
                                     if (std::adjacent_find(ds.begin(), ds.end()) != ds.end()) ++bad;
                                     return std::vector<Record>{
                                         single(S, "cosets.representatives", "double-coset-classifier", pr, double(bad), 0,
                                                std::to_string(spec.l() + 1) + " representatives")};
                                 }});
                    t.push_back({S, "cosets.invariance", "double-coset-classifier", pr, [=] {
                                     Field f = Field::make(cfg.p);
                                     Sampler s(f, mix(cfg.seed, {5, n, r, m, side == Side::P}));
                                     s.word_length = 6;
                                     LevelSpec spec{n, m};
                                     long bad = 0;
                                     std::vector<long> hist(spec.l() + 1, 0);
                                     for (int it = 0; it < cfg.samples; ++it) {
                                         Mat g = s.G_element(n, 1);
                                         int d = coset_classify(g, n, r, spec, side, m + cfg.Mprec);
                                         if (d != coset_pairing_invariant(g, n, r, spec, side)) ++bad;
                                         if (d >= 0 && d <= spec.l()) ++hist[d];
                                         Mat pb = s.Pbar_element(n, r, 1);
                                         if (side == Side::P) {
                                             std::vector<int> Sx(r);
                                             std::iota(Sx.begin(), Sx.end(), 1);
                                             Mat w = weyl_rep(f, n, {}, Sx, uniformizer_pow(f, spec.e()));
                                             pb = w * pb * unitary_inverse(w);
                                         }
                                         Mat g2 = pb * g * s.K0_element(n, m);
                                         if (coset_classify(g2, n, r, spec, side, m + cfg.Mprec) != d) ++bad;
                                     }
                                     std::string h;
                                     for (long c : hist) h += (h.empty() ? "" : "/") + std::to_string(c);
                                     return std::vector<Record>{single(S, "cosets.invariance", "double-coset-classifier", pr,
                                                                       double(bad), 0, "d histogram " + h)};
                                 }});
                }
        }
    // Levi intersection: the sample budget is spread over all (n, r, m, d)
    std::vector<std::tuple<int, int, int>> cfgs;
    for (int n : range(cfg.n, 1, 2))
        for (int r : range(cfg.r, 1, n))
            for (int m : range(cfg.m, 0, 4))
                if (r <= n) cfgs.push_back({n, r, m});
    long ncells = 0;
    for (auto [n, r, m] : cfgs) ncells += LevelSpec{n, m}.l() + 1;
    const int per_cell = int((cfg.samples + ncells - 1) / std::max(1L, ncells));
    for (auto [n, r, m] : cfgs) {
        json pr = {{"n", n}, {"r", r}, {"m", m}, {"samples_per_d", per_cell}, {"seed", cfg.seed}, {"p", cfg.p}};
        t.push_back({S, "cosets.levi", "levi-intersection", pr, [=] {
                         Field f = Field::make(cfg.p);
                         Sampler s(f, mix(cfg.seed, {6, n, r, m}));
                         s.word_length = 5;
                         LevelSpec spec{n, m};
                         const int e = spec.e(), l = spec.l();
                         std::vector<int> Sx(r);
                         std::iota(Sx.begin(), Sx.end(), 1);
                         std::vector<QE> tv(n, QE(f, 1));
                         tv[r - 1] = QE(f, -1);
                         Mat w = weyl_rep(f, n, {}, Sx, uniformizer_pow(f, e)) * torus(f, n, tv, QE(f, 1));
                         long bad = 0, accepted = 0, total = 0;
                         for (int d = 0; d <= l; ++d) {
                             Mat sdm = coset_representative(f, n, r, spec, Side::Pbar, d);
                             Mat spm = coset_representative(f, n, r, spec, Side::P, d);
                             auto levi_ok = [&](const LeviPart& lp, bool pside) {
                                 bool a_ok = pside ? in_Gamma(lp.a, l - d) : in_GammaPrime(lp.a, l - d);
                                 return a_ok && (n == r || in_K0(lp.g0, n - r, e + 2 * d));
                             };
                             for (int it = 0; it < per_cell; ++it) {
                                 ++total;
                                 Mat h = s.Levi_lift(n, r, spec, d);
                                 bool ok = in_Pbar(h, n, r) && in_K0(unitary_inverse(sdm) * h * sdm, n, m) &&
                                           levi_ok(levi_part_extract(h, n, r, Side::Pbar), false);
                                 Mat hp = w * h * unitary_inverse(w);
                                 ok = ok && in_K0(unitary_inverse(spm) * hp * spm, n, m) &&
                                      levi_ok(levi_part_extract(hp, n, r, Side::P), true);
                                 Mat h2 = h * s.Pbar_element(n, r, 0) * s.Levi_lift(n, r, spec, d);
                                 if (in_K0(unitary_inverse(sdm) * h2 * sdm, n, m)) {
                                     ++accepted;
                                     ok = ok && levi_ok(levi_part_extract(h2, n, r, Side::Pbar), false);
                                 }
                                 if (!ok) ++bad;
                             }
                         }
                         return std::vector<Record>{single(S, "cosets.levi", "levi-intersection", pr, double(bad), 0,
                                                           std::to_string(total) + " samples, " + std::to_string(accepted) +
                                                               " perturbations inside the group")};
                     }});
    }
    return t;
}

// ---------------------------------------------------------------- trace

GLHeckeElement random_gl_element(std::mt19937_64& rng, int n) {
    GLHeckeElement h;
    h.n = n;
    std::uniform_int_distribution<int> nterms(1, 4), ex(0, 3), e0(-2, 2), co(-9, 9);
    for (int k = nterms(rng); k > 0; --k) {
        std::vector<int> ell(2 * n + 1);
        for (int i = 0; i < 2 * n + 1; ++i) ell[i] = (i == 0 || i == 2 * n) ? e0(rng) : ex(rng);
        int c = co(rng);
        if (c) h.add_term(ell, mpq_class(c, 1 + ex(rng)));
    }
    return h;
}

std::vector<Task> trace_tasks(const RunConfig& cfg) {
    std::vector<Task> t;
    const std::string S = "trace";
    json pr = {{"samples", cfg.samples}, {"seed", cfg.seed}, {"p", cfg.p}, {"n_max", 3}};
    t.push_back({S, "trace.involution_square", "hecke-involution", pr, [=] {
                     std::mt19937_64 rng(mix(cfg.seed, {7}));
                     long bad = 0;
                     for (int i = 0; i < cfg.samples; ++i) {
                         int n = cfg.n ? *cfg.n : 1 + i % 3;
                         GLHeckeElement h = random_gl_element(rng, n);
                         if (!(involution_iota(involution_iota(h, cfg.p), cfg.p) == h)) ++bad;
                     }
                     return std::vector<Record>{single(S, "trace.involution_square", "hecke-involution", pr, double(bad), 0)};
                 }});
    t.push_back({S, "trace.involution_multiplicative", "hecke-involution", pr, [=] {
                     std::mt19937_64 rng(mix(cfg.seed, {8}));
                     long bad = 0;
                     for (int i = 0; i < std::max(1, cfg.samples / 10); ++i) {
                         int n = cfg.n ? *cfg.n : 1 + i % 3;
                         auto a = random_gl_element(rng, n), b = random_gl_element(rng, n);
                         if (!(involution_iota(a * b, cfg.p) == involution_iota(a, cfg.p) * involution_iota(b, cfg.p)))
                             ++bad;
                     }
                     return std::vector<Record>{
                         single(S, "trace.involution_multiplicative", "hecke-involution", pr, double(bad), 0)};
                 }});
    for (int n : range(cfg.n, 1, 3)) {
        json pn = {{"n", n}, {"a_max", 4}, {"m_minus_a_max", 8}, {"p", cfg.p}};
        t.push_back({S, "trace.count_vs_binomial", "hecke-trace", pn, [=] {
                         long bad = 0;
                         for (int a : range(cfg.a, 0, 4))
                             for (int k = 0; k <= 8; ++k)
                                 if (trace_count(n, a, a + k, cfg.p) != binom(k / 2 + n, n)) ++bad;
                         return std::vector<Record>{single(S, "trace.count_vs_binomial", "hecke-trace", pn, double(bad), 0)};
                     }});
    }
    return t;
}

// ---------------------------------------------------------------- shared Ξ helpers (n = 1)

Poly satake_in(const Poly& s, int nv) {
    Poly out(nv);
    for (const auto& [e, c] : s.t) {
        std::vector<int> ee(nv, 0);
        for (size_t i = 0; i < e.size(); ++i) ee[i] = e[i];
        out.add_term(ee, c);
    }
    return out;
}

XiOptions xo(int T, int lo = 0) {
    XiOptions o;
    o.T = T;
    o.psi_lo = lo;
    return o;
}

// formula-table pipeline: X, beta, Lambda
struct SymbolicPipeline {
    int p, T;
    Field f;
    PolyTable ft;
    std::vector<Poly> pc;
    XiObject base;
    SymbolicPipeline(int p_, int T_) : p(p_), T(T_), f(Field::make(p_)), ft(u3_formula_table(p_, T_ + 6)) {
        pc = unitary_param_coeffs(3, {1});
        base = xi_assemble(ft, 1, 1, 0, 0, pc, p, xo(T));
    }
    XiObject of(const VectorExpr& u, int m, int lo) const {
        PolyTable tab = torus_table_exact(ft, 0, u, lo - 1, T + 2);
        return xi_assemble(tab, 1, 1, m, 0, pc, p, xo(T, lo));
    }
};

// oracle-table pipeline
struct OraclePipeline {
    int p, T;
    mpq_class beta;
    UnramParam pi;
    WhittakerTable wt;
    SymbolicTable st;
    XiObject base;
    NumPoly base_num;
    OraclePipeline(int p_, int T_, int depth, const mpq_class& b)
        : p(p_), T(T_), beta(b), pi(UnramParam::unitary({b})), wt(u3_oracle_table(b, p_, depth, -2, T_ + 4)) {
        st = symbolic_table(1, -2, T + 4, &wt);
        base = xi_assemble(st.table, 1, 1, 0, 0, pi, p, xo(T));
        base_num = bind_numeric(base.poly, 1, st.binding);
    }
    // Ξ of u from the table-level action, with the trailing series norm
    std::pair<NumPoly, double> of(const VectorExpr& u, int m, int lo) const {
        WhittakerTable tab = torus_table(wt, 0, u, -2, T + 2);
        SymbolicTable s2 = symbolic_table(1, -2, T + 2, &tab);
        XiObject x = xi_assemble(s2.table, 1, 1, m, 0, pi, p, xo(T, lo));
        return {bind_numeric(x.poly, 1, s2.binding), trailing_norm(x, s2.binding)};
    }
};

const std::vector<mpq_class>& oracle_betas() {
    static const std::vector<mpq_class> b{mpq_class(1, 2), mpq_class(-1, 3), mpq_class(1, 4)};
    return b;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

double rel(double x, double scale) { return x / std::max(1.0, scale); }

// ---------------------------------------------------------------- hecke

std::vector<Task> hecke_tasks(const RunConfig& cfg) {
    std::vector<Task> t;
    const std::string S = "hecke";
    const int p = cfg.p;
    const bool n1 = !cfg.n || *cfg.n == 1, n2 = !cfg.n || *cfg.n == 2;
    if (n1) {
        json pr = {{"n", 1}, {"p", p}, {"lambda", {"(1)", "(2)"}}};
        t.push_back({S, "hecke.satake_rank_one", "satake-transform", pr, [=] {
                         std::vector<Record> out;
                         // coset counts q^2 + q and q^4 + q^3; frozen images at p = 3
                         SatakeResult s1 = satake_transform({1}, 1, 0, p), s2 = satake_transform({2}, 1, 0, p);
                         long q = p;
                         double bad = double(s1.cosets != q * q + q) + double(s2.cosets != q * q * q * q + q * q * q);
                         out.push_back(single(S, "hecke.satake_coset_count", "satake-transform", pr, bad, 0,
                                              std::to_string(s1.cosets) + ", " + std::to_string(s2.cosets)));
                         if (p == 3) {
                             Poly X = Poly::var(1, 0);
                             Poly want1 = X * mpq_class(3) + Poly::constant(1, 2) + Poly::monomial(1, {-1}, 3);
                             Poly want2 = Poly::monomial(1, {2}, 9) + Poly::monomial(1, {1}, 6) + Poly::constant(1, 6) +
                                          Poly::monomial(1, {-1}, 6) + Poly::monomial(1, {-2}, 9);
                             double r = (s1.value - want1).max_abs_coeff().get_d() +
                                        (s2.value - want2).max_abs_coeff().get_d();
                             out.push_back(single(S, "hecke.satake_fixture", "satake-transform", pr, r, 0,
                                                  s1.value.str() + " ; " + s2.value.str()));
                         }
                         return out;
                     }});
        json pl = {{"n", 1}, {"p", p}, {"m", {0, 1, 2, 3}}};
        t.push_back({S, "hecke.satake_level_independence", "satake-transform", pl, [=] {
                         double bad = 0;
                         for (std::vector<int> lam : {std::vector<int>{1}, std::vector<int>{2}}) {
                             Poly s0 = satake_transform(lam, 1, 0, p).value;
                             if (!s0.is_hyperoctahedral(1)) bad += 1;
                             // the stability threshold for K grows with the level
                             for (int m = 1; m <= 3; ++m) {
                                 std::optional<Poly> sm;
                                 for (int K = 4; K <= 12 && !sm; K += 2) {
                                     try {
                                         sm = satake_transform(lam, 1, m, p, K, 2000000).value;
                                     } catch (const TruncationUnstable&) {
                                     }
                                 }
                                 if (!sm || *sm != s0) bad += 1;
                             }
                         }
                         return std::vector<Record>{
                             single(S, "hecke.satake_level_independence", "satake-transform", pl, bad, 0)};
                     }});
    }
    if (n2) {
        for (std::vector<int> lam : {std::vector<int>{1, 0}, std::vector<int>{1, 1}}) {
            json pr = {{"n", 2}, {"p", p}, {"lambda", lam_str(lam)}, {"budget", 10000000}};
            t.push_back({S, "hecke.satake_symmetry", "satake-transform", pr, [=] {
                             SatakeResult s = satake_transform(lam, 2, 0, p, 4, 10000000);
                             return std::vector<Record>{single(S, "hecke.satake_symmetry", "satake-transform", pr,
                                                               s.value.is_hyperoctahedral(2) ? 0.0 : 1.0, 0,
                                                               std::to_string(s.cosets) + " cosets")};
                         }});
        }
    }
    if (n1) {
        json pr = {{"n", 1}, {"p", p}, {"T", cfg.T}, {"mode", "symbolic"}, {"lambda", {"(1)", "(2)"}}};
        t.push_back({S, "hecke.equivariance_symbolic", "xi-hecke-equivariance", pr, [=] {
                         SymbolicPipeline sp(p, cfg.T);
                         double r = 0;
                         std::string det;
                         for (std::vector<int> lam : {std::vector<int>{1}, std::vector<int>{2}}) {
                             Poly Sx = satake_in(satake_transform(lam, 1, 0, p).value, 3);
                             XiObject x = sp.of(hecke_star(lam, 0, VectorExpr::base(sp.f, 1)), 0, -lam[0]);
                             Poly d = x.poly - Sx * sp.base.poly;
                             r += d.max_abs_coeff().get_d() + (trailing_degree_exact(x) >= 0 ? 1 : 0);
                         }
                         return std::vector<Record>{
                             single(S, "hecke.equivariance_symbolic", "xi-hecke-equivariance", pr, r, cfg.tol_symbolic)};
                     }});
        for (const auto& beta : oracle_betas()) {
            json po = {{"n", 1}, {"p", p}, {"T", cfg.T}, {"depth", cfg.depth}, {"beta", beta.get_str()}, {"lambda", "(1)"}};
            t.push_back({S, "hecke.equivariance_oracle", "xi-hecke-equivariance", po, [=] {
                             OraclePipeline op(p, cfg.T, cfg.depth, beta);
                             Field f = Field::make(p);
                             auto [xi, tail] = op.of(hecke_star({1}, 0, VectorExpr::base(f, 1)), 0, -1);
                             CheckResult c = check_hecke_equivariance(xi, satake_transform({1}, 1, 0, p).value,
                                                                      op.base_num, cfg.tol_oracle);
                             double scale = max_abs(op.base_num);
                             return std::vector<Record>{single(S, "hecke.equivariance_oracle", "xi-hecke-equivariance",
                                                               po, rel(std::max(c.residual, tail), scale), cfg.tol_oracle)};
                         }});
        }
        json pc = {{"n", 1}, {"p", p}, {"T", cfg.T}, {"mode", "symbolic"}, {"pair", "(1),(2)"}};
        t.push_back({S, "hecke.commutativity", "xi-hecke-equivariance", pc, [=] {
                         SymbolicPipeline sp(p, cfg.T);
                         VectorExpr v = VectorExpr::base(sp.f, 1);
                         XiObject ab = sp.of(hecke_star({1}, 0, hecke_star({2}, 0, v)), 0, -3);
                         XiObject ba = sp.of(hecke_star({2}, 0, hecke_star({1}, 0, v)), 0, -3);
                         Poly S1 = satake_in(satake_transform({1}, 1, 0, p).value, 3);
                         Poly S2 = satake_in(satake_transform({2}, 1, 0, p).value, 3);
                         double r = (ab.poly - ba.poly).max_abs_coeff().get_d() +
                                    (ab.poly - S1 * S2 * sp.base.poly).max_abs_coeff().get_d();
                         return std::vector<Record>{
                             single(S, "hecke.commutativity", "xi-hecke-equivariance", pc, r, cfg.tol_symbolic)};
                     }});
        json pb = {{"n", 1}, {"a", 0}, {"m", 4}, {"p", p}, {"specialization", "beta=1/2"}};
        t.push_back({S, "hecke.oldform_basis_independent", "conjectural-basis", pb, [=] {
                         // Ξ images of eta_{lambda,0,4} v for the conjectural basis, rank at a rational point
                         SymbolicPipeline sp(p, cfg.T);
                         auto lams = conjectural_basis_partitions(1, 0, 4);
                         std::vector<std::vector<mpq_class>> rows;
                         for (const auto& lam : lams) {
                             XiObject x = sp.of(level_raise(lam, 0, 4, VectorExpr::base(sp.f, 1)), 4, -2);
                             Poly q = x.poly.substitute(2, 1).substitute(1, mpq_class(1, 2));
                             std::vector<mpq_class> row(13, 0);
                             for (const auto& [e, c] : q.t)
                                 if (e[0] + 4 >= 0 && e[0] + 4 < 13) row[e[0] + 4] = c;
                             rows.push_back(row);
                         }
                         size_t rank = 0;
                         for (size_t c = 0; c < 13 && rank < rows.size(); ++c) {
                             size_t piv = rank;
                             while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
                             if (piv == rows.size()) continue;
                             std::swap(rows[rank], rows[piv]);
                             for (size_t i = 0; i < rows.size(); ++i) {
                                 if (i == rank || sgn(rows[i][c]) == 0) continue;
                                 mpq_class fct = rows[i][c] / rows[rank][c];
                                 for (size_t k = 0; k < 13; ++k) rows[i][k] -= fct * rows[rank][k];
                             }
                             ++rank;
                         }
                         return std::vector<Record>{single(S, "hecke.oldform_basis_independent", "conjectural-basis", pb,
                                                           double(lams.size() - rank), 0,
                                                           "rank " + std::to_string(rank) + " of " +
                                                               std::to_string(lams.size()))};
                     }});
    }
    return t;
}

// ---------------------------------------------------------------- gk

std::vector<Task> gk_tasks(const RunConfig& cfg) {
    std::vector<Task> t;
    const std::string S = "gk";
    const int D = 5 * cfg.depth;
    const std::vector<std::complex<double>> svals{{0.75, 0}, {1, 0.5}, {1.5, -0.3}};
    for (auto alpha : {mpq_class(1), mpq_class(1, 2), mpq_class(-2, 3)})
        for (int m : range(cfg.m, 0, 2)) {
            json pr = {{"alpha", alpha.get_str()}, {"m", m}, {"p", cfg.p}, {"shells", D},
                       {"s", {"0.75", "1+0.5i", "1.5-0.3i"}}};
            t.push_back({S, "gk.intertwining", "gindikin-karpelevich", pr, [=] {
                             GKReport g = gk_check(alpha, m, svals, cfg.p, D);
                             double bound = 0;
                             for (const auto& pt : g.points) bound = std::max(bound, pt.error_bound);
                             std::vector<Record> out;
                             out.push_back(single(S, "gk.intertwining", "gindikin-karpelevich", pr, g.max_rel,
                                                  cfg.tol_oracle, "tail bound " + sci(bound)));
                             out.push_back(single(S, "gk.level_scaling", "gindikin-karpelevich", pr, g.m_scaling_residual,
                                                  cfg.tol_oracle));
                             out.push_back(single(S, "gk.identity_value", "gindikin-karpelevich", pr,
                                                  std::abs(g.identity_value - 1), 0));
                             return out;
                         }});
        }
    return t;
}

// ---------------------------------------------------------------- rs

std::vector<Task> rs_tasks(const RunConfig& cfg) {
    std::vector<Task> t;
    const std::string S = "rs";
    const int p = cfg.p;
    std::vector<int> primes{3, 5};
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    for (int pp : primes) {
        json pr = {{"p", pp}, {"depth", cfg.depth}, {"mu_total_max", 3}, {"alpha", {"1/2", "2/3"}}};
        t.push_back({S, "rs.shintani_gl2", "shintani-gl2", pr, [=] {
                         const mpq_class a1(1, 2), a2(2, 3);
                         OracleValue base = jacquet_oracle_gl2({0, 0}, a1, a2, pp, cfg.depth);
                         double worst = 0, err = base.error;
                         for (int s = 0; s <= 3; ++s)
                             for (int m2 = 0; m2 <= s / 2; ++m2) {
                                 std::vector<int> mu{s - m2, m2};
                                 OracleValue v = jacquet_oracle_gl2(mu, a1, a2, pp, cfg.depth);
                                 double want = gl_whittaker_value(mu, pp, {a1, a2}).get_d();
                                 worst = std::max(worst, std::abs(v.value / base.value - want));
                                 err = std::max(err, v.error);
                             }
                         return std::vector<Record>{single(S, "rs.shintani_gl2", "shintani-gl2", pr, std::max(worst, err),
                                                           cfg.tol_shintani, "truncation bound " + sci(err))};
                     }});
    }
    for (const auto& beta : oracle_betas()) {
        json pr = {{"n", 1}, {"p", p}, {"T", cfg.T}, {"depth", cfg.depth}, {"beta", beta.get_str()}};
        t.push_back({S, "rs.newform_oracle", "newform-constancy", pr, [=] {
                         OraclePipeline op(p, cfg.T, cfg.depth, beta);
                         std::vector<Record> out;
                         CheckResult c;
                         std::complex<double> lam = newform_constant(op.base, op.st.binding, cfg.tol_oracle, &c);
                         double scale = std::abs(op.wt.at({0}));
                         out.push_back(single(S, "rs.newform_constant_oracle", "newform-constancy", pr,
                                              rel(c.residual, scale), cfg.tol_oracle, c.detail));
                         out.push_back(single(S, "rs.newform_constant_value", "newform-constancy", pr,
                                              rel(std::abs(lam - op.wt.at({0})), scale), cfg.tol_oracle,
                                              "Lambda = W(0) = " + std::to_string(op.wt.at({0}).real())));
                         CheckResult fe = check_functional_equation(op.base, &op.st.binding, cfg.tol_oracle);
                         out.push_back(single(S, "rs.functional_equation_oracle", "xi-functional-equation", pr,
                                              rel(fe.residual, scale), cfg.tol_oracle));
                         // identity: L(2s,As) Psi / L(s, x) is constant in s
                         std::complex<double> ref = rs_ratio(op.wt, op.pi, 1.0, 1.0, p);
                         double worst = 0, spec_worst = 0;
                         for (double s : {1.0, 1.5, 2.0, 3.5})
                             for (double alpha : {1.0, 0.5}) {
                                 std::complex<double> v = rs_ratio(op.wt, op.pi, alpha, s, p);
                                 worst = std::max(worst, std::abs(v - ref));
                                 // second route: the assembled series specialized at X = alpha, Y = q_E^{1/2 - s}
                                 std::vector<std::complex<double>> xb = op.st.binding;
                                 xb[0] = alpha;
                                 std::complex<double> Y = std::pow(double(p) * p, 0.5 - s);
                                 std::complex<double> ser = eval_series(op.base.series, xb, Y);
                                 spec_worst = std::max(spec_worst, std::abs(ser - v));
                             }
                         out.push_back(single(S, "rs.identity_constancy", "rs-identity", pr, rel(worst, std::abs(ref)),
                                              cfg.tol_oracle, "s in {1,1.5,2,3.5}, alpha in {1,1/2}"));
                         out.push_back(single(S, "rs.lfactor_specialization", "xi-specialization", pr,
                                              rel(spec_worst, std::abs(ref)), cfg.tol_oracle));
                         // weight calibration: oracle against the closed-form table
                         PolyTable ft = u3_formula_table(p, 6);
                         std::vector<std::complex<double>> b{0.0, beta.get_d(), op.wt.at({0})};
                         double cal = 0;
                         for (int k = 0; k <= 6; ++k) {
                             NumPoly v = bind_numeric(ft.at({k}), 1, b);
                             cal = std::max(cal, std::abs(v[{0}] - op.wt.at({k})) / std::abs(op.wt.at({k})));
                         }
                         out.push_back(single(S, "rs.weight_calibration", "psi-weight", pr, cal, cfg.tol_oracle,
                                              "relative, k = 0..6"));
                         return out;
                     }});
    }
    if (!cfg.n || *cfg.n == 1) {
        json pr = {{"n", 1}, {"p", p}, {"T", cfg.T}, {"mode", "symbolic"}};
        t.push_back({S, "rs.newform_symbolic", "newform-constancy", pr, [=] {
                         SymbolicPipeline sp(p, cfg.T);
                         std::vector<Record> out;
                         CheckResult c;
                         Poly lam = newform_constant_exact(sp.base, &c);
                         double r = c.residual + (lam - Poly::var(3, 2)).max_abs_coeff().get_d();
                         out.push_back(single(S, "rs.newform_constant_symbolic", "newform-constancy", pr, r,
                                              cfg.tol_symbolic, "Xi = " + sp.base.poly.str({"X", "beta", "Lambda"})));
                         out.push_back(single(S, "rs.functional_equation_symbolic", "xi-functional-equation", pr,
                                              check_functional_equation(sp.base).residual, cfg.tol_symbolic));
                         out.push_back(single(S, "rs.grading_symbolic", "xi-grading", pr, check_grading(sp.base).residual,
                                              cfg.tol_symbolic));
                         SeriesY h = SeriesY::homogenize(sp.base.poly, 1, cfg.T);
                         double hres = 0;
                         for (int k = sp.base.degree_lo; k <= sp.base.degree_hi; ++k)
                             hres += (h.at(k) - sp.base.series.at(k)).max_abs_coeff().get_d();
                         out.push_back(single(S, "rs.homogenization", "xi-homogenization", pr, hres, cfg.tol_symbolic));
                         // zero table
                         PolyTable z;
                         z.n = 1;
                         z.nv = 1;
                         for (int k = 0; k <= cfg.T; ++k) z.value[{k}] = Poly(1);
                         XiObject xz = xi_assemble(z, 1, 1, 0, 0, UnramParam::unitary({mpq_class(1, 2)}), p, xo(cfg.T));
                         out.push_back(single(S, "rs.kernel", "xi-kernel", pr, check_kernel(xz).residual, 0));
                         return out;
                     }});
    }
    for (int n : range(cfg.n, 2, 3)) {
        if (n < 2) continue;
        json pr = {{"n", n}, {"p", p}, {"T", n == 2 ? 6 : 5}, {"mode", "formal table"}};
        t.push_back({S, "rs.restriction_symbolic", "xi-restriction", pr, [=] {
                         auto st = symbolic_table(n, 0, n == 2 ? 8 : 5);
                         std::vector<mpq_class> betas{mpq_class(2, 7), mpq_class(-3, 5), mpq_class(5, 4)};
                         betas.resize(n);
                         std::vector<Poly> pc;
                         for (const auto& c : UnramParam::unitary(betas).poly_coeffs())
                             pc.push_back(Poly::constant(st.table.nv, c));
                         double r = 0;
                         std::string det;
                         for (int rr = 2; rr <= n; ++rr)
                             for (int m : n == 2 ? std::vector<int>{0, 2} : std::vector<int>{0}) {
                                 CheckResult c = check_restriction(st.table, n, rr, m, 0, pc, p, n == 2 ? 6 : 5);
                                 r += c.residual;
                                 if (!c.pass) det = c.detail;
                             }
                         // homogeneity and symmetry of the partial sums
                         for (int rr = 1; rr <= n; ++rr)
                             for (int ell = 0; ell <= 4; ++ell) {
                                 Poly s = psi_partial_sum(st.table, n, rr, ell, p);
                                 if (!s.is_homogeneous(rr, ell) || !s.is_symmetric(rr)) r += 1;
                             }
                         return std::vector<Record>{
                             single(S, "rs.restriction_symbolic", "xi-restriction", pr, r, cfg.tol_symbolic, det)};
                     }});
    }
    {
        json pr = {{"n_max", 3}, {"K", 3}, {"shifts", {0, 1}}};
        t.push_back({S, "rs.grading_constancy_derivation", "xi-grading", pr, [=] {
                         double r = 0;
                         for (int n = 1; n <= 3; ++n) {
                             auto s0 = fe_solution_space(n, 0, 3);
                             if (s0.size() != 1 || s0[0] != Poly::constant(n, 1)) r += 1;
                             auto s1 = fe_solution_space(n, 1, 3);
                             Poly sum(n);
                             for (int j = 0; j <= n; ++j) sum += elem_sym(j, n, n);
                             if (s1.size() != 1 || s1[0] != sum) r += 1;
                         }
                         return std::vector<Record>{
                             single(S, "rs.grading_constancy_derivation", "xi-grading", pr, r, cfg.tol_symbolic,
                                    "shift 0 -> {1}; shift 1 -> {sum_j Y_j}")};
                     }});
    }
    return t;
}

// ---------------------------------------------------------------- oldforms

std::vector<Task> oldforms_tasks(const RunConfig& cfg) {
    std::vector<Task> t;
    const std::string S = "oldforms";
    const int p = cfg.p;
    {
        json pr = {{"n", 1}, {"p", p}, {"T", cfg.T}, {"mode", "symbolic"}, {"lambda", "(1)"}, {"m", 0}, {"m_prime", 2}};
        t.push_back({S, "oldforms.symbolic", "oldform-identity", pr, [=] {
                         SymbolicPipeline sp(p, cfg.T);
                         std::vector<Record> out;
                         Poly X = Poly::var(3, 0);
                         Poly Sx = satake_in(satake_transform({1}, 1, 0, p).value, 3);
                         XiObject x = sp.of(level_raise({1}, 0, 2, VectorExpr::base(sp.f, 1)), 2, -1);
                         const mpq_class qE = long(p) * p;
                         Poly stated = X * Sx * sp.base.poly * qE;
                         Poly weight = X * Sx * sp.base.poly * mpq_class(p);
                         Poly d1 = x.poly - stated, d2 = x.poly - weight;
                         out.push_back(single(S, "oldforms.eta_qE_factor_symbolic", "oldform-identity", pr,
                                              d1.max_abs_coeff().get_d(), cfg.tol_symbolic,
                                              "computed " + x.poly.str({"X", "beta", "Lambda"}) + "; predicted " +
                                                  stated.str({"X", "beta", "Lambda"})));
                         out.push_back(single(S, "oldforms.eta_weight_factor_symbolic", "eta-action", pr,
                                              d2.max_abs_coeff().get_d(), cfg.tol_symbolic,
                                              "per-step factor q X from the calibrated weight"));
                         out.push_back(single(S, "oldforms.functional_equation_symbolic", "xi-functional-equation", pr,
                                              check_functional_equation(x).residual, cfg.tol_symbolic));
                         // level a + 1
                         XiObject x1 = sp.of(level_one_projection(VectorExpr::base(sp.f, 1)), 1, 0);
                         Poly lam1(3);
                         for (const auto& [e, c] : x1.poly.t)
                             if (e[0] == 0) lam1.add_term(e, c);
                         Poly d3 = x1.poly - lam1 * (Poly::constant(3, 1) + X);
                         out.push_back(single(S, "oldforms.level_one_shape_symbolic", "level-a-plus-one", pr,
                                              d3.max_abs_coeff().get_d() + (lam1.is_zero() ? 1 : 0), cfg.tol_symbolic,
                                              "Xi = " + x1.poly.str({"X", "beta", "Lambda"})));
                         // lambda = 0, m' = m
                         XiObject x0 = sp.of(level_raise({0}, 0, 0, VectorExpr::base(sp.f, 1)), 0, 0);
                         out.push_back(single(S, "oldforms.trivial_lambda", "oldform-identity", pr,
                                              (x0.poly - sp.base.poly).max_abs_coeff().get_d(), cfg.tol_symbolic));
                         return out;
                     }});
    }
    for (const auto& beta : oracle_betas()) {
        json pr = {{"n", 1}, {"p", p}, {"T", cfg.T}, {"depth", cfg.depth}, {"beta", beta.get_str()}, {"lambda", "(1)"},
                   {"m", 0}, {"m_prime", 2}};
        t.push_back({S, "oldforms.oracle", "oldform-identity", pr, [=] {
                         OraclePipeline op(p, cfg.T, cfg.depth, beta);
                         Field f = Field::make(p);
                         std::vector<Record> out;
                         Poly Sat = satake_transform({1}, 1, 0, p).value;
                         auto [xi, tail] = op.of(level_raise({1}, 0, 2, VectorExpr::base(f, 1)), 2, -1);
                         double scale = max_abs(op.base_num);
                         NumPoly disp = oldform_prediction(op.base_num, 1, 2, 0, Sat, p);
                         NumPoly wt = oldform_prediction_from_weight(op.base_num, 1, 2, 0, Sat, p);
                         out.push_back(single(S, "oldforms.eta_qE_factor_oracle", "oldform-identity", pr,
                                              rel(std::max(max_abs(xi - disp), tail), scale), cfg.tol_oracle,
                                              "computed " + to_string(xi) + "; predicted " + to_string(disp)));
                         out.push_back(single(S, "oldforms.eta_weight_factor_oracle", "eta-action", pr,
                                              rel(std::max(max_abs(xi - wt), tail), scale), cfg.tol_oracle));
                         auto [x1, tail1] = op.of(level_one_projection(VectorExpr::base(f, 1)), 1, 0);
                         CheckResult c = check_level_a_plus_one(x1, 1, cfg.tol_oracle);
                         out.push_back(single(S, "oldforms.level_one_shape_oracle", "level-a-plus-one", pr,
                                              std::max(c.residual, rel(tail1, scale)), cfg.tol_oracle, to_string(x1)));
                         return out;
                     }});
    }
    return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> s{"dims", "cosets", "decomp", "trace", "hecke", "gk", "rs", "oldforms"};
    return s;
}

std::vector<Record> run_suite(const std::string& name, const RunConfig& cfg) {
    return run_suite(name, cfg, [](const std::string&) { return true; });
}

std::vector<Record> run_suite(const std::string& name, const RunConfig& cfg,
                              const std::function<bool(const std::string&)>& keep) {
    cfg.validate();
    std::vector<Task> tasks;
    if (name == "dims") tasks = dims_tasks(cfg);
    else if (name == "cosets") tasks = cosets_tasks(cfg);
    else if (name == "decomp") tasks = decomp_tasks(cfg);
    else if (name == "trace") tasks = trace_tasks(cfg);
    else if (name == "hecke") tasks = hecke_tasks(cfg);
    else if (name == "gk") tasks = gk_tasks(cfg);
    else if (name == "rs") tasks = rs_tasks(cfg);
    else if (name == "oldforms") tasks = oldforms_tasks(cfg);
    else throw ConfigError("unknown suite '" + name + "'");
    std::erase_if(tasks, [&](const Task& t) { return !keep(t.check); });
    std::vector<Record> recs = run_tasks(tasks, cfg.jobs);
    for (auto& r : recs) {
        r.provenance["p"] = std::to_string(cfg.p);
        r.provenance["seed"] = std::to_string(cfg.seed);
    }
    return recs;
}

// ---------------------------------------------------------------- compute

namespace {

mpq_class parse_q(const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw ConfigError("field 'beta': not a rational: '" + s + "'");
    }
}

json poly_json(const Poly& P, const std::vector<std::string>& names) {
    json terms = json::array();
    for (const auto& [e, c] : P.t) terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
    return {{"text", P.str(names)}, {"variables", names}, {"terms", terms}};
}

json numpoly_json(const NumPoly& P) {
    json terms = json::array();
    for (const auto& [e, c] : P) terms.push_back({{"exponents", e}, {"re", c.real()}, {"im", c.imag()}});
    return {{"text", to_string(P)}, {"terms", terms}};
}

void require_n1(const RunConfig& cfg, const char* what) {
    if (cfg.n && *cfg.n != 1)
        throw ConfigError(std::string("field 'n': ") + what + " is available for n = 1 only (no higher-rank oracle)");
}

VectorExpr xi_vector(const Field& f, int m) {
    VectorExpr v = VectorExpr::base(f, 1);
    if (m == 0) return v;
    if (m == 1) return level_one_projection(v);
    if (m == 2) return level_raise({1}, 0, 2, v);
    throw ConfigError("field 'm': compute xi supports m in {0, 1, 2}");
}

}  // namespace

json compute_whittaker(const RunConfig& cfg, const std::string& beta_s) {
    cfg.validate();
    require_n1(cfg, "compute whittaker");
    mpq_class beta = parse_q(beta_s);
    WhittakerTable t = u3_oracle_table(beta, cfg.p, cfg.depth, 0, cfg.T);
    json vals = json::array();
    for (const auto& [mu, v] : t.value)
        vals.push_back({{"mu", mu}, {"re", v.real()}, {"im", v.imag()}, {"error_bound", t.error.at(mu)}});
    return {{"kind", "whittaker_table"}, {"n", 1},          {"p", cfg.p},
            {"values", vals},            {"normalization", t.normalization}, {"provenance", t.provenance}};
}

json compute_satake(const RunConfig& cfg, const std::vector<int>& lambda) {
    cfg.validate();
    const int n = cfg.n ? *cfg.n : int(lambda.size());
    if (int(lambda.size()) != n) throw ConfigError("field 'lambda': needs n entries");
    const int m = cfg.m ? *cfg.m : 0;
    SatakeResult s = satake_transform(lambda, n, m, cfg.p, 4, n == 1 ? 100000 : 10000000);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return {{"kind", "satake_image"},
            {"n", n},
            {"m", m},
            {"p", cfg.p},
            {"lambda", lambda},
            {"truncation_K", s.K},
            {"cosets", s.cosets},
            {"image", poly_json(s.value, names)},
            {"provenance", {{"method", "coset enumeration, counts stable between K and K + 2"}}}};
}

json compute_xi(const RunConfig& cfg, const std::string& beta_s, bool symbolic) {
    cfg.validate();
    require_n1(cfg, "compute xi");
    const int m = cfg.m ? *cfg.m : 0;
    const int lo = m == 2 ? -1 : 0;
    Field f = Field::make(cfg.p);
    VectorExpr u = xi_vector(f, m);
    json j = {{"kind", "xi"}, {"n", 1}, {"r", 1}, {"m", m}, {"a", 0}, {"p", cfg.p}, {"T", cfg.T},
              {"normalization", "Lambda = W(0) of the spherical vector"}};
    if (symbolic) {
        SymbolicPipeline sp(cfg.p, cfg.T);
        XiObject x = m == 0 ? sp.base : sp.of(u, m, lo);
        j["mode"] = "symbolic";
        j["poly"] = poly_json(x.poly, {"X", "beta", "Lambda"});
        j["degree_range"] = {x.degree_lo, x.degree_hi};
        j["terminated"] = trailing_degree_exact(x) < 0;
        j["functional_equation_residual"] = check_functional_equation(x).residual;
    } else {
        OraclePipeline op(cfg.p, cfg.T, cfg.depth, parse_q(beta_s));
        auto [xi, tail] = m == 0 ? std::pair<NumPoly, double>{op.base_num, trailing_norm(op.base, op.st.binding)}
                                 : op.of(u, m, lo);
        j["mode"] = "oracle";
        j["beta"] = op.beta.get_str();
        j["depth"] = cfg.depth;
        j["poly"] = numpoly_json(xi);
        j["trailing_norm"] = tail;
    }
    return j;
}

json compute_oldform_xi(const RunConfig& cfg, const std::string& beta_s, const std::vector<int>& lambda, int mprime) {
    cfg.validate();
    require_n1(cfg, "compute oldform-xi");
    if (lambda.size() != 1) throw ConfigError("field 'lambda': one entry at n = 1");
    OraclePipeline op(cfg.p, cfg.T, cfg.depth, parse_q(beta_s));
    Field f = Field::make(cfg.p);
    auto [xi, tail] = op.of(level_raise(lambda, 0, mprime, VectorExpr::base(f, 1)), mprime, -lambda[0]);
    Poly Sat = satake_transform(lambda, 1, 0, cfg.p).value;
    NumPoly disp = oldform_prediction(op.base_num, 1, mprime, 0, Sat, cfg.p);
    NumPoly wt = oldform_prediction_from_weight(op.base_num, 1, mprime, 0, Sat, cfg.p);
    return {{"kind", "oldform_xi"},
            {"n", 1},
            {"p", cfg.p},
            {"beta", op.beta.get_str()},
            {"lambda", lambda},
            {"m", 0},
            {"m_prime", mprime},
            {"computed", numpoly_json(xi)},
            {"trailing_norm", tail},
            {"prediction_qE_factor", numpoly_json(disp)},
            {"prediction_weight_factor", numpoly_json(wt)},
            {"residual_qE_factor", max_abs(xi - disp)},
            {"residual_weight_factor", max_abs(xi - wt)}};
}

}  // namespace newform::harness
