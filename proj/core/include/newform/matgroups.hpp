#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "newform/exactnum.hpp"

namespace newform {

// Dense square-or-rectangular matrix over E, row major.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<QE> d;

    Mat() = default;
    Mat(int r, int c, const Field& f) : rows(r), cols(c), d(size_t(r) * c, QE(f)) {}

    QE& operator()(int i, int j) { return d[size_t(i) * cols + j]; }
    const QE& operator()(int i, int j) const { return d[size_t(i) * cols + j]; }
    Field field() const { return d.empty() ? Field{} : d[0].field(); }

    friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.d == y.d; }
};

Mat identity(const Field& f, int N);
Mat antidiag(const Field& f, int N);  // J_N
Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat scale(const Mat& x, const QE& s);
Mat transpose(const Mat& x);
Mat conj(const Mat& x);
Mat conj_transpose(const Mat& x);
Mat inverse(const Mat& x);           // Gauss-Jordan, throws if singular
Mat unitary_inverse(const Mat& g);   // J g^* J, valid on U_N
Mat submatrix(const Mat& x, int r0, int c0, int nr, int nc);
Mat reduce_precision(const Mat& x, int M);
int min_val(const Mat& x);
std::string to_string(const Mat& x);

// Raised when the answer would depend on p-adic digits beyond the known precision.
struct Indeterminate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Is val(x) >= t, for x known modulo p^prec (prec = kInf: exact).
bool val_at_least(const QE& x, int t, int prec);

// Levels m = e + 2l.
struct LevelSpec {
    int n = 1;
    int m = 0;
    int e() const { return m % 2; }
    int l() const { return m / 2; }
};

// ---- root elements and Weyl representatives (indices 1-based as in the usual notation)

enum class RootKind { EiMinusEj, EiPlusEj, Ek, NegEk, NegEiPlusEj, NegEiMinusEj, TwoEk, NegTwoEk };

struct Root {
    RootKind kind;
    int i = 1, j = 0;  // j unused for the single-index kinds
    std::string str() const;
};

Mat root_element(const Field& f, int n, const Root& a, const QE& y);
Mat weyl_rep(const Field& f, int n, const std::vector<int>& perm, const std::vector<int>& S, const QE& y);
Mat torus(const Field& f, int n, const std::vector<QE>& t, const QE& t0);  // diag(t, t0, t*)
Mat gl_embed(const Mat& a, int n, const Mat* g0 = nullptr);               // diag(a, g0, a*) in G_n
Mat h_embed(const Mat& h, int n);                                          // H_r -> G_n
Mat h_extract(const Mat& g, int r);                                        // inverse of h_embed
Mat t_ell(const Field& f, int n, int l);
Mat mid_embed(const Mat& g0, int n);                                       // G_{n-k} in the middle of G_n

// ---- membership

enum class Group { U, K, K0, R, Gamma, GammaPrime, E1, B, P, Pbar };

bool is_unitary(const Mat& g, int prec = kInf);
bool in_K(const Mat& g, int n, int m, int prec = kInf);
bool in_K0(const Mat& g, int n, int m, int prec = kInf);
bool in_R(const Mat& h, int r, int m, int prec = kInf);  // h of size 2r
bool in_Gamma(const Mat& a, int m, int prec = kInf);
bool in_GammaPrime(const Mat& a, int m, int prec = kInf);
bool in_E1(const QE& z, int m, int prec = kInf);
bool in_B(const Mat& g, int prec = kInf);
bool in_P(const Mat& g, int n, int r, int prec = kInf);
bool in_Pbar(const Mat& g, int n, int r, int prec = kInf);
// First violated block of the K_{n,m} shape, if any.
std::optional<std::string> K_violation(const Mat& g, int n, int m, int prec = kInf);

// ---- decompositions

struct Iwasawa {
    Mat b, k;
};
Iwasawa iwasawa_decompose(const Mat& g, int n, int e);

struct RootFactor {
    Root root;
    QE y;
};

struct CompactDecomp {
    QE z;
    std::vector<RootFactor> minus;  // chi_{-eps_j}(x_j), x_j in p^m
    std::vector<RootFactor> plus;   // chi_{eps_i}(y_i), y_i in o_E
    Mat r;                          // in R_{n,m}, mid row/column exactly v0
    int prec = 0;
    int newton_steps = 0;
    Mat product(int n) const;
};

// plus_order lists the indices 1..n in the order the plus factors multiply
// (leftmost first); empty means 1..n.
CompactDecomp decompose_compact(const Mat& g, const LevelSpec& spec, int M, std::vector<int> plus_order = {});

// Solve beta*w + a*w*conj(w)/2 = c for w in p^m by Newton iteration over F^2.
struct HenselResult {
    QE w;
    int steps = 0;
};
HenselResult hensel_solve(const QE& beta, const QE& a, const QE& c, int m, int M);

// k = nbar * u * t * w with nbar, u unipotent (lower, upper), t diagonal, w in W_0; k in K_{n,0}.
struct HyperspecialBruhat {
    Mat nbar, u, t, w;
};
HyperspecialBruhat decompose_hyperspecial(const Mat& k, int n);

enum class Side { Pbar, P };

struct ClassifyTrace {
    int d = 0;
    std::vector<int> di;  // valuations of the collected chi_{eps_i} parameters (kInf if zero)
};
ClassifyTrace coset_classify_trace(const Mat& g, int n, int r, const LevelSpec& spec, Side side, int M);
int coset_classify(const Mat& g, int n, int r, const LevelSpec& spec, Side side, int M);
// Independent invariant of the double coset, from the pairings of g v0 with f_1..f_r.
int coset_pairing_invariant(const Mat& g, int n, int r, const LevelSpec& spec, Side side);
Mat coset_representative(const Field& f, int n, int r, const LevelSpec& spec, Side side, int d);

struct LeviPart {
    Mat a, g0;
};
LeviPart levi_part_extract(const Mat& h, int n, int r, Side side);

std::vector<int> elementary_divisors(const Mat& g);

// ---- random sampling (bounded-valuation words)

struct Sampler {
    Field f;
    std::mt19937_64 rng;
    int word_length = 12;
    int digits = 3;

    Sampler(const Field& f_, uint64_t seed) : f(f_), rng(seed) {}

    QE elt(int lo) { return random_qe(rng, f, lo, digits); }
    QE unit() { return random_unit(rng, f, digits); }
    QE f_elt(int lo) { return QE(f, random_rational(rng, f.p, lo, digits)); }
    QE norm_one();  // element of E^1, c / conj(c)
    QE norm_one_congruent(int m);  // element of E^1_m
    Root random_root(int n, bool positive_only = false, bool negative_only = false);

    Mat K_element(int n, int m);
    Mat K0_element(int n, int m);
    Mat R_element(int r, int m);          // in H_r, size 2r
    Mat Gamma_element(int r, int m);      // GL_r(o)
    Mat Pbar_element(int n, int r, int spread);
    Mat G_element(int n, int spread);
    // Word in the lifts used to show Gamma'_{r,l-d} x K0_{n-r,e+2d} lies in the Levi image of
    // s K0_{n,m} s^{-1} cap Pbar_{n,r}, s = chi_{eps_r}(p^d).
    Mat Levi_lift(int n, int r, const LevelSpec& spec, int d);
};

}  // namespace newform
