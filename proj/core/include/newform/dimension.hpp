#pragma once

#include <vector>

#include <gmpxx.h>

namespace newform {

// binom(a, b), zero when a < b or b < 0
mpz_class binom(long a, long b);

// dim of K_{n,m}-fixed vectors of a generic pi of conductor a
mpz_class dim_oldforms(int n, int a, int m);
// Gamma_{r,m}-fixed vectors of a generic irreducible GL_r representation of conductor a
mpz_class dim_gl_oldforms(int r, int a, int m);

// sum_{d=0}^{l} binom(l-d+r-1, r-1) binom(d+n-r, n-r) == binom(l+n, n)
bool vandermonde_check(int l, int r, int n);

// pi = tau_1 x ... x tau_k ⋊ pi_0 with rank(tau_j) = ranks[j], conductors gl_cond[j]; pi_0 of
// rank n - sum ranks and conductor a0. Evaluates the convolution over the K0-cosets recursively.
mpz_class dim_recursive(int n, const std::vector<int>& ranks, const std::vector<int>& gl_cond, int a0, int m);
// dim_recursive == dim_oldforms at the total conductor
bool dim_recursion_check(int n, const std::vector<int>& ranks, const std::vector<int>& gl_cond, int a0, int m);

}  // namespace newform
