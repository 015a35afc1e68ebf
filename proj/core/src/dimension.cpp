#include "newform/dimension.hpp"

#include <numeric>
#include <stdexcept>

#include "newform/lfactors.hpp"

namespace newform {

namespace {

long floor_div2(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

mpz_class binom(long a, long b) {
    if (b < 0 || a < b) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

mpz_class dim_oldforms(int n, int a, int m) {
    if (n < 0 || a < 0 || m < 0) throw std::invalid_argument("dim_oldforms: negative argument");
    return binom(floor_div2(long(m) - a) + n, n);
}

mpz_class dim_gl_oldforms(int r, int a, int m) {
    if (r < 1 || a < 0 || m < 0) throw std::invalid_argument("dim_gl_oldforms: bad argument");
    if (m < a) return 0;
    return binom(long(m) - a + r - 1, r - 1);
}

bool vandermonde_check(int l, int r, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("vandermonde_check: need 1 <= r <= n");
    mpz_class s = 0;
    for (int d = 0; d <= l; ++d) s += binom(l - d + r - 1, r - 1) * binom(d + n - r, n - r);
    return s == binom(l + n, n);
}

mpz_class dim_recursive(int n, const std::vector<int>& ranks, const std::vector<int>& gl_cond, int a0, int m) {
    if (ranks.size() != gl_cond.size()) throw std::invalid_argument("dim_recursive: ranks/conductors mismatch");
    if (ranks.empty()) return dim_oldforms(n, a0, m);
    const int r = ranks[0];
    if (r < 1 || r > n) throw std::invalid_argument("dim_recursive: rank out of range");
    const int e = m % 2, l = m / 2;
    std::vector<int> rr(ranks.begin() + 1, ranks.end()), cc(gl_cond.begin() + 1, gl_cond.end());
    mpz_class s = 0;
    for (int d = 0; d <= l; ++d) {
        mpz_class g = dim_gl_oldforms(r, gl_cond[0], l - d);
        if (g == 0) continue;
        s += g * dim_recursive(n - r, rr, cc, a0, e + 2 * d);
    }
    return s;
}

bool dim_recursion_check(int n, const std::vector<int>& ranks, const std::vector<int>& gl_cond, int a0, int m) {
    int total = std::accumulate(ranks.begin(), ranks.end(), 0);
    if (total > n) throw std::invalid_argument("dim_recursion_check: sum of ranks exceeds n");
    std::vector<ConductorPiece> pieces{{PieceKind::Anchor, a0}};
    for (int a : gl_cond) pieces.push_back({PieceKind::GL, a});
    return dim_recursive(n, ranks, gl_cond, a0, m) == dim_oldforms(n, conductor_arith(pieces), m);
}

}  // namespace newform
