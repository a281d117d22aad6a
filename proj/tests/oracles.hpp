#pragma once

// Test-only oracles, kept independent of the library's algorithm choices.

#include <gmpxx.h>

#include <random>
#include <vector>

#include "sqfdist/gf2poly.hpp"
#include "sqfdist/intpoly.hpp"

namespace oracles {

// Resultant as the Sylvester determinant (Bareiss fraction-free elimination),
// in the convention res(f, g) = lc(g)^deg(f) * prod f(beta) over roots of g.
inline mpz_class sylvester_resultant(const sqf::IntPoly& f, const sqf::IntPoly& g) {
    const int n = f.degree(), m = g.degree();
    if (n < 0 || m < 0) throw std::invalid_argument("sylvester: zero input");
    if (n == 0 && m == 0) return 1;
    const int N = n + m;
    // rows: deg(f) copies of g's coefficients, then deg(g) copies of f's
    std::vector<std::vector<mpz_class>> a(N, std::vector<mpz_class>(N, mpz_class(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = g.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = f.coeff(n - j);
    // Bareiss
    mpz_class denom = 1;
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (a[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
            }
        denom = a[k][k];
    }
    return sign * a[N - 1][N - 1];
}

// All GF(2) irreducibles of degree <= max_deg by sieving products.
inline std::vector<sqf::GF2Poly> gf2_irreducibles(int max_deg) {
    std::vector<sqf::GF2Poly> irr;
    for (std::uint64_t bits = 2; bits < (1ull << (max_deg + 1)); ++bits) {
        sqf::GF2Poly f = sqf::GF2Poly::from_bits(bits);
        bool divisible = false;
        for (const auto& p : irr) {
            if (p.degree() > f.degree() / 2) break;
            if (mod(f, p).is_zero()) {
                divisible = true;
                break;
            }
        }
        if (!divisible && f.degree() >= 1) irr.push_back(f);
    }
    return irr;
}

// Multiplicity-aware trial-division factorization over GF(2).
inline std::vector<std::pair<sqf::GF2Poly, int>> gf2_factor(sqf::GF2Poly f,
                                                            const std::vector<sqf::GF2Poly>& irr) {
    std::vector<std::pair<sqf::GF2Poly, int>> out;
    for (const auto& p : irr) {
        if (f.degree() < p.degree()) break;
        int m = 0;
        while (mod(f, p).is_zero()) {
            f = divide(f, p);
            ++m;
        }
        if (m > 0) out.emplace_back(p, m);
    }
    return out;
}

inline bool gf2_squarefree_by_trial_division(const sqf::GF2Poly& f,
                                             const std::vector<sqf::GF2Poly>& irr) {
    for (const auto& [p, m] : gf2_factor(f, irr))
        if (m >= 2) return false;
    return true;
}

inline sqf::IntPoly random_intpoly(std::mt19937_64& rng, int max_deg, long max_coeff) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long> coeff_dist(-max_coeff, max_coeff);
    int d = deg_dist(rng);
    std::vector<mpz_class> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = coeff_dist(rng);
    while (c.back() == 0) c.back() = coeff_dist(rng);
    return sqf::IntPoly(std::move(c));
}

}  // namespace oracles
