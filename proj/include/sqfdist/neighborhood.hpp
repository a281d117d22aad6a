#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqfdist/intpoly.hpp"

namespace sqf {

// All g != 0 with L(f - g) <= budget and deg g <= degree_cap, each exactly
// once, in a fixed order: by distance, then lexicographically along the
// perturbation's support terms, each term ordered by power ascending,
// magnitude descending, + before -. Budgets above 2 are rejected unless
// allow_large_budget is set.
std::vector<IntPoly> enumerate_neighbors(const IntPoly& f, int budget, int degree_cap,
                                         bool allow_large_budget = false);

struct SearchReport {
    IntPoly center;
    int budget = 0;
    int degree_cap = 0;
    std::optional<IntPoly> found;
    int distance = -1;  // L(center - found) when found
    std::uint64_t neighbors_tested = 0;
};

// First square-free neighbor in enumeration order, or an exhaustion report.
SearchReport nearest_squarefree(const IntPoly& f, int budget, int degree_cap,
                                bool allow_large_budget = false);

// x^n + f, with +1 appended when x^2 | f; square-free for every n > L(f')
// (asserted on the result). Rejects n <= L(f').
IntPoly tail_construct(const IntPoly& f, long n);

// 2.2 d (log d / log log d)^3 log(Lf), natural logarithms; d >= 3, Lf >= 2.
double degree_bound(long d, const mpz_class& Lf);

struct DegreeWindow {
    long m = 0;
    long phi_d = 0;  // number of n >= 1 with phi(n) <= d
    long lo = 0;     // m + 1
    long hi = 0;     // m + phi_d + 1
};

// Degree window [m+1, m+Phi(d)+1] with
// m = floor(d + 2d (log d / log log d)^3 log L(f)): some n in the window
// makes x^n + f square-free. Requires deg f >= 3 and x^2 not dividing f
// (callers substitute f+1 otherwise). When L(f) = 2 (f = +-x^d +- x^j,
// j <= 1) the window degenerates and the doubled-term polynomial
// +-x^d +- 2x^j is returned instead.
struct WindowResult {
    std::optional<DegreeWindow> window;
    std::optional<IntPoly> special_g;  // the L(f) = 2 fallback
};
WindowResult tail_window(const IntPoly& f);

// Smallest n >= 1 with x^n + f (+1 when x^2 | f) square-free, scanning up to
// cap; by the tail construction it is at most L(f') + 1. Throws on exhaustion.
long minimal_tail_exponent(const IntPoly& f, long cap);

}  // namespace sqf
