#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqfdist/fppoly.hpp"

namespace sqf {

// Degree-d members of the hard families over F_p: multiplier * u + tail,
// where the tail solves the defining congruences and the multiplier is the
// product of the squared moduli.
//   p = 2:  x^2 (x+1)^2 (x^2+x+1)^2 * u + (x^6+x^5+x^4+x^3+x^2),   deg u = d-8,  d >= 8
//   p = 3:  x^2 (x+1)^2 (x-1)^2 (x^2+x-1)^2 (x^2-x-1)^2 * u
//             + (x^13 - x^12 - x^9 + x^8 + x^6 + x^5 - x^2),       deg u = d-14, d >= 14
//   p >= 5: x^2 (2x+1)^2 (2x-1)^2 (6x+1)^2 (6x-1)^2 * u + f15,     deg u = d-10, d >= 16,
//           with f15 the canonical degree-15 hard instance reduced mod p;
//           d = 15 admits u = 0 or deg u = 5 with a degree check.
FpPoly family_member(std::int64_t p, int d, const FpPoly& u);

FpPoly family_multiplier(std::int64_t p);
FpPoly family_tail(std::int64_t p);
int family_tail_degree(std::int64_t p);     // 8, 14, 10
int family_min_degree(std::int64_t p);      // 8, 14, 15

// Certificate that no square-free polynomial (of any degree) lies at
// L_p-distance <= 1 from f: x^2 | f covers f and every f +- c x^k with
// k >= 2, and each of f +- 1, f +- x carries a repeated-factor witness.
struct MemberReport {
    struct Blocker {
        FpPoly perturbation;
        FpPoly square_witness;
    };
    explicit MemberReport(FpPoly poly) : f(std::move(poly)) {}
    FpPoly f;
    bool verified = false;
    std::vector<Blocker> blockers;
    std::optional<FpPoly> refutation;  // square-free distance-1 neighbor
};
MemberReport verify_family_member(const FpPoly& f);

// Enumerates every admissible u for (p, d), verifies each member, checks
// distinctness, and compares the count with the lower-bound formula
// (2^(d-8), 2*3^(d-14), (p-2)p^5 for d = 15, (p-1)p^(d-10) for d >= 16).
struct FamilyCheck {
    std::int64_t p = 0;
    int d = 0;
    mpz_class expected;           // the formula value
    std::uint64_t verified_members = 0;
    bool distinct = false;
    bool ok = false;
    std::optional<FpPoly> failure;  // first member that failed verification
};
FamilyCheck family_count_check(std::int64_t p, int d, int jobs = 0);

// Exhaustive scan of Question-6.2 type: over all f of degree exactly d,
// the minimum L_p-distance to a square-free g with deg g <= d, maximized.
struct ScanResult {
    ScanResult(std::int64_t p, int d) : p(p), d(d), witness(p) {}
    std::int64_t p;
    int d;
    int max_min_distance = 0;
    FpPoly witness;  // first f attaining the maximum, in enumeration order
    std::uint64_t scanned = 0;
};
ScanResult question62_scan(std::int64_t p, int d, int jobs = 0);

}  // namespace sqf
