#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace sqf {

// Euler phi for 1..limit via sieve; values[n] = phi(n), values[0] unused.
struct PhiTable {
    std::uint32_t limit = 0;
    std::vector<std::uint32_t> values;
    std::uint32_t operator()(std::uint32_t n) const { return values[n]; }
};

PhiTable phi_sieve(std::uint32_t limit);

// Scan bound for counting {n : phi(n) <= r}: every such n satisfies
// n <= max(30000, 2.243 r loglog(r^(6/5))). Rounded outward.
std::uint64_t phi_count_cutoff(std::uint64_t r);

// Phi(r) = #{n >= 1 : phi(n) <= r}.
std::uint64_t phi_count(std::uint64_t r);

// Shared-sieve batch: Phi(r) for many r <= r_max from one histogram pass.
class PhiCensus {
public:
    explicit PhiCensus(std::uint64_t r_max);
    std::uint64_t count(std::uint64_t r) const;  // Phi(r), r <= r_max
    std::uint64_t r_max() const { return r_max_; }

private:
    std::uint64_t r_max_;
    std::vector<std::uint64_t> cumulative_;  // cumulative_[r] = Phi(r)
};

struct CensusRow {
    std::uint64_t r = 0;
    std::uint64_t phi_count = 0;
    mpq_class ratio;  // phi_count / r in lowest terms
};

struct PhiBoundViolation : std::runtime_error {
    PhiBoundViolation(std::uint64_t r, std::uint64_t count)
        : std::runtime_error("Phi(" + std::to_string(r) + ") = " + std::to_string(count) +
                             " exceeds 2.5r"),
          r(r),
          count(count) {}
    std::uint64_t r, count;
};

// Rows with Phi(r)/r >= threshold for r <= r_max, verifying Phi(r) <= 2.5r
// throughout (throws PhiBoundViolation with the counterexample otherwise).
std::vector<CensusRow> census(std::uint64_t r_max, const mpq_class& threshold);

// Explicit upper bound for Phi(r), r >= 240:
// (zeta(2)zeta(3)/zeta(6)) r + 58.61 r exp(-(sqrt(2)/8) sqrt(log r loglog r)).
double derbal_bound(double r);

inline constexpr double kPhiDensityConstant = 1.9435964368207592;  // zeta(2)zeta(3)/zeta(6)

}  // namespace sqf
