#include "sqfdist/totient.hpp"

#include <cmath>
#include <stdexcept>

namespace sqf {

PhiTable phi_sieve(std::uint32_t limit) {
    if (limit < 1) throw std::invalid_argument("phi_sieve: limit must be >= 1");
    PhiTable t;
    t.limit = limit;
    t.values.resize(static_cast<size_t>(limit) + 1);
    for (std::uint32_t n = 0; n <= limit; ++n) t.values[n] = n;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (t.values[p] != p) continue;  // p composite: already reduced
        for (std::uint64_t m = p; m <= limit; m += p) t.values[m] -= t.values[m] / p;
    }
    t.values[1] = 1;
    return t;
}

std::uint64_t phi_count_cutoff(std::uint64_t r) {
    constexpr std::uint64_t kFloor = 30000;
    if (r < 3) return kFloor;
    double lr = 1.2 * std::log(static_cast<double>(r));  // log(r^(6/5))
    if (lr <= 1.0) return kFloor;
    double bound = 2.243 * static_cast<double>(r) * std::log(lr);
    // outward rounding: an over-wide scan is harmless, an under-wide one is not
    std::uint64_t b = static_cast<std::uint64_t>(std::ceil(bound)) + 1;
    return b < kFloor ? kFloor : b;
}

namespace {
std::uint32_t checked_cutoff(std::uint64_t r) {
    std::uint64_t n_max = phi_count_cutoff(r);
    if (n_max > 0xFFFFFFFFull)
        throw std::invalid_argument("phi census: r = " + std::to_string(r) +
                                    " needs a sieve beyond the 32-bit range");
    return static_cast<std::uint32_t>(n_max);
}
}  // namespace

PhiCensus::PhiCensus(std::uint64_t r_max) : r_max_(r_max) {
    if (r_max < 1) throw std::invalid_argument("PhiCensus: r_max must be >= 1");
    std::uint32_t n_max = checked_cutoff(r_max);
    PhiTable t = phi_sieve(n_max);
    // histogram of phi values, then prefix-sum: Phi(r) = #{n <= n_max : phi(n) <= r}
    cumulative_.assign(r_max + 1, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::uint32_t v = t.values[n];
        if (v <= r_max) ++cumulative_[v];
    }
    for (std::uint64_t r = 1; r <= r_max; ++r) cumulative_[r] += cumulative_[r - 1];
}

std::uint64_t PhiCensus::count(std::uint64_t r) const {
    if (r < 1 || r > r_max_) throw std::out_of_range("PhiCensus::count: r out of range");
    return cumulative_[r];
}

std::uint64_t phi_count(std::uint64_t r) {
    if (r < 1) throw std::invalid_argument("phi_count: r must be >= 1");
    std::uint32_t n_max = checked_cutoff(r);
    PhiTable t = phi_sieve(n_max);
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (t.values[n] <= r) ++c;
    return c;
}

std::vector<CensusRow> census(std::uint64_t r_max, const mpq_class& threshold) {
    PhiCensus c(r_max);
    std::vector<CensusRow> rows;
    for (std::uint64_t r = 1; r <= r_max; ++r) {
        std::uint64_t cnt = c.count(r);
        if (2 * cnt > 5 * r) throw PhiBoundViolation(r, cnt);  // Phi(r) <= 2.5r
        mpq_class ratio(static_cast<unsigned long>(cnt), static_cast<unsigned long>(r));
        ratio.canonicalize();
        if (ratio >= threshold) rows.push_back({r, cnt, ratio});
    }
    return rows;
}

double derbal_bound(double r) {
    if (r < 240) throw std::invalid_argument("derbal_bound: r must be >= 240");
    double lr = std::log(r);
    double tail = 58.61 * r * std::exp(-(std::sqrt(2.0) / 8.0) * std::sqrt(lr * std::log(lr)));
    return kPhiDensityConstant * r + tail;
}

}  // namespace sqf
