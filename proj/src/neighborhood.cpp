#include "sqfdist/neighborhood.hpp"

#include <cmath>
#include <stdexcept>

#include "sqfdist/totient.hpp"

namespace sqf {

namespace {

// Perturbation terms (power, delta) with strictly increasing powers and
// sum |delta| == s, emitted in lexicographic support order. For each support
// power the magnitude takes the largest remaining share first, and + precedes -.
template <typename Fn>
void emit_perturbations(int s, int min_power, int max_power,
                        std::vector<std::pair<int, long>>& acc, const Fn& fn) {
    if (s == 0) {
        fn(acc);
        return;
    }
    for (int i = min_power; i <= max_power; ++i) {
        for (int mag = s; mag >= 1; --mag) {
            for (int sign : {1, -1}) {
                acc.emplace_back(i, sign * static_cast<long>(mag));
                emit_perturbations(s - mag, i + 1, max_power, acc, fn);
                acc.pop_back();
            }
        }
    }
}

}  // namespace

std::vector<IntPoly> enumerate_neighbors(const IntPoly& f, int budget, int degree_cap,
                                         bool allow_large_budget) {
    if (budget < 1) throw std::invalid_argument("enumerate_neighbors: budget must be >= 1");
    if (budget > 2 && !allow_large_budget)
        throw std::invalid_argument("enumerate_neighbors: budget > 2 rejected (pass the override)");
    if (degree_cap < 0) throw std::invalid_argument("enumerate_neighbors: negative degree cap");

    const int max_power = std::max(f.degree(), degree_cap);
    std::vector<IntPoly> out;
    std::vector<std::pair<int, long>> acc;
    for (int s = 0; s <= budget; ++s) {
        emit_perturbations(s, 0, max_power, acc, [&](const std::vector<std::pair<int, long>>& terms) {
            IntPoly g = f;
            for (const auto& [power, delta] : terms) g += IntPoly::monomial(delta, power);
            if (!g.is_zero() && g.degree() <= degree_cap) out.push_back(std::move(g));
        });
    }
    return out;
}

SearchReport nearest_squarefree(const IntPoly& f, int budget, int degree_cap,
                                bool allow_large_budget) {
    SearchReport report;
    report.center = f;
    report.budget = budget;
    report.degree_cap = degree_cap;
    for (const IntPoly& g : enumerate_neighbors(f, budget, degree_cap, allow_large_budget)) {
        ++report.neighbors_tested;
        if (is_squarefree(g)) {
            IntPoly diff = f - g;
            report.distance = static_cast<int>(diff.length().get_si());
            report.found = g;
            break;
        }
    }
    return report;
}

IntPoly tail_construct(const IntPoly& f, long n) {
    if (f.is_zero()) throw std::invalid_argument("tail_construct: zero polynomial");
    mpz_class lfp = f.derivative().length();
    if (mpz_class(n) <= lfp)
        throw std::invalid_argument("tail_construct: n must exceed L(f') = " + lfp.get_str());
    bool x2_divides = f.coeff(0) == 0 && f.coeff(1) == 0;
    IntPoly g = f + IntPoly::monomial(1, static_cast<int>(n));
    if (x2_divides) g += IntPoly{1};
    if (!is_squarefree(g)) throw std::logic_error("tail_construct: result not square-free (impossible)");
    return g;
}

double degree_bound(long d, const mpz_class& Lf) {
    if (d < 3) throw std::invalid_argument("degree_bound: d must be >= 3");
    if (Lf < 2) throw std::invalid_argument("degree_bound: L(f) must be >= 2");
    double ld = std::log(static_cast<double>(d));
    double lld = std::log(ld);
    double ratio = ld / lld;
    // log of an arbitrary-precision value via mantissa/exponent split
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, Lf.get_mpz_t());
    double log_lf = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    return 2.2 * static_cast<double>(d) * ratio * ratio * ratio * log_lf;
}

WindowResult tail_window(const IntPoly& f) {
    if (f.degree() < 3) throw std::invalid_argument("tail_window: deg f must be >= 3");
    if (f.coeff(0) == 0 && f.coeff(1) == 0)
        throw std::invalid_argument("tail_window: x^2 divides f; pass f + 1 instead");
    mpz_class lf = f.length();
    if (lf < 2) throw std::invalid_argument("tail_window: L(f) must be >= 2");
    WindowResult res;
    if (lf == 2) {
        // f = +-x^d +- x^j with j <= 1: double the low term.
        int j = f.coeff(0) != 0 ? 0 : 1;
        res.special_g = f + IntPoly::monomial(f.coeff(j) > 0 ? 1 : -1, j);
        if (!is_squarefree(*res.special_g))
            throw std::logic_error("tail_window: fallback not square-free (impossible)");
        return res;
    }
    long d = f.degree();
    double ld = std::log(static_cast<double>(d));
    double lld = std::log(ld);
    double ratio = ld / lld;
    double log_lf = std::log(lf.get_d());
    double m_real = static_cast<double>(d) + 2.0 * static_cast<double>(d) * ratio * ratio * ratio * log_lf;
    DegreeWindow w;
    w.m = static_cast<long>(std::floor(m_real));
    w.phi_d = static_cast<long>(phi_count(static_cast<std::uint64_t>(d)));
    w.lo = w.m + 1;
    w.hi = w.m + w.phi_d + 1;
    res.window = w;
    return res;
}

long minimal_tail_exponent(const IntPoly& f, long cap) {
    if (f.is_zero()) throw std::invalid_argument("minimal_tail_exponent: zero polynomial");
    if (cap < 1) throw std::invalid_argument("minimal_tail_exponent: cap must be >= 1");
    bool x2_divides = f.coeff(0) == 0 && f.coeff(1) == 0;
    for (long n = 1; n <= cap; ++n) {
        IntPoly g = f + IntPoly::monomial(1, static_cast<int>(n));
        if (x2_divides) g += IntPoly{1};
        if (!g.is_zero() && is_squarefree(g)) return n;
    }
    throw std::runtime_error("minimal_tail_exponent: no square-free tail up to cap " +
                             std::to_string(cap));
}

}  // namespace sqf
