#include "sqfdist/turan.hpp"

#include <stdexcept>

#include "sqfdist/poly_text.hpp"

namespace sqf {

namespace {

IntPoly lin(long a0, long a1) { return IntPoly{a0, a1}; }

IntPoly squared(const IntPoly& p) { return p * p; }

}  // namespace

CongruenceSystem turan15_system() {
    CongruenceSystem s;
    s.entries.push_back({RatPoly{}, squared(lin(0, 1))});                       // 0 mod x^2
    s.entries.push_back({RatPoly(IntPoly{-1}), squared(lin(1, 2))});            // -1 mod (2x+1)^2
    s.entries.push_back({RatPoly(IntPoly{0, 1}), squared(lin(-1, 2))});         // x mod (2x-1)^2
    s.entries.push_back({RatPoly(IntPoly{1}), squared(lin(1, 6))});             // 1 mod (6x+1)^2
    s.entries.push_back({RatPoly(IntPoly{0, -1}), squared(lin(-1, 6))});        // -x mod (6x-1)^2
    return s;
}

CongruenceSystem referee_system() {
    CongruenceSystem s;
    s.entries.push_back({RatPoly{}, squared(lin(0, 1))});                        // 0 mod x^2
    s.entries.push_back({RatPoly(IntPoly{1}), squared(lin(-1, 1))});             // 1 mod (x-1)^2
    s.entries.push_back({RatPoly(IntPoly{-1}), squared(lin(-1, 2))});            // -1 mod (2x-1)^2
    s.entries.push_back({RatPoly(IntPoly{0, 1}), squared(IntPoly{-1, 1, 1})});   // x mod (x^2+x-1)^2
    s.entries.push_back({RatPoly(IntPoly{0, -1}), squared(IntPoly{1, -2, -1, 1})});  // -x mod (x^3-x^2-2x+1)^2
    return s;
}

const IntPoly& turan15_polynomial() {
    static const IntPoly f = parse_int_poly(
        "15552*x^15 + 5184*x^14 + 5616*x^13 + 8784*x^12 + 13908*x^11 + 13756*x^10 + 96413*x^9 "
        "- 18929*x^8 - 57229*x^7 + 6851*x^6 + 9435*x^5 - 932*x^4 - 346*x^3 + 36*x^2");
    return f;
}

const IntPoly& referee_polynomial() {
    static const IntPoly f = parse_int_poly(
        "125200*x^15 - 325540*x^14 - 726388*x^13 + 2529575*x^12 + 552645*x^11 - 6814352*x^10 "
        "+ 3701398*x^9 + 6619994*x^8 - 7934278*x^7 + 313994*x^6 + 3958516*x^5 - 2649357*x^4 "
        "+ 723237*x^3 - 74643*x^2");
    return f;
}

HardInstanceReport verify_hard_instance(const IntPoly& f, int k_cap) {
    if (f.is_zero()) throw std::invalid_argument("verify_hard_instance: zero polynomial");
    HardInstanceReport report;
    report.f = f;

    // x^2 | f covers f itself and every f +- x^k with k >= 2.
    if (f.coeff(0) != 0 || f.coeff(1) != 0) {
        // No blanket certificate without x^2 | f: exhibit a square-free
        // neighbor. Since x^2 does not divide f, x^n + f is square-free for
        // some n <= L(f') + 1, so the scan below always terminates.
        if (is_squarefree(f)) {
            report.counterexample = f;
            return report;
        }
        const IntPoly units[] = {IntPoly{1}, IntPoly{-1}, IntPoly{0, 1}, IntPoly{0, -1}};
        for (const auto& p : units) {
            IntPoly g = f + p;
            if (!g.is_zero() && is_squarefree(g)) {
                report.counterexample = g;
                return report;
            }
        }
        mpz_class limit = f.derivative().length() + 1;
        for (int k = 2; mpz_class(k) <= limit; ++k) {
            for (int s : {1, -1}) {
                IntPoly g = f + IntPoly::monomial(s, k);
                if (!g.is_zero() && is_squarefree(g)) {
                    report.counterexample = g;
                    return report;
                }
            }
        }
        throw std::logic_error("verify_hard_instance: no square-free neighbor found (impossible)");
    }
    report.blockers.push_back({IntPoly{}, IntPoly{0, 1}});

    const IntPoly perturbations[] = {IntPoly{1}, IntPoly{-1}, IntPoly{0, 1}, IntPoly{0, -1}};
    for (const auto& p : perturbations) {
        IntPoly g = f + p;
        if (g.is_zero() || is_squarefree(g)) {
            report.counterexample = g;
            return report;
        }
        report.blockers.push_back({p, repeated_factor_part(g)});
    }
    for (int k = 2; k <= k_cap; ++k) {
        for (int s : {1, -1}) {
            IntPoly g = f + IntPoly::monomial(s, k);
            if (!g.is_zero() && is_squarefree(g)) {
                report.counterexample = g;  // would contradict x^2 | f
                return report;
            }
        }
    }
    report.verified = true;
    return report;
}

namespace {

IntPoly family_multiplier(const std::vector<IntPoly>& bases) {
    IntPoly m = IntPoly::constant(1);
    for (const auto& b : bases) m *= b * b;
    return m;
}

IntPoly hard_family_impl(int d, const mpz_class& k, const IntPoly& base,
                         const std::vector<IntPoly>& tail_bases, int tail_degree) {
    if (d < 15) throw std::invalid_argument("hard_family: degree must be >= 15");
    if (d == 15) return base;
    if (k == 0) throw std::invalid_argument("hard_family: k must be nonzero");
    if (base.degree() != 15) throw std::invalid_argument("hard_family: base must have degree 15");
    if (d - tail_degree < 2)
        throw std::invalid_argument("hard_family: degree too small for this modulus list");
    IntPoly tail = family_multiplier(tail_bases) * k;
    return base + tail.shifted_up(d - tail_degree);
}

}  // namespace

IntPoly hard_family(int d, const mpz_class& k, const IntPoly& base) {
    // (2x+1)^2 (2x-1)^2 (6x+1)^2 (6x-1)^2 has degree 8
    return hard_family_impl(d, k, base, {lin(1, 2), lin(-1, 2), lin(1, 6), lin(-1, 6)}, 8);
}

IntPoly hard_family_referee(int d, const mpz_class& k, const IntPoly& base) {
    // (x-1)^2 (2x-1)^2 (x^2+x-1)^2 (x^3-x^2-2x+1)^2 has degree 14
    return hard_family_impl(d, k, base,
                            {lin(-1, 1), lin(-1, 2), IntPoly{-1, 1, 1}, IntPoly{1, -2, -1, 1}},
                            14);
}

bool pairwise_resultant_unimodular(const std::vector<IntPoly>& bases) {
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i + 1; j < bases.size(); ++j) {
            mpz_class r = resultant(bases[i], bases[j]);
            if (r != 1 && r != -1) return false;
        }
    return true;
}

bool yields_integer_crt(const std::vector<IntPoly>& bases) {
    static const IntPoly canonical[] = {IntPoly{}, IntPoly{1}, IntPoly{-1}, IntPoly{0, 1},
                                        IntPoly{0, -1}};
    CongruenceSystem s;
    for (size_t i = 0; i < bases.size(); ++i)
        s.entries.push_back({RatPoly(canonical[i % 5]), bases[i] * bases[i]});
    try {
        return crt_solve(s).is_integral();
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<IntPoly> resultant_one_list_search(std::vector<IntPoly> seed, int count,
                                               int degree_cap) {
    if (seed.empty()) throw std::invalid_argument("list search: seed must be nonempty");
    if (!pairwise_resultant_unimodular(seed))
        throw std::invalid_argument("list search: seed is not pairwise resultant +-1");
    constexpr long kHeight = 3;
    for (int deg = 1; static_cast<int>(seed.size()) < count; ++deg) {
        if (deg > degree_cap)
            throw std::runtime_error("list search: degree cap " + std::to_string(degree_cap) +
                                     " exhausted with " + std::to_string(seed.size()) +
                                     " of " + std::to_string(count) + " bases");
        // coefficient counters run lexicographically, constant term first
        std::vector<long> c(deg + 1, -kHeight);
        c[deg] = 1;  // positive leading coefficient
        while (true) {
            IntPoly cand(std::vector<mpz_class>(c.begin(), c.end()));
            bool ok = true;
            for (const auto& b : seed) {
                mpz_class r = resultant(cand, b);
                if (r != 1 && r != -1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                seed.push_back(cand);
                if (static_cast<int>(seed.size()) == count) return seed;
            }
            int i = 0;
            while (i <= deg && c[i] == kHeight) {
                c[i] = i == deg ? 1 : -kHeight;
                ++i;
            }
            if (i > deg) break;
            ++c[i];
        }
    }
    return seed;
}

long squarefree_shift(const IntPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("squarefree_shift: degree must be >= 1");
    long bound = f.degree() / 2;
    for (long a = 0; a <= bound; ++a) {
        for (long t : {a, -a}) {
            IntPoly g = f + IntPoly::constant(t);
            if (!g.is_zero() && is_squarefree(g)) return t;
            if (a == 0) break;
        }
    }
    throw std::logic_error("squarefree_shift: no shift within floor(d/2) (impossible)");
}

}  // namespace sqf
