#pragma once

#include <optional>
#include <vector>

#include "sqfdist/congruence.hpp"
#include "sqfdist/intpoly.hpp"

namespace sqf {

// The congruence system whose integer solutions are degree-15 polynomials
// with no square-free polynomial at L-distance <= 1: f = 0 (mod x^2),
// -1 (mod (2x+1)^2), x (mod (2x-1)^2), 1 (mod (6x+1)^2), -x (mod (6x-1)^2).
CongruenceSystem turan15_system();

// The variant built from the unimodular base list
// [x, x-1, 2x-1, x^2+x-1, x^3-x^2-2x+1], which solves directly in Z[x].
CongruenceSystem referee_system();

// The canonical degree-15 hard instance (minimal coset representatives of
// the turan15 system): 15552x^15 + 5184x^14 + ... + 36x^2.
const IntPoly& turan15_polynomial();

// The degree-15 integer solution of the referee system,
// 125200x^15 - 325540x^14 - ... - 74643x^2.
const IntPoly& referee_polynomial();

// Certificate that every polynomial at L-distance <= 1 from f fails to be
// square-free: x^2 | f kills f +- x^k for k >= 2 (and f itself), and each
// unit perturbation carries a witness whose square divides it.
struct HardInstanceReport {
    struct Blocker {
        IntPoly perturbation;   // 0, +-1, +-x
        IntPoly square_witness; // deg >= 1, square divides f + perturbation
    };
    IntPoly f;
    bool verified = false;
    std::vector<Blocker> blockers;
    std::optional<IntPoly> counterexample;  // a square-free neighbor, when not verified
};

// Checks x^2 | f and that f+1, f-1, f+x, f-x are all non-square-free,
// recording witnesses. For 2 <= k <= k_cap additionally spot-checks
// f +- x^k directly.
HardInstanceReport verify_hard_instance(const IntPoly& f, int k_cap = 0);

// base + k * ((2x+1)(2x-1)(6x+1)(6x-1))^2 * x^(d-8): a degree-d hard
// instance for every nonzero k, given a verified degree-15 base built on
// the turan15 moduli. d = 15 returns the base itself.
IntPoly hard_family(int d, const mpz_class& k, const IntPoly& base);

// Remark variant on the referee moduli: base + k * ((x-1)(2x-1)(x^2+x-1)(x^3-x^2-2x+1))^2 * x^(d-14).
IntPoly hard_family_referee(int d, const mpz_class& k, const IntPoly& base);

// True when every pair of distinct bases has resultant +-1 (which makes the
// squared moduli pairwise comaximal over Z, so CRT solutions are integral).
bool pairwise_resultant_unimodular(const std::vector<IntPoly>& bases);

// Weaker validity: the squared list yields an integral CRT solution for the
// canonical residues 0, 1, -1, x, -x, ... (cycled); this is what the
// parametric k-lists satisfy even though their pairwise resultants are +-k.
bool yields_integer_crt(const std::vector<IntPoly>& bases);

// Extends `seed` (pairwise resultant +-1 required) to `count` bases, each new
// base having resultant +-1 with all previous ones. Candidates are scanned by
// increasing degree up to degree_cap, height <= 3, positive leading
// coefficient, in lexicographic coefficient order (constant term first).
// Throws when the cap is exhausted.
std::vector<IntPoly> resultant_one_list_search(std::vector<IntPoly> seed, int count,
                                               int degree_cap);

// Smallest-|t| integer with f + t square-free, positive before negative on
// ties; |t| <= floor(deg f / 2) always suffices.
long squarefree_shift(const IntPoly& f);

}  // namespace sqf
