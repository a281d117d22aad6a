#pragma once

#include <stdexcept>
#include <vector>

#include "sqfdist/intpoly.hpp"
#include "sqfdist/ratpoly.hpp"

namespace sqf {

// Simultaneous congruences f = residue (mod modulus) over Q[x].
struct CongruenceSystem {
    struct Entry {
        RatPoly residue;
        IntPoly modulus;
    };
    std::vector<Entry> entries;
};

struct NonCoprimeModuli : std::invalid_argument {
    NonCoprimeModuli(size_t a, size_t b)
        : std::invalid_argument("moduli at indices " + std::to_string(a) + " and " +
                                std::to_string(b) + " are not coprime"),
          first(a),
          second(b) {}
    size_t first, second;
};

// Throws NonCoprimeModuli / invalid_argument when the system is malformed
// (deg residue >= deg modulus, zero modulus, shared factor between moduli).
void validate(const CongruenceSystem& system);

// Unique solution f over Q[x] with deg f < sum of the moduli degrees.
RatPoly crt_solve(const CongruenceSystem& system);

IntPoly moduli_product(const CongruenceSystem& system);

// Given a rational CRT solution f0 and the moduli product h whose lowest
// nonzero coefficient is a unit, determines the residue classes modulo Z
// that the coefficients of a correction f1 (deg f1 <= correction_degree)
// must lie in so that f0 + h*f1 has integer coefficients, working upward
// from the lowest power. The witness takes the representative in [0, 1)
// for every coset.
struct IntegerizeResult {
    std::vector<mpq_class> cosets;  // fractional parts in [0, 1), index = power in f1
    IntPoly witness;                // f0 + h*f1 with the minimal representatives
};
IntegerizeResult integerize(const RatPoly& f0, const IntPoly& h, int correction_degree);

}  // namespace sqf
