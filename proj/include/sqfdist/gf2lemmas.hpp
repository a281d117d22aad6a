#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfdist/gf2poly.hpp"

namespace sqf {

// ---- exhaustive tail search over GF(2) -------------------------------------
//
// For every non-square-free f with f(0) = 1 and deg f = d <= max_degree,
// find n with 0 < n < d such that x^n + f is square-free. Candidates are
// enumerated as integer counters over the free middle bits (constant and
// leading bits fixed to 1), split into shards of at most 2^16 counters.
// The shard list is a deterministic function of max_degree alone and is
// prefix-stable: a checkpoint written at a smaller max_degree remains valid
// for a larger one.
//
// Corollary mode instead enumerates f with x | f, x^2 not dividing f and
// deg f <= max_degree + 1, searching 1 < n < deg f.

struct TailSearchDegreeStats {
    int degree = 0;
    std::uint64_t candidates = 0;
    std::uint64_t non_squarefree = 0;
    std::uint64_t failures = 0;
    int max_min_n = 0;  // largest minimal witnessing n over the degree
};

struct TailSearchReport {
    int max_degree = 0;
    bool corollary_mode = false;
    std::vector<TailSearchDegreeStats> per_degree;
    std::uint64_t shards_total = 0;
    std::uint64_t shards_skipped = 0;  // completed in a previous run
    std::optional<GF2Poly> counterexample;
    bool ok() const { return !counterexample.has_value(); }
};

struct TailSearchOptions {
    int jobs = 0;                 // 0: resolve from environment/hardware
    std::string checkpoint_path;  // empty: no checkpointing
    bool corollary_mode = false;
};

TailSearchReport squarefree_tail_search(int max_degree, const TailSearchOptions& opts = {});

// Checkpoint files are append-only text, one "shard_index,done,failures"
// line per completed shard. Corrupt or duplicate lines are errors.
struct CheckpointError : std::runtime_error {
    CheckpointError(const std::string& msg, std::uint64_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    std::uint64_t line;
};
std::set<std::uint64_t> checkpoint_load(std::istream& in);

// ---- constructive square-free approximations -------------------------------

// Square-free g with deg g = deg f and L2(f - g) <= 3, for f(0) = 1 and
// deg f >= 2. Follows the even/odd case split; relies on an irreducible
// within bit-distance 3 of a half (guaranteed for half degrees <= 40, i.e.
// deg f <= 81). Throws when the nearby-irreducible search fails.
GF2Poly distance3_squarefree(const GF2Poly& f);

// Irreducible h with deg h = deg v, h(0) = 1, and L2(v - h) <= max_flips,
// scanning flips of the interior bits in increasing count. v(0) must be 1.
std::optional<GF2Poly> nearby_irreducible(const GF2Poly& v, int max_flips = 3);

// Conditions of the distance-1 construction: one half avoids the factors
// x, x+1, x^2+x+1 while the other half has at most 5 distinct irreducible
// factors.
struct Distance1Conditions {
    bool even_clean_odd_small = false;  // fe avoids the three factors, fo has <= 5 factors
    bool odd_clean_even_small = false;  // the symmetric condition
    std::string failure;                // which clause failed, when neither holds
    bool any() const { return even_clean_odd_small || odd_clean_even_small; }
};
Distance1Conditions distance1_conditions(const GF2Poly& f);

// Square-free g with deg g = deg f and L2(f - g) <= 1, for deg f >= 9 when
// one of the two conditions holds; nullopt otherwise.
std::optional<GF2Poly> distance1_squarefree(const GF2Poly& f);

}  // namespace sqf
