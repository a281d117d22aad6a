#include "sqfdist/gf2lemmas.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "sqfdist/gf2bits.hpp"
#include "sqfdist/parallel.hpp"

namespace sqf {

namespace {

constexpr int kShardBits = 16;  // counters per shard

struct ShardSpec {
    int degree;                // degree of the enumerated f
    std::uint64_t first;       // first middle-bits counter
    std::uint64_t count;       // counters in this shard
};

// Deterministic shard list: depends only on max_degree and the mode, never
// on the worker count, so checkpoints stay valid across runs.
std::vector<ShardSpec> build_shards(int max_degree, bool corollary_mode) {
    std::vector<ShardSpec> shards;
    int lo = corollary_mode ? 3 : 2;
    int hi = corollary_mode ? max_degree + 1 : max_degree;
    for (int d = lo; d <= hi; ++d) {
        int free_bits = corollary_mode ? d - 2 : d - 1;
        std::uint64_t space = 1ull << free_bits;
        for (std::uint64_t start = 0; start < space; start += (1ull << kShardBits))
            shards.push_back({d, start, std::min<std::uint64_t>(1ull << kShardBits, space - start)});
    }
    return shards;
}

struct ShardResult {
    TailSearchDegreeStats stats;
    std::optional<std::uint64_t> counterexample;  // the failing f, as bits
};

// Candidates: normal mode fixes bits 0 and d, middle bits 1..d-1 run through
// the counter; corollary mode fixes bit 1 and bit d with bit 0 clear, middle
// bits 2..d-1 run through the counter.
ShardResult run_shard(const ShardSpec& s, bool corollary_mode) {
    ShardResult res;
    res.stats.degree = s.degree;
    const int d = s.degree;
    const std::uint64_t top = 1ull << d;
    const int n_lo = corollary_mode ? 2 : 1;
    for (std::uint64_t m = s.first; m < s.first + s.count; ++m) {
        std::uint64_t f = corollary_mode ? (top | (m << 2) | 2ull) : (top | (m << 1) | 1ull);
        ++res.stats.candidates;
        if (gf2bits::squarefree(f)) continue;
        ++res.stats.non_squarefree;
        int found_n = 0;
        for (int n = n_lo; n < d; ++n) {
            if (gf2bits::squarefree(f ^ (1ull << n))) {
                found_n = n;
                break;
            }
        }
        if (found_n == 0) {
            ++res.stats.failures;
            if (!res.counterexample) res.counterexample = f;
        } else {
            res.stats.max_min_n = std::max(res.stats.max_min_n, found_n);
        }
    }
    return res;
}

}  // namespace

std::set<std::uint64_t> checkpoint_load(std::istream& in) {
    std::set<std::uint64_t> done;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string idx, status, failures;
        if (!std::getline(ss, idx, ',') || !std::getline(ss, status, ',') ||
            !std::getline(ss, failures))
            throw CheckpointError("malformed checkpoint line", lineno);
        std::uint64_t index = 0;
        try {
            size_t pos = 0;
            index = std::stoull(idx, &pos);
            if (pos != idx.size()) throw std::invalid_argument("");
            pos = 0;
            (void)std::stoull(failures, &pos);
            if (pos != failures.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw CheckpointError("malformed checkpoint line", lineno);
        }
        if (status != "done") throw CheckpointError("unknown shard status '" + status + "'", lineno);
        if (!done.insert(index).second)
            throw CheckpointError("duplicate shard " + std::to_string(index), lineno);
    }
    return done;
}

TailSearchReport squarefree_tail_search(int max_degree, const TailSearchOptions& opts) {
    if (max_degree < 2 || max_degree > 36)
        throw std::invalid_argument("tail search: max_degree must be in [2, 36]");
    TailSearchReport report;
    report.max_degree = max_degree;
    report.corollary_mode = opts.corollary_mode;

    std::vector<ShardSpec> shards = build_shards(max_degree, opts.corollary_mode);
    report.shards_total = shards.size();

    std::set<std::uint64_t> done;
    std::unique_ptr<std::ofstream> writer;
    std::mutex writer_mutex;
    if (!opts.checkpoint_path.empty()) {
        std::ifstream in(opts.checkpoint_path);
        if (in.good()) done = checkpoint_load(in);
        writer = std::make_unique<std::ofstream>(opts.checkpoint_path, std::ios::app);
        if (!writer->good())
            throw std::runtime_error("cannot open checkpoint file " + opts.checkpoint_path);
    }

    std::vector<ShardResult> results(shards.size());
    run_sharded(shards.size(), opts.jobs, [&](std::uint64_t i) {
        if (done.count(i)) return;
        results[i] = run_shard(shards[i], opts.corollary_mode);
        if (writer) {
            std::lock_guard<std::mutex> lock(writer_mutex);
            *writer << i << ",done," << results[i].stats.failures << '\n';
            writer->flush();
        }
    });

    std::map<int, TailSearchDegreeStats> by_degree;
    for (std::uint64_t i = 0; i < shards.size(); ++i) {
        if (done.count(i)) {
            ++report.shards_skipped;
            continue;
        }
        const ShardResult& r = results[i];
        TailSearchDegreeStats& agg = by_degree[shards[i].degree];
        agg.degree = shards[i].degree;
        agg.candidates += r.stats.candidates;
        agg.non_squarefree += r.stats.non_squarefree;
        agg.failures += r.stats.failures;
        agg.max_min_n = std::max(agg.max_min_n, r.stats.max_min_n);
        if (r.counterexample && !report.counterexample)
            report.counterexample = GF2Poly::from_bits(*r.counterexample);
    }
    for (auto& [d, stats] : by_degree) report.per_degree.push_back(stats);
    return report;
}

std::optional<GF2Poly> nearby_irreducible(const GF2Poly& v, int max_flips) {
    if (!v.bit(0)) throw std::invalid_argument("nearby_irreducible: constant term must be 1");
    const int m = v.degree();
    if (m < 1) return std::nullopt;
    if (is_irreducible(v)) return v;
    for (int flips = 1; flips <= max_flips; ++flips) {
        // interior positions 1..m-1 keep the degree and the constant term
        std::vector<int> idx(flips);
        for (int i = 0; i < flips; ++i) idx[i] = i + 1;
        if (!idx.empty() && idx.back() > m - 1) continue;
        while (true) {
            GF2Poly cand = v;
            for (int i : idx) cand = cand.flipped(i);
            if (is_irreducible(cand)) return cand;
            int j = flips - 1;
            while (j >= 0 && idx[j] == m - 1 - (flips - 1 - j)) --j;
            if (j < 0) break;
            ++idx[j];
            for (int t = j + 1; t < flips; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    return std::nullopt;
}

GF2Poly distance3_squarefree(const GF2Poly& f) {
    if (!f.bit(0)) throw std::invalid_argument("distance3_squarefree: f(0) must be 1");
    if (f.degree() < 2) throw std::invalid_argument("distance3_squarefree: degree must be >= 2");
    GF2Poly g;
    if (is_squarefree(f)) {
        g = f;
    } else {
        auto [fe, fo] = decompose(f);
        if (fo.is_zero()) {
            g = fe.square() ^ GF2Poly::monomial(1);
        } else {
            int k = 0;
            while (!fo.bit(k)) ++k;
            GF2Poly f1 = divide(fo, GF2Poly::monomial(k));
            auto replace_even = [&]() -> GF2Poly {
                auto h = nearby_irreducible(fe);
                if (!h) throw std::runtime_error("distance3_squarefree: no irreducible within 3 of the even half");
                return recompose(*h, fo);
            };
            if (fe.degree() > f1.degree()) {
                g = replace_even();
            } else if (f1.degree() > fe.degree()) {
                auto h = nearby_irreducible(f1);
                if (!h) throw std::runtime_error("distance3_squarefree: no irreducible within 3 of the odd half");
                g = recompose(fe, h->shifted_up(k));
            } else if (!is_irreducible(f1)) {
                g = replace_even();
            } else {
                // f not square-free with f1 irreducible forces fe = f1; fe + x
                // is then coprime to fo, so flipping the x^2 bit suffices.
                g = f.flipped(2);
            }
        }
    }
    if (!is_squarefree(g) || g.degree() != f.degree() || (f ^ g).popcount() > 3)
        throw std::logic_error("distance3_squarefree: construction postcondition failed");
    return g;
}

namespace {

bool avoids_small_factors(const GF2Poly& v) {
    if (v.is_zero() || !v.bit(0)) return false;        // x | v
    if (v.popcount() % 2 == 0) return false;           // (x+1) | v
    return !mod(v, GF2Poly::from_bits(0b111)).is_zero();  // (x^2+x+1) | v
}

}  // namespace

Distance1Conditions distance1_conditions(const GF2Poly& f) {
    Distance1Conditions c;
    auto [fe, fo] = decompose(f);
    bool fe_clean = avoids_small_factors(fe);
    bool fo_clean = avoids_small_factors(fo);
    bool fo_small = fo.is_zero() || factor_census(fo).total_distinct() <= 5;
    bool fe_small = !fe.is_zero() && factor_census(fe).total_distinct() <= 5;
    c.even_clean_odd_small = fe_clean && fo_small;
    c.odd_clean_even_small = fo_clean && fe_small;
    if (!c.any()) {
        if (!fe_clean && !fo_clean)
            c.failure = "both halves divisible by one of x, x+1, x^2+x+1";
        else if (fe_clean)
            c.failure = "odd half has more than 5 distinct irreducible factors";
        else
            c.failure = fe.is_zero() ? "even half is zero"
                                     : "even half has more than 5 distinct irreducible factors";
    }
    return c;
}

std::optional<GF2Poly> distance1_squarefree(const GF2Poly& f) {
    if (f.degree() < 9) return std::nullopt;
    Distance1Conditions cond = distance1_conditions(f);
    if (!cond.any()) return std::nullopt;
    auto [fe, fo] = decompose(f);
    const int d = f.degree();
    const GF2Poly shifts[] = {GF2Poly{},          GF2Poly::from_bits(1), GF2Poly::monomial(1),
                              GF2Poly::monomial(2), GF2Poly::monomial(3), GF2Poly::monomial(4)};
    if (cond.even_clean_odd_small) {
        if (fo.is_zero()) return fe.square() ^ GF2Poly::monomial(1);
        for (const auto& h : shifts) {
            GF2Poly cand = fe ^ h;
            if (gcd(fo, cand).is_one()) {
                GF2Poly g = recompose(cand, fo);
                if (g.degree() == d) return g;
            }
        }
    }
    if (cond.odd_clean_even_small) {
        for (const auto& h : shifts) {
            GF2Poly cand = fo ^ h;
            if (gcd(fe, cand).is_one()) {
                GF2Poly g = recompose(fe, cand);
                if (g.degree() == d) return g;  // skip shifts that would change the degree
            }
        }
    }
    // The shift recipe can be starved: a factor of the untouched half from
    // {x, x+1, x^2+x+1} may block several shifted candidates at once. Fall
    // back to the full distance-1 ball, which settles existence exactly.
    if (is_squarefree(f)) return f;
    for (int i = 0; i < d; ++i) {
        GF2Poly g = f.flipped(i);
        if (g.degree() == d && is_squarefree(g)) return g;
    }
    return std::nullopt;
}

}  // namespace sqf
