#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sqfdist/gf2bits.hpp"
#include "sqfdist/gf2lemmas.hpp"
#include "sqfdist/gf2poly.hpp"

using namespace sqf;

TEST_CASE("arithmetic basics") {
    GF2Poly a = GF2Poly::from_bits(0b11);  // x + 1
    CHECK((a * a) == GF2Poly::from_bits(0b101));  // x^2 + 1
    CHECK(gcd(GF2Poly::from_bits(0b101), a) == a);
    CHECK(gcd(GF2Poly::from_bits(0b111), GF2Poly::from_bits(0b10)).is_one());
    CHECK_THROWS_AS(mod(a, GF2Poly{}), std::invalid_argument);

    GF2Poly big = GF2Poly::monomial(100) ^ GF2Poly::monomial(37) ^ GF2Poly::one();
    CHECK(big.degree() == 100);
    CHECK(mod(big * a, a).is_zero());
    CHECK(divide(big * a, big) == a);
    CHECK_THROWS_AS(divide(big, a), std::domain_error);  // big(1) = 1, so (x+1) does not divide
}

TEST_CASE("hex round trip") {
    CHECK(GF2Poly::from_bits(0b111).to_hex() == "0x7");
    CHECK(GF2Poly::from_hex("0x7") == GF2Poly::from_bits(0b111));
    CHECK(GF2Poly{}.to_hex() == "0x0");
    CHECK(GF2Poly::from_hex("0x0").is_zero());
    GF2Poly big = GF2Poly::monomial(81) ^ GF2Poly::monomial(64) ^ GF2Poly::one();
    CHECK(GF2Poly::from_hex(big.to_hex()) == big);
    CHECK_THROWS_AS(GF2Poly::from_hex("0xg"), std::invalid_argument);
}

TEST_CASE("square and sqrt") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        GF2Poly f = GF2Poly::from_bits(rng() & ((1ull << 40) - 1));
        CHECK(f.square().sqrt() == f);
        if (!f.is_zero()) CHECK(f.square().degree() == 2 * f.degree());
    }
    CHECK_THROWS_AS(GF2Poly::from_bits(0b10).sqrt(), std::domain_error);
}

TEST_CASE("even/odd decomposition") {
    auto [fe1, fo1] = decompose(GF2Poly::from_bits(0b100));  // x^2
    CHECK(fe1 == GF2Poly::from_bits(0b10));
    CHECK(fo1.is_zero());

    auto [fe2, fo2] = decompose(GF2Poly::from_bits(0b1111));  // x^3+x^2+x+1
    CHECK(fe2 == GF2Poly::from_bits(0b11));
    CHECK(fo2 == GF2Poly::from_bits(0b11));

    // x^6+x^5+x^4+x^3+x^2
    auto [fe3, fo3] = decompose(GF2Poly::from_bits(0b1111100));
    CHECK(fe3 == GF2Poly::from_bits(0b1110));  // x^3+x^2+x
    CHECK(fo3 == GF2Poly::from_bits(0b110));   // x^2+x

    std::mt19937_64 rng(22);
    for (int i = 0; i < 300; ++i) {
        GF2Poly f = GF2Poly::from_bits(rng());
        auto [fe, fo] = decompose(f);
        CHECK(recompose(fe, fo) == f);
        CHECK(derivative(f) == fo.square());
    }
}

TEST_CASE("decompose/recompose is the identity below degree 17") {
    for (std::uint64_t bits = 1; bits < (1ull << 17); ++bits) {
        GF2Poly f = GF2Poly::from_bits(bits);
        auto [fe, fo] = decompose(f);
        if (recompose(fe, fo) == f) continue;
        FAIL("recompose mismatch at ", bits);
    }
}

TEST_CASE("square-free test agrees with the classical gcd route, exhaustively") {
    for (std::uint64_t bits = 1; bits < (1ull << 17); ++bits) {
        GF2Poly f = GF2Poly::from_bits(bits);
        bool by_halves = is_squarefree(f);
        bool by_derivative;
        GF2Poly fp = derivative(f);
        if (fp.is_zero())
            by_derivative = f.degree() < 1;
        else
            by_derivative = gcd(f, fp).is_one();
        if (by_halves != by_derivative) FAIL("route mismatch at ", bits);
        if (by_halves != gf2bits::squarefree(bits)) FAIL("word kernel mismatch at ", bits);
    }
    CHECK(is_squarefree(GF2Poly::from_bits(0b111)));
    CHECK_FALSE(is_squarefree(GF2Poly::from_bits(0b100)));
    CHECK_FALSE(is_squarefree(GF2Poly::from_bits(0b1111100)));
}

TEST_CASE("square-free test agrees with trial division; repeated factors divide gcd(fe,fo)") {
    auto irr = oracles::gf2_irreducibles(12);
    for (std::uint64_t bits = 2; bits < (1ull << 13); ++bits) {
        GF2Poly f = GF2Poly::from_bits(bits);
        auto factors = oracles::gf2_factor(f, irr);
        bool sf = true;
        for (const auto& [p, m] : factors)
            if (m >= 2) sf = false;
        if (is_squarefree(f) != sf) FAIL("trial division mismatch at ", bits);
        if (!sf) {
            auto [fe, fo] = decompose(f);
            GF2Poly g = gcd(fe, fo);
            for (const auto& [p, m] : factors)
                if (m >= 2 && !mod(g, p).is_zero())
                    FAIL("repeated factor missing from gcd(fe,fo) at ", bits);
        }
    }
}

TEST_CASE("irreducibility matches trial division up to degree 12") {
    auto irr = oracles::gf2_irreducibles(12);
    std::set<std::uint64_t> irr_bits;
    for (const auto& p : irr) irr_bits.insert(p.low_bits());
    for (std::uint64_t bits = 2; bits < (1ull << 13); ++bits) {
        bool expected = irr_bits.count(bits) > 0;
        if (is_irreducible(GF2Poly::from_bits(bits)) != expected)
            FAIL("irreducibility mismatch at ", bits);
    }
    CHECK(is_irreducible(GF2Poly::from_bits(0b111)));
    CHECK_FALSE(is_irreducible(GF2Poly::from_bits(0b101)));
    CHECK(is_irreducible(GF2Poly::from_bits(0b11001)));  // x^4+x^3+1
}

TEST_CASE("factor census matches trial division up to degree 12") {
    auto irr = oracles::gf2_irreducibles(12);
    for (std::uint64_t bits = 2; bits < (1ull << 13); ++bits) {
        GF2Poly f = GF2Poly::from_bits(bits);
        auto factors = oracles::gf2_factor(f, irr);
        std::map<int, int> expected;
        for (const auto& [p, m] : factors) expected[p.degree()] += 1;
        FactorCensus got = factor_census(f);
        if (got.counts != expected) FAIL("census mismatch at ", bits);
    }
    CHECK(factor_census(GF2Poly::from_bits(0b110)).counts == std::map<int, int>{{1, 2}});
    GF2Poly sq = GF2Poly::from_bits(0b111).square();
    CHECK(factor_census(sq).counts == std::map<int, int>{{2, 1}});
    // x^6+x^5+x^4+x^3+x^2 = x^2 (x^4+x^3+x^2+x+1), the quartic irreducible
    CHECK(factor_census(GF2Poly::from_bits(0b1111100)).counts ==
          std::map<int, int>{{1, 1}, {4, 1}});
    CHECK(factor_census(GF2Poly::from_bits(0b1111100)).total_distinct() == 2);
}

TEST_CASE("radical strips multiplicities") {
    auto irr = oracles::gf2_irreducibles(10);
    std::mt19937_64 rng(33);
    for (int i = 0; i < 300; ++i) {
        GF2Poly f = GF2Poly::from_bits((rng() & 0x7FF) | 1);
        if (f.degree() < 1) continue;
        GF2Poly f2 = f * f * GF2Poly::from_bits((rng() & 0x3F) | 2);
        if (f2.is_zero()) continue;
        GF2Poly r = radical(f2);
        CHECK(is_squarefree(r));
        CHECK(mod(f2, r).is_zero());
        for (const auto& [p, m] : oracles::gf2_factor(f2, irr)) CHECK(mod(r, p).is_zero());
        // census degrees add up to the radical degree
        int weighted = 0;
        for (const auto& [deg, cnt] : factor_census(f2).counts) weighted += deg * cnt;
        CHECK(weighted == r.degree());
    }
}

TEST_CASE("exhaustive tail search at small degrees") {
    TailSearchReport r = squarefree_tail_search(12);
    CHECK(r.ok());
    CHECK(r.max_degree == 12);
    CHECK(r.shards_total == 11);  // degrees 2..12, one shard each below 2^16
    std::uint64_t total = 0;
    for (const auto& s : r.per_degree) {
        CHECK(s.candidates == (1ull << (s.degree - 1)));
        CHECK(s.failures == 0);
        if (s.degree >= 2) CHECK(s.max_min_n < s.degree);
        total += s.candidates;
    }
    CHECK(total == (1ull << 12) - 2);

    // direct oracle at degree 4: non-square-free f with f(0)=1 gain
    // square-freeness at some 0 < n < 4
    for (std::uint64_t m = 0; m < 8; ++m) {
        std::uint64_t f = 0b10000 | (m << 1) | 1;
        if (gf2bits::squarefree(f)) continue;
        bool found = false;
        for (int n = 1; n < 4 && !found; ++n) found = gf2bits::squarefree(f ^ (1ull << n));
        CHECK(found);
    }
}

TEST_CASE("tail search in corollary mode") {
    TailSearchReport r = squarefree_tail_search(12, {.corollary_mode = true});
    CHECK(r.ok());
    for (const auto& s : r.per_degree) {
        CHECK(s.candidates == (1ull << (s.degree - 2)));
        CHECK(s.failures == 0);
        if (s.non_squarefree > 0) CHECK(s.max_min_n > 1);  // witnesses obey 1 < n < d
    }
}

TEST_CASE("tail search is deterministic across worker counts") {
    TailSearchReport a = squarefree_tail_search(13, {.jobs = 1});
    TailSearchReport b = squarefree_tail_search(13, {.jobs = 4});
    REQUIRE(a.per_degree.size() == b.per_degree.size());
    for (size_t i = 0; i < a.per_degree.size(); ++i) {
        CHECK(a.per_degree[i].candidates == b.per_degree[i].candidates);
        CHECK(a.per_degree[i].non_squarefree == b.per_degree[i].non_squarefree);
        CHECK(a.per_degree[i].max_min_n == b.per_degree[i].max_min_n);
    }
}

TEST_CASE("checkpoint parsing") {
    {
        std::istringstream in("");
        CHECK(checkpoint_load(in).empty());
    }
    {
        std::istringstream in("0,done,0\n1,done,0\n5,done,2\n");
        auto s = checkpoint_load(in);
        CHECK(s == std::set<std::uint64_t>{0, 1, 5});
    }
    {
        std::istringstream in("0,done,0\n0,done,0\n");
        CHECK_THROWS_AS(checkpoint_load(in), CheckpointError);
    }
    {
        std::istringstream in("0,done\n");
        CHECK_THROWS_AS(checkpoint_load(in), CheckpointError);
    }
    {
        std::istringstream in("zero,done,0\n");
        CHECK_THROWS_AS(checkpoint_load(in), CheckpointError);
    }
    {
        std::istringstream in("3,running,0\n");
        CHECK_THROWS_AS(checkpoint_load(in), CheckpointError);
    }
}

TEST_CASE("checkpointed run resumes past completed shards") {
    std::string path = "checkpoint_test.tmp";
    std::remove(path.c_str());
    {
        TailSearchReport first = squarefree_tail_search(10, {.checkpoint_path = path});
        CHECK(first.ok());
        CHECK(first.shards_skipped == 0);
    }
    {
        TailSearchReport second = squarefree_tail_search(10, {.checkpoint_path = path});
        CHECK(second.ok());
        CHECK(second.shards_skipped == second.shards_total);
        CHECK(second.per_degree.empty());  // everything already done
    }
    std::remove(path.c_str());

    // partial resume: pre-seed the first three shards as done
    {
        std::ofstream seed(path);
        seed << "0,done,0\n1,done,0\n2,done,0\n";
    }
    {
        TailSearchReport rest = squarefree_tail_search(10, {.checkpoint_path = path});
        CHECK(rest.ok());
        CHECK(rest.shards_skipped == 3);
        // shards map to degrees 2..10 in order; the remaining stats cover 5..10
        CHECK(rest.per_degree.front().degree == 5);
        CHECK(rest.per_degree.back().degree == 10);
    }
    std::remove(path.c_str());
}

TEST_CASE("nearby irreducible search") {
    GF2Poly v = GF2Poly::from_bits(0b111);
    auto h = nearby_irreducible(v);
    REQUIRE(h.has_value());
    CHECK(*h == v);  // already irreducible

    GF2Poly w = GF2Poly::from_bits(0b101);  // (x+1)^2
    auto h2 = nearby_irreducible(w);
    REQUIRE(h2.has_value());
    CHECK(is_irreducible(*h2));
    CHECK(h2->degree() == 2);
    CHECK(h2->bit(0));
    CHECK((w ^ *h2).popcount() <= 3);
}

TEST_CASE("distance-3 construction, exhaustive through degree 16") {
    for (int d = 2; d <= 16; ++d) {
        for (std::uint64_t m = 0; m < (1ull << (d - 1)); ++m) {
            std::uint64_t bits = (1ull << d) | (m << 1) | 1;
            GF2Poly f = GF2Poly::from_bits(bits);
            GF2Poly g = distance3_squarefree(f);
            if (!is_squarefree(g)) FAIL("not square-free at ", bits);
            if (g.degree() != d) FAIL("degree changed at ", bits);
            if ((f ^ g).popcount() > 3) FAIL("distance above 3 at ", bits);
        }
    }
}

TEST_CASE("distance-3 construction, sampled through degree 81") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 160; ++trial) {
        int d = 17 + static_cast<int>(rng() % 65);  // degrees 17..81
        GF2Poly f = GF2Poly::monomial(d) ^ GF2Poly::one();
        for (int i = 1; i < d; ++i)
            if (rng() & 1) f = f.flipped(i);
        GF2Poly g = distance3_squarefree(f);
        CHECK(is_squarefree(g));
        CHECK(g.degree() == d);
        CHECK((f ^ g).popcount() <= 3);
    }
}

TEST_CASE("spec cases of the distance-3 construction") {
    GF2Poly f = GF2Poly::from_bits(0b10101);  // (x^2+x+1)^2, even half only
    GF2Poly g = distance3_squarefree(f);
    CHECK(g == GF2Poly::from_bits(0b10111));  // fe^2 + x
    CHECK((f ^ g).popcount() == 1);

    GF2Poly f2 = GF2Poly::from_bits(0b101);  // x^2 + 1
    CHECK(distance3_squarefree(f2) == GF2Poly::from_bits(0b111));
}

TEST_CASE("distance-1 conditions and construction") {
    // fo = 0, fe = x^2+x+1: f = fe^2 = x^4+x^2+1 but degree 4 < 9 is refused
    CHECK_FALSE(distance1_squarefree(GF2Poly::from_bits(0b10101)).has_value());

    std::mt19937_64 rng(55);
    int built = 0, refused = 0, fallback_hits = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        int d = 9 + static_cast<int>(rng() % 8);  // degrees 9..16
        GF2Poly f = GF2Poly::monomial(d);
        for (int i = 0; i < d; ++i)
            if (rng() & 1) f = f.flipped(i);
        auto cond = distance1_conditions(f);
        auto g = distance1_squarefree(f);
        if (!cond.any()) {
            ++refused;
            CHECK_FALSE(g.has_value());
            continue;
        }
        // when a condition holds, a distance-1 square-free neighbor exists
        REQUIRE(g.has_value());
        ++built;
        CHECK(is_squarefree(*g));
        CHECK(g->degree() == d);
        CHECK((f ^ *g).popcount() <= 1);
        if ((f ^ *g).popcount() == 1 && !is_squarefree(f)) ++fallback_hits;
    }
    CHECK(built > 500);  // the conditions hold on a healthy share of inputs
    CHECK(refused > 100);
    CHECK(fallback_hits > 0);
}

TEST_CASE("mod-2 reduction lifts square-freeness to Z") {
    using sqf::IntPoly;
    CHECK(reduce_mod2(IntPoly{1, 2, 3}) == GF2Poly::from_bits(0b101));
    CHECK(reduce_mod2(IntPoly{-3, 4}) == GF2Poly::from_bits(0b1));

    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 400; ++trial) {
        int d = 1 + static_cast<int>(rng() % 8);
        std::vector<mpz_class> c(d + 1);
        for (int i = 0; i <= d; ++i) c[i] = static_cast<long>(rng() % 19) - 9;
        if (mpz_even_p(c[d].get_mpz_t())) c[d] += 1;  // odd leading coefficient
        if (c[d] == 0) c[d] = 1;
        IntPoly f{std::move(c)};
        GF2Poly r = reduce_mod2(f);
        CHECK(r.degree() == f.degree());
        if (is_squarefree(r)) CHECK(is_squarefree(f));
    }
}

TEST_CASE("distance-1 failure reporting") {
    // fe divisible by x+1 and fo with many distinct factors
    GF2Poly fe = GF2Poly::from_bits(0b11);
    GF2Poly fo = GF2Poly::from_bits(0b10) * GF2Poly::from_bits(0b11) *
                 GF2Poly::from_bits(0b111) * GF2Poly::from_bits(0b1011) *
                 GF2Poly::from_bits(0b1101) * GF2Poly::from_bits(0b10011);
    GF2Poly f = recompose(fe, fo);
    REQUIRE(f.degree() >= 9);
    auto cond = distance1_conditions(f);
    CHECK_FALSE(cond.any());
    CHECK_FALSE(cond.failure.empty());
    CHECK_FALSE(distance1_squarefree(f).has_value());
}
