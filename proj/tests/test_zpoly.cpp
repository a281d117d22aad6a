#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "sqfdist/intpoly.hpp"
#include "sqfdist/poly_text.hpp"
#include "sqfdist/ratpoly.hpp"
#include "sqfdist/turan.hpp"

using namespace sqf;

TEST_CASE("length and height") {
    CHECK(IntPoly{0, 0, 0, 1}.length() == 1);  // x^3
    CHECK(IntPoly{}.length() == 0);
    CHECK(IntPoly{0, 0, 0, 1}.height() == 1);
    CHECK(IntPoly{0, -3, 2}.height() == 3);  // 2x^2 - 3x

    const IntPoly& f = turan15_polynomial();
    mpz_class sum = 0;
    for (const auto& c : f.coeffs()) sum += abs(c);
    CHECK(f.length() == sum);
    CHECK(f.height() == 96413);
}

TEST_CASE("derivative") {
    CHECK(IntPoly{0, 0, 0, 1}.derivative() == IntPoly{0, 0, 3});
    CHECK(IntPoly{5}.derivative().is_zero());
    IntPoly f{0, 2, 0, 0, 1};  // x^4 + 2x
    CHECK(f.derivative() == IntPoly{2, 0, 0, 4});
    CHECK(f.derivative().length() == 6);
}

TEST_CASE("primitive gcd") {
    CHECK(gcd_primitive(IntPoly{0, 0, 1}, IntPoly{0, 0, 0, 1}) == IntPoly{0, 0, 1});
    CHECK(gcd_primitive(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == IntPoly{-1, 1});
    CHECK_THROWS_AS(gcd_primitive(IntPoly{}, IntPoly{}), std::invalid_argument);

    const IntPoly& f = turan15_polynomial();
    IntPoly g = gcd_primitive(f, f.derivative());
    CHECK(g.degree() >= 1);
    CHECK(g.coeff(0) == 0);  // x divides the gcd: 0 is a double root of f
}

TEST_CASE("square-free over Z") {
    CHECK_FALSE(is_squarefree(IntPoly{0, 0, 0, 1}));  // x^3
    CHECK(is_squarefree(IntPoly{0, 1, 1}));           // x^2 + x
    CHECK(is_squarefree(IntPoly{0, 4}));              // content squares do not count
    CHECK(is_squarefree(IntPoly{7}));                 // nonzero constants
    CHECK_THROWS_AS(is_squarefree(IntPoly{}), std::invalid_argument);

    const IntPoly& f = turan15_polynomial();
    CHECK_FALSE(is_squarefree(f));
    CHECK_FALSE(is_squarefree(f - IntPoly{0, 1}));
}

TEST_CASE("root multiplicity") {
    CHECK(root_multiplicity(IntPoly{0, 0, 0, 1}, 0) == 3);
    CHECK(root_multiplicity(IntPoly{1, 1}, mpq_class(1, 2)) == 0);

    const IntPoly& f = turan15_polynomial();
    CHECK(root_multiplicity(f, 0) == 2);
    CHECK(root_multiplicity(f - IntPoly{0, 1}, mpq_class(1, 2)) >= 2);
    CHECK(root_multiplicity(f + IntPoly{1}, mpq_class(-1, 2)) >= 2);
    CHECK(root_multiplicity(f + IntPoly{0, 1}, mpq_class(1, 6)) >= 2);
    CHECK(root_multiplicity(f - IntPoly{1}, mpq_class(-1, 6)) >= 2);
}

TEST_CASE("resultant fixed values") {
    CHECK(resultant(IntPoly{0, 1}, IntPoly{-1, 1}) == 1);  // f(1) with f = x
    IntPoly a = IntPoly{-1, 1} * IntPoly{-1, 1};
    IntPoly b = IntPoly{-1, 2} * IntPoly{-1, 2};
    CHECK(resultant(a, b) == 1);
    CHECK(resultant(IntPoly{0, 0, 1}, IntPoly{0, 0, 1}) == 0);
    CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1}), std::invalid_argument);
}

TEST_CASE("resultant matches the Sylvester determinant") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 300; ++i) {
        IntPoly f = oracles::random_intpoly(rng, 6, 5);
        IntPoly g = oracles::random_intpoly(rng, 6, 5);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(resultant(f, g) == oracles::sylvester_resultant(f, g));
    }
}

TEST_CASE("three square-free routes agree") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 2000; ++i) {
        IntPoly f = oracles::random_intpoly(rng, 10, 20);
        if (f.is_zero() || f.degree() < 1) continue;
        bool by_gcd = gcd_primitive(f, f.derivative()).degree() == 0;
        bool by_resultant = resultant(f, f.derivative()) != 0;
        CHECK(is_squarefree(f) == by_gcd);
        CHECK(by_gcd == by_resultant);
    }
}

TEST_CASE("square-free detection survives bad reductions at every small prime") {
    // product of (x - i) for i = 0..23: square-free over Z, yet it has a
    // repeated root modulo every prime up to 23 (two roots collide mod p
    // whenever p <= 23), so only the exact route can decide
    IntPoly f{1};
    for (long i = 0; i <= 23; ++i) f *= IntPoly{-i, 1};
    CHECK(f.degree() == 24);
    CHECK(is_squarefree(f));
    CHECK(resultant(f, f.derivative()) != 0);
    IntPoly g = f * IntPoly{-5, 1};  // square the x - 5 factor
    CHECK_FALSE(is_squarefree(g));
    CHECK(root_multiplicity(g, 5) == 2);
}

TEST_CASE("gcd divides both inputs") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 500; ++i) {
        IntPoly f = oracles::random_intpoly(rng, 8, 10);
        IntPoly g = oracles::random_intpoly(rng, 8, 10);
        if (f.is_zero() || g.is_zero()) continue;
        IntPoly d = gcd_primitive(f, g);
        CHECK(divide_exact(f.primitive_part(), d).has_value());
        CHECK(divide_exact(g.primitive_part(), d).has_value());
    }
}

TEST_CASE("derivative length bound") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        IntPoly f = oracles::random_intpoly(rng, 9, 15);
        if (f.degree() < 1) continue;
        mpz_class d(f.degree());
        mpz_class lhs = f.derivative().length();
        CHECK(lhs <= d * f.length());
        CHECK(lhs <= d * (d + 1) / 2 * f.height());
    }
}

TEST_CASE("root multiplicity is additive under linear factors") {
    std::mt19937_64 rng(2025);
    for (int i = 0; i < 200; ++i) {
        IntPoly f = oracles::random_intpoly(rng, 5, 8);
        if (f.is_zero()) continue;
        std::uniform_int_distribution<long> pd(-3, 3);
        std::uniform_int_distribution<long> qd(1, 3);
        long p = pd(rng), q = qd(rng);
        mpz_class gg = gcd(mpz_class(p), mpz_class(q));
        p /= gg.get_si();
        q /= gg.get_si();
        mpq_class r(p, q);
        r.canonicalize();
        int before = root_multiplicity(f, r);
        IntPoly lin{-p, q};
        int k = 1 + static_cast<int>(rng() % 2);
        IntPoly g = f;
        for (int j = 0; j < k; ++j) g *= lin;
        CHECK(root_multiplicity(g, r) == before + k);
    }
}

TEST_CASE("repeated factor part is a square divisor") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 300; ++i) {
        IntPoly f = oracles::random_intpoly(rng, 4, 4);
        IntPoly g = oracles::random_intpoly(rng, 3, 4);
        if (f.is_zero() || g.is_zero()) continue;
        IntPoly prod = f * g * g;
        IntPoly w = repeated_factor_part(prod);
        CHECK(divide_exact(prod.primitive_part(), w * w).has_value());
        if (g.degree() >= 1) CHECK(w.degree() >= 1);
        if (is_squarefree(prod)) CHECK(w.degree() == 0);
    }
}

TEST_CASE("polynomial text round trip") {
    IntPoly f = parse_int_poly("15552*x^15 + 5184*x^14 - 1");
    CHECK(f.coeff(15) == 15552);
    CHECK(f.coeff(14) == 5184);
    CHECK(f.coeff(0) == -1);
    CHECK(to_string(f) == "15552*x^15 + 5184*x^14 - 1");

    CHECK(parse_int_poly("x") == IntPoly{0, 1});
    CHECK(parse_int_poly("-x^2 + x^2") == IntPoly{});
    CHECK(parse_int_poly("3 + x + 2*x") == IntPoly{3, 3});  // repeated powers sum
    CHECK(parse_int_poly("x^2+ 1 -2*x") == IntPoly{1, -2, 1});
    CHECK(to_string(IntPoly{}) == "0");
    CHECK(to_string(IntPoly{-1, 0, 1}) == "x^2 - 1");

    RatPoly q = parse_rat_poly("61/64*x^2 - 1/4");
    CHECK(q.coeff(2) == mpq_class(61, 64));
    CHECK(q.coeff(0) == mpq_class(-1, 4));
    CHECK(to_string(q) == "61/64*x^2 - 1/4");

    CHECK(parse_int_poly("3x") == IntPoly{0, 3});  // '*' is optional
    CHECK_THROWS_AS(parse_int_poly("1/2*x"), PolyParseError);
    CHECK_THROWS_AS(parse_int_poly("x +"), PolyParseError);
    CHECK_THROWS_AS(parse_int_poly("x ^"), PolyParseError);
    CHECK_THROWS_AS(parse_int_poly(""), PolyParseError);
    CHECK_THROWS_AS(parse_int_poly("y"), PolyParseError);
}

TEST_CASE("rational euclid") {
    RatPoly a(IntPoly{-1, 0, 1});  // x^2 - 1
    RatPoly b(IntPoly{-1, 1});     // x - 1
    auto [q, r] = divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == RatPoly(IntPoly{1, 1}));
    CHECK(gcd(a, b) == RatPoly(IntPoly{-1, 1}));

    auto res = xgcd(RatPoly(IntPoly{0, 1}), RatPoly(IntPoly{-1, 1}));
    CHECK(res.g == RatPoly(IntPoly{1}));
    CHECK(res.s * RatPoly(IntPoly{0, 1}) + res.t * RatPoly(IntPoly{-1, 1}) == res.g);
}

TEST_CASE("divide_exact") {
    IntPoly f{-1, 0, 1};
    auto q = divide_exact(f, IntPoly{-1, 1});
    REQUIRE(q.has_value());
    CHECK(*q == IntPoly{1, 1});
    CHECK_FALSE(divide_exact(IntPoly{1, 1}, IntPoly{0, 2}).has_value());
    CHECK_FALSE(divide_exact(IntPoly{1, 0, 1}, IntPoly{1, 1}).has_value());
}

TEST_CASE("evaluation") {
    IntPoly f{1, 2, 3};  // 3x^2 + 2x + 1
    CHECK(f.evaluate(mpz_class(2)) == 17);
    CHECK(f.evaluate(mpq_class(1, 2)) == mpq_class(11, 4));
}
