#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "sqfdist/intpoly.hpp"

namespace sqf {

// Dense polynomial over Q. Coefficients are kept canonical (lowest terms,
// positive denominator); trailing zeros are stripped as in IntPoly.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
    RatPoly(const IntPoly& p);

    static RatPoly constant(mpq_class c);
    static RatPoly monomial(mpq_class c, int power);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& coeff(int i) const;
    const mpq_class& leading() const;

    bool is_integral() const;  // every denominator is 1
    IntPoly to_intpoly() const;  // requires is_integral()

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const mpq_class& s);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

private:
    void normalize();
    std::vector<mpq_class> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly mod(const RatPoly& a, const RatPoly& b);

// Monic gcd over Q[x]; gcd(0, 0) is rejected.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct XgcdResult {
    RatPoly g, s, t;
};
XgcdResult xgcd(const RatPoly& a, const RatPoly& b);

}  // namespace sqf
