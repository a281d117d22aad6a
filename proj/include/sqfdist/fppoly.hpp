#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqfdist/intpoly.hpp"

namespace sqf {

// Polynomial over F_p in balanced form: every coefficient lies in
// (-p/2, p/2], the leading one is nonzero. p must be an odd prime or 2.
class FpPoly {
public:
    explicit FpPoly(std::int64_t p);  // zero polynomial
    FpPoly(std::int64_t p, std::vector<std::int64_t> raw);  // reduces and balances
    static FpPoly from_intpoly(std::int64_t p, const IntPoly& f);
    static FpPoly monomial(std::int64_t p, std::int64_t c, int power);

    std::int64_t p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int i) const;
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    // L_p: sum of |c_i| over the balanced representatives
    std::int64_t lp_length() const;

    FpPoly derivative() const;
    std::int64_t evaluate(std::int64_t v) const;

    FpPoly operator-() const;
    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    FpPoly shifted_up(int k) const;
    std::uint64_t stable_hash() const;

private:
    std::int64_t balance(std::int64_t v) const;
    void normalize();
    std::int64_t p_;
    std::vector<std::int64_t> c_;
};

FpPoly mod(const FpPoly& a, const FpPoly& b);
FpPoly divide_exact_fp(const FpPoly& a, const FpPoly& b);  // rejects remainders
FpPoly gcd(const FpPoly& a, const FpPoly& b);  // monic

// gcd(f, f') = 1; a vanishing derivative with deg f >= 1 means f is a p-th
// power, hence not square-free.
bool is_squarefree(const FpPoly& f);

// Product of the distinct irreducible factors of multiplicity >= 2; its
// square divides f. Constant (degree 0) exactly when f is square-free.
FpPoly repeated_factor_part(const FpPoly& f);

std::string to_string(const FpPoly& f);
FpPoly parse_fp_poly(std::int64_t p, const std::string& text);

}  // namespace sqf
