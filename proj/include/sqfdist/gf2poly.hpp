#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sqf {

class IntPoly;

// Bit-packed polynomial over GF(2): bit i of word i/64 is the coefficient
// of x^i. No trailing zero words; the zero polynomial has no words.
class GF2Poly {
public:
    GF2Poly() = default;
    static GF2Poly from_bits(std::uint64_t bits);
    static GF2Poly monomial(int k);
    static GF2Poly one() { return from_bits(1); }

    // hex with 0x prefix, least significant bit = constant term
    static GF2Poly from_hex(const std::string& s);
    std::string to_hex() const;

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
    int degree() const;  // -1 for zero
    bool bit(int i) const;
    int popcount() const;  // the length L2
    std::uint64_t low_bits() const { return w_.empty() ? 0 : w_[0]; }

    GF2Poly& operator^=(const GF2Poly& o);  // addition = subtraction
    friend GF2Poly operator^(GF2Poly a, const GF2Poly& b) { return a ^= b; }
    friend GF2Poly operator*(const GF2Poly& a, const GF2Poly& b);
    friend bool operator==(const GF2Poly& a, const GF2Poly& b) { return a.w_ == b.w_; }
    friend bool operator<(const GF2Poly& a, const GF2Poly& b);  // for ordered containers

    GF2Poly shifted_up(int k) const;  // multiply by x^k
    GF2Poly flipped(int i) const;     // toggle the x^i coefficient

    GF2Poly square() const;
    GF2Poly sqrt() const;  // inverse of square; rejects odd-exponent terms

    friend GF2Poly mod(GF2Poly a, const GF2Poly& b);
    friend GF2Poly divide(const GF2Poly& a, const GF2Poly& b);  // exact, rejects remainders
    friend GF2Poly gcd(GF2Poly a, GF2Poly b);

    std::uint64_t evaluate_hash() const;  // stable content hash

private:
    void trim();
    std::vector<std::uint64_t> w_;
};

// f = fe(x)^2 + x fo(x)^2: fe collects the even-index coefficients,
// fo the odd ones; over GF(2) the derivative is fo^2.
struct EvenOddPair {
    GF2Poly fe, fo;
};
EvenOddPair decompose(const GF2Poly& f);
GF2Poly recompose(const GF2Poly& fe, const GF2Poly& fo);

GF2Poly derivative(const GF2Poly& f);

// gcd(fe, fo) == 1, equivalent to the classical gcd(f, f') == 1 test.
bool is_squarefree(const GF2Poly& f);

// Standard finite-field test: x^(2^d) = x mod f and gcd(x^(2^(d/q)) - x, f) = 1
// for every prime q | d.
bool is_irreducible(const GF2Poly& f);

// Product of the distinct irreducible factors of f.
GF2Poly radical(const GF2Poly& f);

// Distinct-degree census of the radical: counts[k] = number of distinct
// irreducible factors of degree k.
struct FactorCensus {
    std::map<int, int> counts;
    int total_distinct() const;
};
FactorCensus factor_census(const GF2Poly& f);

// Coefficient-wise reduction of an integer polynomial. When the leading
// coefficient is odd the degree is preserved, and a square-free reduction
// lifts: the integer polynomial is then square-free too.
GF2Poly reduce_mod2(const IntPoly& f);

}  // namespace sqf
