#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace sqf {

// Dense polynomial over Z with arbitrary-precision coefficients.
// coeffs()[i] is the coefficient of x^i; the vector never ends in a zero,
// and the zero polynomial is the empty vector (degree() == -1).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(mpz_class c);
    static IntPoly monomial(mpz_class c, int power);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    // coefficient of x^i, zero outside the stored range
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;

    mpz_class length() const;   // sum of |coefficients|
    mpz_class height() const;   // max |coefficient|
    IntPoly derivative() const;
    mpz_class content() const;  // gcd of coefficients, >= 0; 0 only for the zero polynomial
    IntPoly primitive_part() const;  // content 1, positive leading coefficient

    mpq_class evaluate(const mpq_class& v) const;
    mpz_class evaluate(const mpz_class& v) const;

    IntPoly shifted_up(int k) const;  // multiply by x^k

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const mpz_class& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
    friend IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpz_class> c_;
};

mpz_class length(const IntPoly& f);
mpz_class height(const IntPoly& f);
IntPoly derivative(const IntPoly& f);

// Exact quotient in Z[x], or nullopt when den does not divide num there.
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);

// Pseudo-remainder: lc(den)^(deg num - deg den + 1) * num = q*den + r.
IntPoly pseudo_rem(const IntPoly& num, const IntPoly& den);

// Primitive gcd (content 1, positive leading coefficient) of the primitive
// parts of f and g, via the primitive pseudo-remainder sequence.
// Rejects the case f = g = 0.
IntPoly gcd_primitive(const IntPoly& f, const IntPoly& g);

// res(f, g) = lc(g)^deg(f) * prod f(beta) over the roots beta of g,
// computed with the subresultant PRS. Both inputs must be nonzero.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// No h in Z[x] with deg h >= 1 has h^2 dividing f. Content squares are
// irrelevant: 4x counts as square-free. Nonzero constants are square-free;
// the zero polynomial is rejected.
bool is_squarefree(const IntPoly& f);

// Product of the distinct irreducible factors of f that occur with
// multiplicity >= 2 (primitive, positive leading). Its square divides f,
// and it is constant exactly when f is square-free.
IntPoly repeated_factor_part(const IntPoly& f);

// Largest m with (qx - p)^m | f, for r = p/q in lowest terms.
int root_multiplicity(const IntPoly& f, const mpq_class& r);

}  // namespace sqf
