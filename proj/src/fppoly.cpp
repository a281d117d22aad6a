#include "sqfdist/fppoly.hpp"

#include <stdexcept>

#include "sqfdist/poly_text.hpp"

namespace sqf {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t r = 1;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

std::int64_t mod_inverse(std::int64_t v, std::int64_t p) {
    v %= p;
    if (v < 0) v += p;
    if (v == 0) throw std::domain_error("mod_inverse of zero");
    return mod_pow(v, p - 2, p);
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

FpPoly::FpPoly(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("FpPoly: modulus must be prime");
    if (p > (1ll << 30)) throw std::invalid_argument("FpPoly: modulus too large");
}

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> raw) : FpPoly(p) {
    c_ = std::move(raw);
    normalize();
}

std::int64_t FpPoly::balance(std::int64_t v) const {
    v %= p_;
    if (v < 0) v += p_;
    if (2 * v > p_) v -= p_;  // representative in (-p/2, p/2]
    return v;
}

void FpPoly::normalize() {
    for (auto& v : c_) v = balance(v);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::from_intpoly(std::int64_t p, const IntPoly& f) {
    FpPoly r(p);
    r.c_.resize(f.coeffs().size());
    mpz_class pz(static_cast<long>(p));
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        mpz_class m = f.coeffs()[i] % pz;
        r.c_[i] = m.get_si();
    }
    r.normalize();
    return r;
}

FpPoly FpPoly::monomial(std::int64_t p, std::int64_t c, int power) {
    FpPoly r(p);
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    r.c_.assign(power + 1, 0);
    r.c_[power] = c;
    r.normalize();
    return r;
}

std::int64_t FpPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

std::int64_t FpPoly::lp_length() const {
    std::int64_t s = 0;
    for (std::int64_t v : c_) s += v < 0 ? -v : v;
    return s;
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = static_cast<std::int64_t>(i % p_) * c_[i];
    r.normalize();
    return r;
}

std::int64_t FpPoly::evaluate(std::int64_t v) const {
    std::int64_t acc = 0;
    v = balance(v);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = balance(acc * v + *it);
    return acc;
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& v : r.c_) v = -v;
    r.normalize();
    return r;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("FpPoly: modulus mismatch");
    FpPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("FpPoly: modulus mismatch");
    FpPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] = (r.c_[i + j] + a.c_[i] * b.c_[j]) % a.p_;
        }
    }
    r.normalize();
    return r;
}

FpPoly FpPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    FpPoly r(p_);
    r.c_.assign(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::uint64_t FpPoly::stable_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(p_);
    for (std::int64_t v : c_) {
        h ^= static_cast<std::uint64_t>(v + p_);
        h *= 0x100000001b3ull;
    }
    return h;
}

FpPoly mod(const FpPoly& a, const FpPoly& b) {
    if (a.p() != b.p()) throw std::invalid_argument("FpPoly: modulus mismatch");
    if (b.is_zero()) throw std::invalid_argument("mod: zero divisor");
    const std::int64_t p = a.p();
    std::vector<std::int64_t> rem(a.coeffs());
    std::int64_t inv = mod_inverse(b.coeffs().back(), p);
    int rdeg = a.degree();
    while (rdeg >= b.degree()) {
        std::int64_t top = rem[rdeg] % p;
        if (top != 0) {
            std::int64_t q = top * inv % p;
            int k = rdeg - b.degree();
            for (int i = 0; i <= b.degree(); ++i)
                rem[k + i] = (rem[k + i] - q * b.coeffs()[i]) % p;
        }
        --rdeg;
        while (rdeg >= 0 && rem[rdeg] % p == 0) --rdeg;
    }
    rem.resize(rdeg + 1);
    return FpPoly(p, std::move(rem));
}

FpPoly divide_exact_fp(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divide: zero divisor");
    const std::int64_t p = a.p();
    std::vector<std::int64_t> rem(a.coeffs());
    std::vector<std::int64_t> q(std::max(0, a.degree() - b.degree() + 1), 0);
    std::int64_t inv = mod_inverse(b.coeffs().back(), p);
    int rdeg = a.degree();
    while (rdeg >= b.degree()) {
        std::int64_t top = rem[rdeg] % p;
        if (top != 0) {
            std::int64_t qc = top * inv % p;
            int k = rdeg - b.degree();
            q[k] = qc;
            for (int i = 0; i <= b.degree(); ++i)
                rem[k + i] = (rem[k + i] - qc * b.coeffs()[i]) % p;
        }
        --rdeg;
        while (rdeg >= 0 && rem[rdeg] % p == 0) --rdeg;
    }
    for (int i = 0; i <= rdeg; ++i)
        if (rem[i] % p != 0) throw std::domain_error("divide: inexact division");
    return FpPoly(p, std::move(q));
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: both inputs zero");
    FpPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FpPoly r = mod(r0, r1);
        r0 = r1;
        r1 = r;
    }
    // make monic
    if (!r0.is_zero() && r0.coeffs().back() != 1) {
        std::int64_t inv = mod_inverse(r0.coeffs().back(), r0.p());
        std::vector<std::int64_t> c(r0.coeffs());
        for (auto& v : c) v = v * inv % r0.p();
        r0 = FpPoly(r0.p(), std::move(c));
    }
    return r0;
}

bool is_squarefree(const FpPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    if (f.degree() <= 0) return true;
    FpPoly fp = f.derivative();
    if (fp.is_zero()) return false;  // p-th power
    return gcd(f, fp).degree() == 0;
}

namespace {

// p-th root of f when f' = 0: over F_p such f is g(x^p) with g extracted by
// keeping every p-th coefficient (a^p = a in F_p).
FpPoly pth_root(const FpPoly& f) {
    const std::int64_t p = f.p();
    std::vector<std::int64_t> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return FpPoly(p, std::move(c));
}

// distinct factors of f having multiplicity >= m_mult (recursive square-free
// decomposition, char-p aware)
void collect_repeated(const FpPoly& f, int mult_scale, FpPoly& acc) {
    if (f.degree() <= 0) return;
    FpPoly fp = f.derivative();
    if (fp.is_zero()) {
        collect_repeated(pth_root(f), mult_scale * static_cast<int>(f.p()), acc);
        return;
    }
    FpPoly c = gcd(f, fp);
    FpPoly w = divide_exact_fp(f, c);
    // w = product of factors with multiplicity not divisible by p, each once
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly z = divide_exact_fp(w, y);  // factors of multiplicity exactly i
        if (z.degree() > 0 && i * mult_scale >= 2) acc = acc * z;
        w = y;
        if (!y.is_zero() && y.degree() >= 0) c = divide_exact_fp(c, y);
        ++i;
    }
    if (c.degree() > 0) collect_repeated(pth_root(c), mult_scale * static_cast<int>(f.p()), acc);
}

}  // namespace

FpPoly repeated_factor_part(const FpPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("repeated_factor_part: zero polynomial");
    FpPoly acc = FpPoly::monomial(f.p(), 1, 0);
    collect_repeated(f, 1, acc);
    return acc;
}

std::string to_string(const FpPoly& f) {
    std::vector<mpz_class> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(f.coeffs()[i]);
    return to_string(IntPoly(std::move(c)));
}

FpPoly parse_fp_poly(std::int64_t p, const std::string& text) {
    return FpPoly::from_intpoly(p, parse_int_poly(text));
}

}  // namespace sqf
