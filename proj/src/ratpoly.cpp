#include "sqfdist/ratpoly.hpp"

#include <stdexcept>

namespace sqf {

namespace {
const mpq_class kZeroQ = 0;
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) c_.emplace_back(c);
}

void RatPoly::normalize() {
    for (auto& c : c_) c.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(mpq_class c) {
    c.canonicalize();
    RatPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

RatPoly RatPoly::monomial(mpq_class c, int power) {
    c.canonicalize();
    RatPoly p;
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    if (c != 0) {
        p.c_.assign(power + 1, kZeroQ);
        p.c_[power] = std::move(c);
    }
    return p;
}

const mpq_class& RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroQ;
    return c_[i];
}

const mpq_class& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

bool RatPoly::is_integral() const {
    for (const auto& c : c_)
        if (c.get_den() != 1) return false;
    return true;
}

IntPoly RatPoly::to_intpoly() const {
    std::vector<mpz_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].get_den() != 1) throw std::domain_error("to_intpoly: non-integral coefficient");
        r[i] = c_[i].get_num();
    }
    return IntPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZeroQ);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZeroQ);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, kZeroQ);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    *this = *this * o;
    return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) {
        c *= s;
        c.canonicalize();
    }
    return *this;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: zero divisor");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<mpq_class> rem(a.coeffs());
    std::vector<mpq_class> q(a.degree() - b.degree() + 1, mpq_class(0));
    const auto& d = b.coeffs();
    int rdeg = a.degree();
    while (rdeg >= b.degree()) {
        mpq_class qc = rem[rdeg] / d.back();
        qc.canonicalize();
        int k = rdeg - b.degree();
        q[k] = qc;
        for (size_t i = 0; i < d.size(); ++i) {
            rem[k + i] -= qc * d[i];
            rem[k + i].canonicalize();
        }
        while (rdeg >= 0 && rem[rdeg] == 0) --rdeg;
    }
    rem.resize(rdeg + 1);
    return {RatPoly(std::move(q)), RatPoly(std::move(rem))};
}

RatPoly mod(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

namespace {
RatPoly make_monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    mpq_class inv = 1 / p.leading();
    RatPoly r = p;
    r *= inv;
    return r;
}
}  // namespace

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: both inputs zero");
    RatPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        RatPoly r = mod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return make_monic(r0);
}

XgcdResult xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        RatPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        mpq_class inv = 1 / r0.leading();
        r0 *= inv;
        s0 *= inv;
        t0 *= inv;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

}  // namespace sqf
