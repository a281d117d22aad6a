#include "sqfdist/intpoly.hpp"

#include <stdexcept>
#include <utility>

namespace sqf {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(mpz_class c, int power) {
    IntPoly p;
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    if (c != 0) {
        p.c_.assign(power + 1, kZero);
        p.c_[power] = std::move(c);
    }
    return p;
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

mpz_class IntPoly::length() const {
    mpz_class s = 0;
    for (const auto& c : c_) s += abs(c);
    return s;
}

mpz_class IntPoly::height() const {
    mpz_class h = 0;
    for (const auto& c : c_) {
        mpz_class a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = mpz_class(i) * c_[i];
    return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (c_.back() < 0) g = -g;
    std::vector<mpz_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(r));
}

mpq_class IntPoly::evaluate(const mpq_class& v) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + mpq_class(*it);
    return acc;
}

mpz_class IntPoly::evaluate(const mpz_class& v) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

IntPoly IntPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw std::invalid_argument("shifted_up: negative shift");
    std::vector<mpz_class> r(c_.size() + k, kZero);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

mpz_class length(const IntPoly& f) { return f.length(); }
mpz_class height(const IntPoly& f) { return f.height(); }
IntPoly derivative(const IntPoly& f) { return f.derivative(); }

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (num.is_zero()) return IntPoly{};
    if (num.degree() < den.degree()) return std::nullopt;
    std::vector<mpz_class> rem(num.coeffs());
    std::vector<mpz_class> q(num.degree() - den.degree() + 1, mpz_class(0));
    const auto& d = den.coeffs();
    int rdeg = num.degree();
    while (rdeg >= den.degree()) {
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem[rdeg].get_mpz_t(), d.back().get_mpz_t());
        if (r != 0) return std::nullopt;
        int k = rdeg - den.degree();
        q[k] = qc;
        for (size_t i = 0; i < d.size(); ++i) rem[k + i] -= qc * d[i];
        while (rdeg >= 0 && rem[rdeg] == 0) --rdeg;
    }
    for (int i = 0; i <= rdeg; ++i)
        if (rem[i] != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly pseudo_rem(const IntPoly& num, const IntPoly& den) {
    // lc(den)^(deg num - deg den + 1) * num = q*den + result, exactly
    if (den.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
    if (num.degree() < den.degree()) return num;
    std::vector<mpz_class> r(num.coeffs());
    const auto& d = den.coeffs();
    const mpz_class& lc = d.back();
    int rdeg = num.degree();
    int e = num.degree() - den.degree() + 1;
    while (rdeg >= den.degree()) {
        mpz_class top = r[rdeg];
        for (int i = 0; i < rdeg; ++i) r[i] *= lc;
        r[rdeg] = 0;
        int k = rdeg - den.degree();
        for (size_t i = 0; i + 1 < d.size(); ++i) r[k + i] -= top * d[i];
        --e;
        --rdeg;
        while (rdeg >= 0 && r[rdeg] == 0) --rdeg;
    }
    r.resize(rdeg + 1);
    IntPoly res(std::move(r));
    if (e > 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), e);
        res *= scale;
    }
    return res;
}

IntPoly gcd_primitive(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd_primitive: both inputs zero");
    if (f.is_zero()) return g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    IntPoly a = f.primitive_part();
    IntPoly b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return IntPoly::constant(1);
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;  // primitive with positive leading by construction
}

namespace {

// Subresultant PRS resultant in the Sylvester convention
// res_syl(a, b) = lc(a)^deg(b) * prod b(alpha) over roots alpha of a.
mpz_class resultant_sylvester(const IntPoly& fin, const IntPoly& gin) {
    IntPoly a = fin, b = gin;
    if (a.degree() == 0 && b.degree() == 0) return 1;
    int sign = 1;
    mpz_class t = 1;
    {
        mpz_class ca = a.content(), cb = b.content();
        if (a.leading() < 0) ca = -ca;
        if (b.leading() < 0) cb = -cb;
        a = a.primitive_part();
        b = b.primitive_part();
        mpz_class pa, pb;
        mpz_pow_ui(pa.get_mpz_t(), ca.get_mpz_t(), b.degree());
        mpz_pow_ui(pb.get_mpz_t(), cb.get_mpz_t(), a.degree());
        t = pa * pb;
    }
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    mpz_class g = 1, h = 1;
    while (b.degree() > 0) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) {
            mpz_class hp;
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta);
            mpz_class div = g * hp;
            std::vector<mpz_class> bc(b.coeffs());
            for (auto& c : bc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
            b = IntPoly(std::move(bc));
        }
        g = a.leading();
        if (delta >= 1) {
            mpz_class gp, hp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), delta);
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta - 1);
            mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
        }
        if (b.is_zero()) return 0;
    }
    // b is a nonzero constant now; res = sign * t * lc(b)^deg(a) / h^(deg(a)-1)
    mpz_class lbn, res;
    mpz_pow_ui(lbn.get_mpz_t(), b.leading().get_mpz_t(), a.degree());
    if (a.degree() >= 1) {
        mpz_class hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), a.degree() - 1);
        mpz_divexact(res.get_mpz_t(), lbn.get_mpz_t(), hp.get_mpz_t());
    } else {
        res = 1;  // both constants after content extraction
    }
    return sign < 0 ? mpz_class(-t * res) : mpz_class(t * res);
}

}  // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero input");
    return resultant_sylvester(g, f);
}

namespace {

// Square-free modulo p with the degree preserved implies square-free over Z:
// h^2 | f with deg h >= 1 would reduce to a repeated factor mod p. The
// converse fails, so a negative answer here decides nothing.
bool squarefree_mod_p_certificate(const IntPoly& f, long p) {
    mpz_class pz(p);
    if (mpz_divisible_p(f.leading().get_mpz_t(), pz.get_mpz_t())) return false;
    int d = f.degree();
    std::vector<long> a(d + 1);
    for (int i = 0; i <= d; ++i) {
        mpz_class r = f.coeff(i) % pz;
        a[i] = r.get_si();
        if (a[i] < 0) a[i] += p;
    }
    std::vector<long> b(d);  // derivative mod p
    for (int i = 1; i <= d; ++i) b[i - 1] = a[i] * (i % p) % p;
    auto deg_of = [](const std::vector<long>& v) {
        int k = static_cast<int>(v.size()) - 1;
        while (k >= 0 && v[k] == 0) --k;
        return k;
    };
    auto mod_pow = [p](long base, long exp) {
        long r = 1;
        while (exp) {
            if (exp & 1) r = r * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        return r;
    };
    int da = deg_of(a), db = deg_of(b);
    if (db < 0) return false;  // derivative vanished mod p
    while (db >= 0) {
        long inv = mod_pow(b[db], p - 2);
        while (da >= db) {
            long q = a[da] * inv % p;
            if (q)
                for (int i = 0; i <= db; ++i) a[da - db + i] = (a[da - db + i] - q * b[i] % p + p * p) % p;
            while (da >= 0 && a[da] == 0) --da;
        }
        std::swap(a, b);
        std::swap(da, db);
        if (db < 0) break;
    }
    return da == 0;  // gcd is a nonzero constant
}

}  // namespace

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    if (f.degree() <= 0) return true;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L})
        if (squarefree_mod_p_certificate(f, p)) return true;
    return gcd_primitive(f, f.derivative()).degree() == 0;
}

IntPoly repeated_factor_part(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("repeated_factor_part: zero polynomial");
    IntPoly p = f.primitive_part();
    if (p.degree() <= 0) return IntPoly::constant(1);
    // p = prod a_i^i with the a_i square-free and pairwise coprime;
    // g = gcd(p, p') = prod a_i^(i-1), p/g = prod a_i, and
    // gcd(g, p/g) = prod over i >= 2 of a_i.
    IntPoly g = gcd_primitive(p, p.derivative());
    if (g.degree() == 0) return IntPoly::constant(1);
    auto q = divide_exact(p, g);
    if (!q) q = divide_exact(-p, g);
    if (!q) throw std::logic_error("repeated_factor_part: inexact gcd division");
    return gcd_primitive(g, *q);
}

int root_multiplicity(const IntPoly& f, const mpq_class& r) {
    if (f.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
    mpq_class rc = r;
    rc.canonicalize();
    // q x - p is primitive, so divisibility over Q and over Z coincide
    std::vector<mpz_class> c(2);
    c[0] = -rc.get_num();
    c[1] = rc.get_den();
    IntPoly lin(std::move(c));
    int m = 0;
    IntPoly cur = f;
    while (true) {
        auto q = divide_exact(cur, lin);
        if (!q) break;
        cur = std::move(*q);
        ++m;
        if (cur.is_zero()) break;
    }
    return m;
}

}  // namespace sqf
