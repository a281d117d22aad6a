#include "sqfdist/gf2poly.hpp"

#include "sqfdist/intpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#if defined(SQFDIST_USE_CLMUL) && defined(__PCLMUL__)
#include <immintrin.h>
#endif

namespace sqf {

namespace {

std::uint64_t compress_even_bits(std::uint64_t v) {
    v &= 0x5555555555555555ull;
    v = (v | (v >> 1)) & 0x3333333333333333ull;
    v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v >> 4)) & 0x00FF00FF00FF00FFull;
    v = (v | (v >> 8)) & 0x0000FFFF0000FFFFull;
    v = (v | (v >> 16)) & 0x00000000FFFFFFFFull;
    return v;
}

std::uint64_t spread_bits(std::uint64_t v) {  // inverse of compress on the low 32 bits
    v &= 0x00000000FFFFFFFFull;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v << 2)) & 0x3333333333333333ull;
    v = (v | (v << 1)) & 0x5555555555555555ull;
    return v;
}

}  // namespace

void GF2Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

GF2Poly GF2Poly::from_bits(std::uint64_t bits) {
    GF2Poly p;
    if (bits) p.w_.push_back(bits);
    return p;
}

GF2Poly GF2Poly::monomial(int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative power");
    GF2Poly p;
    p.w_.assign(k / 64 + 1, 0);
    p.w_.back() = 1ull << (k % 64);
    return p;
}

GF2Poly GF2Poly::from_hex(const std::string& s) {
    size_t start = s.rfind("0x", 0) == 0 ? 2 : 0;
    if (start >= s.size()) throw std::invalid_argument("from_hex: empty hex string");
    GF2Poly p;
    for (size_t i = s.size(); i > start; --i) {
        char ch = s[i - 1];
        int nib;
        if (ch >= '0' && ch <= '9') nib = ch - '0';
        else if (ch >= 'a' && ch <= 'f') nib = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') nib = ch - 'A' + 10;
        else throw std::invalid_argument("from_hex: bad hex digit");
        size_t bitpos = (s.size() - i) * 4;
        size_t word = bitpos / 64, off = bitpos % 64;
        if (word >= p.w_.size()) p.w_.resize(word + 1, 0);
        p.w_[word] |= static_cast<std::uint64_t>(nib) << off;
    }
    p.trim();
    return p;
}

std::string GF2Poly::to_hex() const {
    if (w_.empty()) return "0x0";
    static const char digits[] = "0123456789abcdef";
    std::string out;
    for (size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t v = w_[i];
        for (int nib = 0; nib < 16; ++nib) out.push_back(digits[(v >> (4 * nib)) & 0xF]);
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    out += "x0";
    std::reverse(out.begin(), out.end());
    return out;
}

int GF2Poly::degree() const {
    if (w_.empty()) return -1;
    return static_cast<int>(w_.size()) * 64 - 1 - std::countl_zero(w_.back());
}

bool GF2Poly::bit(int i) const {
    if (i < 0) return false;
    size_t word = static_cast<size_t>(i) / 64;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i % 64)) & 1;
}

int GF2Poly::popcount() const {
    int c = 0;
    for (std::uint64_t v : w_) c += std::popcount(v);
    return c;
}

GF2Poly& GF2Poly::operator^=(const GF2Poly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
}

bool operator<(const GF2Poly& a, const GF2Poly& b) {
    if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size();
    for (size_t i = a.w_.size(); i > 0; --i)
        if (a.w_[i - 1] != b.w_[i - 1]) return a.w_[i - 1] < b.w_[i - 1];
    return false;
}

GF2Poly GF2Poly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw std::invalid_argument("shifted_up: negative shift");
    GF2Poly r;
    int words = k / 64, bits = k % 64;
    r.w_.assign(w_.size() + words + 1, 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + words] ^= w_[i] << bits;
        if (bits) r.w_[i + words + 1] ^= w_[i] >> (64 - bits);
    }
    r.trim();
    return r;
}

GF2Poly GF2Poly::flipped(int i) const {
    GF2Poly r = *this;
    size_t word = static_cast<size_t>(i) / 64;
    if (word >= r.w_.size()) r.w_.resize(word + 1, 0);
    r.w_[word] ^= 1ull << (i % 64);
    r.trim();
    return r;
}

GF2Poly operator*(const GF2Poly& a, const GF2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    GF2Poly r;
    r.w_.assign(a.w_.size() + b.w_.size(), 0);
#if defined(SQFDIST_USE_CLMUL) && defined(__PCLMUL__)
    for (size_t i = 0; i < a.w_.size(); ++i) {
        if (!a.w_[i]) continue;
        __m128i va = _mm_set_epi64x(0, static_cast<long long>(a.w_[i]));
        for (size_t j = 0; j < b.w_.size(); ++j) {
            if (!b.w_[j]) continue;
            __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b.w_[j]));
            __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
            alignas(16) std::uint64_t halves[2];
            _mm_store_si128(reinterpret_cast<__m128i*>(halves), prod);
            r.w_[i + j] ^= halves[0];
            r.w_[i + j + 1] ^= halves[1];
        }
    }
#else
    // portable word-by-word shift-xor product
    for (size_t i = 0; i < a.w_.size(); ++i) {
        std::uint64_t av = a.w_[i];
        while (av) {
            int bitpos = std::countr_zero(av);
            av &= av - 1;
            for (size_t j = 0; j < b.w_.size(); ++j) {
                std::uint64_t bv = b.w_[j];
                if (!bv) continue;
                r.w_[i + j] ^= bv << bitpos;
                if (bitpos) r.w_[i + j + 1] ^= bv >> (64 - bitpos);
            }
        }
    }
#endif
    r.trim();
    return r;
}

GF2Poly GF2Poly::square() const {
    GF2Poly r;
    r.w_.assign(w_.size() * 2, 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        r.w_[2 * i] = spread_bits(w_[i]);
        r.w_[2 * i + 1] = spread_bits(w_[i] >> 32);
    }
    r.trim();
    return r;
}

GF2Poly GF2Poly::sqrt() const {
    GF2Poly r;
    r.w_.assign(w_.size() / 2 + 1, 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t odd = compress_even_bits(w_[i] >> 1);
        if (odd) throw std::domain_error("sqrt: polynomial is not a square");
        std::uint64_t half = compress_even_bits(w_[i]);
        r.w_[i / 2] |= half << (32 * (i % 2));
    }
    r.trim();
    return r;
}

GF2Poly mod(GF2Poly a, const GF2Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("mod: zero divisor");
    int db = b.degree();
    while (a.degree() >= db) a ^= b.shifted_up(a.degree() - db);
    return a;
}

GF2Poly divide(const GF2Poly& a, const GF2Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divide: zero divisor");
    GF2Poly rem = a, q;
    int db = b.degree();
    if (a.degree() >= db) q.w_.assign(static_cast<size_t>(a.degree() - db) / 64 + 1, 0);
    while (rem.degree() >= db) {
        int k = rem.degree() - db;
        q.w_[static_cast<size_t>(k) / 64] ^= 1ull << (k % 64);
        rem ^= b.shifted_up(k);
    }
    if (!rem.is_zero()) throw std::domain_error("divide: inexact division");
    q.trim();
    return q;
}

GF2Poly gcd(GF2Poly a, GF2Poly b) {
    while (!b.is_zero()) {
        GF2Poly r = mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t GF2Poly::evaluate_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t v : w_) {
        h ^= v;
        h *= 0x100000001b3ull;
    }
    return h;
}

EvenOddPair decompose(const GF2Poly& f) {
    EvenOddPair r;
    int d = f.degree();
    for (int i = 0; i <= d; ++i) {
        if (!f.bit(i)) continue;
        if (i % 2 == 0)
            r.fe = r.fe.flipped(i / 2);
        else
            r.fo = r.fo.flipped(i / 2);
    }
    return r;
}

GF2Poly recompose(const GF2Poly& fe, const GF2Poly& fo) {
    return fe.square() ^ fo.square().shifted_up(1);
}

GF2Poly derivative(const GF2Poly& f) { return decompose(f).fo.square(); }

bool is_squarefree(const GF2Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    auto [fe, fo] = decompose(f);
    if (fo.is_zero()) return f.degree() < 1;  // f = fe^2
    return gcd(fe, fo).is_one();
}

bool is_irreducible(const GF2Poly& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if (!f.bit(0)) return false;  // divisible by x
    // Frobenius chain: x^(2^k) mod f by repeated squaring
    std::vector<int> prime_divisors;
    {
        int m = d;
        for (int q = 2; q * q <= m; ++q)
            while (m % q == 0) {
                if (prime_divisors.empty() || prime_divisors.back() != q) prime_divisors.push_back(q);
                m /= q;
            }
        if (m > 1) prime_divisors.push_back(m);
    }
    const GF2Poly x = GF2Poly::monomial(1);
    GF2Poly t = mod(x, f);
    std::vector<GF2Poly> chain(d + 1);
    chain[0] = t;
    for (int k = 1; k <= d; ++k) chain[k] = mod(chain[k - 1].square(), f);
    if (!(chain[d] == mod(x, f))) return false;
    for (int q : prime_divisors) {
        GF2Poly g = gcd(chain[d / q] ^ mod(x, f), f);
        if (!g.is_one()) return false;
    }
    return true;
}

GF2Poly radical(const GF2Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("radical: zero polynomial");
    if (f.degree() <= 0) return GF2Poly::one();
    GF2Poly fp = derivative(f);
    if (fp.is_zero()) return radical(f.sqrt());  // f is a perfect square
    GF2Poly u = gcd(f, fp);
    if (u.is_one()) return f;
    GF2Poly v = divide(f, u);  // product of the odd-multiplicity factors, each once
    // strip every v-factor from u, leaving a perfect square of the rest
    GF2Poly w = u;
    while (true) {
        GF2Poly g = gcd(w, v);
        if (g.is_one()) break;
        w = divide(w, g);
    }
    if (w.is_one()) return v;
    return v * radical(w.sqrt());
}

FactorCensus factor_census(const GF2Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_census: zero polynomial");
    FactorCensus census;
    GF2Poly r = radical(f);
    // distinct-degree split of the square-free radical
    const GF2Poly x = GF2Poly::monomial(1);
    GF2Poly h = mod(x, r);
    for (int k = 1; r.degree() >= 2 * k; ++k) {
        h = mod(h.square(), r);
        GF2Poly g = gcd(h ^ mod(x, r), r);
        if (!g.is_one()) {
            census.counts[k] = g.degree() / k;
            r = divide(r, g);
            h = mod(h, r);
        }
    }
    if (r.degree() >= 1) census.counts[r.degree()] += 1;
    return census;
}

int FactorCensus::total_distinct() const {
    int t = 0;
    for (const auto& [deg, cnt] : counts) t += cnt;
    return t;
}

GF2Poly reduce_mod2(const IntPoly& f) {
    GF2Poly r;
    for (int i = 0; i <= f.degree(); ++i)
        if (mpz_odd_p(f.coeff(i).get_mpz_t())) r = r.flipped(i);
    return r;
}

}  // namespace sqf
