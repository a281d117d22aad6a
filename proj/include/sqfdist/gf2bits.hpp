#pragma once

#include <bit>
#include <cstdint>

// Single-word GF(2)[x] kernels for the exhaustive searches (degree <= 63).
// The vector-backed GF2Poly routines agree with these; the searches stay on
// raw words to avoid allocation in the hot loop.

namespace sqf::gf2bits {

inline std::uint64_t compress_even(std::uint64_t v) {
    v &= 0x5555555555555555ull;
    v = (v | (v >> 1)) & 0x3333333333333333ull;
    v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v >> 4)) & 0x00FF00FF00FF00FFull;
    v = (v | (v >> 8)) & 0x0000FFFF0000FFFFull;
    v = (v | (v >> 16)) & 0x00000000FFFFFFFFull;
    return v;
}

inline int degree(std::uint64_t v) { return v ? 63 - std::countl_zero(v) : -1; }

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        int db = degree(b);
        while (true) {
            int da = degree(a);
            if (da < db) break;
            a ^= b << (da - db);
        }
        std::uint64_t t = a;
        a = b;
        b = t;
    }
    return a;
}

// gcd(f_e, f_o) == 1 with f_e, f_o the even/odd-index bit halves.
inline bool squarefree(std::uint64_t f) {
    std::uint64_t fe = compress_even(f);
    std::uint64_t fo = compress_even(f >> 1);
    if (fo == 0) return degree(f) < 1;
    return gcd(fe, fo) == 1;
}

}  // namespace sqf::gf2bits
