#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sqfdist/intpoly.hpp"
#include "sqfdist/ratpoly.hpp"

namespace sqf {

// Sparse text form shared by the CLI: terms `c*x^k` joined with + / -,
// e.g. "15552*x^15 + 5184*x^14 - 1". The parser accepts any term order,
// repeated powers (summed), bare "x", "x^k", and rational coefficients
// "61/64*x^2". The printer emits descending powers.

struct PolyParseError : std::runtime_error {
    PolyParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

RatPoly parse_rat_poly(std::string_view text);
IntPoly parse_int_poly(std::string_view text);  // rejects fractional coefficients

std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);

}  // namespace sqf
