#include "sqfdist/poly_text.hpp"

#include <cctype>
#include <map>
#include <type_traits>

namespace sqf {

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() const { return s[i]; }
    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, i); }

    mpz_class read_integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return mpz_class(std::string(s.substr(start, i - start)), 10);
    }
};

}  // namespace

RatPoly parse_rat_poly(std::string_view text) {
    Cursor c{text};
    if (c.done()) c.fail("empty polynomial text");
    std::map<int, mpq_class> terms;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            ++c.i;
            c.skip_ws();
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        if (c.done()) c.fail("dangling sign");
        first = false;

        mpq_class coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            mpz_class num = c.read_integer();
            mpz_class den = 1;
            c.skip_ws();
            if (!c.done() && c.peek() == '/') {
                ++c.i;
                den = c.read_integer();
                if (den == 0) c.fail("zero denominator");
            }
            coeff = mpq_class(num, den);
            coeff.canonicalize();
            saw_coeff = true;
            c.skip_ws();
            if (!c.done() && c.peek() == '*') {
                ++c.i;
                c.skip_ws();
                if (c.done() || c.peek() != 'x') c.fail("expected 'x' after '*'");
            }
        }
        int power = 0;
        if (!c.done() && c.peek() == 'x') {
            ++c.i;
            power = 1;
            c.skip_ws();
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                mpz_class e = c.read_integer();
                if (e > 100000) c.fail("exponent too large");
                power = static_cast<int>(e.get_si());
            }
        } else if (!saw_coeff) {
            c.fail("expected coefficient or 'x'");
        }
        terms[power] += sign * coeff;
    }
    int max_pow = terms.empty() ? -1 : terms.rbegin()->first;
    std::vector<mpq_class> coeffs(max_pow + 1, mpq_class(0));
    for (auto& [p, v] : terms) coeffs[p] = v;
    return RatPoly(std::move(coeffs));
}

IntPoly parse_int_poly(std::string_view text) {
    RatPoly p = parse_rat_poly(text);
    if (!p.is_integral()) throw PolyParseError("fractional coefficient in integer polynomial", 0);
    return p.to_intpoly();
}

namespace {

template <typename Poly, typename CoeffToStr>
std::string format_poly(const Poly& p, CoeffToStr coeff_str) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const auto& c = p.coeff(i);
        if (c == 0) continue;
        bool negative = c < 0;
        std::decay_t<decltype(c)> mag_val = c;
        if (negative) mag_val = -mag_val;
        std::string mag = coeff_str(mag_val);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") {
                out += mag;
                out += "*";
            }
            out += "x";
            if (i != 1) {
                out += "^";
                out += std::to_string(i);
            }
        }
    }
    return out;
}

}  // namespace

std::string to_string(const IntPoly& p) {
    return format_poly(p, [](const mpz_class& c) { return c.get_str(); });
}

std::string to_string(const RatPoly& p) {
    return format_poly(p, [](const mpq_class& c) {
        return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
    });
}

}  // namespace sqf
