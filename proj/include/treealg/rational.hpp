#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "error.hpp"

namespace treealg {

// Every quantity in the library is exact: arbitrary-precision integers for
// counts, rationals for coefficients.  No floating point anywhere.
using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline integer factorial(int n) {
    integer r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// Integer division that insists on divisibility; the quotients this library
// takes (orbit sizes, density counts) are whole numbers by theorem.
inline integer exact_div(const integer& a, const integer& b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
    return a / b;
}

inline integer int_pow(const integer& base, int exp) {
    integer r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

inline rational rat_pow(const rational& base, int exp) {
    rational r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

// "p" or "p/q", optional leading sign, normalized on construction.
inline rational parse_rational(const std::string& text) {
    const auto bad = [&] { fail("SyntaxError", "malformed rational '" + text + "'"); };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rational(integer(text));
        integer num(text.substr(0, slash));
        integer den(text.substr(slash + 1));
        if (den == 0) bad();
        return rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return 0;  // unreachable
}

inline std::string format_rational(const rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace treealg
