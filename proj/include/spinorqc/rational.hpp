#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinorqc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p", "-p", "p/q"; q > 0, no whitespace.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    const auto digits_only = [&](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        neg = num[0] == '-';
        num.remove_prefix(1);
    }
    if (!digits_only(num)) bad();
    BigInt p{std::string(num)};
    if (neg) p = -p;
    if (slash == std::string_view::npos) return Rational(p);
    std::string_view den = text.substr(slash + 1);
    if (!digits_only(den)) bad();
    BigInt q{std::string(den)};
    if (q == 0) bad();
    return Rational(p, q);
}

inline std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace spinorqc
