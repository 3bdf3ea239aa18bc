#ifndef LFPOLY_RATIONAL_HPP
#define LFPOLY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "lfpoly/errors.hpp"

namespace lfpoly {

// Exact rational scalar. GMP keeps gcd(|num|, den) = 1 and den > 0 after
// every arithmetic operation, which is what makes counts like "932 facets"
// exact statements rather than float artifacts.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p". The raw GMP string path does not canonicalize,
/// so this goes through the (num, den) constructor, which does.
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw InvalidArgument("rational with zero denominator: " + s);
        return Rational(Integer(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw InvalidArgument("cannot parse rational: '" + s + "'");
    }
}

/// Canonical decimal-free string, "p/q" or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p/q", "p", or a decimal like "-0.125" (exactly, via powers of
/// ten).
inline Rational parse_decimal(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return parse_rational(s);
    const std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("cannot parse decimal: '" + s + "'");
    Integer den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    const bool negative = !head.empty() && head[0] == '-';
    const Integer whole = head.empty() || head == "-" || head == "+" ? Integer(0)
                                                                     : Integer(head);
    const Integer frac = tail.empty() ? Integer(0) : Integer(tail);
    const Integer num = abs(whole) * den + frac;
    return Rational(negative ? Integer(-num) : num, den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Checks the canonical-form invariant explicitly (used by property tests;
/// arithmetic is expected to maintain it on its own).
inline bool is_canonical(const Rational& r) {
    if (denominator(r) <= 0) return false;
    return gcd(Integer(abs(numerator(r))), Integer(denominator(r))) == 1;
}

} // namespace lfpoly

#endif
