#ifndef BIRAT_RATIONAL_HPP
#define BIRAT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cmath>
#include <string>

#include "birat/errors.hpp"

namespace birat {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational coefficient. boost::rational keeps the invariants we need:
// denominator > 0 and the fraction always reduced.
using Rational = boost::rational<BigInt>;

inline Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

inline Rational rat_from_strings(const std::string& num, const std::string& den) {
    BigInt n(num), d(den);
    if (d == 0) throw usage_error("rational with zero denominator");
    return Rational(n, d);
}

// Parse decimal literals like "-0.3" or "2" into an exact rational.
inline Rational rat_from_decimal(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    std::string t = s;
    bool neg = false;
    size_t pos = 0;
    if (t[0] == '+' || t[0] == '-') { neg = t[0] == '-'; pos = 1; }
    std::string digits;
    long long frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    // optional "p/q" form
    auto slash = t.find('/');
    if (slash != std::string::npos)
        return rat_from_strings(t.substr(0, slash), t.substr(slash + 1));
    for (; pos < t.size(); ++pos) {
        char c = t[pos];
        if (c == '.') {
            if (seen_dot) throw parse_error("bad rational literal: " + s);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else {
            throw parse_error("bad rational literal: " + s);
        }
    }
    if (!seen_digit) throw parse_error("bad rational literal: " + s);
    BigInt n(digits.empty() ? "0" : digits);
    BigInt d = 1;
    for (long long i = 0; i < frac_len; ++i) d *= 10;
    if (neg) n = -n;
    return Rational(n, d);
}

// double conversion that survives numerators/denominators beyond double range.
inline double to_double(const Rational& r) {
    const BigInt& n = r.numerator();
    const BigInt& d = r.denominator();
    if (n == 0) return 0.0;
    long nb = static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(n)));
    long db = static_cast<long>(boost::multiprecision::msb(d));
    // Shift both into a safe window before converting.
    long shift = std::max(nb, db) - 500;
    BigInt ns = n, ds = d;
    if (shift > 0) { ns >>= shift; ds >>= shift; }
    if (ds == 0) return n < 0 ? -HUGE_VAL : HUGE_VAL;
    return ns.convert_to<double>() / ds.convert_to<double>();
}

} // namespace birat

#endif
