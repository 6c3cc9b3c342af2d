// Exact rational scalars used throughout the library.
//
// Rat is an arbitrary-precision rational number (always stored in lowest
// terms with a positive denominator).  The helpers below add the string
// format used by the JSON interfaces ("p/q", with "p" accepted as a
// shorthand for "p/1") and a few small conveniences that the rest of the
// code needs (integer powers, parity-safe signs, big-integer square roots).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace dcs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Canonical "p/q" rendering; the denominator is always printed, so the
// representation round-trips bit-for-bit (e.g. "0/1", "-3/2").
inline std::string rat_to_string(const Rat& x) {
    return rat_num(x).str() + "/" + rat_den(x).str();
}

// Accepts "p/q" or plain "p".  Throws std::invalid_argument on malformed
// input or a zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("rat_from_string: zero denominator");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Rat(p, q);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("rat_from_string: bad input '") + s + "': " + e.what());
    }
}

// x^k for integer k (negative k inverts; 0^0 == 1 by convention, 0^-k throws).
inline Rat rat_pow(const Rat& x, long k) {
    if (k < 0) {
        if (x == 0) throw std::domain_error("rat_pow: negative power of zero");
        return Rat(1) / rat_pow(x, -k);
    }
    Rat result(1), base(x);
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Exact integer square root test: returns k with k*k == n when n is a
// perfect square, std::nullopt otherwise (n < 0 is never a square).
inline std::optional<Int> perfect_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int k = boost::multiprecision::sqrt(n);
    if (k * k == n) return k;
    return std::nullopt;
}

// n! as a big integer (small n only; used for multiplicity factors).
inline Int factorial_int(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace dcs
