#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace weylrep {

// Exact arbitrary-precision scalars.  cpp_rational keeps values reduced with
// a positive denominator, which is exactly the canonical form we rely on.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

inline std::string to_decimal_string(const BigInt& n) { return n.str(); }

inline std::string to_decimal_string(const BigRational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact at every step
    }
    return b;
}

}  // namespace weylrep
