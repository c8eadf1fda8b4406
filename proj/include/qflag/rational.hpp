#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qflag {

// All arithmetic in this library is exact.  Integers are arbitrary precision;
// rationals are always kept in lowest terms by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("expected an integer, got " + r.str());
    return numerator(r);
}

/// binomial(n, k) with the dimension-counting convention: 0 whenever k < 0 or n < k.
inline Int binomial(const Int& n, long k) {
    if (k < 0 || n < k) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

inline Int binomial(long n, long k) { return binomial(Int(n), k); }

} // namespace qflag
