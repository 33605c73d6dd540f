#pragma once

#include <gmpxx.h>

#include <string>

namespace qstrange {

// Exact rational arithmetic. mpq_class keeps values canonical: lowest terms,
// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// b^e for e >= 0
Integer pow_integer(const Integer& b, unsigned long e);
// b^e, negative e inverts (b must be nonzero then)
Rational pow_rational(const Rational& b, long e);

} // namespace qstrange
