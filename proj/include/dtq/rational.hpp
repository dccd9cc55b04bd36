#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A required table entry (DT, BPS or pair value) is absent.
class MissingEntry : public Error {
public:
    using Error::Error;
};

/// A brute-force computation was asked to exceed its size cap.
class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

/// Parses "p/q", "-p/q" or an integer string. Throws Error on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are printed without a denominator.
std::string to_string(const Rational& x);

/// a / b in canonical form.
inline Rational frac(long a, long b)
{
    Rational r{Integer(a), Integer(b)};
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

/// Moebius function of n >= 1.
int moebius(long n);

}  // namespace dtq
