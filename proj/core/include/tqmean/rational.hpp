#ifndef TQMEAN_RATIONAL_HPP
#define TQMEAN_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace tqmean {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// 2^e as an exact integer.
Integer pow2(unsigned e);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "num/den" in lowest terms (den is always printed, "1" for integers).
std::string to_fraction_string(const Rational& q);

} // namespace tqmean

#endif
