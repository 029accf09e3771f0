#ifndef TQMEAN_PRECISION_HPP
#define TQMEAN_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "tqmean/rational.hpp"

namespace tqmean {

/// 80 significant decimal digits. Used to re-evaluate inequality sides whose
/// double-precision margin is too small to be trusted.
using HighPrecision = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<80>,
    boost::multiprecision::et_off>;

inline HighPrecision to_high_precision(const Rational& q)
{
    return HighPrecision(numerator(q)) / HighPrecision(denominator(q));
}

} // namespace tqmean

#endif
