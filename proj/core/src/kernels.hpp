#ifndef TQMEAN_SRC_KERNELS_HPP
#define TQMEAN_SRC_KERNELS_HPP

// Overload set used by the inequality sides: double arguments go through the
// production evaluators, HighPrecision arguments through the generic kernels.

#include <boost/math/constants/constants.hpp>

#include "tqmean/generic.hpp"
#include "tqmean/means.hpp"
#include "tqmean/precision.hpp"
#include "tqmean/special_functions.hpp"

namespace tqmean::detail {

template <class Real>
Real pi()
{
    return boost::math::constants::pi<Real>();
}

inline double bessel(double t) { return bessel_i0(t); }

inline HighPrecision bessel(const HighPrecision& t)
{
    using std::abs;
    return generic::i0_series(HighPrecision(abs(t)), generic::epsilon<HighPrecision>(), 1000000);
}

inline double mean(const MeanKind& k, double a, double b) { return evaluate(k, PositivePair(a, b)); }

inline HighPrecision mean(const MeanKind& k, const HighPrecision& a, const HighPrecision& b)
{
    return evaluate(k, a, b);
}

inline double power_mean(double p, double a, double b)
{
    return evaluate(MeanKind::power(p), PositivePair(a, b));
}

inline HighPrecision power_mean(const HighPrecision& p, const HighPrecision& a, const HighPrecision& b)
{
    return generic::power_mean(a, b, p);
}

/// M(a^p, b^p)^{1/p}.
inline double porder(const MeanKind& k, double p, double a, double b)
{
    return p_order(k, p, PositivePair(a, b));
}

inline HighPrecision porder(const MeanKind& k, const HighPrecision& p, const HighPrecision& a,
                            const HighPrecision& b)
{
    using std::pow;
    const HighPrecision g = generic::geometric_mean(a, b);
    const HighPrecision x = pow(a / g, p);
    const HighPrecision y = pow(b / g, p);
    return g * pow(evaluate(k, x, y), 1 / p);
}

} // namespace tqmean::detail

#endif
