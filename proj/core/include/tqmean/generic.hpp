#ifndef TQMEAN_GENERIC_HPP
#define TQMEAN_GENERIC_HPP

// Precision-generic kernels. Every function works for double and for
// HighPrecision; math calls go through ADL so boost::multiprecision types pick
// up their own overloads.

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "tqmean/error.hpp"

namespace tqmean::generic {

template <class Real>
Real epsilon()
{
    return std::numeric_limits<Real>::epsilon();
}

/// Sum_{n>=first} (t/2)^{2n} / n!^2, stopped once the next term is below
/// tol times the partial sum. first is 0 (I0 itself) or 1 (I0 - 1).
template <class Real>
Real i0_series_from(const Real& t, int first, const Real& tol, int max_terms)
{
    const Real q = t * t / 4;
    Real term = 1;
    for (int n = 1; n <= first; ++n) {
        term *= q / (Real(n) * Real(n));
    }
    Real sum = term;
    if (q == 0) {
        return sum;
    }
    for (int n = first + 1, used = 1; used < max_terms; ++n, ++used) {
        term *= q / (Real(n) * Real(n));
        sum += term;
        if (term < tol * sum) {
            return sum;
        }
    }
    throw NonConvergence("I0 power series did not reach tolerance within "
                         + std::to_string(max_terms) + " terms");
}

template <class Real>
Real i0_series(const Real& t, const Real& tol, int max_terms)
{
    return i0_series_from(t, 0, tol, max_terms);
}

/// sinh(t)/t, equal to 1 at t = 0.
template <class Real>
Real sinhc(const Real& t)
{
    using std::sinh;
    if (t == 0) {
        return Real(1);
    }
    return sinh(t) / t;
}

/// sinh(t)/t - 1 without cancellation; the series branch covers |t| < 1.
template <class Real>
Real sinhc_minus_one(const Real& t)
{
    using std::abs;
    if (abs(t) < 1) {
        const Real x = t * t;
        Real term = x / 6;
        Real sum = term;
        for (int n = 2; n < 200; ++n) {
            term *= x / (Real(2 * n) * Real(2 * n + 1));
            sum += term;
            if (term <= epsilon<Real>() * sum) {
                break;
            }
        }
        return sum;
    }
    return sinhc(t) - 1;
}

/// cosh(t) - 1 without cancellation.
template <class Real>
Real cosh_minus_one(const Real& t)
{
    using std::sinh;
    const Real s = sinh(t / 2);
    return 2 * s * s;
}

/// t/tanh(t) - 1, the exponent of the identric mean's reduced form.
template <class Real>
Real identric_exponent(const Real& t)
{
    using std::abs;
    using std::tanh;
    if (t == 0) {
        return Real(0);
    }
    if (abs(t) < Real(1e-8)) {
        const Real t2 = t * t;
        return t2 * (Real(1) / 3 + t2 * (Real(-1) / 45 + t2 * (Real(2) / 945 - t2 / 4725)));
    }
    return t / tanh(t) - 1;
}

/// (t sinh t - 2 cosh t + 2) / t^2; the series branch keeps |t| < 1 free of cancellation.
template <class Real>
Real lupas_kernel(const Real& t)
{
    using std::abs;
    using std::cosh;
    using std::sinh;
    if (abs(t) < 1) {
        // sum_{n>=2} (2n-2) t^{2n-2} / (2n)!
        const Real x = t * t;
        Real p = x / 24; // t^2 / 4!
        Real sum = 2 * p;
        for (int n = 3; n < 200; ++n) {
            p *= x / (Real(2 * n - 1) * Real(2 * n));
            const Real term = Real(2 * n - 2) * p;
            sum += term;
            if (term <= epsilon<Real>() * sum) {
                break;
            }
        }
        return sum;
    }
    return (t * sinh(t) - 2 * cosh(t) + 2) / (t * t);
}

/// log(b/a) to full relative accuracy, including when b is close to a.
template <class Real>
Real log_ratio(const Real& a, const Real& b)
{
    using std::log;
    if constexpr (std::is_same_v<Real, double>) {
        const double r = b / a;
        if (r > 0.5 && r < 2.0) {
            return std::log1p((b - a) / a);
        }
        return std::log(b) - std::log(a);
    } else {
        return log(b / a);
    }
}

/// t = (1/2) log(b/a).
template <class Real>
Real half_log(const Real& a, const Real& b)
{
    return log_ratio(a, b) / 2;
}

template <class Real>
Real geometric_mean(const Real& a, const Real& b)
{
    using std::sqrt;
    return sqrt(a) * sqrt(b);
}

/// ((a^p + b^p)/2)^(1/p), scaled by the dominant argument to avoid overflow.
template <class Real>
Real power_mean(const Real& a, const Real& b, const Real& p)
{
    using std::pow;
    if (p == 0) {
        return geometric_mean(a, b);
    }
    const Real hi = a < b ? b : a;
    const Real lo = a < b ? a : b;
    if (p > 0) {
        return hi * pow((1 + pow(lo / hi, p)) / 2, 1 / p);
    }
    return lo * pow((1 + pow(hi / lo, p)) / 2, 1 / p);
}

/// (b - a) / (log b - log a).
template <class Real>
Real logarithmic_mean(const Real& a, const Real& b)
{
    if (a == b) {
        return a;
    }
    return (b - a) / log_ratio(a, b);
}

/// e^{-1} (b^b / a^a)^{1/(b-a)}, evaluated as lo * exp(hi*log(hi/lo)/(hi-lo) - 1).
template <class Real>
Real identric_mean(const Real& a, const Real& b)
{
    using std::exp;
    if (a == b) {
        return a;
    }
    const Real lo = a < b ? a : b;
    const Real hi = a < b ? b : a;
    const Real exponent = hi * log_ratio(lo, hi) / (hi - lo) - 1;
    return lo * exp(exponent);
}

/// Arithmetic-geometric mean; iterates until |a_n - b_n| < tol * a_n.
template <class Real>
Real agm(Real a, Real b, const Real& tol)
{
    using std::abs;
    using std::sqrt;
    for (int i = 0; i < 200; ++i) {
        if (abs(a - b) < tol * a) {
            return a;
        }
        const Real next = (a + b) / 2;
        b = sqrt(a * b);
        a = next;
    }
    throw NonConvergence("AGM iteration did not converge");
}

/// Toader mean through Legendre's AGM form of the complete elliptic integral
/// of the second kind:
///   T(a,b) = ((a^2+b^2)/2 - sum_{n>=1} 2^{n-1} c_n^2) / AGM(a,b),
///   c_{n+1} = (a_n - b_n)/2.
/// Quadratically convergent for any ratio b/a.
template <class Real>
Real toader_mean_agm(Real a, Real b)
{
    using std::abs;
    using std::sqrt;
    const Real eps = epsilon<Real>();
    Real sum = (a * a + b * b) / 2;
    Real weight = 1;
    for (int i = 0; i < 200; ++i) {
        const Real c = (a - b) / 2;
        const Real correction = weight * c * c;
        sum -= correction;
        weight *= 2;
        const Real next = (a + b) / 2;
        b = sqrt(a * b);
        a = next;
        if (correction <= eps * sum && abs(a - b) <= eps * a) {
            return sum / a;
        }
    }
    throw NonConvergence("Toader mean AGM iteration did not converge");
}

} // namespace tqmean::generic

#endif
