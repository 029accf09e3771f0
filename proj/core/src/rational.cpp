#include "tqmean/rational.hpp"

namespace tqmean {

Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i; // exact: c is C(n-k+i, i) here
    }
    return c;
}

Integer pow2(unsigned e)
{
    return Integer(1) << e;
}

std::string to_fraction_string(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace tqmean
