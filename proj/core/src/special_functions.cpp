#include "tqmean/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tqmean/error.hpp"
#include "tqmean/generic.hpp"

namespace tqmean {

void SeriesConfig::validate() const
{
    if (!(tolerance > 0.0)) {
        throw DomainError("SeriesConfig: tolerance must be > 0");
    }
    if (max_terms < 1) {
        throw DomainError("SeriesConfig: max_terms must be >= 1");
    }
}

double i0_series(double t, const SeriesConfig& cfg)
{
    cfg.validate();
    if (!std::isfinite(t)) {
        throw DomainError("i0_series: argument must be finite");
    }
    return generic::i0_series(std::abs(t), cfg.tolerance, cfg.max_terms);
}

double i0_quadrature(double t, const QuadratureConfig& cfg)
{
    if (!std::isfinite(t)) {
        throw DomainError("i0_quadrature: argument must be finite");
    }
    const auto f = [t](double theta) { return std::cosh(t * std::cos(theta)); };
    return 2.0 / std::numbers::pi * integrate(f, 0.0, std::numbers::pi / 2, cfg).value;
}

double i0_scaled(double t, const QuadratureConfig& cfg)
{
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("i0_scaled: argument must be finite and >= 0");
    }
    const auto f = [t](double theta) {
        const double s = std::sin(theta);
        return std::exp(-2.0 * t * s * s);
    };
    return 2.0 / std::numbers::pi * integrate(f, 0.0, std::numbers::pi / 2, cfg).value;
}

double bessel_i0(double t)
{
    const double x = std::abs(t);
    if (x <= kLargeArgument) {
        return i0_series(x);
    }
    return std::exp(x) * i0_scaled(x);
}

double bessel_i0_scaled(double t)
{
    const double x = std::abs(t);
    if (x <= kLargeArgument) {
        return std::exp(-x) * i0_series(x);
    }
    return i0_scaled(x);
}

double bessel_i0_minus_one(double t)
{
    const SeriesConfig cfg;
    return generic::i0_series_from(std::abs(t), 1, cfg.tolerance, cfg.max_terms);
}

std::string_view to_string(CoeffKind kind)
{
    switch (kind) {
    case CoeffKind::I0: return "i0";
    case CoeffKind::I0Squared: return "i0-squared";
    case CoeffKind::I0Fourth: return "i0-fourth";
    case CoeffKind::CoshSinh3: return "cosh-sinh3";
    case CoeffKind::VSequence: return "v-sequence";
    case CoeffKind::Sinh2tOver2t: return "sinh2t-over-2t";
    case CoeffKind::SinhOverT: return "sinh-over-t";
    case CoeffKind::Cosh: return "cosh";
    case CoeffKind::Derived: return "derived";
    }
    return "derived";
}

namespace {

void check_n_max(int n_max)
{
    if (n_max < 0) {
        throw DomainError("coefficient table size must be >= 0");
    }
}

template <class F>
CoeffTable build(CoeffKind kind, int n_max, F&& entry)
{
    check_n_max(n_max);
    CoeffTable table{kind, {}};
    table.coefficients.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        table.coefficients.push_back(entry(static_cast<unsigned>(n)));
    }
    return table;
}

} // namespace

CoeffTable i0_coeffs(int n_max)
{
    return build(CoeffKind::I0, n_max, [](unsigned n) {
        const Integer f = factorial(n);
        return Rational(Integer(1), pow2(2 * n) * f * f);
    });
}

CoeffTable i0_squared_coeffs(int n_max)
{
    return build(CoeffKind::I0Squared, n_max, [](unsigned n) {
        const Integer f = factorial(n);
        const Integer f2 = f * f;
        return Rational(factorial(2 * n), pow2(2 * n) * f2 * f2);
    });
}

CoeffTable i0_fourth_coeffs(int n_max)
{
    const CoeffTable sq = i0_squared_coeffs(n_max);
    return CoeffTable{CoeffKind::I0Fourth, cauchy_product(sq.coefficients, sq.coefficients)};
}

CoeffTable cosh_sinh3_coeffs(int n_max)
{
    return build(CoeffKind::CoshSinh3, n_max, [](unsigned n) {
        return Rational(pow2(4 * n + 3) - pow2(2 * n + 1), factorial(2 * n + 3));
    });
}

CoeffTable v_sequence(int n_max)
{
    const CoeffTable fourth = i0_fourth_coeffs(n_max);
    const CoeffTable other = cosh_sinh3_coeffs(n_max);
    CoeffTable v{CoeffKind::VSequence, {}};
    v.coefficients.reserve(fourth.size());
    for (std::size_t n = 0; n < fourth.size(); ++n) {
        v.coefficients.push_back(fourth[n] - other[n]);
    }
    return v;
}

CoeffTable sinh2t_over_2t_coeffs(int n_max)
{
    return build(CoeffKind::Sinh2tOver2t, n_max,
                 [](unsigned n) { return Rational(pow2(2 * n), factorial(2 * n + 1)); });
}

CoeffTable sinh_over_t_coeffs(int n_max)
{
    return build(CoeffKind::SinhOverT, n_max,
                 [](unsigned n) { return Rational(Integer(1), factorial(2 * n + 1)); });
}

CoeffTable cosh_coeffs(int n_max)
{
    return build(CoeffKind::Cosh, n_max,
                 [](unsigned n) { return Rational(Integer(1), factorial(2 * n)); });
}

CoeffKind parse_coeff_kind(std::string_view name)
{
    for (CoeffKind k : {CoeffKind::I0, CoeffKind::I0Squared, CoeffKind::I0Fourth, CoeffKind::CoshSinh3,
                        CoeffKind::VSequence, CoeffKind::Sinh2tOver2t, CoeffKind::SinhOverT,
                        CoeffKind::Cosh}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw UnsupportedKind("unknown series kind '" + std::string(name) + "'");
}

CoeffTable coeff_table(CoeffKind kind, int n_max)
{
    switch (kind) {
    case CoeffKind::I0: return i0_coeffs(n_max);
    case CoeffKind::I0Squared: return i0_squared_coeffs(n_max);
    case CoeffKind::I0Fourth: return i0_fourth_coeffs(n_max);
    case CoeffKind::CoshSinh3: return cosh_sinh3_coeffs(n_max);
    case CoeffKind::VSequence: return v_sequence(n_max);
    case CoeffKind::Sinh2tOver2t: return sinh2t_over_2t_coeffs(n_max);
    case CoeffKind::SinhOverT: return sinh_over_t_coeffs(n_max);
    case CoeffKind::Cosh: return cosh_coeffs(n_max);
    case CoeffKind::Derived: break;
    }
    throw UnsupportedKind("no table builder for a derived series");
}

std::vector<Rational> cauchy_product(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    const std::size_t len = std::min(a.size(), b.size());
    std::vector<Rational> c(len);
    for (std::size_t n = 0; n < len; ++n) {
        Rational sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            sum += a[k] * b[n - k];
        }
        c[n] = sum;
    }
    return c;
}

double power_series_ratio(const CoeffTable& numer, const CoeffTable& denom, double t,
                          const SeriesConfig& cfg)
{
    cfg.validate();
    if (denom.size() == 0 || numer.size() == 0) {
        throw DomainError("power_series_ratio: empty coefficient table");
    }
    for (const Rational& b : denom.coefficients) {
        if (b <= 0) {
            throw DomainError("power_series_ratio: denominator coefficients must be > 0");
        }
    }
    const std::size_t len = std::min(numer.size(), denom.size());
    const double x = t * t;
    double power = 1.0;
    double num = to_double(numer[0]);
    double den = to_double(denom[0]);
    if (x == 0.0) {
        return num / den;
    }
    const auto limit = std::min<std::size_t>(len, static_cast<std::size_t>(cfg.max_terms));
    for (std::size_t n = 1; n < limit; ++n) {
        power *= x;
        const double a = to_double(numer[n]) * power;
        const double b = to_double(denom[n]) * power;
        num += a;
        den += b;
        if (std::abs(a) < cfg.tolerance * std::abs(num) && b < cfg.tolerance * den) {
            return num / den;
        }
    }
    throw NonConvergence("power_series_ratio: coefficient tables exhausted before convergence");
}

} // namespace tqmean
