#include "tqmean/means.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "tqmean/error.hpp"
#include "tqmean/generic.hpp"
#include "tqmean/special_functions.hpp"

namespace tqmean {

namespace {

constexpr double kNearDiagonal = 1e-8; // on |ln(b/a)| = |2t|

double sinhc_near_zero(double t)
{
    const double x = t * t;
    return 1.0 + x * (1.0 / 6 + x * (1.0 / 120 + x / 5040));
}

std::string format_order(double p)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p);
    (void)ec;
    return std::string(buf, end);
}

} // namespace

PositivePair::PositivePair(double a, double b) : a_(a), b_(b)
{
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("mean arguments must be finite and strictly positive");
    }
}

HalfLogParam HalfLogParam::from_pair(const PositivePair& pair)
{
    return {generic::half_log(pair.a(), pair.b())};
}

MeanKind MeanKind::power(double p)
{
    if (p == 0.0) {
        return geometric();
    }
    if (p == 1.0) {
        return arithmetic();
    }
    return {MeanFamily::Power, p};
}

MeanKind MeanKind::parse(std::string_view text)
{
    if (text == "geometric") return geometric();
    if (text == "arithmetic") return arithmetic();
    if (text == "logarithmic") return logarithmic();
    if (text == "identric") return identric();
    if (text == "agm") return agm();
    if (text == "toader") return toader();
    if (text == "toader-qi") return toader_qi();
    constexpr std::string_view prefix = "power:";
    if (text.starts_with(prefix)) {
        const std::string_view digits = text.substr(prefix.size());
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && std::isfinite(p)) {
            return power(p);
        }
    }
    throw DomainError("unknown mean kind: " + std::string(text));
}

std::string MeanKind::name() const
{
    switch (family) {
    case MeanFamily::Geometric: return "geometric";
    case MeanFamily::Arithmetic: return "arithmetic";
    case MeanFamily::Power: return "power:" + format_order(order);
    case MeanFamily::Logarithmic: return "logarithmic";
    case MeanFamily::Identric: return "identric";
    case MeanFamily::AGM: return "agm";
    case MeanFamily::Toader: return "toader";
    case MeanFamily::ToaderQi: return "toader-qi";
    }
    return "unknown";
}

double agm(const PositivePair& pair, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("agm: tolerance must be > 0");
    }
    return generic::agm(pair.a(), pair.b(), tol);
}

double toader_mean(const PositivePair& pair, const QuadratureConfig& cfg)
{
    const double a = pair.a();
    const double b = pair.b();
    if (a == b) {
        return a;
    }
    const auto f = [a, b](double theta) {
        return std::hypot(a * std::cos(theta), b * std::sin(theta));
    };
    return 2.0 / std::numbers::pi * integrate(f, 0.0, std::numbers::pi / 2, cfg).value;
}

TqPaths tq_mean_paths(const PositivePair& pair, const QuadratureConfig& cfg)
{
    const double a = pair.a();
    const double b = pair.b();
    const double t = std::abs(generic::half_log(a, b));
    double identity;
    if (t <= kLargeArgument) {
        identity = generic::geometric_mean(a, b) * i0_series(t);
    } else {
        // sqrt(ab) e^{|t|} = max(a, b)
        identity = pair.max() * i0_scaled(t, cfg);
    }
    const double la = std::log(a);
    const double lb = std::log(b);
    const auto f = [la, lb](double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return std::exp(c * c * la + s * s * lb);
    };
    const double quad = 2.0 / std::numbers::pi * integrate(f, 0.0, std::numbers::pi / 2, cfg).value;
    return {identity, quad};
}

double tq_mean(const PositivePair& pair, const QuadratureConfig& cfg)
{
    if (pair.a() == pair.b()) {
        return pair.a();
    }
    const TqPaths paths = tq_mean_paths(pair, cfg);
    if (std::abs(paths.identity - paths.quadrature) > 100.0 * cfg.tolerance * paths.identity) {
        throw ConsistencyError("tq_mean: Bessel identity and direct quadrature disagree");
    }
    return paths.identity;
}

double evaluate(const MeanKind& kind, const PositivePair& pair)
{
    const double a = pair.a();
    const double b = pair.b();
    if (a == b) {
        return a;
    }
    switch (kind.family) {
    case MeanFamily::Geometric:
        return generic::geometric_mean(a, b);
    case MeanFamily::Arithmetic:
        return a / 2 + b / 2;
    case MeanFamily::Power:
        return generic::power_mean(a, b, kind.order);
    case MeanFamily::Logarithmic: {
        const double t = generic::half_log(a, b);
        if (std::abs(2 * t) < kNearDiagonal) {
            return generic::geometric_mean(a, b) * sinhc_near_zero(t);
        }
        return generic::logarithmic_mean(a, b);
    }
    case MeanFamily::Identric: {
        const double t = generic::half_log(a, b);
        if (std::abs(2 * t) < kNearDiagonal) {
            return generic::geometric_mean(a, b) * std::exp(generic::identric_exponent(t));
        }
        return generic::identric_mean(a, b);
    }
    case MeanFamily::AGM:
        return agm(pair);
    case MeanFamily::Toader:
        return toader_mean(pair);
    case MeanFamily::ToaderQi:
        return tq_mean(pair);
    }
    throw UnsupportedKind("unknown mean family");
}

HighPrecision evaluate(const MeanKind& kind, const HighPrecision& a, const HighPrecision& b)
{
    if (!(a > 0) || !(b > 0)) {
        throw DomainError("mean arguments must be strictly positive");
    }
    if (a == b) {
        return a;
    }
    switch (kind.family) {
    case MeanFamily::Geometric:
        return generic::geometric_mean(a, b);
    case MeanFamily::Arithmetic:
        return (a + b) / 2;
    case MeanFamily::Power:
        return generic::power_mean(a, b, HighPrecision(kind.order));
    case MeanFamily::Logarithmic:
        return generic::logarithmic_mean(a, b);
    case MeanFamily::Identric:
        return generic::identric_mean(a, b);
    case MeanFamily::AGM:
        return generic::agm(a, b, generic::epsilon<HighPrecision>());
    case MeanFamily::Toader:
        return generic::toader_mean_agm(a, b);
    case MeanFamily::ToaderQi: {
        using std::abs;
        const HighPrecision t = abs(generic::half_log(a, b));
        return generic::geometric_mean(a, b)
            * generic::i0_series(t, generic::epsilon<HighPrecision>(), 100000);
    }
    }
    throw UnsupportedKind("unknown mean family");
}

double p_order(const MeanKind& kind, double p, const PositivePair& pair)
{
    if (p == 0.0 || !std::isfinite(p)) {
        throw DomainError("p_order: p must be finite and non-zero");
    }
    // Homogeneity: M_p(a,b) = g * M_p(a/g, b/g) with g = sqrt(ab); keeps a^p, b^p in range.
    const double g = generic::geometric_mean(pair.a(), pair.b());
    const double x = std::pow(pair.a() / g, p);
    const double y = std::pow(pair.b() / g, p);
    return g * std::pow(evaluate(kind, PositivePair(x, y)), 1.0 / p);
}

double hyperbolic_form(const MeanKind& kind, double t)
{
    if (!std::isfinite(t)) {
        throw DomainError("hyperbolic_form: t must be finite");
    }
    switch (kind.family) {
    case MeanFamily::Geometric:
        return 1.0;
    case MeanFamily::Arithmetic:
        return std::cosh(t);
    case MeanFamily::Power:
        return std::pow(std::cosh(kind.order * t), 1.0 / kind.order);
    case MeanFamily::Logarithmic:
        if (std::abs(2 * t) < kNearDiagonal) {
            return sinhc_near_zero(t);
        }
        return generic::sinhc(t);
    case MeanFamily::Identric:
        return std::exp(generic::identric_exponent(t));
    case MeanFamily::ToaderQi:
        return bessel_i0(t);
    case MeanFamily::AGM:
    case MeanFamily::Toader:
        break;
    }
    throw UnsupportedKind("no hyperbolic form for mean kind " + kind.name());
}

} // namespace tqmean
