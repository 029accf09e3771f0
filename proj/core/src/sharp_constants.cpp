#include "tqmean/sharp_constants.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "tqmean/error.hpp"
#include "tqmean/generic.hpp"
#include "tqmean/precision.hpp"
#include "tqmean/special_functions.hpp"

namespace tqmean {

namespace {

/// First three non-constant coefficients (of t^2, t^4, t^6) of a numerator and
/// a denominator that both vanish at t = 0.
struct SmallSeries {
    std::array<double, 3> num{};
    std::array<double, 3> den{};

    double operator()(double t) const
    {
        const double x = t * t;
        return (num[0] + x * (num[1] + x * num[2])) / (den[0] + x * (den[1] + x * den[2]));
    }
};

const SmallSeries& r1_series()
{
    static const SmallSeries s = [] {
        const CoeffTable sq = i0_squared_coeffs(3);
        const CoeffTable sinhc = sinh_over_t_coeffs(3);
        std::vector<Rational> cosh_m1 = cosh_coeffs(3).coefficients;
        cosh_m1[0] = 0;
        const std::vector<Rational> den = cauchy_product(cosh_m1, sinhc.coefficients);
        SmallSeries out;
        for (std::size_t k = 0; k < 3; ++k) {
            out.num[k] = to_double(sq[k + 1] - sinhc[k + 1]);
            out.den[k] = to_double(den[k + 1]);
        }
        return out;
    }();
    return s;
}

const SmallSeries& r2_series()
{
    static const SmallSeries s = [] {
        const CoeffTable i0 = i0_coeffs(3);
        const CoeffTable ch = cosh_coeffs(3);
        const CoeffTable sinhc = sinh_over_t_coeffs(3);
        SmallSeries out;
        for (std::size_t k = 0; k < 3; ++k) {
            out.num[k] = to_double(ch[k + 1] - i0[k + 1]);
            out.den[k] = to_double(ch[k + 1] - sinhc[k + 1]);
        }
        return out;
    }();
    return s;
}

SmallSeries r3_series(double p)
{
    const CoeffTable i0 = i0_coeffs(3);
    const CoeffTable ch = cosh_coeffs(3);
    SmallSeries out;
    for (std::size_t k = 0; k < 3; ++k) {
        out.num[k] = to_double(i0[k + 1]);
        out.den[k] = std::pow(p, 2.0 * static_cast<double>(k)) * to_double(ch[k + 1]);
    }
    return out;
}

template <class Real>
Real i0_minus_one(const Real& t)
{
    return generic::i0_series_from(t, 1, generic::epsilon<Real>(), 100000);
}

// Numerators and denominators are assembled from I0 - 1, sinh(t)/t - 1 and
// cosh(t) - 1, whose leading t^2 coefficients differ, so no digits cancel.
template <class Real>
Real r1_direct(const Real& t)
{
    const Real i0m1 = i0_minus_one(t);
    const Real sm1 = generic::sinhc_minus_one(t);
    return (i0m1 * (i0m1 + 2) - sm1) / (generic::cosh_minus_one(t) * (sm1 + 1));
}

template <class Real>
Real r2_direct(const Real& t)
{
    const Real cm1 = generic::cosh_minus_one(t);
    return (cm1 - i0_minus_one(t)) / (cm1 - generic::sinhc_minus_one(t));
}

template <class Real>
Real r3_direct(const Real& t, const Real& p)
{
    return i0_minus_one(t) * p * p / generic::cosh_minus_one(p * t);
}

double ratio_small(const RatioFunction& f, double t)
{
    switch (f.id) {
    case RatioId::R1: return r1_series()(t);
    case RatioId::R2: return r2_series()(t);
    case RatioId::R3: return r3_series(f.parameter)(t);
    default: break;
    }
    return std::nan("");
}

double ratio_direct(const RatioFunction& f, double t)
{
    switch (f.id) {
    case RatioId::R0: {
        const double i0 = bessel_i0(t);
        return i0 * i0 / generic::sinhc(2 * t);
    }
    case RatioId::R1:
        return r1_direct(t);
    case RatioId::R2:
        return r2_direct(t);
    case RatioId::R3:
        return r3_direct(t, f.parameter);
    case RatioId::R4: {
        const double c = std::cos(f.parameter);
        const double s = std::sin(f.parameter);
        return (std::cosh(t * c) + std::cosh(t * s)) / (2 * bessel_i0(t));
    }
    }
    return std::nan("");
}

/// Everything multiplied through by e^{-t} (or e^{-2t}) so only decaying
/// exponentials and the scaled Bessel function appear.
double ratio_scaled(const RatioFunction& f, double t)
{
    const double s = bessel_i0_scaled(t);
    const double e1 = std::exp(-t);
    const double e2 = e1 * e1;
    switch (f.id) {
    case RatioId::R0:
        return 4 * t * s * s / (1 - e2 * e2);
    case RatioId::R1: {
        const double num = s * s - (e1 - e1 * e2) / (2 * t);
        const double den = ((1 + e2) / 2 - e1) * (1 - e2) / (2 * t);
        return num / den;
    }
    case RatioId::R2: {
        const double ch = (1 + e2) / 2;
        return (ch - s) / (ch - (1 - e2) / (2 * t));
    }
    case RatioId::R3: {
        const double p = f.parameter;
        const double ch = (std::exp((p - 1) * t) + std::exp(-(p + 1) * t)) / 2;
        return (s - e1) * p * p / (ch - e1);
    }
    case RatioId::R4: {
        const double c = std::cos(f.parameter);
        const double sn = std::sin(f.parameter);
        const double num = std::exp((c - 1) * t) + std::exp(-(c + 1) * t)
            + std::exp((sn - 1) * t) + std::exp(-(sn + 1) * t);
        return num / (4 * s);
    }
    }
    return std::nan("");
}

double ratio_limit(RatioId id)
{
    switch (id) {
    case RatioId::R0: return 1.0;
    case RatioId::R1: return 2.0 / 3.0;
    case RatioId::R2: return 0.75;
    case RatioId::R3: return 0.5;
    case RatioId::R4: return 1.0;
    }
    return std::nan("");
}

/// Golden-section search for an extremum of f on [lo, hi]; f may return
/// double or HighPrecision.
template <class F>
SolverResult golden_section(F&& f, double lo, double hi, double tol, bool maximize)
{
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    auto fc = f(c);
    auto fd = f(d);
    const auto better = [maximize](const auto& x, const auto& y) { return maximize ? x > y : x < y; };
    SolverResult r;
    constexpr int kMaxIterations = 500;
    while (b - a >= tol && r.iterations < kMaxIterations) {
        if (better(fc, fd)) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++r.iterations;
    }
    r.location = (a + b) / 2;
    r.residual = b - a;
    r.converged = r.residual < tol;
    if (!r.converged) {
        throw NonConvergence("golden-section search did not reach tolerance");
    }
    return r;
}

/// Bracket around the extremum of a 100-point log scan on [lo, hi].
struct Bracket {
    double lo;
    double hi;
    bool at_upper_edge;
};

template <class F>
Bracket scan_bracket(F&& f, double lo, double hi, bool maximize)
{
    const std::vector<double> grid = log_grid(lo, hi, 100);
    std::size_t best = 0;
    double best_value = f(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double v = f(grid[i]);
        if (maximize ? v > best_value : v < best_value) {
            best = i;
            best_value = v;
        }
    }
    if (best == 0) {
        throw NonConvergence("extremum lies at the lower end of the scan range");
    }
    const bool edge = best + 1 == grid.size();
    return {grid[best - 1], grid[edge ? best : best + 1], edge};
}

void check_tol(double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("solver tolerance must be > 0");
    }
}

} // namespace

std::string RatioFunction::name() const
{
    switch (id) {
    case RatioId::R0: return "R0";
    case RatioId::R1: return "R1";
    case RatioId::R2: return "R2";
    case RatioId::R3: return "R3";
    case RatioId::R4: return "R4";
    }
    return "R?";
}

double ratio_eval(const RatioFunction& f, double t)
{
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("ratio_eval: t must be finite and >= 0");
    }
    if (f.id == RatioId::R3 && !(f.parameter > 0.0)) {
        throw DomainError("ratio_eval: R3 needs p > 0");
    }
    if (t == 0.0) {
        return ratio_limit(f.id);
    }
    if (t < kRatioSmallT && f.id != RatioId::R0 && f.id != RatioId::R4) {
        return ratio_small(f, t);
    }
    if (t > kRatioLargeT) {
        return ratio_scaled(f, t);
    }
    return ratio_direct(f, t);
}

SolverResult find_t0_delta0(double tol)
{
    check_tol(tol);
    const auto f = [](double t) { return ratio_eval(RatioFunction::r1(), t); };
    const Bracket br = scan_bracket(f, 1e-3, 50.0, true);
    if (br.at_upper_edge) {
        throw NonConvergence("find_t0_delta0: maximum not interior to the scan range");
    }
    const auto f_hp = [](double t) { return r1_direct(HighPrecision(t)); };
    SolverResult r = golden_section(f_hp, br.lo, br.hi, tol, true);
    r.value = static_cast<double>(r1_direct(HighPrecision(r.location)));
    return r;
}

SolverResult find_lambda0(double p, double tol)
{
    check_tol(tol);
    if (!(p > std::numbers::sqrt3 / 2 && p < 1.0)) {
        throw DomainError("find_lambda0: p must lie in (sqrt(3)/2, 1)");
    }
    const RatioFunction r3 = RatioFunction::r3(p);
    const auto f = [&r3](double t) { return ratio_eval(r3, t); };
    double hi = 50.0;
    Bracket br = scan_bracket(f, 1e-3, hi, false);
    while (br.at_upper_edge && hi < 1e4) {
        hi *= 4;
        br = scan_bracket(f, 1e-3, hi, false);
    }
    if (br.at_upper_edge) {
        throw NonConvergence("find_lambda0: minimum not found below t = 1e4");
    }
    const HighPrecision p_hp(p);
    const auto f_hp = [&p_hp](double t) { return r3_direct(HighPrecision(t), p_hp); };
    SolverResult r = golden_section(f_hp, br.lo, br.hi, tol, false);
    r.value = static_cast<double>(r3_direct(HighPrecision(r.location), p_hp));
    return r;
}

const SolverResult& cached_t0_delta0()
{
    static const SolverResult r = find_t0_delta0();
    return r;
}

std::string to_string(Shape shape)
{
    switch (shape) {
    case Shape::Increasing: return "increasing";
    case Shape::Decreasing: return "decreasing";
    case Shape::UnimodalUp: return "unimodal-up";
    case Shape::UnimodalDown: return "unimodal-down";
    case Shape::Irregular: return "irregular";
    }
    return "irregular";
}

MonotonicityReport monotonicity_scan(const RatioFunction& f, const std::vector<double>& grid)
{
    if (grid.size() < 2) {
        throw DomainError("monotonicity_scan: grid needs at least two points");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw DomainError("monotonicity_scan: grid must be positive and strictly increasing");
        }
    }
    MonotonicityReport rep;
    rep.values.reserve(grid.size());
    for (double t : grid) {
        rep.values.push_back(ratio_eval(f, t));
    }
    // Sign changes of successive differences; a zero difference counts as irregular.
    std::vector<int> signs;
    for (std::size_t i = 1; i < rep.values.size(); ++i) {
        const double d = rep.values[i] - rep.values[i - 1];
        signs.push_back(d > 0 ? 1 : (d < 0 ? -1 : 0));
    }
    std::size_t changes = 0;
    std::size_t turn = 0;
    bool has_zero = false;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        has_zero = has_zero || signs[i] == 0;
        if (i > 0 && signs[i] != signs[i - 1]) {
            ++changes;
            turn = i;
        }
    }
    if (has_zero || changes > 1) {
        rep.shape = Shape::Irregular;
    } else if (changes == 0) {
        rep.shape = signs[0] > 0 ? Shape::Increasing : Shape::Decreasing;
    } else {
        rep.shape = signs[0] > 0 ? Shape::UnimodalUp : Shape::UnimodalDown;
        rep.turning_index = static_cast<int>(turn);
        rep.turning_location = grid[turn];
    }
    return rep;
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw DomainError("log_grid: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> g(static_cast<std::size_t>(n));
    const double llo = std::log(lo);
    const double step = (std::log(hi) - llo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = std::exp(llo + step * i);
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace tqmean
