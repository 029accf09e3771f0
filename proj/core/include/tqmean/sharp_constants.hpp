#ifndef TQMEAN_SHARP_CONSTANTS_HPP
#define TQMEAN_SHARP_CONSTANTS_HPP

#include <string>
#include <vector>

namespace tqmean {

enum class RatioId { R0, R1, R2, R3, R4 };

/// One of the five proof ratios. parameter is p for R3 and theta for R4.
///   R0 = I0^2 / (sinh 2t / 2t)
///   R1 = (I0^2 - sinh t/t) / ((cosh t - 1) sinh t/t)
///   R2 = (cosh t - I0) / (cosh t - sinh t/t)
///   R3 = (I0 - 1) / ((cosh pt - 1)/p^2)
///   R4 = (cosh(t cos theta) + cosh(t sin theta)) / (2 I0)
struct RatioFunction {
    RatioId id = RatioId::R0;
    double parameter = 0.0;

    static RatioFunction r0() { return {RatioId::R0, 0.0}; }
    static RatioFunction r1() { return {RatioId::R1, 0.0}; }
    static RatioFunction r2() { return {RatioId::R2, 0.0}; }
    static RatioFunction r3(double p) { return {RatioId::R3, p}; }
    static RatioFunction r4(double theta) { return {RatioId::R4, theta}; }

    std::string name() const;
};

/// Thresholds between the small-t series branch, the direct branch and the
/// scaled large-t branch.
inline constexpr double kRatioSmallT = 1e-3;
inline constexpr double kRatioLargeT = 30.0;

/// Value of the ratio at t >= 0; t = 0 returns the limit
/// (R0: 1, R1: 2/3, R2: 3/4, R3: 1/2, R4: 1). Throws DomainError for t < 0,
/// non-finite t, or p <= 0 in R3.
double ratio_eval(const RatioFunction& f, double t);

struct SolverResult {
    double location = 0.0;
    double value = 0.0;
    double residual = 0.0; ///< width of the final bracket
    int iterations = 0;
    bool converged = false;
};

/// Maximiser t0 of R1 on (0, inf) and delta0 = R1(t0). A 100-point log scan
/// over [1e-3, 50] brackets the maximum and golden-section search refines it
/// to `tol` in location. Ratio values inside the search are taken at 80
/// digits because R1 is flat at its peak. Throws NonConvergence.
SolverResult find_t0_delta0(double tol = 1e-10);

/// Minimiser t0(p) of R3(.; p) on (0, inf) and lambda0(p) = R3(t0(p)).
/// Requires sqrt(3)/2 < p < 1 (DomainError otherwise).
SolverResult find_lambda0(double p, double tol = 1e-10);

/// find_t0_delta0() at the default tolerance, computed once per process.
const SolverResult& cached_t0_delta0();

enum class Shape { Increasing, Decreasing, UnimodalUp, UnimodalDown, Irregular };

std::string to_string(Shape shape);

struct MonotonicityReport {
    Shape shape = Shape::Irregular;
    int turning_index = -1; ///< grid index of the extremum for unimodal shapes
    double turning_location = 0.0;
    std::vector<double> values;
};

/// Samples f on a strictly increasing positive grid and classifies the
/// sequence of successive differences. Throws DomainError for a bad grid.
MonotonicityReport monotonicity_scan(const RatioFunction& f, const std::vector<double>& grid);

/// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

} // namespace tqmean

#endif
