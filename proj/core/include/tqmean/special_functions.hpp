#ifndef TQMEAN_SPECIAL_FUNCTIONS_HPP
#define TQMEAN_SPECIAL_FUNCTIONS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "tqmean/quadrature.hpp"
#include "tqmean/rational.hpp"

namespace tqmean {

struct SeriesConfig {
    double tolerance = 1e-15;
    int max_terms = 500;

    /// Throws DomainError unless tolerance > 0 and max_terms >= 1.
    void validate() const;
};

/// Sum_{n>=0} t^{2n} / (2^{2n} n!^2), stopped once the next term falls below
/// tolerance times the partial sum. Throws NonConvergence after max_terms.
double i0_series(double t, const SeriesConfig& cfg = {});

/// (2/pi) * integral_0^{pi/2} cosh(t cos(theta)) dtheta.
double i0_quadrature(double t, const QuadratureConfig& cfg = {});

/// e^{-t} I0(t) = (2/pi) * integral_0^{pi/2} exp(-2t sin^2(theta)) dtheta, t >= 0.
/// The integrand stays in (0, 1], so large t cannot overflow.
double i0_scaled(double t, const QuadratureConfig& cfg = {});

/// Arguments above this use the scaled representation.
inline constexpr double kLargeArgument = 30.0;

/// I0(t) for production use: series up to kLargeArgument, e^{|t|} i0_scaled beyond.
double bessel_i0(double t);

/// e^{-|t|} I0(t): series below kLargeArgument, quadrature beyond.
double bessel_i0_scaled(double t);

/// I0(t) - 1 summed from the t^2 term, free of cancellation for small t.
double bessel_i0_minus_one(double t);

enum class CoeffKind {
    I0,
    I0Squared,
    I0Fourth,
    CoshSinh3,    ///< cosh(t) (sinh(t)/t)^3
    VSequence,    ///< I0^4 - cosh(t)(sinh(t)/t)^3
    Sinh2tOver2t, ///< sinh(2t)/(2t)
    SinhOverT,    ///< sinh(t)/t
    Cosh,
    Derived,      ///< built from other tables (differences, shifts)
};

std::string_view to_string(CoeffKind kind);

/// Coefficients of an even power series: entry n multiplies t^{2n}.
struct CoeffTable {
    CoeffKind kind = CoeffKind::Derived;
    std::vector<Rational> coefficients;

    std::size_t size() const { return coefficients.size(); }
    const Rational& operator[](std::size_t n) const { return coefficients[n]; }
};

/// 1 / (2^{2n} n!^2).
CoeffTable i0_coeffs(int n_max);
/// (2n)! / (2^{2n} n!^4), the closed form of the Cauchy square of i0_coeffs.
CoeffTable i0_squared_coeffs(int n_max);
/// Cauchy square of i0_squared_coeffs.
CoeffTable i0_fourth_coeffs(int n_max);
/// (2^{4n+3} - 2^{2n+1}) / (2n+3)!.
CoeffTable cosh_sinh3_coeffs(int n_max);
/// i0_fourth_coeffs - cosh_sinh3_coeffs, termwise.
CoeffTable v_sequence(int n_max);
/// 2^{2n} / (2n+1)!.
CoeffTable sinh2t_over_2t_coeffs(int n_max);
/// 1 / (2n+1)!.
CoeffTable sinh_over_t_coeffs(int n_max);
/// 1 / (2n)!.
CoeffTable cosh_coeffs(int n_max);

/// Parses a name produced by to_string(CoeffKind); "derived" is rejected.
/// Throws UnsupportedKind.
CoeffKind parse_coeff_kind(std::string_view name);
/// Dispatches to the table builder for `kind`.
CoeffTable coeff_table(CoeffKind kind, int n_max);

/// c_n = sum_{k=0}^{n} a_k b_{n-k}, for n up to the shorter length.
std::vector<Rational> cauchy_product(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// (sum a_n t^{2n}) / (sum b_n t^{2n}) with both sums truncated by the same
/// relative criterion. Throws DomainError if some b_n <= 0 and NonConvergence
/// if the tables run out before the criterion is met.
double power_series_ratio(const CoeffTable& numer, const CoeffTable& denom, double t,
                          const SeriesConfig& cfg = {});

} // namespace tqmean

#endif
