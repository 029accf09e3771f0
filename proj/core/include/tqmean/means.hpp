#ifndef TQMEAN_MEANS_HPP
#define TQMEAN_MEANS_HPP

#include <string>
#include <string_view>

#include "tqmean/precision.hpp"
#include "tqmean/quadrature.hpp"

namespace tqmean {

/// Two strictly positive, finite mean arguments. No ordering is implied.
class PositivePair {
public:
    /// Throws DomainError unless a > 0, b > 0 and both are finite.
    PositivePair(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }
    double min() const { return a_ < b_ ? a_ : b_; }
    double max() const { return a_ < b_ ? b_ : a_; }

private:
    double a_;
    double b_;
};

/// t = (1/2) ln(b/a).
struct HalfLogParam {
    double t = 0.0;

    static HalfLogParam from_pair(const PositivePair& pair);
};

enum class MeanFamily { Geometric, Arithmetic, Power, Logarithmic, Identric, AGM, Toader, ToaderQi };

struct MeanKind {
    MeanFamily family = MeanFamily::Arithmetic;
    double order = 1.0; ///< only meaningful for Power

    static MeanKind geometric() { return {MeanFamily::Geometric, 0.0}; }
    static MeanKind arithmetic() { return {MeanFamily::Arithmetic, 1.0}; }
    /// power(0) collapses to geometric(), power(1) to arithmetic().
    static MeanKind power(double p);
    static MeanKind logarithmic() { return {MeanFamily::Logarithmic, 0.0}; }
    static MeanKind identric() { return {MeanFamily::Identric, 0.0}; }
    static MeanKind agm() { return {MeanFamily::AGM, 0.0}; }
    static MeanKind toader() { return {MeanFamily::Toader, 0.0}; }
    static MeanKind toader_qi() { return {MeanFamily::ToaderQi, 0.0}; }

    /// Accepts geometric, arithmetic, logarithmic, identric, agm, toader,
    /// toader-qi and power:<p>. Throws DomainError on anything else.
    static MeanKind parse(std::string_view text);
    std::string name() const;

    friend bool operator==(const MeanKind&, const MeanKind&) = default;
};

/// Double-precision value of the mean. AGM uses agm(pair), Toader uses
/// quadrature and ToaderQi goes through tq_mean.
double evaluate(const MeanKind& kind, const PositivePair& pair);

/// Same mean at 80 digits, for re-checking tight margins. Toader uses
/// Legendre's AGM form here, ToaderQi the Bessel series.
HighPrecision evaluate(const MeanKind& kind, const HighPrecision& a, const HighPrecision& b);

/// Gauss's arithmetic-geometric mean, iterated until |a_n - b_n| < tol * a_n.
double agm(const PositivePair& pair, double tol = 1e-15);

/// (2/pi) * integral_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2) by quadrature.
double toader_mean(const PositivePair& pair, const QuadratureConfig& cfg = {});

struct TqPaths {
    double identity;   ///< sqrt(ab) I0(t)
    double quadrature; ///< (2/pi) * integral a^{cos^2} b^{sin^2}
};

/// Both routes to the Toader-Qi mean, without the consistency check.
TqPaths tq_mean_paths(const PositivePair& pair, const QuadratureConfig& cfg = {});

/// Toader-Qi mean. Returns the Bessel identity route after checking it against
/// direct quadrature; throws ConsistencyError if they differ by more than
/// 100 * cfg.tolerance relatively.
double tq_mean(const PositivePair& pair, const QuadratureConfig& cfg = {});

/// M(a^p, b^p)^{1/p}. Throws DomainError for p == 0.
double p_order(const MeanKind& kind, double p, const PositivePair& pair);

/// M(a,b)/sqrt(ab) as a function of t = (1/2) ln(b/a). Throws UnsupportedKind
/// for AGM and Toader, which have no closed hyperbolic form.
double hyperbolic_form(const MeanKind& kind, double t);

} // namespace tqmean

#endif
