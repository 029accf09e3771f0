#ifndef TQMEAN_QUADRATURE_HPP
#define TQMEAN_QUADRATURE_HPP

#include <cmath>
#include <string>
#include <vector>

#include "tqmean/error.hpp"

namespace tqmean {

struct QuadratureConfig {
    int base_nodes = 64;
    int max_refinements = 12;
    double tolerance = 1e-13;

    /// Throws DomainError unless base_nodes >= 2, max_refinements >= 0, tolerance > 0.
    void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes by Newton iteration on the Legendre three-term recurrence.
GaussLegendreRule make_gauss_legendre(int n);

/// The 64-point rule, built once.
const GaussLegendreRule& gauss_legendre_64();

struct QuadratureResult {
    double value = 0.0;
    double previous = 0.0;  ///< estimate at the previous refinement level
    int refinements = 0;    ///< panels used = 2^refinements
};

/// Composite Gauss-Legendre on [lo, hi]. Level k splits the interval into 2^k
/// panels of the base rule; iteration stops once two successive levels agree
/// to cfg.tolerance relatively. Throws NonConvergence after cfg.max_refinements.
template <class F>
QuadratureResult integrate(F&& f, double lo, double hi, const QuadratureConfig& cfg)
{
    cfg.validate();
    GaussLegendreRule custom;
    const GaussLegendreRule* rule = &gauss_legendre_64();
    if (cfg.base_nodes != 64) {
        custom = make_gauss_legendre(cfg.base_nodes);
        rule = &custom;
    }
    const auto level = [&](int k) {
        const long panels = 1L << k;
        const double width = (hi - lo) / static_cast<double>(panels);
        double total = 0.0;
        for (long p = 0; p < panels; ++p) {
            const double mid = lo + (static_cast<double>(p) + 0.5) * width;
            const double half = 0.5 * width;
            double panel = 0.0;
            for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
                panel += rule->weights[i] * f(mid + half * rule->nodes[i]);
            }
            total += panel * half;
        }
        return total;
    };

    QuadratureResult result;
    result.value = level(0);
    for (int k = 1; k <= cfg.max_refinements; ++k) {
        result.previous = result.value;
        result.value = level(k);
        result.refinements = k;
        if (std::abs(result.value - result.previous) <= cfg.tolerance * std::abs(result.value)) {
            return result;
        }
    }
    throw NonConvergence("composite Gauss-Legendre did not converge after "
                         + std::to_string(cfg.max_refinements) + " refinements");
}

} // namespace tqmean

#endif
