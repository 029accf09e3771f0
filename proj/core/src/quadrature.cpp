#include "tqmean/quadrature.hpp"

#include <numbers>

namespace tqmean {

void QuadratureConfig::validate() const
{
    if (base_nodes < 2) {
        throw DomainError("QuadratureConfig: base_nodes must be >= 2");
    }
    if (max_refinements < 0) {
        throw DomainError("QuadratureConfig: max_refinements must be >= 0");
    }
    if (!(tolerance > 0.0)) {
        throw DomainError("QuadratureConfig: tolerance must be > 0");
    }
}

GaussLegendreRule make_gauss_legendre(int n)
{
    if (n < 2) {
        throw DomainError("Gauss-Legendre rule needs at least 2 nodes");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi's initial guess for the i-th root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Re-evaluate the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return rule;
}

const GaussLegendreRule& gauss_legendre_64()
{
    static const GaussLegendreRule rule = make_gauss_legendre(64);
    return rule;
}

} // namespace tqmean
