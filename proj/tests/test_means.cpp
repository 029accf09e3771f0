#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tqmean/error.hpp"
#include "tqmean/means.hpp"
#include "tqmean/rng.hpp"
#include "tqmean/special_functions.hpp"

using namespace tqmean;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<MeanKind> all_kinds()
{
    return {MeanKind::geometric(), MeanKind::arithmetic(), MeanKind::power(-1.5), MeanKind::power(0.5),
            MeanKind::power(2.25), MeanKind::logarithmic(), MeanKind::identric(), MeanKind::agm(),
            MeanKind::toader(), MeanKind::toader_qi()};
}

std::vector<MeanKind> kinds_with_hyperbolic_form()
{
    return {MeanKind::geometric(), MeanKind::arithmetic(), MeanKind::power(-1.5), MeanKind::power(0.5),
            MeanKind::power(2.25), MeanKind::logarithmic(), MeanKind::identric(), MeanKind::toader_qi()};
}

double rel(double x, double y)
{
    return std::abs(x - y) / std::abs(y);
}

// Composite trapezoid with n panels over [0, pi/2]; spectrally accurate for
// these smooth even periodic integrands.
template <class F>
double trapezoid(F&& f, int n)
{
    const double h = kPi / 2 / n;
    double s = 0.5 * (f(0.0) + f(kPi / 2));
    for (int i = 1; i < n; ++i) {
        s += f(i * h);
    }
    return s * h;
}

} // namespace

TEST(Means, ElementaryExamples)
{
    EXPECT_DOUBLE_EQ(evaluate(MeanKind::arithmetic(), PositivePair(2, 4)), 3.0);
    const double e2 = std::exp(2.0);
    EXPECT_NEAR(rel(evaluate(MeanKind::logarithmic(), PositivePair(1, e2)), (e2 - 1) / 2), 0.0, 1e-15);
    const PositivePair p(1, 3);
    const double tq = evaluate(MeanKind::toader_qi(), p);
    EXPECT_LT(evaluate(MeanKind::geometric(), p), tq);
    EXPECT_LT(tq, evaluate(MeanKind::arithmetic(), p));
}

TEST(Means, RejectsNonPositiveArguments)
{
    EXPECT_THROW(PositivePair(0, 1), DomainError);
    EXPECT_THROW(PositivePair(1, -2), DomainError);
    EXPECT_THROW(PositivePair(std::nan(""), 1), DomainError);
    EXPECT_THROW(PositivePair(1, INFINITY), DomainError);
}

TEST(Means, KindParsingAndNames)
{
    for (const MeanKind& k : all_kinds()) {
        EXPECT_EQ(MeanKind::parse(k.name()), k) << k.name();
    }
    EXPECT_EQ(MeanKind::parse("toader-qi"), MeanKind::toader_qi());
    EXPECT_EQ(MeanKind::power(0), MeanKind::geometric());
    EXPECT_EQ(MeanKind::power(1), MeanKind::arithmetic());
    EXPECT_EQ(MeanKind::parse("power:0.75").order, 0.75);
    EXPECT_THROW(MeanKind::parse("power:"), DomainError);
    EXPECT_THROW(MeanKind::parse("power:1x"), DomainError);
    EXPECT_THROW(MeanKind::parse("median"), DomainError);
}

TEST(Means, DiagonalReturnsTheArgument)
{
    for (const MeanKind& k : all_kinds()) {
        EXPECT_NEAR(evaluate(k, PositivePair(2.5, 2.5)), 2.5, 1e-15) << k.name();
    }
}

TEST(Agm, Examples)
{
    EXPECT_DOUBLE_EQ(agm(PositivePair(5, 5)), 5.0);
    EXPECT_NEAR(agm(PositivePair(1, 2)), 1.4567910310469068692, 2e-16);
    EXPECT_LT(evaluate(MeanKind::logarithmic(), PositivePair(1, 2)), agm(PositivePair(1, 2)));
}

TEST(Agm, EqualsEllipticIntegralForm)
{
    // AGM(a,b) = pi / (2 * integral of 1/sqrt(a^2 cos^2 + b^2 sin^2))
    for (auto [a, b] : {std::pair{1.0, 2.0}, {0.3, 7.0}, {1.0, 100.0}}) {
        const double integral = trapezoid(
            [a, b](double th) {
                const double c = std::cos(th), s = std::sin(th);
                return 1.0 / std::sqrt(a * a * c * c + b * b * s * s);
            },
            200000);
        EXPECT_LT(rel(agm(PositivePair(a, b)), kPi / (2 * integral)), 1e-12) << a << "," << b;
    }
}

TEST(Toader, Examples)
{
    EXPECT_NEAR(toader_mean(PositivePair(3, 3)), 3.0, 1e-15);
    const PositivePair p(1, 4);
    const double t = toader_mean(p);
    EXPECT_LT(evaluate(MeanKind::power(1.5), p), t);
    EXPECT_LT(t, evaluate(MeanKind::power(std::numbers::ln2 / std::log(kPi / 2)), p));
    EXPECT_NEAR(t, 2.7305964588867234324, 1e-14);
}

TEST(Toader, MatchesMillionPointTrapezoid)
{
    const double oracle = 2 / kPi * trapezoid(
                                        [](double th) {
                                            const double c = std::cos(th), s = std::sin(th);
                                            return std::sqrt(c * c + 4 * s * s);
                                        },
                                        1000000);
    EXPECT_NEAR(toader_mean(PositivePair(1, 2)), oracle, 1e-10);
    EXPECT_NEAR(toader_mean(PositivePair(1, 2)), 1.5419644251900400365, 1e-14);
}

TEST(ToaderQi, Examples)
{
    EXPECT_NEAR(tq_mean(PositivePair(4, 4)), 4.0, 1e-15);
    const double e2 = std::exp(2.0);
    const TqPaths paths = tq_mean_paths(PositivePair(1, e2));
    const double expected = std::numbers::e * 1.2660658777520083356;
    EXPECT_LT(rel(paths.identity, expected), 1e-15);
    EXPECT_LT(rel(paths.quadrature, expected), 1e-13);
    EXPECT_LT(tq_mean(PositivePair(1, 4)), evaluate(MeanKind::power(0.5), PositivePair(1, 4)));
    EXPECT_NEAR(tq_mean(PositivePair(1, 4)), 2.2475371020606676953, 1e-15);
}

TEST(ToaderQi, DualPathConsistency)
{
    Xorshift64Star g(11);
    for (int i = 0; i < 500; ++i) {
        const double a = g.log_uniform(1e-3, 1e3);
        const double b = a * g.log_uniform(1.0 + 1e-9, 1e8);
        const TqPaths p = tq_mean_paths(PositivePair(a, b));
        ASSERT_LT(rel(p.quadrature, p.identity), 1e-10) << a << "," << b;
    }
}

TEST(ToaderQi, VanishesAtTheBoundary)
{
    double prev = tq_mean(PositivePair(1, 1));
    for (int k = 2; k <= 12; k += 2) {
        const double v = tq_mean(PositivePair(std::pow(10.0, -k), 1));
        EXPECT_LT(v, prev) << k;
        prev = v;
        // I0(t) ~ e^t/sqrt(2 pi t) (1 + 1/(8t) + 9/(128t^2)) with t = ln(1/x)/2,
        // so the decay is only logarithmic
        const double t = 0.5 * k * std::numbers::ln10;
        const double asymptotic = (1 + 1 / (8 * t) + 9 / (128 * t * t)) / std::sqrt(2 * kPi * t);
        EXPECT_NEAR(v / asymptotic, 1.0, 2e-2) << k;
    }
}

TEST(Means, SymmetryAndHomogeneity)
{
    Xorshift64Star g(5);
    for (const MeanKind& k : all_kinds()) {
        for (int i = 0; i < 200; ++i) {
            const double a = g.log_uniform(1e-3, 1e3);
            const double b = g.log_uniform(1e-3, 1e3);
            const double m = evaluate(k, PositivePair(a, b));
            ASSERT_LT(rel(evaluate(k, PositivePair(b, a)), m), 1e-13) << k.name();
            for (double lambda : {0.5, 3.0}) {
                ASSERT_LT(rel(evaluate(k, PositivePair(lambda * a, lambda * b)), lambda * m), 1e-13) << k.name();
            }
        }
    }
}

TEST(Means, MeanProperty)
{
    Xorshift64Star g(6);
    for (const MeanKind& k : all_kinds()) {
        for (int i = 0; i < 10000; ++i) {
            const double a = g.log_uniform(1e-3, 1e3);
            const double b = g.log_uniform(1e-3, 1e3);
            const double m = evaluate(k, PositivePair(a, b));
            ASSERT_GE(m, std::min(a, b) * (1 - 1e-15)) << k.name();
            ASSERT_LE(m, std::max(a, b) * (1 + 1e-15)) << k.name();
        }
    }
}

TEST(Hyperbolic, Examples)
{
    EXPECT_EQ(hyperbolic_form(MeanKind::geometric(), 3.7), 1.0);
    EXPECT_NEAR(hyperbolic_form(MeanKind::logarithmic(), 1e-12), 1.0, 1e-16);
    EXPECT_NEAR(hyperbolic_form(MeanKind::logarithmic(), 0.0), 1.0, 1e-16);
    EXPECT_NEAR(hyperbolic_form(MeanKind::identric(), 1.0), std::exp(1.0 / std::tanh(1.0) - 1.0), 1e-15);
    EXPECT_NEAR(hyperbolic_form(MeanKind::arithmetic(), 2.0), std::cosh(2.0), 1e-15);
    EXPECT_THROW(hyperbolic_form(MeanKind::agm(), 1.0), UnsupportedKind);
    EXPECT_THROW(hyperbolic_form(MeanKind::toader(), 1.0), UnsupportedKind);
}

TEST(Hyperbolic, ReductionIdentity)
{
    Xorshift64Star g(8);
    for (const MeanKind& k : kinds_with_hyperbolic_form()) {
        for (int i = 0; i < 2000; ++i) {
            const double a = g.log_uniform(1e-3, 1e3);
            const double b = a * g.log_uniform(1 + 1e-6, 1e6);
            const PositivePair p(a, b);
            const double t = HalfLogParam::from_pair(p).t;
            const double m = evaluate(k, p);
            ASSERT_LT(rel(std::sqrt(a * b) * hyperbolic_form(k, t), m), 1e-12) << k.name() << " " << a << "," << b;
        }
    }
}

TEST(POrder, Examples)
{
    const PositivePair p(1, 4);
    EXPECT_NEAR(p_order(MeanKind::arithmetic(), 1, p), 2.5, 1e-15);
    EXPECT_NEAR(p_order(MeanKind::arithmetic(), 0.5, p), 9.0 / 4.0, 1e-15);
    EXPECT_GT(p_order(MeanKind::logarithmic(), 1.5, PositivePair(1, 2)), agm(PositivePair(1, 2)));
    EXPECT_THROW(p_order(MeanKind::arithmetic(), 0.0, p), DomainError);
}

TEST(POrder, CompositionIdentity)
{
    // M_{p lambda}(a, b) = M_p(a^lambda, b^lambda)^{1/lambda}
    Xorshift64Star g(9);
    for (const MeanKind& k : all_kinds()) {
        for (int i = 0; i < 100; ++i) {
            const double p = g.uniform(1.0 / 3, 3.0);
            const double lambda = g.uniform(1.0 / 3, 3.0);
            const double a = g.log_uniform(0.1, 10);
            const double b = g.log_uniform(0.1, 10);
            const double lhs = p_order(k, p * lambda, PositivePair(a, b));
            const double rhs =
                std::pow(p_order(k, p, PositivePair(std::pow(a, lambda), std::pow(b, lambda))), 1 / lambda);
            ASSERT_LT(rel(lhs, rhs), 1e-12) << k.name();
        }
    }
}

TEST(Means, HighPrecisionAgreesWithDouble)
{
    for (const MeanKind& k : all_kinds()) {
        const double d = evaluate(k, PositivePair(0.7, 5.0));
        const HighPrecision h = evaluate(k, HighPrecision("0.7"), HighPrecision(5));
        EXPECT_LT(rel(d, h.convert_to<double>()), 1e-14) << k.name();
    }
}
