#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tqmean/error.hpp"
#include "tqmean/sharp_constants.hpp"
#include "tqmean/special_functions.hpp"

using namespace tqmean;

namespace {

Rational i0_coefficient(unsigned n)
{
    const Integer f = factorial(n);
    return Rational(Integer(1), pow2(2 * n) * f * f);
}

Rational sinh_coefficient(unsigned k) // [t^k] sinh t
{
    return k % 2 == 1 ? Rational(Integer(1), factorial(k)) : Rational(0);
}

Rational cosh_coefficient(unsigned k)
{
    return k % 2 == 0 ? Rational(Integer(1), factorial(k)) : Rational(0);
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::vector<Rational> c(std::min(a.size(), b.size()));
    for (std::size_t n = 0; n < c.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            c[n] += a[k] * b[n - k];
        }
    }
    return c;
}

double log_point(int i, int count, double lo, double hi)
{
    return lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
}

// 40-digit reference values of I0 from an independent arbitrary-precision library.
struct Reference {
    double t;
    double value;
};
constexpr Reference kI0[] = {
    {0.5, 1.0634833707413235193}, {1.0, 1.2660658777520083356}, {2.0, 2.2795853023360672674},
    {5.0, 27.239871823604446895}, {20.0, 43558282.559553533272}, {30.0, 781672297823.97748972},
};

} // namespace

TEST(I0Series, Zero)
{
    EXPECT_EQ(i0_series(0.0), 1.0);
}

TEST(I0Series, MatchesExactPartialSumAtOne)
{
    Rational sum = 0;
    for (unsigned n = 0; n < 30; ++n) {
        sum += i0_coefficient(n);
    }
    EXPECT_NEAR(i0_series(1.0), to_double(sum), 1e-15);
}

TEST(I0Series, ReferenceValues)
{
    for (const Reference& r : kI0) {
        EXPECT_NEAR(i0_series(r.t) / r.value, 1.0, 2e-15) << r.t;
        EXPECT_NEAR(i0_quadrature(r.t) / r.value, 1.0, 1e-13) << r.t;
    }
}

TEST(I0Series, BetweenOneAndCosh)
{
    const double v = i0_series(2.0);
    EXPECT_GT(v, 1.0);
    EXPECT_LT(v, std::cosh(2.0));
}

TEST(I0Series, Even)
{
    for (double t : {0.1, 1.0, 7.5, 29.0}) {
        EXPECT_EQ(i0_series(t), i0_series(-t));
        EXPECT_EQ(bessel_i0(t), bessel_i0(-t));
    }
}

TEST(I0Series, NonConvergenceWhenTermBudgetTooSmall)
{
    SeriesConfig cfg;
    cfg.max_terms = 3;
    EXPECT_THROW(i0_series(10.0, cfg), NonConvergence);
    cfg = {};
    cfg.tolerance = -1;
    EXPECT_THROW(i0_series(1.0, cfg), DomainError);
}

TEST(I0Quadrature, Zero)
{
    EXPECT_NEAR(i0_quadrature(0.0), 1.0, 1e-15);
}

TEST(I0Quadrature, AgreesWithSeriesOnLogGrid)
{
    for (int i = 0; i < 100; ++i) {
        const double t = log_point(i, 100, 1e-4, 30.0);
        const double s = i0_series(t);
        EXPECT_LT(std::abs(i0_quadrature(t) - s) / s, 1e-12) << t;
    }
    for (double t : {0.5, 1.0, 5.0, 20.0}) {
        EXPECT_LT(std::abs(i0_quadrature(t) - i0_series(t)) / i0_series(t), 1e-12);
    }
}

TEST(I0Quadrature, ExceedsSinhOverT)
{
    EXPECT_GT(i0_quadrature(3.0), std::sinh(3.0) / 3.0);
}

TEST(I0Scaled, Values)
{
    EXPECT_NEAR(i0_scaled(0.0), 1.0, 1e-15);
    const double s4 = i0_scaled(4.0);
    EXPECT_GT(s4, 1.0 / 9.0);
    EXPECT_LT(s4, 1.0 / 3.0);
    EXPECT_NEAR(i0_scaled(500.0) / 0.017845706500153167237, 1.0, 1e-12);
    EXPECT_THROW(i0_scaled(-1.0), DomainError);
}

TEST(I0Scaled, ConsistentWithSeries)
{
    for (int i = 0; i <= 100; ++i) {
        const double t = 0.25 * i;
        const double s = i0_series(t);
        EXPECT_LT(std::abs(i0_scaled(t) * std::exp(t) - s) / s, 1e-10) << t;
    }
}

TEST(I0Scaled, Asymptotic)
{
    const double t = 500.0;
    EXPECT_LT(std::abs(std::sqrt(t) * i0_scaled(t) - 1.0 / std::sqrt(2 * std::numbers::pi)), 1e-3);
}

TEST(I0Production, SwitchesContinuously)
{
    const double below = bessel_i0_scaled(std::nextafter(kLargeArgument, 0.0));
    const double above = bessel_i0_scaled(std::nextafter(kLargeArgument, 100.0));
    EXPECT_NEAR(below / above, 1.0, 1e-13);
    EXPECT_TRUE(std::isfinite(bessel_i0_scaled(700.0)));
    // t^2/4 + t^4/64 at t = 1e-5
    EXPECT_NEAR(bessel_i0_minus_one(1e-5), 2.5e-11 + 1.5625e-22, 1e-26);
}

TEST(CoeffTables, I0ClosedForm)
{
    const CoeffTable t = i0_coeffs(40);
    ASSERT_EQ(t.size(), 41u);
    EXPECT_EQ(t.kind, CoeffKind::I0);
    for (unsigned n = 0; n <= 40; ++n) {
        ASSERT_EQ(t[n], i0_coefficient(n));
    }
}

TEST(CoeffTables, I0SquaredEqualsConvolutionExactly)
{
    const CoeffTable sq = i0_squared_coeffs(50);
    std::vector<Rational> c;
    for (unsigned n = 0; n <= 50; ++n) {
        c.push_back(i0_coefficient(n));
    }
    const std::vector<Rational> conv = convolve(c, c);
    for (unsigned n = 0; n <= 50; ++n) {
        const Integer f = factorial(n);
        ASSERT_EQ(sq[n], Rational(factorial(2 * n), pow2(2 * n) * f * f * f * f)) << n;
        ASSERT_EQ(sq[n], conv[n]) << n;
    }
    EXPECT_EQ(sq[0], 1);
    EXPECT_EQ(sq[1], Rational(1, 2));
    EXPECT_EQ(sq[2], Rational(3, 32));
    EXPECT_EQ(cauchy_product(i0_coeffs(10).coefficients, i0_coeffs(10).coefficients), i0_squared_coeffs(10).coefficients);
}

TEST(CoeffTables, I0FourthIsSquareOfSquare)
{
    const CoeffTable sq = i0_squared_coeffs(25);
    const CoeffTable fourth = i0_fourth_coeffs(25);
    const std::vector<Rational> conv = convolve(sq.coefficients, sq.coefficients);
    for (unsigned n = 0; n <= 25; ++n) {
        ASSERT_EQ(fourth[n], conv[n]) << n;
    }
    EXPECT_EQ(fourth[0], 1);
    EXPECT_EQ(fourth[1], 1);

    const CoeffTable f20 = i0_fourth_coeffs(20);
    double sum = 0.0;
    double power = 1.0;
    for (unsigned n = 0; n <= 20; ++n) {
        sum += to_double(f20[n]) * power;
        power *= 0.09;
    }
    EXPECT_NEAR(sum, std::pow(i0_series(0.3), 4), 1e-13);
}

TEST(CoeffTables, CoshSinhCubedMatchesProductOfSeries)
{
    // entry n is the coefficient of t^{2n+3} in cosh t * sinh^3 t
    const unsigned kmax = 2 * 20 + 4;
    std::vector<Rational> sh, ch;
    for (unsigned k = 0; k < kmax; ++k) {
        sh.push_back(sinh_coefficient(k));
        ch.push_back(cosh_coefficient(k));
    }
    const std::vector<Rational> product = convolve(convolve(convolve(sh, sh), sh), ch);
    const CoeffTable t = cosh_sinh3_coeffs(20);
    for (unsigned n = 0; n <= 20; ++n) {
        ASSERT_EQ(t[n], product[2 * n + 3]) << n;
    }
}

TEST(CoeffTables, VSequence)
{
    const CoeffTable v = v_sequence(50);
    EXPECT_EQ(v[0], 0);
    EXPECT_EQ(v[1], 0);
    EXPECT_EQ(v[2], Rational(3, 80));
    EXPECT_EQ(v[3], Rational(4, 189));
    const CoeffTable fourth = i0_fourth_coeffs(50);
    const CoeffTable cs3 = cosh_sinh3_coeffs(50);
    for (unsigned n = 0; n <= 50; ++n) {
        ASSERT_EQ(v[n], fourth[n] - cs3[n]);
        if (n >= 2) {
            ASSERT_GT(v[n], 0) << n;
        }
    }
}

TEST(CoeffTables, ElementaryTables)
{
    const CoeffTable sh2 = sinh2t_over_2t_coeffs(10);
    const CoeffTable sh = sinh_over_t_coeffs(10);
    const CoeffTable ch = cosh_coeffs(10);
    for (unsigned n = 0; n <= 10; ++n) {
        EXPECT_EQ(sh2[n], Rational(pow2(2 * n), factorial(2 * n + 1)));
        EXPECT_EQ(sh[n], Rational(Integer(1), factorial(2 * n + 1)));
        EXPECT_EQ(ch[n], Rational(Integer(1), factorial(2 * n)));
    }
    EXPECT_THROW(i0_coeffs(-1), DomainError);
}

TEST(CoeffTables, NameDispatch)
{
    for (CoeffKind k : {CoeffKind::I0, CoeffKind::I0Squared, CoeffKind::I0Fourth, CoeffKind::CoshSinh3,
                        CoeffKind::VSequence, CoeffKind::Sinh2tOver2t, CoeffKind::SinhOverT, CoeffKind::Cosh}) {
        EXPECT_EQ(parse_coeff_kind(to_string(k)), k);
        EXPECT_EQ(coeff_table(k, 4).kind, k);
    }
    EXPECT_EQ(coeff_table(CoeffKind::I0Squared, 6).coefficients, i0_squared_coeffs(6).coefficients);
    EXPECT_THROW(parse_coeff_kind("derived"), UnsupportedKind);
    EXPECT_THROW(parse_coeff_kind("bogus"), UnsupportedKind);
}

TEST(PowerSeriesRatio, IdenticalTablesGiveOne)
{
    const CoeffTable t = i0_coeffs(60);
    for (double x : {0.0, 0.5, 3.0}) {
        EXPECT_NEAR(power_series_ratio(t, t, x), 1.0, 1e-15);
    }
}

TEST(PowerSeriesRatio, LeadingCoefficientLimit)
{
    const CoeffTable v = v_sequence(40);
    const CoeffTable sh2 = sinh2t_over_2t_coeffs(40);
    EXPECT_NEAR(power_series_ratio(i0_squared_coeffs(40), sh2, 1e-9), 1.0, 1e-15);
    EXPECT_THROW(power_series_ratio(sh2, v, 0.5), DomainError);
}

TEST(PowerSeriesRatio, I0SquaredOverSinh2tRangeAndMonotone)
{
    const CoeffTable num = i0_squared_coeffs(120);
    const CoeffTable den = sinh2t_over_2t_coeffs(120);
    const double r1 = power_series_ratio(num, den, 1.0);
    EXPECT_GT(r1, 2 / std::numbers::pi);
    EXPECT_LT(r1, 1.0);
    EXPECT_NEAR(r1, ratio_eval(RatioFunction::r0(), 1.0), 1e-14);

    double prev = 2.0;
    for (int i = 1; i <= 200; ++i) {
        const double t = 0.1 * i;
        const double r = power_series_ratio(num, den, t);
        ASSERT_LT(r, prev) << t;
        prev = r;
    }
}

TEST(PowerSeriesRatio, ExhaustedTableIsNonConvergence)
{
    EXPECT_THROW(power_series_ratio(i0_coeffs(3), cosh_coeffs(3), 20.0), NonConvergence);
}
