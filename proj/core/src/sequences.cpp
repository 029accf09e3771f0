#include "tqmean/sequences.hpp"

#include <cmath>
#include <numbers>

#include "tqmean/error.hpp"
#include "tqmean/precision.hpp"
#include "tqmean/special_functions.hpp"

namespace tqmean {

namespace {

void require_index(int n, int min, const char* what)
{
    if (n < min) {
        throw DomainError(std::string(what) + ": index must be >= " + std::to_string(min));
    }
}

unsigned u(int n) { return static_cast<unsigned>(n); }

} // namespace

Rational wallis_ratio(int n)
{
    require_index(n, 0, "wallis_ratio");
    // (2n-1)!!/(2n)!! = (2n)! / (2^n n!)^2
    const Integer f = factorial(u(n));
    const Integer d = pow2(u(n)) * f;
    return Rational(factorial(u(2 * n)), d * d);
}

std::vector<Rational> wallis_ratios(int n_max)
{
    require_index(n_max, 0, "wallis_ratios");
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(n_max) + 1);
    w.emplace_back(1);
    for (int n = 0; n < n_max; ++n) {
        w.push_back(w.back() * Rational(2 * n + 1, 2 * n + 2));
    }
    return w;
}

Rational s_seq(int n)
{
    require_index(n, 0, "s_seq");
    const Integer f = factorial(u(n));
    const Integer f2 = f * f;
    return Rational(factorial(u(2 * n)) * factorial(u(2 * n + 1)), pow2(u(4 * n)) * f2 * f2);
}

BinomSquareSum binom_square_sum(int n)
{
    require_index(n, 0, "binom_square_sum");
    Integer sum = 0;
    for (int k = 0; k <= n; ++k) {
        const Integer c = binomial(u(n), u(k));
        sum += c * c;
    }
    return {sum, binomial(u(2 * n), u(n))};
}

Rational cd_ratio(int n)
{
    require_index(n, 1, "cd_ratio");
    const Integer p = pow2(u(2 * n));
    return (Rational(p) * s_seq(n) - 1) / Rational(p - 1);
}

Rational gamma_seq(int n)
{
    require_index(n, 1, "gamma_seq");
    return Rational((n + 2) * (2 * n + 1), 2 * (n + 1)) * wallis_ratio(n);
}

Rational alphabeta_ratio(int n)
{
    require_index(n, 1, "alphabeta_ratio");
    return Rational(2 * n + 1, 2 * n) * (1 - wallis_ratio(n));
}

double munu_ratio(int n, double p)
{
    require_index(n, 1, "munu_ratio");
    if (!(p > 0.0)) {
        throw DomainError("munu_ratio: p must be > 0");
    }
    return to_double(wallis_ratio(n)) / std::pow(p, 2 * n - 2);
}

double munu_difference(int n, double p)
{
    require_index(n, 1, "munu_difference");
    if (!(p > 0.0)) {
        throw DomainError("munu_difference: p must be > 0");
    }
    const double w = to_double(wallis_ratio(n));
    return -w / std::pow(p, 2 * n) * (p * p - (2.0 * n + 1) / (2.0 * n + 2));
}

double rhosigma_ratio(int n)
{
    require_index(n, 0, "rhosigma_ratio");
    // r_{n+1}/r_n = (sqrt2/2) (n+1)/(2n+1) * Q (1 + q^{n+1}) / (1 + q^n),
    // Q = sqrt2 + 1, q = (sqrt2 - 1)/(sqrt2 + 1) = 3 - 2 sqrt2.
    const double root2 = std::numbers::sqrt2;
    const double big = root2 + 1.0;
    const double q = 3.0 - 2.0 * root2;
    double r = 1.0;
    double qn = 1.0;
    for (int k = 0; k < n; ++k) {
        const double qn1 = qn * q;
        r *= root2 / 2 * (k + 1.0) / (2.0 * k + 1.0) * big * (1.0 + qn1) / (1.0 + qn);
        qn = qn1;
    }
    return r;
}

XiValue xi_seq(int n)
{
    require_index(n, 1, "xi_seq");
    const double root2 = std::numbers::sqrt2;
    const double eta = std::pow(root2 + 1.0, 2 * n - 1);
    const double xi = (3 * root2 - 4) * eta + (3 * root2 + 4) / eta - 4;
    return {xi, eta};
}

double xi_factored(int n)
{
    require_index(n, 1, "xi_factored");
    const double root2 = std::numbers::sqrt2;
    const double eta = std::pow(root2 + 1.0, 2 * n - 1);
    const double eta1 = root2 + 1.0;
    const double eta2 = 5 * root2 + 7;
    return (3 * root2 - 4) * (eta - eta1) * (eta - eta2) / eta;
}

GammaRatioBounds gamma_ratio_bounds(double x, double a)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("gamma_ratio_bounds: x must be finite and > 0");
    }
    if (!(a > 0.0 && a < 1.0)) {
        throw DomainError("gamma_ratio_bounds: a must lie in (0, 1)");
    }
    GammaRatioBounds r;
    r.lower = std::pow(x + a, a - 1.0);
    r.ratio = std::exp(std::lgamma(x + a) - std::lgamma(x + 1.0));
    r.upper = std::pow(x, a - 1.0);
    return r;
}

const Rational& pi_lower()
{
    static const Rational v(Integer("314159265358979323846264338327950288419716939937510582097494"),
                            Integer(10) * boost::multiprecision::pow(Integer(10), 58));
    return v;
}

const Rational& pi_upper()
{
    static const Rational v(Integer("314159265358979323846264338327950288419716939937510582097495"),
                            Integer(10) * boost::multiprecision::pow(Integer(10), 58));
    return v;
}

WallisBoundsReport wallis_bounds_check(int n)
{
    require_index(n, 1, "wallis_bounds_check");
    return wallis_bounds_check(n, wallis_ratio(n));
}

WallisBoundsReport wallis_bounds_check(int n, const Rational& w)
{
    require_index(n, 1, "wallis_bounds_check");
    const Rational w2 = w * w;
    const Rational quarter_n = Rational(1, 1) / Rational(pow2(u(2 * n))); // 2^{-2n}
    const Rational odd(2 * n + 1);

    // 1/(pi(n+1/2)) and 1/(pi(n+1/4)): lower bound is largest at pi_lo, upper smallest at pi_hi.
    const auto ki_lower_sq = [&](const Rational& pi) { return 1 / (pi * Rational(2 * n + 1, 2)); };
    const auto ki_upper_sq = [&](const Rational& pi) { return 1 / (pi * Rational(4 * n + 1, 4)); };
    // ((pi-2)2^{-2n}+2)/(pi(2n+1)) = (2^{-2n} + (2 - 2*2^{-2n})/pi)/(2n+1), decreasing in pi.
    const auto yi_lower_sq = [&](const Rational& pi) {
        return ((pi - 2) * quarter_n + 2) / (pi * odd);
    };
    const Rational yi_upper_sq = (41 + 19 * quarter_n) / (60 * odd);

    WallisBoundsReport r;
    r.n = n;
    r.ki_lower_holds = w2 > ki_lower_sq(pi_lower());
    r.ki_upper_holds = w2 < ki_upper_sq(pi_upper());
    r.yi_lower_holds = w2 > yi_lower_sq(pi_lower());
    r.yi_upper_holds = w2 <= yi_upper_sq;
    r.yi_upper_attained = w2 == yi_upper_sq;

    // yi_lower^2 - ki_lower^2 is increasing in pi, so its minimum over the bracket is at pi_lo.
    const Rational gap = yi_lower_sq(pi_lower()) - ki_lower_sq(pi_lower());
    r.yi_dominates_ki = gap > 0;
    if (gap > 0) {
        using boost::multiprecision::log10;
        r.log10_dominance_gap = static_cast<double>(log10(to_high_precision(gap)));
    } else {
        r.log10_dominance_gap = -std::numeric_limits<double>::infinity();
    }

    const double pi = std::numbers::pi;
    const double q = std::ldexp(1.0, -2 * n);
    r.wallis = to_double(w);
    r.ki_lower = 1.0 / std::sqrt(pi * (n + 0.5));
    r.ki_upper = 1.0 / std::sqrt(pi * (n + 0.25));
    r.yi_lower = std::sqrt(((pi - 2) * q + 2) / (pi * (2.0 * n + 1)));
    r.yi_upper = std::sqrt((41 + 19 * q) / (60 * (2.0 * n + 1)));
    return r;
}

const std::vector<std::string>& sequence_ids()
{
    static const std::vector<std::string> ids = {
        "wallis",          "s-sequence",        "cd-ratio",         "gamma-sequence",
        "alphabeta-ratio", "binom-square-sum",  "v-sequence",       "i0-coeffs",
        "i0-squared-coeffs", "i0-fourth-coeffs", "cosh-sinh3-coeffs", "rhosigma-ratio",
        "xi-sequence",
    };
    return ids;
}

std::vector<SeqValue> sequence_table(std::string_view id, int n_max)
{
    if (n_max < 0) {
        throw DomainError("sequence_table: n_max must be >= 0");
    }
    std::vector<SeqValue> rows;
    const auto exact_rows = [&](int first, auto&& f) {
        for (int n = first; n <= n_max; ++n) {
            const Rational v = f(n);
            rows.push_back({n, true, v, to_double(v)});
        }
    };
    const auto real_rows = [&](int first, auto&& f) {
        for (int n = first; n <= n_max; ++n) {
            rows.push_back({n, false, Rational(0), f(n)});
        }
    };
    const auto coeff_rows = [&](const CoeffTable& table) {
        for (std::size_t n = 0; n < table.size(); ++n) {
            rows.push_back({static_cast<int>(n), true, table[n], to_double(table[n])});
        }
    };

    if (id == "wallis") {
        const auto w = wallis_ratios(n_max);
        exact_rows(0, [&](int n) { return w[static_cast<std::size_t>(n)]; });
    } else if (id == "s-sequence") {
        exact_rows(0, s_seq);
    } else if (id == "cd-ratio") {
        exact_rows(1, cd_ratio);
    } else if (id == "gamma-sequence") {
        exact_rows(1, gamma_seq);
    } else if (id == "alphabeta-ratio") {
        exact_rows(1, alphabeta_ratio);
    } else if (id == "binom-square-sum") {
        exact_rows(0, [](int n) { return Rational(binom_square_sum(n).sum_of_squares); });
    } else if (id == "v-sequence") {
        coeff_rows(v_sequence(n_max));
    } else if (id == "i0-coeffs") {
        coeff_rows(i0_coeffs(n_max));
    } else if (id == "i0-squared-coeffs") {
        coeff_rows(i0_squared_coeffs(n_max));
    } else if (id == "i0-fourth-coeffs") {
        coeff_rows(i0_fourth_coeffs(n_max));
    } else if (id == "cosh-sinh3-coeffs") {
        coeff_rows(cosh_sinh3_coeffs(n_max));
    } else if (id == "rhosigma-ratio") {
        real_rows(0, rhosigma_ratio);
    } else if (id == "xi-sequence") {
        real_rows(1, [](int n) { return xi_seq(n).xi; });
    } else {
        throw UnknownSequence("unknown sequence: " + std::string(id));
    }
    return rows;
}

} // namespace tqmean
