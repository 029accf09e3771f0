#ifndef TQMEAN_SEQUENCES_HPP
#define TQMEAN_SEQUENCES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tqmean/rational.hpp"

namespace tqmean {

/// W_n = (2n-1)!! / (2n)!!, W_0 = 1.
Rational wallis_ratio(int n);
/// W_0 .. W_{n_max} by the recurrence W_{n+1} = W_n (2n+1)/(2n+2).
std::vector<Rational> wallis_ratios(int n_max);

/// s_n = (2n)! (2n+1)! / (2^{4n} n!^4).
Rational s_seq(int n);

struct BinomSquareSum {
    Integer sum_of_squares; ///< sum_k C(n,k)^2
    Integer central;        ///< C(2n, n)
};
BinomSquareSum binom_square_sum(int n);

/// c_n / d_n = (2^{2n} s_n - 1) / (2^{2n} - 1), n >= 1.
Rational cd_ratio(int n);

/// gamma_n = (n+2)(2n+1) W_n / (2(n+1)), n >= 1.
Rational gamma_seq(int n);

/// alpha_n / beta_n = ((2n+1)/(2n)) (1 - W_n), n >= 1.
Rational alphabeta_ratio(int n);

/// mu_n / nu_n = (2n)! / (2^{2n} n!^2 p^{2n-2}) = W_n / p^{2n-2}, n >= 1, p > 0.
double munu_ratio(int n, double p);
/// mu_{n+1}/nu_{n+1} - mu_n/nu_n in factored form
/// -(W_n / p^{2n}) (p^2 - (2n+1)/(2n+2)).
double munu_difference(int n, double p);

/// rho_n / sigma_n = (1/2) n!^2 2^{n/2} ((sqrt2-1)^n + (sqrt2+1)^n) / (2n)!, n >= 0.
double rhosigma_ratio(int n);

struct XiValue {
    double xi;  ///< (3 sqrt2 - 4) eta + (3 sqrt2 + 4)/eta - 4
    double eta; ///< (sqrt2 + 1)^{2n-1}
};
/// Taylor coefficient numerators xi_n of f2, n >= 1.
XiValue xi_seq(int n);
/// xi_n through the factorisation (3 sqrt2 - 4)(eta_n - eta_1)(eta_n - eta_2)/eta_n.
double xi_factored(int n);

struct GammaRatioBounds {
    double lower; ///< (x+a)^{a-1}
    double ratio; ///< Gamma(x+a) / Gamma(x+1)
    double upper; ///< x^{a-1}
};
/// Requires x > 0 and 0 < a < 1; throws DomainError otherwise.
GammaRatioBounds gamma_ratio_bounds(double x, double a);

/// Exact check of both Wallis bound pairs at one n, squared so that only
/// rationals and a rational bracket of pi are involved.
struct WallisBoundsReport {
    int n = 0;
    double wallis = 0.0;
    double ki_lower = 0.0; ///< 1/sqrt(pi(n+1/2))
    double ki_upper = 0.0; ///< 1/sqrt(pi(n+1/4))
    double yi_lower = 0.0; ///< sqrt(((pi-2)2^{-2n}+2)/(pi(2n+1)))
    double yi_upper = 0.0; ///< sqrt((41+19*2^{-2n})/(60(2n+1)))
    bool ki_lower_holds = false;
    bool ki_upper_holds = false;
    bool yi_lower_holds = false;
    bool yi_upper_holds = false;  ///< non-strict: W_n <= bound
    bool yi_upper_attained = false; ///< W_n equals the bound (n = 2)
    bool yi_dominates_ki = false; ///< yi_lower > ki_lower
    double log10_dominance_gap = 0.0; ///< log10(yi_lower^2 - ki_lower^2)

    bool all_hold() const
    {
        return ki_lower_holds && ki_upper_holds && yi_lower_holds && yi_upper_holds
            && yi_dominates_ki;
    }
};
/// n >= 1.
WallisBoundsReport wallis_bounds_check(int n);
/// Same check with W_n supplied by the caller (e.g. from wallis_ratios).
WallisBoundsReport wallis_bounds_check(int n, const Rational& wallis);

/// Rational enclosure of pi, 60 significant digits.
const Rational& pi_lower();
const Rational& pi_upper();

/// One row of a sequence dump.
struct SeqValue {
    int n = 0;
    bool exact = true;
    Rational value;    ///< set when exact
    double real = 0.0; ///< set when !exact, and as a convenience otherwise
};

/// Dumps a named sequence for n = first index .. n_max. Ids: wallis,
/// s-sequence, cd-ratio, gamma-sequence, alphabeta-ratio, binom-square-sum,
/// v-sequence, i0-coeffs, i0-squared-coeffs, i0-fourth-coeffs,
/// cosh-sinh3-coeffs, rhosigma-ratio, xi-sequence.
/// Throws UnknownSequence for other ids.
std::vector<SeqValue> sequence_table(std::string_view id, int n_max);

/// Ids accepted by sequence_table.
const std::vector<std::string>& sequence_ids();

} // namespace tqmean

#endif
