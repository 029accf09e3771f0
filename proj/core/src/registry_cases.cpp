#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "kernels.hpp"
#include "registry_internal.hpp"
#include "tqmean/sequences.hpp"
#include "tqmean/sharp_constants.hpp"

namespace tqmean {

namespace {

using detail::bessel;
using detail::mean;
using detail::pi;
using detail::porder;
using detail::power_mean;

using HP = HighPrecision;

constexpr double kTLo = 1e-6;
constexpr double kTHi = 50.0;
// t = (1/2) ln(b/a) for b/a in [1 + 1e-9, 1e8].
const double kPairTLo = 0.5 * std::log1p(1e-9);
const double kPairTHi = 0.5 * std::log(1e8);
constexpr int kWallisLast = 1000;

constexpr Link kThm{Relation::Less, CaseStatus::Theorem};
constexpr Link kThmLe{Relation::LessEqual, CaseStatus::Theorem};
constexpr Link kExt{Relation::Less, CaseStatus::ExternalTheorem};
constexpr Link kConj{Relation::Less, CaseStatus::Conjecture};

template <class F>
HalfLogForm t_form(F f)
{
    return {[f](const double& t) { return f(t); }, [f](const HP& t) { return f(t); }};
}

template <class F>
PairForm pair_form(F f)
{
    return {[f](const double& a, const double& b) { return f(a, b); },
            [f](const HP& a, const HP& b) { return f(a, b); }};
}

InequalityCase t_case(std::string id, std::string description, std::vector<std::string> sides,
                      std::vector<Link> links, HalfLogForm form)
{
    InequalityCase c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.sides = std::move(sides);
    c.links = std::move(links);
    c.domain = DomainKind::HalfLog;
    c.lo = kTLo;
    c.hi = kTHi;
    c.half_log = std::move(form);
    return c;
}

InequalityCase p_case(std::string id, std::string description, std::vector<std::string> sides,
                      std::vector<Link> links, PairForm form)
{
    InequalityCase c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.sides = std::move(sides);
    c.links = std::move(links);
    c.domain = DomainKind::Pair;
    c.lo = kPairTLo;
    c.hi = kPairTHi;
    c.pair = std::move(form);
    return c;
}

SharpnessProbe probe(std::string description, double t, double expected, double tolerance,
                     std::function<HP(const HP&)> quantity)
{
    return {std::move(description), t < 1 ? "t->0+" : "t->inf", t, expected, tolerance,
            std::move(quantity)};
}

// Hyperbolic forms at 80 digits, for probes.
HP sinhc_hp(const HP& t) { return generic::sinhc(t); }
HP i0_hp(const HP& t) { return bessel(t); }

/// I_p(a,b)/sqrt(ab) = exp(t coth(pt) - 1/p).
HP identric_p_form(const HP& t, const HP& p)
{
    using std::exp;
    using std::tanh;
    return exp(t / tanh(p * t) - 1 / p);
}

/// L_p(a,b)/sqrt(ab) = (sinh(pt)/(pt))^{1/p}.
HP log_p_form(const HP& t, const HP& p)
{
    using std::pow;
    return pow(generic::sinhc(HP(p * t)), 1 / p);
}

/// T(e^{-t}, e^{t}) at 80 digits.
HP toader_form(const HP& t)
{
    using std::exp;
    return generic::toader_mean_agm(HP(exp(-t)), HP(exp(t)));
}

// Case 1 and its hyperbolic form.
InequalityCase g_tq_a()
{
    auto c = p_case("G-TQ-A", "Toader-Qi mean lies strictly between the geometric and arithmetic means",
                    {"G(a,b)", "TQ(a,b)", "A(a,b)"}, {kThm, kThm}, pair_form([](const auto& a, const auto& b) {
                        using R = std::decay_t<decltype(a)>;
                        return std::vector<R>{mean(MeanKind::geometric(), a, b),
                                              mean(MeanKind::toader_qi(), a, b),
                                              mean(MeanKind::arithmetic(), a, b)};
                    }));
    c.half_log = t_form([](const auto& t) {
        using R = std::decay_t<decltype(t)>;
        using std::cosh;
        return std::vector<R>{R(1), bessel(t), cosh(t)};
    });
    return c;
}

InequalityCase i_exp()
{
    auto c = t_case("I-e^t", "Exponential bounds for I0", {"e^t/(1+2t)", "I0(t)", "e^t/sqrt(1+2t)"},
                    {kThm, kThm}, t_form([](const auto& t) {
                        using R = std::decay_t<decltype(t)>;
                        using std::exp;
                        using std::sqrt;
                        const R e = exp(t);
                        return std::vector<R>{e / (1 + 2 * t), bessel(t), e / sqrt(1 + 2 * t)};
                    }));
    c.pair = pair_form([](const auto& a, const auto& b) {
        using R = std::decay_t<decltype(a)>;
        using std::log;
        using std::sqrt;
        const R hi = a < b ? b : a;
        const R lo = a < b ? a : b;
        const R l = log(hi / lo);
        return std::vector<R>{hi / (1 + l), mean(MeanKind::toader_qi(), a, b), hi / sqrt(1 + l)};
    });
    return c;
}

InequalityCase i0_sh2t()
{
    auto c = t_case("I0-sh2t/2t", "I0 against sqrt(sinh(2t)/(2t)) with best constants sqrt(2/pi) and 1",
                    {"sqrt(sinh(2t)/(pi t))", "I0(t)", "sqrt(sinh(2t)/(2t))"}, {kThm, kThm},
                    t_form([](const auto& t) {
                        using R = std::decay_t<decltype(t)>;
                        using std::sqrt;
                        const R s = generic::sinhc(R(2 * t)); // sinh(2t)/(2t)
                        return std::vector<R>{sqrt(2 * s / pi<R>()), bessel(t), sqrt(s)};
                    }));
    c.pair = pair_form([](const auto& a, const auto& b) {
        using R = std::decay_t<decltype(a)>;
        using std::sqrt;
        const R la = sqrt(mean(MeanKind::logarithmic(), a, b) * mean(MeanKind::arithmetic(), a, b));
        return std::vector<R>{sqrt(2 / pi<R>()) * la, mean(MeanKind::toader_qi(), a, b), la};
    });
    c.sharpness = {
        probe("I0 / sqrt(sinh(2t)/(pi t)) -> 1 (lower constant sqrt(2/pi) is best)", 500.0, 1.0, 2e-3,
              [](const HP& t) {
                  using std::sqrt;
                  return i0_hp(t) / sqrt(2 * generic::sinhc(HP(2 * t)) / pi<HP>());
              }),
        probe("I0 / sqrt(sinh(2t)/(2t)) -> 1 (upper constant 1 is best)", 1e-4, 1.0, 1e-6,
              [](const HP& t) {
                  using std::sqrt;
                  return i0_hp(t) / sqrt(generic::sinhc(HP(2 * t)));
              }),
    };
    return c;
}

InequalityCase i_sqr_la_w()
{
    // delta0 is the maximum of R1; with delta = delta0 the upper bound touches
    // I0 at t0, so that link is non-strict. Rounding delta0 up by one ulp keeps
    // the double constant on the safe side of the exact maximum.
    auto c = t_case("I-TQ-sqrLA-w",
                    "sqrt((w cosh t + 1 - w) sinh t/t) bounds with w = 2/pi below and w = delta0 above",
                    {"sqrt((2/pi cosh t + 1 - 2/pi) sinh t/t)", "I0(t)",
                     "sqrt((delta0 cosh t + 1 - delta0) sinh t/t)"},
                    {kThm, kThmLe}, t_form([](const auto& t) {
                        using R = std::decay_t<decltype(t)>;
                        using std::sqrt;
                        const double d0 = std::nextafter(cached_t0_delta0().value, 2.0);
                        const R delta = R(d0);
                        const R lambda = 2 / pi<R>();
                        const R cm1 = generic::cosh_minus_one(t);
                        const R s = generic::sinhc(t);
                        return std::vector<R>{sqrt((lambda * cm1 + 1) * s), bessel(t),
                                              sqrt((delta * cm1 + 1) * s)};
                    }));
    c.sharpness = {
        probe("R1 -> 2/pi (lower weight 2/pi is best)", 500.0, 2 / std::numbers::pi, 2e-3,
              [](const HP& t) {
                  const HP i0 = i0_hp(t);
                  const HP s = sinhc_hp(t);
                  return (i0 * i0 - s) / (generic::cosh_minus_one(t) * s);
              }),
    };
    return c;
}

HalfLogForm i0_l_a_form(double p, double q)
{
    return t_form([p, q](const auto& t) {
        using R = std::decay_t<decltype(t)>;
        using std::cosh;
        using std::pow;
        const R pp(p);
        const R qq(q);
        const R s = generic::sinhc(t);
        const R ch = cosh(t);
        return std::vector<R>{pow(ch, 1 - pp) * pow(s, pp), bessel(t), qq * s + (1 - qq) * ch};
    });
}

std::string fmt(double x)
{
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, end);
}

InequalityCase i0_l_a()
{
    auto c = i0_l_a_case(0.75, 0.75);
    c.pair = pair_form([](const auto& a, const auto& b) {
        using R = std::decay_t<decltype(a)>;
        using std::pow;
        const R l = mean(MeanKind::logarithmic(), a, b);
        const R ar = mean(MeanKind::arithmetic(), a, b);
        return std::vector<R>{pow(l, R(0.75)) * pow(ar, R(0.25)), mean(MeanKind::toader_qi(), a, b),
                              R(0.75) * l + R(0.25) * ar};
    });
    c.sharpness = {
        probe("(q sinh t/t + (1-q) cosh t - I0)/t^2 -> (1/3)(3/4 - q) = 0 at q = 3/4", 1e-4, 0.0, 1e-6,
              [](const HP& t) {
                  const HP upper = HP(0.75) * sinhc_hp(t) + HP(0.25) * cosh(t);
                  return (upper - i0_hp(t)) / (t * t);
              }),
        probe("(I0 - cosh^{1-p} (sinh t/t)^p)/t^2 -> (1/3)(p - 3/4) = 0 at p = 3/4", 1e-4, 0.0, 1e-6,
              [](const HP& t) {
                  const HP lower = pow(cosh(t), HP(0.25)) * pow(sinhc_hp(t), HP(0.75));
                  return (i0_hp(t) - lower) / (t * t);
              }),
    };
    return c;
}

InequalityCase i0_chpt()
{
    auto c = t_case("I0-chpt", "1 - 1/(2p^2) + cosh(pt)/(2p^2) bounds at p = sqrt(3)/2 below and q = 1 above",
                    {"1/3 + (2/3) cosh(sqrt(3) t/2)", "I0(t)", "(1 + cosh t)/2"}, {kThm, kThm},
                    t_form([](const auto& t) {
                        using R = std::decay_t<decltype(t)>;
                        using std::sqrt;
                        const R p = sqrt(R(3)) / 2;
                        // 1 + (cosh(pt) - 1)/(2p^2) with 2p^2 = 3/2
                        return std::vector<R>{1 + 2 * generic::cosh_minus_one(R(p * t)) / 3, bessel(t),
                                              1 + generic::cosh_minus_one(t) / 2};
                    }));
    c.sharpness = {
        probe("(I0 - lower)/t^4 -> 1/64 - p^2/48 = 0 at p = sqrt(3)/2", 1e-4, 0.0, 1e-6, [](const HP& t) {
            const HP p = sqrt(HP(3)) / 2;
            const HP lower = 1 + 2 * generic::cosh_minus_one(HP(p * t)) / 3;
            const HP t2 = t * t;
            return (i0_hp(t) - lower) / (t2 * t2);
        }),
    };
    return c;
}

InequalityCase i0_chpt_lambda(double p, std::string tag)
{
    // Equality holds at t0(p), so the link is non-strict; lambda0 is rounded
    // down by one ulp so the double constant never exceeds the exact minimum.
    const SolverResult r = find_lambda0(p);
    const double lambda0 = std::nextafter(r.value, 0.0);
    return t_case("I0>chpt-a:p=" + tag,
                  "I0 >= 1 - lambda0/p^2 + (lambda0/p^2) cosh(pt) with lambda0 = min R3, p = " + tag,
                  {"1 - lambda0/p^2 + (lambda0/p^2) cosh(pt)", "I0(t)"}, {kThmLe},
                  t_form([p, lambda0](const auto& t) {
                      using R = std::decay_t<decltype(t)>;
                      const R pp(p);
                      return std::vector<R>{1 + R(lambda0) / (pp * pp) * generic::cosh_minus_one(R(pp * t)),
                                            bessel(t)};
                  }));
}

InequalityCase corollary_chain()
{
    return t_case("C-TQ-Ap+G", "Chain of 1 - 1/(2p^2) + cosh(pt)/(2p^2) lower bounds for I0",
                  {"sqrt(cosh t)", "2 cosh(t/2) - 1", "(9/8) cosh(2t/3) - 1/8", "cosh(t/sqrt(2))",
                   "(8/9) cosh(3t/4) + 1/9", "(2/3) cosh(sqrt(3) t/2) + 1/3", "I0(t)", "(1 + cosh t)/2"},
                  {kThm, kThm, kThm, kThm, kThm, kThm, kThm}, t_form([](const auto& t) {
                      using R = std::decay_t<decltype(t)>;
                      using std::cosh;
                      using std::sqrt;
                      const auto cm1 = [](const R& x) { return generic::cosh_minus_one(x); };
                      return std::vector<R>{sqrt(cosh(t)),
                                            1 + 2 * cm1(R(t / 2)),
                                            1 + 9 * cm1(R(2 * t / 3)) / 8,
                                            cosh(R(t / sqrt(R(2)))),
                                            1 + 8 * cm1(R(3 * t / 4)) / 9,
                                            1 + 2 * cm1(R(sqrt(R(3)) * t / 2)) / 3,
                                            bessel(t),
                                            1 + cm1(t) / 2};
                  }));
}

InequalityCase ch_i_4()
{
    auto c = t_case("Ch.-I-4", "Chain of (cosh pt)^{1/(2p^2)} bounds for I0 around p = sqrt(6)/4",
                    {"sqrt(cosh t)", "cosh(t/sqrt(2))", "cosh(sqrt(6) t/4)^{4/3}", "I0(t)", "cosh(t/2)^2",
                     "exp(t^2/4)"},
                    {kThm, kThm, kThm, kThm, kThm}, t_form([](const auto& t) {
                        using R = std::decay_t<decltype(t)>;
                        using std::cosh;
                        using std::exp;
                        using std::pow;
                        using std::sqrt;
                        const R ch2 = cosh(R(t / 2));
                        return std::vector<R>{sqrt(cosh(t)), cosh(R(t / sqrt(R(2)))),
                                              pow(cosh(R(sqrt(R(6)) * t / 4)), R(4) / 3), bessel(t), ch2 * ch2,
                                              exp(t * t / 4)};
                    }));
    c.sharpness = {
        probe("(I0 - cosh(pt)^{1/(2p^2)})/t^4 -> (p^2 - 3/8)/24 = 0 at p = sqrt(6)/4", 1e-4, 0.0, 1e-6,
              [](const HP& t) {
                  const HP lower = pow(cosh(HP(sqrt(HP(6)) * t / 4)), HP(4) / 3);
                  const HP t2 = t * t;
                  return (i0_hp(t) - lower) / (t2 * t2);
              }),
    };
    return c;
}

InequalityCase coshttr_chain()
{
    return t_case("I0-coshttr.-ch", "Chain of (cosh(t cos theta) + cosh(t sin theta))/2 lower bounds for I0",
                  {"cosh(t/sqrt(2))", "(cosh(sqrt(3) t/2) + cosh(t/2))/2",
                   "(cosh(sqrt(2-sqrt(2)) t/2) + cosh(sqrt(2+sqrt(2)) t/2))/2", "I0(t)"},
                  {kThm, kThm, kThm}, t_form([](const auto& t) {
                      using R = std::decay_t<decltype(t)>;
                      using std::cosh;
                      using std::sqrt;
                      const R r2 = sqrt(R(2));
                      return std::vector<R>{
                          cosh(R(t / r2)), (cosh(R(sqrt(R(3)) * t / 2)) + cosh(R(t / 2))) / 2,
                          (cosh(R(sqrt(2 - r2) * t / 2)) + cosh(R(sqrt(2 + r2) * t / 2))) / 2, bessel(t)};
                  }));
}

InequalityCase lupas_bound()
{
    return t_case("I0>Y", "Chebyshev-functional lower bound sinh t/t + (3(4-pi)/pi)(t sinh t - 2cosh t + 2)/t^2",
                  {"sinh t/t + (3(4-pi)/pi)(t sinh t - 2 cosh t + 2)/t^2", "I0(t)"}, {kThm},
                  t_form([](const auto& t) {
                      using R = std::decay_t<decltype(t)>;
                      const R k = 3 * (4 - pi<R>()) / pi<R>();
                      return std::vector<R>{generic::sinhc(t) + k * generic::lupas_kernel(t), bessel(t)};
                  }));
}

InequalityCase tq_a_t_i()
{
    return p_case("TQ-A-T-I", "TQ < A_{1/2} < T_{1/3} < I_{3/4}",
                  {"TQ(a,b)", "A_{1/2}(a,b)", "T_{1/3}(a,b)", "I_{3/4}(a,b)"}, {kThm, kExt, kExt},
                  pair_form([](const auto& a, const auto& b) {
                      using R = std::decay_t<decltype(a)>;
                      return std::vector<R>{mean(MeanKind::toader_qi(), a, b), power_mean(R(0.5), a, b),
                                            porder(MeanKind::toader(), R(1) / 3, a, b),
                                            porder(MeanKind::identric(), R(0.75), a, b)};
                  }));
}

InequalityCase tq_i_p()
{
    auto c = tq_ip_case(0.75);
    c.sharpness = {
        probe("(I_p/G - TQ/G)/t^2 -> (1/3)(p - 3/4) = 0 at p = 3/4", 1e-4, 0.0, 1e-6, [](const HP& t) {
            return (identric_p_form(t, HP(0.75)) - i0_hp(t)) / (t * t);
        }),
    };
    return c;
}

InequalityCase t_a_p()
{
    auto c = p_case("T-A_p", "Power-mean bounds A_{3/2} < T < A_{ln 2/ln(pi/2)} for the Toader mean",
                    {"A_{3/2}(a,b)", "T(a,b)", "A_{ln2/ln(pi/2)}(a,b)"}, {kExt, kExt},
                    pair_form([](const auto& a, const auto& b) {
                        using R = std::decay_t<decltype(a)>;
                        using std::log;
                        const R p = log(R(2)) / log(pi<R>() / 2);
                        return std::vector<R>{power_mean(R(1.5), a, b), mean(MeanKind::toader(), a, b),
                                              power_mean(p, a, b)};
                    }));
    c.sharpness = {
        probe("T / A_{ln2/ln(pi/2)} -> 1 as b/a -> inf (upper order is best)", 500.0, 1.0, 1e-6,
              [](const HP& t) {
                  const HP p = log(HP(2)) / log(pi<HP>() / 2);
                  return toader_form(t) / generic::power_mean(HP(exp(-t)), HP(exp(t)), p);
              }),
        probe("(T - A_{3/2})/(G t^2) -> 0 as t -> 0+ (lower order is best)", 1e-4, 0.0, 1e-6,
              [](const HP& t) {
                  const HP ap = generic::power_mean(HP(exp(-t)), HP(exp(t)), HP(1.5));
                  return (toader_form(t) - ap) / (t * t);
              }),
    };
    return c;
}

InequalityCase t_i_p()
{
    auto c = p_case("T-I_p", "Toader mean below the 9/4-order identric mean", {"T(a,b)", "I_{9/4}(a,b)"},
                    {kExt}, pair_form([](const auto& a, const auto& b) {
                        using R = std::decay_t<decltype(a)>;
                        return std::vector<R>{mean(MeanKind::toader(), a, b),
                                              porder(MeanKind::identric(), R(2.25), a, b)};
                    }));
    c.sharpness = {
        probe("(I_{9/4}/G - T/G)/t^2 -> 0 as t -> 0+", 1e-4, 0.0, 1e-6,
              [](const HP& t) { return (identric_p_form(t, HP(2.25)) - toader_form(t)) / (t * t); }),
    };
    return c;
}

InequalityCase grand_chain()
{
    return p_case("AGM-TQi-T_p", "L < AGM < L^{3/4}A^{1/4} < TQ < (3/4)L + (1/4)A < A_{1/2} < T_{1/3} < I_{3/4}",
                  {"L(a,b)", "AGM(a,b)", "L^{3/4} A^{1/4}", "TQ(a,b)", "(3/4) L + (1/4) A", "A_{1/2}(a,b)",
                   "T_{1/3}(a,b)", "I_{3/4}(a,b)"},
                  {kExt, kExt, kThm, kThm, kExt, kExt, kExt}, pair_form([](const auto& a, const auto& b) {
                      using R = std::decay_t<decltype(a)>;
                      using std::pow;
                      const R l = mean(MeanKind::logarithmic(), a, b);
                      const R ar = mean(MeanKind::arithmetic(), a, b);
                      return std::vector<R>{l,
                                            mean(MeanKind::agm(), a, b),
                                            pow(l, R(0.75)) * pow(ar, R(0.25)),
                                            mean(MeanKind::toader_qi(), a, b),
                                            R(0.75) * l + R(0.25) * ar,
                                            power_mean(R(0.5), a, b),
                                            porder(MeanKind::toader(), R(1) / 3, a, b),
                                            porder(MeanKind::identric(), R(0.75), a, b)};
                  }));
}

InequalityCase l_tq_i()
{
    return p_case("L-TQ-I", "Toader-Qi mean between the logarithmic and identric means",
                  {"L(a,b)", "TQ(a,b)", "I(a,b)"}, {kExt, kExt}, pair_form([](const auto& a, const auto& b) {
                      using R = std::decay_t<decltype(a)>;
                      return std::vector<R>{mean(MeanKind::logarithmic(), a, b), mean(MeanKind::toader_qi(), a, b),
                                            mean(MeanKind::identric(), a, b)};
                  }));
}

InequalityCase tq_ag_i()
{
    return p_case("TQ-AG-I", "TQ < (A+G)/2 < (2A+G)/3 < I",
                  {"TQ(a,b)", "(A+G)/2", "(2A+G)/3", "I(a,b)"}, {kExt, kExt, kExt},
                  pair_form([](const auto& a, const auto& b) {
                      using R = std::decay_t<decltype(a)>;
                      const R ar = mean(MeanKind::arithmetic(), a, b);
                      const R g = mean(MeanKind::geometric(), a, b);
                      return std::vector<R>{mean(MeanKind::toader_qi(), a, b), (ar + g) / 2, (2 * ar + g) / 3,
                                            mean(MeanKind::identric(), a, b)};
                  }));
}

InequalityCase index_case(std::string id, std::string description, std::vector<std::string> sides,
                          std::vector<Link> links, bool kazarinoff)
{
    InequalityCase c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.sides = std::move(sides);
    c.links = std::move(links);
    c.domain = DomainKind::Index;
    c.lo = 1;
    c.hi = kWallisLast;
    c.index = [kazarinoff](int first, int last) {
        std::vector<IndexSample> out;
        const std::vector<Rational> w = wallis_ratios(last);
        const HP pi_hp = pi<HP>();
        for (int n = first; n <= last; ++n) {
            const Rational& wn = w[static_cast<std::size_t>(n)];
            const WallisBoundsReport r = wallis_bounds_check(n, wn);
            const HP whp = to_high_precision(wn);
            const HP nn(n);
            IndexSample s;
            if (kazarinoff) {
                s.sides = {1 / sqrt(pi_hp * (nn + HP(0.5))), whp, 1 / sqrt(pi_hp * (nn + HP(0.25)))};
                s.holds = {r.ki_lower_holds, r.ki_upper_holds};
            } else {
                const HP q = ldexp(HP(1), -2 * n);
                s.sides = {sqrt(((pi_hp - 2) * q + 2) / (pi_hp * (2 * nn + 1))), whp,
                           sqrt((41 + 19 * q) / (60 * (2 * nn + 1)))};
                s.holds = {r.yi_lower_holds, r.yi_upper_holds};
            }
            out.push_back(std::move(s));
        }
        return out;
    };
    return c;
}

InequalityCase conjecture_l32()
{
    auto c = p_case("conjecture-L32", "TQ exceeds the 3/2-order logarithmic mean (conjectured)",
                    {"L_{3/2}(a,b)", "TQ(a,b)"}, {kConj}, pair_form([](const auto& a, const auto& b) {
                        using R = std::decay_t<decltype(a)>;
                        return std::vector<R>{porder(MeanKind::logarithmic(), R(1.5), a, b),
                                              mean(MeanKind::toader_qi(), a, b)};
                    }));
    c.sharpness = {
        probe("(TQ - L_{3/2})/(G t^2) -> 0 as t -> 0+", 1e-4, 0.0, 1e-6,
              [](const HP& t) { return (i0_hp(t) - log_p_form(t, HP(1.5))) / (t * t); }),
    };
    return c;
}

InequalityCase conjecture_2()
{
    return p_case("conjecture-2", "sqrt(AG) < TQ < sqrt(L I) < (L+I)/2 < (A+G)/2 (middle link conjectured)",
                  {"sqrt(A G)", "TQ(a,b)", "sqrt(L I)", "(L+I)/2", "(A+G)/2"}, {kThm, kConj, kExt, kExt},
                  pair_form([](const auto& a, const auto& b) {
                      using R = std::decay_t<decltype(a)>;
                      using std::sqrt;
                      const R ar = mean(MeanKind::arithmetic(), a, b);
                      const R g = mean(MeanKind::geometric(), a, b);
                      const R l = mean(MeanKind::logarithmic(), a, b);
                      const R i = mean(MeanKind::identric(), a, b);
                      return std::vector<R>{sqrt(ar * g), mean(MeanKind::toader_qi(), a, b), sqrt(l * i),
                                            (l + i) / 2, (ar + g) / 2};
                  }));
}

} // namespace

InequalityCase i0_l_a_case(double p, double q)
{
    return t_case("I0-L-A", "(cosh t)^{1-p} (sinh t/t)^p < I0 < q sinh t/t + (1-q) cosh t, p = " + fmt(p)
                      + ", q = " + fmt(q),
                  {"(cosh t)^{1-p} (sinh t/t)^p", "I0(t)", "q sinh t/t + (1-q) cosh t"}, {kThm, kThm},
                  i0_l_a_form(p, q));
}

InequalityCase theta_family_case(int num, int den)
{
    const std::string tag = "theta=" + (num == 1 ? std::string() : std::to_string(num)) + "pi/"
        + std::to_string(den);
    return t_case("I0-coshttr:" + tag, "(cosh(t cos theta) + cosh(t sin theta))/2 < I0, " + tag,
                  {"(cosh(t cos theta) + cosh(t sin theta))/2", "I0(t)"}, {kThm},
                  t_form([num, den](const auto& t) {
                      using R = std::decay_t<decltype(t)>;
                      using std::cos;
                      using std::cosh;
                      using std::sin;
                      const R theta = pi<R>() * num / den;
                      return std::vector<R>{(cosh(R(t * cos(theta))) + cosh(R(t * sin(theta)))) / 2, bessel(t)};
                  }));
}

InequalityCase tq_ip_case(double p)
{
    return p_case("TQ-I_p:p=" + fmt(p), "TQ below the p-order identric mean, p = " + fmt(p),
                  {"TQ(a,b)", "I_p(a,b)"}, {kThm}, pair_form([p](const auto& a, const auto& b) {
                      using R = std::decay_t<decltype(a)>;
                      return std::vector<R>{mean(MeanKind::toader_qi(), a, b),
                                            porder(MeanKind::identric(), R(p), a, b)};
                  }));
}

namespace detail {

std::vector<InequalityCase> build_registry()
{
    std::vector<InequalityCase> cases;
    cases.push_back(g_tq_a());
    cases.push_back(i_exp());
    cases.push_back(i0_sh2t());
    cases.push_back(i_sqr_la_w());
    cases.push_back(i0_l_a());
    cases.push_back(i0_chpt());
    cases.push_back(i0_chpt_lambda(0.9, "0.9"));
    cases.push_back(i0_chpt_lambda(0.95, "0.95"));
    cases.push_back(corollary_chain());
    cases.push_back(ch_i_4());
    {
        auto c = theta_family_case(1, 8);
        c.sharpness = {probe("(I0 - (cosh(t cos theta) + cosh(t sin theta))/2)/t^4 -> -cos(4 theta)/192 = 0",
                             1e-4, 0.0, 1e-6, [](const HP& t) {
                                 const HP theta = pi<HP>() / 8;
                                 const HP side = (cosh(HP(t * cos(theta))) + cosh(HP(t * sin(theta)))) / 2;
                                 const HP t2 = t * t;
                                 return (i0_hp(t) - side) / (t2 * t2);
                             })};
        cases.push_back(std::move(c));
    }
    cases.push_back(theta_family_case(1, 6));
    cases.push_back(theta_family_case(1, 4));
    cases.push_back(coshttr_chain());
    cases.push_back(lupas_bound());
    cases.push_back(l_tq_i());
    cases.push_back(tq_ag_i());
    cases.push_back(tq_a_t_i());
    cases.push_back(tq_i_p());
    cases.push_back(t_a_p());
    cases.push_back(t_i_p());
    cases.push_back(grand_chain());
    cases.push_back(index_case("W-KI", "Kazarinoff bounds for the Wallis ratio",
                               {"1/sqrt(pi(n+1/2))", "W_n", "1/sqrt(pi(n+1/4))"}, {kThm, kThm}, true));
    cases.push_back(index_case("W-YI", "Wallis ratio bounds from the c_n/d_n sequence (upper attained at n = 2)",
                               {"sqrt(((pi-2)2^{-2n}+2)/(pi(2n+1)))", "W_n", "sqrt((41+19*2^{-2n})/(60(2n+1)))"},
                               {kThm, kThmLe}, false));
    cases.push_back(conjecture_l32());
    cases.push_back(conjecture_2());
    return cases;
}

} // namespace detail

} // namespace tqmean
