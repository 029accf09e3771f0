#ifndef TQMEAN_INEQUALITY_REGISTRY_HPP
#define TQMEAN_INEQUALITY_REGISTRY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqmean/precision.hpp"

namespace tqmean {

enum class CaseStatus { Theorem, ExternalTheorem, Conjecture };
enum class Relation { Less, LessEqual };
enum class DomainKind { HalfLog, Pair, Index };

std::string to_string(CaseStatus status);
std::string to_string(DomainKind domain);

/// Relation between side k and side k+1 of a chain.
struct Link {
    Relation relation = Relation::Less;
    CaseStatus status = CaseStatus::Theorem;
};

/// Side values of a chain at one point of the t domain.
template <class Real>
using HalfLogSides = std::function<std::vector<Real>(const Real& t)>;
/// Side values of a chain at one mean argument pair.
template <class Real>
using PairSides = std::function<std::vector<Real>(const Real& a, const Real& b)>;

struct HalfLogForm {
    HalfLogSides<double> fast;
    HalfLogSides<HighPrecision> precise;
};

struct PairForm {
    PairSides<double> fast;
    PairSides<HighPrecision> precise;
};

/// Exact evaluation at an integer index: side values (for margins) plus the
/// authoritative truth value of each link.
struct IndexSample {
    std::vector<HighPrecision> sides;
    std::vector<bool> holds;
};

/// A quantity that should approach `expected` as t approaches an endpoint.
struct SharpnessProbe {
    std::string description;
    std::string endpoint; ///< "t->0+" or "t->inf"
    double t = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::function<HighPrecision(const HighPrecision& t)> quantity;
};

struct InequalityCase {
    std::string id;
    std::string description;
    std::vector<std::string> sides; ///< ascending: sides[0] < sides[1] < ...
    std::vector<Link> links;        ///< sides.size() - 1 entries
    DomainKind domain = DomainKind::HalfLog;
    double lo = 0.0; ///< t range (HalfLog), t range of the pair (Pair), first index (Index)
    double hi = 0.0;
    std::optional<HalfLogForm> half_log;
    std::optional<PairForm> pair;
    std::function<std::vector<IndexSample>(int first, int last)> index;
    std::vector<SharpnessProbe> sharpness;

    /// Conjecture if any link is, else Theorem if any link is, else ExternalTheorem.
    CaseStatus status() const;
};

/// All cases, built once. Thread-safe after first use.
const std::vector<InequalityCase>& registry();

/// Throws UnknownCase.
const InequalityCase& find_case(std::string_view id);

struct Violation {
    long sample = 0;   ///< sample index, or n for index cases; -1 for the extended pass
    double t = 0.0;    ///< location in t (pair cases: (1/2) ln(b/a))
    double a = 0.0;    ///< pair cases only
    double b = 0.0;
    int link = 0;
    double margin = 0.0;
    CaseStatus status = CaseStatus::Theorem;
};

struct MinMargin {
    double value = 0.0;
    double t = 0.0;
    double a = 0.0;
    double b = 0.0;
    int link = 0;
};

struct VerifyReport {
    std::string id;
    CaseStatus status = CaseStatus::Theorem;
    DomainKind domain = DomainKind::HalfLog;
    long samples = 0;
    std::uint64_t seed = 0;
    MinMargin min_margin;
    std::vector<Violation> violations; ///< first kMaxStoredViolations only
    long violation_count = 0;
    long fatal_violation_count = 0; ///< violations on theorem / external-theorem links
    long escalations = 0;           ///< samples re-evaluated at 80 digits
    long indeterminate = 0;         ///< 80-digit margins below kIndeterminateMargin in magnitude
    int extended_points = 0;        ///< large-t points checked at 80 digits
    bool passed = false;            ///< fatal_violation_count == 0
};

inline constexpr std::size_t kMaxStoredViolations = 20;
/// Double-precision margins below this are recomputed at 80 digits.
inline constexpr double kEscalationMargin = 1e-9;
/// An 80-digit margin smaller than this in magnitude is rounding noise: the
/// point neither supports nor refutes the link and is counted separately.
inline constexpr double kIndeterminateMargin = 1e-70;
/// Large-t points for the 80-digit pass.
inline const std::vector<double> kExtendedT = {100.0, 200.0, 500.0};

/// Sampling verifier. t is drawn log-uniformly from [lo, hi] of the case;
/// pair cases draw t = (1/2) ln(b/a) that way, a log-uniformly from
/// [1e-3, 1e3] and swap (a, b) at random. Index cases check every n in range
/// and ignore samples/seed. Throws UnknownCase for unknown ids.
VerifyReport verify_case(std::string_view id, long samples, std::uint64_t seed);
VerifyReport verify(const InequalityCase& c, long samples, std::uint64_t seed);

/// Relative margins (s_{k+1} - s_k) / min(s_k, s_{k+1}) at one point, 80 digits.
std::vector<double> link_margins_t(const InequalityCase& c, double t);
std::vector<double> link_margins_pair(const InequalityCase& c, double a, double b);

struct ProbeResult {
    std::string description;
    std::string endpoint;
    double t = 0.0;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct SharpnessReport {
    std::string id;
    std::vector<ProbeResult> probes;
    bool passed = false;
};

/// Throws UnknownCase, or NoSharpnessData if the case carries no probes.
SharpnessReport sharpness_probe(std::string_view id);

// Parametrised members of the iff families, for probing the failing side.

/// (cosh t)^{1-p} (sinh t/t)^p < I0 < q sinh t/t + (1-q) cosh t.
InequalityCase i0_l_a_case(double p, double q);
/// (cosh(t cos theta) + cosh(t sin theta))/2 < I0, theta = pi * num/den.
InequalityCase theta_family_case(int num, int den);
/// TQ < I_p.
InequalityCase tq_ip_case(double p);

} // namespace tqmean

#endif
