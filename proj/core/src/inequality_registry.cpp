#include "tqmean/inequality_registry.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "registry_internal.hpp"
#include "tqmean/error.hpp"
#include "tqmean/rng.hpp"

namespace tqmean {

namespace {

using HP = HighPrecision;

constexpr double kPairArgLo = 1e-3;
constexpr double kPairArgHi = 1e3;

template <class Real>
std::vector<double> margins_of(const std::vector<Real>& sides)
{
    std::vector<double> m;
    m.reserve(sides.size() - 1);
    for (std::size_t k = 0; k + 1 < sides.size(); ++k) {
        const Real& lo = sides[k];
        const Real& hi = sides[k + 1];
        const Real denom = lo < hi ? lo : hi;
        m.push_back(static_cast<double>(Real((hi - lo) / denom)));
    }
    return m;
}

bool needs_escalation(const std::vector<double>& margins)
{
    for (double m : margins) {
        if (!std::isfinite(m) || m < kEscalationMargin) {
            return true;
        }
    }
    return false;
}

bool violates(const Link& link, double margin)
{
    return link.relation == Relation::Less ? !(margin > 0.0) : !(margin >= 0.0);
}

struct Recorder {
    const InequalityCase& c;
    VerifyReport& rep;

    void record(long sample, double t, double a, double b, const std::vector<double>& margins,
                bool precise, const std::vector<bool>* exact = nullptr)
    {
        if (margins.size() != c.links.size()) {
            throw ConsistencyError("case " + c.id + ": side count does not match its links");
        }
        for (std::size_t k = 0; k < margins.size(); ++k) {
            const double m = margins[k];
            if (precise && !exact && std::abs(m) < kIndeterminateMargin) {
                ++rep.indeterminate;
                continue;
            }
            if (m < rep.min_margin.value || std::isnan(m)) {
                rep.min_margin = {m, t, a, b, static_cast<int>(k)};
            }
            const bool bad = exact ? !(*exact)[k] : violates(c.links[k], m);
            if (!bad) {
                continue;
            }
            const CaseStatus status = c.links[k].status;
            ++rep.violation_count;
            if (status != CaseStatus::Conjecture) {
                ++rep.fatal_violation_count;
            }
            if (rep.violations.size() < kMaxStoredViolations) {
                rep.violations.push_back({sample, t, a, b, static_cast<int>(k), m, status});
            }
        }
    }
};

void verify_half_log(const InequalityCase& c, long samples, Xorshift64Star& rng, Recorder& rec)
{
    const HalfLogForm& f = *c.half_log;
    for (long i = 0; i < samples; ++i) {
        const double t = rng.log_uniform(c.lo, c.hi);
        std::vector<double> m = margins_of(f.fast(t));
        const bool escalate = needs_escalation(m);
        if (escalate) {
            m = margins_of(f.precise(HP(t)));
            ++rec.rep.escalations;
        }
        rec.record(i, t, 0.0, 0.0, m, escalate);
    }
    for (double t : kExtendedT) {
        rec.record(-1, t, 0.0, 0.0, margins_of(f.precise(HP(t))), true);
        ++rec.rep.extended_points;
    }
}

void verify_pair(const InequalityCase& c, long samples, Xorshift64Star& rng, Recorder& rec)
{
    const PairForm& f = *c.pair;
    for (long i = 0; i < samples; ++i) {
        const double t = rng.log_uniform(c.lo, c.hi);
        double a = rng.log_uniform(kPairArgLo, kPairArgHi);
        double b = a * std::exp(2 * t);
        if (rng.uniform() < 0.5) {
            std::swap(a, b);
        }
        std::vector<double> m = margins_of(f.fast(a, b));
        const bool escalate = needs_escalation(m);
        if (escalate) {
            m = margins_of(f.precise(HP(a), HP(b)));
            ++rec.rep.escalations;
        }
        rec.record(i, 0.5 * std::log(b / a), a, b, m, escalate);
    }
    for (double t : kExtendedT) {
        using std::exp;
        rec.record(-1, t, 1.0, std::exp(2 * t), margins_of(f.precise(HP(1), HP(exp(HP(2 * t))))), true);
        ++rec.rep.extended_points;
    }
}

void verify_index(const InequalityCase& c, Recorder& rec)
{
    const int first = static_cast<int>(c.lo);
    const int last = static_cast<int>(c.hi);
    const std::vector<IndexSample> rows = c.index(first, last);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int n = first + static_cast<int>(i);
        rec.record(n, static_cast<double>(n), 0.0, 0.0, margins_of(rows[i].sides), true, &rows[i].holds);
    }
    rec.rep.samples = static_cast<long>(rows.size());
}

} // namespace

std::string to_string(CaseStatus status)
{
    switch (status) {
    case CaseStatus::Theorem: return "theorem";
    case CaseStatus::ExternalTheorem: return "external_theorem";
    case CaseStatus::Conjecture: return "conjecture";
    }
    return "theorem";
}

std::string to_string(DomainKind domain)
{
    switch (domain) {
    case DomainKind::HalfLog: return "t";
    case DomainKind::Pair: return "pair";
    case DomainKind::Index: return "index";
    }
    return "t";
}

CaseStatus InequalityCase::status() const
{
    bool any_theorem = false;
    for (const Link& l : links) {
        if (l.status == CaseStatus::Conjecture) {
            return CaseStatus::Conjecture;
        }
        any_theorem = any_theorem || l.status == CaseStatus::Theorem;
    }
    return any_theorem ? CaseStatus::Theorem : CaseStatus::ExternalTheorem;
}

const std::vector<InequalityCase>& registry()
{
    static const std::vector<InequalityCase> cases = detail::build_registry();
    return cases;
}

const InequalityCase& find_case(std::string_view id)
{
    for (const InequalityCase& c : registry()) {
        if (c.id == id) {
            return c;
        }
    }
    throw UnknownCase("unknown inequality case: " + std::string(id));
}

VerifyReport verify(const InequalityCase& c, long samples, std::uint64_t seed)
{
    if (samples < 1) {
        throw DomainError("verify: samples must be >= 1");
    }
    VerifyReport rep;
    rep.id = c.id;
    rep.status = c.status();
    rep.domain = c.domain;
    rep.samples = samples;
    rep.seed = seed;
    rep.min_margin.value = std::numeric_limits<double>::infinity();
    Recorder rec{c, rep};
    Xorshift64Star rng(seed);
    switch (c.domain) {
    case DomainKind::HalfLog:
        verify_half_log(c, samples, rng, rec);
        break;
    case DomainKind::Pair:
        verify_pair(c, samples, rng, rec);
        break;
    case DomainKind::Index:
        verify_index(c, rec);
        break;
    }
    rep.passed = rep.fatal_violation_count == 0;
    return rep;
}

VerifyReport verify_case(std::string_view id, long samples, std::uint64_t seed)
{
    return verify(find_case(id), samples, seed);
}

std::vector<double> link_margins_t(const InequalityCase& c, double t)
{
    if (!c.half_log) {
        throw UnsupportedKind("case " + c.id + " has no t form");
    }
    return margins_of(c.half_log->precise(HP(t)));
}

std::vector<double> link_margins_pair(const InequalityCase& c, double a, double b)
{
    if (!c.pair) {
        throw UnsupportedKind("case " + c.id + " has no pair form");
    }
    return margins_of(c.pair->precise(HP(a), HP(b)));
}

SharpnessReport sharpness_probe(std::string_view id)
{
    const InequalityCase& c = find_case(id);
    if (c.sharpness.empty()) {
        throw NoSharpnessData("case " + c.id + " carries no sharpness data");
    }
    SharpnessReport rep;
    rep.id = c.id;
    rep.passed = true;
    for (const SharpnessProbe& p : c.sharpness) {
        ProbeResult r;
        r.description = p.description;
        r.endpoint = p.endpoint;
        r.t = p.t;
        r.expected = p.expected;
        r.tolerance = p.tolerance;
        r.value = static_cast<double>(p.quantity(HP(p.t)));
        r.passed = std::abs(r.value - r.expected) <= r.tolerance;
        rep.passed = rep.passed && r.passed;
        rep.probes.push_back(std::move(r));
    }
    return rep;
}

} // namespace tqmean
