#include "tqmean/serialization.hpp"

#include <cmath>
#include <cstdio>

namespace tqmean {

namespace {

Json rational_row(int n, const Rational& q)
{
    return Json{{"n", n}, {"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

void dump_to(const Json& v, int indent, int depth, std::string& out)
{
    const bool pretty = indent >= 0;
    const auto newline = [&](int d) {
        if (pretty) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (v.type()) {
    case Json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(depth + 1);
            out += Json(it.key()).dump();
            out += pretty ? ": " : ":";
            dump_to(it.value(), indent, depth + 1, out);
        }
        newline(depth);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& item : v) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(depth + 1);
            dump_to(item, indent, depth + 1, out);
        }
        newline(depth);
        out += ']';
        return;
    }
    case Json::value_t::number_float: {
        const double x = v.get<double>();
        out += std::isfinite(x) ? format_double(x) : "null";
        return;
    }
    default:
        out += v.dump();
        return;
    }
}

} // namespace

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json to_json(const CoeffTable& table)
{
    Json rows = Json::array();
    for (std::size_t n = 0; n < table.size(); ++n) {
        rows.push_back(rational_row(static_cast<int>(n), table[n]));
    }
    return Json{{"kind", std::string(to_string(table.kind))}, {"coefficients", rows}};
}

Json to_json(const std::vector<SeqValue>& rows)
{
    Json out = Json::array();
    for (const SeqValue& r : rows) {
        if (r.exact) {
            out.push_back(rational_row(r.n, r.value));
        } else {
            out.push_back(Json{{"n", r.n}, {"value", r.real}});
        }
    }
    return out;
}

Json to_json(const VerifyReport& report)
{
    Json location{{"t", report.min_margin.t}};
    if (report.domain == DomainKind::Pair) {
        location["a"] = report.min_margin.a;
        location["b"] = report.min_margin.b;
    } else if (report.domain == DomainKind::Index) {
        location = Json{{"n", static_cast<long>(report.min_margin.t)}};
    }
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        Json j{{"sample", v.sample}, {"t", v.t}};
        if (report.domain == DomainKind::Pair) {
            j["a"] = v.a;
            j["b"] = v.b;
        }
        j["link"] = v.link;
        j["margin"] = v.margin;
        j["status"] = to_string(v.status);
        violations.push_back(j);
    }
    return Json{{"id", report.id},
                {"status", to_string(report.status)},
                {"domain", to_string(report.domain)},
                {"samples", report.samples},
                {"seed", report.seed},
                {"min_margin", Json{{"value", report.min_margin.value},
                                    {"location", location},
                                    {"link", report.min_margin.link}}},
                {"violations", violations},
                {"violation_count", report.violation_count},
                {"fatal_violation_count", report.fatal_violation_count},
                {"escalations", report.escalations},
                {"indeterminate", report.indeterminate},
                {"extended_points", report.extended_points},
                {"passed", report.passed}};
}

Json to_json(const SolverResult& result)
{
    return Json{{"location", result.location},
                {"value", result.value},
                {"residual", result.residual},
                {"iterations", result.iterations},
                {"converged", result.converged}};
}

Json to_json(const SharpnessReport& report)
{
    Json probes = Json::array();
    for (const ProbeResult& p : report.probes) {
        probes.push_back(Json{{"description", p.description},
                              {"endpoint", p.endpoint},
                              {"t", p.t},
                              {"value", p.value},
                              {"expected", p.expected},
                              {"tolerance", p.tolerance},
                              {"passed", p.passed}});
    }
    return Json{{"id", report.id}, {"probes", probes}, {"passed", report.passed}};
}

Json to_json(const MonotonicityReport& report)
{
    return Json{{"shape", to_string(report.shape)},
                {"turning_index", report.turning_index},
                {"turning_location", report.turning_location},
                {"values", report.values}};
}

std::string dump(const Json& value, int indent)
{
    std::string out;
    dump_to(value, indent, 0, out);
    return out;
}

std::string csv_row(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") == std::string::npos) {
            out += f;
            continue;
        }
        out += '"';
        for (char ch : f) {
            if (ch == '"') {
                out += '"';
            }
            out += ch;
        }
        out += '"';
    }
    return out;
}

std::vector<std::string> verify_csv_fields(const VerifyReport& r)
{
    return {r.id,
            to_string(r.status),
            std::to_string(r.samples),
            std::to_string(r.seed),
            format_double(r.min_margin.value),
            format_double(r.min_margin.t),
            std::to_string(r.min_margin.link),
            std::to_string(r.violation_count),
            std::to_string(r.fatal_violation_count),
            std::to_string(r.escalations),
            std::to_string(r.indeterminate),
            r.passed ? "true" : "false"};
}

} // namespace tqmean
