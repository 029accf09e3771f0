#include "cli.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "tqmean/error.hpp"
#include "tqmean/inequality_registry.hpp"
#include "tqmean/means.hpp"
#include "tqmean/sequences.hpp"
#include "tqmean/serialization.hpp"
#include "tqmean/sharp_constants.hpp"
#include "tqmean/special_functions.hpp"

namespace tqmean::cli {

namespace {

struct GlobalOptions {
    std::string format = "json";
    std::optional<double> tolerance;

    bool csv() const { return format == "csv"; }
};

void emit(std::ostream& out, const Json& value)
{
    out << dump(value) << '\n';
}

void emit_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    for (const auto& row : rows) {
        out << csv_row(row) << '\n';
    }
}

std::string rational_text(const Rational& q)
{
    return to_fraction_string(q);
}

// ---- eval ----

struct EvalArgs {
    std::string kind;
    double a = 0.0;
    double b = 0.0;
};

int do_eval(const EvalArgs& args, const GlobalOptions& g, std::ostream& out)
{
    const MeanKind kind = MeanKind::parse(args.kind);
    const PositivePair pair(args.a, args.b);
    double value = 0.0;
    if (g.tolerance && kind.family == MeanFamily::AGM) {
        value = agm(pair, *g.tolerance);
    } else if (g.tolerance && (kind.family == MeanFamily::Toader || kind.family == MeanFamily::ToaderQi)) {
        QuadratureConfig cfg;
        cfg.tolerance = *g.tolerance;
        value = kind.family == MeanFamily::Toader ? toader_mean(pair, cfg) : tq_mean(pair, cfg);
    } else {
        value = evaluate(kind, pair);
    }
    if (g.csv()) {
        emit_csv(out, {{"mean", "a", "b", "value"},
                       {args.kind, format_double(args.a), format_double(args.b), format_double(value)}});
    } else {
        emit(out, Json{{"mean", args.kind}, {"a", args.a}, {"b", args.b}, {"value", value}});
    }
    return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
    std::vector<std::string> ids;
    long samples = 10000;
    std::uint64_t seed = 42;
};

int do_verify(const VerifyArgs& args, const GlobalOptions& g, std::ostream& out)
{
    std::vector<std::string> ids = args.ids;
    if (ids.empty()) {
        for (const InequalityCase& c : registry()) {
            ids.push_back(c.id);
        }
    } else {
        for (const std::string& id : ids) {
            find_case(id); // reject unknown ids before any work
        }
    }

    std::vector<VerifyReport> reports;
    long theorem_failures = 0;
    long conjecture_violations = 0;
    for (const std::string& id : ids) {
        reports.push_back(verify_case(id, args.samples, args.seed));
        const VerifyReport& r = reports.back();
        if (!r.passed) {
            ++theorem_failures;
        }
        conjecture_violations += r.violation_count - r.fatal_violation_count;
    }

    if (g.csv()) {
        std::vector<std::vector<std::string>> rows{kVerifyCsvHeader};
        for (const VerifyReport& r : reports) {
            rows.push_back(verify_csv_fields(r));
        }
        emit_csv(out, rows);
    } else {
        Json list = Json::array();
        for (const VerifyReport& r : reports) {
            list.push_back(to_json(r));
        }
        emit(out, Json{{"samples", args.samples},
                       {"seed", args.seed},
                       {"reports", list},
                       {"theorem_failures", theorem_failures},
                       {"conjecture_violations", conjecture_violations},
                       {"passed", theorem_failures == 0}});
    }
    return theorem_failures == 0 ? kExitOk : kExitFailure;
}

// ---- constants ----

int do_constants(const std::vector<double>& ps, const GlobalOptions& g, std::ostream& out)
{
    const double tol = g.tolerance.value_or(1e-10);
    const SolverResult t0 = find_t0_delta0(tol);
    std::vector<std::pair<double, SolverResult>> lambdas;
    for (double p : ps) {
        lambdas.emplace_back(p, find_lambda0(p, tol));
    }
    bool converged = t0.converged;
    for (const auto& [p, r] : lambdas) {
        converged = converged && r.converged;
    }

    if (g.csv()) {
        std::vector<std::vector<std::string>> rows{{"name", "p", "t", "value"},
                                                   {"delta0", "", format_double(t0.location),
                                                    format_double(t0.value)}};
        for (const auto& [p, r] : lambdas) {
            rows.push_back({"lambda0", format_double(p), format_double(r.location), format_double(r.value)});
        }
        emit_csv(out, rows);
    } else {
        Json lambda = Json::array();
        for (const auto& [p, r] : lambdas) {
            lambda.push_back(Json{{"p", p}, {"t", r.location}, {"value", r.value}});
        }
        emit(out, Json{{"t0", t0.location}, {"delta0", t0.value}, {"lambda0", lambda}});
    }
    return converged ? kExitOk : kExitFailure;
}

// ---- series / table ----

int do_series(const std::string& kind, int n_max, const GlobalOptions& g, std::ostream& out)
{
    const CoeffTable table = coeff_table(parse_coeff_kind(kind), n_max);
    if (g.csv()) {
        std::vector<std::vector<std::string>> rows{{"n", "coefficient"}};
        for (std::size_t n = 0; n < table.size(); ++n) {
            rows.push_back({std::to_string(n), rational_text(table[n])});
        }
        emit_csv(out, rows);
    } else {
        emit(out, to_json(table));
    }
    return kExitOk;
}

int do_table(const std::string& id, int n_max, const GlobalOptions& g, std::ostream& out)
{
    const std::vector<SeqValue> rows = sequence_table(id, n_max);
    if (g.csv()) {
        std::vector<std::vector<std::string>> text{{"n", "value"}};
        for (const SeqValue& r : rows) {
            text.push_back({std::to_string(r.n), r.exact ? rational_text(r.value) : format_double(r.real)});
        }
        emit_csv(out, text);
    } else {
        emit(out, Json{{"sequence", id}, {"rows", to_json(rows)}});
    }
    return kExitOk;
}

// ---- probe ----

int do_probe(const std::string& id, const GlobalOptions& g, std::ostream& out)
{
    const SharpnessReport report = sharpness_probe(id);
    if (g.csv()) {
        std::vector<std::vector<std::string>> rows{
            {"id", "description", "endpoint", "t", "value", "expected", "tolerance", "passed"}};
        for (const ProbeResult& p : report.probes) {
            rows.push_back({report.id, p.description, p.endpoint, format_double(p.t), format_double(p.value),
                            format_double(p.expected), format_double(p.tolerance),
                            p.passed ? "true" : "false"});
        }
        emit_csv(out, rows);
    } else {
        emit(out, to_json(report));
    }
    return report.passed ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Toader-Qi mean, related means and I0: evaluation, inequality verification, "
                 "sharp constants and exact tables",
                 "tqmean"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--tolerance", global.tolerance,
                   "Accuracy target: quadrature/AGM tolerance for eval, location tolerance for constants")
        ->check(CLI::PositiveNumber);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a mean at (a, b)");
    eval->add_option("kind", eval_args.kind,
                     "geometric, arithmetic, logarithmic, identric, agm, toader, toader-qi or power:<p>")
        ->required();
    eval->add_option("a", eval_args.a, "First argument (> 0)")->required();
    eval->add_option("b", eval_args.b, "Second argument (> 0)")->required();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Sample-check registry inequalities");
    verify->add_option("--id", verify_args.ids, "Case id (repeatable); default all cases");
    verify->add_option("--samples", verify_args.samples, "Samples per case")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "Generator seed")->capture_default_str();

    std::vector<double> ps{0.9, 0.95};
    CLI::App* constants = app.add_subcommand("constants", "Solve for the sharp constants t0, delta0, lambda0(p)");
    constants->add_option("--p", ps, "Values of p in (sqrt(3)/2, 1) for lambda0, comma separated")
        ->delimiter(',')
        ->capture_default_str();

    std::string series_kind;
    int series_n = 0;
    CLI::App* series = app.add_subcommand("series", "Exact power-series coefficients");
    series->add_option("kind", series_kind,
                       "i0, i0-squared, i0-fourth, cosh-sinh3, v-sequence, sinh2t-over-2t, sinh-over-t, cosh")
        ->required();
    series->add_option("n_max", series_n, "Last index")->required()->check(CLI::NonNegativeNumber);

    std::string table_id;
    int table_n = 0;
    CLI::App* table = app.add_subcommand("table", "Tabulate a named sequence");
    table->add_option("sequence", table_id, "Sequence id")->required();
    table->add_option("n_max", table_n, "Last index")->required()->check(CLI::NonNegativeNumber);

    std::string probe_id;
    CLI::App* probe = app.add_subcommand("probe", "Run the sharpness probes of a case");
    probe->add_option("id", probe_id, "Case id")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "tqmean: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (eval->parsed()) {
            return do_eval(eval_args, global, out);
        }
        if (verify->parsed()) {
            return do_verify(verify_args, global, out);
        }
        if (constants->parsed()) {
            return do_constants(ps, global, out);
        }
        if (series->parsed()) {
            return do_series(series_kind, series_n, global, out);
        }
        if (table->parsed()) {
            return do_table(table_id, table_n, global, out);
        }
        if (probe->parsed()) {
            return do_probe(probe_id, global, out);
        }
    } catch (const DomainError& e) {
        err << "tqmean: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedKind& e) {
        err << "tqmean: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownCase& e) {
        err << "tqmean: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownSequence& e) {
        err << "tqmean: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoSharpnessData& e) {
        err << "tqmean: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "tqmean: " << e.what() << '\n';
        return kExitFailure;
    }
    err << "tqmean: no command given\n";
    return kExitUsage;
}

} // namespace tqmean::cli
