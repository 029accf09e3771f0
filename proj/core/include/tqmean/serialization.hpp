#ifndef TQMEAN_SERIALIZATION_HPP
#define TQMEAN_SERIALIZATION_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqmean/inequality_registry.hpp"
#include "tqmean/sequences.hpp"
#include "tqmean/sharp_constants.hpp"
#include "tqmean/special_functions.hpp"

namespace tqmean {

using Json = nlohmann::ordered_json;

/// {"kind": ..., "coefficients": [{"n", "num", "den"}, ...]}; num and den are
/// decimal strings because they outgrow 64-bit integers.
Json to_json(const CoeffTable& table);
/// [{"n", "num", "den"}] for exact rows, [{"n", "value"}] for real rows.
Json to_json(const std::vector<SeqValue>& rows);
Json to_json(const VerifyReport& report);
Json to_json(const SolverResult& result);
Json to_json(const SharpnessReport& report);
Json to_json(const MonotonicityReport& report);

/// Serialises with floating-point numbers at 17 significant digits
/// (non-finite values become null). indent < 0 gives a single line.
std::string dump(const Json& value, int indent = 2);

/// One CSV field per value; strings containing ',', '"' or newlines are quoted.
std::string csv_row(const std::vector<std::string>& fields);
std::string format_double(double x);

inline const std::vector<std::string> kVerifyCsvHeader = {
    "id", "status", "samples", "seed", "min_margin", "min_margin_t", "min_margin_link",
    "violations", "fatal_violations", "escalations", "indeterminate", "passed"};
std::vector<std::string> verify_csv_fields(const VerifyReport& report);

} // namespace tqmean

#endif
