/** @file json_io.hpp
 *  @brief JSON serialization: series fixtures (arrays of decimal strings, to
 *         keep coefficients exact) and the machine-readable report schema
 *         {"kind", "params", "range", "checked", "violations", "elapsed_ms"}.
 */
#ifndef PARTFAM_JSON_IO_HPP
#define PARTFAM_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "partfam/bijections.hpp"
#include "partfam/congruence.hpp"
#include "partfam/family.hpp"
#include "partfam/series.hpp"

namespace partfam {

using Json = nlohmann::json;

/// Series fixture format: JSON array of decimal-string coefficients.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json params_to_json(const FamilyParams& params);
FamilyParams params_from_json(const Json& j);

/// Uniform machine-readable verification result shared by every subcommand
/// that checks a claim. Exit codes derive from violations.
struct VerificationReport {
    std::string kind;
    Json params;
    Int range_lo = 0;
    Int range_hi = 0;
    Int checked = 0;
    std::vector<Json> violations;
    double elapsed_ms = 0.0;

    bool ok() const { return violations.empty(); }
};

Json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

VerificationReport make_report(const BijectionReport& report);
VerificationReport make_report(const RecurrenceReport& report);
VerificationReport make_report(const CongruenceReport& report);

} // namespace partfam

#endif
