#pragma once

// Row format shared by `compute` and `sweep`, plus serialisation of
// verification reports. Numbers are printed with %.17g in both CSV and JSON
// so the two formats carry bit-identical values.

#include <optional>
#include <string>
#include <vector>

#include "fisherpoly/fisher.hpp"
#include "fisherpoly/oracle.hpp"

namespace fisherpoly {

struct OutputRecord
{
    std::string family;
    std::string target;
    long n = 0;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> lambda;
    std::optional<double> fisher_closed;  // empty when not requested
    std::optional<double> fisher_sum;
    std::optional<double> fisher_oracle;
    std::optional<double> rel_discrepancy;
};

/// Column/key order of OutputRecord.
const std::vector<std::string>& record_columns();

/// Fills family/target/n and the parameters relevant to `f`. Grosjean rows
/// also carry the derived beta.
OutputRecord make_record(Family f, ParamTarget t, long n, const Params& p);

std::string format_number(double v);

std::string csv_header();
std::string to_csv(const OutputRecord& r);
std::string to_json(const OutputRecord& r);
std::string to_text(const OutputRecord& r);

std::string report_csv_header();
std::string to_csv(const VerificationReport& r);
std::string to_json(const VerificationReport& r);

}  // namespace fisherpoly
