#include "fisherpoly/output_record.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fisherpoly {

const std::vector<std::string>& record_columns()
{
    static const std::vector<std::string> cols = {
        "family", "target", "n", "alpha", "beta", "lambda",
        "fisher_closed", "fisher_sum", "fisher_oracle", "rel_discrepancy"};
    return cols;
}

OutputRecord make_record(Family f, ParamTarget t, long n, const Params& p)
{
    OutputRecord r;
    r.family = family_name(f);
    r.target = target_name(t);
    r.n = n;
    switch (f) {
    case Family::Laguerre: r.alpha = p.alpha; break;
    case Family::Jacobi:
        r.alpha = p.alpha;
        r.beta = p.beta;
        break;
    case Family::Gegenbauer: r.lambda = p.lambda; break;
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond:
        r.alpha = p.alpha;
        r.beta = jacobi_parameters(f, p).second;
        break;
    }
    return r;
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_opt(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

// JSON has no inf/nan
std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }
std::string json_opt(const std::optional<double>& v) { return v ? json_number(*v) : "null"; }
std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::string> record_values(const OutputRecord& r, bool json)
{
    auto opt = json ? json_opt : csv_opt;
    return {json ? json_string(r.family) : csv_field(r.family),
            json ? json_string(r.target) : csv_field(r.target),
            std::to_string(r.n),
            opt(r.alpha),
            opt(r.beta),
            opt(r.lambda),
            opt(r.fisher_closed),
            opt(r.fisher_sum),
            opt(r.fisher_oracle),
            opt(r.rel_discrepancy)};
}

std::string join(const std::vector<std::string>& v, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += v[i];
    }
    return out;
}

const char* mode_name(Tolerance m)
{
    switch (m) {
    case Tolerance::Absolute: return "absolute";
    case Tolerance::Relative: return "relative";
    case Tolerance::Either: return "either";
    }
    return "?";
}

}  // namespace

std::string csv_header() { return join(record_columns(), ','); }

std::string to_csv(const OutputRecord& r) { return join(record_values(r, false), ','); }

std::string to_json(const OutputRecord& r)
{
    const auto vals = record_values(r, true);
    const auto& cols = record_columns();
    std::string out = "{";
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i)
            out += ',';
        out += '"' + cols[i] + "\":" + vals[i];
    }
    return out + '}';
}

std::string to_text(const OutputRecord& r)
{
    std::ostringstream os;
    os.precision(12);
    os << r.family << " / " << r.target << "  n=" << r.n;
    if (r.alpha)
        os << "  alpha=" << *r.alpha;
    if (r.beta)
        os << "  beta=" << *r.beta;
    if (r.lambda)
        os << "  lambda=" << *r.lambda;
    if (r.fisher_closed)
        os << "\n  closed form : " << *r.fisher_closed;
    if (r.fisher_sum)
        os << "\n  sum form    : " << *r.fisher_sum;
    if (r.fisher_oracle)
        os << "\n  quadrature  : " << *r.fisher_oracle;
    if (r.rel_discrepancy)
        os << "\n  max rel diff: " << *r.rel_discrepancy;
    return os.str();
}

std::string report_csv_header()
{
    return "check,computed,expected,abs_err,rel_err,threshold,mode,passed";
}

std::string to_csv(const VerificationReport& r)
{
    return join({csv_field(r.check_name), format_number(r.computed), format_number(r.expected),
                 format_number(r.abs_err), format_number(r.rel_err), format_number(r.threshold),
                 mode_name(r.mode), r.passed ? "true" : "false"},
                ',');
}

std::string to_json(const VerificationReport& r)
{
    std::string out = "{\"check\":" + json_string(r.check_name);
    out += ",\"computed\":" + json_number(r.computed);
    out += ",\"expected\":" + json_number(r.expected);
    out += ",\"abs_err\":" + json_number(r.abs_err);
    out += ",\"rel_err\":" + json_number(r.rel_err);
    out += ",\"threshold\":" + json_number(r.threshold);
    out += ",\"mode\":\"" + std::string(mode_name(r.mode)) + '"';
    out += std::string(",\"passed\":") + (r.passed ? "true" : "false");
    return out + '}';
}

}  // namespace fisherpoly
