// fisherpoly: compute / verify / sweep / selftest
//
// Exit codes: 0 ok, 1 a check failed (or quadrature did not converge),
// 2 bad flags or a parameter outside its domain.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fisherpoly/acceptance.hpp"
#include "fisherpoly/fisher.hpp"
#include "fisherpoly/oracle.hpp"
#include "fisherpoly/output_record.hpp"

using namespace fisherpoly;

namespace {

// Bad input. Caught in main and turned into exit code 2.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct ParamFlags
{
    std::optional<std::string> alpha, beta, lambda;
};

double parse_real(const std::string& flag, const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw UsageError("--" + flag + ": not a number: '" + s + "'");
    return v;
}

Family family_from(const std::string& s)
{
    if (auto f = parse_family(s))
        return *f;
    throw UsageError("unknown family '" + s + "'");
}

ParamTarget target_from(const std::string& s)
{
    if (auto t = parse_target(s))
        return *t;
    throw UsageError("unknown target '" + s + "'");
}

// Which of alpha/beta/lambda a family takes on the command line.
std::vector<std::string> family_flags(Family f)
{
    switch (f) {
    case Family::Laguerre:
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond: return {"alpha"};
    case Family::Jacobi: return {"alpha", "beta"};
    case Family::Gegenbauer: return {"lambda"};
    }
    return {};
}

const std::optional<std::string>& flag_value(const ParamFlags& pf, const std::string& name)
{
    return name == "alpha" ? pf.alpha : name == "beta" ? pf.beta : pf.lambda;
}

void check_flag_set(Family f, const ParamFlags& pf)
{
    const auto wanted = family_flags(f);
    for (const std::string name : {"alpha", "beta", "lambda"}) {
        const bool given = flag_value(pf, name).has_value();
        const bool used = std::find(wanted.begin(), wanted.end(), name) != wanted.end();
        if (used && !given)
            throw UsageError(std::string(family_name(f)) + ": --" + name + " is required");
        if (!used && given) {
            if ((f == Family::GrosjeanFirst || f == Family::GrosjeanSecond) && name == "beta")
                throw UsageError(std::string(family_name(f)) + ": beta is derived from alpha (" +
                                 (f == Family::GrosjeanFirst ? "-1-alpha" : "1-alpha") +
                                 "), do not pass --beta");
            throw UsageError(std::string(family_name(f)) + ": --" + name + " does not apply");
        }
    }
}

Params set_param(Params p, const std::string& name, double v)
{
    if (name == "alpha")
        p.alpha = v;
    else if (name == "beta")
        p.beta = v;
    else
        p.lambda = v;
    return p;
}

enum class Method { Sum, Closed, Both };

Method method_from(const std::string& s)
{
    if (s == "sum")
        return Method::Sum;
    if (s == "closed")
        return Method::Closed;
    return Method::Both;
}

OutputRecord compute_record(Family f, ParamTarget t, long n, const Params& p, Method m,
                            bool oracle)
{
    OutputRecord r = make_record(f, t, n, p);
    std::vector<double> values;
    if (m != Method::Sum) {
        r.fisher_closed = fisher_closed_form(f, t, n, p).value;
        values.push_back(*r.fisher_closed);
    }
    if (m != Method::Closed) {
        r.fisher_sum = fisher_sum_form(f, t, n, p).value;
        values.push_back(*r.fisher_sum);
    }
    if (oracle) {
        r.fisher_oracle = fisher_by_definition(f, t, n, p);
        values.push_back(*r.fisher_oracle);
    }
    if (values.size() > 1) {
        double worst = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                worst = std::max(worst, relative_difference(values[i], values[j]));
        r.rel_discrepancy = worst;
    }
    return r;
}

// domain problems are the caller's fault
void check_domain(Family f, ParamTarget t, long n, const Params& p)
{
    try {
        validate_pairing(f, t);
        validate(f, p);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    } catch (const PairingError& e) {
        throw UsageError(e.what());
    }
    if (n < 0)
        throw UsageError("--n must be >= 0");
}

std::string render(const OutputRecord& r, const std::string& format)
{
    if (format == "json")
        return to_json(r);
    if (format == "csv")
        return to_csv(r);
    return to_text(r);
}

// --- compute ---------------------------------------------------------------

struct ComputeArgs
{
    std::string family, target, method = "both", format = "json";
    long n = 0;
    ParamFlags params;
    bool oracle = false;
};

int run_compute(const ComputeArgs& a)
{
    const Family f = family_from(a.family);
    const ParamTarget t = target_from(a.target);
    check_flag_set(f, a.params);
    Params p;
    for (const auto& name : family_flags(f))
        p = set_param(p, name, parse_real(name, *flag_value(a.params, name)));
    check_domain(f, t, a.n, p);
    OutputRecord r;
    try {
        r = compute_record(f, t, a.n, p, method_from(a.method), a.oracle);
    } catch (const DomainError& e) {
        throw UsageError(e.what());  // e.g. too close to the boundary for the oracle
    }
    if (a.format == "csv")
        std::cout << csv_header() << '\n';
    std::cout << render(r, a.format) << '\n';
    return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs
{
    std::string suite = "all", format = "json";
    std::optional<long> n_max;
    std::optional<double> tol;
    std::optional<std::string> family;
};

int run_verify(const VerifyArgs& a)
{
    std::optional<double> tol = a.tol;
    if (!tol) {
        try {
            tol = tol_override_from_env();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (tol && !(*tol > 0.0))
        throw UsageError("--tol must be > 0");
    if (a.n_max && *a.n_max < 0)
        throw UsageError("--n-max must be >= 0");
    std::optional<Family> only;
    if (a.family)
        only = family_from(*a.family);

    auto grid = acceptance_grid();
    std::erase_if(grid, [&](const GridCase& c) { return only && c.family != *only; });
    // orthonormality and norms do not depend on the target
    auto weights = grid;
    std::erase_if(weights, [](const GridCase& c) {
        return c.family == Family::Jacobi && c.target == ParamTarget::Beta;
    });

    const bool all = a.suite == "all";
    const bool csv = a.format == "csv";
    long failures = 0;
    long total = 0;
    auto emit = [&](const VerificationReport& r) {
        ++total;
        failures += r.passed ? 0 : 1;
        std::cout << (csv ? to_csv(r) : to_json(r)) << '\n';
    };
    // anything thrown by a check is reported as a failed check
    auto guarded = [&](const std::string& name, auto&& fn) {
        try {
            emit(fn());
        } catch (const std::exception& e) {
            VerificationReport r = make_report(name + ": " + e.what(), NAN, NAN, tol.value_or(0.0),
                                               Tolerance::Either, {});
            r.passed = false;
            emit(r);
        }
    };
    auto nmax = [&](long dflt) { return a.n_max.value_or(dflt); };

    if (csv)
        std::cout << report_csv_header() << '\n';

    if (all || a.suite == "fisher") {
        for (const auto& c : grid)
            for (long n : {0L, 1L, 2L, 3L, 5L, 8L}) {
                if (n > nmax(8))
                    continue;
                guarded("fisher " + case_label(c.family, c.target, n, c.params), [&] {
                    return verify_fisher(c.family, c.target, n, c.params, {}, tol);
                });
            }
    }
    if (all || a.suite == "lemma2") {
        const double thr = tol.value_or(1e-7);
        for (const auto& c : grid)
            for (long n = 0; n <= nmax(5); ++n) {
                const std::string lbl = case_label(c.family, c.target, n, c.params);
                guarded("lemma2(a) " + lbl, [&] {
                    return verify_lemma2(Lemma2Identity::A, c.family, c.target, n, std::nullopt,
                                         c.params, {}, thr);
                });
                for (long k = 0; k < n; ++k)
                    guarded("lemma2(b) " + lbl, [&] {
                        return verify_lemma2(Lemma2Identity::B, c.family, c.target, n, k, c.params,
                                             {}, thr);
                    });
                guarded("lemma2(c) " + lbl, [&] {
                    return verify_lemma2(Lemma2Identity::C, c.family, c.target, n, std::nullopt,
                                         c.params, {}, thr);
                });
            }
    }
    if (all || a.suite == "orthonormality") {
        const double thr = tol.value_or(1e-8);
        for (const auto& c : weights)
            for (long n = 0; n <= nmax(8); ++n) {
                const std::string lbl = case_label(c.family, std::nullopt, n, c.params);
                for (long m = 0; m <= n; ++m)
                    guarded("orthonormality " + lbl, [&] {
                        return verify_orthonormality(c.family, n, m, c.params, {}, thr);
                    });
                guarded("density " + lbl,
                        [&] { return verify_density(c.family, n, c.params, {}, thr); });
            }
    }
    if (all || a.suite == "norms") {
        const double thr = tol.value_or(1e-8);
        for (const auto& c : weights)
            for (long n = 0; n <= nmax(8); ++n)
                guarded("norm " + case_label(c.family, std::nullopt, n, c.params),
                        [&] { return verify_norm(c.family, n, c.params, {}, thr); });
    }
    std::cerr << "verify: " << total - failures << "/" << total << " passed\n";
    return failures ? 1 : 0;
}

// --- sweep -----------------------------------------------------------------

struct SweepArgs
{
    std::string family, target, n_list, method = "both", format = "csv";
    ParamFlags params;
    bool oracle = false;
    int parallel = 1;
};

std::vector<long> parse_n_list(const std::string& s)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 0)
            throw UsageError("--n-list: '" + item + "' is not an integer >= 0");
        out.push_back(v);
    }
    if (out.empty())
        throw UsageError("--n-list is empty");
    return out;
}

// start:stop:step, inclusive of stop up to rounding
std::vector<double> parse_range(const std::string& flag, const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() != 3)
        throw UsageError("--" + flag + ": expected start:stop:step, got '" + s + "'");
    const double start = parse_real(flag, parts[0]);
    const double stop = parse_real(flag, parts[1]);
    const double step = parse_real(flag, parts[2]);
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start)
        throw UsageError("--" + flag + ": empty grid '" + s + "' (need start <= stop and step > 0)");
    const double span = (stop - start) / step;
    if (span > 1e7)
        throw UsageError("--" + flag + ": grid too large");
    const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    for (long i = 0; i < count; ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

int run_sweep(const SweepArgs& a)
{
    const Family f = family_from(a.family);
    const ParamTarget t = target_from(a.target);
    check_flag_set(f, a.params);
    const auto ns = parse_n_list(a.n_list);
    if (a.parallel < 1)
        throw UsageError("--parallel must be >= 1");

    std::string ranged;
    Params base;
    for (const auto& name : family_flags(f)) {
        const std::string& v = *flag_value(a.params, name);
        if (v.find(':') != std::string::npos) {
            if (!ranged.empty())
                throw UsageError("sweep takes exactly one start:stop:step parameter");
            ranged = name;
        } else {
            base = set_param(base, name, parse_real(name, v));
        }
    }
    if (ranged.empty())
        throw UsageError("sweep needs one parameter given as start:stop:step");
    const auto values = parse_range(ranged, *flag_value(a.params, ranged));

    // n-major, then parameter ascending; the whole grid is checked first
    struct Point
    {
        long n;
        Params p;
    };
    std::vector<Point> points;
    for (long n : ns)
        for (double v : values)
            points.push_back({n, set_param(base, ranged, v)});
    for (const auto& pt : points)
        check_domain(f, t, pt.n, pt.p);

    const Method m = method_from(a.method);
    std::vector<OutputRecord> rows(points.size());
    std::vector<std::string> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                rows[i] = compute_record(f, t, points[i].n, points[i].p, m, a.oracle);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < std::min<int>(a.parallel, static_cast<int>(points.size())); ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    for (const auto& e : errors)
        if (!e.empty()) {
            std::cerr << "error: " << e << '\n';
            return 1;
        }

    const bool csv = a.format == "csv";
    if (csv)
        std::cout << csv_header() << '\n';
    for (const auto& r : rows)
        std::cout << (csv ? to_csv(r) : to_json(r)) << '\n';
    return 0;
}

// --- selftest --------------------------------------------------------------

int run_selftest(bool quick)
{
    AcceptanceOptions opts;
    opts.quick = quick;
    try {
        opts.tol_override = tol_override_from_env();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    int failed = 0;
    for (int id = 1; id <= kCriterionCount; ++id) {
        const auto r = run_criterion(id, opts);
        std::cout << format_result(r) << std::endl;
        failed += r.passed ? 0 : 1;
    }
    std::cout << "selftest" << (quick ? " (quick)" : "") << ": "
              << kCriterionCount - failed << "/" << kCriterionCount << " criteria passed"
              << std::endl;
    return failed ? 1 : 0;
}

void add_param_flags(CLI::App* cmd, ParamFlags& pf)
{
    cmd->add_option("--alpha", pf.alpha, "alpha");
    cmd->add_option("--beta", pf.beta, "beta (jacobi only)");
    cmd->add_option("--lambda", pf.lambda, "lambda (gegenbauer only)");
}

const std::vector<std::string> kFamilies = {"laguerre", "jacobi", "gegenbauer", "grosjean1",
                                            "grosjean2"};
const std::vector<std::string> kTargets = {"alpha", "beta", "lambda"};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fisher information of classical orthogonal polynomials with respect to their "
                 "parameters"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Fisher information for one (family, target, n)");
    compute->add_option("--family", ca.family)->required()->check(CLI::IsMember(kFamilies));
    compute->add_option("--target", ca.target)->required()->check(CLI::IsMember(kTargets));
    compute->add_option("--n", ca.n)->required()->check(CLI::NonNegativeNumber);
    add_param_flags(compute, ca.params);
    compute->add_option("--method", ca.method)->check(CLI::IsMember({"sum", "closed", "both"}));
    compute->add_option("--format", ca.format)->check(CLI::IsMember({"json", "csv", "text"}));
    compute->add_flag("--oracle", ca.oracle, "also integrate the definition numerically");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run quadrature checks, one report per line");
    verify->add_option("--suite", va.suite)
        ->check(CLI::IsMember({"fisher", "lemma2", "orthonormality", "norms", "all"}));
    verify->add_option("--n-max", va.n_max);
    verify->add_option("--tol", va.tol, "threshold for every check (overrides "
                                        "FISHERPOLY_TOL_OVERRIDE)");
    verify->add_option("--family", va.family, "restrict to one family")
        ->check(CLI::IsMember(kFamilies));
    verify->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv"}));

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Fisher information over a parameter grid");
    sweep->add_option("--family", sa.family)->required()->check(CLI::IsMember(kFamilies));
    sweep->add_option("--target", sa.target)->required()->check(CLI::IsMember(kTargets));
    sweep->add_option("--n-list", sa.n_list, "comma-separated degrees")->required();
    add_param_flags(sweep, sa.params);
    sweep->add_option("--method", sa.method)->check(CLI::IsMember({"sum", "closed", "both"}));
    sweep->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv"}));
    sweep->add_flag("--oracle", sa.oracle);
    sweep->add_option("--parallel", sa.parallel, "worker threads");

    bool quick = false;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance grid");
    selftest->add_flag("--quick", quick, "degrees n <= 4 only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*compute)
            return run_compute(ca);
        if (*verify)
            return run_verify(va);
        if (*sweep)
            return run_sweep(sa);
        return run_selftest(quick);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
