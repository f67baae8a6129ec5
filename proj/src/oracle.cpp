#include "fisherpoly/oracle.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "fisherpoly/fisher.hpp"
#include "fisherpoly/param_derivative.hpp"

namespace fisherpoly {

VerificationReport make_report(std::string name, double computed, double expected,
                               double threshold, Tolerance mode, const QuadratureConfig& cfg)
{
    VerificationReport r;
    r.check_name = std::move(name);
    r.computed = computed;
    r.expected = expected;
    r.abs_err = std::fabs(computed - expected);
    r.rel_err = expected == 0.0 ? (r.abs_err == 0.0 ? 0.0 : INFINITY) : r.abs_err / std::fabs(expected);
    r.threshold = threshold;
    r.mode = mode;
    switch (mode) {
    case Tolerance::Absolute: r.passed = r.abs_err <= threshold; break;
    case Tolerance::Relative: r.passed = r.rel_err <= threshold; break;
    case Tolerance::Either: r.passed = r.abs_err <= threshold || r.rel_err <= threshold; break;
    }
    r.config = cfg;
    return r;
}

std::string case_label(Family f, std::optional<ParamTarget> t, long n, const Params& p)
{
    std::ostringstream os;
    os.precision(10);
    os << family_name(f);
    if (t)
        os << '/' << target_name(*t);
    os << " n=" << n;
    switch (f) {
    case Family::Laguerre:
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond: os << " alpha=" << p.alpha; break;
    case Family::Jacobi: os << " alpha=" << p.alpha << " beta=" << p.beta; break;
    case Family::Gegenbauer: os << " lambda=" << p.lambda; break;
    }
    return os.str();
}

namespace {

constexpr int kMaxRichardson = 16;

// sqrt(w) y_n at a node, unnormalised.
double root_density(Family f, long n, const Params& p, const SupportPoint& pt)
{
    const double w = weight(f, p, pt);
    if (w == 0.0)
        return 0.0;
    return std::sqrt(w) * eval_standard(f, n, p, pt.x);
}

double quadrature_norm(Family f, long n, const Params& p, const QuadratureConfig& cfg)
{
    return integrate(
        [&](const SupportPoint& pt) {
            const double g = root_density(f, n, p, pt);
            return g * g;
        },
        f, cfg);
}

// 1/d_n from the closed-form norm, for the orthonormal polynomials used in
// the identity checks.
double inv_norm(Family f, long n, const Params& p)
{
    return std::exp(-0.5 * norm_squared_log(f, n, p).log_abs);
}

}  // namespace

double fisher_by_definition(Family f, ParamTarget t, long n, const Params& p,
                            const QuadratureConfig& cfg)
{
    return fisher_by_definition_detailed(f, t, n, p, cfg).value;
}

QuadratureResult fisher_by_definition_detailed(Family f, ParamTarget t, long n, const Params& p,
                                               const QuadratureConfig& cfg)
{
    validate(f, p);
    validate_pairing(f, t);
    cfg.check();
    if (n < 0)
        throw DomainError("degree n must be >= 0");
    const int levels = cfg.richardson_levels;
    if (levels > kMaxRichardson)
        throw std::invalid_argument("quadrature: richardson_levels too large");

    const double theta = param_value(p, t);
    const double h = cfg.fd_step * std::max(1.0, std::fabs(theta));
    if (!(domain_margin(f, p, t) > h)) {
        std::ostringstream os;
        os << family_name(f) << ": " << target_name(t) << " = " << theta
           << " is within one finite-difference step (" << h << ") of the domain boundary";
        throw DomainError(os.str());
    }

    struct Shift
    {
        double step;
        Params plus, minus;
        double plus_scale, minus_scale;  // 1/sqrt(quadrature norm)
    };
    std::vector<Shift> shifts;
    for (int j = 0; j < levels; ++j) {
        const double hj = h / static_cast<double>(1L << j);
        Shift s{hj, with_param(p, t, theta + hj), with_param(p, t, theta - hj), 0.0, 0.0};
        s.plus_scale = 1.0 / std::sqrt(quadrature_norm(f, n, s.plus, cfg));
        s.minus_scale = 1.0 / std::sqrt(quadrature_norm(f, n, s.minus, cfg));
        shifts.push_back(s);
    }

    auto integrand = [&](const SupportPoint& pt) {
        std::array<std::array<double, kMaxRichardson>, kMaxRichardson> table{};
        for (int j = 0; j < levels; ++j) {
            const Shift& s = shifts[j];
            const double gp = root_density(f, n, s.plus, pt) * s.plus_scale;
            const double gm = root_density(f, n, s.minus, pt) * s.minus_scale;
            table[j][0] = (gp - gm) / (2.0 * s.step);
            double factor = 1.0;
            for (int m = 1; m <= j; ++m) {
                factor *= 4.0;
                table[j][m] = table[j][m - 1] + (table[j][m - 1] - table[j - 1][m - 1]) / (factor - 1.0);
            }
        }
        const double d = table[levels - 1][levels - 1];
        return d * d;
    };
    QuadratureResult r = integrate_detailed(integrand, f, cfg);
    r.value *= 4.0;
    r.error_estimate *= 4.0;
    return r;
}

VerificationReport verify_lemma2(Lemma2Identity which, Family f, ParamTarget t, long n,
                                 std::optional<long> k, const Params& p,
                                 const QuadratureConfig& cfg, double threshold)
{
    const auto cv = coeffs_orthonormal(f, t, n, p);
    const double scale_n = inv_norm(f, n, p);
    std::string name;
    double computed = 0.0;
    double expected = 0.0;

    switch (which) {
    case Lemma2Identity::A:
        name = "lemma2(a) ";
        computed = integrate(
            [&](const SupportPoint& pt) {
                const double w = weight(f, p, pt);
                if (w == 0.0)
                    return 0.0;
                const double y = eval_standard(f, n, p, pt.x) * scale_n;
                return w * weight_log_derivative(f, t, pt) * y * y;
            },
            f, cfg);
        expected = -2.0 * cv.coeffs[n];
        break;
    case Lemma2Identity::B: {
        if (!k || *k < 0 || *k >= n)
            throw DomainError("lemma2(b) requires 0 <= k < n");
        const long kk = *k;
        const double scale_k = inv_norm(f, kk, p);
        name = "lemma2(b) k=" + std::to_string(kk) + " ";
        computed = integrate(
            [&](const SupportPoint& pt) {
                const double w = weight(f, p, pt);
                if (w == 0.0)
                    return 0.0;
                const double yn = eval_standard(f, n, p, pt.x) * scale_n;
                const double yk = eval_standard(f, kk, p, pt.x) * scale_k;
                return w * weight_log_derivative(f, t, pt) * yn * yk;
            },
            f, cfg);
        expected = -cv.coeffs[kk];
        break;
    }
    case Lemma2Identity::C: {
        name = "lemma2(c) ";
        computed = integrate(
            [&](const SupportPoint& pt) {
                const double w = weight(f, p, pt);
                if (w == 0.0)
                    return 0.0;
                const double y = eval_standard(f, n, p, pt.x) * scale_n;
                const double lt = weight_log_derivative(f, t, pt);
                return w * lt * lt * y * y;
            },
            f, cfg);
        double sq = 0.0;
        for (double c : cv.coeffs)
            sq += c * c;
        const double an = cv.coeffs[n];
        expected = 2.0 * sq + 2.0 * an * an - 2.0 * dAtilde_n(f, t, n, p);
        break;
    }
    }
    return make_report(name + case_label(f, t, n, p), computed, expected, threshold,
                       Tolerance::Either, cfg);
}

VerificationReport verify_orthonormality(Family f, long n, long m, const Params& p,
                                         const QuadratureConfig& cfg, double threshold)
{
    const double sn = inv_norm(f, n, p);
    const double sm = inv_norm(f, m, p);
    const double computed = integrate(
        [&](const SupportPoint& pt) {
            const double w = weight(f, p, pt);
            if (w == 0.0)
                return 0.0;
            return w * eval_standard(f, n, p, pt.x) * sn * eval_standard(f, m, p, pt.x) * sm;
        },
        f, cfg);
    return make_report("orthonormality m=" + std::to_string(m) + " " +
                           case_label(f, std::nullopt, n, p),
                       computed, n == m ? 1.0 : 0.0, threshold, Tolerance::Absolute, cfg);
}

VerificationReport verify_norm(Family f, long n, const Params& p, const QuadratureConfig& cfg,
                               double threshold)
{
    validate(f, p);
    const double computed = quadrature_norm(f, n, p, cfg);
    return make_report("norm " + case_label(f, std::nullopt, n, p), computed,
                       norm_squared(f, n, p), threshold, Tolerance::Relative, cfg);
}

VerificationReport verify_density(Family f, long n, const Params& p, const QuadratureConfig& cfg,
                                  double threshold)
{
    validate(f, p);
    const double computed = integrate(
        [&](const SupportPoint& pt) { return rakhmanov_density(f, n, p, pt); }, f, cfg);
    return make_report("density " + case_label(f, std::nullopt, n, p), computed, 1.0, threshold,
                       Tolerance::Absolute, cfg);
}

double default_fisher_threshold(Family f, const Params& p)
{
    if (const auto sym = grosjean_symmetric_point(f); sym && std::fabs(p.alpha - *sym) <= 1e-3)
        return 1e-5;
    return 1e-6;
}

VerificationReport verify_fisher(Family f, ParamTarget t, long n, const Params& p,
                                 const QuadratureConfig& cfg, std::optional<double> threshold)
{
    const double expected = fisher_sum_form(f, t, n, p).value;
    const double computed = fisher_by_definition(f, t, n, p, cfg);
    return make_report("fisher " + case_label(f, t, n, p), computed, expected,
                       threshold.value_or(default_fisher_threshold(f, p)), Tolerance::Relative,
                       cfg);
}

}  // namespace fisherpoly
