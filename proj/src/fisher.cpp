#include "fisherpoly/fisher.hpp"

#include <cmath>
#include <numbers>

#include "fisherpoly/param_derivative.hpp"

namespace fisherpoly {

using specfun::ln_gamma;
using specfun::trigamma;

std::string_view method_name(FisherMethod m)
{
    switch (m) {
    case FisherMethod::SumForm: return "sum";
    case FisherMethod::ClosedForm: return "closed";
    case FisherMethod::Hypergeometric: return "hypergeometric";
    case FisherMethod::Oracle: return "oracle";
    }
    return "?";
}

double relative_difference(double a, double b)
{
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

void FisherResult::add_companion(FisherMethod m, double v)
{
    companion_values[m] = v;
    double worst = 0.0;
    for (const auto& [_, cv] : companion_values)
        worst = std::max(worst, relative_difference(value, cv));
    max_rel_discrepancy = worst;
}

FisherResult fisher_sum_form(Family f, ParamTarget t, long n, const Params& p)
{
    const auto cv = coeffs_orthonormal(f, t, n, p);
    double sum = 0.0;
    for (long k = 0; k < n; ++k)
        sum += cv.coeffs[k] * cv.coeffs[k];
    const double value = 2.0 * sum - 2.0 * dAtilde_n(f, t, n, p);
    return {f, t, n, p, value, FisherMethod::SumForm, {}, std::nullopt};
}

double fisher_laguerre_hypergeom(long n, double alpha)
{
    if (n < 1)
        throw DomainError("fisher_laguerre_hypergeom: n must be >= 1");
    if (!(alpha > -1.0))
        throw DomainError("laguerre: alpha must be > -1");
    const double nd = static_cast<double>(n);
    return trigamma(nd + alpha + 1.0) +
           2.0 * nd / (nd + alpha) * specfun::hyp4f3_terminating(n, alpha);
}

namespace {

double jacobi_alpha_closed(long n, double a, double b)
{
    const double s = a + b;
    if (n == 0)
        // trigamma(s+1) - 1/(s+1)^2 = trigamma(s+2)
        return trigamma(a + 1.0) - trigamma(s + 2.0);
    const double nd = static_cast<double>(n);
    const double top = 2.0 * nd + s + 1.0;
    const double log_pref = ln_gamma(nd + b + 1.0) + ln_gamma(nd + 1.0) + std::log(top) -
                            ln_gamma(nd + a + 1.0) - ln_gamma(nd + s + 1.0);
    double sum = 0.0;
    for (long k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        // Γ(k+s+1)(2k+s+1) is Γ(s+2) at k = 0
        const double gamma_s = k == 0 ? ln_gamma(s + 2.0)
                                      : ln_gamma(kd + s + 1.0) + std::log(2.0 * kd + s + 1.0);
        const double log_term = ln_gamma(kd + a + 1.0) + gamma_s - ln_gamma(kd + b + 1.0) -
                                ln_gamma(kd + 1.0) - 2.0 * std::log(nd - kd) -
                                2.0 * std::log(nd + kd + s + 1.0);
        sum += std::exp(log_pref + log_term);
    }
    return 2.0 * sum - 2.0 * trigamma(top) + trigamma(nd + s + 1.0) + trigamma(nd + a + 1.0) +
           1.0 / (top * top);
}

double gegenbauer_closed(long n, double lam)
{
    if (n == 0)
        return 4.0 * trigamma(2.0 * lam + 1.0) - 2.0 * trigamma(lam + 1.0);
    const double nd = static_cast<double>(n);
    const double log_pref =
        std::log(16.0) + ln_gamma(nd + 1.0) + std::log(nd + lam) - ln_gamma(nd + 2.0 * lam);
    double sum = 0.0;
    // 1 + (-1)^{n-k} vanishes for odd n-k and is 2 otherwise
    for (long k = n % 2; k < n; k += 2) {
        const double kd = static_cast<double>(k);
        // Γ(k+2 lambda)(k+lambda) is Γ(2 lambda+1)/2 at k = 0
        const double gamma_l = k == 0 ? ln_gamma(2.0 * lam + 1.0) - std::numbers::ln2
                                      : ln_gamma(kd + 2.0 * lam) + std::log(kd + lam);
        const double log_term = std::numbers::ln2 + gamma_l - ln_gamma(kd + 1.0) -
                                2.0 * std::log(kd + nd + 2.0 * lam) - 2.0 * std::log(nd - kd);
        sum += std::exp(log_pref + log_term);
    }
    return sum - 2.0 * trigamma(nd + lam) + 4.0 * trigamma(nd + 2.0 * lam) +
           1.0 / ((nd + lam) * (nd + lam));
}

// [(u)_m - (-1)^m (l)_m]^2 / ((u)_m (l)_m) from ln (u)_m and ln (l)_m.
double grosjean_bracket_ratio(double log_upper, double log_lower, long m)
{
    const double delta = log_lower - log_upper;
    const double f = (m % 2 == 0) ? std::expm1(delta) : 1.0 + std::exp(delta);
    return std::exp(-delta) * f * f;
}

double grosjean_closed(Family fam, long n, double alpha)
{
    const bool first = fam == Family::GrosjeanFirst;
    const double nd = static_cast<double>(n);
    const double upper_base = first ? -alpha : 2.0 - alpha;  // (k + upper_base)_{n-k}
    const double trig = trigamma(nd + upper_base) + trigamma(nd + alpha + 1.0);
    if (n == 0)
        return trig;
    double sum = 0.0;
    for (long k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double log_upper = ln_gamma(nd + upper_base) - ln_gamma(kd + upper_base);
        const double log_lower = ln_gamma(nd + alpha + 1.0) - ln_gamma(kd + alpha + 1.0);
        const double w = grosjean_bracket_ratio(log_upper, log_lower, n - k);
        if (first) {
            const double d = nd * nd - kd * kd;
            // the k = 0 term carries the true d_0^2 = Γ(alpha+1)Γ(-alpha)
            sum += (k == 0 ? 0.5 : 1.0) * 8.0 * nd * nd * w / (d * d);
        } else {
            const double d = (nd - kd) * (nd + kd + 2.0);
            sum += 8.0 * (kd + 1.0) * (kd + 1.0) * w / (d * d);
        }
    }
    return sum + trig;
}

}  // namespace

FisherResult fisher_closed_form(Family f, ParamTarget t, long n, const Params& p)
{
    validate(f, p);
    validate_pairing(f, t);
    if (n < 0)
        throw DomainError("degree n must be >= 0");
    double value = 0.0;
    switch (f) {
    case Family::Laguerre:
        value = n == 0 ? trigamma(p.alpha + 1.0) : fisher_laguerre_hypergeom(n, p.alpha);
        break;
    case Family::Jacobi:
        value = t == ParamTarget::Alpha ? jacobi_alpha_closed(n, p.alpha, p.beta)
                                        : jacobi_alpha_closed(n, p.beta, p.alpha);
        break;
    case Family::Gegenbauer: value = gegenbauer_closed(n, p.lambda); break;
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond: value = grosjean_closed(f, n, p.alpha); break;
    }
    return {f, t, n, p, value, FisherMethod::ClosedForm, {}, std::nullopt};
}

}  // namespace fisherpoly
