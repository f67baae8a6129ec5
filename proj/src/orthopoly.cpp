#include "fisherpoly/orthopoly.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fisherpoly {

using specfun::ln_gamma;

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::Laguerre: return "laguerre";
    case Family::Jacobi: return "jacobi";
    case Family::Gegenbauer: return "gegenbauer";
    case Family::GrosjeanFirst: return "grosjean1";
    case Family::GrosjeanSecond: return "grosjean2";
    }
    return "?";
}

std::string_view target_name(ParamTarget t)
{
    switch (t) {
    case ParamTarget::Alpha: return "alpha";
    case ParamTarget::Beta: return "beta";
    case ParamTarget::Lambda: return "lambda";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s)
{
    for (Family f : {Family::Laguerre, Family::Jacobi, Family::Gegenbauer,
                     Family::GrosjeanFirst, Family::GrosjeanSecond})
        if (family_name(f) == s)
            return f;
    return std::nullopt;
}

std::optional<ParamTarget> parse_target(std::string_view s)
{
    for (ParamTarget t : {ParamTarget::Alpha, ParamTarget::Beta, ParamTarget::Lambda})
        if (target_name(t) == s)
            return t;
    return std::nullopt;
}

namespace {

[[noreturn]] void domain_fail(Family f, std::string_view what, double got)
{
    std::ostringstream os;
    os << family_name(f) << ": " << what << " (got " << got << ")";
    throw DomainError(os.str());
}

}  // namespace

void validate(Family f, const Params& p)
{
    switch (f) {
    case Family::Laguerre:
        if (!(p.alpha > -1.0))
            domain_fail(f, "alpha must be > -1", p.alpha);
        break;
    case Family::Jacobi:
        if (!(p.alpha > -1.0))
            domain_fail(f, "alpha must be > -1", p.alpha);
        if (!(p.beta > -1.0))
            domain_fail(f, "beta must be > -1", p.beta);
        break;
    case Family::Gegenbauer:
        if (!(p.lambda > -0.5) || p.lambda == 0.0)
            domain_fail(f, "lambda must be > -1/2 and != 0", p.lambda);
        break;
    case Family::GrosjeanFirst:
        if (!(p.alpha > -1.0 && p.alpha < 0.0))
            domain_fail(f, "alpha must satisfy -1 < alpha < 0", p.alpha);
        break;
    case Family::GrosjeanSecond:
        if (!(p.alpha > -1.0 && p.alpha < 2.0))
            domain_fail(f, "alpha must satisfy -1 < alpha < 2", p.alpha);
        break;
    }
    if (f == Family::Gegenbauer ? !std::isfinite(p.lambda)
                                : !std::isfinite(p.alpha) || (f == Family::Jacobi && !std::isfinite(p.beta)))
        domain_fail(f, "parameters must be finite", f == Family::Gegenbauer ? p.lambda : p.alpha);
}

void validate_pairing(Family f, ParamTarget t)
{
    bool ok = false;
    switch (t) {
    case ParamTarget::Alpha: ok = f != Family::Gegenbauer; break;
    case ParamTarget::Beta: ok = f == Family::Jacobi; break;
    case ParamTarget::Lambda: ok = f == Family::Gegenbauer; break;
    }
    if (!ok) {
        std::ostringstream os;
        os << family_name(f) << ": target '" << target_name(t)
           << "' is not a parameter of this family";
        throw PairingError(os.str());
    }
}

double param_value(const Params& p, ParamTarget t)
{
    switch (t) {
    case ParamTarget::Alpha: return p.alpha;
    case ParamTarget::Beta: return p.beta;
    case ParamTarget::Lambda: return p.lambda;
    }
    return 0.0;
}

Params with_param(Params p, ParamTarget t, double value)
{
    switch (t) {
    case ParamTarget::Alpha: p.alpha = value; break;
    case ParamTarget::Beta: p.beta = value; break;
    case ParamTarget::Lambda: p.lambda = value; break;
    }
    return p;
}

double domain_margin(Family f, const Params& p, ParamTarget t)
{
    switch (f) {
    case Family::Laguerre: return p.alpha + 1.0;
    case Family::Jacobi: return (t == ParamTarget::Beta ? p.beta : p.alpha) + 1.0;
    case Family::Gegenbauer: return std::min(p.lambda + 0.5, std::fabs(p.lambda));
    case Family::GrosjeanFirst: return std::min(p.alpha + 1.0, -p.alpha);
    case Family::GrosjeanSecond: return std::min(p.alpha + 1.0, 2.0 - p.alpha);
    }
    return 0.0;
}

std::pair<double, double> jacobi_parameters(Family f, const Params& p)
{
    switch (f) {
    case Family::Jacobi: return {p.alpha, p.beta};
    case Family::Gegenbauer: return {p.lambda - 0.5, p.lambda - 0.5};
    case Family::GrosjeanFirst: return {p.alpha, -1.0 - p.alpha};
    case Family::GrosjeanSecond: return {p.alpha, 1.0 - p.alpha};
    case Family::Laguerre: break;
    }
    throw PairingError("laguerre: not a Jacobi special case");
}

SupportInterval support(Family f)
{
    if (f == Family::Laguerre)
        return {0.0, std::numeric_limits<double>::infinity()};
    return {-1.0, 1.0};
}

SupportPoint make_point(Family f, double x)
{
    const auto s = support(f);
    if (!(x > s.a && x < s.b)) {
        std::ostringstream os;
        os << family_name(f) << ": x = " << x << " is outside the open support";
        throw DomainError(os.str());
    }
    if (f == Family::Laguerre)
        return {x, x, std::numeric_limits<double>::infinity()};
    return {x, 1.0 + x, 1.0 - x};
}

double weight(Family f, const Params& p, double x)
{
    validate(f, p);
    return weight(f, p, make_point(f, x));
}

double weight(Family f, const Params& p, const SupportPoint& pt)
{
    if (f == Family::Laguerre)
        return std::exp(p.alpha * std::log(pt.x) - pt.x);
    const auto [a, b] = jacobi_parameters(f, p);
    return std::exp(a * std::log(pt.to_upper) + b * std::log(pt.from_lower));
}

double weight_log_derivative(Family f, ParamTarget t, const SupportPoint& pt)
{
    validate_pairing(f, t);
    switch (f) {
    case Family::Laguerre: return std::log(pt.x);
    case Family::Jacobi:
        return t == ParamTarget::Alpha ? std::log(pt.to_upper) : std::log(pt.from_lower);
    case Family::Gegenbauer: return std::log(pt.to_upper) + std::log(pt.from_lower);
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond: return std::log(pt.to_upper) - std::log(pt.from_lower);
    }
    return 0.0;
}

double eval_jacobi(long n, double a, double b, double x)
{
    if (n == 0)
        return 1.0;
    const double s = a + b;
    double prev = 1.0;
    double cur = 0.5 * ((s + 2.0) * x + a - b);
    for (long k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double c2 = 2.0 * kd + s;
        const double num = (c2 + 1.0) * ((c2 + 2.0) * c2 * x + a * a - b * b) * cur -
                           2.0 * (kd + a) * (kd + b) * (c2 + 2.0) * prev;
        const double next = num / (2.0 * (kd + 1.0) * (kd + s + 1.0) * c2);
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

double eval_laguerre(long n, double alpha, double x)
{
    if (n == 0)
        return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (long k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double next = ((2.0 * kd + 1.0 + alpha - x) * cur - (kd + alpha) * prev) / (kd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double eval_gegenbauer(long n, double lambda, double x)
{
    if (n == 0)
        return 1.0;
    double prev = 1.0;
    double cur = 2.0 * lambda * x;
    for (long k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double next =
            (2.0 * (kd + lambda) * x * cur - (kd + 2.0 * lambda - 1.0) * prev) / (kd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

// ln of the Jacobi norm d_n^2. (2n+s+1) Γ(n+s+1) is taken as Γ(s+2) at
// n = 0, which keeps alpha + beta = -1 finite.
double jacobi_norm_log(long n, double a, double b)
{
    const double nd = static_cast<double>(n);
    const double s = a + b;
    const double tail = n == 0 ? ln_gamma(s + 2.0)
                               : std::log(2.0 * nd + s + 1.0) + ln_gamma(nd + s + 1.0);
    return (s + 1.0) * std::numbers::ln2 + ln_gamma(nd + a + 1.0) + ln_gamma(nd + b + 1.0) -
           ln_gamma(nd + 1.0) - tail;
}

}  // namespace

LogValue monic_leading_coefficient(long n, double a, double b)
{
    if (n < 0)
        throw DomainError("monic_leading_coefficient: n must be >= 0");
    if (n == 0)
        return {0.0, 1};
    const double nd = static_cast<double>(n);
    const double s = a + b;
    return {ln_gamma(2.0 * nd + s + 1.0) - nd * std::numbers::ln2 - ln_gamma(nd + 1.0) -
                ln_gamma(nd + s + 1.0),
            1};
}

double eval_standard(Family f, long n, const Params& p, double x)
{
    validate(f, p);
    if (n < 0)
        throw DomainError("degree n must be >= 0");
    switch (f) {
    case Family::Laguerre: return eval_laguerre(n, p.alpha, x);
    case Family::Jacobi: return eval_jacobi(n, p.alpha, p.beta, x);
    case Family::Gegenbauer: return eval_gegenbauer(n, p.lambda, x);
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond: {
        const auto [a, b] = jacobi_parameters(f, p);
        return eval_jacobi(n, a, b, x) / monic_leading_coefficient(n, a, b).value();
    }
    }
    return 0.0;
}

LogValue norm_squared_log(Family f, long n, const Params& p)
{
    validate(f, p);
    if (n < 0)
        throw DomainError("degree n must be >= 0");
    const double nd = static_cast<double>(n);
    switch (f) {
    case Family::Laguerre: return {ln_gamma(nd + p.alpha + 1.0) - ln_gamma(nd + 1.0), 1};
    case Family::Jacobi: return {jacobi_norm_log(n, p.alpha, p.beta), 1};
    case Family::Gegenbauer: {
        const double lam = p.lambda;
        const LogValue num = LogValue{std::log(std::numbers::pi) +
                                          (1.0 - 2.0 * lam) * std::numbers::ln2,
                                      1} *
                             specfun::gamma_log(nd + 2.0 * lam);
        const LogValue g = specfun::gamma_log(lam);
        const LogValue den = LogValue{ln_gamma(nd + 1.0), 1} * LogValue::from(nd + lam) * g * g;
        const LogValue r = num / den;
        if (r.sign != 1)
            throw DomainError("gegenbauer: non-positive norm");
        return r;
    }
    case Family::GrosjeanFirst: {
        if (n == 0)
            return {jacobi_norm_log(0, p.alpha, -1.0 - p.alpha), 1};
        return {(2.0 * nd - 1.0) * std::numbers::ln2 + 2.0 * ln_gamma(nd) -
                    2.0 * ln_gamma(2.0 * nd) + ln_gamma(nd + p.alpha + 1.0) +
                    ln_gamma(nd - p.alpha),
                1};
    }
    case Family::GrosjeanSecond:
        // Γ²(n+1), valid for every n >= 0.
        return {(2.0 * nd + 1.0) * std::numbers::ln2 + 2.0 * ln_gamma(nd + 1.0) -
                    2.0 * ln_gamma(2.0 * nd + 2.0) + ln_gamma(nd + p.alpha + 1.0) +
                    ln_gamma(nd - p.alpha + 2.0),
                1};
    }
    return {};
}

double norm_squared(Family f, long n, const Params& p)
{
    return norm_squared_log(f, n, p).value();
}

double eval_orthonormal(Family f, long n, const Params& p, double x)
{
    const double y = eval_standard(f, n, p, x);
    return y * std::exp(-0.5 * norm_squared_log(f, n, p).log_abs);
}

double rakhmanov_density(Family f, long n, const Params& p, double x)
{
    validate(f, p);
    return rakhmanov_density(f, n, p, make_point(f, x));
}

double rakhmanov_density(Family f, long n, const Params& p, const SupportPoint& pt)
{
    const double w = weight(f, p, pt);
    if (w == 0.0)
        return 0.0;
    const double y = eval_orthonormal(f, n, p, pt.x);
    return w * y * y;
}

std::optional<double> grosjean_symmetric_point(Family f)
{
    if (f == Family::GrosjeanFirst)
        return -0.5;
    if (f == Family::GrosjeanSecond)
        return 0.5;
    return std::nullopt;
}

}  // namespace fisherpoly
