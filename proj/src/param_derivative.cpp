#include "fisherpoly/param_derivative.hpp"

#include <cmath>
#include <numbers>

namespace fisherpoly {

using specfun::digamma;
using specfun::ln_gamma;
using specfun::pochhammer;
using specfun::trigamma;

namespace {

void check_args(Family f, ParamTarget t, long n, const Params& p)
{
    validate(f, p);
    validate_pairing(f, t);
    if (n < 0)
        throw DomainError("degree n must be >= 0");
}

double parity(long m) { return (m % 2 == 0) ? 1.0 : -1.0; }

// P - sign * Q for P, Q > 0, without forming either in linear space.
LogValue log_difference(const LogValue& P, const LogValue& Q, double sign)
{
    if (P.sign == 0)
        return sign > 0 ? LogValue{Q.log_abs, -Q.sign} : Q;
    if (Q.sign == 0)
        return P;
    const bool p_big = P.log_abs >= Q.log_abs;
    const double hi = p_big ? P.log_abs : Q.log_abs;
    const double d = -std::fabs(P.log_abs - Q.log_abs);
    if (sign > 0) {
        if (d == 0.0)
            return LogValue::zero();
        return {hi + std::log(-std::expm1(d)), p_big ? 1 : -1};
    }
    return {hi + std::log1p(std::exp(d)), 1};
}

// ---- standard-normalisation coefficients A_k ----

// Jacobi, derivative in the first parameter.
void jacobi_alpha_orthogonal(long n, double a, double b, std::vector<double>& out)
{
    const double nd = static_cast<double>(n);
    const double s = a + b;
    for (long k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const long m = n - k;
        LogValue v = pochhammer(b + kd + 1.0, m) / LogValue::from((nd - kd) * (s + 1.0 + nd + kd));
        if (k == 0)
            // (s+1) / (s+1)_n = 1 / (s+2)_{n-1}
            v = v / pochhammer(s + 2.0, n - 1);
        else
            v = v * LogValue::from(s + 1.0 + 2.0 * kd) / pochhammer(s + kd + 1.0, m);
        out[k] = v.value();
    }
    out[n] = n == 0 ? 0.0 : digamma(1.0 + s + 2.0 * nd) - digamma(1.0 + s + nd);
}

void grosjean_orthogonal(Family f, long n, double alpha, std::vector<double>& out)
{
    const double nd = static_cast<double>(n);
    const bool first = f == Family::GrosjeanFirst;
    for (long k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const long m = n - k;
        const LogValue upper = pochhammer(kd + (first ? 0.0 : 2.0) - alpha, m);
        const LogValue lower = pochhammer(kd + alpha + 1.0, m);
        const LogValue bracket = log_difference(upper, lower, parity(m));
        double log_pref = static_cast<double>(m + 1) * std::numbers::ln2 + ln_gamma(nd + 1.0) -
                          ln_gamma(kd + 1.0);
        double lin;
        if (first) {
            // k Γ(2k) = Γ(2k+1) / 2, finite at k = 0
            log_pref += ln_gamma(2.0 * kd + 1.0) - std::numbers::ln2 - ln_gamma(2.0 * nd);
            lin = 1.0 / (nd * nd - kd * kd);
        } else {
            log_pref += ln_gamma(2.0 * kd + 2.0) - ln_gamma(2.0 * nd + 2.0);
            lin = (kd + 1.0) / ((nd - kd) * (nd + kd + 2.0));
        }
        out[k] = (LogValue{log_pref, 1} * bracket).value() * lin;
    }
    out[n] = 0.0;
}

// ---- orthonormal coefficients ~A_k ----

double jacobi_alpha_atilde_n(long n, double a, double b)
{
    const double s = a + b;
    if (n == 0)
        // psi(s+1) + 1/(s+1) = psi(s+2)
        return 0.5 * (digamma(s + 2.0) - digamma(a + 1.0) - std::numbers::ln2);
    const double nd = static_cast<double>(n);
    return 0.5 * (2.0 * digamma(2.0 * nd + s + 1.0) - digamma(nd + s + 1.0) -
                  digamma(nd + a + 1.0) - std::numbers::ln2 + 1.0 / (2.0 * nd + s + 1.0));
}

void jacobi_alpha_orthonormal(long n, double a, double b, std::vector<double>& out)
{
    const double nd = static_cast<double>(n);
    const double s = a + b;
    const double log_top = std::log(2.0 * nd + s + 1.0);
    // ratio = sum_{j>=k} ln[(j+1)(j+b+1)/(j+a+1)]
    // shifted = sum_{j>=max(k,1)} ln(j+s+1), i.e. ln (k+s+1)_{n-k} for k >= 1
    // and ln (s+2)_{n-1} = ln[(s+1)_n / (s+1)] for k = 0.
    double ratio = 0.0;
    double shifted = 0.0;
    for (long k = n - 1; k >= 0; --k) {
        const double kd = static_cast<double>(k);
        ratio += std::log(kd + 1.0) + std::log1p((b - a) / (kd + a + 1.0));
        double denom;
        if (k >= 1) {
            shifted += std::log(kd + s + 1.0);
            denom = shifted - std::log(2.0 * kd + s + 1.0);
        } else {
            denom = shifted;
        }
        out[k] = std::exp(0.5 * (ratio + log_top - denom)) / ((nd - kd) * (nd + kd + s + 1.0));
    }
    out[n] = jacobi_alpha_atilde_n(n, a, b);
}

double gegenbauer_atilde_n(long n, double lambda)
{
    if (n == 0)
        return digamma(lambda + 1.0) - digamma(2.0 * lambda + 1.0) + std::numbers::ln2;
    const double nd = static_cast<double>(n);
    return digamma(nd + lambda) - digamma(nd + 2.0 * lambda) + std::numbers::ln2 +
           0.5 / (nd + lambda);
}

void gegenbauer_orthonormal(long n, double lambda, std::vector<double>& out)
{
    const double nd = static_cast<double>(n);
    // acc = ln[(k+1)_{n-k} / |(k+2 lambda)_{n-k}|]
    double acc = 0.0;
    for (long k = n - 1; k >= 0; --k) {
        const double kd = static_cast<double>(k);
        acc += std::log(kd + 1.0) - std::log(std::fabs(kd + 2.0 * lambda));
        if ((n - k) % 2 != 0) {
            out[k] = 0.0;
            continue;
        }
        const double log_root = acc + std::log(nd + lambda) - std::log(std::fabs(kd + lambda));
        out[k] = std::exp(0.5 * log_root) * 4.0 * (kd + lambda) /
                 ((kd + nd + 2.0 * lambda) * (nd - kd));
    }
    out[n] = gegenbauer_atilde_n(n, lambda);
}

double grosjean_atilde_n(Family f, long n, double alpha)
{
    const double nd = static_cast<double>(n);
    const double upper = f == Family::GrosjeanFirst ? nd - alpha : nd + 2.0 - alpha;
    return 0.5 * (digamma(upper) - digamma(nd + alpha + 1.0));
}

void grosjean_orthonormal(Family f, long n, double alpha, std::vector<double>& out)
{
    const double nd = static_cast<double>(n);
    const bool first = f == Family::GrosjeanFirst;
    // Upper and lower Pochhammer bases differ by a constant:
    // (k-alpha) - (k+alpha+1) = -1-2 alpha, (k+2-alpha) - (k+alpha+1) = 1-2 alpha.
    const double gap = first ? -1.0 - 2.0 * alpha : 1.0 - 2.0 * alpha;
    // log_ratio = ln[(upper)_{n-k} / (lower)_{n-k}]; then
    // [(u)_m - (-1)^m (l)_m] / sqrt((u)_m (l)_m) = 2 sinh or 2 cosh of log_ratio / 2.
    double log_ratio = 0.0;
    for (long k = n - 1; k >= 0; --k) {
        const double kd = static_cast<double>(k);
        log_ratio += std::log1p(gap / (kd + alpha + 1.0));
        const long m = n - k;
        const double h = 0.5 * log_ratio;
        const double bracket = (m % 2 == 0) ? 2.0 * std::sinh(h) : 2.0 * std::cosh(h);
        double pref;
        if (first) {
            pref = 2.0 * nd / (nd * nd - kd * kd);
            if (k == 0)
                // d_0^2 = Γ(alpha+1) Γ(-alpha), half the n -> 0 limit of the
                // n >= 1 norm expression.
                pref /= std::numbers::sqrt2;
        } else {
            pref = 2.0 * (kd + 1.0) / ((nd - kd) * (nd + kd + 2.0));
        }
        out[k] = pref * bracket;
    }
    out[n] = grosjean_atilde_n(f, n, alpha);
}

}  // namespace

CoefficientVector coeffs_orthogonal(Family f, ParamTarget t, long n, const Params& p)
{
    check_args(f, t, n, p);
    CoefficientVector cv{f, t, n, p, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
    auto& c = cv.coeffs;
    const double nd = static_cast<double>(n);
    switch (f) {
    case Family::Laguerre:
        for (long k = 0; k < n; ++k)
            c[k] = 1.0 / static_cast<double>(n - k);
        c[n] = 0.0;
        break;
    case Family::Jacobi:
        if (t == ParamTarget::Alpha) {
            jacobi_alpha_orthogonal(n, p.alpha, p.beta, c);
        } else {
            jacobi_alpha_orthogonal(n, p.beta, p.alpha, c);
            for (long k = 0; k < n; ++k)
                c[k] *= parity(n - k);
        }
        break;
    case Family::Gegenbauer: {
        const double lam = p.lambda;
        for (long k = 0; k < n; ++k) {
            const double kd = static_cast<double>(k);
            c[k] = (n - k) % 2 != 0 ? 0.0
                                    : 4.0 * (kd + lam) / ((kd + nd + 2.0 * lam) * (nd - kd));
        }
        // psi(n+lambda) - psi(lambda), with psi(lambda) = psi(lambda+1) - 1/lambda
        c[n] = n == 0 ? 0.0 : digamma(nd + lam) - digamma(lam + 1.0) + 1.0 / lam;
        break;
    }
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond:
        grosjean_orthogonal(f, n, p.alpha, c);
        break;
    }
    return cv;
}

CoefficientVector coeffs_orthonormal(Family f, ParamTarget t, long n, const Params& p)
{
    check_args(f, t, n, p);
    CoefficientVector cv{f, t, n, p, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
    auto& c = cv.coeffs;
    switch (f) {
    case Family::Laguerre: {
        double log_ratio = 0.0;  // ln[(k+1)_{n-k} / (k+alpha+1)_{n-k}]
        for (long k = n - 1; k >= 0; --k) {
            const double kd = static_cast<double>(k);
            log_ratio -= std::log1p(p.alpha / (kd + 1.0));
            c[k] = std::exp(0.5 * log_ratio) / static_cast<double>(n - k);
        }
        c[n] = atilde_n(f, t, n, p);
        break;
    }
    case Family::Jacobi:
        if (t == ParamTarget::Alpha) {
            jacobi_alpha_orthonormal(n, p.alpha, p.beta, c);
        } else {
            jacobi_alpha_orthonormal(n, p.beta, p.alpha, c);
            for (long k = 0; k < n; ++k)
                c[k] *= parity(n - k);
        }
        break;
    case Family::Gegenbauer:
        gegenbauer_orthonormal(n, p.lambda, c);
        break;
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond:
        grosjean_orthonormal(f, n, p.alpha, c);
        break;
    }
    return cv;
}

double atilde_n(Family f, ParamTarget t, long n, const Params& p)
{
    check_args(f, t, n, p);
    switch (f) {
    case Family::Laguerre: return -0.5 * digamma(static_cast<double>(n) + p.alpha + 1.0);
    case Family::Jacobi:
        return t == ParamTarget::Alpha ? jacobi_alpha_atilde_n(n, p.alpha, p.beta)
                                       : jacobi_alpha_atilde_n(n, p.beta, p.alpha);
    case Family::Gegenbauer: return gegenbauer_atilde_n(n, p.lambda);
    case Family::GrosjeanFirst:
    case Family::GrosjeanSecond: return grosjean_atilde_n(f, n, p.alpha);
    }
    return 0.0;
}

double dAtilde_n(Family f, ParamTarget t, long n, const Params& p)
{
    check_args(f, t, n, p);
    const double nd = static_cast<double>(n);
    switch (f) {
    case Family::Laguerre: return -0.5 * trigamma(nd + p.alpha + 1.0);
    case Family::Jacobi: {
        const double a = t == ParamTarget::Alpha ? p.alpha : p.beta;
        const double s = p.alpha + p.beta;
        if (n == 0)
            return 0.5 * (trigamma(s + 2.0) - trigamma(a + 1.0));
        const double top = 2.0 * nd + s + 1.0;
        return 0.5 * (2.0 * trigamma(top) - trigamma(nd + s + 1.0) - trigamma(nd + a + 1.0) -
                      1.0 / (top * top));
    }
    case Family::Gegenbauer: {
        const double lam = p.lambda;
        if (n == 0)
            return trigamma(lam + 1.0) - 2.0 * trigamma(2.0 * lam + 1.0);
        return trigamma(nd + lam) - 2.0 * trigamma(nd + 2.0 * lam) -
               0.5 / ((nd + lam) * (nd + lam));
    }
    case Family::GrosjeanFirst:
        return -0.5 * (trigamma(nd - p.alpha) + trigamma(nd + p.alpha + 1.0));
    case Family::GrosjeanSecond:
        return -0.5 * (trigamma(nd + 2.0 - p.alpha) + trigamma(nd + p.alpha + 1.0));
    }
    return 0.0;
}

}  // namespace fisherpoly
