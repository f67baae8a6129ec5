#include "fisherpoly/specfun.hpp"

#include <array>
#include <numbers>
#include <sstream>

namespace fisherpoly {

LogValue LogValue::from(double v)
{
    if (v == 0.0)
        return zero();
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
}

LogValue LogValue::operator*(const LogValue& o) const
{
    if (sign == 0 || o.sign == 0)
        return zero();
    return {log_abs + o.log_abs, sign * o.sign};
}

LogValue LogValue::operator/(const LogValue& o) const
{
    if (o.sign == 0)
        throw DomainError("LogValue: division by zero");
    if (sign == 0)
        return zero();
    return {log_abs - o.log_abs, sign * o.sign};
}

namespace specfun {
namespace {

void require_positive(const char* fn, double x)
{
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << fn << ": argument must be > 0 (got " << x << ")";
        throw DomainError(os.str());
    }
}

// Stirling series for ln Γ(y), y >= 10.
double stirling_ln_gamma(double y)
{
    static constexpr std::array<double, 7> c = {
        1.0 / 12.0,        -1.0 / 360.0, 1.0 / 1260.0,  -1.0 / 1680.0,
        1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,
    };
    const double r = 1.0 / y;
    const double r2 = r * r;
    double series = 0.0;
    for (std::size_t i = c.size(); i-- > 0;)
        series = series * r2 + c[i];
    series *= r;
    constexpr double half_ln_2pi = 0.91893853320467274178032973640562;
    return (y - 0.5) * std::log(y) - y + half_ln_2pi + series;
}

}  // namespace

double ln_gamma(double x)
{
    require_positive("ln_gamma", x);
    if (x == 1.0 || x == 2.0)
        return 0.0;
    if (x >= 10.0)
        return stirling_ln_gamma(x);
    double prod = 1.0;
    double y = x;
    while (y < 10.0) {
        prod *= y;
        y += 1.0;
    }
    return stirling_ln_gamma(y) - std::log(prod);
}

LogValue gamma_log(double x)
{
    if (x > 0.0)
        return {ln_gamma(x), 1};
    if (!std::isfinite(x) || x == std::floor(x)) {
        std::ostringstream os;
        os << "gamma: pole at non-positive integer " << x;
        throw DomainError(os.str());
    }
    // Γ(x) = Γ(x+m) / (x (x+1) ... (x+m-1)) with x+m > 0
    LogValue denom{0.0, 1};
    double y = x;
    while (y < 0.0) {
        denom = denom * LogValue::from(y);
        y += 1.0;
    }
    return LogValue{ln_gamma(y), 1} / denom;
}

double digamma(double x)
{
    require_positive("digamma", x);
    double shift = 0.0;
    while (x < 10.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    // B_{2k} / (2k), k = 1..9
    static constexpr std::array<double, 9> c = {
        1.0 / 12.0,          -1.0 / 120.0, 1.0 / 252.0,
        -1.0 / 240.0,        1.0 / 132.0,  -691.0 / 32760.0,
        1.0 / 12.0,     -3617.0 / 8160.0,  43867.0 / 14364.0,
    };
    const double z = 1.0 / (x * x);
    double series = 0.0;
    for (std::size_t i = c.size(); i-- > 0;)
        series = series * z + c[i];
    series *= z;
    return shift + std::log(x) - 0.5 / x - series;
}

double trigamma(double x)
{
    require_positive("trigamma", x);
    double shift = 0.0;
    while (x < 10.0) {
        shift += 1.0 / (x * x);
        x += 1.0;
    }
    // B_{2k}, k = 1..8
    static constexpr std::array<double, 8> c = {
        1.0 / 6.0,  -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
        5.0 / 66.0, -691.0 / 2730.0,  7.0 / 6.0,  -3617.0 / 510.0,
    };
    const double r = 1.0 / x;
    const double z = r * r;
    double series = 0.0;
    for (std::size_t i = c.size(); i-- > 0;)
        series = series * z + c[i];
    series *= z * r;
    return shift + r + 0.5 * z + series;
}

LogValue pochhammer(double a, long m)
{
    if (m < 0)
        throw DomainError("pochhammer: m must be >= 0");
    LogValue acc{0.0, 1};
    for (long j = 0; j < m; ++j) {
        const double f = a + static_cast<double>(j);
        if (f == 0.0)
            return LogValue::zero();
        acc.log_abs += std::log(std::fabs(f));
        if (f < 0.0)
            acc.sign = -acc.sign;
    }
    return acc;
}

double hyp4f3_terminating(long n, double alpha)
{
    if (n < 1)
        throw DomainError("hyp4f3_terminating: n must be >= 1");
    if (!(alpha > -1.0))
        throw DomainError("hyp4f3_terminating: alpha must be > -1");

    // t_{k+1}/t_k = (k+1)^2 (k+1-n) / ((k+2)^2 (k+1-alpha-n))
    double term = 1.0;
    double sum = 1.0;
    const double nd = static_cast<double>(n);
    for (long k = 0; k + 1 < n; ++k) {
        const double kd = static_cast<double>(k);
        const double lower = kd + 1.0 - alpha - nd;
        if (lower == 0.0)
            throw DomainError("hyp4f3_terminating: lower-parameter pole");
        term *= (kd + 1.0) * (kd + 1.0) * (kd + 1.0 - nd) /
                ((kd + 2.0) * (kd + 2.0) * lower);
        sum += term;
    }
    return sum;
}

}  // namespace specfun
}  // namespace fisherpoly
