#pragma once

// Scalar special functions used by the norm, coefficient and Fisher
// formulas: log-gamma, digamma, trigamma, Pochhammer symbols and the
// terminating 4F3 that appears in the Laguerre result.
//
// All functions are pure and thread-safe (no use of the global `signgam`).

#include <cmath>
#include <stdexcept>
#include <string>

namespace fisherpoly {

/// Thrown when an argument lies outside the mathematical domain of an
/// operation (special-function argument, polynomial parameter, point
/// outside the support).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Signed value stored as (sign, ln|value|). sign == 0 represents an exact
/// zero and log_abs is then meaningless.
struct LogValue
{
    double log_abs = 0.0;
    int sign = 1;

    static LogValue zero() { return {0.0, 0}; }
    static LogValue from(double v);

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    LogValue operator*(const LogValue& o) const;
    LogValue operator/(const LogValue& o) const;
};

namespace specfun {

/// ln Γ(x) for x > 0.
double ln_gamma(double x);

/// Γ(x) as a signed LogValue for any real x that is not a non-positive
/// integer.
LogValue gamma_log(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
double digamma(double x);

/// ψ'(x) for x > 0.
double trigamma(double x);

/// Rising factorial (a)_m = a(a+1)...(a+m-1), accumulated factor by factor.
LogValue pochhammer(double a, long m);

/// 4F3(1,1,1,1-n; 2,2,1-alpha-n; 1), summed term by term (n terms).
double hyp4f3_terminating(long n, double alpha);

}  // namespace specfun
}  // namespace fisherpoly
