#pragma once

// Parameter-dependent classical orthogonal polynomials: Laguerre, Jacobi,
// Gegenbauer and the two Grosjean families (monic Jacobi with
// alpha + beta = -1 and alpha + beta = +1).

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "fisherpoly/specfun.hpp"

namespace fisherpoly {

enum class Family { Laguerre, Jacobi, Gegenbauer, GrosjeanFirst, GrosjeanSecond };

/// Which parameter the Fisher information is taken with respect to.
enum class ParamTarget { Alpha, Beta, Lambda };

/// Thrown for a (family, target) combination that has no meaning, e.g.
/// Lambda with Laguerre.
class PairingError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Only the fields relevant to the family are read. For the Grosjean
/// families beta is implied by alpha.
struct Params
{
    double alpha = 0.0;
    double beta = 0.0;
    double lambda = 0.0;
};

struct SupportInterval
{
    double a;
    double b;  // +infinity for Laguerre
};

/// A point of the support together with its distances to both ends. The
/// distances are carried separately so that weights like (1-x)^alpha stay
/// accurate for nodes that crowd an endpoint.
struct SupportPoint
{
    double x;
    double from_lower;  // x - a
    double to_upper;    // b - x, +infinity for Laguerre
};

std::string_view family_name(Family f);
std::string_view target_name(ParamTarget t);
std::optional<Family> parse_family(std::string_view s);
std::optional<ParamTarget> parse_target(std::string_view s);

/// Throws DomainError naming the family and the violated bound.
void validate(Family f, const Params& p);

/// Throws PairingError unless the target is a parameter of the family.
void validate_pairing(Family f, ParamTarget t);

/// The parameter value selected by `t`.
double param_value(const Params& p, ParamTarget t);

/// Copy of `p` with the `t` parameter replaced.
Params with_param(Params p, ParamTarget t, double value);

/// Distance from `p`'s `t` parameter to the nearest edge of the family's
/// admissible domain (infinity when unbounded on both sides).
double domain_margin(Family f, const Params& p, ParamTarget t);

/// The Jacobi (alpha, beta) pair the family is a special case of. Laguerre
/// has no such pair and throws.
std::pair<double, double> jacobi_parameters(Family f, const Params& p);

SupportInterval support(Family f);

/// Builds a SupportPoint from a plain coordinate. Throws DomainError when x
/// is not strictly inside the support.
SupportPoint make_point(Family f, double x);

double weight(Family f, const Params& p, double x);
double weight(Family f, const Params& p, const SupportPoint& pt);

/// ln t(x) in the factorisation w(x; theta) = h(x) t(x)^theta, so that
/// d/dtheta w = w ln t and d^2/dtheta^2 w = w ln^2 t.
double weight_log_derivative(Family f, ParamTarget t, const SupportPoint& pt);

/// L_n^(alpha), P_n^(alpha,beta), C_n^(lambda), or the monic Grosjean
/// polynomial at x, by three-term recurrence.
double eval_standard(Family f, long n, const Params& p, double x);

/// Jacobi P_n^(a,b)(x). P_1 comes from its explicit formula so that the
/// alpha + beta = -1 case never divides by zero.
double eval_jacobi(long n, double a, double b, double x);

/// Leading coefficient of P_n^(a,b).
LogValue monic_leading_coefficient(long n, double a, double b);

LogValue norm_squared_log(Family f, long n, const Params& p);
double norm_squared(Family f, long n, const Params& p);

double eval_orthonormal(Family f, long n, const Params& p, double x);

double rakhmanov_density(Family f, long n, const Params& p, double x);
double rakhmanov_density(Family f, long n, const Params& p, const SupportPoint& pt);

/// alpha value at which the Grosjean Fisher information is symmetric
/// (-1/2 for the first kind, 1/2 for the second). Empty for other families.
std::optional<double> grosjean_symmetric_point(Family f);

}  // namespace fisherpoly
