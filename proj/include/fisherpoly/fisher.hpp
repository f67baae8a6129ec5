#pragma once

// Parameter-based Fisher information I_n(theta) of the Rakhmanov density
// w(x; theta) ~y_n(x; theta)^2.
//
// Two independent analytic routes are provided:
//   - the generic sum  I_n = 2 sum_{k<n} ~A_k^2 - 2 d~A_n/dtheta,
//   - family-specific closed forms (Gamma sums, trigamma terms and, for
//     Laguerre, a terminating 4F3).
// They share only the scalar special functions.

#include <map>
#include <optional>

#include "fisherpoly/orthopoly.hpp"

namespace fisherpoly {

enum class FisherMethod { SumForm, ClosedForm, Hypergeometric, Oracle };

std::string_view method_name(FisherMethod m);

struct FisherResult
{
    Family family;
    ParamTarget target;
    long n;
    Params params;
    double value;
    FisherMethod method;
    std::map<FisherMethod, double> companion_values;
    std::optional<double> max_rel_discrepancy;

    /// Adds another method's value and refreshes max_rel_discrepancy.
    void add_companion(FisherMethod m, double v);
};

FisherResult fisher_sum_form(Family f, ParamTarget t, long n, const Params& p);

FisherResult fisher_closed_form(Family f, ParamTarget t, long n, const Params& p);

/// psi'(n+alpha+1) + 2n/(n+alpha) 4F3(1,1,1,1-n; 2,2,1-alpha-n; 1), n >= 1.
double fisher_laguerre_hypergeom(long n, double alpha);

double relative_difference(double a, double b);

}  // namespace fisherpoly
