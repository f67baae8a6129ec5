#pragma once

// Expansion of the parameter derivative of a polynomial in terms of the
// lower-degree members of its own family:
//
//   d/dtheta y_n  = sum_{k<=n} A_k  y_k      (standard / monic normalisation)
//   d/dtheta ~y_n = sum_{k<=n} ~A_k ~y_k     (orthonormal)
//
// with ~A_k = (d_k / d_n) A_k for k < n and ~A_n = A_n - d_n'/d_n.

#include <vector>

#include "fisherpoly/orthopoly.hpp"

namespace fisherpoly {

struct CoefficientVector
{
    Family family;
    ParamTarget target;
    long n;
    Params params;
    std::vector<double> coeffs;  // index k = 0..n
};

/// A_0..A_n for the standard normalisation (monic for Grosjean).
CoefficientVector coeffs_orthogonal(Family f, ParamTarget t, long n, const Params& p);

/// ~A_0..~A_n. O(n): the Pochhammer ratios are accumulated downward from
/// k = n-1 in log space, so n can reach 10^5 without overflow.
CoefficientVector coeffs_orthonormal(Family f, ParamTarget t, long n, const Params& p);

/// Only the k = n orthonormal coefficient.
double atilde_n(Family f, ParamTarget t, long n, const Params& p);

/// d ~A_n / dtheta, by analytic differentiation.
double dAtilde_n(Family f, ParamTarget t, long n, const Params& p);

}  // namespace fisherpoly
