#pragma once

// Double-exponential (tanh-sinh) quadrature over a family's support.
//
// Nodes are produced together with their distances to both interval ends so
// integrands with algebraic/logarithmic endpoint singularities can be
// evaluated without cancellation in 1 - x. The half line used by Laguerre is
// first mapped onto (-1, 1) with x = (1+u)/(1-u).

#include <functional>
#include <stdexcept>
#include <string>

#include "fisherpoly/orthopoly.hpp"

namespace fisherpoly {

enum class SemiInfiniteMap { RationalMap };

struct QuadratureConfig
{
    double rel_tol = 1e-9;
    int max_levels = 12;           // each level halves the step
    double fd_step = 1e-3;         // scaled by max(1, |theta|)
    int richardson_levels = 2;
    SemiInfiniteMap semiinfinite_map = SemiInfiniteMap::RationalMap;

    /// Throws std::invalid_argument when a field is out of range.
    void check() const;
};

class QuadratureError : public std::runtime_error
{
  public:
    QuadratureError(const std::string& what, double last, double previous)
        : std::runtime_error(what), last_estimate(last), previous_estimate(previous)
    {
    }
    double last_estimate;
    double previous_estimate;
};

struct QuadratureResult
{
    double value;
    double error_estimate;  // |I_L - I_{L-1}| at the accepted level
    int levels;
    long evaluations;
};

using Integrand = std::function<double(const SupportPoint&)>;

/// Integrates over the support of `family` until two successive levels
/// agree to cfg.rel_tol (relative to max(|I|, integral of |f|)).
QuadratureResult integrate_detailed(const Integrand& f, Family family,
                                    const QuadratureConfig& cfg = {});

double integrate(const Integrand& f, Family family, const QuadratureConfig& cfg = {});

}  // namespace fisherpoly
