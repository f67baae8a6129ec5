#pragma once

// Independent numerical checks. Everything here is computed from the
// weight, the three-term recurrences and quadrature; the Fisher value from
// the definition never touches the coefficient formulas or the closed-form
// norms.

#include <optional>
#include <string>

#include "fisherpoly/orthopoly.hpp"
#include "fisherpoly/quadrature.hpp"

namespace fisherpoly {

enum class Tolerance { Absolute, Relative, Either };

struct VerificationReport
{
    std::string check_name;
    double computed = 0.0;
    double expected = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double threshold = 0.0;
    Tolerance mode = Tolerance::Either;
    bool passed = false;
    QuadratureConfig config;
};

/// Fills abs_err, rel_err and passed from computed/expected/threshold/mode.
VerificationReport make_report(std::string name, double computed, double expected,
                               double threshold, Tolerance mode, const QuadratureConfig& cfg);

/// 4 * integral (d/dtheta [sqrt(w) y_n / ||y_n||])^2 dx with the norm
/// recomputed by quadrature and the theta-derivative taken by
/// Richardson-extrapolated central differences.
double fisher_by_definition(Family f, ParamTarget t, long n, const Params& p,
                            const QuadratureConfig& cfg = {});

/// Same, with the error estimate of the outer integral.
QuadratureResult fisher_by_definition_detailed(Family f, ParamTarget t, long n, const Params& p,
                                               const QuadratureConfig& cfg = {});

enum class Lemma2Identity { A, B, C };

/// (a) integral dw ~y_n^2 = -2 ~A_n
/// (b) integral dw ~y_n ~y_k = -~A_k, k < n
/// (c) integral d2w ~y_n^2 = 2 sum_{k<=n} ~A_k^2 + 2 ~A_n^2 - 2 d~A_n
VerificationReport verify_lemma2(Lemma2Identity which, Family f, ParamTarget t, long n,
                                 std::optional<long> k, const Params& p,
                                 const QuadratureConfig& cfg = {}, double threshold = 1e-7);

VerificationReport verify_orthonormality(Family f, long n, long m, const Params& p,
                                         const QuadratureConfig& cfg = {},
                                         double threshold = 1e-8);

/// Quadrature of y_n^2 w against norm_squared().
VerificationReport verify_norm(Family f, long n, const Params& p,
                               const QuadratureConfig& cfg = {}, double threshold = 1e-8);

/// integral of the Rakhmanov density against 1.
VerificationReport verify_density(Family f, long n, const Params& p,
                                  const QuadratureConfig& cfg = {}, double threshold = 1e-8);

/// fisher_by_definition against fisher_sum_form. The default threshold is
/// 1e-6, widened to 1e-5 within 1e-3 of a Grosjean symmetric point.
VerificationReport verify_fisher(Family f, ParamTarget t, long n, const Params& p,
                                 const QuadratureConfig& cfg = {},
                                 std::optional<double> threshold = std::nullopt);

/// Default oracle threshold for a case (see verify_fisher).
double default_fisher_threshold(Family f, const Params& p);

/// "laguerre/alpha n=2 alpha=0.5" style label.
std::string case_label(Family f, std::optional<ParamTarget> t, long n, const Params& p);

}  // namespace fisherpoly
