#include "fisherpoly/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fisherpoly {

void QuadratureConfig::check() const
{
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("quadrature: rel_tol must be > 0");
    if (!(fd_step > 0.0))
        throw std::invalid_argument("quadrature: fd_step must be > 0");
    if (max_levels < 3)
        throw std::invalid_argument("quadrature: max_levels must be >= 3");
    if (richardson_levels < 1)
        throw std::invalid_argument("quadrature: richardson_levels must be >= 1");
}

namespace {

// Past this abscissa the node's distance to the endpoint drops below
// ~1e-275; going further would round it to zero.
constexpr double kTMax = 6.0;

struct Node
{
    SupportPoint pt;  // on (-1, 1)
    double weight;
};

// Tanh-sinh node at abscissa t >= 0, right half. The left half mirrors it.
Node right_node(double t)
{
    constexpr double half_pi = 0.5 * std::numbers::pi;
    const double u = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    const double c = 2.0 * e / (1.0 + e);  // 1 - tanh(u)
    // (pi/2) cosh t / cosh^2 u, with 1/cosh^2 u = 4e / (1+e)^2
    const double w = half_pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    return {{1.0 - c, 2.0 - c, c}, w};
}

SupportPoint mirror(const SupportPoint& p) { return {-p.x, p.to_upper, p.from_lower}; }

// f times the Jacobian of the half-line map, at a node on (-1, 1).
class Evaluator
{
  public:
    Evaluator(const Integrand& f, Family fam) : f_(f), half_line_(fam == Family::Laguerre) {}

    double operator()(const SupportPoint& u)
    {
        ++evaluations;
        if (!half_line_)
            return f_(u);
        const double X = u.from_lower / u.to_upper;
        const double fx = f_(SupportPoint{X, X, std::numeric_limits<double>::infinity()});
        // e^{-X} has underflowed long before the Jacobian overflows
        return fx == 0.0 ? 0.0 : fx * 2.0 / (u.to_upper * u.to_upper);
    }

    long evaluations = 0;

  private:
    const Integrand& f_;
    bool half_line_;
};

}  // namespace

QuadratureResult integrate_detailed(const Integrand& f, Family family, const QuadratureConfig& cfg)
{
    cfg.check();
    Evaluator eval(f, family);

    double sum = 0.0;      // sum of w f over all nodes so far
    double abs_sum = 0.0;  // sum of w |f|
    auto add_pair = [&](double t) {
        const Node n = right_node(t);
        const double right = eval(n.pt);
        const double left = eval(mirror(n.pt));
        sum += n.weight * (right + left);
        abs_sum += n.weight * (std::fabs(right) + std::fabs(left));
    };

    const double centre = eval(SupportPoint{0.0, 1.0, 1.0});
    sum = 0.5 * std::numbers::pi * centre;
    abs_sum = std::fabs(sum);
    for (double t = 1.0; t <= kTMax; t += 1.0)
        add_pair(t);

    double h = 1.0;
    double prev = h * sum;
    double est = prev;
    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        for (double t = h; t <= kTMax; t += 2.0 * h)
            add_pair(t);
        prev = est;
        est = h * sum;
        if (!std::isfinite(est))
            throw QuadratureError("quadrature: non-finite integrand value", est, prev);
        const double diff = std::fabs(est - prev);
        const double scale = std::max(std::fabs(est), h * abs_sum);
        if (level >= 3 && diff <= cfg.rel_tol * scale)
            return {est, diff, level, eval.evaluations};
    }
    std::ostringstream os;
    os.precision(17);
    os << "quadrature: no convergence after " << cfg.max_levels
       << " levels (last two estimates " << est << ", " << prev << ")";
    throw QuadratureError(os.str(), est, prev);
}

double integrate(const Integrand& f, Family family, const QuadratureConfig& cfg)
{
    return integrate_detailed(f, family, cfg).value;
}

}  // namespace fisherpoly
