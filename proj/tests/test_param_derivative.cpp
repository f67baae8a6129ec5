#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fisherpoly/param_derivative.hpp"
#include "fisherpoly/specfun.hpp"

using namespace fisherpoly;

namespace {

constexpr double kEuler = 0.57721566490153286061;

// Richardson central difference of v at theta
template <class F>
double ddtheta(F v, double theta, double h = 1e-4)
{
    const double d1 = (v(theta + h) - v(theta - h)) / (2 * h);
    const double d2 = (v(theta + h / 2) - v(theta - h / 2)) / h;
    return d2 + (d2 - d1) / 3;
}

}  // namespace

TEST_CASE("laguerre coefficients")
{
    const auto a = coeffs_orthogonal(Family::Laguerre, ParamTarget::Alpha, 2, {0.4, 0, 0});
    REQUIRE(a.coeffs.size() == 3);
    CHECK(a.coeffs[0] == doctest::Approx(0.5));
    CHECK(a.coeffs[1] == doctest::Approx(1.0));
    CHECK(a.coeffs[2] == 0.0);

    const auto at = coeffs_orthonormal(Family::Laguerre, ParamTarget::Alpha, 1, {0, 0, 0});
    CHECK(at.coeffs[0] == doctest::Approx(1.0));
    CHECK(at.coeffs[1] == doctest::Approx(-(1.0 - kEuler) / 2));
    CHECK(dAtilde_n(Family::Laguerre, ParamTarget::Alpha, 0, {0, 0, 0}) ==
          doctest::Approx(-std::numbers::pi * std::numbers::pi / 12));
}

TEST_CASE("jacobi n=1 at the origin of parameter space")
{
    const auto a = coeffs_orthogonal(Family::Jacobi, ParamTarget::Alpha, 1, {0, 0, 0});
    CHECK(a.coeffs[0] == doctest::Approx(0.5));
    CHECK(a.coeffs[1] == doctest::Approx(0.5));
}

TEST_CASE("beta target mirrors alpha with alternating signs")
{
    const Params p{0.3, 1.7, 0};
    const Params q{1.7, 0.3, 0};
    const long n = 5;
    const auto b = coeffs_orthonormal(Family::Jacobi, ParamTarget::Beta, n, p);
    const auto a = coeffs_orthonormal(Family::Jacobi, ParamTarget::Alpha, n, q);
    for (long k = 0; k <= n; ++k)
        CHECK(b.coeffs[k] == doctest::Approx(((n - k) % 2 ? -1.0 : 1.0) * a.coeffs[k]));
}

TEST_CASE("gegenbauer parity zeros are exact")
{
    const auto c = coeffs_orthonormal(Family::Gegenbauer, ParamTarget::Lambda, 3, {0, 0, 1.0});
    CHECK(c.coeffs[0] == 0.0);
    CHECK(c.coeffs[2] == 0.0);
    CHECK(c.coeffs[1] != 0.0);
    CHECK(coeffs_orthogonal(Family::Gegenbauer, ParamTarget::Lambda, 2, {0, 0, 1.0}).coeffs[1] == 0.0);
}

TEST_CASE("grosjean first kind at its symmetric point")
{
    const Params p{-0.5, 0, 0};
    for (long n : {1L, 2L, 5L, 9L}) {
        CHECK(atilde_n(Family::GrosjeanFirst, ParamTarget::Alpha, n, p) == doctest::Approx(0.0));
        CHECK(dAtilde_n(Family::GrosjeanFirst, ParamTarget::Alpha, n, p) ==
              doctest::Approx(-specfun::trigamma(n + 0.5)).epsilon(1e-12));
    }
    // k = 0 coefficient at n = 1 is 2 sqrt 2 (numerically confirmed)
    CHECK(coeffs_orthonormal(Family::GrosjeanFirst, ParamTarget::Alpha, 1, p).coeffs[0] ==
          doctest::Approx(2 * std::numbers::sqrt2).epsilon(1e-13));
}

TEST_CASE("orthonormal expansion matches a finite-difference derivative")
{
    struct Case
    {
        Family f;
        ParamTarget t;
        Params p;
        double x;
    };
    const Case cases[] = {
        {Family::Laguerre, ParamTarget::Alpha, {-0.5, 0, 0}, 1.3},
        {Family::Jacobi, ParamTarget::Alpha, {2.5, -0.9, 0}, 0.4},
        {Family::Jacobi, ParamTarget::Beta, {0.5, 1.0, 0}, -0.6},
        {Family::Gegenbauer, ParamTarget::Lambda, {0, 0, 0.1}, 0.7},
        {Family::GrosjeanFirst, ParamTarget::Alpha, {-0.2, 0, 0}, -0.3},
        {Family::GrosjeanSecond, ParamTarget::Alpha, {1.6, 0, 0}, 0.55},
    };
    for (const auto& c : cases) {
        for (long n = 0; n <= 6; ++n) {
            CAPTURE(family_name(c.f));
            CAPTURE(n);
            const auto at = coeffs_orthonormal(c.f, c.t, n, c.p);
            double sum = 0.0;
            for (long k = 0; k <= n; ++k)
                sum += at.coeffs[k] * eval_orthonormal(c.f, k, c.p, c.x);
            const double fd = ddtheta(
                [&](double th) { return eval_orthonormal(c.f, n, with_param(c.p, c.t, th), c.x); },
                param_value(c.p, c.t));
            CHECK(sum == doctest::Approx(fd).epsilon(1e-7).scale(1.0));
        }
    }
}

TEST_CASE("d~A_n matches a finite difference of ~A_n")
{
    const Params p{0.8, -0.4, 2.2};
    for (long n : {0L, 1L, 4L}) {
        for (auto [f, t] : {std::pair{Family::Laguerre, ParamTarget::Alpha},
                            std::pair{Family::Jacobi, ParamTarget::Alpha},
                            std::pair{Family::Jacobi, ParamTarget::Beta},
                            std::pair{Family::Gegenbauer, ParamTarget::Lambda}}) {
            CAPTURE(n);
            const double fd = ddtheta([&](double th) { return atilde_n(f, t, n, with_param(p, t, th)); },
                                      param_value(p, t));
            CHECK(dAtilde_n(f, t, n, p) == doctest::Approx(fd).epsilon(1e-8));
        }
    }
}

TEST_CASE("large n stays finite")
{
    const auto c = coeffs_orthonormal(Family::Laguerre, ParamTarget::Alpha, 100000, {0.5, 0, 0});
    for (double v : c.coeffs)
        REQUIRE(std::isfinite(v));
    const auto j = coeffs_orthonormal(Family::Jacobi, ParamTarget::Alpha, 20000, {3.0, 0.5, 0});
    for (double v : j.coeffs)
        REQUIRE(std::isfinite(v));
}

TEST_CASE("bad input")
{
    CHECK_THROWS_AS(coeffs_orthonormal(Family::Laguerre, ParamTarget::Alpha, -1, {}), DomainError);
    CHECK_THROWS_AS(coeffs_orthonormal(Family::Laguerre, ParamTarget::Lambda, 2, {}), PairingError);
    CHECK_THROWS_AS(coeffs_orthonormal(Family::Gegenbauer, ParamTarget::Lambda, 2, {}), DomainError);
}
