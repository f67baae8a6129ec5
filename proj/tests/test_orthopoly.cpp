#include <doctest.h>

#include <cmath>

#include "fisherpoly/orthopoly.hpp"
#include "fisherpoly/quadrature.hpp"

using namespace fisherpoly;

TEST_CASE("names round-trip")
{
    for (auto f : {Family::Laguerre, Family::Jacobi, Family::Gegenbauer, Family::GrosjeanFirst,
                   Family::GrosjeanSecond})
        CHECK(parse_family(family_name(f)) == f);
    CHECK(parse_target("lambda") == ParamTarget::Lambda);
    CHECK_FALSE(parse_family("hermite"));
}

TEST_CASE("validation names the family and the bound")
{
    auto message = [](Family f, Params p) -> std::string {
        try {
            validate(f, p);
        } catch (const DomainError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message(Family::Gegenbauer, {0, 0, 0.0}) ==
          "gegenbauer: lambda must be > -1/2 and != 0 (got 0)");
    CHECK(message(Family::Laguerre, {-1.0, 0, 0}).find("laguerre: alpha must be > -1") == 0);
    CHECK(message(Family::Jacobi, {0.0, -1.2, 0}).find("jacobi: beta must be > -1") == 0);
    CHECK(message(Family::GrosjeanFirst, {0.1, 0, 0}).find("grosjean1:") == 0);
    CHECK(message(Family::GrosjeanSecond, {2.0, 0, 0}).find("grosjean2:") == 0);
    CHECK(message(Family::Gegenbauer, {0, 0, -0.3}).empty());
    CHECK_THROWS_AS(validate_pairing(Family::Laguerre, ParamTarget::Beta), PairingError);
    CHECK_THROWS_AS(validate_pairing(Family::Gegenbauer, ParamTarget::Alpha), PairingError);
    CHECK_NOTHROW(validate_pairing(Family::Jacobi, ParamTarget::Beta));
}

TEST_CASE("support and weights")
{
    CHECK(support(Family::Laguerre).a == 0.0);
    CHECK(std::isinf(support(Family::Laguerre).b));
    CHECK(support(Family::GrosjeanSecond).a == -1.0);
    CHECK(weight(Family::Laguerre, {0, 0, 0}, 1.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(weight(Family::Jacobi, {0, 0, 0}, 0.3) == 1.0);
    CHECK(weight(Family::GrosjeanFirst, {-0.5, 0, 0}, 0.0) == 1.0);
    CHECK(weight(Family::Gegenbauer, {0, 0, 1.5}, 0.5) == doctest::Approx(0.75));
    CHECK_THROWS(make_point(Family::Jacobi, 1.0));
    CHECK_THROWS(make_point(Family::Laguerre, -0.1));
}

TEST_CASE("explicit low-degree polynomials")
{
    CHECK(eval_standard(Family::Laguerre, 1, {0, 0, 0}, 1.0) == 0.0);
    CHECK(eval_standard(Family::Jacobi, 1, {0, 0, 0}, 0.5) == 0.5);
    CHECK(eval_standard(Family::Gegenbauer, 0, {0, 0, 2.0}, 0.3) == 1.0);
    for (double x : {-0.7, 0.1, 0.9}) {
        // Legendre P2, Gegenbauer C2, Laguerre L2
        CHECK(eval_standard(Family::Jacobi, 2, {0, 0, 0}, x) == doctest::Approx(1.5 * x * x - 0.5));
        const double lam = 1.3;
        CHECK(eval_standard(Family::Gegenbauer, 2, {0, 0, lam}, x) ==
              doctest::Approx(2 * lam * (lam + 1) * x * x - lam));
    }
    const double a = 0.7, x = 2.4;
    CHECK(eval_standard(Family::Laguerre, 2, {a, 0, 0}, x) ==
          doctest::Approx((x * x - 2 * (a + 2) * x + (a + 1) * (a + 2)) / 2));
}

TEST_CASE("grosjean polynomials are monic")
{
    CHECK(monic_leading_coefficient(0, 0.3, -1.3).value() == 1.0);
    CHECK(monic_leading_coefficient(1, 0.0, 0.0).value() == doctest::Approx(1.0));
    CHECK(monic_leading_coefficient(2, 0.3, -1.3).value() == doctest::Approx(0.75));
    for (auto f : {Family::GrosjeanFirst, Family::GrosjeanSecond}) {
        const Params p{-0.35, 0, 0};
        // y_n(x) / x^n -> 1 far from the origin; check via finite differences instead:
        // the n-th difference of a monic degree-n polynomial is n!
        const long n = 4;
        const double h = 0.25;
        double diff = 0.0, binom = 1.0;
        for (long j = 0; j <= n; ++j) {
            diff += ((n - j) % 2 ? -1.0 : 1.0) * binom * eval_standard(f, n, p, -0.5 + j * h);
            binom = binom * (n - j) / (j + 1);
        }
        CHECK(diff / std::pow(h, n) == doctest::Approx(24.0).epsilon(1e-9));
    }
}

TEST_CASE("norms")
{
    CHECK(norm_squared(Family::Laguerre, 0, {0, 0, 0}) == doctest::Approx(1.0));
    CHECK(norm_squared(Family::Laguerre, 3, {0, 0, 0}) == doctest::Approx(1.0));
    CHECK(norm_squared(Family::Jacobi, 0, {0, 0, 0}) == doctest::Approx(2.0));
    CHECK(norm_squared(Family::Gegenbauer, 0, {0, 0, 0.5}) == doctest::Approx(2.0));
    CHECK(norm_squared(Family::Gegenbauer, 1, {0, 0, 0.5}) == doctest::Approx(2.0 / 3.0));
    // negative lambda: Gamma(2 lambda) changes sign but the norm stays positive
    CHECK(norm_squared(Family::Gegenbauer, 2, {0, 0, -0.3}) > 0.0);
}

TEST_CASE("orthonormal values and densities")
{
    CHECK(eval_orthonormal(Family::Laguerre, 0, {0, 0, 0}, 3.0) == doctest::Approx(1.0));
    CHECK(eval_orthonormal(Family::Jacobi, 0, {0, 0, 0}, 0.0) == doctest::Approx(std::sqrt(0.5)));
    for (double x : {0.2, 1.0, 7.0})
        CHECK(rakhmanov_density(Family::Laguerre, 0, {0, 0, 0}, x) == doctest::Approx(std::exp(-x)));
    CHECK(rakhmanov_density(Family::Jacobi, 0, {0, 0, 0}, -0.4) == doctest::Approx(0.5));
    const Params p{0, 0, 1.5};
    const double mass = integrate(
        [&](const SupportPoint& pt) { return rakhmanov_density(Family::Gegenbauer, 3, p, pt); },
        Family::Gegenbauer);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("endpoint distances keep the weight accurate")
{
    // 1 - x rounds to 0 in double; the carried distance does not
    const SupportPoint pt{1.0, 2.0, 1e-300};
    const double w = weight(Family::Jacobi, {-0.5, 0.0, 0.0}, pt);
    CHECK(w == doctest::Approx(1e150).epsilon(1e-12));
    CHECK(weight_log_derivative(Family::Jacobi, ParamTarget::Alpha, pt) ==
          doctest::Approx(std::log(1e-300)));
}
