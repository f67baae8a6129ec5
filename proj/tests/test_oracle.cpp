#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fisherpoly/fisher.hpp"
#include "fisherpoly/oracle.hpp"
#include "fisherpoly/specfun.hpp"

using namespace fisherpoly;

TEST_CASE("quadrature basics")
{
    CHECK(integrate([](const SupportPoint&) { return 1.0; }, Family::Jacobi) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(integrate([](const SupportPoint& p) { return std::exp(-p.x); }, Family::Laguerre) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(integrate([](const SupportPoint& p) { return 1.0 / std::sqrt(p.to_upper); }, Family::Jacobi) ==
          doctest::Approx(2.0 * std::numbers::sqrt2).epsilon(1e-12));
    // log singularity at 0 on the half line: int ln(x) e^-x = -gamma
    CHECK(integrate([](const SupportPoint& p) { return std::log(p.x) * std::exp(-p.x); },
                    Family::Laguerre) == doctest::Approx(-0.57721566490153286).epsilon(1e-12));
}

TEST_CASE("quadrature failures")
{
    QuadratureConfig cfg;
    cfg.max_levels = 3;
    cfg.rel_tol = 1e-15;
    CHECK_THROWS_AS(integrate([](const SupportPoint& p) { return std::cos(400.0 * p.x + 0.3); },
                              Family::Jacobi, cfg),
                    QuadratureError);
    CHECK_THROWS_AS(integrate([](const SupportPoint&) { return INFINITY; }, Family::Jacobi),
                    QuadratureError);
    cfg = {};
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate([](const SupportPoint&) { return 1.0; }, Family::Jacobi, cfg),
                    std::invalid_argument);
}

TEST_CASE("fisher from the definition")
{
    CHECK(fisher_by_definition(Family::Laguerre, ParamTarget::Alpha, 0, {1, 0, 0}) ==
          doctest::Approx(specfun::trigamma(2.0)).epsilon(1e-6));
    CHECK(fisher_by_definition(Family::Jacobi, ParamTarget::Alpha, 0, {0, 0, 0}) ==
          doctest::Approx(1.0).epsilon(1e-6));
    const double sum = fisher_sum_form(Family::Gegenbauer, ParamTarget::Lambda, 2, {0, 0, 1}).value;
    CHECK(fisher_by_definition(Family::Gegenbauer, ParamTarget::Lambda, 2, {0, 0, 1}) ==
          doctest::Approx(sum).epsilon(1e-6));
}

TEST_CASE("oracle refuses parameters within one step of the boundary")
{
    CHECK_THROWS_AS(fisher_by_definition(Family::Laguerre, ParamTarget::Alpha, 1, {-0.9995, 0, 0}),
                    DomainError);
    CHECK_THROWS_AS(fisher_by_definition(Family::GrosjeanFirst, ParamTarget::Alpha, 1, {-0.0002, 0, 0}),
                    DomainError);
}

TEST_CASE("oracle is stable under tolerance and step changes")
{
    const struct
    {
        Family f;
        ParamTarget t;
        Params p;
        long n;
    } cases[] = {
        {Family::Laguerre, ParamTarget::Alpha, {-0.5, 0, 0}, 3},
        {Family::Jacobi, ParamTarget::Beta, {2.5, -0.9, 0}, 5},
        {Family::Gegenbauer, ParamTarget::Lambda, {0, 0, 3}, 2},
        {Family::GrosjeanSecond, ParamTarget::Alpha, {1.9, 0, 0}, 8},
    };
    for (const auto& c : cases) {
        CAPTURE(case_label(c.f, c.t, c.n, c.p));
        QuadratureConfig cfg;
        const auto base = fisher_by_definition_detailed(c.f, c.t, c.n, c.p, cfg);
        cfg.rel_tol *= 0.5;
        const auto tight = fisher_by_definition_detailed(c.f, c.t, c.n, c.p, cfg);
        CHECK(std::fabs(tight.value - base.value) <= base.error_estimate);

        cfg = {};
        cfg.fd_step *= 0.5;
        const double half = fisher_by_definition(c.f, c.t, c.n, c.p, cfg);
        CHECK(relative_difference(half, base.value) <= 1e-7);
    }
}

TEST_CASE("weight-derivative identities")
{
    const Params lag{0, 0, 0};
    const auto a = verify_lemma2(Lemma2Identity::A, Family::Laguerre, ParamTarget::Alpha, 0,
                                 std::nullopt, lag);
    CHECK(a.passed);
    CHECK(a.expected == doctest::Approx(-0.57721566490153286));
    const auto b = verify_lemma2(Lemma2Identity::B, Family::Laguerre, ParamTarget::Alpha, 1, 0L, lag);
    CHECK(b.passed);
    CHECK(b.expected == doctest::Approx(-1.0));
    const auto c = verify_lemma2(Lemma2Identity::C, Family::GrosjeanFirst, ParamTarget::Alpha, 1,
                                 std::nullopt, {-0.5, 0, 0});
    CHECK(c.passed);
    CHECK(c.expected == doctest::Approx(2 * 8.0 + 2 * specfun::trigamma(1.5)));
    CHECK_THROWS_AS(verify_lemma2(Lemma2Identity::B, Family::Laguerre, ParamTarget::Alpha, 1, 1L, lag),
                    DomainError);
}

TEST_CASE("orthonormality and norms by quadrature")
{
    const auto r1 = verify_orthonormality(Family::Jacobi, 3, 3, {0.5, 1, 0});
    CHECK(r1.passed);
    CHECK(r1.expected == 1.0);
    const auto r2 = verify_orthonormality(Family::Laguerre, 2, 5, {0, 0, 0});
    CHECK(r2.passed);
    CHECK(r2.expected == 0.0);
    CHECK(verify_orthonormality(Family::GrosjeanSecond, 0, 0, {0.3, 0, 0}).passed);
    CHECK(verify_orthonormality(Family::GrosjeanFirst, 0, 0, {-0.7, 0, 0}).passed);

    CHECK(verify_norm(Family::Laguerre, 3, {0, 0, 0}).passed);
    const auto leg = verify_norm(Family::Gegenbauer, 1, {0, 0, 0.5});
    CHECK(leg.passed);
    CHECK(leg.expected == doctest::Approx(2.0 / 3.0));
    CHECK(verify_norm(Family::GrosjeanFirst, 2, {-0.25, 0, 0}).passed);
    CHECK(verify_norm(Family::GrosjeanSecond, 3, {1.4, 0, 0}).passed);
    CHECK(verify_density(Family::Gegenbauer, 3, {0, 0, 1.5}).passed);
}

TEST_CASE("report thresholds")
{
    const auto r = make_report("x", 1.0 + 2e-6, 1.0, 1e-6, Tolerance::Relative, {});
    CHECK_FALSE(r.passed);
    CHECK(make_report("x", 1e-9, 0.0, 1e-8, Tolerance::Absolute, {}).passed);
    CHECK(make_report("x", 100.00001, 100.0, 1e-6, Tolerance::Either, {}).passed);
    CHECK(default_fisher_threshold(Family::GrosjeanFirst, {-0.5005, 0, 0}) == 1e-5);
    CHECK(default_fisher_threshold(Family::GrosjeanSecond, {0.6, 0, 0}) == 1e-6);
    CHECK(default_fisher_threshold(Family::Laguerre, {-0.5, 0, 0}) == 1e-6);
}
