#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fisherpoly/fisher.hpp"
#include "fisherpoly/specfun.hpp"

using namespace fisherpoly;
using specfun::trigamma;

namespace {
const double pi2 = std::numbers::pi * std::numbers::pi;
}

TEST_CASE("small-n values")
{
    CHECK(fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 0, {0, 0, 0}).value ==
          doctest::Approx(pi2 / 6).epsilon(1e-14));
    CHECK(fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 1, {0, 0, 0}).value ==
          doctest::Approx(1 + pi2 / 6).epsilon(1e-14));
    CHECK(fisher_sum_form(Family::Jacobi, ParamTarget::Alpha, 0, {0, 0, 0}).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fisher_closed_form(Family::Gegenbauer, ParamTarget::Lambda, 0, {0, 0, 0.5}).value ==
          doctest::Approx(4 - pi2 / 3).epsilon(1e-14));
    CHECK(fisher_closed_form(Family::GrosjeanFirst, ParamTarget::Alpha, 1, {-0.5, 0, 0}).value ==
          doctest::Approx(16 + 2 * trigamma(1.5)).epsilon(1e-13));
}

TEST_CASE("jacobi swap symmetry")
{
    CHECK(fisher_closed_form(Family::Jacobi, ParamTarget::Beta, 3, {1.5, 0.5, 0}).value ==
          doctest::Approx(fisher_closed_form(Family::Jacobi, ParamTarget::Alpha, 3, {0.5, 1.5, 0}).value)
              .epsilon(1e-14));
}

TEST_CASE("hypergeometric laguerre form")
{
    CHECK(fisher_laguerre_hypergeom(1, 0.0) == doctest::Approx(1 + pi2 / 6).epsilon(1e-14));
    CHECK(fisher_laguerre_hypergeom(2, 0.0) == doctest::Approx(trigamma(3.0) + 2.5).epsilon(1e-14));
    CHECK(fisher_laguerre_hypergeom(5, 1.7) ==
          doctest::Approx(fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 5, {1.7, 0, 0}).value)
              .epsilon(1e-11));
    CHECK_THROWS_AS(fisher_laguerre_hypergeom(0, 0.0), DomainError);
}

TEST_CASE("sum and closed forms agree off the acceptance grid")
{
    struct Case
    {
        Family f;
        ParamTarget t;
        Params p;
    };
    const Case cases[] = {
        {Family::Laguerre, ParamTarget::Alpha, {-0.99, 0, 0}},
        {Family::Laguerre, ParamTarget::Alpha, {37.0, 0, 0}},
        {Family::Jacobi, ParamTarget::Alpha, {-0.95, -0.95, 0}},
        {Family::Jacobi, ParamTarget::Beta, {6.3, -0.2, 0}},
        {Family::Gegenbauer, ParamTarget::Lambda, {0, 0, -0.4}},
        {Family::Gegenbauer, ParamTarget::Lambda, {0, 0, 25.0}},
        {Family::GrosjeanFirst, ParamTarget::Alpha, {-0.5004, 0, 0}},
        {Family::GrosjeanFirst, ParamTarget::Alpha, {-0.999, 0, 0}},
        {Family::GrosjeanSecond, ParamTarget::Alpha, {0.5001, 0, 0}},
        {Family::GrosjeanSecond, ParamTarget::Alpha, {1.99, 0, 0}},
    };
    for (const auto& c : cases)
        for (long n : {0L, 1L, 2L, 7L, 20L, 60L}) {
            CAPTURE(family_name(c.f));
            CAPTURE(n);
            const double s = fisher_sum_form(c.f, c.t, n, c.p).value;
            const double cl = fisher_closed_form(c.f, c.t, n, c.p).value;
            CHECK(s > 0.0);
            CHECK(relative_difference(s, cl) <= 1e-10);
        }
}

TEST_CASE("companion values")
{
    auto r = fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 3, {0.5, 0, 0});
    CHECK_FALSE(r.max_rel_discrepancy);
    r.add_companion(FisherMethod::ClosedForm, r.value * (1 + 1e-9));
    REQUIRE(r.max_rel_discrepancy);
    CHECK(*r.max_rel_discrepancy == doctest::Approx(1e-9).epsilon(1e-3));
    CHECK(method_name(FisherMethod::Hypergeometric) == "hypergeometric");
}

TEST_CASE("large degree")
{
    const double v = fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 100000, {0.5, 0, 0}).value;
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
    CHECK(relative_difference(
              v, fisher_closed_form(Family::Laguerre, ParamTarget::Alpha, 100000, {0.5, 0, 0}).value) <
          1e-9);
}
