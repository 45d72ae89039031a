#include <doctest.h>

#include <cmath>

#include "gbound/domain.hpp"

using namespace gbound;

TEST_CASE("constants")
{
    const auto& c = DomainConstants::get();
    CHECK(c.a.contains(0.7425));
    CHECK(c.a.width() <= 2e-16);
    CHECK(c.b.lo() >= 0.311);
    CHECK(c.b.hi() <= 0.312);
    CHECK(c.d.lo() >= 0.386);
    CHECK(c.d.hi() <= 0.387);
    CHECK(c.b.width() <= 1e-15);
    CHECK(c.d.width() <= 1e-15);
    CHECK(c.b.contains(c.b_value));
    CHECK(c.d.contains(c.d_value));

    // b^2 is the positive root of 3u^2 + 10u - 1
    const Interval b2 = sqr(c.b);
    const Interval poly = scale(sqr(b2), 3.0) + scale(b2, 10.0) - Interval(1.0);
    CHECK(poly.contains(0.0));
    CHECK(poly.width() < 1e-14);
}

TEST_CASE("cap examples")
{
    const auto& c = DomainConstants::get();
    CHECK(ellipse_cap(0.0) == 0.5);
    const double b = c.b_value;
    CHECK(std::fabs(0.5 * (1 + b * b) - std::sqrt((1 - b * b) / 3)) <= 1e-12);
    CHECK(ellipse_cap(b) == doctest::Approx(0.54858).epsilon(1e-5));
    CHECK(ellipse_cap(c.a_value) == doctest::Approx(c.d_value).epsilon(1e-15));
    CHECK(std::floor(ellipse_cap(c.a_value) * 1000) == 386);
    CHECK_THROWS_AS((void)ellipse_cap(-0.1), std::out_of_range);
    CHECK_THROWS_AS((void)ellipse_cap(1.1), std::out_of_range);
}

TEST_CASE("cap is positive and continuous on a dense grid")
{
    const auto& c = DomainConstants::get();
    const int n = 100000;
    double prev = ellipse_cap(0.0);
    double max_jump = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double x = c.a_value * i / n;
        const double v = ellipse_cap(std::min(x, 1.0));
        REQUIRE(v > 0.0);
        max_jump = std::max(max_jump, std::fabs(v - prev));
        prev = v;
    }
    // grid step 7.4e-6, slopes below 1: no jump at the branch switch
    CHECK(max_jump < 1e-5);
    const double b = c.b_value;
    const double below = 0.5 * (1 + b * b);
    const double above = std::sqrt((1 - b * b) / 3);
    CHECK(std::fabs(below - above) < 1e-12);
}

TEST_CASE("interval cap encloses the point cap")
{
    for (int i = 0; i <= 1000; ++i) {
        const double x = 0.7425 * i / 1000;
        CHECK(ellipse_cap(Interval(x)).contains(ellipse_cap(x)));
    }
    const Interval wide = ellipse_cap(Interval(0.2, 0.5));
    CHECK(wide.lo() <= ellipse_cap(0.5));
    CHECK(wide.hi() >= ellipse_cap(DomainConstants::get().b_value));
}

TEST_CASE("membership")
{
    const auto& c = DomainConstants::get();
    CHECK(omega_contains(0, 0));
    CHECK(omega_contains(c.a_value, c.d_value));
    CHECK_FALSE(omega_contains(0.5, 0.7));
    CHECK_FALSE(omega_contains(0.75, 0.1));
    CHECK_FALSE(omega_contains(-0.01, 0.1));
    CHECK_FALSE(omega_contains(0.1, -0.01));
    CHECK(omega_contains(0.0, 0.5));
    CHECK_FALSE(omega_contains(0.0, 0.5001));
}

TEST_CASE("edge parameterization")
{
    const OmegaRegion omega;
    const auto& c = DomainConstants::get();
    const auto xa0 = omega.edge_point(EdgeId::XA, 0.0);
    CHECK(xa0.first == c.a_value);
    CHECK(xa0.second == 0.0);
    const auto top = omega.edge_point(EdgeId::CurveHigh, 1.0);
    CHECK(top.first == c.a_value);
    CHECK(top.second == c.d_value);
    const auto low_end = omega.edge_point(EdgeId::CurveLow, 1.0);
    const auto high_start = omega.edge_point(EdgeId::CurveHigh, 0.0);
    CHECK(low_end.first == high_start.first);
    CHECK(low_end.second == high_start.second);
    CHECK_THROWS_AS((void)omega.edge_point(EdgeId::XZero, 1.5), std::out_of_range);

    for (EdgeId e : kAllEdges) {
        for (int i = 0; i <= 200; ++i) {
            const auto [x, y] = omega.edge_point(e, i / 200.0);
            REQUIRE(omega.contains(x, y));
        }
    }
    CHECK(to_string(EdgeId::CurveLow) == "CURVE_LOW");
}

TEST_CASE("radicands are non-negative on the region")
{
    const auto& c = DomainConstants::get();
    for (int i = 0; i <= 400; ++i) {
        const double x = c.b_value + (c.a_value - c.b_value) * i / 400;
        for (int j = 0; j <= 50; ++j) {
            const double y = ellipse_cap(std::min(x, c.a_value)) * j / 50;
            // double rounding on the cap leaves a few ulp below zero at the rim
            REQUIRE(1 - x * x - 3 * y * y >= -1e-12);
        }
    }
    for (int i = 0; i <= 400; ++i) {
        const double x = c.b_value * i / 400;
        REQUIRE(1 - 10 * x * x - 3 * std::pow(x, 4) >= -1e-12);
    }
    const Interval at_b = Interval(1.0) - scale(sqr(c.b), 10.0) - scale(pow(c.b, 4), 3.0);
    CHECK(at_b.contains(0.0));
    CHECK(at_b.width() < 1e-12);
}

TEST_CASE("clipping and interior test")
{
    const OmegaRegion omega;
    const auto clipped = omega.clip(Box{Interval(0.6, 0.8), Interval(0.0, 1.0)});
    REQUIRE(clipped);
    CHECK(clipped->x.hi() <= 0.7426);
    CHECK(clipped->y.hi() < 0.5);
    CHECK_FALSE(omega.clip(Box{Interval(0.6, 0.7), Interval(0.6, 0.8)}));
    CHECK(omega.interior_contains(Box{Interval(0.2, 0.3), Interval(0.1, 0.2)}));
    CHECK_FALSE(omega.interior_contains(Box{Interval(0.0, 0.3), Interval(0.1, 0.2)}));
    CHECK_FALSE(omega.interior_contains(Box{Interval(0.6, 0.7), Interval(0.3, 0.5)}));
}
