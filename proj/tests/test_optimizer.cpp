#include <doctest.h>

#include <cmath>

#include "gbound/kernels.hpp"
#include "gbound/optimizer.hpp"

using namespace gbound;

namespace {

const DomainConstants& C() { return DomainConstants::get(); }

bool in_window(const Interval& u, double v)
{
    return u.hi() >= v && u.lo() < v + 0.001;
}

Function1D poly_fn(Poly1 p)
{
    const Poly1 d = p.derivative();
    const Poly1 dd = d.derivative();
    return Function1D{[p](double t) { return p(t); },
                      [p](const Interval& t) { return p(t); },
                      [d](double t) { return d(t); },
                      [d](const Interval& t) { return d(t); },
                      [dd](const Interval& t) { return dd(t); }};
}

} // namespace

TEST_CASE("config validation")
{
    BnBConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.tol_value = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = BnBConfig{};
    cfg.max_boxes = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("maximize_1d: f1 on [0, a]")
{
    const Extremum e = maximize_1d(one_dimensional_form().as_function(), Interval(0.0), C().a);
    CHECK(in_window(e.value, 2.427));
    CHECK(e.value.width() <= 1e-6);
    CHECK(e.argmax_x.contains(C().a));
    CHECK(e.kind == LocationKind::UpperEnd);
}

TEST_CASE("maximize_1d: f2(a, .) on [0, d]")
{
    const EdgeFunction ef = edge_function(ObjectiveId::F2, EdgeId::XA);
    const Extremum e = maximize_1d(ef.f, ef.lo, ef.hi);
    CHECK(in_window(e.value, 3.461));
    CHECK(e.argmax_refined);
    CHECK(e.argmax_x.width() < 1e-9);
    CHECK(in_window(e.argmax_x, 0.365));
    CHECK(e.kind == LocationKind::Interior);
}

TEST_CASE("maximize_1d: g5 on [0, b]")
{
    const Extremum e = maximize_1d(closed_form(RestrictionId::G5).as_function(), Interval(0.0), C().b);
    CHECK(in_window(e.value, 0.709));
    CHECK(in_window(e.argmax_x, 0.252));
}

TEST_CASE("maximize_1d: a polynomial with two humps")
{
    // -(t^2 - 1)^2 + 0.1 t: argmax is the largest root of t^3 - t - 0.025,
    // t* = 1.0122731310..., value 0.1006173766...
    const Poly1 p{Interval(-1.0), Interval(0.1), Interval(2.0), Interval(0.0), Interval(-1.0)};
    const Extremum e = maximize_1d(poly_fn(p), -2.0, 2.0);
    CHECK(e.argmax_x.lo() <= 1.01227313104);
    CHECK(e.argmax_x.hi() >= 1.01227313102);
    CHECK(e.value.width() <= 1e-6);
    CHECK(e.value.lo() <= 0.10061737664);
    CHECK(e.value.hi() >= 0.10061737663);
}

TEST_CASE("find_root_1d")
{
    const Poly1 cubic{Interval(0.0), Interval(-1.0), Interval(0.0), Interval(1.0)};
    const Interval r = find_root_1d(poly_fn(cubic), 0.5, 2.0, 1e-12);
    CHECK(r.contains(1.0));
    CHECK(r.width() <= 1e-12);

    const EdgeFunction f3 = edge_function(ObjectiveId::F3, EdgeId::XA);
    const Function1D d3 = restrict_to_edge(ObjectiveId::F3, EdgeId::XA).derivative_function();
    const Interval y4 = find_root_1d(d3, 1e-9, C().d.lo(), 1e-12);
    CHECK(in_window(y4, 0.338));
    (void)f3;

    const Function1D d5 = restrict_to_edge(ObjectiveId::F5, EdgeId::XA).derivative_function();
    CHECK(in_window(find_root_1d(d5, 1e-9, C().d.lo()), 0.300));

    const Poly1 positive{Interval(1.0), Interval(0.0), Interval(1.0)};
    CHECK_THROWS_AS((void)find_root_1d(poly_fn(positive), -1.0, 1.0), NoBracketError);
}

TEST_CASE("verify_uniqueness_1d")
{
    const Function1D d2 = restrict_to_edge(ObjectiveId::F2, EdgeId::XA).derivative_function();
    const UniquenessResult u2 = verify_uniqueness_1d(d2, 1e-9, C().d.lo());
    CHECK(u2.unique());
    REQUIRE(u2.roots.size() == 1);
    CHECK(in_window(u2.roots[0], 0.365));

    const Function1D g6 = closed_form(RestrictionId::G6).derivative_function();
    const UniquenessResult u6 = verify_uniqueness_1d(g6, C().b.hi(), C().a.lo());
    CHECK(u6.unique());
    REQUIRE(u6.roots.size() == 1);
    CHECK(in_window(u6.roots[0], 0.715));

    // y (y - 0.1)(y - 0.2) = y^3 - 0.3 y^2 + 0.02 y
    const Poly1 three{Interval(0.0), Interval(0.02), Interval(-0.3), Interval(1.0)};
    const UniquenessResult u3 = verify_uniqueness_1d(poly_fn(three), 0.0, 0.3);
    CHECK_FALSE(u3.unique());
    CHECK(u3.status == RootCount::Multiple);

    const Poly1 none{Interval(1.0), Interval(0.0), Interval(1.0)};
    CHECK(verify_uniqueness_1d(poly_fn(none), -1.0, 1.0).status == RootCount::None);
}

TEST_CASE("maximize_2d: F2 on the edge x = a")
{
    const Extremum e = maximize_2d(ObjectiveId::F2, OmegaRegion());
    CHECK(in_window(e.value, 3.461));
    CHECK(e.value.width() <= 1e-6);
    CHECK(e.kind == LocationKind::XA);
    CHECK(e.argmax_refined);
    CHECK(in_window(e.argmax_y, 0.365));
    CHECK(e.argmax_x.contains(C().a));
}

TEST_CASE("maximize_2d: F4 interior")
{
    const Extremum e = maximize_2d(ObjectiveId::F4, OmegaRegion());
    CHECK(in_window(e.value, 1.174));
    CHECK(e.kind == LocationKind::Interior);
    CHECK(e.argmax_refined);
    CHECK(in_window(e.argmax_x, 0.634));
    CHECK(in_window(e.argmax_y, 0.358));
    // high-precision Newton solution of grad f4 = 0
    CHECK(e.argmax_x.lo() <= 0.6344389991);
    CHECK(e.argmax_x.hi() >= 0.6344389990);
    CHECK(e.argmax_y.lo() <= 0.3589897893);
    CHECK(e.argmax_y.hi() >= 0.3589897892);
    CHECK(e.value.lo() <= 1.1740959470);
    CHECK(e.value.hi() >= 1.1740959469);
}

TEST_CASE("maximize_2d: F5 interior")
{
    const Extremum e = maximize_2d(ObjectiveId::F5, OmegaRegion());
    CHECK(in_window(e.value, 1.822));
    CHECK(e.kind == LocationKind::Interior);
    CHECK(e.argmax_refined);
    CHECK(in_window(e.argmax_x, 0.717));
    CHECK(in_window(e.argmax_y, 0.312));
    CHECK(e.argmax_x.width() < 1e-8);
}

TEST_CASE("maximize_2d: maxima on x = a")
{
    struct Case {
        ObjectiveId id;
        double value;
        double y;
    };
    // values from high-precision 1-D solves of d/dy f(a, y) = 0
    const Case cases[] = {{ObjectiveId::F3, 4.9931655428, 0.3388069571},
                          {ObjectiveId::F8, 0.5514117164, 0.2676180547},
                          {ObjectiveId::F9, 0.6133219071, 0.2020102555}};
    for (const Case& k : cases) {
        CAPTURE(to_string(k.id));
        const Extremum e = maximize_2d(k.id, OmegaRegion());
        CHECK(e.kind == LocationKind::XA);
        CHECK(e.argmax_refined);
        CHECK(std::fabs(e.value.mid() - k.value) < 1e-9);
        CHECK(std::fabs(e.argmax_y.mid() - k.y) < 1e-8);
        CHECK(e.value.width() <= 1e-6);
    }
    const Extremum f7 = maximize_2d(ObjectiveId::F7, OmegaRegion());
    CHECK(f7.value.contains(0.5 * (C().a * C().a + 2.0 * C().d).mid()));
    CHECK(f7.argmax_y.contains(C().d_value));
}

TEST_CASE("maximize_2d: F6 on the lower curve")
{
    const Extremum e = maximize_2d(ObjectiveId::F6, OmegaRegion());
    CHECK(in_window(e.value, 1.280));
    CHECK(e.kind == LocationKind::CurveLow);
    CHECK(in_window(e.argmax_x, 0.281));
}

TEST_CASE("critical points")
{
    const OmegaRegion omega;
    const CriticalPointSet f3 = interior_critical_points(ObjectiveId::F3, omega);
    CHECK(f3.verified.empty());
    CHECK(f3.unresolved.empty());
    CHECK_FALSE(f3.exhausted);

    const CriticalPointSet f6 = interior_critical_points(ObjectiveId::F6, omega);
    REQUIRE(f6.verified.size() == 1);
    CHECK(f6.verified[0].x.contains(std::sqrt(11.0 / 30.0)));
    CHECK(f6.verified[0].y.contains(std::sqrt(281.0 / 2.0) / 30.0));
    CHECK(f6.unresolved.empty());

    const CriticalPointSet f2 = interior_critical_points(ObjectiveId::F2, omega);
    CHECK(f2.verified.empty());
    CHECK(f2.unresolved.empty());
}
