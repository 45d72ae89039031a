#include <doctest.h>

#include <cmath>
#include <random>

#include "gbound/objectives.hpp"
#include "gbound/optimizer.hpp"

using namespace gbound;

namespace {

const DomainConstants& C() { return DomainConstants::get(); }

/// The paper-style truncation window [v, v + 0.001) meets the enclosure.
bool in_window(const Interval& u, double v)
{
    return u.hi() >= v && u.lo() < v + 0.001;
}

struct Point {
    double x;
    double y;
};

/// Random points with a comfortably positive radicand.
std::vector<Point> interior_points(std::uint64_t seed, int n)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.02, C().a_value - 0.02);
    std::uniform_real_distribution<double> ut(0.02, 0.95);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        const double x = ux(rng);
        const double y = ut(rng) * ellipse_cap(x);
        if (1 - x * x - 3 * y * y > 1e-3) {
            pts.push_back({x, y});
        }
    }
    return pts;
}

/// Proves sign(d) == sign on [lo, hi] by adaptive subdivision of the
/// enclosure.
bool prove_sign(const std::function<Interval(const Interval&)>& d, double lo, double hi, int sign, int depth = 0)
{
    const Interval e = d(Interval(lo, hi));
    if (sign > 0 ? e.lo() > 0.0 : e.hi() < 0.0) {
        return true;
    }
    if (depth >= 40) {
        return false;
    }
    const double m = 0.5 * (lo + hi);
    return prove_sign(d, lo, m, sign, depth + 1) && prove_sign(d, m, hi, sign, depth + 1);
}

std::function<Interval(const Interval&)> derivative_of(const RadicalForm& r)
{
    return [r](const Interval& t) { return r.derivative(t); };
}

} // namespace

TEST_CASE("metadata")
{
    CHECK(kAllObjectives.size() == 9);
    CHECK(info(ObjectiveId::F1).dimension == 1);
    CHECK(info(ObjectiveId::F4).claim_id == "THM2_D43");
    CHECK(info(ObjectiveId::F6).reference_value == 1.280);
    CHECK(parse_objective("f4") == ObjectiveId::F4);
    CHECK(parse_objective("F9") == ObjectiveId::F9);
    CHECK(parse_objective("3") == ObjectiveId::F3);
    CHECK_FALSE(parse_objective("f0"));
    CHECK_FALSE(parse_objective("g1"));
    CHECK(to_string(ObjectiveId::F7) == "f7");
}

TEST_CASE("point evaluation examples")
{
    CHECK(eval(ObjectiveId::F1, 0.0, 0.9) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(in_window(eval(ObjectiveId::F1, C().a, Interval(0.0)), 2.427));

    const double xc = std::sqrt(11.0 / 30.0);
    const double yc = std::sqrt(281.0 / 2.0) / 30.0;
    CHECK(std::fabs(eval(ObjectiveId::F6, xc, yc) - 1079.0 / 900.0) < 1e-12);
    CHECK(std::floor(xc * 1000) == 605);
    CHECK(std::floor(yc * 1000) == 395);

    CHECK(in_window(eval(ObjectiveId::F7, C().a, C().d), 0.662));
    CHECK(in_window(eval(ObjectiveId::F8, C().a, Interval(0.267)), 0.551));

    CHECK_THROWS_AS((void)eval(ObjectiveId::F2, 0.7, 0.5), DomainError);
    CHECK_NOTHROW((void)eval(ObjectiveId::F2, C().a_value, C().d_value));
}

TEST_CASE("objectives are finite on the whole region, rim included")
{
    for (ObjectiveId id : kAllObjectives) {
        for (int i = 0; i <= 200; ++i) {
            const double x = C().a_value * i / 200;
            const double cap = ellipse_cap(x);
            for (int j = 0; j <= 40; ++j) {
                REQUIRE(std::isfinite(eval(id, x, cap * j / 40)));
            }
        }
    }
}

TEST_CASE("gradient: special values")
{
    for (int i = 1; i < 20; ++i) {
        const double x = C().a_value * i / 20;
        CHECK(grad(ObjectiveId::F6, x, 0.0).dy == 0.0);
    }
    CHECK(grad(ObjectiveId::F1, 0.0, 0.0).dx == 0.0);
    CHECK(grad(ObjectiveId::F1, 0.3, 0.2).dy == 0.0);
    CHECK_THROWS_AS((void)grad(ObjectiveId::F2, C().a_value, C().d_value), DomainError);
}

TEST_CASE("gradient agrees with central differences")
{
    const double h = 1e-6;
    for (ObjectiveId id : kAllObjectives) {
        for (const Point& p : interior_points(100 + static_cast<int>(id), 100)) {
            const Gradient2 g = grad(id, p.x, p.y);
            const double fx = (eval(id, p.x + h, p.y) - eval(id, p.x - h, p.y)) / (2 * h);
            REQUIRE(std::fabs(g.dx - fx) <= 1e-5 * std::max(1.0, std::fabs(g.dx)));
            if (id != ObjectiveId::F1) {
                const double fy = (eval(id, p.x, p.y + h) - eval(id, p.x, p.y - h)) / (2 * h);
                REQUIRE(std::fabs(g.dy - fy) <= 1e-5 * std::max(1.0, std::fabs(g.dy)));
            }
        }
    }
    // the tighter F2 figure
    for (const Point& p : interior_points(7, 100)) {
        const Gradient2 g = grad(ObjectiveId::F2, p.x, p.y);
        const double fx = (eval(ObjectiveId::F2, p.x + h, p.y) - eval(ObjectiveId::F2, p.x - h, p.y)) / (2 * h);
        const double fy = (eval(ObjectiveId::F2, p.x, p.y + h) - eval(ObjectiveId::F2, p.x, p.y - h)) / (2 * h);
        REQUIRE(std::fabs(g.dx - fx) <= 1e-6 * std::max(1.0, std::fabs(g.dx)));
        REQUIRE(std::fabs(g.dy - fy) <= 1e-6 * std::max(1.0, std::fabs(g.dy)));
    }
}

TEST_CASE("Hessian enclosure contains differenced gradients")
{
    const double h = 1e-6;
    for (ObjectiveId id : kAllObjectives) {
        if (info(id).dimension != 2) {
            continue;
        }
        for (const Point& p : interior_points(300 + static_cast<int>(id), 40)) {
            const Gradient2 gxp = grad(id, p.x + h, p.y);
            const Gradient2 gxm = grad(id, p.x - h, p.y);
            const Gradient2 gyp = grad(id, p.x, p.y + h);
            const Gradient2 gym = grad(id, p.x, p.y - h);
            const HessianEnclosure H = hessian(id, Interval(p.x - h, p.x + h), Interval(p.y - h, p.y + h));
            const double slack = 1e-5;
            REQUIRE(H.xx.lo() - slack <= (gxp.dx - gxm.dx) / (2 * h));
            REQUIRE((gxp.dx - gxm.dx) / (2 * h) <= H.xx.hi() + slack);
            REQUIRE(H.xy.lo() - slack <= (gyp.dx - gym.dx) / (2 * h));
            REQUIRE((gyp.dx - gym.dx) / (2 * h) <= H.xy.hi() + slack);
            REQUIRE(H.yy.lo() - slack <= (gyp.dy - gym.dy) / (2 * h));
            REQUIRE((gyp.dy - gym.dy) / (2 * h) <= H.yy.hi() + slack);
        }
    }
}

TEST_CASE("interval evaluation encloses point evaluation")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (ObjectiveId id : kAllObjectives) {
        for (const Point& p : interior_points(500 + static_cast<int>(id), 200)) {
            const double w = 1e-3 * u(rng);
            const Interval X(p.x - w, p.x + w);
            const Interval Y(std::max(p.y - w, 0.0), p.y + w);
            const Interval box = eval(id, X, Y);
            const Interval pt = eval(id, Interval(p.x), Interval(p.y));
            REQUIRE(box.contains(pt));
            REQUIRE(pt.width() < 1e-13);
            REQUIRE(pt.lo() - 1e-14 <= eval(id, p.x, p.y));
            REQUIRE(eval(id, p.x, p.y) <= pt.hi() + 1e-14);

            const GradientEnclosure G = grad(id, X, Y);
            const Gradient2 g = grad(id, p.x, p.y);
            REQUIRE(G.dx.lo() - 1e-12 <= g.dx);
            REQUIRE(g.dx <= G.dx.hi() + 1e-12);
            REQUIRE(G.dy.lo() - 1e-12 <= g.dy);
            REQUIRE(g.dy <= G.dy.hi() + 1e-12);
        }
    }
}

TEST_CASE("restriction closed forms: quoted values")
{
    CHECK(in_window(eval_boundary(RestrictionId::G2, C().a), 3.360));
    CHECK(in_window(eval_boundary(RestrictionId::G10, C().b), 1.213));
    CHECK(in_window(eval_boundary(RestrictionId::G4, C().a), 4.526));
    // g8(a) = 1.4019907928...: the commonly quoted 1.402 is a rounded figure,
    // so the truncation window [1.402, 1.403) does not contain it
    CHECK(eval_boundary(RestrictionId::G8, C().a_value) == doctest::Approx(1.4019907928).epsilon(1e-10));
    CHECK(in_window(eval_boundary(RestrictionId::G8, C().a), 1.401));
    CHECK(eval_boundary(RestrictionId::G2, C().a_value) == doctest::Approx(3.3603).epsilon(1e-4));
    CHECK_THROWS_AS((void)eval_boundary(RestrictionId::G1, 0.5), std::out_of_range);
    CHECK_THROWS_AS((void)eval_boundary(RestrictionId::G2, 0.2), std::out_of_range);
    CHECK(info(RestrictionId::G9).parent == ObjectiveId::F6);
    CHECK(info(RestrictionId::G9).edge == EdgeId::CurveLow);
    CHECK(to_string(RestrictionId::G10) == "g10");
}

TEST_CASE("restriction closed forms equal the parent on its edge")
{
    const OmegaRegion omega;
    for (RestrictionId g : kAllRestrictions) {
        const RestrictionInfo& ri = info(g);
        const RadicalForm closed = closed_form(g);
        const RadicalForm derived = restrict_to_edge(ri.parent, ri.edge);
        const bool low = ri.edge == EdgeId::CurveLow;
        const double lo = low ? 0.0 : C().b_value;
        const double hi = low ? C().b_value : C().a_value;
        for (int i = 0; i < 50; ++i) {
            const double x = lo + (hi - lo) * i / 50;
            // mechanical substitution, both well conditioned
            REQUIRE(std::fabs(closed.value(x) - derived.value(x)) <= 1e-12);
            const double y = low ? 0.5 * (1 + x * x) : std::sqrt((1 - x * x) / 3);
            const double rad = 1 - x * x - 3 * y * y;
            if (rad >= 1e-6) {
                // direct evaluation of the parent, away from the rim
                REQUIRE(std::fabs(eval_boundary(g, x) - eval(ri.parent, x, y)) <= 1e-12);
            } else {
                // on the rim the parent's radical is the root of a rounding
                // error; compare against its enclosure instead
                const Interval X(x);
                const Interval Y = low ? scale(Interval(1.0) + sqr(X), 0.5)
                                       : sqrt_domain((Interval(1.0) - sqr(X)) * Interval::ratio(1, 3));
                const Interval parent = eval(ri.parent, X, Y);
                REQUIRE(parent.lo() - 1e-14 <= eval_boundary(g, x));
                REQUIRE(eval_boundary(g, x) <= parent.hi() + 1e-14);
            }
        }
        // polynomial identity: q agrees, and m^2 s agrees
        const Poly1 qd = closed.q - derived.q;
        for (const Interval& c : qd.coeffs()) {
            REQUIRE(c.contains(0.0));
            REQUIRE(c.width() < 1e-12);
        }
        const Poly1 md = closed.m * closed.m * closed.s - derived.m * derived.m * derived.s;
        for (const Interval& c : md.coeffs()) {
            REQUIRE(c.contains(0.0));
            REQUIRE(c.width() < 1e-12);
        }
    }
}

TEST_CASE("edge substitution matches the parent on straight edges")
{
    for (ObjectiveId id : kAllObjectives) {
        if (info(id).dimension != 2) {
            continue;
        }
        const RadicalForm x0 = restrict_to_edge(id, EdgeId::XZero);
        const RadicalForm xa = restrict_to_edge(id, EdgeId::XA);
        const RadicalForm y0 = restrict_to_edge(id, EdgeId::YZero);
        for (int i = 0; i <= 50; ++i) {
            const double y = 0.5 * i / 50 * 0.999;
            REQUIRE(std::fabs(x0.value(y) - eval(id, 0.0, y)) <= 1e-12);
            const double ya = C().d_value * i / 50 * 0.999;
            REQUIRE(std::fabs(xa.value(ya) - eval(id, C().a_value, ya)) <= 1e-12);
            const double x = C().a_value * i / 50;
            REQUIRE(std::fabs(y0.value(x) - eval(id, x, 0.0)) <= 1e-12);
        }
    }
    const RadicalForm f1 = one_dimensional_form();
    for (int i = 0; i <= 50; ++i) {
        const double x = C().a_value * i / 50;
        REQUIRE(std::fabs(f1.value(x) - eval(ObjectiveId::F1, x, 0.0)) <= 1e-12);
    }
}

TEST_CASE("monotonicity by interval sign tests")
{
    const double eps = 1e-6;
    const double a = C().a_value;
    const double b = C().b_value;

    // f1 increasing on (0, a]
    CHECK(prove_sign(derivative_of(one_dimensional_form()), eps, a, +1));
    for (int i = 1; i <= 1000; ++i) {
        REQUIRE(one_dimensional_form().derivative(a * i / 1000) > 0.0);
    }
    // f4(x, 0) decreasing
    CHECK(prove_sign(derivative_of(restrict_to_edge(ObjectiveId::F4, EdgeId::YZero)), eps, a, -1));
    // g2, g4, g8 increasing on (b, a)
    CHECK(prove_sign(derivative_of(closed_form(RestrictionId::G2)), b, a, +1));
    CHECK(prove_sign(derivative_of(closed_form(RestrictionId::G4)), b, a, +1));
    CHECK(prove_sign(derivative_of(closed_form(RestrictionId::G8)), b, a, +1));
    // f3(0, y), f5(0, y) increasing and f2(0, y) decreasing on (0, 1/2)
    CHECK(prove_sign(derivative_of(restrict_to_edge(ObjectiveId::F3, EdgeId::XZero)), eps, 0.5, +1));
    CHECK(prove_sign(derivative_of(restrict_to_edge(ObjectiveId::F5, EdgeId::XZero)), eps, 0.5, +1));
    CHECK(prove_sign(derivative_of(restrict_to_edge(ObjectiveId::F2, EdgeId::XZero)), eps, 0.5, -1));
}

TEST_CASE("f2(x, 0) dips before it increases")
{
    // f2(x,0) = 4x^3 + (2/sqrt5) sqrt(1 - x^2) has slope -(2/sqrt5) x + O(x^2)
    // at 0, so it is not increasing on all of (0, a). It decreases up to a
    // single turning point near 0.0748 and increases after it, so the maximum
    // over [0, a] is still the endpoint value f2(a, 0).
    const RadicalForm r = restrict_to_edge(ObjectiveId::F2, EdgeId::YZero);
    const double a = C().a_value;
    CHECK_FALSE(prove_sign(derivative_of(r), 1e-6, a, +1));
    CHECK(prove_sign(derivative_of(r), 1e-6, 0.074, -1));
    CHECK(prove_sign(derivative_of(r), 0.076, a, +1));
    const UniquenessResult turn = verify_uniqueness_1d(r.derivative_function(), 0.074, 0.076);
    CHECK(turn.unique());
    CHECK(r.value(a) > r.value(0.0));
    CHECK(in_window(r.value(C().a), 2.236));
}

TEST_CASE("critical reductions: F6")
{
    const double x = std::sqrt(11.0 / 30.0);
    const double y = h2(x);
    CHECK(std::fabs(y - std::sqrt(281.0 / 2.0) / 30.0) < 1e-15);
    const CriticalReduction r = critical_reduction(ObjectiveId::F6, x, y);
    CHECK(std::fabs(r.combined) < 1e-10);
    REQUIRE(r.auxiliary);
    CHECK(std::fabs(*r.auxiliary) < 1e-12);
    CHECK(std::fabs(f6_reduced_cubic(x)) < 1e-15);
    const Gradient2 g = grad(ObjectiveId::F6, x, y);
    CHECK(std::fabs(g.dx) < 1e-10);
    CHECK(std::fabs(g.dy) < 1e-10);
    // along y = h2(x) the y-partial vanishes
    for (int i = 1; i < 20; ++i) {
        const double t = 0.3 + 0.4 * i / 20;
        CHECK(std::fabs(grad(ObjectiveId::F6, t, h2(t)).dy) < 1e-12);
    }
}

TEST_CASE("critical reductions: F2 curve leaves the region")
{
    CHECK_THROWS_AS((void)f2_reduction_curve(1.0 / 6.0), DomainError);
    CHECK_THROWS_AS((void)f2_reduction_curve(0.2), DomainError);
    const Function1D eq{[](double y) { return f2_reduced_equation(y); }, {}, {}, {}, {}};
    const Interval root = find_root_1d(eq, 0.0, 1.0 / 6.0 - 1e-9, 1e-14);
    CHECK(std::floor(root.mid() * 1000) == 153);
    const double x = f2_reduction_curve(root.mid());
    CHECK(std::floor(x * 1000) == 961);
    CHECK(x > C().a_value);
}

TEST_CASE("combined equations: closed forms equal 3y f_x - x f_y")
{
    for (const Point& p : interior_points(99, 200)) {
        if (p.y < 1.0 / 6.0) {
            const double c2 = critical_reduction(ObjectiveId::F2, p.x, p.y).combined;
            REQUIRE(std::fabs(c2 - f2_combined_closed_form(p.x, p.y)) <= 1e-10 * std::max(1.0, std::fabs(c2)));
        } else {
            REQUIRE_THROWS_AS((void)critical_reduction(ObjectiveId::F2, p.x, p.y), DomainError);
            const Gradient2 g2 = grad(ObjectiveId::F2, p.x, p.y);
            const double c2 = 3 * p.y * g2.dx - p.x * g2.dy;
            REQUIRE(std::fabs(c2 - f2_combined_closed_form(p.x, p.y)) <= 1e-10 * std::max(1.0, std::fabs(c2)));
        }
        const double c3 = critical_reduction(ObjectiveId::F3, p.x, p.y).combined;
        REQUIRE(std::fabs(c3 - f3_combined_closed_form(p.x, p.y)) <= 1e-10 * std::max(1.0, std::fabs(c3)));
        const double c4 = critical_reduction(ObjectiveId::F4, p.x, p.y).combined;
        REQUIRE(std::fabs(c4 - f4_combined_closed_form(p.x, p.y)) <= 1e-10 * std::max(1.0, std::fabs(c4)));
        const Gradient2 g = grad(ObjectiveId::F9, p.x, p.y);
        REQUIRE(critical_reduction(ObjectiveId::F9, p.x, p.y).combined ==
                doctest::Approx(3 * p.y * g.dx - p.x * g.dy).epsilon(1e-12));
    }
    // h1 parameterises the zero set of the F4 combined equation
    for (int i = 1; i < 20; ++i) {
        const double y = 0.05 + 0.3 * i / 20;
        CHECK(std::fabs(f4_combined_closed_form(h1(y), y)) < 1e-12);
    }
}

TEST_CASE("critical reductions: F4 near (0.634, 0.358)")
{
    // the combined equation vanishes along x = h1(y); the F4 critical point
    // lies on that curve with y in [0.358, 0.359)
    const double y = 0.3589;
    const CriticalReduction r = critical_reduction(ObjectiveId::F4, h1(y), y);
    CHECK(std::fabs(r.combined) < 1e-12);
    REQUIRE(r.auxiliary);
    CHECK(std::fabs(*r.auxiliary) < 1e-12);
    CHECK(std::floor(h1(y) * 1000) == 634);
}
