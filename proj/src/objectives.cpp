#include "gbound/objectives.hpp"

#include <cmath>
#include <stdexcept>

namespace gbound {

namespace {

struct Constants {
    Interval inv_sqrt3 = inv_sqrt(Interval(3.0));
    Interval inv_sqrt5 = inv_sqrt(Interval(5.0));
    Interval inv_sqrt7 = inv_sqrt(Interval(7.0));
    Interval sqrt3 = sqrt_clamped(Interval(3.0));
    Interval sqrt5 = sqrt_clamped(Interval(5.0));
    Interval sqrt7 = sqrt_clamped(Interval(7.0));
    // k / a with a = 297/400
    static Interval over_a(double k) { return Interval::ratio(400.0 * k, 297.0); }
};

const Constants& k()
{
    static const Constants c;
    return c;
}

std::array<ObjectiveForm, 9> build_forms()
{
    const Constants& c = k();
    std::array<ObjectiveForm, 9> f;
    // |a3|: (2/sqrt3) sqrt(1 - x^2) + 3x^2
    f[0] = {{{3.0, 2, 0}}, scale(c.inv_sqrt3, 2.0), 0.0};
    // |a4|
    f[1] = {{{4.0, 3, 0}, {6.0, 1, 1}}, scale(c.inv_sqrt5, 2.0), 0.0};
    // |a5|
    f[2] = {{{5.0, 4, 0}, {12.0, 2, 1}, {3.0, 0, 2}}, scale(c.inv_sqrt7, 2.0), scale(c.inv_sqrt5, 6.0)};
    // |a4| - |a3|
    f[3] = {{{Constants::over_a(3.0) - Interval(4.0), 3, 0}, {Interval(6.0) - Constants::over_a(2.0), 1, 1}},
            scale(c.inv_sqrt5, 2.0),
            0.0};
    // |a5| - |a4|
    f[4] = {{{Constants::over_a(4.0) - Interval(5.0), 4, 0},
             {Interval(12.0) - Constants::over_a(6.0), 2, 1},
             {3.0, 0, 2}},
            scale(c.inv_sqrt7, 2.0),
            (Interval(6.0) - Constants::over_a(2.0)) * c.inv_sqrt5};
    // |a2 a4 - a3^2|
    f[5] = {{{1.0, 4, 0}, {4.0, 0, 2}}, 0.0, scale(c.inv_sqrt5, 4.0)};
    // |gamma2|
    f[6] = {{{0.5, 2, 0}, {1.0, 0, 1}}, 0.0, 0.0};
    // |gamma3|
    f[7] = {{{Interval::ratio(1.0, 3.0), 3, 0}, {1.0, 1, 1}}, c.inv_sqrt5, 0.0};
    // |gamma4|
    f[8] = {{{0.25, 4, 0}, {1.0, 2, 1}, {0.5, 0, 2}}, c.inv_sqrt7, c.inv_sqrt5};
    return f;
}

const std::array<ObjectiveForm, 9>& forms()
{
    static const std::array<ObjectiveForm, 9> f = build_forms();
    return f;
}

constexpr std::array<ObjectiveInfo, 9> kInfo = {{
    {ObjectiveId::F1, "f1", "THM1_A3", "|a3|", 2.427, 3, 1},
    {ObjectiveId::F2, "f2", "THM1_A4", "|a4|", 3.461, 3, 2},
    {ObjectiveId::F3, "f3", "THM1_A5", "|a5|", 4.993, 3, 2},
    {ObjectiveId::F4, "f4", "THM2_D43", "|a4|-|a3|", 1.174, 3, 2},
    {ObjectiveId::F5, "f5", "THM2_D54", "|a5|-|a4|", 1.822, 3, 2},
    {ObjectiveId::F6, "f6", "THM3_H22", "|a2a4-a3^2|", 1.280, 3, 2},
    {ObjectiveId::F7, "f7", "GAMMA2", "|gamma2|", 0.662, 3, 2},
    {ObjectiveId::F8, "f8", "THM4_GAMMA3", "|gamma3|", 0.551, 3, 2},
    {ObjectiveId::F9, "f9", "GAMMA4", "|gamma4|", 0.613, 3, 2},
}};

std::size_t index(ObjectiveId id) { return static_cast<std::size_t>(id); }

double ipow(double x, int n)
{
    double r = 1.0;
    for (int i = 0; i < n; ++i) {
        r *= x;
    }
    return r;
}

Interval ipow(const Interval& x, int n)
{
    return n == 0 ? Interval(1.0) : pow(x, n);
}

// Value and first/second partials of P at a point.
struct PolyJet {
    double p = 0, px = 0, py = 0, pxx = 0, pxy = 0, pyy = 0;
};

PolyJet poly_jet(const ObjectiveForm& f, double x, double y)
{
    PolyJet j;
    for (const auto& m : f.poly) {
        const double c = m.coeff.mid();
        j.p += c * ipow(x, m.px) * ipow(y, m.py);
        if (m.px >= 1) {
            j.px += c * m.px * ipow(x, m.px - 1) * ipow(y, m.py);
        }
        if (m.py >= 1) {
            j.py += c * m.py * ipow(x, m.px) * ipow(y, m.py - 1);
        }
        if (m.px >= 2) {
            j.pxx += c * m.px * (m.px - 1) * ipow(x, m.px - 2) * ipow(y, m.py);
        }
        if (m.px >= 1 && m.py >= 1) {
            j.pxy += c * m.px * m.py * ipow(x, m.px - 1) * ipow(y, m.py - 1);
        }
        if (m.py >= 2) {
            j.pyy += c * m.py * (m.py - 1) * ipow(x, m.px) * ipow(y, m.py - 2);
        }
    }
    return j;
}

// Partial derivative of P of order (dx, dy) over a box.
Interval poly_partial(const ObjectiveForm& f, const Interval& x, const Interval& y, int dx, int dy)
{
    Interval r(0.0);
    for (const auto& m : f.poly) {
        if (m.px < dx || m.py < dy) {
            continue;
        }
        double factor = 1.0;
        for (int i = 0; i < dx; ++i) {
            factor *= m.px - i;
        }
        for (int i = 0; i < dy; ++i) {
            factor *= m.py - i;
        }
        r += scale(m.coeff, factor) * ipow(x, m.px - dx) * ipow(y, m.py - dy);
    }
    return r;
}

double point_radicand(double x, double y) { return 1.0 - x * x - 3.0 * y * y; }

double clamped_root(double rad)
{
    if (rad < -kClampTolerance) {
        throw DomainError("point lies outside the radicand domain");
    }
    return std::sqrt(std::max(rad, 0.0));
}

} // namespace

const ObjectiveInfo& info(ObjectiveId id) { return kInfo[index(id)]; }

std::string_view to_string(ObjectiveId id) { return info(id).name; }

std::optional<ObjectiveId> parse_objective(std::string_view text)
{
    if (!text.empty() && (text.front() == 'f' || text.front() == 'F')) {
        text.remove_prefix(1);
    }
    if (text.size() == 1 && text[0] >= '1' && text[0] <= '9') {
        return static_cast<ObjectiveId>(text[0] - '1');
    }
    return std::nullopt;
}

const ObjectiveForm& form(ObjectiveId id) { return forms()[index(id)]; }

Interval radicand(const Interval& x, const Interval& y)
{
    return Interval(1.0) - sqr(x) - scale(sqr(y), 3.0);
}

double eval(ObjectiveId id, double x, double y)
{
    if (id == ObjectiveId::F1) {
        y = 0.0;
    }
    const ObjectiveForm& f = form(id);
    const double rad = point_radicand(x, y);
    const double root = clamped_root(rad);
    double v = 0.0;
    for (const auto& m : f.poly) {
        v += m.coeff.mid() * ipow(x, m.px) * ipow(y, m.py);
    }
    if (f.has_radical()) {
        v += (f.c0.mid() + f.c1.mid() * x) * root;
    }
    return v;
}

Interval eval(ObjectiveId id, const Interval& x, const Interval& y)
{
    const Interval yy = id == ObjectiveId::F1 ? Interval(0.0) : y;
    const ObjectiveForm& f = form(id);
    const Interval rad = radicand(x, yy);
    if (rad.hi() < 0.0) {
        throw DomainError("box lies outside the radicand domain");
    }
    Interval v = poly_partial(f, x, yy, 0, 0);
    if (f.has_radical()) {
        v += (f.c0 + f.c1 * x) * sqrt_domain(rad);
    }
    return v;
}

Gradient2 grad(ObjectiveId id, double x, double y)
{
    const bool one_d = id == ObjectiveId::F1;
    if (one_d) {
        y = 0.0;
    }
    const ObjectiveForm& f = form(id);
    const double rad = point_radicand(x, y);
    if (f.has_radical() && !(rad > 0.0)) {
        throw DomainError("gradient is singular on the radicand-zero curve");
    }
    const PolyJet j = poly_jet(f, x, y);
    double dx = j.px;
    double dy = j.py;
    if (f.has_radical()) {
        const double r = std::sqrt(rad);
        const double c = f.c0.mid() + f.c1.mid() * x;
        dx += f.c1.mid() * r - c * x / r;
        dy -= 3.0 * c * y / r;
    }
    return {dx, one_d ? 0.0 : dy};
}

GradientEnclosure grad(ObjectiveId id, const Interval& x, const Interval& y)
{
    const bool one_d = id == ObjectiveId::F1;
    const Interval yy = one_d ? Interval(0.0) : y;
    const ObjectiveForm& f = form(id);
    Interval dx = poly_partial(f, x, yy, 1, 0);
    Interval dy = poly_partial(f, x, yy, 0, 1);
    if (f.has_radical()) {
        const Interval rad = radicand(x, yy);
        if (!(rad.hi() > 0.0)) {
            throw DomainError("gradient is singular on the radicand-zero curve");
        }
        const Interval r = sqrt_domain(rad);
        const Interval inv_r = inv_sqrt(rad);
        const Interval c = f.c0 + f.c1 * x;
        dx += f.c1 * r - c * x * inv_r;
        dy -= scale(c * yy * inv_r, 3.0);
    }
    return {dx, one_d ? Interval(0.0) : dy};
}

HessianEnclosure hessian(ObjectiveId id, const Interval& x, const Interval& y)
{
    const Interval yy = id == ObjectiveId::F1 ? Interval(0.0) : y;
    const ObjectiveForm& f = form(id);
    HessianEnclosure h{poly_partial(f, x, yy, 2, 0), poly_partial(f, x, yy, 1, 1), poly_partial(f, x, yy, 0, 2)};
    if (!f.has_radical()) {
        return h;
    }
    const Interval rad = radicand(x, yy);
    if (!(rad.hi() > 0.0)) {
        throw DomainError("hessian is singular on the radicand-zero curve");
    }
    const Interval inv_r = inv_sqrt(rad);
    const Interval inv_r3 = pow(inv_r, 3);
    const Interval c = f.c0 + f.c1 * x;
    const Interval rx = -(x * inv_r);
    const Interval ry = -scale(yy * inv_r, 3.0);
    const Interval rxx = -((Interval(1.0) - scale(sqr(yy), 3.0)) * inv_r3);
    const Interval rxy = -scale(x * yy * inv_r3, 3.0);
    const Interval ryy = -scale((Interval(1.0) - sqr(x)) * inv_r3, 3.0);
    h.xx += scale(f.c1 * rx, 2.0) + c * rxx;
    h.xy += f.c1 * ry + c * rxy;
    h.yy += c * ryy;
    return h;
}

// --- boundary restrictions -------------------------------------------------

namespace {

constexpr std::array<RestrictionInfo, 10> kRestrictionInfo = {{
    {RestrictionId::G1, "g1", ObjectiveId::F2, EdgeId::CurveLow},
    {RestrictionId::G2, "g2", ObjectiveId::F2, EdgeId::CurveHigh},
    {RestrictionId::G3, "g3", ObjectiveId::F3, EdgeId::CurveLow},
    {RestrictionId::G4, "g4", ObjectiveId::F3, EdgeId::CurveHigh},
    {RestrictionId::G5, "g5", ObjectiveId::F4, EdgeId::CurveLow},
    {RestrictionId::G6, "g6", ObjectiveId::F4, EdgeId::CurveHigh},
    {RestrictionId::G7, "g7", ObjectiveId::F5, EdgeId::CurveLow},
    {RestrictionId::G8, "g8", ObjectiveId::F5, EdgeId::CurveHigh},
    {RestrictionId::G9, "g9", ObjectiveId::F6, EdgeId::CurveLow},
    {RestrictionId::G10, "g10", ObjectiveId::F6, EdgeId::CurveHigh},
}};

std::array<RadicalForm, 10> build_closed_forms()
{
    const Constants& c = k();
    const Poly1 low_radicand{1.0, 0.0, -10.0, 0.0, -3.0}; // 1 - 10x^2 - 3x^4
    const Poly1 one_minus_x2{1.0, 0.0, -1.0};
    const Poly1 three_one_minus_x2{3.0, 0.0, -3.0};
    const Interval inv_a = Constants::over_a(1.0);
    std::array<RadicalForm, 10> g;

    // g1 = 3x + 7x^3 + sqrt(1 - 10x^2 - 3x^4)/sqrt5
    g[0] = {Poly1{0.0, 3.0, 0.0, 7.0}, Poly1{c.inv_sqrt5}, low_radicand};
    // g2 = 4x^3 + 2 sqrt3 x sqrt(1 - x^2)
    g[1] = {Poly1{0.0, 0.0, 0.0, 4.0}, Poly1{0.0, scale(c.sqrt3, 2.0)}, one_minus_x2};
    // g3 = (21 sqrt5 x + 5 sqrt7) sqrt(...)/35 + (3 + 30x^2 + 47x^4)/4
    g[2] = {Poly1{0.75, 0.0, 7.5, 0.0, 11.75},
            Poly1{scale(c.sqrt7, 5.0) * Interval::ratio(1.0, 35.0), scale(c.sqrt5, 21.0) * Interval::ratio(1.0, 35.0)},
            low_radicand};
    // g4 = 1 - x^2 + 5x^4 + 4x^2 sqrt(3(1 - x^2))
    g[3] = {Poly1{1.0, 0.0, -1.0, 0.0, 5.0}, Poly1{0.0, 0.0, 4.0}, three_one_minus_x2};
    // g5 = sqrt(5 - 50x^2 - 15x^4)/5 - x[(1 - 2/a)x^2 - 3 + 1/a]
    g[4] = {Poly1{0.0, Interval(3.0) - inv_a, 0.0, scale(inv_a, 2.0) - Interval(1.0)},
            Poly1{Interval::ratio(1.0, 5.0)},
            Poly1{5.0, 0.0, -50.0, 0.0, -15.0}};
    // g6 = 2(1 - 1/(3a)) x sqrt(3(1 - x^2)) + (3/a - 4) x^3
    g[5] = {Poly1{0.0, 0.0, 0.0, Constants::over_a(3.0) - Interval(4.0)},
            Poly1{0.0, scale(Interval(1.0) - Interval::ratio(400.0, 891.0), 2.0)},
            three_one_minus_x2};
    // g7 = [1/sqrt7 + (3 - 1/a) x / sqrt5] sqrt(...) + (3 + 30x^2 + 7x^4)/4 + (x^4 - 3x^2)/a
    g[6] = {Poly1{0.75, 0.0, Interval(7.5) - scale(inv_a, 3.0), 0.0, Interval(1.75) + inv_a},
            Poly1{c.inv_sqrt7, (Interval(3.0) - inv_a) * c.inv_sqrt5},
            low_radicand};
    // g8 = 2(2 - 1/a) x^2 sqrt(3(1 - x^2)) + 1 - x^2 + (4/a - 5) x^4
    g[7] = {Poly1{1.0, 0.0, -1.0, 0.0, Constants::over_a(4.0) - Interval(5.0)},
            Poly1{0.0, 0.0, scale(Interval(2.0) - inv_a, 2.0)},
            three_one_minus_x2};
    // g9 = x^4 + (1 + x^2)^2 + (2x/sqrt5) sqrt(1 - 10x^2 - 3x^4)
    g[8] = {Poly1{1.0, 0.0, 2.0, 0.0, 2.0}, Poly1{0.0, scale(c.inv_sqrt5, 2.0)}, low_radicand};
    // g10 = x^4 + 4(1 - x^2)/3
    g[9] = {Poly1{Interval::ratio(4.0, 3.0), 0.0, -Interval::ratio(4.0, 3.0), 0.0, 1.0}, Poly1{}, Poly1{}};
    return g;
}

const std::array<RadicalForm, 10>& closed_forms()
{
    static const std::array<RadicalForm, 10> g = build_closed_forms();
    return g;
}

void check_edge_range(RestrictionId id, const Interval& x)
{
    const Interval range = OmegaRegion().edge_range(info(id).edge);
    constexpr double slack = 1e-12;
    if (x.lo() < range.lo() - slack || x.hi() > range.hi() + slack) {
        throw std::out_of_range("argument outside the edge's x-range");
    }
}

} // namespace

const RestrictionInfo& info(RestrictionId id) { return kRestrictionInfo[static_cast<std::size_t>(id)]; }

std::string_view to_string(RestrictionId id) { return info(id).name; }

const RadicalForm& closed_form(RestrictionId id) { return closed_forms()[static_cast<std::size_t>(id)]; }

double eval_boundary(RestrictionId id, double x)
{
    check_edge_range(id, Interval(x));
    return closed_form(id).value(x);
}

Interval eval_boundary(RestrictionId id, const Interval& x)
{
    check_edge_range(id, x);
    return closed_form(id).value(x);
}

RadicalForm restrict_to_edge(ObjectiveId id, EdgeId edge)
{
    const ObjectiveForm& f = form(id);
    const Constants& c = k();
    const Interval a = DomainConstants::get().a;
    const Poly1 t{0.0, 1.0};
    RadicalForm r;
    switch (edge) {
    case EdgeId::XZero:
        for (const auto& m : f.poly) {
            if (m.px == 0) {
                r.q = r.q + Poly1::monomial(m.coeff, m.py);
            }
        }
        r.m = Poly1{f.c0};
        r.s = Poly1{1.0, 0.0, -3.0};
        break;
    case EdgeId::XA:
        for (const auto& m : f.poly) {
            r.q = r.q + Poly1::monomial(m.coeff * ipow(a, m.px), m.py);
        }
        r.m = Poly1{f.c0 + f.c1 * a};
        r.s = Poly1{Interval(1.0) - sqr(a), 0.0, -3.0};
        break;
    case EdgeId::YZero:
        for (const auto& m : f.poly) {
            if (m.py == 0) {
                r.q = r.q + Poly1::monomial(m.coeff, m.px);
            }
        }
        r.m = Poly1{f.c0, f.c1};
        r.s = Poly1{1.0, 0.0, -1.0};
        break;
    case EdgeId::CurveLow: {
        const Poly1 y{0.5, 0.0, 0.5};
        for (const auto& m : f.poly) {
            Poly1 term = Poly1::monomial(m.coeff, m.px);
            for (int i = 0; i < m.py; ++i) {
                term = term * y;
            }
            r.q = r.q + term;
        }
        // 1 - x^2 - 3((1 + x^2)/2)^2 = (1 - 10x^2 - 3x^4)/4
        r.m = Interval(0.5) * Poly1{f.c0, f.c1};
        r.s = Poly1{1.0, 0.0, -10.0, 0.0, -3.0};
        break;
    }
    case EdgeId::CurveHigh: {
        // y^2 = (1 - x^2)/3, y = sqrt(1 - x^2)/sqrt3
        const Poly1 y2 = Interval::ratio(1.0, 3.0) * Poly1{1.0, 0.0, -1.0};
        for (const auto& m : f.poly) {
            Poly1 term = Poly1::monomial(m.coeff, m.px);
            for (int i = 0; i < m.py / 2; ++i) {
                term = term * y2;
            }
            if (m.py % 2 == 0) {
                r.q = r.q + term;
            } else {
                r.m = r.m + c.inv_sqrt3 * term;
            }
        }
        if (!r.m.is_zero()) {
            r.s = Poly1{1.0, 0.0, -1.0};
        }
        break;
    }
    }
    if (r.m.is_zero()) {
        r.s = Poly1{};
    }
    return r;
}

RadicalForm one_dimensional_form() { return restrict_to_edge(ObjectiveId::F1, EdgeId::YZero); }

// --- critical-point reductions ---------------------------------------------

double f2_combined_closed_form(double x, double y) { return 18.0 * y * y + 36.0 * x * x * y - 6.0 * x * x; }

double f3_combined_closed_form(double x, double y)
{
    const double root = clamped_root(point_radicand(x, y));
    return 18.0 * y / std::sqrt(5.0) * root + 12.0 * x * x * x * (5.0 * y - 1.0) + 6.0 * x * y * (12.0 * y - 1.0);
}

double f4_combined_closed_form(double x, double y)
{
    const double a = DomainConstants::get().a_value;
    return (-x * x * (9.0 * y * (4.0 * a - 3.0) + 6.0 * a - 2.0) + 6.0 * (3.0 * a - 1.0) * y * y) / a;
}

double f2_reduction_curve(double y)
{
    if (!(y < 1.0 / 6.0)) {
        throw DomainError("x^2 = 3y^2/(1 - 6y) has no solution for y >= 1/6");
    }
    return std::sqrt(3.0 * y * y / (1.0 - 6.0 * y));
}

double f2_reduced_equation(double y)
{
    return 15.0 * ((1.0 - 3.0 * y * y) * (1.0 - 6.0 * y) - 3.0 * y * y) - (1.0 - 6.0 * y) * (1.0 - 6.0 * y);
}

double h1(double y)
{
    const double a = DomainConstants::get().a_value;
    const double den = 9.0 * y * (4.0 * a - 3.0) + 6.0 * a - 2.0;
    if (!(den > 0.0)) {
        throw DomainError("h1 undefined: non-positive denominator");
    }
    return y * std::sqrt(6.0) * std::sqrt(3.0 * a - 1.0) / std::sqrt(den);
}

double h2(double x)
{
    const double rad = 20.0 - 29.0 * x * x;
    if (rad < 0.0) {
        throw DomainError("h2 undefined for x^2 > 20/29");
    }
    return std::sqrt(rad) / (2.0 * std::sqrt(15.0));
}

double f6_reduced_cubic(double x) { return x * (x * x - 11.0 / 30.0); }

CriticalReduction critical_reduction(ObjectiveId id, double x, double y)
{
    if (form(id).has_radical() && !(point_radicand(x, y) > 0.0)) {
        throw DomainError("critical reduction is singular on the radicand-zero curve");
    }
    const Gradient2 g = grad(id, x, y);
    CriticalReduction r{3.0 * y * g.dx - x * g.dy, std::nullopt};
    switch (id) {
    case ObjectiveId::F2: {
        const double cx = f2_reduction_curve(y);
        r.auxiliary = x * x - cx * cx;
        break;
    }
    case ObjectiveId::F3: {
        const double root = std::sqrt(point_radicand(x, y));
        r.auxiliary = root - (3.0 * x / std::sqrt(5.0) + 1.0 / std::sqrt(7.0)) * y / (2.0 * x * x + y);
        break;
    }
    case ObjectiveId::F4:
        r.auxiliary = x - h1(y);
        break;
    case ObjectiveId::F6:
        r.auxiliary = y - h2(x);
        break;
    default:
        break;
    }
    return r;
}

} // namespace gbound
