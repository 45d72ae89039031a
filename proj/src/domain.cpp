#include "gbound/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace gbound {

DomainConstants::DomainConstants()
    : a(Interval::ratio(kANumerator, kADenominator))
{
    // b^2 = (2 sqrt 7 - 5) / 3
    const Interval b2 = (scale(sqrt_clamped(Interval(7.0)), 2.0) - Interval(5.0)) * Interval::ratio(1.0, 3.0);
    b = sqrt_clamped(b2);
    // d^2 = (1 - a^2) / 3
    d = sqrt_clamped((Interval(1.0) - sqr(a)) * Interval::ratio(1.0, 3.0));

    a_value = kANumerator / kADenominator;
    b_value = std::sqrt((2.0 * std::sqrt(7.0) - 5.0) / 3.0);
    d_value = std::sqrt((1.0 - a_value * a_value) / 3.0);
}

const DomainConstants& DomainConstants::get()
{
    static const DomainConstants instance;
    return instance;
}

std::string_view to_string(EdgeId edge)
{
    switch (edge) {
    case EdgeId::XZero:
        return "X_ZERO";
    case EdgeId::XA:
        return "X_A";
    case EdgeId::YZero:
        return "Y_ZERO";
    case EdgeId::CurveLow:
        return "CURVE_LOW";
    case EdgeId::CurveHigh:
        return "CURVE_HIGH";
    }
    return "?";
}

double ellipse_cap(double x)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::out_of_range("ellipse_cap: x must lie in [0, 1]");
    }
    if (x <= DomainConstants::get().b_value) {
        return 0.5 * (1.0 + x * x);
    }
    return std::sqrt((1.0 - x * x) / 3.0);
}

Interval ellipse_cap(const Interval& x)
{
    const Interval x2 = sqr(x);
    const Interval low = scale(Interval(1.0) + x2, 0.5);
    const Interval rad = (Interval(1.0) - x2) * Interval::ratio(1.0, 3.0);
    const Interval high = sqrt_domain(rad);
    return min(low, high);
}

bool OmegaRegion::contains(double x, double y) const
{
    if (x < -kSlack || x > c_->a.hi() + kSlack || y < -kSlack) {
        return false;
    }
    const double xc = std::clamp(x, 0.0, 1.0);
    return y <= ellipse_cap(xc) + kSlack;
}

std::pair<double, double> OmegaRegion::edge_point(EdgeId edge, double t) const
{
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::out_of_range("edge_point: t must lie in [0, 1]");
    }
    const double a = c_->a_value;
    const double b = c_->b_value;
    switch (edge) {
    case EdgeId::XZero:
        return {0.0, 0.5 * t};
    case EdgeId::XA:
        return {a, c_->d_value * t};
    case EdgeId::YZero:
        return {a * t, 0.0};
    case EdgeId::CurveLow: {
        const double x = b * t;
        return {x, 0.5 * (1.0 + x * x)};
    }
    case EdgeId::CurveHigh: {
        // endpoints pinned so adjacent edges meet exactly
        if (t == 0.0) {
            return {b, 0.5 * (1.0 + b * b)};
        }
        if (t == 1.0) {
            return {a, c_->d_value};
        }
        const double x = b + (a - b) * t;
        return {x, std::sqrt((1.0 - x * x) / 3.0)};
    }
    }
    throw std::invalid_argument("edge_point: unknown edge");
}

Interval OmegaRegion::edge_range(EdgeId edge) const
{
    switch (edge) {
    case EdgeId::XZero:
        return {0.0, 0.5};
    case EdgeId::XA:
        return {0.0, c_->d.hi()};
    case EdgeId::YZero:
        return {0.0, c_->a.hi()};
    case EdgeId::CurveLow:
        return {0.0, c_->b.hi()};
    case EdgeId::CurveHigh:
        return {c_->b.lo(), c_->a.hi()};
    }
    throw std::invalid_argument("edge_range: unknown edge");
}

Box OmegaRegion::bounding_box() const
{
    // the cap peaks at x = b
    return {Interval(0.0, c_->a.hi()), Interval(0.0, ellipse_cap(c_->b).hi())};
}

std::optional<Box> OmegaRegion::clip(const Box& box) const
{
    const auto x = intersect(box.x, Interval(0.0, c_->a.hi()));
    if (!x) {
        return std::nullopt;
    }
    const double y_lo = std::max(box.y.lo(), 0.0);
    if (y_lo > box.y.hi()) {
        return std::nullopt;
    }
    const Interval cap = ellipse_cap(*x);
    const double y_hi = std::min(box.y.hi(), cap.hi());
    if (y_lo > y_hi) {
        return std::nullopt;
    }
    return Box{*x, Interval(y_lo, y_hi)};
}

bool OmegaRegion::interior_contains(const Box& box) const
{
    if (!(box.x.lo() > 0.0 && box.x.hi() < c_->a.lo() && box.y.lo() > 0.0)) {
        return false;
    }
    return box.y.hi() < ellipse_cap(box.x).lo();
}

bool omega_contains(double x, double y)
{
    return OmegaRegion().contains(x, y);
}

} // namespace gbound
