#ifndef GBOUND_INTERVAL_HPP
#define GBOUND_INTERVAL_HPP

// Closed real intervals with guaranteed enclosures.
//
// Rounding is directed, not nudged: every endpoint is computed in the current
// (round-to-nearest) mode and the exact rounding error is recovered with an
// error-free transformation (TwoSum for addition, fma residuals for products,
// quotients and square roots). The endpoint is moved one ulp outward only when
// that error points inward, so exactly representable results stay exact
// ([1,2] + [3,4] is [4,6]) and inexact ones are the correctly directed roundings.
//
// Endpoints may be infinite. Endpoint products follow the interval convention
// 0 * inf = 0.

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace gbound {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (negative radicand, point outside the region, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Negative radicands down to this value are treated as rounding artifacts
/// and clamped to zero.
inline constexpr double kClampTolerance = 1e-12;

namespace rounding {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this magnitude fma residuals may be inexact (subnormal range), so the
// result is widened unconditionally.
inline constexpr double kTiny = 0x1p-960;

inline double next_down(double x) { return std::nextafter(x, -kInf); }
inline double next_up(double x) { return std::nextafter(x, kInf); }

inline double add_down(double a, double b)
{
    const double s = a + b;
    if (!std::isfinite(s)) {
        return s;
    }
    const double bp = s - a;
    const double ap = s - bp;
    const double e = (a - ap) + (b - bp);
    return e < 0.0 ? next_down(s) : s;
}

inline double add_up(double a, double b)
{
    const double s = a + b;
    if (!std::isfinite(s)) {
        return s;
    }
    const double bp = s - a;
    const double ap = s - bp;
    const double e = (a - ap) + (b - bp);
    return e > 0.0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b)
{
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    const double p = a * b;
    if (!std::isfinite(p)) {
        return p;
    }
    if (std::fabs(p) < kTiny) {
        return next_down(p);
    }
    return std::fma(a, b, -p) < 0.0 ? next_down(p) : p;
}

inline double mul_up(double a, double b)
{
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    const double p = a * b;
    if (!std::isfinite(p)) {
        return p;
    }
    if (std::fabs(p) < kTiny) {
        return next_up(p);
    }
    return std::fma(a, b, -p) > 0.0 ? next_up(p) : p;
}

// Quotients by a strictly positive divisor only.
inline double div_down(double a, double b)
{
    if (std::isinf(b)) {
        return a < 0.0 ? next_down(0.0) : 0.0;
    }
    const double q = a / b;
    if (!std::isfinite(q)) {
        return q;
    }
    if (std::fabs(q) < kTiny) {
        return next_down(q);
    }
    // true quotient = q + r / b with r = a - q * b computed exactly
    return std::fma(-q, b, a) < 0.0 ? next_down(q) : q;
}

inline double div_up(double a, double b)
{
    if (std::isinf(b)) {
        return a > 0.0 ? next_up(0.0) : 0.0;
    }
    const double q = a / b;
    if (!std::isfinite(q)) {
        return q;
    }
    if (std::fabs(q) < kTiny) {
        return next_up(q);
    }
    return std::fma(-q, b, a) > 0.0 ? next_up(q) : q;
}

inline double sqrt_down(double x)
{
    if (x <= 0.0) {
        return 0.0;
    }
    const double r = std::sqrt(x);
    if (std::isinf(r)) {
        return r;
    }
    if (x < kTiny) {
        return std::max(0.0, next_down(r));
    }
    return std::fma(r, r, -x) > 0.0 ? next_down(r) : r;
}

inline double sqrt_up(double x)
{
    if (x <= 0.0) {
        return 0.0;
    }
    const double r = std::sqrt(x);
    if (std::isinf(r)) {
        return r;
    }
    if (x < kTiny) {
        return next_up(r);
    }
    return std::fma(r, r, -x) < 0.0 ? next_up(r) : r;
}

} // namespace rounding

using rounding::kInf;

class Interval {
public:
    constexpr Interval() = default;

    // NOLINTNEXTLINE(google-explicit-constructor)
    constexpr Interval(double point) : lo_(point), hi_(point) {}

    Interval(double lo, double hi) : lo_(lo), hi_(hi)
    {
        if (!(lo <= hi)) {
            throw std::invalid_argument("interval requires lo <= hi and non-NaN endpoints");
        }
    }

    /// Exact enclosure of the rational num/den (den > 0).
    static Interval ratio(double num, double den)
    {
        if (!(den > 0.0)) {
            throw std::invalid_argument("ratio requires a positive denominator");
        }
        return {rounding::div_down(num, den), rounding::div_up(num, den)};
    }

    static Interval entire() { return {-rounding::kInf, rounding::kInf}; }

    [[nodiscard]] constexpr double lo() const { return lo_; }
    [[nodiscard]] constexpr double hi() const { return hi_; }

    [[nodiscard]] double mid() const
    {
        if (std::isinf(lo_) || std::isinf(hi_)) {
            if (std::isinf(lo_) && std::isinf(hi_)) {
                return 0.0;
            }
            return std::isinf(lo_) ? hi_ : lo_;
        }
        const double m = 0.5 * lo_ + 0.5 * hi_;
        return std::clamp(m, lo_, hi_);
    }

    /// Upper bound on hi - lo.
    [[nodiscard]] double width() const { return rounding::sub_up(hi_, lo_); }
    [[nodiscard]] double radius() const { return 0.5 * width(); }

    [[nodiscard]] bool contains(double x) const { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains(const Interval& other) const
    {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }
    /// other lies in the open interior of *this.
    [[nodiscard]] bool contains_interior(const Interval& other) const
    {
        return lo_ < other.lo_ && other.hi_ < hi_;
    }
    [[nodiscard]] bool is_point() const { return lo_ == hi_; }
    [[nodiscard]] bool is_bounded() const { return std::isfinite(lo_) && std::isfinite(hi_); }
    [[nodiscard]] bool positive() const { return lo_ > 0.0; }
    [[nodiscard]] bool negative() const { return hi_ < 0.0; }
    [[nodiscard]] bool excludes_zero() const { return lo_ > 0.0 || hi_ < 0.0; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

inline Interval operator-(const Interval& u) { return {-u.hi(), -u.lo()}; }

inline Interval operator+(const Interval& u, const Interval& v)
{
    return {rounding::add_down(u.lo(), v.lo()), rounding::add_up(u.hi(), v.hi())};
}

inline Interval operator-(const Interval& u, const Interval& v)
{
    return {rounding::sub_down(u.lo(), v.hi()), rounding::sub_up(u.hi(), v.lo())};
}

inline Interval operator*(const Interval& u, const Interval& v)
{
    using rounding::mul_down;
    using rounding::mul_up;
    if (u.lo() >= 0.0 && v.lo() >= 0.0) {
        return {mul_down(u.lo(), v.lo()), mul_up(u.hi(), v.hi())};
    }
    const double l = std::min({mul_down(u.lo(), v.lo()), mul_down(u.lo(), v.hi()),
                               mul_down(u.hi(), v.lo()), mul_down(u.hi(), v.hi())});
    const double h = std::max({mul_up(u.lo(), v.lo()), mul_up(u.lo(), v.hi()),
                               mul_up(u.hi(), v.lo()), mul_up(u.hi(), v.hi())});
    return {l, h};
}

inline Interval& operator+=(Interval& u, const Interval& v) { return u = u + v; }
inline Interval& operator-=(Interval& u, const Interval& v) { return u = u - v; }
inline Interval& operator*=(Interval& u, const Interval& v) { return u = u * v; }

inline Interval scale(const Interval& u, double c) { return u * Interval(c); }

/// u^n for n >= 1. Even powers are tight: pow([-1,1], 2) = [0,1].
Interval pow(const Interval& u, int n);

inline Interval sqr(const Interval& u) { return pow(u, 2); }

/// Square root with the rounding-artifact clamp: lower endpoints in
/// [-kClampTolerance, 0) are raised to 0. Throws DomainError when the
/// radicand is genuinely negative (hi < 0 or lo < -kClampTolerance).
Interval sqrt_clamped(const Interval& u);

/// Range of sqrt over u ∩ [0, inf). Used for boxes that over-approximate the
/// region, where part of the box may legitimately leave the radicand domain.
/// Throws DomainError when u.hi < 0.
Interval sqrt_domain(const Interval& u);

/// Range of 1/sqrt(t) over t in u ∩ (0, inf); the upper endpoint is +inf when
/// u reaches down to 0. Throws DomainError when u.hi <= 0.
Interval inv_sqrt(const Interval& u);

inline Interval hull(const Interval& u, const Interval& v)
{
    return {std::min(u.lo(), v.lo()), std::max(u.hi(), v.hi())};
}

inline std::optional<Interval> intersect(const Interval& u, const Interval& v)
{
    const double l = std::max(u.lo(), v.lo());
    const double h = std::min(u.hi(), v.hi());
    if (l > h) {
        return std::nullopt;
    }
    return Interval(l, h);
}

inline bool overlaps(const Interval& u, const Interval& v)
{
    return std::max(u.lo(), v.lo()) <= std::min(u.hi(), v.hi());
}

inline double width(const Interval& u) { return u.width(); }
inline double mid(const Interval& u) { return u.mid(); }
inline bool contains(const Interval& u, double x) { return u.contains(x); }

/// Elementwise min/max of two intervals (range of min(s,t), max(s,t)).
inline Interval min(const Interval& u, const Interval& v)
{
    return {std::min(u.lo(), v.lo()), std::min(u.hi(), v.hi())};
}
inline Interval max(const Interval& u, const Interval& v)
{
    return {std::max(u.lo(), v.lo()), std::max(u.hi(), v.hi())};
}

std::ostream& operator<<(std::ostream& os, const Interval& u);
std::string to_string(const Interval& u);

} // namespace gbound

#endif
