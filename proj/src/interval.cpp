#include "gbound/interval.hpp"

#include <cstdio>
#include <ostream>

namespace gbound {

namespace {

// x^n for x >= 0, rounded down / up by repeated directed multiplication.
double pow_down(double x, int n)
{
    double r = x;
    for (int i = 1; i < n; ++i) {
        r = rounding::mul_down(r, x);
    }
    return r;
}

double pow_up(double x, int n)
{
    double r = x;
    for (int i = 1; i < n; ++i) {
        r = rounding::mul_up(r, x);
    }
    return r;
}

} // namespace

Interval pow(const Interval& u, int n)
{
    if (n < 1) {
        throw std::invalid_argument("pow requires a positive exponent");
    }
    if (n == 1) {
        return u;
    }
    if (u.lo() >= 0.0) {
        return {pow_down(u.lo(), n), pow_up(u.hi(), n)};
    }
    if (u.hi() <= 0.0) {
        if (n % 2 == 0) {
            return {pow_down(-u.hi(), n), pow_up(-u.lo(), n)};
        }
        return {-pow_up(-u.lo(), n), -pow_down(-u.hi(), n)};
    }
    // 0 strictly inside
    if (n % 2 == 0) {
        return {0.0, std::max(pow_up(-u.lo(), n), pow_up(u.hi(), n))};
    }
    return {-pow_up(-u.lo(), n), pow_up(u.hi(), n)};
}

Interval sqrt_clamped(const Interval& u)
{
    if (u.hi() < 0.0) {
        throw DomainError("sqrt of an entirely negative interval");
    }
    if (u.lo() < -kClampTolerance) {
        throw DomainError("radicand below the clamp tolerance");
    }
    return {rounding::sqrt_down(std::max(u.lo(), 0.0)), rounding::sqrt_up(u.hi())};
}

Interval sqrt_domain(const Interval& u)
{
    if (u.hi() < 0.0) {
        throw DomainError("sqrt of an entirely negative interval");
    }
    return {rounding::sqrt_down(std::max(u.lo(), 0.0)), rounding::sqrt_up(u.hi())};
}

Interval inv_sqrt(const Interval& u)
{
    if (!(u.hi() > 0.0)) {
        throw DomainError("inv_sqrt of a non-positive interval");
    }
    const double root_hi = rounding::sqrt_up(u.hi());
    const double lo = rounding::div_down(1.0, root_hi);
    if (u.lo() <= 0.0) {
        return {lo, rounding::kInf};
    }
    const double root_lo = rounding::sqrt_down(u.lo());
    if (root_lo == 0.0) {
        return {lo, rounding::kInf};
    }
    return {lo, rounding::div_up(1.0, root_lo)};
}

std::ostream& operator<<(std::ostream& os, const Interval& u)
{
    return os << to_string(u);
}

std::string to_string(const Interval& u)
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", u.lo(), u.hi());
    return buf;
}

} // namespace gbound
