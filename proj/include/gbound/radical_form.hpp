#ifndef GBOUND_RADICAL_FORM_HPP
#define GBOUND_RADICAL_FORM_HPP

#include <functional>
#include <initializer_list>
#include <vector>

#include "gbound/interval.hpp"

namespace gbound {

/// Univariate polynomial with interval coefficients (index = power).
class Poly1 {
public:
    Poly1() = default;
    Poly1(std::initializer_list<Interval> coeffs) : c_(coeffs) { trim(); }
    explicit Poly1(std::vector<Interval> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly1 monomial(const Interval& coeff, int power);

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Interval>& coeffs() const { return c_; }
    [[nodiscard]] Interval coeff(int k) const
    {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Interval(0.0);
    }

    /// Horner evaluation at a point with the coefficient midpoints.
    [[nodiscard]] double operator()(double t) const;

    /// Enclosure of the range over T, as a sum of tight monomial ranges.
    [[nodiscard]] Interval operator()(const Interval& t) const;

    [[nodiscard]] Poly1 derivative() const;

    /// p(q(t)).
    [[nodiscard]] Poly1 compose(const Poly1& q) const;

    friend Poly1 operator+(const Poly1& p, const Poly1& q);
    friend Poly1 operator-(const Poly1& p, const Poly1& q);
    friend Poly1 operator*(const Poly1& p, const Poly1& q);
    friend Poly1 operator*(const Interval& s, const Poly1& p);

private:
    void trim();

    std::vector<Interval> c_;
};

/// A one-dimensional function passed to the 1-D solvers. `enclose` must return
/// a guaranteed range enclosure; the derivative members are optional.
struct Function1D {
    std::function<double(double)> value;
    std::function<Interval(const Interval&)> enclose;
    std::function<double(double)> derivative_value;
    std::function<Interval(const Interval&)> derivative;
    std::function<Interval(const Interval&)> second_derivative;

    [[nodiscard]] bool has_derivative() const { return static_cast<bool>(derivative); }
    [[nodiscard]] bool has_second_derivative() const { return static_cast<bool>(second_derivative); }
};

/// q(t) + m(t) * sqrt(s(t)).
///
/// Every edge restriction of the objective family has this shape, as does the
/// one-dimensional |a3| objective. The radicand is clamped at zero; points
/// with s(t) < -kClampTolerance are outside the domain.
struct RadicalForm {
    Poly1 q;
    Poly1 m;
    Poly1 s;

    [[nodiscard]] double value(double t) const;
    [[nodiscard]] Interval value(const Interval& t) const;

    [[nodiscard]] double derivative(double t) const;
    /// Unbounded where s reaches zero; entire() where s(T) <= 0 throughout.
    [[nodiscard]] Interval derivative(const Interval& t) const;

    [[nodiscard]] double second_derivative(double t) const;
    [[nodiscard]] Interval second_derivative(const Interval& t) const;

    [[nodiscard]] Function1D as_function() const;
    [[nodiscard]] Function1D derivative_function() const;
};

} // namespace gbound

#endif
