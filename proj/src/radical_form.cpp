#include "gbound/radical_form.hpp"

#include <algorithm>
#include <cmath>

namespace gbound {

Poly1 Poly1::monomial(const Interval& coeff, int power)
{
    std::vector<Interval> c(static_cast<std::size_t>(power) + 1, Interval(0.0));
    c.back() = coeff;
    return Poly1(std::move(c));
}

void Poly1::trim()
{
    while (!c_.empty() && c_.back() == Interval(0.0)) {
        c_.pop_back();
    }
}

double Poly1::operator()(double t) const
{
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * t + it->mid();
    }
    return r;
}

Interval Poly1::operator()(const Interval& t) const
{
    if (c_.empty()) {
        return 0.0;
    }
    Interval r = c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
        if (c_[k] == Interval(0.0)) {
            continue;
        }
        r += c_[k] * pow(t, static_cast<int>(k));
    }
    return r;
}

Poly1 Poly1::derivative() const
{
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<Interval> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = scale(c_[k], static_cast<double>(k));
    }
    return Poly1(std::move(d));
}

Poly1 Poly1::compose(const Poly1& q) const
{
    Poly1 r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * q + Poly1{*it};
    }
    return r;
}

Poly1 operator+(const Poly1& p, const Poly1& q)
{
    std::vector<Interval> c(std::max(p.c_.size(), q.c_.size()), Interval(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    }
    return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& p, const Poly1& q)
{
    return p + Interval(-1.0) * q;
}

Poly1 operator*(const Poly1& p, const Poly1& q)
{
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    std::vector<Interval> c(p.c_.size() + q.c_.size() - 1, Interval(0.0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        for (std::size_t j = 0; j < q.c_.size(); ++j) {
            c[i + j] += p.c_[i] * q.c_[j];
        }
    }
    return Poly1(std::move(c));
}

Poly1 operator*(const Interval& s, const Poly1& p)
{
    std::vector<Interval> c = p.c_;
    for (auto& v : c) {
        v = s * v;
    }
    return Poly1(std::move(c));
}

namespace {

double clamped_radicand(double s)
{
    if (s < -kClampTolerance) {
        throw DomainError("radicand below the clamp tolerance");
    }
    return std::max(s, 0.0);
}

} // namespace

double RadicalForm::value(double t) const
{
    double v = q(t);
    if (!m.is_zero()) {
        v += m(t) * std::sqrt(clamped_radicand(s(t)));
    }
    return v;
}

Interval RadicalForm::value(const Interval& t) const
{
    Interval v = q(t);
    if (!m.is_zero()) {
        v += m(t) * sqrt_domain(s(t));
    }
    return v;
}

double RadicalForm::derivative(double t) const
{
    double v = q.derivative()(t);
    if (m.is_zero()) {
        return v;
    }
    const double root = std::sqrt(clamped_radicand(s(t)));
    v += m.derivative()(t) * root;
    const double ms = m(t) * s.derivative()(t);
    if (ms != 0.0) {
        v += 0.5 * ms / root;
    }
    return v;
}

Interval RadicalForm::derivative(const Interval& t) const
{
    Interval v = q.derivative()(t);
    if (m.is_zero()) {
        return v;
    }
    const Interval st = s(t);
    if (!(st.hi() > 0.0)) {
        return Interval::entire();
    }
    v += m.derivative()(t) * sqrt_domain(st);
    v += scale(m(t) * s.derivative()(t), 0.5) * inv_sqrt(st);
    return v;
}

double RadicalForm::second_derivative(double t) const
{
    double v = q.derivative().derivative()(t);
    if (m.is_zero()) {
        return v;
    }
    const double st = clamped_radicand(s(t));
    const double root = std::sqrt(st);
    const Poly1 dm = m.derivative();
    const Poly1 ds = s.derivative();
    const double mt = m(t);
    const double dst = ds(t);
    v += dm.derivative()(t) * root;
    v += (2.0 * dm(t) * dst + mt * ds.derivative()(t)) / (2.0 * root);
    v -= mt * dst * dst / (4.0 * st * root);
    return v;
}

Interval RadicalForm::second_derivative(const Interval& t) const
{
    Interval v = q.derivative().derivative()(t);
    if (m.is_zero()) {
        return v;
    }
    const Interval st = s(t);
    if (!(st.hi() > 0.0)) {
        return Interval::entire();
    }
    const Poly1 dm = m.derivative();
    const Poly1 ds = s.derivative();
    const Interval mt = m(t);
    const Interval dst = ds(t);
    const Interval inv = inv_sqrt(st);
    v += dm.derivative()(t) * sqrt_domain(st);
    v += scale(scale(dm(t) * dst, 2.0) + mt * ds.derivative()(t), 0.5) * inv;
    v -= scale(mt * sqr(dst), 0.25) * pow(inv, 3);
    return v;
}

Function1D RadicalForm::as_function() const
{
    RadicalForm self = *this;
    return Function1D{
        [self](double t) { return self.value(t); },
        [self](const Interval& t) { return self.value(t); },
        [self](double t) { return self.derivative(t); },
        [self](const Interval& t) { return self.derivative(t); },
        [self](const Interval& t) { return self.second_derivative(t); },
    };
}

Function1D RadicalForm::derivative_function() const
{
    RadicalForm self = *this;
    return Function1D{
        [self](double t) { return self.derivative(t); },
        [self](const Interval& t) { return self.derivative(t); },
        [self](double t) { return self.second_derivative(t); },
        [self](const Interval& t) { return self.second_derivative(t); },
        {},
    };
}

} // namespace gbound
