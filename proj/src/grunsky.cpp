#include "gbound/grunsky.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gbound/domain.hpp"

namespace gbound {

BivariateSeries::BivariateSeries(int degree) : n_(degree)
{
    if (degree < 0) {
        throw std::invalid_argument("bivariate degree must be non-negative");
    }
    c_.assign(static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 1), 0.0);
}

std::size_t BivariateSeries::idx(int p, int q) const
{
    if (p < 0 || q < 0 || p > n_ || q > n_) {
        throw std::out_of_range("bivariate index out of range");
    }
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(q);
}

BivariateSeries BivariateSeries::difference_quotient(const PowerSeries& g, int degree)
{
    BivariateSeries out(degree);
    for (int n = 1; n <= 2 * degree + 1; ++n) {
        const Complex gn = g[n];
        if (gn == Complex(0.0)) {
            continue;
        }
        for (int i = std::max(0, n - 1 - degree); i <= std::min(n - 1, degree); ++i) {
            out.at(i, n - 1 - i) += gn;
        }
    }
    return out;
}

BivariateSeries operator*(const BivariateSeries& u, const BivariateSeries& v)
{
    if (u.n_ != v.n_) {
        throw std::invalid_argument("bivariate degree mismatch");
    }
    const int n = u.n_;
    BivariateSeries out(n);
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            Complex s = 0.0;
            for (int i = 0; i <= p; ++i) {
                for (int j = 0; j <= q; ++j) {
                    s += u.at(i, j) * v.at(p - i, q - j);
                }
            }
            out.at(p, q) = s;
        }
    }
    return out;
}

BivariateSeries BivariateSeries::log() const
{
    if (at(0, 0) != Complex(1.0)) {
        throw std::invalid_argument("bivariate log needs constant term 1");
    }
    // Euler operator E = t d/dt + z d/dz scales t^p z^q by p + q, and
    // E(log Q) Q = E(Q); solve for the coefficients in order of total degree.
    bool symmetric = true;
    for (int p = 0; p <= n_ && symmetric; ++p) {
        for (int q = 0; q < p; ++q) {
            symmetric = symmetric && at(p, q) == at(q, p);
        }
    }
    BivariateSeries l(n_);
    for (int total = 1; total <= 2 * n_; ++total) {
        for (int p = std::max(0, total - n_); p <= std::min(total, n_); ++p) {
            const int q = total - p;
            if (symmetric && q < p) {
                l.at(p, q) = l.at(q, p);
                continue;
            }
            Complex s = static_cast<double>(total) * at(p, q);
            for (int i = 0; i <= p; ++i) {
                for (int j = 0; j <= q; ++j) {
                    if ((i == 0 && j == 0) || (i == p && j == q)) {
                        continue;
                    }
                    s -= static_cast<double>(i + j) * l.at(i, j) * at(p - i, q - j);
                }
            }
            l.at(p, q) = s / static_cast<double>(total);
        }
    }
    return l;
}

GrunskyTable::GrunskyTable(int order, std::vector<Complex> odd) : m_(order), w_(std::move(odd))
{
    if (order < 1 || w_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
        throw std::invalid_argument("grunsky table shape mismatch");
    }
}

Complex GrunskyTable::omega(int p, int q) const
{
    if (p < 1 || q < 1 || p % 2 == 0 || q % 2 == 0 || p > max_index() || q > max_index()) {
        throw std::out_of_range("omega index must be odd and at most 2M-1");
    }
    const auto i = static_cast<std::size_t>((p - 1) / 2);
    const auto j = static_cast<std::size_t>((q - 1) / 2);
    return w_[i * static_cast<std::size_t>(m_) + j];
}

GrunskyTable grunsky_table(const PowerSeries& f, int order)
{
    if (order < 1) {
        throw std::invalid_argument("grunsky order must be positive");
    }
    if (!f.is_normalized()) {
        throw std::invalid_argument("grunsky_table needs a normalized series");
    }
    if (f.order() < 2 * order) {
        throw InsufficientOrderError("grunsky_table of order " + std::to_string(order) + " needs a1..a" +
                                     std::to_string(2 * order));
    }
    const int deg = 2 * order - 1;
    const PowerSeries fs = odd_transform(f);
    const BivariateSeries l = BivariateSeries::difference_quotient(fs, deg).log();
    std::vector<Complex> w(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            // read the upper triangle only, so the table is symmetric exactly
            const int p = 2 * std::min(i, j) + 1;
            const int q = 2 * std::max(i, j) + 1;
            w[static_cast<std::size_t>(i * order + j)] = l.at(p, q);
        }
    }
    return {order, std::move(w)};
}

double RelationResiduals::max() const
{
    double m = std::max(a4_form, a5_form);
    for (double r : relations) {
        m = std::max(m, r);
    }
    return m;
}

RelationResiduals check_relations(const PowerSeries& f, int order)
{
    if (f.order() < 5) {
        throw InsufficientOrderError("check_relations needs a1..a5");
    }
    if (order < 4) {
        throw InsufficientOrderError("check_relations needs w17, i.e. order >= 4");
    }
    const GrunskyTable t = grunsky_table(f, order);
    const Complex w11 = t.omega(1, 1);
    const Complex w13 = t.omega(1, 3);
    const Complex w15 = t.omega(1, 5);
    const Complex w17 = t.omega(1, 7);
    const Complex w33 = t.omega(3, 3);
    const Complex w35 = t.omega(3, 5);
    const Complex a2 = f[2];
    const Complex a3 = f[3];
    const Complex a4 = f[4];
    const Complex a5 = f[5];
    const Complex w11_2 = w11 * w11;
    const Complex w11_3 = w11_2 * w11;
    const Complex w11_4 = w11_3 * w11;

    RelationResiduals r;
    r.relations[0] = std::abs(a2 - 2.0 * w11);
    r.relations[1] = std::abs(a3 - (2.0 * w13 + 3.0 * w11_2));
    r.relations[2] = std::abs(a4 - (2.0 * w33 + 8.0 * w11 * w13 + 10.0 / 3.0 * w11_3));
    r.relations[3] =
        std::abs(a5 - (2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w13 * w13 + 18.0 * w11_2 * w13 + 7.0 / 3.0 * w11_4));
    r.relations[4] = std::abs(3.0 * w15 - 3.0 * w11 * w13 + w11_3 - 3.0 * w33);
    r.relations[5] = std::abs(w17 - w35 - w11 * w33 - w13 * w13 + w11_4 / 3.0);
    r.a4_form = std::abs(a4 - (2.0 * w15 + 6.0 * w11 * w13 + 4.0 * w11_3));
    r.a5_form = std::abs(a5 - (2.0 * w17 + 6.0 * w11 * w15 + 12.0 * w11_2 * w13 + 3.0 * w13 * w13 + 5.0 * w11_4));
    return r;
}

void TestVector::validate() const
{
    if (x.empty() || std::all_of(x.begin(), x.end(), [](Complex v) { return v == Complex(0.0); })) {
        throw std::invalid_argument("test vector must have a nonzero entry");
    }
}

double TestVector::weighted_norm() const
{
    double s = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p) {
        s += std::norm(x[p]) / static_cast<double>(2 * p + 1);
    }
    return s;
}

TestVector TestVector::random(std::uint64_t seed, int k)
{
    if (k < 1) {
        throw std::invalid_argument("test vector length must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n01(0.0, 1.0);
    TestVector v;
    v.x.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double re = n01(rng);
        const double im = n01(rng);
        v.x.emplace_back(re, im);
    }
    return v;
}

double InequalityReport::min() const
{
    return std::min({area, quadratic, first_row, first_row_w17, second_row, w13_bound});
}

InequalityReport check_inequalities(const GrunskyTable& table, const TestVector& xvec)
{
    xvec.validate();
    const int k = static_cast<int>(xvec.x.size());
    const int m = table.order();
    if (k > m) {
        throw std::invalid_argument("test vector longer than the Grunsky table");
    }
    const auto w = [&](int i, int j) { return table.omega(2 * i + 1, 2 * j + 1); };
    const double rhs = xvec.weighted_norm();

    InequalityReport r;
    double area = 0.0;
    for (int j = 0; j < m; ++j) {
        Complex s = 0.0;
        for (int i = 0; i < k; ++i) {
            s += w(i, j) * xvec.x[static_cast<std::size_t>(i)];
        }
        area += static_cast<double>(2 * j + 1) * std::norm(s);
    }
    r.area = rhs - area;

    Complex quad = 0.0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            quad += w(i, j) * xvec.x[static_cast<std::size_t>(i)] * xvec.x[static_cast<std::size_t>(j)];
        }
    }
    r.quadratic = rhs - std::abs(quad);

    const double row1 = std::norm(w(0, 0)) + 3.0 * std::norm(w(0, 1)) + 5.0 * std::norm(w(0, 2));
    r.first_row = 1.0 - row1;
    r.first_row_w17 = m >= 4 ? 1.0 - row1 - 7.0 * std::norm(w(0, 3)) : r.first_row;
    r.second_row = 1.0 / 3.0 - (std::norm(w(0, 1)) + 3.0 * std::norm(w(1, 1)) + 5.0 * std::norm(w(1, 2)));
    r.w13_bound = 1.0 - std::abs(2.0 * w(0, 1) - w(0, 0) * w(0, 0));
    return r;
}

double GammaComparison::max_difference() const
{
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        m = std::max(m, std::abs(series[i] - closed[i]));
    }
    return m;
}

GammaComparison gamma_from_series(const PowerSeries& f)
{
    if (!f.is_normalized()) {
        throw std::invalid_argument("gamma_from_series needs a normalized series");
    }
    if (f.order() < 5) {
        throw InsufficientOrderError("gamma_from_series needs a1..a5");
    }
    std::vector<Complex> u(5);
    for (int n = 1; n <= 4; ++n) {
        u[static_cast<std::size_t>(n)] = f[n + 1];
    }
    const PowerSeries l = series_log1p(PowerSeries(std::move(u)));

    GammaComparison g;
    for (int n = 1; n <= 4; ++n) {
        g.series[static_cast<std::size_t>(n - 1)] = l[n] / 2.0;
    }
    const Complex a2 = f[2];
    const Complex a3 = f[3];
    const Complex a4 = f[4];
    const Complex a5 = f[5];
    g.closed[0] = a2 / 2.0;
    g.closed[1] = (a3 - a2 * a2 / 2.0) / 2.0;
    g.closed[2] = (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) / 2.0;
    g.closed[3] = (a5 - a2 * a4 - a3 * a3 / 2.0 + a2 * a2 * a3 - a2 * a2 * a2 * a2 / 4.0) / 2.0;
    return g;
}

BridgeCheck consistency_bridge(const PowerSeries& f)
{
    const GrunskyTable t = grunsky_table(f, 4);
    const GammaComparison g = gamma_from_series(f);
    BridgeCheck b;
    b.x = std::abs(t.omega(1, 1));
    b.y = std::abs(t.omega(1, 3));
    b.in_omega = omega_contains(b.x, b.y);
    b.a3 = std::abs(f[3]);
    b.a4 = std::abs(f[4]);
    b.a5 = std::abs(f[5]);
    b.a4_minus_a3 = b.a4 - b.a3;
    b.a5_minus_a4 = b.a5 - b.a4;
    b.hankel = std::abs(f[2] * f[4] - f[3] * f[3]);
    b.gamma2 = std::abs(g.series[1]);
    b.gamma3 = std::abs(g.series[2]);
    b.gamma4 = std::abs(g.series[3]);
    // upper ends of the truncation windows of the extremal values
    b.within_bounds = b.a3 <= 2.428 && b.a4 <= 3.462 && b.a5 <= 4.994 && b.a4_minus_a3 <= 1.175 &&
                      b.a5_minus_a4 <= 1.823 && b.hankel <= 1.281 && b.gamma2 <= 0.663 && b.gamma3 <= 0.552 &&
                      b.gamma4 <= 0.614;
    return b;
}

} // namespace gbound
