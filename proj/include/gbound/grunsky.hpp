#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gbound/power_series.hpp"

namespace gbound {

/// Coefficients b[p][q] of t^p z^q for 0 <= p, q <= degree. Products and the
/// logarithm are exact up to that degree in each variable.
class BivariateSeries {
public:
    explicit BivariateSeries(int degree);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] Complex& at(int p, int q) { return c_[idx(p, q)]; }
    [[nodiscard]] Complex at(int p, int q) const { return c_[idx(p, q)]; }

    /// (g(t) - g(z)) / (t - z) via (t^n - z^n)/(t - z) = sum_{i+j=n-1} t^i z^j.
    static BivariateSeries difference_quotient(const PowerSeries& g, int degree);

    /// log of a series with constant term 1. Throws invalid_argument otherwise.
    [[nodiscard]] BivariateSeries log() const;

    friend BivariateSeries operator*(const BivariateSeries& u, const BivariateSeries& v);

private:
    [[nodiscard]] std::size_t idx(int p, int q) const;
    int n_;
    std::vector<Complex> c_;
};

/// Grunsky coefficients w_{p,q} of the odd transform f*, for odd 1 <= p, q <= 2M - 1.
class GrunskyTable {
public:
    GrunskyTable(int order, std::vector<Complex> odd);

    [[nodiscard]] int order() const { return m_; }
    [[nodiscard]] int max_index() const { return 2 * m_ - 1; }
    /// w_{p,q}; p and q odd. Throws out_of_range otherwise.
    [[nodiscard]] Complex omega(int p, int q) const;

private:
    int m_;
    std::vector<Complex> w_;
};

inline constexpr int kDefaultGrunskyOrder = 8;

/// Needs a1..a_{2M}; throws InsufficientOrderError when f is shorter.
GrunskyTable grunsky_table(const PowerSeries& f, int order = kDefaultGrunskyOrder);

/// Residuals (lhs - rhs, in modulus) of the coefficient relations:
///   a2 = 2 w11
///   a3 = 2 w13 + 3 w11^2
///   a4 = 2 w33 + 8 w11 w13 + 10/3 w11^3
///   a5 = 2 w35 + 8 w11 w33 + 5 w13^2 + 18 w11^2 w13 + 7/3 w11^4
///   0  = 3 w15 - 3 w11 w13 + w11^3 - 3 w33
///   0  = w17 - w35 - w11 w33 - w13^2 + 1/3 w11^4
/// and the two eliminated forms
///   a4 = 2 w15 + 6 w11 w13 + 4 w11^3
///   a5 = 2 w17 + 6 w11 w15 + 12 w11^2 w13 + 3 w13^2 + 5 w11^4
struct RelationResiduals {
    std::array<double, 6> relations{};
    double a4_form = 0.0;
    double a5_form = 0.0;
    [[nodiscard]] double max() const;
};

RelationResiduals check_relations(const PowerSeries& f, int order = kDefaultGrunskyOrder);

/// Test vector (x1, x3, ..., x_{2K-1}).
struct TestVector {
    std::vector<Complex> x;

    /// Throws invalid_argument for an empty or all-zero vector.
    void validate() const;
    /// sum |x_{2p-1}|^2 / (2p - 1)
    [[nodiscard]] double weighted_norm() const;
    /// Independent complex normal entries; K components.
    static TestVector random(std::uint64_t seed, int k);
};

/// Slack is rhs - lhs; every entry should be >= -1e-10 for a univalent f.
struct InequalityReport {
    double area = 0.0;      ///< sum (2q-1) |sum_p w_{2p-1,2q-1} x_{2p-1}|^2 <= sum |x|^2/(2p-1)
    double quadratic = 0.0; ///< |sum_{p,q} w_{2p-1,2q-1} x_{2p-1} x_{2q-1}| <= sum |x|^2/(2p-1)
    double first_row = 0.0; ///< |w11|^2 + 3|w13|^2 + 5|w15|^2 <= 1
    double first_row_w17 = 0.0; ///< ... + 7|w17|^2 <= 1
    double second_row = 0.0;    ///< |w13|^2 + 3|w33|^2 + 5|w35|^2 <= 1/3
    double w13_bound = 0.0;         ///< |2 w13 - w11^2| <= 1
    [[nodiscard]] double min() const;
};

/// The area sum is truncated at q <= 2M - 1, which can only lower the lhs.
/// Throws invalid_argument if xvec is longer than the table.
InequalityReport check_inequalities(const GrunskyTable& table, const TestVector& xvec);

/// gamma_n from log(f(z)/z) = 2 sum gamma_n z^n and from the closed forms
///   g1 = a2/2
///   g2 = (a3 - a2^2/2)/2
///   g3 = (a4 - a2 a3 + a2^3/3)/2
///   g4 = (a5 - a2 a4 - a3^2/2 + a2^2 a3 - a2^4/4)/2
struct GammaComparison {
    std::array<Complex, 4> series{};
    std::array<Complex, 4> closed{};
    [[nodiscard]] double max_difference() const;
};

GammaComparison gamma_from_series(const PowerSeries& f);

/// Moduli compared against the extremal bounds on Omega, for presets that are
/// bi-univalent. `point` is (|w11|, |w13|).
struct BridgeCheck {
    double x = 0.0;
    double y = 0.0;
    bool in_omega = false;
    double a3 = 0.0;           ///< |a3|
    double a4 = 0.0;           ///< |a4|
    double a5 = 0.0;           ///< |a5|
    double a4_minus_a3 = 0.0;  ///< |a4| - |a3|
    double a5_minus_a4 = 0.0;  ///< |a5| - |a4|
    double hankel = 0.0;       ///< |a2 a4 - a3^2|
    double gamma2 = 0.0;
    double gamma3 = 0.0;
    double gamma4 = 0.0;
    bool within_bounds = false;
};

BridgeCheck consistency_bridge(const PowerSeries& f);

} // namespace gbound
