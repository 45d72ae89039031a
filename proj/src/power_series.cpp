#include "gbound/power_series.hpp"

#include <cmath>
#include <sstream>

namespace gbound {

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty()) {
        c_.push_back(0.0);
    }
}

PowerSeries PowerSeries::normalized(const std::vector<Complex>& a)
{
    if (a.empty() || a[0] != Complex(1.0)) {
        throw std::invalid_argument("normalized series needs a1 = 1");
    }
    std::vector<Complex> c(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i + 1] = a[i];
    }
    return PowerSeries(std::move(c));
}

Complex PowerSeries::operator[](int n) const
{
    if (n < 0 || n > order()) {
        return 0.0;
    }
    return c_[static_cast<std::size_t>(n)];
}

bool PowerSeries::is_normalized() const { return order() >= 1 && c_[0] == Complex(0.0) && c_[1] == Complex(1.0); }

PowerSeries PowerSeries::padded(int n) const
{
    std::vector<Complex> c = c_;
    if (n + 1 > static_cast<int>(c.size())) {
        c.resize(static_cast<std::size_t>(n) + 1);
    }
    return PowerSeries(std::move(c));
}

std::string_view to_string(Preset p)
{
    switch (p) {
    case Preset::Identity:
        return "identity";
    case Preset::Geometric:
        return "z/(1-z)";
    case Preset::HalfLog:
        return "halflog";
    case Preset::Koebe:
        return "koebe";
    }
    return "?";
}

Preset parse_preset(std::string_view name)
{
    for (Preset p : kAllPresets) {
        if (name == to_string(p)) {
            return p;
        }
    }
    if (name == "geometric") {
        return Preset::Geometric;
    }
    throw std::invalid_argument("unknown preset: " + std::string(name));
}

bool in_bi_univalent_class(Preset p) { return p != Preset::Koebe; }

PowerSeries preset_series(Preset p, int n)
{
    if (n < 1) {
        throw std::invalid_argument("preset order must be at least 1");
    }
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        double v = 0.0;
        switch (p) {
        case Preset::Identity:
            v = k == 1 ? 1.0 : 0.0;
            break;
        case Preset::Geometric:
            v = 1.0;
            break;
        case Preset::HalfLog:
            v = k % 2 == 1 ? 1.0 / k : 0.0;
            break;
        case Preset::Koebe:
            v = k;
            break;
        }
        c[static_cast<std::size_t>(k)] = v;
    }
    return PowerSeries(std::move(c));
}

PowerSeries series_sqrt1p(const PowerSeries& u)
{
    if (u[0] != Complex(0.0)) {
        throw std::invalid_argument("series_sqrt1p needs u(0) = 0");
    }
    const int n = u.order();
    std::vector<Complex> g(static_cast<std::size_t>(n) + 1);
    g[0] = 1.0;
    // (g0 + g1 z + ...)^2 = 1 + u
    for (int k = 1; k <= n; ++k) {
        Complex s = u[k];
        for (int j = 1; j < k; ++j) {
            s -= g[j] * g[k - j];
        }
        g[k] = s / 2.0;
    }
    return PowerSeries(std::move(g));
}

PowerSeries series_log1p(const PowerSeries& u)
{
    if (u[0] != Complex(0.0)) {
        throw std::invalid_argument("series_log1p needs u(0) = 0");
    }
    const int n = u.order();
    std::vector<Complex> l(static_cast<std::size_t>(n) + 1);
    // z L' (1 + u) = z u'
    for (int k = 1; k <= n; ++k) {
        Complex s = static_cast<double>(k) * u[k];
        for (int j = 1; j < k; ++j) {
            s -= static_cast<double>(j) * l[j] * u[k - j];
        }
        l[k] = s / static_cast<double>(k);
    }
    return PowerSeries(std::move(l));
}

PowerSeries odd_transform(const PowerSeries& f)
{
    if (!f.is_normalized()) {
        throw std::invalid_argument("odd_transform needs a normalized series");
    }
    if (f.order() < 2) {
        throw InsufficientOrderError("odd_transform needs order >= 2");
    }
    // f(w)/w = 1 + a2 w + a3 w^2 + ..., then f*(z) = z sqrt(f(z^2)/z^2)
    const int n = f.order();
    std::vector<Complex> u(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k) {
        u[static_cast<std::size_t>(k)] = f[k + 1];
    }
    const PowerSeries g = series_sqrt1p(PowerSeries(std::move(u)));
    std::vector<Complex> c(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
        c[static_cast<std::size_t>(2 * k + 1)] = g[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries read_coefficients(std::istream& in)
{
    std::vector<Complex> a;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        double re = 0.0;
        double im = 0.0;
        if (!(ls >> re)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            throw std::invalid_argument("coefficient file line " + std::to_string(lineno) + ": expected 're im'");
        }
        if (!(ls >> im)) {
            im = 0.0;
            ls.clear();
        }
        std::string rest;
        if (ls >> rest) {
            throw std::invalid_argument("coefficient file line " + std::to_string(lineno) + ": trailing text");
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw std::invalid_argument("coefficient file line " + std::to_string(lineno) + ": non-finite value");
        }
        a.emplace_back(re, im);
    }
    return PowerSeries::normalized(a);
}

} // namespace gbound
