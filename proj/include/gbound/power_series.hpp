#pragma once

#include <complex>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gbound {

using Complex = std::complex<double>;

class InsufficientOrderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truncated power series c[0] + c[1] z + ... + c[N] z^N. A normalized
/// function f(z) = z + a2 z^2 + ... has c[0] = 0 and c[1] = 1; its order is N.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Complex> coeffs);

    /// Normalized series from a1..aN. Throws invalid_argument unless a1 == 1.
    static PowerSeries normalized(const std::vector<Complex>& a);

    [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of z^n; zero beyond the stored order.
    [[nodiscard]] Complex operator[](int n) const;
    [[nodiscard]] const std::vector<Complex>& coeffs() const { return c_; }
    [[nodiscard]] bool is_normalized() const;

    /// Same series viewed as a polynomial and padded with zeros up to order n.
    [[nodiscard]] PowerSeries padded(int n) const;

private:
    std::vector<Complex> c_;
};

enum class Preset { Identity, Geometric, HalfLog, Koebe };

inline constexpr Preset kAllPresets[] = {Preset::Identity, Preset::Geometric, Preset::HalfLog, Preset::Koebe};

/// "identity", "z/(1-z)", "halflog", "koebe".
std::string_view to_string(Preset p);
/// Accepts the names above plus "geometric" for z/(1-z). Throws invalid_argument.
Preset parse_preset(std::string_view name);
/// Bi-univalent examples; the Koebe function is univalent only.
bool in_bi_univalent_class(Preset p);

/// Taylor coefficients of the preset up to z^n:
///   identity z, z/(1-z), (1/2) log((1+z)/(1-z)), z/(1-z)^2.
PowerSeries preset_series(Preset p, int n);

/// sqrt(1 + u) for u with u(0) = 0, truncated at the order of u.
PowerSeries series_sqrt1p(const PowerSeries& u);
/// log(1 + u) for u with u(0) = 0, truncated at the order of u.
PowerSeries series_log1p(const PowerSeries& u);

/// f*(z) = sqrt(f(z^2)) = z + c3 z^3 + ...; order 2N - 1 for f of order N.
PowerSeries odd_transform(const PowerSeries& f);

/// Reads one complex coefficient per line as "re im" (or just "re"), starting
/// with a1. Blank lines and text after '#' are ignored. Throws
/// invalid_argument on malformed input or a1 != 1.
PowerSeries read_coefficients(std::istream& in);

} // namespace gbound
