#ifndef GBOUND_DOMAIN_HPP
#define GBOUND_DOMAIN_HPP

#include <array>
#include <string_view>
#include <utility>

#include "gbound/interval.hpp"

namespace gbound {

/// Constants of the admissible (|w11|, |w13|) region.
///
///   a = 297/400          bound on |w11| (half the best known |a2| bound)
///   b = sqrt((2 sqrt 7 - 5) / 3)   where the two caps on |w13| meet
///   d = sqrt((1 - a^2) / 3)        height of the region at x = a
///
/// a is held as the exact rational and widened at use sites; b and d are
/// verified enclosures computed from their closed forms.
struct DomainConstants {
    static constexpr double kANumerator = 297.0;
    static constexpr double kADenominator = 400.0;

    Interval a;
    Interval b;
    Interval d;

    /// Nearest doubles, for point evaluations.
    double a_value;
    double b_value;
    double d_value;

    static const DomainConstants& get();

private:
    DomainConstants();
};

/// The five pieces of the boundary of the region.
enum class EdgeId {
    XZero,     // x = 0,                 y in [0, 1/2]
    XA,        // x = a,                 y in [0, d]
    YZero,     // y = 0,                 x in [0, a]
    CurveLow,  // y = (1 + x^2) / 2,      x in [0, b]
    CurveHigh, // y = sqrt((1 - x^2)/3), x in [b, a]
};

inline constexpr std::array<EdgeId, 5> kAllEdges = {EdgeId::XZero, EdgeId::XA, EdgeId::YZero,
                                                    EdgeId::CurveLow, EdgeId::CurveHigh};

std::string_view to_string(EdgeId edge);

/// Upper cap on |w13| as a function of |w11| = x, for x in [0, 1]:
/// (1 + x^2)/2 below b and sqrt((1 - x^2)/3) above. Continuous at b.
double ellipse_cap(double x);

/// Enclosure of the cap over X (X within [0, 1]). The cap equals the
/// minimum of the two branches, which is what is enclosed here.
Interval ellipse_cap(const Interval& x);

/// Axis-aligned box in (x, y) = (|w11|, |w13|) space.
struct Box {
    Interval x;
    Interval y;

    [[nodiscard]] double width() const { return std::max(x.width(), y.width()); }
    [[nodiscard]] std::pair<double, double> mid() const { return {x.mid(), y.mid()}; }
};

/// Omega = Omega1 ∪ Omega2, the union of
///   {0 <= x <= b, 0 <= y <= (1 + x^2)/2} and {b <= x <= a, 0 <= y <= sqrt((1 - x^2)/3)}.
class OmegaRegion {
public:
    /// Slack admitted by contains() around the boundary.
    static constexpr double kSlack = 1e-12;

    OmegaRegion() : c_(&DomainConstants::get()) {}

    [[nodiscard]] const DomainConstants& constants() const { return *c_; }

    /// Closed membership with kSlack.
    [[nodiscard]] bool contains(double x, double y) const;

    /// Point on an edge for parameter t in [0,1]. Straight edges are affine in
    /// t; the curves are graphs over x with x running left to right.
    /// Throws std::out_of_range for t outside [0,1].
    [[nodiscard]] std::pair<double, double> edge_point(EdgeId edge, double t) const;

    /// Parameter range of an edge in its free coordinate (y for XZero/XA, x otherwise).
    [[nodiscard]] Interval edge_range(EdgeId edge) const;

    /// Bounding box of the region, with the non-representable a rounded outward.
    [[nodiscard]] Box bounding_box() const;

    /// Intersects a box with the region's y-simple description: x is cut to
    /// [0, a] and y to [0, cap(X).hi]. Returns nullopt when the box misses the
    /// region. The result may still contain points outside the region.
    [[nodiscard]] std::optional<Box> clip(const Box& box) const;

    /// The box lies in the open interior of the region (rigorous).
    [[nodiscard]] bool interior_contains(const Box& box) const;

private:
    const DomainConstants* c_;
};

bool omega_contains(double x, double y);

} // namespace gbound

#endif
