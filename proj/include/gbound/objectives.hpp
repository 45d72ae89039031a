#ifndef GBOUND_OBJECTIVES_HPP
#define GBOUND_OBJECTIVES_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "gbound/domain.hpp"
#include "gbound/interval.hpp"
#include "gbound/radical_form.hpp"

namespace gbound {

/// The nine bound functions of (x, y) = (|w11|, |w13|).
///
///   F1  |a3|            (one-dimensional in x)
///   F2  |a4|
///   F3  |a5|
///   F4  |a4| - |a3|
///   F5  |a5| - |a4|
///   F6  |a2 a4 - a3^2|
///   F7  |gamma2|
///   F8  |gamma3|
///   F9  |gamma4|
enum class ObjectiveId { F1, F2, F3, F4, F5, F6, F7, F8, F9 };

inline constexpr std::array<ObjectiveId, 9> kAllObjectives = {
    ObjectiveId::F1, ObjectiveId::F2, ObjectiveId::F3, ObjectiveId::F4, ObjectiveId::F5,
    ObjectiveId::F6, ObjectiveId::F7, ObjectiveId::F8, ObjectiveId::F9};

struct ObjectiveInfo {
    ObjectiveId id;
    std::string_view name;     // "f1" ... "f9"
    std::string_view claim_id; // report row identifier
    std::string_view quantity; // what the maximum bounds
    double reference_value;    // published truncated maximum
    int reference_digits;      // digits after the decimal point
    int dimension;             // 1 for F1, 2 otherwise
};

const ObjectiveInfo& info(ObjectiveId id);
std::string_view to_string(ObjectiveId id);
/// Accepts "f4", "F4" or "4".
std::optional<ObjectiveId> parse_objective(std::string_view text);

/// c * x^px * y^py
struct Monomial {
    Interval coeff;
    int px;
    int py;
};

/// P(x, y) + (c0 + c1 x) * sqrt(1 - x^2 - 3 y^2). Every objective in the
/// catalog has this shape; F1 is the restriction to y = 0.
struct ObjectiveForm {
    std::vector<Monomial> poly;
    Interval c0;
    Interval c1;

    [[nodiscard]] bool has_radical() const { return !(c0 == Interval(0.0) && c1 == Interval(0.0)); }
};

const ObjectiveForm& form(ObjectiveId id);

struct Gradient2 {
    double dx;
    double dy;
};

struct GradientEnclosure {
    Interval dx;
    Interval dy;
};

struct HessianEnclosure {
    Interval xx;
    Interval xy;
    Interval yy;
};

/// Point evaluation. For F1 the y argument is ignored. Throws DomainError when
/// the radicand is below -kClampTolerance.
double eval(ObjectiveId id, double x, double y);

/// Enclosure of the range over X × Y restricted to the radicand domain
/// (points with 1 - x^2 - 3y^2 < 0 are excluded). Throws DomainError when the
/// box misses that domain entirely.
Interval eval(ObjectiveId id, const Interval& x, const Interval& y);

/// Analytic gradient; requires 1 - x^2 - 3y^2 > 0 (DomainError otherwise).
/// For F1, dy is 0 and dx is f1'(x).
Gradient2 grad(ObjectiveId id, double x, double y);

/// Interval gradient over a box. Components become unbounded where the box
/// touches the radicand-zero curve. Requires the radicand to be positive
/// somewhere in the box.
GradientEnclosure grad(ObjectiveId id, const Interval& x, const Interval& y);

/// Interval Hessian; same domain rules as the interval gradient.
HessianEnclosure hessian(ObjectiveId id, const Interval& x, const Interval& y);

/// The radicand 1 - x^2 - 3y^2 over a box (tight).
Interval radicand(const Interval& x, const Interval& y);

// --- boundary restrictions -------------------------------------------------

/// g1..g10: the objectives restricted to the two curved edges, in simplified
/// closed form.
enum class RestrictionId { G1, G2, G3, G4, G5, G6, G7, G8, G9, G10 };

inline constexpr std::array<RestrictionId, 10> kAllRestrictions = {
    RestrictionId::G1, RestrictionId::G2, RestrictionId::G3, RestrictionId::G4, RestrictionId::G5,
    RestrictionId::G6, RestrictionId::G7, RestrictionId::G8, RestrictionId::G9, RestrictionId::G10};

struct RestrictionInfo {
    RestrictionId id;
    std::string_view name;
    ObjectiveId parent;
    EdgeId edge;
};

const RestrictionInfo& info(RestrictionId id);
std::string_view to_string(RestrictionId id);

/// Closed form of a restriction as a function of x.
const RadicalForm& closed_form(RestrictionId id);

/// Throws std::out_of_range when x lies outside the edge's x-range.
double eval_boundary(RestrictionId id, double x);
Interval eval_boundary(RestrictionId id, const Interval& x);

/// Restriction of an objective to an edge, derived mechanically by
/// substitution. The parameter is y on XZero/XA and x on the other edges.
/// On CurveHigh the original radical vanishes and odd powers of y contribute
/// sqrt(1 - x^2) / sqrt(3).
RadicalForm restrict_to_edge(ObjectiveId id, EdgeId edge);

/// F1 as a function of x.
RadicalForm one_dimensional_form();

// --- critical-point reductions ---------------------------------------------

struct CriticalReduction {
    /// 3y * df/dx - x * df/dy.
    double combined;
    /// Objective-specific second relation, zero at interior critical points:
    ///   F2: x^2 - 3y^2 / (1 - 6y)
    ///   F3: sqrt(1-x^2-3y^2) - (3x/sqrt5 + 1/sqrt7) y / (2x^2 + y)
    ///   F4: x - h1(y)
    ///   F6: y - h2(x)
    std::optional<double> auxiliary;
};

/// Throws DomainError where the gradient is singular (radicand <= 0) and, for
/// F2, when y >= 1/6.
CriticalReduction critical_reduction(ObjectiveId id, double x, double y);

/// Closed forms of the combined equation for F2, F3 and F4.
double f2_combined_closed_form(double x, double y);
double f3_combined_closed_form(double x, double y);
double f4_combined_closed_form(double x, double y);

/// x on the F2 reduction curve x^2 = 3y^2/(1 - 6y); DomainError for y >= 1/6.
double f2_reduction_curve(double y);
/// 15[(1 - 3y^2)(1 - 6y) - 3y^2] - (1 - 6y)^2.
double f2_reduced_equation(double y);
/// x = y sqrt6 sqrt(3a - 1) / sqrt(9y(4a - 3) + 6a - 2).
double h1(double y);
/// y = sqrt(20 - 29x^2) / (2 sqrt 15).
double h2(double x);
/// x (x^2 - 11/30).
double f6_reduced_cubic(double x);

} // namespace gbound

#endif
