#ifndef GBOUND_OPTIMIZER_HPP
#define GBOUND_OPTIMIZER_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gbound/domain.hpp"
#include "gbound/interval.hpp"
#include "gbound/objectives.hpp"
#include "gbound/radical_form.hpp"

namespace gbound {

struct BnBConfig {
    double tol_value = 1e-6;
    double tol_box = 1e-9;
    std::size_t max_boxes = 10'000'000;

    /// Throws std::invalid_argument unless every field is positive.
    void validate() const;
};

/// Where a maximum is attained. The 1-D solver reports Interior, LowerEnd or
/// UpperEnd; the region solver reports Interior or one of the edges.
enum class LocationKind { Interior, XZero, XA, YZero, CurveLow, CurveHigh, LowerEnd, UpperEnd };

std::string_view to_string(LocationKind kind);
LocationKind location_of(EdgeId edge);

struct Extremum {
    Interval value;    // encloses the maximum
    Interval argmax_x; // encloses a maximizer (the parameter for 1-D problems)
    Interval argmax_y; // [0, 0] for 1-D problems
    LocationKind kind = LocationKind::Interior;
    std::size_t iterations = 0;
    bool exhausted = false; // max_boxes hit; value is the best-so-far enclosure
    bool argmax_refined = false; // argmax tightened by a local uniqueness proof
};

/// Maximum of f over [lo, hi] by interval branch-and-bound. The evaluator's
/// enclosure is combined with the mean-value form when a derivative
/// enclosure is available. Sub-intervals whose enclosure throws DomainError
/// are treated as lying outside the function's domain.
Extremum maximize_1d(const Function1D& f, double lo, double hi, const BnBConfig& cfg = {});

/// Same, for endpoints known only as enclosures. The upper bound covers
/// [lo.lo, hi.hi]; lower bounds only use points of [lo.hi, hi.lo].
Extremum maximize_1d(const Function1D& f, const Interval& lo, const Interval& hi, const BnBConfig& cfg = {});

/// Maximum of a two-dimensional objective over the region.
Extremum maximize_2d(ObjectiveId id, const OmegaRegion& region, const BnBConfig& cfg = {});

class NoBracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sign change of `residual` in [lo, hi] enclosed to width <= tol. Without a
/// bracket at the endpoints a 1000-point scan looks for one; NoBracketError if
/// none exists. Uses damped Newton steps when a point derivative is supplied.
Interval find_root_1d(const Function1D& residual, double lo, double hi, double tol = 1e-12);

enum class RootCount { Unique, Multiple, None, Inconclusive };

std::string_view to_string(RootCount count);

struct UniquenessResult {
    RootCount status = RootCount::Inconclusive;
    std::vector<Interval> roots; // certified sign-change intervals
    std::size_t ambiguous = 0;   // tiny intervals that could not be decided

    [[nodiscard]] bool unique() const { return status == RootCount::Unique; }
};

/// Adaptive subdivision proving that residual has exactly one zero in
/// [lo, hi]. Subintervals are discarded when the enclosure excludes 0; a
/// subinterval where the derivative excludes 0 and the endpoint signs differ
/// holds exactly one root.
UniquenessResult verify_uniqueness_1d(const Function1D& residual, double lo, double hi);

enum class KrawczykOutcome { Unique, NoZero, Undecided };

struct KrawczykStep {
    KrawczykOutcome outcome;
    Box box; // K ∩ B: every gradient zero of B lies here
};

/// One Krawczyk step for the gradient on B, preconditioned with the inverse
/// of the midpoint Hessian. Unique when K lies in the interior of B.
/// Requires the radicand to be positive on B.
KrawczykStep krawczyk_step(ObjectiveId id, const Box& b);

/// Contracts a box already known to hold a single gradient zero until the
/// Krawczyk operator stops shrinking it.
Box tighten_critical_box(ObjectiveId id, Box b);

struct CriticalPointSet {
    std::vector<Box> verified;   // each holds exactly one gradient zero (Krawczyk)
    std::vector<Box> rim;        // touch the curve where the radicand vanishes
    std::vector<Box> boundary;   // touch another part of the boundary
    std::vector<Box> unresolved; // interior boxes left undecided
    std::size_t boxes = 0;
    bool exhausted = false;
};

/// Boxes whose side is at most this wide are filed as rim/boundary instead
/// of being split further.
inline constexpr double kBoundaryBoxWidth = 2e-3;

/// Gradient zeros of a 2-D objective in the interior of the region. Every
/// part of the region outside the returned boxes carries a certificate that
/// one gradient component is nonzero.
CriticalPointSet interior_critical_points(ObjectiveId id, const OmegaRegion& region, const BnBConfig& cfg = {});

struct EdgeMaximum {
    EdgeId edge;
    Extremum result; // parameter in argmax_x: y on XZero/XA, x otherwise
};

/// Maxima of a 2-D objective along each of the five edges.
std::array<EdgeMaximum, 5> edge_maxima(ObjectiveId id, const BnBConfig& cfg = {});

/// The restriction of id to an edge as a 1-D function with its parameter
/// range (endpoints as enclosures).
struct EdgeFunction {
    Function1D f;
    Interval lo;
    Interval hi;
};
EdgeFunction edge_function(ObjectiveId id, EdgeId edge);

} // namespace gbound

#endif
