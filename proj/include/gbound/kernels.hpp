#ifndef GBOUND_KERNELS_HPP
#define GBOUND_KERNELS_HPP

// Batched point evaluation of the objective family
//
//   P(x, y) + (c0 + c1 x) sqrt(max(1 - x^2 - 3y^2, 0))
//
// used for dense sampling: brute-force grid maxima and incumbent seeding in
// the branch-and-bound. A scalar reference kernel and an AVX2 kernel compute
// the same operation sequence (no contraction), so their outputs agree bit
// for bit; the implementation is chosen at runtime from the CPU features.
//
// Points whose radicand is below -kClampTolerance evaluate to NaN.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "gbound/objectives.hpp"

namespace gbound::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Double-precision coefficients of one objective, laid out for the kernels.
struct PointForm {
    static constexpr std::size_t kMaxTerms = 4;

    std::array<double, kMaxTerms> coeff{};
    std::array<int, kMaxTerms> px{};
    std::array<int, kMaxTerms> py{};
    std::size_t terms = 0;
    double c0 = 0.0;
    double c1 = 0.0;
    bool ignore_y = false;
};

PointForm point_form(ObjectiveId id);

using BatchFn = void (*)(const PointForm&, std::span<const double>, std::span<const double>, std::span<double>);

void eval_batch_scalar(const PointForm& f, std::span<const double> xs, std::span<const double> ys,
                       std::span<double> out);

#if defined(GBOUND_HAVE_AVX2_KERNELS)
void eval_batch_avx2(const PointForm& f, std::span<const double> xs, std::span<const double> ys,
                     std::span<double> out);
#endif

/// True when the ISA is compiled in and supported by this CPU.
bool isa_available(Isa isa);

/// The ISA eval_batch currently dispatches to.
Isa active_isa();

/// Overrides the runtime choice. Throws std::invalid_argument for an
/// unavailable ISA.
void force_isa(Isa isa);

/// Restores CPU-feature based selection.
void reset_isa();

/// Evaluates f at (xs[i], ys[i]) into out[i]. All spans must have equal size.
void eval_batch(const PointForm& f, std::span<const double> xs, std::span<const double> ys, std::span<double> out);

struct GridMax {
    double value;
    double x;
    double y;
    std::size_t points;
};

/// Maximum over an Omega-adapted grid: nx columns x_i = i a/(nx-1) and, in
/// each column, ny rows y_j = j cap(x_i)/(ny-1). The row heights use the
/// rigorous lower bound of the cap so every grid point lies in the region.
/// For F1 the grid degenerates to the nx points on y = 0.
GridMax grid_max(ObjectiveId id, std::size_t nx, std::size_t ny);

} // namespace gbound::kernels

#endif
