#include "gbound/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gbound::kernels {

namespace {

bool cpu_has_avx2()
{
#if defined(GBOUND_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa detect()
{
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current()
{
    static std::atomic<Isa> isa{detect()};
    return isa;
}

BatchFn select(Isa isa)
{
#if defined(GBOUND_HAVE_AVX2_KERNELS)
    if (isa == Isa::Avx2) {
        return &eval_batch_avx2;
    }
#endif
    (void)isa;
    return &eval_batch_scalar;
}

} // namespace

std::string_view to_string(Isa isa)
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

PointForm point_form(ObjectiveId id)
{
    const ObjectiveForm& src = form(id);
    if (src.poly.size() > PointForm::kMaxTerms) {
        throw std::logic_error("point_form: too many terms");
    }
    PointForm f;
    for (const Monomial& m : src.poly) {
        f.coeff[f.terms] = m.coeff.mid();
        f.px[f.terms] = m.px;
        f.py[f.terms] = m.py;
        ++f.terms;
    }
    f.c0 = src.c0.mid();
    f.c1 = src.c1.mid();
    f.ignore_y = info(id).dimension == 1;
    return f;
}

bool isa_available(Isa isa)
{
    return isa == Isa::Scalar || cpu_has_avx2();
}

Isa active_isa()
{
    return current().load();
}

void force_isa(Isa isa)
{
    if (!isa_available(isa)) {
        throw std::invalid_argument("force_isa: instruction set not available");
    }
    current().store(isa);
}

void reset_isa()
{
    current().store(detect());
}

void eval_batch(const PointForm& f, std::span<const double> xs, std::span<const double> ys, std::span<double> out)
{
    if (xs.size() != out.size() || (!f.ignore_y && ys.size() != out.size())) {
        throw std::invalid_argument("eval_batch: size mismatch");
    }
    if (f.ignore_y && ys.size() != out.size()) {
        // y is never read; hand the kernels a span of the right length
        select(active_isa())(f, xs, xs, out);
        return;
    }
    select(active_isa())(f, xs, ys, out);
}

GridMax grid_max(ObjectiveId id, std::size_t nx, std::size_t ny)
{
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("grid_max: need at least 2 points per axis");
    }
    const auto& c = DomainConstants::get();
    const PointForm f = point_form(id);
    const bool one_d = f.ignore_y;
    const std::size_t rows = one_d ? 1 : ny;

    std::vector<double> xs(rows);
    std::vector<double> ys(rows);
    std::vector<double> out(rows);
    GridMax best{-kInf, 0.0, 0.0, 0};
    std::size_t points = 0;

    for (std::size_t i = 0; i < nx; ++i) {
        // the last column sits at the largest double below a
        const double x = i + 1 == nx ? c.a.lo() : c.a.lo() * static_cast<double>(i) / static_cast<double>(nx - 1);
        const double cap = ellipse_cap(Interval(x)).lo();
        for (std::size_t j = 0; j < rows; ++j) {
            xs[j] = x;
            ys[j] = one_d ? 0.0 : cap * static_cast<double>(j) / static_cast<double>(ny - 1);
        }
        eval_batch(f, xs, ys, out);
        for (std::size_t j = 0; j < rows; ++j) {
            if (out[j] > best.value) {
                best = {out[j], xs[j], ys[j], 0};
            }
        }
        points += rows;
    }
    best.points = points;
    return best;
}

} // namespace gbound::kernels
