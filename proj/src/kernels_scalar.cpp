#include <algorithm>
#include <cmath>
#include <limits>

#include "gbound/kernels.hpp"

namespace gbound::kernels {

void eval_batch_scalar(const PointForm& f, std::span<const double> xs, std::span<const double> ys,
                       std::span<double> out)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double x = xs[i];
        const double y = f.ignore_y ? 0.0 : ys[i];
        const double rad = 1.0 - x * x - 3.0 * (y * y);
        const double root = std::sqrt(std::max(rad, 0.0));
        double v = 0.0;
        for (std::size_t k = 0; k < f.terms; ++k) {
            double t = f.coeff[k];
            for (int p = 0; p < f.px[k]; ++p) {
                t = t * x;
            }
            for (int p = 0; p < f.py[k]; ++p) {
                t = t * y;
            }
            v = v + t;
        }
        v = v + (f.c0 + f.c1 * x) * root;
        out[i] = rad < -kClampTolerance ? nan : v;
    }
}

} // namespace gbound::kernels
