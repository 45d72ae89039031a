// Compiled with -mavx2 (no FMA): every lane performs the scalar kernel's
// operation sequence.

#include <immintrin.h>

#include "gbound/kernels.hpp"

namespace gbound::kernels {

void eval_batch_avx2(const PointForm& f, std::span<const double> xs, std::span<const double> ys,
                     std::span<double> out)
{
    const std::size_t n = out.size();
    const std::size_t vec_end = n - n % 4;

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d three = _mm256_set1_pd(3.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d neg_tol = _mm256_set1_pd(-kClampTolerance);
    const __m256d nan = _mm256_set1_pd(__builtin_nan(""));
    const __m256d c0 = _mm256_set1_pd(f.c0);
    const __m256d c1 = _mm256_set1_pd(f.c1);

    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs.data() + i);
        const __m256d y = f.ignore_y ? zero : _mm256_loadu_pd(ys.data() + i);
        const __m256d rad = _mm256_sub_pd(_mm256_sub_pd(one, _mm256_mul_pd(x, x)),
                                          _mm256_mul_pd(three, _mm256_mul_pd(y, y)));
        // max(rad, 0) with rad as the first operand matches std::max(rad, 0.0)
        const __m256d root = _mm256_sqrt_pd(_mm256_max_pd(rad, zero));
        __m256d v = zero;
        for (std::size_t k = 0; k < f.terms; ++k) {
            __m256d t = _mm256_set1_pd(f.coeff[k]);
            for (int p = 0; p < f.px[k]; ++p) {
                t = _mm256_mul_pd(t, x);
            }
            for (int p = 0; p < f.py[k]; ++p) {
                t = _mm256_mul_pd(t, y);
            }
            v = _mm256_add_pd(v, t);
        }
        v = _mm256_add_pd(v, _mm256_mul_pd(_mm256_add_pd(c0, _mm256_mul_pd(c1, x)), root));
        const __m256d outside = _mm256_cmp_pd(rad, neg_tol, _CMP_LT_OQ);
        _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(v, nan, outside));
    }
    if (vec_end < n) {
        eval_batch_scalar(f, xs.subspan(vec_end), ys.subspan(vec_end), out.subspan(vec_end));
    }
}

} // namespace gbound::kernels
