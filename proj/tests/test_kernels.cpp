#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "gbound/kernels.hpp"

using namespace gbound;
using namespace gbound::kernels;

namespace {

struct Batch {
    std::vector<double> xs;
    std::vector<double> ys;
};

/// Points over a box slightly larger than the region, so some fall outside
/// the radicand domain and exercise the NaN path.
Batch random_batch(std::uint64_t seed, std::size_t n)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-0.05, 0.8);
    std::uniform_real_distribution<double> uy(-0.05, 0.6);
    Batch b;
    for (std::size_t i = 0; i < n; ++i) {
        b.xs.push_back(ux(rng));
        b.ys.push_back(uy(rng));
    }
    return b;
}

bool same_bits(double p, double q)
{
    return std::memcmp(&p, &q, sizeof p) == 0 || (std::isnan(p) && std::isnan(q));
}

} // namespace

TEST_CASE("scalar kernel matches the reference evaluator")
{
    for (ObjectiveId id : kAllObjectives) {
        const PointForm f = point_form(id);
        const Batch b = random_batch(static_cast<std::uint64_t>(id) + 1, 4099);
        std::vector<double> out(b.xs.size());
        eval_batch_scalar(f, b.xs, b.ys, out);
        for (std::size_t i = 0; i < out.size(); ++i) {
            const double y = id == ObjectiveId::F1 ? 0.0 : b.ys[i];
            const double rad = 1 - b.xs[i] * b.xs[i] - 3 * y * y;
            if (rad < -kClampTolerance) {
                REQUIRE(std::isnan(out[i]));
            } else {
                REQUIRE(out[i] == doctest::Approx(eval(id, b.xs[i], y)).epsilon(1e-14).scale(1.0));
            }
        }
    }
}

TEST_CASE("AVX2 kernel is bit-identical to the scalar kernel")
{
    if (!isa_available(Isa::Avx2)) {
        MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
        return;
    }
#if defined(GBOUND_HAVE_AVX2_KERNELS)
    for (ObjectiveId id : kAllObjectives) {
        const PointForm f = point_form(id);
        for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 1023u, 4096u}) {
            const Batch b = random_batch(1000 + n, n);
            std::vector<double> s(n);
            std::vector<double> v(n);
            eval_batch_scalar(f, b.xs, b.ys, s);
            eval_batch_avx2(f, b.xs, b.ys, v);
            for (std::size_t i = 0; i < n; ++i) {
                REQUIRE(same_bits(s[i], v[i]));
            }
        }
    }
#endif
}

TEST_CASE("dispatch can be forced and reset")
{
    const Isa detected = active_isa();
    force_isa(Isa::Scalar);
    CHECK(active_isa() == Isa::Scalar);
    const PointForm f = point_form(ObjectiveId::F3);
    const Batch b = random_batch(3, 257);
    std::vector<double> s(b.xs.size());
    eval_batch(f, b.xs, b.ys, s);
    if (isa_available(Isa::Avx2)) {
        force_isa(Isa::Avx2);
        std::vector<double> v(b.xs.size());
        eval_batch(f, b.xs, b.ys, v);
        for (std::size_t i = 0; i < s.size(); ++i) {
            REQUIRE(same_bits(s[i], v[i]));
        }
    } else {
        CHECK_THROWS_AS(force_isa(Isa::Avx2), std::invalid_argument);
    }
    reset_isa();
    CHECK(active_isa() == detected);
    CHECK(to_string(Isa::Avx2) == "avx2");

    std::vector<double> short_out(3);
    CHECK_THROWS_AS(eval_batch(f, b.xs, b.ys, short_out), std::invalid_argument);
}

TEST_CASE("grid maximum stays inside the region and is ISA independent")
{
    for (ObjectiveId id : kAllObjectives) {
        force_isa(Isa::Scalar);
        const GridMax s = grid_max(id, 101, 57);
        reset_isa();
        const GridMax v = grid_max(id, 101, 57);
        CHECK(same_bits(s.value, v.value));
        CHECK(s.x == v.x);
        CHECK(s.y == v.y);
        CHECK(omega_contains(s.x, s.y));
        CHECK(s.points == (id == ObjectiveId::F1 ? 101u : 101u * 57u));
    }
    CHECK_THROWS_AS((void)grid_max(ObjectiveId::F2, 1, 5), std::invalid_argument);
}
