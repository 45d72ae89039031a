#include "gbound/optimizer.hpp"

#include <cmath>

namespace gbound {

namespace {

bool strictly_inside(const Interval& k, const Interval& b)
{
    return k.lo() > b.lo() && k.hi() < b.hi();
}

std::pair<Box, Box> bisect(const Box& b)
{
    if (b.x.width() >= b.y.width()) {
        const double m = b.x.mid();
        return {Box{Interval(b.x.lo(), m), b.y}, Box{Interval(m, b.x.hi()), b.y}};
    }
    const double m = b.y.mid();
    return {Box{b.x, Interval(b.y.lo(), m)}, Box{b.x, Interval(m, b.y.hi())}};
}

} // namespace

KrawczykStep krawczyk_step(ObjectiveId id, const Box& b)
{
    const KrawczykStep undecided{KrawczykOutcome::Undecided, b};
    HessianEnclosure h;
    GradientEnclosure gm;
    const double mx = b.x.mid();
    const double my = b.y.mid();
    try {
        h = hessian(id, b.x, b.y);
        gm = grad(id, Interval(mx), Interval(my));
    } catch (const DomainError&) {
        return undecided;
    }
    if (!h.xx.is_bounded() || !h.xy.is_bounded() || !h.yy.is_bounded() || !gm.dx.is_bounded() ||
        !gm.dy.is_bounded()) {
        return undecided;
    }

    // preconditioner: inverse of the midpoint Hessian
    const double j00 = h.xx.mid();
    const double j01 = h.xy.mid();
    const double j11 = h.yy.mid();
    const double det = j00 * j11 - j01 * j01;
    if (det == 0.0 || !std::isfinite(det)) {
        return undecided;
    }
    const Interval y00(j11 / det);
    const Interval y01(-j01 / det);
    const Interval y11(j00 / det);

    const Interval one(1.0);
    const Interval m00 = one - (y00 * h.xx + y01 * h.xy);
    const Interval m01 = -(y00 * h.xy + y01 * h.yy);
    const Interval m10 = -(y01 * h.xx + y11 * h.xy);
    const Interval m11 = one - (y01 * h.xy + y11 * h.yy);

    const Interval dx = b.x - Interval(mx);
    const Interval dy = b.y - Interval(my);
    const Interval kx = Interval(mx) - (y00 * gm.dx + y01 * gm.dy) + m00 * dx + m01 * dy;
    const Interval ky = Interval(my) - (y01 * gm.dx + y11 * gm.dy) + m10 * dx + m11 * dy;

    if (strictly_inside(kx, b.x) && strictly_inside(ky, b.y)) {
        return {KrawczykOutcome::Unique, Box{kx, ky}};
    }
    const auto ix = intersect(kx, b.x);
    const auto iy = intersect(ky, b.y);
    if (!ix || !iy) {
        return {KrawczykOutcome::NoZero, b};
    }
    return {KrawczykOutcome::Undecided, Box{*ix, *iy}};
}

Box tighten_critical_box(ObjectiveId id, Box b)
{
    for (int it = 0; it < 64; ++it) {
        const KrawczykStep k = krawczyk_step(id, b);
        if (k.outcome == KrawczykOutcome::NoZero) {
            break;
        }
        const auto ix = intersect(k.box.x, b.x);
        const auto iy = intersect(k.box.y, b.y);
        if (!ix || !iy) {
            break;
        }
        const Box next{*ix, *iy};
        const bool shrunk = next.x.width() < b.x.width() || next.y.width() < b.y.width();
        b = next;
        if (!shrunk) {
            break;
        }
    }
    return b;
}

CriticalPointSet interior_critical_points(ObjectiveId id, const OmegaRegion& region, const BnBConfig& cfg)
{
    cfg.validate();
    if (info(id).dimension != 2) {
        throw std::invalid_argument("interior_critical_points: objective is one-dimensional");
    }
    CriticalPointSet out;
    std::vector<Box> stack{region.bounding_box()};

    while (!stack.empty()) {
        if (out.boxes >= cfg.max_boxes) {
            out.exhausted = true;
            out.unresolved.insert(out.unresolved.end(), stack.begin(), stack.end());
            break;
        }
        const Box raw = stack.back();
        stack.pop_back();
        ++out.boxes;

        const auto clipped = region.clip(raw);
        if (!clipped) {
            continue;
        }
        const Box b = *clipped;
        const Interval rad = radicand(b.x, b.y);
        if (!(rad.hi() > 0.0)) {
            continue;
        }
        GradientEnclosure g;
        try {
            g = grad(id, b.x, b.y);
        } catch (const DomainError&) {
            continue;
        }
        if (g.dx.excludes_zero() || g.dy.excludes_zero()) {
            continue;
        }

        if (!region.interior_contains(b)) {
            if (b.width() <= kBoundaryBoxWidth) {
                (rad.lo() <= 0.0 ? out.rim : out.boundary).push_back(b);
                continue;
            }
            const auto [lo, hi] = bisect(b);
            stack.push_back(hi);
            stack.push_back(lo);
            continue;
        }

        const KrawczykStep k = krawczyk_step(id, b);
        if (k.outcome == KrawczykOutcome::NoZero) {
            continue;
        }
        if (k.outcome == KrawczykOutcome::Unique) {
            out.verified.push_back(tighten_critical_box(id, k.box));
            continue;
        }
        if (b.width() <= cfg.tol_box) {
            out.unresolved.push_back(b);
            continue;
        }
        if (k.box.width() < 0.5 * b.width()) {
            stack.push_back(k.box);
            continue;
        }
        const auto [lo, hi] = bisect(b);
        stack.push_back(hi);
        stack.push_back(lo);
    }
    return out;
}

} // namespace gbound
