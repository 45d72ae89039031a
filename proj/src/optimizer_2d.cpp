// Region branch-and-bound.
//
// The region is y-simple, so it is searched in coordinates (x, s) with
// y = s cap(x), s in [0, 1]. The two cap branches give two rectangles:
//
//   low:  x in [0, b], cap = (1 + x^2)/2
//   high: x in [b, a], cap = sqrt((1 - x^2)/3)
//
// Every cell maps into the region (up to the outward rounding of a and b) and
// the edges of the region are faces of the cells, so boundary maxima are
// reached without clipping.

#include "gbound/kernels.hpp"
#include "gbound/optimizer.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>

namespace gbound {

namespace {

enum class Piece { Low, High };

Interval ipow(const Interval& u, int n) { return n == 0 ? Interval(1.0) : pow(u, n); }

struct Cell {
    Interval x;
    Interval s;
    Piece piece;
};

struct Item {
    Cell cell;
    double ub;
    std::uint64_t seq;
};

struct ByBound {
    bool operator()(const Item& p, const Item& q) const
    {
        if (p.ub != q.ub) {
            return p.ub < q.ub;
        }
        return p.seq > q.seq;
    }
};

class CellModel {
public:
    explicit CellModel(ObjectiveId id) : id_(id), form_(form(id)), c_(DomainConstants::get()) {}

    [[nodiscard]] Interval cap(const Interval& x, Piece p) const
    {
        if (p == Piece::Low) {
            return scale(Interval(1.0) + sqr(x), 0.5);
        }
        return sqrt_domain((Interval(1.0) - sqr(x)) * Interval::ratio(1.0, 3.0));
    }

    [[nodiscard]] Interval cap_slope(const Interval& x, Piece p) const
    {
        if (p == Piece::Low) {
            return x;
        }
        return -(x * inv_sqrt(scale(Interval(1.0) - sqr(x), 3.0)));
    }

    [[nodiscard]] Interval y_of(const Cell& c) const { return c.s * cap(c.x, c.piece); }

    /// Range enclosure over the image of the cell. On the high piece the
    /// radical factors as sqrt(1 - x^2) sqrt(1 - s^2).
    [[nodiscard]] Interval value(const Cell& c) const
    {
        const Interval y = y_of(c);
        Interval v(0.0);
        for (const Monomial& m : form_.poly) {
            v += m.coeff * ipow(c.x, m.px) * ipow(y, m.py);
        }
        if (form_.has_radical()) {
            const Interval root = c.piece == Piece::Low
                                      ? sqrt_domain(Interval(1.0) - sqr(c.x) - scale(sqr(y), 3.0))
                                      : sqrt_domain(Interval(1.0) - sqr(c.x)) * sqrt_domain(Interval(1.0) - sqr(c.s));
            v += (form_.c0 + form_.c1 * c.x) * root;
        }
        return v;
    }

    /// Natural enclosure intersected with the mean-value form in (x, s).
    [[nodiscard]] double upper_bound(const Cell& c) const
    {
        double ub = value(c).hi();
        try {
            const Interval y = y_of(c);
            const GradientEnclosure g = grad(id_, c.x, y);
            if (!g.dx.is_bounded() || !g.dy.is_bounded()) {
                return ub;
            }
            const Interval gx = g.dx + g.dy * c.s * cap_slope(c.x, c.piece);
            const Interval gs = g.dy * cap(c.x, c.piece);
            const double mx = c.x.mid();
            const double ms = c.s.mid();
            const Interval center = value(Cell{Interval(mx), Interval(ms), c.piece});
            const Interval mv = center + gx * (c.x - Interval(mx)) + gs * (c.s - Interval(ms));
            ub = std::min(ub, mv.hi());
        } catch (const DomainError&) {
            // gradient undefined on the cell: natural bound only
        }
        return ub;
    }

    /// Physical extent of the cell along x and along y.
    [[nodiscard]] std::pair<double, double> extent(const Cell& c) const
    {
        return {c.x.width(), c.s.width() * cap(c.x, c.piece).hi()};
    }

    /// x range whose points certainly belong to the piece.
    [[nodiscard]] Interval inner_x(Piece p) const
    {
        return p == Piece::Low ? Interval(0.0, c_.b.lo()) : Interval(c_.b.hi(), c_.a.lo());
    }

    [[nodiscard]] Interval outer_x(Piece p) const
    {
        return p == Piece::Low ? Interval(0.0, c_.b.hi()) : Interval(c_.b.lo(), c_.a.hi());
    }

    /// Rigorous lower bound of the objective at a region point near (x, s).
    [[nodiscard]] std::optional<std::pair<double, std::pair<double, double>>> sample(double x, double s, Piece p) const
    {
        const Interval in = inner_x(p);
        x = std::clamp(x, in.lo(), in.hi());
        s = std::clamp(s, 0.0, 1.0);
        const double y = std::max((Interval(s) * cap(Interval(x), p)).lo(), 0.0);
        try {
            return std::make_pair(eval(id_, Interval(x), Interval(y)).lo(), std::make_pair(x, y));
        } catch (const DomainError&) {
            return std::nullopt;
        }
    }

    [[nodiscard]] ObjectiveId id() const { return id_; }
    [[nodiscard]] const DomainConstants& constants() const { return c_; }

private:
    ObjectiveId id_;
    const ObjectiveForm& form_;
    const DomainConstants& c_;
};

struct Incumbent {
    double lb = -kInf;
    double x = 0.0;
    double y = 0.0;

    void offer(const std::optional<std::pair<double, std::pair<double, double>>>& s)
    {
        if (s && s->first > lb) {
            lb = s->first;
            x = s->second.first;
            y = s->second.second;
        }
    }
};

struct ClusterResult {
    Interval value;
    Box argmax;
    LocationKind kind;
    bool refined;
    bool excluded = false;
};

struct Cluster {
    Box hull;
    double ub = -kInf;
    bool x_zero = false;
    bool x_a = false;
    bool y_zero = false;
    bool curve_low = false;
    bool curve_high = false;
};

/// Point set of an edge parameter, mapped to (x, y).
Box edge_to_box(EdgeId e, const Interval& t)
{
    const auto& c = DomainConstants::get();
    switch (e) {
    case EdgeId::XZero:
        return {Interval(0.0), t};
    case EdgeId::XA:
        return {c.a, t};
    case EdgeId::YZero:
        return {t, Interval(0.0)};
    case EdgeId::CurveLow:
        return {t, scale(Interval(1.0) + sqr(t), 0.5)};
    case EdgeId::CurveHigh:
        return {t, sqrt_domain((Interval(1.0) - sqr(t)) * Interval::ratio(1.0, 3.0))};
    }
    return {t, t};
}

/// Maximum of the edge restriction over the part of the edge inside `window`
/// (a range of the edge parameter).
std::optional<Extremum> edge_window_max(ObjectiveId id, EdgeId e, const Interval& window, const BnBConfig& cfg)
{
    const EdgeFunction ef = edge_function(id, e);
    const Interval lo = window.lo() <= ef.lo.hi() ? ef.lo : Interval(window.lo());
    const Interval hi = window.hi() >= ef.hi.lo() ? ef.hi : Interval(window.hi());
    if (lo.lo() > hi.hi()) {
        return std::nullopt;
    }
    if (lo.hi() > hi.lo()) {
        // window inside an endpoint enclosure
        const Interval t = hull(lo, hi);
        Extremum ex;
        ex.value = ef.f.enclose(t);
        ex.argmax_x = t;
        ex.argmax_y = Interval(0.0);
        ex.kind = LocationKind::UpperEnd;
        ex.argmax_refined = true;
        return ex;
    }
    return maximize_1d(ef.f, lo, hi, cfg);
}

/// True when the box provably holds no zero of the gradient.
bool free_of_critical_points(ObjectiveId id, const Box& box)
{
    std::vector<Box> stack{box};
    int budget = 4096;
    while (!stack.empty()) {
        if (--budget < 0) {
            return false;
        }
        const Box b = stack.back();
        stack.pop_back();
        try {
            const GradientEnclosure g = grad(id, b.x, b.y);
            if (g.dx.excludes_zero() || g.dy.excludes_zero()) {
                continue;
            }
            const KrawczykStep k = krawczyk_step(id, b);
            if (k.outcome == KrawczykOutcome::NoZero) {
                continue;
            }
            if (k.outcome == KrawczykOutcome::Unique) {
                return false;
            }
        } catch (const DomainError&) {
            return false;
        }
        const double mx = b.x.mid();
        const double my = b.y.mid();
        if (b.x.width() >= b.y.width()) {
            stack.push_back({Interval(b.x.lo(), mx), b.y});
            stack.push_back({Interval(mx, b.x.hi()), b.y});
        } else {
            stack.push_back({b.x, Interval(b.y.lo(), my)});
            stack.push_back({b.x, Interval(my, b.y.hi())});
        }
    }
    return true;
}

ClusterResult refine_cluster(const CellModel& model, const OmegaRegion& region, const Cluster& cl, const BnBConfig& cfg)
{
    const ObjectiveId id = model.id();
    const bool on_edge = cl.x_zero || cl.x_a || cl.y_zero || cl.curve_low || cl.curve_high;
    LocationKind fallback = LocationKind::Interior;
    if (cl.x_a) {
        fallback = LocationKind::XA;
    } else if (cl.curve_high) {
        fallback = LocationKind::CurveHigh;
    } else if (cl.curve_low) {
        fallback = LocationKind::CurveLow;
    } else if (cl.y_zero) {
        fallback = LocationKind::YZero;
    } else if (cl.x_zero) {
        fallback = LocationKind::XZero;
    }
    const ClusterResult plain{Interval(-kInf, cl.ub), cl.hull, fallback, false};

    if (!on_edge) {
        // interior cluster: the maximizer is a gradient zero; prove there is one
        for (const double grow : {0.0, 0.25, 1.0}) {
            const double rx = grow * cl.hull.x.width() + 1e-12;
            const double ry = grow * cl.hull.y.width() + 1e-12;
            const Box b{Interval(cl.hull.x.lo() - rx, cl.hull.x.hi() + rx),
                        Interval(cl.hull.y.lo() - ry, cl.hull.y.hi() + ry)};
            if (!region.interior_contains(b)) {
                continue;
            }
            const KrawczykStep k = krawczyk_step(id, b);
            if (k.outcome != KrawczykOutcome::Unique) {
                continue;
            }
            const Box crit = tighten_critical_box(id, k.box);
            const Interval v = eval(id, crit.x, crit.y);
            const double vhi = std::min(v.hi(), cl.ub);
            return {Interval(v.lo(), std::max(v.lo(), vhi)), crit, LocationKind::Interior, true};
        }
        // every neighbouring cell was pruned, so without a critical point the
        // cluster cannot hold the maximizer
        if (region.interior_contains(cl.hull) && free_of_critical_points(id, cl.hull)) {
            ClusterResult out = plain;
            out.excluded = true;
            return out;
        }
        return plain;
    }

    // no gradient zero in the hull: the maximizer lies on a touched edge
    try {
        const GradientEnclosure g = grad(id, cl.hull.x, cl.hull.y);
        if (!g.dx.excludes_zero() && !g.dy.excludes_zero()) {
            return plain;
        }
    } catch (const DomainError&) {
        return plain;
    }

    struct EdgeCandidate {
        EdgeId edge;
        Extremum ex;
    };
    std::vector<EdgeCandidate> found;
    const std::array<std::pair<EdgeId, bool>, 5> touched = {{{EdgeId::XZero, cl.x_zero},
                                                            {EdgeId::XA, cl.x_a},
                                                            {EdgeId::YZero, cl.y_zero},
                                                            {EdgeId::CurveLow, cl.curve_low},
                                                            {EdgeId::CurveHigh, cl.curve_high}}};
    for (const auto& [e, hit] : touched) {
        if (!hit) {
            continue;
        }
        const Interval window = (e == EdgeId::XZero || e == EdgeId::XA) ? cl.hull.y : cl.hull.x;
        try {
            if (auto ex = edge_window_max(id, e, window, cfg)) {
                found.push_back({e, *ex});
            }
        } catch (const std::exception&) {
            return plain;
        }
    }
    if (found.empty()) {
        return plain;
    }
    double lo = -kInf;
    const EdgeCandidate* best = nullptr;
    for (const auto& f : found) {
        if (f.ex.value.lo() > lo) {
            lo = f.ex.value.lo();
            best = &f;
        }
    }
    double hi = lo;
    std::optional<Box> argmax;
    bool refined = true;
    for (const auto& f : found) {
        if (f.ex.value.hi() < lo) {
            continue;
        }
        hi = std::max(hi, f.ex.value.hi());
        const Box b = edge_to_box(f.edge, f.ex.argmax_x);
        argmax = argmax ? Box{hull(argmax->x, b.x), hull(argmax->y, b.y)} : b;
        refined = refined && f.ex.argmax_refined;
    }
    hi = std::min(hi, cl.ub);
    return {Interval(lo, std::max(lo, hi)), *argmax, location_of(best->edge), refined};
}

std::pair<Cell, Cell> split(const CellModel& model, const Cell& c)
{
    const auto [wx, wy] = model.extent(c);
    if (wx >= wy) {
        const double m = c.x.mid();
        return {Cell{Interval(c.x.lo(), m), c.s, c.piece}, Cell{Interval(m, c.x.hi()), c.s, c.piece}};
    }
    const double m = c.s.mid();
    return {Cell{c.x, Interval(c.s.lo(), m), c.piece}, Cell{c.x, Interval(m, c.s.hi()), c.piece}};
}

} // namespace

Extremum maximize_2d(ObjectiveId id, const OmegaRegion& region, const BnBConfig& cfg)
{
    cfg.validate();
    if (info(id).dimension != 2) {
        throw std::invalid_argument("maximize_2d: objective is one-dimensional");
    }
    const CellModel model(id);
    const auto& c = model.constants();

    std::priority_queue<Item, std::vector<Item>, ByBound> heap;
    std::vector<Item> parked;
    std::uint64_t seq = 0;
    Incumbent inc;

    // seed the incumbent from a coarse grid
    const kernels::GridMax seed = kernels::grid_max(id, 64, 64);
    try {
        const double v = eval(id, Interval(seed.x), Interval(seed.y)).lo();
        if (v > inc.lb) {
            inc.lb = v;
            inc.x = seed.x;
            inc.y = seed.y;
        }
    } catch (const DomainError&) {
    }

    auto consider = [&](const Cell& cell) {
        double ub = kInf;
        try {
            ub = model.upper_bound(cell);
        } catch (const DomainError&) {
            return; // the cell misses the radicand domain
        }
        const double xm = cell.x.mid();
        const double sm = cell.s.mid();
        inc.offer(model.sample(xm, sm, cell.piece));
        inc.offer(model.sample(cell.x.lo(), cell.s.lo(), cell.piece));
        inc.offer(model.sample(cell.x.lo(), cell.s.hi(), cell.piece));
        inc.offer(model.sample(cell.x.hi(), cell.s.lo(), cell.piece));
        inc.offer(model.sample(cell.x.hi(), cell.s.hi(), cell.piece));
        if (ub >= inc.lb) {
            heap.push({cell, ub, seq++});
        }
    };

    consider(Cell{model.outer_x(Piece::Low), Interval(0.0, 1.0), Piece::Low});
    consider(Cell{model.outer_x(Piece::High), Interval(0.0, 1.0), Piece::High});

    Extremum out;
    double parked_ub = -kInf;
    std::size_t iterations = 0;
    while (!heap.empty()) {
        const Item top = heap.top();
        const double upper = std::max(top.ub, parked_ub);
        if (upper - inc.lb <= cfg.tol_value) {
            break;
        }
        if (iterations >= cfg.max_boxes) {
            out.exhausted = true;
            break;
        }
        heap.pop();
        if (top.ub < inc.lb) {
            continue;
        }
        const auto [wx, wy] = model.extent(top.cell);
        if (std::max(wx, wy) <= cfg.tol_box) {
            parked.push_back(top);
            parked_ub = std::max(parked_ub, top.ub);
            continue;
        }
        ++iterations;
        const auto [first, second] = split(model, top.cell);
        consider(first);
        consider(second);
    }

    std::vector<Item> survivors = std::move(parked);
    while (!heap.empty()) {
        if (heap.top().ub >= inc.lb) {
            survivors.push_back(heap.top());
        }
        heap.pop();
    }
    std::sort(survivors.begin(), survivors.end(), [](const Item& p, const Item& q) {
        if (p.cell.x.lo() != q.cell.x.lo()) {
            return p.cell.x.lo() < q.cell.x.lo();
        }
        return p.seq < q.seq;
    });

    // cluster survivors whose images touch
    const std::size_t n = survivors.size();
    std::vector<Box> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        images[i] = Box{survivors[i].cell.x, model.y_of(survivors[i].cell)};
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n && images[j].x.lo() <= images[i].x.hi(); ++j) {
            if (overlaps(images[i].y, images[j].y)) {
                parent[find(j)] = find(i);
            }
        }
    }
    std::vector<Cluster> clusters;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = clusters.size();
            clusters.push_back(Cluster{images[i], -kInf});
        }
        Cluster& cl = clusters[slot[r]];
        const Cell& cell = survivors[i].cell;
        cl.hull = Box{hull(cl.hull.x, images[i].x), hull(cl.hull.y, images[i].y)};
        cl.ub = std::max(cl.ub, survivors[i].ub);
        cl.x_zero = cl.x_zero || cell.x.lo() <= 0.0;
        cl.x_a = cl.x_a || (cell.piece == Piece::High && cell.x.hi() >= c.a.lo());
        cl.y_zero = cl.y_zero || cell.s.lo() <= 0.0;
        cl.curve_low = cl.curve_low || (cell.piece == Piece::Low && cell.s.hi() >= 1.0);
        cl.curve_high = cl.curve_high || (cell.piece == Piece::High && cell.s.hi() >= 1.0);
    }

    std::vector<ClusterResult> results;
    double value_lo = inc.lb;
    for (const Cluster& cl : clusters) {
        results.push_back(refine_cluster(model, region, cl, cfg));
        if (results.back().excluded) {
            results.pop_back();
            continue;
        }
        value_lo = std::max(value_lo, results.back().value.lo());
    }
    double value_hi = value_lo;
    std::optional<Box> argmax;
    const ClusterResult* winner = nullptr;
    std::size_t candidates = 0;
    for (const ClusterResult& r : results) {
        if (r.value.hi() < value_lo) {
            continue;
        }
        value_hi = std::max(value_hi, r.value.hi());
        argmax = argmax ? Box{hull(argmax->x, r.argmax.x), hull(argmax->y, r.argmax.y)} : r.argmax;
        if (winner == nullptr || r.value.lo() > winner->value.lo()) {
            winner = &r;
        }
        ++candidates;
    }

    out.value = Interval(value_lo, value_hi);
    out.iterations = iterations;
    if (winner == nullptr) {
        out.argmax_x = Interval(inc.x);
        out.argmax_y = Interval(inc.y);
        out.kind = LocationKind::Interior;
    } else {
        out.argmax_x = argmax->x;
        out.argmax_y = argmax->y;
        out.kind = winner->kind;
        out.argmax_refined = candidates == 1 && winner->refined;
    }
    return out;
}

} // namespace gbound
