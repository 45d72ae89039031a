#include "gbound/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>

namespace gbound {

void BnBConfig::validate() const
{
    if (!(tol_value > 0.0) || !(tol_box > 0.0) || max_boxes == 0) {
        throw std::invalid_argument("BnBConfig: tolerances and box budget must be positive");
    }
}

std::string_view to_string(LocationKind kind)
{
    switch (kind) {
    case LocationKind::Interior:
        return "INTERIOR";
    case LocationKind::XZero:
        return "X_ZERO";
    case LocationKind::XA:
        return "X_A";
    case LocationKind::YZero:
        return "Y_ZERO";
    case LocationKind::CurveLow:
        return "CURVE_LOW";
    case LocationKind::CurveHigh:
        return "CURVE_HIGH";
    case LocationKind::LowerEnd:
        return "LOWER_END";
    case LocationKind::UpperEnd:
        return "UPPER_END";
    }
    return "?";
}

LocationKind location_of(EdgeId edge)
{
    switch (edge) {
    case EdgeId::XZero:
        return LocationKind::XZero;
    case EdgeId::XA:
        return LocationKind::XA;
    case EdgeId::YZero:
        return LocationKind::YZero;
    case EdgeId::CurveLow:
        return LocationKind::CurveLow;
    case EdgeId::CurveHigh:
        return LocationKind::CurveHigh;
    }
    return LocationKind::Interior;
}

std::string_view to_string(RootCount count)
{
    switch (count) {
    case RootCount::Unique:
        return "unique";
    case RootCount::Multiple:
        return "multiple";
    case RootCount::None:
        return "none";
    case RootCount::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

namespace {

struct Item {
    Interval t;
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

std::optional<Interval> try_enclose(const Function1D& f, const Interval& t)
{
    try {
        return f.enclose(t);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

std::optional<Interval> try_derivative(const Function1D& f, const Interval& t)
{
    if (!f.has_derivative()) {
        return std::nullopt;
    }
    try {
        Interval d = f.derivative(t);
        if (!d.is_bounded()) {
            return std::nullopt;
        }
        return d;
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

/// Upper bound of f over t; nullopt when t misses the domain.
std::optional<double> upper_bound(const Function1D& f, const Interval& t)
{
    const auto e = try_enclose(f, t);
    if (!e) {
        return std::nullopt;
    }
    double ub = e->hi();
    if (t.is_point()) {
        return ub;
    }
    if (const auto d = try_derivative(f, t)) {
        const double m = t.mid();
        if (const auto fm = try_enclose(f, Interval(m))) {
            ub = std::min(ub, (*fm + *d * (t - Interval(m))).hi());
        }
        // monotone: the maximum sits at an end of t
        const std::optional<Interval> end = d->lo() > 0.0   ? try_enclose(f, Interval(t.hi()))
                                            : d->hi() < 0.0 ? try_enclose(f, Interval(t.lo()))
                                                            : std::nullopt;
        if (end) {
            ub = std::min(ub, end->hi());
        }
    }
    return ub;
}

struct Incumbent {
    double lb = -kInf;
    double at = 0.0;

    void offer(const Function1D& f, double t)
    {
        if (const auto e = try_enclose(f, Interval(t))) {
            if (e->lo() > lb) {
                lb = e->lo();
                at = t;
            }
        }
    }
};

struct ClusterResult {
    Interval value;
    Interval argmax;
    LocationKind kind;
    bool refined;
};

int derivative_sign(const Function1D& f, double t)
{
    const auto d = try_derivative(f, Interval(t));
    if (!d) {
        return 0;
    }
    return d->lo() > 0.0 ? 1 : (d->hi() < 0.0 ? -1 : 0);
}

/// Tightens a cluster of surviving intervals: a monotone cluster at a domain
/// end has its maximum at that end; a strictly concave cluster with a
/// derivative sign change holds a single critical point, located by bisection
/// on certified derivative signs.
ClusterResult refine_cluster(const Function1D& f, const Interval& hull, double cluster_ub, const Interval& lo,
                             const Interval& hi)
{
    const double in_lo = std::max(hull.lo(), lo.hi());
    const double in_hi = std::min(hull.hi(), hi.lo());
    const bool at_lo = hull.lo() <= lo.hi();
    const bool at_hi = hull.hi() >= hi.lo();
    LocationKind fallback_kind = at_hi ? LocationKind::UpperEnd : (at_lo ? LocationKind::LowerEnd : LocationKind::Interior);
    ClusterResult plain{Interval(-kInf, cluster_ub), hull, fallback_kind, false};
    if (!f.has_derivative() || !(in_lo <= in_hi)) {
        return plain;
    }

    auto finish = [&](const Interval& argmax, LocationKind kind) -> ClusterResult {
        const auto v = try_enclose(f, argmax);
        if (!v) {
            return plain;
        }
        const double vhi = std::min(v->hi(), cluster_ub);
        return {Interval(v->lo(), std::max(vhi, v->lo())), argmax, kind, true};
    };

    const auto d = try_derivative(f, hull);
    if (d && d->lo() > 0.0 && at_hi) {
        return finish(hi, LocationKind::UpperEnd);
    }
    if (d && d->hi() < 0.0 && at_lo) {
        return finish(lo, LocationKind::LowerEnd);
    }
    if (!f.has_second_derivative()) {
        return plain;
    }
    Interval curvature;
    try {
        curvature = f.second_derivative(hull);
    } catch (const DomainError&) {
        return plain;
    }
    if (!(curvature.hi() < 0.0)) {
        return plain;
    }
    const int sl = derivative_sign(f, in_lo);
    const int sr = derivative_sign(f, in_hi);
    if (sr > 0 && at_hi) {
        return finish(hi, LocationKind::UpperEnd);
    }
    if (sl < 0 && at_lo) {
        return finish(lo, LocationKind::LowerEnd);
    }
    if (!(sl > 0 && sr < 0)) {
        return plain;
    }
    double l = in_lo;
    double r = in_hi;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (l + r);
        if (m <= l || m >= r) {
            break;
        }
        const int sm = derivative_sign(f, m);
        if (sm > 0) {
            l = m;
        } else if (sm < 0) {
            r = m;
        } else {
            break;
        }
    }
    return finish(Interval(l, r), LocationKind::Interior);
}

} // namespace

Extremum maximize_1d(const Function1D& f, double lo, double hi, const BnBConfig& cfg)
{
    return maximize_1d(f, Interval(lo), Interval(hi), cfg);
}

Extremum maximize_1d(const Function1D& f, const Interval& lo, const Interval& hi, const BnBConfig& cfg)
{
    cfg.validate();
    if (!(lo.hi() <= hi.lo())) {
        throw std::invalid_argument("maximize_1d: need lo < hi");
    }
    const double inner_lo = lo.hi();
    const double inner_hi = hi.lo();

    std::priority_queue<Item, std::vector<Item>, ByBound> heap;
    std::vector<Item> parked;
    std::uint64_t seq = 0;
    Incumbent inc;

    auto consider = [&](const Interval& t) {
        const auto ub = upper_bound(f, t);
        if (!ub) {
            return;
        }
        const double a = std::clamp(t.lo(), inner_lo, inner_hi);
        const double b = std::clamp(t.hi(), inner_lo, inner_hi);
        inc.offer(f, std::clamp(t.mid(), inner_lo, inner_hi));
        inc.offer(f, a);
        inc.offer(f, b);
        if (*ub >= inc.lb) {
            heap.push({t, *ub, seq++});
        }
    };

    consider(Interval(lo.lo(), hi.hi()));
    if (inc.lb == -kInf) {
        throw std::invalid_argument("maximize_1d: function undefined on the interval");
    }

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
        if (top.t.width() <= cfg.tol_box) {
            parked.push_back(top);
            parked_ub = std::max(parked_ub, top.ub);
            continue;
        }
        ++iterations;
        const double m = top.t.mid();
        consider(Interval(top.t.lo(), m));
        consider(Interval(m, top.t.hi()));
    }

    std::vector<Item> survivors = std::move(parked);
    while (!heap.empty()) {
        if (heap.top().ub >= inc.lb) {
            survivors.push_back(heap.top());
        }
        heap.pop();
    }
    std::sort(survivors.begin(), survivors.end(), [](const Item& p, const Item& q) { return p.t.lo() < q.t.lo(); });

    // group touching intervals
    struct Cluster {
        Interval hull;
        double ub;
    };
    std::vector<Cluster> clusters;
    for (const Item& s : survivors) {
        if (!clusters.empty() && s.t.lo() <= clusters.back().hull.hi()) {
            clusters.back().hull = hull(clusters.back().hull, s.t);
            clusters.back().ub = std::max(clusters.back().ub, s.ub);
        } else {
            clusters.push_back({s.t, s.ub});
        }
    }

    std::vector<ClusterResult> results;
    double value_lo = inc.lb;
    for (const Cluster& c : clusters) {
        results.push_back(refine_cluster(f, c.hull, c.ub, lo, hi));
        value_lo = std::max(value_lo, results.back().value.lo());
    }
    double value_hi = value_lo;
    std::optional<Interval> argmax;
    const ClusterResult* winner = nullptr;
    std::size_t candidates = 0;
    for (const ClusterResult& r : results) {
        if (r.value.hi() < value_lo) {
            continue;
        }
        value_hi = std::max(value_hi, r.value.hi());
        argmax = argmax ? hull(*argmax, r.argmax) : r.argmax;
        winner = &r;
        ++candidates;
    }

    out.value = Interval(value_lo, value_hi);
    out.iterations = iterations;
    if (winner == nullptr) {
        out.argmax_x = Interval(inc.at);
        out.kind = LocationKind::Interior;
    } else {
        out.argmax_x = *argmax;
        out.kind = winner->kind;
        out.argmax_refined = candidates == 1 && winner->refined;
    }
    out.argmax_y = Interval(0.0);
    return out;
}

Interval find_root_1d(const Function1D& residual, double lo, double hi, double tol)
{
    if (!(lo < hi)) {
        throw std::invalid_argument("find_root_1d: need lo < hi");
    }
    const auto& g = residual.value;
    double l = lo;
    double r = hi;
    double gl = g(l);
    double gr = g(r);
    if (gl == 0.0) {
        return Interval(l);
    }
    if (gr == 0.0) {
        return Interval(r);
    }
    if (std::signbit(gl) == std::signbit(gr)) {
        constexpr int kScan = 1000;
        bool found = false;
        double prev_t = lo;
        double prev_g = gl;
        for (int i = 1; i <= kScan; ++i) {
            const double t = i == kScan ? hi : lo + (hi - lo) * i / kScan;
            const double gt = g(t);
            if (gt == 0.0) {
                return Interval(t);
            }
            if (std::signbit(gt) != std::signbit(prev_g)) {
                l = prev_t;
                gl = prev_g;
                r = t;
                gr = gt;
                found = true;
                break;
            }
            prev_t = t;
            prev_g = gt;
        }
        if (!found) {
            throw NoBracketError("find_root_1d: no sign change on the scan grid");
        }
    }

    const bool newton = static_cast<bool>(residual.derivative_value);
    auto shrink = [&](double t) -> bool {
        const double gt = g(t);
        if (gt == 0.0) {
            l = r = t;
            return true;
        }
        if (std::signbit(gt) == std::signbit(gl)) {
            l = t;
            gl = gt;
        } else {
            r = t;
            gr = gt;
        }
        return false;
    };
    for (int it = 0; it < 400 && r - l > tol; ++it) {
        const double m = 0.5 * (l + r);
        if (m <= l || m >= r) {
            break;
        }
        if (newton) {
            // Newton from the end with the smaller residual; kept only inside the bracket
            const double t0 = std::fabs(gl) < std::fabs(gr) ? l : r;
            const double dg = residual.derivative_value(t0);
            if (dg != 0.0 && std::isfinite(dg)) {
                const double t1 = t0 - g(t0) / dg;
                if (t1 > l && t1 < r && shrink(t1)) {
                    break;
                }
            }
        }
        if (m > l && m < r && shrink(m)) {
            break;
        }
    }
    return Interval(l, r);
}

UniquenessResult verify_uniqueness_1d(const Function1D& residual, double lo, double hi)
{
    if (!(lo < hi)) {
        throw std::invalid_argument("verify_uniqueness_1d: need lo < hi");
    }
    const double min_width = 1e-12 * std::max(1.0, hi - lo);
    constexpr std::size_t kBudget = 1'000'000;

    UniquenessResult out;
    std::vector<Interval> ambiguous;
    std::vector<Interval> stack{Interval(lo, hi)};
    std::size_t visited = 0;
    bool over_budget = false;

    while (!stack.empty()) {
        const Interval t = stack.back();
        stack.pop_back();
        if (++visited > kBudget) {
            over_budget = true;
            break;
        }
        const auto e = try_enclose(residual, t);
        if (!e || !e->contains(0.0)) {
            continue;
        }
        if (const auto d = try_derivative(residual, t); d && d->excludes_zero()) {
            const auto el = try_enclose(residual, Interval(t.lo()));
            const auto eh = try_enclose(residual, Interval(t.hi()));
            if (el && eh) {
                const bool same_sign = (el->lo() > 0.0 && eh->lo() > 0.0) || (el->hi() < 0.0 && eh->hi() < 0.0);
                const bool opposite = (el->lo() > 0.0 && eh->hi() < 0.0) || (el->hi() < 0.0 && eh->lo() > 0.0);
                if (same_sign) {
                    continue;
                }
                if (opposite) {
                    out.roots.push_back(t);
                    continue;
                }
            }
        }
        if (t.width() <= min_width) {
            ambiguous.push_back(t);
            continue;
        }
        const double m = t.mid();
        stack.push_back(Interval(m, t.hi()));
        stack.push_back(Interval(t.lo(), m));
    }

    // a root on a split point shows up in two neighbouring pieces
    std::sort(ambiguous.begin(), ambiguous.end(), [](const Interval& p, const Interval& q) { return p.lo() < q.lo(); });
    std::vector<Interval> merged;
    for (const Interval& t : ambiguous) {
        if (!merged.empty() && t.lo() <= merged.back().hi()) {
            merged.back() = hull(merged.back(), t);
        } else {
            merged.push_back(t);
        }
    }
    out.ambiguous = merged.size();

    if (over_budget) {
        out.status = out.roots.size() >= 2 ? RootCount::Multiple : RootCount::Inconclusive;
    } else if (out.roots.size() >= 2) {
        out.status = RootCount::Multiple;
    } else if (out.roots.size() == 1 && out.ambiguous == 0) {
        out.status = RootCount::Unique;
    } else if (out.roots.empty() && out.ambiguous == 0) {
        out.status = RootCount::None;
    } else {
        out.status = RootCount::Inconclusive;
    }
    return out;
}

} // namespace gbound
