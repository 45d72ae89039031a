#include "gbound/optimizer.hpp"

namespace gbound {

EdgeFunction edge_function(ObjectiveId id, EdgeId edge)
{
    const auto& c = DomainConstants::get();
    EdgeFunction out{restrict_to_edge(id, edge).as_function(), Interval(0.0), Interval(0.0)};
    switch (edge) {
    case EdgeId::XZero:
        out.hi = Interval(0.5);
        break;
    case EdgeId::XA:
        out.hi = c.d;
        break;
    case EdgeId::YZero:
        out.hi = c.a;
        break;
    case EdgeId::CurveLow:
        out.hi = c.b;
        break;
    case EdgeId::CurveHigh:
        out.lo = c.b;
        out.hi = c.a;
        break;
    }
    return out;
}

std::array<EdgeMaximum, 5> edge_maxima(ObjectiveId id, const BnBConfig& cfg)
{
    if (info(id).dimension != 2) {
        throw std::invalid_argument("edge_maxima: objective is one-dimensional");
    }
    std::array<EdgeMaximum, 5> out{};
    for (std::size_t i = 0; i < kAllEdges.size(); ++i) {
        const EdgeId e = kAllEdges[i];
        const EdgeFunction ef = edge_function(id, e);
        out[i] = {e, maximize_1d(ef.f, ef.lo, ef.hi, cfg)};
    }
    return out;
}

} // namespace gbound
