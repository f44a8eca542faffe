#include "hulthen/sweep.hpp"

#include "hulthen/errors.hpp"

#include <cmath>

namespace hulthen {

void SweepAxis::validate() const
{
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw config_error("sweep bounds must be finite");
    if (steps < 2) throw config_error("sweep needs steps >= 2");
}

namespace {

PhysicalParams at_axis(const PhysicalParams& base, SweepAxisKind kind, double value)
{
    PhysicalParams p = base;
    switch (kind) {
    case SweepAxisKind::Delta: p.delta = value; break;
    case SweepAxisKind::Mu: p.mu = value; break;
    case SweepAxisKind::CConst: p.c_const = value; break;
    }
    return p;
}

SweepPoint eval_point(const SweepRequest& req, double value)
{
    SweepPoint pt;
    pt.axis_value = value;
    pt.per_state.resize(req.states.size());
    const PhysicalParams p = at_axis(req.base, req.axis.kind, value);
    for (size_t s = 0; s < req.states.size(); ++s) {
        try {
            pt.per_state[s] = energy_closed_form(p, req.states[s]);
        } catch (const std::exception&) {
            pt.per_state[s] = std::nullopt;  // null cells, never abort the sweep
        }
    }
    return pt;
}

} // namespace

std::vector<SweepPoint> evaluate_sweep(const SweepRequest& request, ExecPolicy policy)
{
    request.axis.validate();
    const int n = request.axis.steps;
    std::vector<SweepPoint> out(n);
    auto value_at = [&](int i) {
        return request.axis.start +
               (request.axis.stop - request.axis.start) * i / double(n - 1);
    };
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) out[i] = eval_point(request, value_at(i));
    } else {
        for (int i = 0; i < n; ++i) out[i] = eval_point(request, value_at(i));
    }
    return out;
}

} // namespace hulthen
