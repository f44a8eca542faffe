#pragma once

#include "hulthen/exec.hpp"
#include "hulthen/hulthen_model.hpp"
#include "hulthen/quantum_numbers.hpp"

#include <optional>
#include <vector>

namespace hulthen {

/// Parameter axis a sweep runs over.
enum class SweepAxisKind { Delta, Mu, CConst };

struct SweepAxis {
    SweepAxisKind kind = SweepAxisKind::Delta;
    double start = 0.0;
    double stop = 0.0;
    int steps = 2;

    /// Throws config_error unless bounds are finite and steps >= 2.
    void validate() const;
};

struct SweepRequest {
    PhysicalParams base;
    SweepAxis axis;
    std::vector<QuantumState> states;  // solver states
};

/// Per-point, per-state closed-form result; nullopt when the solver failed
/// at that point (complex roots, invalid parameters).
struct SweepPoint {
    double axis_value = 0.0;
    std::vector<std::optional<EnergyPair>> per_state;
};

/// Evaluates the closed form over the axis grid.  Points are independent;
/// the Parallel policy fans them out under OpenMP into preallocated slots,
/// so the assembled result is identical to the Serial reference.
std::vector<SweepPoint> evaluate_sweep(const SweepRequest& request,
                                       ExecPolicy policy = ExecPolicy::Serial);

} // namespace hulthen
