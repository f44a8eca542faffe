#pragma once

namespace hulthen {

/// Kernel execution policy: Serial is the reference path kept for testing,
/// Parallel runs the same arithmetic per element under OpenMP.  Outputs are
/// bitwise identical because no cross-element reductions are parallelized.
enum class ExecPolicy { Serial, Parallel };

} // namespace hulthen
