#pragma once

#include "hulthen/exec.hpp"
#include "hulthen/hulthen_model.hpp"
#include "hulthen/quantum_numbers.hpp"

#include <vector>

namespace hulthen {

/// Strictly increasing positive radial grid (fm).
struct RadialGrid {
    std::vector<double> r;

    static RadialGrid log_spaced(double r_min, double r_max, int n_points);
    static RadialGrid uniform(double r_min, double r_max, int n_points);

    /// Throws std::invalid_argument unless r[0] > 0 and strictly increasing.
    void validate() const;
};

/// Which radial component a sampled function represents.
enum class Component { LowerG, UpperF, NonRelR };

/// A sampled radial component with node count and L2 norm metadata.
/// For LowerG/UpperF the values are the reduced radial functions (the 1/r of
/// the full spinor is already divided out); NonRelR carries R(r) = u(r)/r and
/// its norm weight is r (so norm = integral of (r R)^2 dr).
struct RadialFunction {
    RadialGrid grid;
    std::vector<double> values;
    Component component = Component::LowerG;
    int node_count = 0;
    double norm = 0.0;
};

/// Default grid of the design: 4000 log-spaced points on
/// [1e-6, max(30/theta, 30/delta)] fm.
RadialGrid default_grid(double theta, double delta);

/// Strict sign changes of v, ignoring entries below 1e-12 * max|v|.
int count_nodes(const std::vector<double>& v);

/// Rescales f to unit norm (integral of (weight * value)^2 dr = 1, weight as
/// described on RadialFunction) and makes the first significant sample
/// positive.  Throws solver_error on zero or non-finite norm.
RadialFunction normalize(const RadialFunction& f);

/// Lower (dominant) pseudospin component
/// G = N e^{-theta r} (1 - e^{-delta r})^{lt+1} 2F1(-n, n+2(theta/delta+lt+1); 1+2 theta/delta; e^{-delta r}),
/// normalized to unit L2 norm.  energy must be a valid bound root
/// (theta^2 > 0), else not_bound_state_error.
RadialFunction lower_pseudospin(const PhysicalParams& params, const QuantumState& state,
                                double energy, const RadialGrid& grid,
                                ExecPolicy policy = ExecPolicy::Serial);

/// Upper pseudospin partner from the first-order relation
/// F = [(d/dr - kappa/r) G] / (mu - E + C), inheriting G's normalization.
/// Throws symmetry_singular_error when |mu - E + C| is below threshold.
RadialFunction upper_pseudospin(const PhysicalParams& params, const QuantumState& state,
                                double energy, const RadialGrid& grid,
                                ExecPolicy policy = ExecPolicy::Serial);

/// Upper (dominant) spin component, same profile with theta_2, l, and the
/// spin substitution; normalized to unit L2 norm.
RadialFunction upper_spin(const PhysicalParams& params, const QuantumState& state,
                          double energy, const RadialGrid& grid,
                          ExecPolicy policy = ExecPolicy::Serial);

/// Lower spin partner G = [(d/dr + kappa/r) F] / (mu + E - C).
RadialFunction lower_spin(const PhysicalParams& params, const QuantumState& state,
                          double energy, const RadialGrid& grid,
                          ExecPolicy policy = ExecPolicy::Serial);

/// Non-relativistic radial function
/// R = N r^-1 e^{-sqrt(-2 mu E) r} (1-e^{-delta r})^{l+1} P_n^{(2 sqrt(-2 mu E)/delta, 2l+1)}(1-2e^{-delta r})
/// with E from nonrel_energy; normalized so integral of (r R)^2 dr = 1.
/// Throws unbound_error when E >= 0.
RadialFunction nonrel_radial(double mu, double delta, int n_r, int l, const RadialGrid& grid,
                             ExecPolicy policy = ExecPolicy::Serial);

} // namespace hulthen
