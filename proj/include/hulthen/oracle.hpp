#pragma once

// Independent numerical verification layer.  Depends only on quantum-number
// algebra and raw parameters -- none of the closed-form solver headers are
// included here, so no NU-derived code can leak into the oracle's results.

#include <vector>

namespace hulthen {

/// Centrifugal term handling: the closed-form-compatible Hulthen-square
/// replacement, or the exact inverse-square term.
enum class CentrifugalMode { HulthenSquare, ExactInverseSquare };

struct ShootConfig {
    double r_min = 1e-6;
    double r_max = 0.0;   // <= 0: choose max(40/theta_bracket, 40/delta)
    double tol = 1e-11;   // integrator relative tolerance
    double e_lo = 0.0;    // energy bracket; e_lo == e_hi: derive from the
    double e_hi = 0.0;    // positivity window of the decay exponent
    int max_bisect = 200;
    int scan_points = 240;
    CentrifugalMode centrifugal = CentrifugalMode::HulthenSquare;

    void validate() const;
};

/// Eigenvalue of the pseudospin radial equation
/// G'' = [ lt(lt+1) cf(r) + (mu - E + C) strength h(r) - (E^2 - mu^2 - C(mu+E)) ] G,
/// h = e^{-delta r}/(1-e^{-delta r}), by outward/inward shooting with node
/// gating: the returned E has a decaying tail, exactly n_r interior nodes and
/// a matching residual below tolerance.  Throws bracket_miss_error when the
/// bracket contains no matching energy, wrong_state_error on a node-count
/// mismatch at convergence.
double shoot_pseudospin(double mu, double delta, double strength, double c_const,
                        int n_r, int l_tilde, const ShootConfig& config);

/// Same machinery for the spin equation
/// F'' = [ l(l+1) cf(r) - (mu + E - C) strength h(r) + mu^2 - E^2 - C(mu-E) ] F.
double shoot_spin(double mu, double delta, double strength, double c_const,
                  int n_r, int l, const ShootConfig& config);

/// Non-relativistic limit: -(1/2mu) u'' + [ l(l+1) cf(r)/(2mu) - delta h(r) ] u = E u.
double shoot_schrodinger(double mu, double delta, int n_r, int l,
                         const ShootConfig& config);

/// Pointwise and integrated deviation of the Hulthen-square centrifugal
/// replacement from l(l+1)/r^2 over [r_min, r_max].
struct ApproximationErrorReport {
    double max_abs_dev = 0.0;         // max over the grid of |replacement - exact|
    double integrated_abs_dev = 0.0;  // trapezoid of |replacement - exact| dr
    double rel_dev_at_inv_delta = 0.0;// |replacement/exact - 1| at r = 1/delta
};

ApproximationErrorReport approximation_error(double delta, int l, double r_min,
                                             double r_max, int n_points = 4000);

} // namespace hulthen
