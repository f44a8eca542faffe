#pragma once

#include "hulthen/nu_engine.hpp"
#include "hulthen/quantum_numbers.hpp"

#include <utility>

namespace hulthen {

/// Physical constants of the Dirac-Hulthen model, all in fm^-1 (hbar = c = 1).
/// strength is Delta_0 in the pseudospin limit and Sigma_0 in the spin limit.
struct PhysicalParams {
    double mu = 5.0;
    double delta = 0.25;
    double strength = 3.4;
    double c_const = -4.9;
    SymmetryKind symmetry = SymmetryKind::Pseudospin;

    /// Throws std::invalid_argument unless delta > 0 and mu > 0.
    void validate() const;
};

/// Substitution parameters of the s = e^{-delta r} reduction.
struct NuCoefficients {
    double nu_sq = 0.0;     // nu1^2 or nu2^2
    double omega_sq = 0.0;  // omega1^2 or omega2^2
    double a_coef = 0.0;    // A1 or A2
    double b_coef = 0.0;    // B1 or B2
};

/// Quantum-number combinations of the energy quadratic: (U, Y, T) in the
/// pseudospin limit, (W, Z, S) in the spin limit (same structure).
struct AuxCombos {
    double u_comb = 0.0;  // (1+2n)(L+1) + n^2,  L = l_tilde or l
    double y_comb = 0.0;  // 2(n + L + 1)
    double t_comb = 0.0;  // u_comb + (C +- mu) strength / delta^2
};

/// Both roots of the energy quadratic with per-root diagnostics.
/// theta_sq_* is the signed Eq.-style radicand; theta_* = sqrt(max(radicand, 0)).
struct EnergyPair {
    double e_plus = 0.0;
    double e_minus = 0.0;
    double theta_plus = 0.0;
    double theta_minus = 0.0;
    double theta_sq_plus = 0.0;
    double theta_sq_minus = 0.0;
    bool valid_plus = false;
    bool valid_minus = false;
};

/// Extra note from root selection (two valid roots is the common case;
/// the calibrated branch is returned and the ambiguity recorded here).
struct RootSelectionNote {
    bool both_valid = false;
};

/// Momentum the quantized component carries: l_tilde (pseudospin) or l (spin).
int dominant_momentum(const PhysicalParams& params, const QuantumState& state);

/// (U, Y, T) or (W, Z, S) for this state.
AuxCombos aux_combos(const PhysicalParams& params, const QuantumState& state);

/// Substitution coefficients at a trial energy.
NuCoefficients nu_coefficients(const PhysicalParams& params, const QuantumState& state,
                               double energy);

/// Decay-exponent radicand theta^2: C(mu+E) + mu^2 - E^2 (pseudospin) or
/// C(E-mu) + mu^2 - E^2 (spin).  Positive for a valid bound root.
double theta_squared(const PhysicalParams& params, double energy);

/// Signed quantization exponent theta_signed = -delta (U + nu^2)/Y (pseudospin)
/// or +delta (nu^2 - W)/Z (spin).  At a closed-form root its magnitude equals
/// sqrt(theta_squared); the terminating solution decays (is normalizable) only
/// when it is positive.  Diagnostic for sweeps and the oracle tests.
double signed_tail_exponent(const PhysicalParams& params, const QuantumState& state,
                            double energy);

/// NU polynomials sigma = s(1-s), tau_tilde = 1-s,
/// sigma_tilde = A s^2 - B s + omega^2 at a trial energy.
std::pair<NuProblem, NuCoefficients>
to_nu_problem(const PhysicalParams& params, const QuantumState& state, double energy);

/// Both roots of the closed-form energy quadratic via the explicit
/// plus/minus formula, with validity flags.  Throws no_real_roots_error when
/// the radicand is negative; a degenerate leading coefficient falls back to
/// the linear remnant.
EnergyPair energy_closed_form(const PhysicalParams& params, const QuantumState& state);

/// The calibrated bound branch: E- for pseudospin, E+ for spin (fixed once
/// against the 32 reference energies and the duality mirror).  Falls back to
/// the other root when only that one is valid; throws no_bound_state_error
/// when neither is.
double select_bound_root(const EnergyPair& pair, const PhysicalParams& params,
                         RootSelectionNote* note = nullptr);

/// Parameter/state tuple in the opposite symmetry whose spectrum is the
/// sign-mirrored spectrum of the input: strength -> -strength, C -> -C,
/// symmetry flipped, kappa mapped so the dominant momentum is preserved
/// (kappa -> kappa-1 except kappa = 1 -> -1, and the inverse on the way back).
/// Involutive on parameters and states.
std::pair<PhysicalParams, QuantumState>
duality_map(const PhysicalParams& params, const QuantumState& state);

/// Non-relativistic limit (C = 0, Sigma_0 = delta):
/// E = -(1/2 mu) [((1+2n)(l+1) delta + n^2 delta - 2 mu) / (2(n+l+1))]^2.
double nonrel_energy(double mu, double delta, int n_r, int l);

} // namespace hulthen
