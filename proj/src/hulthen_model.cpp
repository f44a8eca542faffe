#include "hulthen/hulthen_model.hpp"

#include "hulthen/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace hulthen {

namespace {
constexpr double kSingularRelTol = 1e-12;  // |mu -+ E + C| threshold, relative to mu
} // namespace

void PhysicalParams::validate() const
{
    if (!(delta > 0.0)) throw std::invalid_argument("screening parameter delta must be > 0");
    if (!(mu > 0.0)) throw std::invalid_argument("mass mu must be > 0");
    if (!std::isfinite(strength) || !std::isfinite(c_const))
        throw std::invalid_argument("potential constants must be finite");
}

int dominant_momentum(const PhysicalParams& params, const QuantumState& state)
{
    const auto m = orbital_momenta(state.kappa);
    return params.symmetry == SymmetryKind::Pseudospin ? m.l_tilde : m.l;
}

AuxCombos aux_combos(const PhysicalParams& params, const QuantumState& state)
{
    params.validate();
    if (state.n_r < 0) throw std::invalid_argument("n_r must be >= 0");
    const int L = dominant_momentum(params, state);
    const double n = state.n_r;
    AuxCombos a;
    a.u_comb = (1.0 + 2.0 * n) * (L + 1.0) + n * n;
    a.y_comb = 2.0 * (n + L + 1.0);
    const double d2 = params.delta * params.delta;
    const double csign = params.symmetry == SymmetryKind::Pseudospin
                             ? (params.c_const + params.mu)
                             : (params.c_const - params.mu);
    a.t_comb = a.u_comb + csign * params.strength / d2;
    return a;
}

NuCoefficients nu_coefficients(const PhysicalParams& params, const QuantumState& state,
                               double energy)
{
    params.validate();
    const int L = dominant_momentum(params, state);
    const double d2 = params.delta * params.delta;
    const double mu = params.mu, C = params.c_const, E = energy;
    NuCoefficients nc;
    if (params.symmetry == SymmetryKind::Pseudospin) {
        nc.nu_sq = (mu - E + C) * params.strength / d2;
        nc.omega_sq = (E * E - mu * mu - C * mu - C * E) / d2;
        nc.a_coef = nc.omega_sq + nc.nu_sq - L * (L + 1.0);
        nc.b_coef = 2.0 * nc.omega_sq + nc.nu_sq;
    } else {
        nc.nu_sq = (mu + E - C) * params.strength / d2;
        nc.omega_sq = (E * E - mu * mu + C * mu - C * E) / d2;
        nc.a_coef = nc.omega_sq - nc.nu_sq - L * (L + 1.0);
        nc.b_coef = 2.0 * nc.omega_sq - nc.nu_sq;
    }
    return nc;
}

double theta_squared(const PhysicalParams& params, double energy)
{
    const double mu = params.mu, C = params.c_const, E = energy;
    return params.symmetry == SymmetryKind::Pseudospin
               ? C * (mu + E) + mu * mu - E * E
               : C * (E - mu) + mu * mu - E * E;
}

double signed_tail_exponent(const PhysicalParams& params, const QuantumState& state,
                            double energy)
{
    const auto a = aux_combos(params, state);
    const auto nc = nu_coefficients(params, state, energy);
    const double w = params.symmetry == SymmetryKind::Pseudospin
                         ? -(a.u_comb + nc.nu_sq) / a.y_comb
                         : (nc.nu_sq - a.u_comb) / a.y_comb;
    return params.delta * w;
}

std::pair<NuProblem, NuCoefficients>
to_nu_problem(const PhysicalParams& params, const QuantumState& state, double energy)
{
    const auto nc = nu_coefficients(params, state, energy);
    NuProblem pr;
    pr.sigma = Poly2{{0.0, 1.0, -1.0}};      // s(1-s)
    pr.tau_tilde = Poly2{{1.0, -1.0, 0.0}};  // 1-s
    pr.sigma_tilde = Poly2{{nc.omega_sq, -nc.b_coef, nc.a_coef}};
    return {pr, nc};
}

namespace {

bool root_is_valid(const PhysicalParams& params, double E, double theta_sq)
{
    if (!(theta_sq > 0.0)) return false;
    // Denominator of the first-order partner relation; covers the paper's
    // E != mu (pseudospin) / E != -mu (spin) caveats at C = 0.
    const double den = params.symmetry == SymmetryKind::Pseudospin
                           ? (params.mu - E + params.c_const)
                           : (params.mu + E - params.c_const);
    return std::abs(den) > kSingularRelTol * params.mu;
}

} // namespace

EnergyPair energy_closed_form(const PhysicalParams& params, const QuantumState& state)
{
    const auto a = aux_combos(params, state);
    const double d = params.delta, d2 = d * d;
    const double g = params.strength;
    const double mu = params.mu, C = params.c_const;
    const double Y = a.y_comb, T = a.t_comb;
    const double Y2 = Y * Y;

    // Explicit closed form of the two quadratic roots (pseudospin form; the
    // spin form differs by C -> -C and mu -> -mu inside the combinations).
    double e_lo, e_hi;
    const double lead = g * g + Y2 * d2;
    const double scale =
        std::max({std::abs(2.0 * g * T + C * Y2) * d2, std::abs(T * d / Y), 1.0});
    if (lead <= 1e-14 * scale) {
        // Degenerate quadratic: solve the linear remnant b E = cc.
        const double b = C + 2.0 * T * g / Y2;
        const double cmu = params.symmetry == SymmetryKind::Pseudospin ? -C * mu : C * mu;
        const double cc = (T * d / Y) * (T * d / Y) - mu * mu + cmu;
        if (b == 0.0) throw no_real_roots_error("energy equation fully degenerate");
        e_lo = e_hi = cc / b;
    } else {
        double num0, rad;
        if (params.symmetry == SymmetryKind::Pseudospin) {
            num0 = d2 * (2.0 * g * T + C * Y2);
            rad = 4.0 * d2 * (g * (C + mu) - d2 * T) * (g * mu + d2 * T) * Y2 +
                  d2 * d2 * (C + 2.0 * mu) * (C + 2.0 * mu) * Y2 * Y2;
        } else {
            num0 = d2 * (2.0 * g * T + C * Y2);
            rad = 4.0 * d2 * (g * (C - mu) - d2 * T) * (-g * mu + d2 * T) * Y2 +
                  d2 * d2 * (C - 2.0 * mu) * (C - 2.0 * mu) * Y2 * Y2;
        }
        if (rad < 0.0) throw no_real_roots_error("energy quadratic has complex roots");
        const double sq = std::sqrt(rad);
        e_lo = (num0 - sq) / (2.0 * lead);
        e_hi = (num0 + sq) / (2.0 * lead);
    }

    EnergyPair pair;
    pair.e_minus = e_lo;
    pair.e_plus = e_hi;
    pair.theta_sq_minus = theta_squared(params, e_lo);
    pair.theta_sq_plus = theta_squared(params, e_hi);
    pair.theta_minus = std::sqrt(std::max(pair.theta_sq_minus, 0.0));
    pair.theta_plus = std::sqrt(std::max(pair.theta_sq_plus, 0.0));
    pair.valid_minus = root_is_valid(params, e_lo, pair.theta_sq_minus);
    pair.valid_plus = root_is_valid(params, e_hi, pair.theta_sq_plus);
    return pair;
}

double select_bound_root(const EnergyPair& pair, const PhysicalParams& params,
                         RootSelectionNote* note)
{
    if (note) note->both_valid = pair.valid_plus && pair.valid_minus;
    if (!pair.valid_plus && !pair.valid_minus)
        throw no_bound_state_error("neither root passes the bound-state validity filter");
    const bool want_minus = params.symmetry == SymmetryKind::Pseudospin;
    if (want_minus) return pair.valid_minus ? pair.e_minus : pair.e_plus;
    return pair.valid_plus ? pair.e_plus : pair.e_minus;
}

std::pair<PhysicalParams, QuantumState>
duality_map(const PhysicalParams& params, const QuantumState& state)
{
    PhysicalParams mapped = params;
    mapped.strength = -params.strength;
    mapped.c_const = -params.c_const;
    mapped.symmetry = params.symmetry == SymmetryKind::Pseudospin ? SymmetryKind::Spin
                                                                  : SymmetryKind::Pseudospin;
    QuantumState ms = state;
    if (params.symmetry == SymmetryKind::Pseudospin)
        ms.kappa = (state.kappa == 1) ? -1 : state.kappa - 1;
    else
        ms.kappa = (state.kappa == -1) ? 1 : state.kappa + 1;
    return {mapped, ms};
}

double nonrel_energy(double mu, double delta, int n_r, int l)
{
    if (!(mu > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("nonrel_energy needs mu > 0 and delta > 0");
    if (n_r < 0 || l < 0) throw std::invalid_argument("nonrel_energy needs n_r, l >= 0");
    const double n = n_r;
    const double num = (1.0 + 2.0 * n) * (l + 1.0) * delta + n * n * delta - 2.0 * mu;
    const double den = 2.0 * (n + l + 1.0);
    const double q = num / den;
    return -q * q / (2.0 * mu);
}

} // namespace hulthen
