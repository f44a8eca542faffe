#include "hulthen/wavefun.hpp"

#include "hulthen/errors.hpp"
#include "hulthen/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hulthen {

RadialGrid RadialGrid::log_spaced(double r_min, double r_max, int n_points)
{
    if (!(r_min > 0.0) || !(r_max > r_min) || n_points < 2)
        throw std::invalid_argument("log_spaced grid needs 0 < r_min < r_max, n >= 2");
    RadialGrid g;
    g.r.resize(n_points);
    const double lmin = std::log(r_min), lmax = std::log(r_max);
    for (int i = 0; i < n_points; ++i)
        g.r[i] = std::exp(lmin + (lmax - lmin) * i / (n_points - 1));
    g.r.front() = r_min;
    g.r.back() = r_max;
    return g;
}

RadialGrid RadialGrid::uniform(double r_min, double r_max, int n_points)
{
    if (!(r_min > 0.0) || !(r_max > r_min) || n_points < 2)
        throw std::invalid_argument("uniform grid needs 0 < r_min < r_max, n >= 2");
    RadialGrid g;
    g.r.resize(n_points);
    const double h = (r_max - r_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) g.r[i] = r_min + h * i;
    return g;
}

void RadialGrid::validate() const
{
    if (r.size() < 2 || !(r.front() > 0.0))
        throw std::invalid_argument("radial grid needs r[0] > 0 and >= 2 points");
    for (size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1]))
            throw std::invalid_argument("radial grid must be strictly increasing");
}

RadialGrid default_grid(double theta, double delta)
{
    const double r_max = std::max(30.0 / std::max(theta, 1e-300), 30.0 / delta);
    return RadialGrid::log_spaced(1e-6, r_max, 4000);
}

int count_nodes(const std::vector<double>& v)
{
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    const double floor = 1e-12 * vmax;
    int nodes = 0;
    double last = 0.0;
    for (double x : v) {
        if (std::abs(x) <= floor) continue;
        if (last != 0.0 && std::signbit(x) != std::signbit(last)) ++nodes;
        last = x;
    }
    return nodes;
}

namespace {

double norm_weight(Component c, double r)
{
    return c == Component::NonRelR ? r : 1.0;
}

/// Trapezoid integral of (weight * value)^2 over the grid; serial by design
/// so the accumulation order never depends on the execution policy.
double squared_norm(const RadialGrid& g, const std::vector<double>& v, Component comp)
{
    double acc = 0.0;
    for (size_t i = 1; i < g.r.size(); ++i) {
        const double a = norm_weight(comp, g.r[i - 1]) * v[i - 1];
        const double b = norm_weight(comp, g.r[i]) * v[i];
        acc += 0.5 * (a * a + b * b) * (g.r[i] - g.r[i - 1]);
    }
    return acc;
}

double sign_fix(const std::vector<double>& v)
{
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    for (double x : v)
        if (std::abs(x) > 1e-6 * vmax) return x < 0.0 ? -1.0 : 1.0;
    return 1.0;
}

struct ProfileCtx {
    double theta = 0.0;   // decay exponent
    double w = 0.0;       // theta / delta
    double b2f1 = 0.0;    // n + 2(w + L + 1)
    double c2f1 = 0.0;    // 1 + 2w
    double denom = 0.0;   // mu - E + C (pseudo) or mu + E - C (spin)
    int L = 0;            // l_tilde or l
    int n = 0;
};

ProfileCtx make_ctx(const PhysicalParams& params, const QuantumState& state, double energy)
{
    params.validate();
    if (state.n_r < 0) throw std::invalid_argument("n_r must be >= 0");
    const double th2 = theta_squared(params, energy);
    if (!(th2 > 0.0))
        throw not_bound_state_error("energy is not a bound root (theta^2 <= 0)");
    ProfileCtx ctx;
    ctx.theta = std::sqrt(th2);
    ctx.w = ctx.theta / params.delta;
    ctx.L = dominant_momentum(params, state);
    ctx.n = state.n_r;
    ctx.b2f1 = ctx.n + 2.0 * (ctx.w + ctx.L + 1.0);
    ctx.c2f1 = 1.0 + 2.0 * ctx.w;
    ctx.denom = params.symmetry == SymmetryKind::Pseudospin
                    ? params.mu - energy + params.c_const
                    : params.mu + energy - params.c_const;
    return ctx;
}

template <typename PointFn>
void sample(std::vector<double>& out, const RadialGrid& grid, ExecPolicy policy, PointFn fn)
{
    const int npts = static_cast<int>(grid.r.size());
    out.resize(npts);
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < npts; ++i) out[i] = fn(grid.r[i]);
    } else {
        for (int i = 0; i < npts; ++i) out[i] = fn(grid.r[i]);
    }
}

/// Dominant profile e^{-theta r} (1-s)^{L+1} 2F1(-n, b; c; s) at one radius.
double dominant_point(const ProfileCtx& ctx, double delta, double r)
{
    const double s = std::exp(-delta * r);
    return std::exp(-ctx.theta * r) * std::pow(1.0 - s, ctx.L + 1.0) *
           hyp2f1_terminating(ctx.n, ctx.b2f1, ctx.c2f1, s);
}

/// Partner profile [(d/dr -+ kappa/r) G]/denom expanded analytically;
/// kappa_sign = -1 reproduces the pseudospin bracket (-kappa/r), +1 the spin one.
double partner_point(const ProfileCtx& ctx, double delta, int kappa, double kappa_sign,
                     double r)
{
    const double s = std::exp(-delta * r);
    const double tail = std::exp(-ctx.theta * r) * std::pow(1.0 - s, ctx.L + 1.0);
    const double bracket =
        (ctx.L + 1.0) * delta * s / (1.0 - s) - ctx.theta + kappa_sign * kappa / r;
    const double first = tail * bracket * hyp2f1_terminating(ctx.n, ctx.b2f1, ctx.c2f1, s);
    double second = 0.0;
    if (ctx.n > 0) {
        second = ctx.n * ctx.b2f1 * delta / ctx.c2f1 * s * tail *
                 hyp2f1_terminating(ctx.n - 1, ctx.b2f1 + 1.0, ctx.c2f1 + 1.0, s);
    }
    return (first + second) / ctx.denom;
}

RadialFunction finish(RadialFunction f)
{
    f.node_count = count_nodes(f.values);
    f.norm = squared_norm(f.grid, f.values, f.component);
    return f;
}

RadialFunction dominant_profile(const PhysicalParams& params, const QuantumState& state,
                                double energy, const RadialGrid& grid, ExecPolicy policy,
                                Component comp)
{
    grid.validate();
    const auto ctx = make_ctx(params, state, energy);
    RadialFunction f;
    f.grid = grid;
    f.component = comp;
    sample(f.values, grid, policy,
           [&](double r) { return dominant_point(ctx, params.delta, r); });
    return normalize(finish(std::move(f)));
}

RadialFunction partner_profile(const PhysicalParams& params, const QuantumState& state,
                               double energy, const RadialGrid& grid, ExecPolicy policy,
                               Component comp, double kappa_sign)
{
    grid.validate();
    const auto ctx = make_ctx(params, state, energy);
    if (std::abs(ctx.denom) < 1e-12 * params.mu)
        throw symmetry_singular_error("first-order pair denominator vanishes");

    // Partner inherits the dominant component's normalization scale and sign.
    RadialFunction dom;
    dom.grid = grid;
    dom.component = comp == Component::UpperF ? Component::LowerG : Component::UpperF;
    sample(dom.values, grid, policy,
           [&](double r) { return dominant_point(ctx, params.delta, r); });
    const double n2 = squared_norm(grid, dom.values, dom.component);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw solver_error("dominant component has zero or non-finite norm");
    const double scale = sign_fix(dom.values) / std::sqrt(n2);

    RadialFunction f;
    f.grid = grid;
    f.component = comp;
    sample(f.values, grid, policy, [&](double r) {
        return scale * partner_point(ctx, params.delta, state.kappa, kappa_sign, r);
    });
    return finish(std::move(f));
}

} // namespace

RadialFunction normalize(const RadialFunction& f)
{
    f.grid.validate();
    if (f.values.size() != f.grid.r.size())
        throw std::invalid_argument("values/grid size mismatch");
    const double n2 = squared_norm(f.grid, f.values, f.component);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw solver_error("cannot normalize: zero or non-finite norm");
    RadialFunction out = f;
    const double scale = sign_fix(f.values) / std::sqrt(n2);
    for (auto& v : out.values) v *= scale;
    out.node_count = count_nodes(out.values);
    out.norm = 1.0;
    return out;
}

RadialFunction lower_pseudospin(const PhysicalParams& params, const QuantumState& state,
                                double energy, const RadialGrid& grid, ExecPolicy policy)
{
    if (params.symmetry != SymmetryKind::Pseudospin)
        throw std::invalid_argument("lower_pseudospin needs pseudospin parameters");
    return dominant_profile(params, state, energy, grid, policy, Component::LowerG);
}

RadialFunction upper_pseudospin(const PhysicalParams& params, const QuantumState& state,
                                double energy, const RadialGrid& grid, ExecPolicy policy)
{
    if (params.symmetry != SymmetryKind::Pseudospin)
        throw std::invalid_argument("upper_pseudospin needs pseudospin parameters");
    return partner_profile(params, state, energy, grid, policy, Component::UpperF, -1.0);
}

RadialFunction upper_spin(const PhysicalParams& params, const QuantumState& state,
                          double energy, const RadialGrid& grid, ExecPolicy policy)
{
    if (params.symmetry != SymmetryKind::Spin)
        throw std::invalid_argument("upper_spin needs spin parameters");
    return dominant_profile(params, state, energy, grid, policy, Component::UpperF);
}

RadialFunction lower_spin(const PhysicalParams& params, const QuantumState& state,
                          double energy, const RadialGrid& grid, ExecPolicy policy)
{
    if (params.symmetry != SymmetryKind::Spin)
        throw std::invalid_argument("lower_spin needs spin parameters");
    return partner_profile(params, state, energy, grid, policy, Component::LowerG, +1.0);
}

RadialFunction nonrel_radial(double mu, double delta, int n_r, int l, const RadialGrid& grid,
                             ExecPolicy policy)
{
    grid.validate();
    const double E = nonrel_energy(mu, delta, n_r, l);
    if (!(E < 0.0)) throw unbound_error("non-relativistic energy is not negative");
    const double b = std::sqrt(-2.0 * mu * E);
    RadialFunction f;
    f.grid = grid;
    f.component = Component::NonRelR;
    sample(f.values, grid, policy, [&](double r) {
        const double s = std::exp(-delta * r);
        return std::exp(-b * r) * std::pow(1.0 - s, l + 1.0) *
               jacobi_p(n_r, 2.0 * b / delta, 2.0 * l + 1.0, 1.0 - 2.0 * s) / r;
    });
    return normalize(finish(std::move(f)));
}

} // namespace hulthen
