#include "hulthen/oracle.hpp"

#include "hulthen/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace hulthen {

void ShootConfig::validate() const
{
    if (!(r_min > 0.0)) throw std::invalid_argument("shoot config needs r_min > 0");
    if (r_max > 0.0 && !(r_max > r_min))
        throw std::invalid_argument("shoot config needs r_max > r_min");
    if (!(tol > 0.0)) throw std::invalid_argument("shoot config needs tol > 0");
    if (e_lo != e_hi && !(e_lo < e_hi))
        throw std::invalid_argument("shoot config needs e_lo < e_hi");
    if (max_bisect < 8 || scan_points < 8)
        throw std::invalid_argument("shoot config iteration counts too small");
}

namespace {

/// One radial eigenproblem in the normal form u'' = Q(r; E) u.
struct RadialProblem {
    std::function<double(double r, double E)> Q;
    std::function<double(double E)> theta_sq;   // squared asymptotic decay rate
    std::function<double(double E)> frobenius_c1;
    int p = 1;                                  // u ~ r^p near the origin
    double window_lo = 0.0, window_hi = 0.0;    // where theta_sq > 0
    double screening_length = 1.0;              // 1/delta
};

struct StepResult {
    std::array<double, 2> y;
    int nodes = 0;
};

/// Cash-Karp embedded RK45 over the linear system y' = (u', Q u); adaptive
/// step with a hard cap so node counting on accepted steps cannot skip a sign
/// change, and state renormalization to dodge overflow (the ODE is linear).
StepResult integrate(const std::function<double(double)>& Q, double r0, double r1,
                     std::array<double, 2> y, double tol, double hcap)
{
    const double dir = r1 > r0 ? 1.0 : -1.0;
    auto f = [&Q](double r, const std::array<double, 2>& v) {
        return std::array<double, 2>{v[1], Q(r) * v[0]};
    };

    double r = r0;
    double h = dir * std::min(hcap, std::abs(r1 - r0) * 1e-4);
    int nodes = 0;
    double last_sign = y[0] == 0.0 ? 0.0 : (y[0] < 0.0 ? -1.0 : 1.0);

    const int max_steps = 40'000'000;
    for (int it = 0; it < max_steps && (r1 - r) * dir > 0.0; ++it) {
        if ((r + h - r1) * dir > 0.0) h = r1 - r;

        const auto k1 = f(r, y);
        auto yt = y;
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (0.2 * k1[i]);
        const auto k2 = f(r + 0.2 * h, yt);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (3.0 / 40 * k1[i] + 9.0 / 40 * k2[i]);
        const auto k3 = f(r + 0.3 * h, yt);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (0.3 * k1[i] - 0.9 * k2[i] + 1.2 * k3[i]);
        const auto k4 = f(r + 0.6 * h, yt);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (-11.0 / 54 * k1[i] + 2.5 * k2[i] - 70.0 / 27 * k3[i] +
                                35.0 / 27 * k4[i]);
        const auto k5 = f(r + h, yt);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (1631.0 / 55296 * k1[i] + 175.0 / 512 * k2[i] +
                                575.0 / 13824 * k3[i] + 44275.0 / 110592 * k4[i] +
                                253.0 / 4096 * k5[i]);
        const auto k6 = f(r + 0.875 * h, yt);

        std::array<double, 2> ynew, yerr;
        for (int i = 0; i < 2; ++i) {
            ynew[i] = y[i] + h * (37.0 / 378 * k1[i] + 250.0 / 621 * k3[i] +
                                  125.0 / 594 * k4[i] + 512.0 / 1771 * k6[i]);
            const double y5 = y[i] + h * (2825.0 / 27648 * k1[i] + 18575.0 / 48384 * k3[i] +
                                          13525.0 / 55296 * k4[i] + 277.0 / 14336 * k5[i] +
                                          0.25 * k6[i]);
            yerr[i] = ynew[i] - y5;
        }
        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double sc = std::abs(y[i]) + std::abs(h * k1[i]) + 1e-300;
            err = std::max(err, std::abs(yerr[i]) / sc);
        }

        if (err <= tol) {
            r += h;
            y = ynew;
            const double s = y[0] == 0.0 ? 0.0 : (y[0] < 0.0 ? -1.0 : 1.0);
            if (s != 0.0 && last_sign != 0.0 && s != last_sign) ++nodes;
            if (s != 0.0) last_sign = s;
            const double m = std::max(std::abs(y[0]), std::abs(y[1]));
            if (m > 1e250) {
                y[0] /= m;
                y[1] /= m;
            }
        }
        const double grow = 0.9 * std::pow(tol / std::max(err, 1e-300), 0.2);
        h *= std::clamp(grow, 0.1, 5.0);
        if (std::abs(h) > hcap) h = dir * hcap;
        if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(r)))
            throw solver_error("integrator step underflow");
    }
    return {y, nodes};
}

struct Mismatch {
    double value = 0.0;
    int nodes = 0;
};

/// Wronskian-normalized matching defect at r_match plus the node count of the
/// assembled outward+inward solution.
Mismatch mismatch_at(const RadialProblem& prob, double E, double r_min, double r_match,
                     double r_max, double tol)
{
    const double th2 = prob.theta_sq(E);
    if (!(th2 > 0.0)) return {1.0, -1};
    const double theta = std::sqrt(th2);

    auto Q = [&prob, E](double r) { return prob.Q(r, E); };
    const double hcap = (r_max - r_min) / 2000.0;

    // Outward from the two-term Frobenius start u ~ r^p (1 + c1 r).
    const double c1 = prob.frobenius_c1(E);
    const int p = prob.p;
    std::array<double, 2> y0{std::pow(r_min, p) * (1.0 + c1 * r_min),
                             p * std::pow(r_min, p - 1) * (1.0 + c1 * r_min) +
                                 std::pow(r_min, p) * c1};
    const auto out = integrate(Q, r_min, r_match, y0, tol, hcap);

    // Inward from the decaying tail e^{-theta r}.
    const auto in = integrate(Q, r_max, r_match, {1.0, -theta}, tol, hcap);

    const double w = out.y[1] * in.y[0] - out.y[0] * in.y[1];
    const double scale =
        std::abs(out.y[1] * in.y[0]) + std::abs(out.y[0] * in.y[1]) + 1e-300;
    return {w / scale, out.nodes + in.nodes};
}

double solve_radial(const RadialProblem& prob, int n_target, const ShootConfig& cfg)
{
    cfg.validate();
    if (n_target < 0) throw std::invalid_argument("node target must be >= 0");

    double e_lo = cfg.e_lo, e_hi = cfg.e_hi;
    if (e_lo == e_hi) {
        const double pad = 1e-9 * (std::abs(prob.window_lo) + std::abs(prob.window_hi) + 1.0);
        e_lo = prob.window_lo + pad;
        e_hi = prob.window_hi - pad;
        if (!(e_lo < e_hi)) throw bracket_miss_error("empty decay-exponent window");
    }

    const double th_mid = std::sqrt(std::max(prob.theta_sq(0.5 * (e_lo + e_hi)), 1e-12));
    double r_max = cfg.r_max;
    if (!(r_max > 0.0))
        r_max = std::max(40.0 / th_mid, 40.0 * prob.screening_length);
    const double r_match = std::min(std::max(0.05 * r_max, cfg.r_min * 10.0), 0.5 * r_max);

    auto probe = [&](double E) { return mismatch_at(prob, E, cfg.r_min, r_match, r_max, cfg.tol); };

    // Scan for a sign change whose node count brackets the target state.
    const int N = cfg.scan_points;
    double a = 0.0, b = 0.0, fa = 0.0, fb = 0.0;
    bool found = false;
    Mismatch prev = probe(e_lo);
    double eprev = e_lo;
    for (int i = 1; i <= N && !found; ++i) {
        const double e = e_lo + (e_hi - e_lo) * i / N;
        const Mismatch cur = probe(e);
        if (prev.nodes >= 0 && cur.nodes >= 0 && prev.value * cur.value < 0.0 &&
            (prev.nodes == n_target || cur.nodes == n_target)) {
            a = eprev;
            b = e;
            fa = prev.value;
            fb = cur.value;
            found = true;
        }
        prev = cur;
        eprev = e;
    }
    if (!found)
        throw bracket_miss_error("no matching-function sign change with " +
                                 std::to_string(n_target) + " nodes in [" +
                                 std::to_string(e_lo) + ", " + std::to_string(e_hi) + "]");

    for (int it = 0; it < cfg.max_bisect && (b - a) > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = probe(m).value;
        if (fa * fm <= 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }

    // Secant polish inside the final bracket.
    double x0 = a, x1 = b, f0 = fa, f1 = fb;
    for (int it = 0; it < 12 && f1 != f0; ++it) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 >= a - (b - a) && x2 <= b + (b - a))) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = probe(x1).value;
        if (f1 == 0.0) break;
    }

    const Mismatch fin = probe(x1);
    if (fin.nodes != n_target)
        throw wrong_state_error("converged onto " + std::to_string(fin.nodes) +
                                " nodes instead of " + std::to_string(n_target));
    return x1;
}

double hulthen_h(double delta, double r)
{
    const double s = std::exp(-delta * r);
    return s / (1.0 - s);
}

double centrifugal_term(CentrifugalMode mode, double delta, double r)
{
    if (mode == CentrifugalMode::ExactInverseSquare) return 1.0 / (r * r);
    const double h = hulthen_h(delta, r);
    return delta * delta * h * h;
}

} // namespace

double shoot_pseudospin(double mu, double delta, double strength, double c_const,
                        int n_r, int l_tilde, const ShootConfig& config)
{
    if (!(mu > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("shoot_pseudospin needs mu > 0, delta > 0");
    if (l_tilde < 0) throw std::invalid_argument("l_tilde must be >= 0");
    const double L = l_tilde;
    RadialProblem prob;
    prob.p = l_tilde + 1;
    prob.screening_length = 1.0 / delta;
    prob.Q = [=](double r, double E) {
        return L * (L + 1.0) * centrifugal_term(config.centrifugal, delta, r) +
               (mu - E + c_const) * strength * hulthen_h(delta, r) -
               (E * E - mu * mu - c_const * (mu + E));
    };
    prob.theta_sq = [=](double E) { return c_const * (mu + E) + mu * mu - E * E; };
    prob.frobenius_c1 = [=](double E) {
        double beta = (mu - E + c_const) * strength / delta;
        if (config.centrifugal == CentrifugalMode::HulthenSquare) beta -= L * (L + 1.0) * delta;
        return beta / (2.0 * (L + 1.0));
    };
    prob.window_lo = std::min(mu, -(mu + c_const));
    prob.window_hi = std::max(mu, -(mu + c_const));
    return solve_radial(prob, n_r, config);
}

double shoot_spin(double mu, double delta, double strength, double c_const,
                  int n_r, int l, const ShootConfig& config)
{
    if (!(mu > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("shoot_spin needs mu > 0, delta > 0");
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    const double L = l;
    RadialProblem prob;
    prob.p = l + 1;
    prob.screening_length = 1.0 / delta;
    prob.Q = [=](double r, double E) {
        return L * (L + 1.0) * centrifugal_term(config.centrifugal, delta, r) -
               (mu + E - c_const) * strength * hulthen_h(delta, r) +
               (mu * mu - E * E - c_const * (mu - E));
    };
    prob.theta_sq = [=](double E) { return c_const * (E - mu) + mu * mu - E * E; };
    prob.frobenius_c1 = [=](double E) {
        double beta = -(mu + E - c_const) * strength / delta;
        if (config.centrifugal == CentrifugalMode::HulthenSquare) beta -= L * (L + 1.0) * delta;
        return beta / (2.0 * (L + 1.0));
    };
    prob.window_lo = std::min(mu, c_const - mu);
    prob.window_hi = std::max(mu, c_const - mu);
    return solve_radial(prob, n_r, config);
}

double shoot_schrodinger(double mu, double delta, int n_r, int l, const ShootConfig& config)
{
    if (!(mu > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("shoot_schrodinger needs mu > 0, delta > 0");
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    const double L = l;
    RadialProblem prob;
    prob.p = l + 1;
    prob.screening_length = 1.0 / delta;
    prob.Q = [=](double r, double E) {
        return L * (L + 1.0) * centrifugal_term(config.centrifugal, delta, r) -
               2.0 * mu * delta * hulthen_h(delta, r) - 2.0 * mu * E;
    };
    prob.theta_sq = [=](double E) { return -2.0 * mu * E; };
    prob.frobenius_c1 = [=](double E) {
        (void)E;
        double beta = -2.0 * mu;
        if (config.centrifugal == CentrifugalMode::HulthenSquare) beta -= L * (L + 1.0) * delta;
        return beta / (2.0 * (L + 1.0));
    };
    // Coulomb-like at the origin: the spectrum sits above the hydrogenic floor.
    prob.window_lo = -0.75 * mu;
    prob.window_hi = -1e-14 * mu;
    return solve_radial(prob, n_r, config);
}

ApproximationErrorReport approximation_error(double delta, int l, double r_min, double r_max,
                                             int n_points)
{
    if (!(delta > 0.0) || !(r_min > 0.0) || !(r_max > r_min) || n_points < 2)
        throw std::invalid_argument("approximation_error needs delta > 0, 0 < r_min < r_max");
    const double L = l;
    const double pref = L * (L + 1.0);
    ApproximationErrorReport rep;
    auto dev = [&](double r) {
        const double h = hulthen_h(delta, r);
        return pref * (delta * delta * h * h - 1.0 / (r * r));
    };
    double prev_r = r_min, prev_d = std::abs(dev(r_min));
    rep.max_abs_dev = prev_d;
    const double lmin = std::log(r_min), lmax = std::log(r_max);
    for (int i = 1; i < n_points; ++i) {
        const double r = std::exp(lmin + (lmax - lmin) * i / (n_points - 1));
        const double d = std::abs(dev(r));
        rep.max_abs_dev = std::max(rep.max_abs_dev, d);
        rep.integrated_abs_dev += 0.5 * (prev_d + d) * (r - prev_r);
        prev_r = r;
        prev_d = d;
    }
    if (pref > 0.0) {
        const double r = 1.0 / delta;
        const double h = hulthen_h(delta, r);
        rep.rel_dev_at_inv_delta = std::abs(delta * delta * h * h * r * r - 1.0);
    }
    return rep;
}

} // namespace hulthen
