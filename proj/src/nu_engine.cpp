#include "hulthen/nu_engine.hpp"

#include "hulthen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hulthen {

namespace {

constexpr double kDiscRelTol = 1e-9;  // perfect-square acceptance, relative

double max_abs(const Poly2& p)
{
    return std::max({std::abs(p.c[0]), std::abs(p.c[1]), std::abs(p.c[2])});
}

/// Under-root polynomial of the pi equation at a given k:
/// q(s) = ((sigma' - tau_tilde)/2)^2 - sigma_tilde + k sigma.
Poly2 under_root(const NuProblem& pr, double k)
{
    const Poly2 half{{0.5 * (pr.sigma.c[1] - pr.tau_tilde.c[0]),
                      0.5 * (2.0 * pr.sigma.c[2] - pr.tau_tilde.c[1]), 0.0}};
    Poly2 q;
    q.c[0] = half.c[0] * half.c[0] - pr.sigma_tilde.c[0] + k * pr.sigma.c[0];
    q.c[1] = 2.0 * half.c[0] * half.c[1] - pr.sigma_tilde.c[1] + k * pr.sigma.c[1];
    q.c[2] = half.c[1] * half.c[1] - pr.sigma_tilde.c[2] + k * pr.sigma.c[2];
    return q;
}

std::string branch_dump(const std::vector<NuBranch>& bs)
{
    std::ostringstream os;
    for (const auto& b : bs)
        os << " {k=" << b.k << ", pi=" << b.pi.c[0] << (b.pi.c[1] < 0 ? "" : "+")
           << b.pi.c[1] << "*s, tau'=" << b.tau_slope() << "}";
    return os.str();
}

} // namespace

void NuProblem::validate() const
{
    if (max_abs(sigma) == 0.0)
        throw std::invalid_argument("sigma is identically zero");
    if (tau_tilde.c[2] != 0.0)
        throw std::invalid_argument("tau_tilde must have degree <= 1");
}

std::vector<double> k_candidates(const NuProblem& problem)
{
    problem.validate();
    // q(s; k) has s-coefficients linear in k; its s-discriminant is quadratic in k.
    const Poly2 q0 = under_root(problem, 0.0);
    const Poly2& sg = problem.sigma;
    const double A = sg.c[1] * sg.c[1] - 4.0 * sg.c[2] * sg.c[0];
    const double B = 2.0 * q0.c[1] * sg.c[1] - 4.0 * (q0.c[2] * sg.c[0] + q0.c[0] * sg.c[2]);
    const double C = q0.c[1] * q0.c[1] - 4.0 * q0.c[2] * q0.c[0];

    const double scale = std::max({std::abs(A), std::abs(B), std::abs(C),
                                   std::numeric_limits<double>::min()});
    if (std::abs(A) <= 1e-14 * scale) {
        if (std::abs(B) <= 1e-14 * scale)
            throw degenerate_k_equation_error("k-equation has no k^2 and no k term");
        return {-C / B};
    }
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) return {};
    const double sq = std::sqrt(disc);
    // Citardauq pairing avoids cancellation in the smaller root.
    const double kq = -0.5 * (B + std::copysign(sq, B));
    double r1 = kq / A;
    double r2 = (kq != 0.0) ? C / kq : -B / A - r1;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

std::vector<NuBranch> branches(const NuProblem& problem, double k)
{
    problem.validate();
    const Poly2 q = under_root(problem, k);
    const double scale = std::max(max_abs(q), std::numeric_limits<double>::min());

    // Square root of q as a first-degree polynomial p with leading coeff >= 0.
    Poly2 p;
    if (std::abs(q.c[2]) > 1e-13 * scale) {
        const double disc = q.c[1] * q.c[1] - 4.0 * q.c[2] * q.c[0];
        if (std::abs(disc) > kDiscRelTol * scale * scale)
            throw numerical_degeneracy_error("under-root quadratic is not a perfect square");
        if (q.c[2] < 0.0) return {};  // -(s-s0)^2 has no real polynomial root
        const double a = std::sqrt(q.c[2]);
        p = Poly2{{q.c[1] / (2.0 * a), a, 0.0}};
    } else if (std::abs(q.c[1]) > 1e-13 * scale) {
        throw numerical_degeneracy_error("under-root expression is linear, not a square");
    } else {
        if (q.c[0] < -1e-13 * scale) return {};
        p = Poly2{{std::sqrt(std::max(q.c[0], 0.0)), 0.0, 0.0}};
    }

    const Poly2 base{{0.5 * (problem.sigma.c[1] - problem.tau_tilde.c[0]),
                      0.5 * (2.0 * problem.sigma.c[2] - problem.tau_tilde.c[1]), 0.0}};
    std::vector<NuBranch> out;
    for (const double sgn : {+1.0, -1.0}) {
        NuBranch b;
        b.k = k;
        b.pi = base + sgn * p;
        b.tau = problem.tau_tilde + 2.0 * b.pi;
        b.lambda = k + b.pi.c[1];
        out.push_back(b);
        if (p.c[0] == 0.0 && p.c[1] == 0.0) break;  // +/- coincide
    }
    return out;
}

NuBranch select_branch(const std::vector<NuBranch>& candidates)
{
    if (candidates.empty())
        throw selection_ambiguity_error("no branches to select from");
    std::vector<NuBranch> neg;
    for (const auto& b : candidates)
        if (b.tau_slope() < 0.0) neg.push_back(b);
    if (neg.empty())
        throw selection_ambiguity_error("no branch with negative tau slope; candidates:" +
                                        branch_dump(candidates));
    if (neg.size() == 1) return neg.front();
    // Several branches descend; keep the one whose phi = s^{pi(0)} (1-s)^{-pi(1)}
    // vanishes at both ends of [0,1].
    std::vector<NuBranch> adm;
    for (const auto& b : neg) {
        const double pi0 = b.pi(0.0);
        const double pi1 = b.pi(1.0);
        if (pi0 >= -1e-12 && pi1 < 0.0) adm.push_back(b);
    }
    if (adm.size() != 1)
        throw selection_ambiguity_error("branch selection ambiguous; candidates:" +
                                        branch_dump(neg));
    return adm.front();
}

double lambda_n(const NuBranch& branch, const Poly2& sigma, int n)
{
    if (n < 0) throw std::invalid_argument("lambda_n needs n >= 0");
    const double sigma_dd = 2.0 * sigma.c[2];
    return -n * branch.tau_slope() - 0.5 * n * (n - 1) * sigma_dd;
}

double eigen_residual(const NuProblem& problem, int n)
{
    std::vector<NuBranch> all;
    for (const double k : k_candidates(problem))
        for (const auto& b : branches(problem, k)) all.push_back(b);
    select_branch(all);  // admissibility gate; propagates its error
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : all) {
        const double r = b.lambda - lambda_n(b, problem.sigma, n);
        if (std::abs(r) < std::abs(best)) best = r;
    }
    return best;
}

WeightPhi weight_and_phi(const NuBranch& branch, const NuProblem& problem)
{
    const Poly2& s = problem.sigma;
    if (std::abs(s.c[0]) > 1e-12 || std::abs(s.c[1] - 1.0) > 1e-12 ||
        std::abs(s.c[2] + 1.0) > 1e-12)
        throw unsupported_sigma_error("weight_and_phi supports only sigma(s) = s(1-s)");
    // (sigma rho)' = tau rho  =>  rho'/rho = (tau - sigma')/sigma; partial
    // fractions over s(1-s) give residues (tau(0)-1)/s and (tau(1)+1)/(1-s).
    WeightPhi w;
    w.rho_s_exp = branch.tau(0.0) - 1.0;
    w.rho_one_minus_s_exp = -(branch.tau(1.0) + 1.0);
    w.phi_s_exp = branch.pi(0.0);
    w.phi_one_minus_s_exp = -branch.pi(1.0);
    return w;
}

} // namespace hulthen
