#pragma once

#include <array>
#include <vector>

namespace hulthen {

/// Real polynomial of degree <= 2 in ascending coefficient order:
/// c[0] + c[1] s + c[2] s^2.
struct Poly2 {
    std::array<double, 3> c{0.0, 0.0, 0.0};

    double operator()(double s) const { return c[0] + s * (c[1] + s * c[2]); }
    double slope(double s) const { return c[1] + 2.0 * c[2] * s; }
    Poly2 derivative() const { return Poly2{{c[1], 2.0 * c[2], 0.0}}; }

    friend Poly2 operator+(const Poly2& a, const Poly2& b)
    {
        return Poly2{{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
    }
    friend Poly2 operator*(double k, const Poly2& p)
    {
        return Poly2{{k * p.c[0], k * p.c[1], k * p.c[2]}};
    }
};

/// Hypergeometric-type equation psi'' + (tau_tilde/sigma) psi' + (sigma_tilde/sigma^2) psi = 0.
struct NuProblem {
    Poly2 sigma;        // degree <= 2, not identically zero
    Poly2 tau_tilde;    // degree <= 1
    Poly2 sigma_tilde;  // degree <= 2

    /// Throws std::invalid_argument if the degree bounds or sigma != 0 fail.
    void validate() const;
};

/// One (k, sign) resolution: pi from the square-rooted perfect square,
/// tau = tau_tilde + 2 pi, lambda = k + pi'.
struct NuBranch {
    double k = 0.0;
    Poly2 pi;      // degree <= 1
    Poly2 tau;     // degree <= 1
    double lambda = 0.0;

    double tau_slope() const { return tau.c[1]; }
};

/// Power-form factors rho(s) = s^a (1-s)^b and phi(s) = s^c (1-s)^d.
struct WeightPhi {
    double rho_s_exp = 0.0;
    double rho_one_minus_s_exp = 0.0;
    double phi_s_exp = 0.0;
    double phi_one_minus_s_exp = 0.0;
};

/// All real k for which the expression under the square root becomes the
/// square of a polynomial (zero discriminant in s).  Ascending order; empty
/// when both roots are complex.  Throws degenerate_k_equation_error when the
/// k-equation loses both its quadratic and linear terms.
std::vector<double> k_candidates(const NuProblem& problem);

/// The up-to-two branches (plus/minus square root) for one k candidate.
/// The square root of the perfect-square quadratic is taken with leading
/// coefficient >= 0; branches enumerate both signs.  Throws
/// numerical_degeneracy_error if the residual discriminant is not ~0.
std::vector<NuBranch> branches(const NuProblem& problem, double k);

/// The physically admissible branch: negative tau slope and, when several
/// branches share that, boundary-admissible wave factors (pi(0) >= 0 and
/// pi(1) < 0, i.e. phi vanishes at both ends of s in [0,1]).  Throws
/// selection_ambiguity_error listing all candidates when the filter does not
/// single one out.
NuBranch select_branch(const std::vector<NuBranch>& candidates);

/// lambda_n = -n tau' - n(n-1)/2 sigma''.
double lambda_n(const NuBranch& branch, const Poly2& sigma, int n);

/// Signed eigenvalue-condition residual of minimal magnitude over all
/// enumerated branches.  The two k candidates realize the two sign
/// resolutions of the square-rooted decay exponent, so scanning every branch
/// keeps only the squared quantization condition; the residual vanishes
/// exactly at eigenvalues and nowhere else.  Requires select_branch to
/// succeed (the admissibility error propagates).
double eigen_residual(const NuProblem& problem, int n);

/// Weight rho and first wave factor phi for the selected branch, from
/// (sigma rho)' = tau rho and phi'/phi = pi/sigma.  Supports only
/// sigma(s) = s(1-s); otherwise throws unsupported_sigma_error.
WeightPhi weight_and_phi(const NuBranch& branch, const NuProblem& problem);

} // namespace hulthen
