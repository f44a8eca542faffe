#pragma once

#include <stdexcept>
#include <string>

namespace hulthen {

/// Base class for failures of the physics layer (eigenvalue search,
/// branch selection, wave-function construction).
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent run configuration (CLI layer maps this to exit 2).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The energy quadratic has complex roots (negative radicand).
class no_real_roots_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// Neither root of the energy quadratic passes the bound-state validity filter.
class no_bound_state_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// The k-determining quadratic lost both its k^2 and k coefficients.
class degenerate_k_equation_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// The expression under the square root failed the perfect-square test.
class numerical_degeneracy_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// Zero or several admissible branches; carries a printable dump of all candidates.
class selection_ambiguity_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// weight_and_phi only supports sigma(s) = s(1-s).
class unsupported_sigma_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// Hypergeometric series parameter c hit a nonpositive-integer pole.
class pole_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// Requested energy is not a bound root (nonpositive decay exponent).
class not_bound_state_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// First-order pair denominator (mu - E + C or mu + E - C) vanished.
class symmetry_singular_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// Non-relativistic energy is not negative; no bound radial function exists.
class unbound_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// Shooting bracket contains no sign change of the matching function.
class bracket_miss_error : public solver_error {
public:
    using solver_error::solver_error;
};

/// Shooting converged onto a state with the wrong node count.
class wrong_state_error : public solver_error {
public:
    using solver_error::solver_error;
};

} // namespace hulthen
