#pragma once

#include <string>
#include <string_view>
#include <utility>

namespace hulthen {

/// Which exact symmetry limit of the Dirac problem is being solved.
enum class SymmetryKind { Pseudospin, Spin };

/// A Dirac radial eigenstate label: radial quantum number and kappa.
///
/// n_r counts the nodes of the component the solver quantizes (the Jacobi
/// polynomial degree), starting at 0 for both symmetries.  kappa != 0.
struct QuantumState {
    int n_r = 0;
    int kappa = -1;
};

/// Orbital momentum of the upper component (l) and of the lower component
/// (l_tilde), both derived from kappa.
struct OrbitalMomenta {
    int l = 0;
    int l_tilde = 0;
};

/// l = kappa (kappa>0) or -(kappa+1) (kappa<0); l_tilde = kappa-1 or -kappa.
/// Throws std::invalid_argument for kappa == 0.
OrbitalMomenta orbital_momenta(int kappa);

/// Spectroscopic label n_r letter(l) _ two_j/2, e.g. "1s_1/2".
struct SpectroscopicLabel {
    int n_r = 0;
    int ell = 0;
    int two_j = 1;

    std::string str() const;
};

/// Letter for orbital momentum l (s,p,d,f,g,h,i,k,l,m,n,o,q; j skipped).
char orbital_letter(int ell);

/// Inverse of orbital_letter; -1 if the letter is not in the table.
int orbital_letter_index(char letter);

/// Label of a state under the standard convention two_j = 2|kappa| - 1.
SpectroscopicLabel make_label(const QuantumState& state);

/// Renders make_label(state).str().
std::string render(const QuantumState& state);

/// Parses "1s_1/2"-style text back into a state; kappa is reconstructed from
/// (letter, j).  Throws std::invalid_argument on malformed text or an
/// inconsistent (letter, j) pair.
QuantumState parse_label(std::string_view text);

/// The two labels of the degenerate pair that shares this state's momentum.
///
/// Pseudospin: ((n_r) letter(lt-1) _ (2lt-1)/2, (n_r-1) letter(lt+1) _ (2lt+1)/2),
/// the doublet built on l_tilde = lt; requires n_r >= 1 and lt >= 1.
/// Spin: the aligned/unaligned pair at the same (n_r, l); requires l >= 1.
std::pair<SpectroscopicLabel, SpectroscopicLabel>
doublet_partner(const QuantumState& state, SymmetryKind symmetry);

/// Radial index of the dominant (quantized) component for a label-faithful
/// state.  Spectroscopic labels count upper-component nodes, so for the
/// pseudospin problem the kappa<0 member of a doublet maps to n_r - 1 while
/// the kappa>0 member keeps n_r; the spin problem keeps n_r for both signs.
/// Calibrated once against all 32 Table-style reference energies.
/// Throws std::invalid_argument if the resulting index would be negative.
int dominant_radial_index(const QuantumState& state, SymmetryKind symmetry);

} // namespace hulthen
