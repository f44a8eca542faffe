#include "hulthen/quantum_numbers.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace hulthen {

namespace {
// s,p,d,f,g,h,i then alphabetic with j skipped; covers l <= 12.
constexpr std::string_view kLetters = "spdfghiklmnoq";
} // namespace

OrbitalMomenta orbital_momenta(int kappa)
{
    if (kappa == 0) throw std::invalid_argument("kappa must be nonzero");
    OrbitalMomenta m;
    if (kappa > 0) {
        m.l = kappa;
        m.l_tilde = kappa - 1;
    } else {
        m.l = -(kappa + 1);
        m.l_tilde = -kappa;
    }
    return m;
}

char orbital_letter(int ell)
{
    if (ell < 0 || ell >= static_cast<int>(kLetters.size()))
        throw std::invalid_argument("orbital momentum outside letter table (0..12)");
    return kLetters[static_cast<size_t>(ell)];
}

int orbital_letter_index(char letter)
{
    const auto pos = kLetters.find(letter);
    return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

std::string SpectroscopicLabel::str() const
{
    return std::to_string(n_r) + orbital_letter(ell) + "_" + std::to_string(two_j) + "/2";
}

SpectroscopicLabel make_label(const QuantumState& state)
{
    const auto m = orbital_momenta(state.kappa);
    SpectroscopicLabel lab;
    lab.n_r = state.n_r;
    lab.ell = m.l;
    lab.two_j = 2 * std::abs(state.kappa) - 1;
    return lab;
}

std::string render(const QuantumState& state)
{
    return make_label(state).str();
}

QuantumState parse_label(std::string_view text)
{
    const auto fail = [&] {
        throw std::invalid_argument("malformed spectroscopic label: '" + std::string(text) + "'");
    };

    size_t i = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == 0 || i >= text.size()) fail();
    int n_r = 0;
    if (std::from_chars(text.data(), text.data() + i, n_r).ec != std::errc{}) fail();

    const int ell = orbital_letter_index(text[i]);
    if (ell < 0) fail();
    ++i;

    if (i >= text.size() || text[i] != '_') fail();
    ++i;
    size_t j0 = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == j0) fail();
    int two_j = 0;
    if (std::from_chars(text.data() + j0, text.data() + i, two_j).ec != std::errc{}) fail();
    if (text.substr(i) != "/2") fail();

    if (two_j < 1 || two_j % 2 == 0) fail();
    int kappa = 0;
    if (two_j == 2 * ell + 1)
        kappa = -(two_j + 1) / 2;   // aligned: j = l + 1/2
    else if (two_j == 2 * ell - 1)
        kappa = (two_j + 1) / 2;    // unaligned: j = l - 1/2
    else
        throw std::invalid_argument("inconsistent (letter, j) pair in label: '" +
                                    std::string(text) + "'");
    return QuantumState{n_r, kappa};
}

std::pair<SpectroscopicLabel, SpectroscopicLabel>
doublet_partner(const QuantumState& state, SymmetryKind symmetry)
{
    const auto m = orbital_momenta(state.kappa);
    if (symmetry == SymmetryKind::Pseudospin) {
        if (state.n_r < 1)
            throw std::invalid_argument("pseudospin doublet labels need n_r >= 1");
        if (m.l_tilde < 1)
            throw std::invalid_argument("pseudospin doublet needs l_tilde >= 1");
        const int lt = m.l_tilde;
        SpectroscopicLabel first{state.n_r, lt - 1, 2 * lt - 1};
        SpectroscopicLabel second{state.n_r - 1, lt + 1, 2 * lt + 1};
        return {first, second};
    }
    if (m.l < 1)
        throw std::invalid_argument("spin doublet needs l >= 1");
    SpectroscopicLabel aligned{state.n_r, m.l, 2 * m.l + 1};
    SpectroscopicLabel unaligned{state.n_r, m.l, 2 * m.l - 1};
    return {aligned, unaligned};
}

int dominant_radial_index(const QuantumState& state, SymmetryKind symmetry)
{
    int n = state.n_r;
    if (symmetry == SymmetryKind::Pseudospin && state.kappa < 0) n -= 1;
    if (n < 0)
        throw std::invalid_argument("state '" + render(state) +
                                    "' has no pseudospin lower-component partner (index < 0)");
    return n;
}

} // namespace hulthen
