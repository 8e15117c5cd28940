#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "copwin/ordinal.hpp"

namespace copwin {

// Closed-form results for an infinite family member. `eta` is absent when
// no closed form is known for the parameters; `theta_description` is empty
// in the same situation.
struct FamilyReport {
    std::optional<Ordinal> eta;
    Ordinal rho;
    std::string theta_description;
};

// Capture-time ordinal of the rooted tree S_alpha: 0 for alpha = 1, beta
// for successor alpha = beta + 1, and alpha itself at limits. Pre:
// alpha >= 1.
Ordinal eta_of_S(const Ordinal& alpha);

// CR-ordinal of S_alpha: 2n - 1 for finite alpha = n + 1 (0 for alpha = 1);
// eta + w when the capture-time ordinal is infinite.
Ordinal rho_of_S(const Ordinal& alpha);

FamilyReport s_report(const Ordinal& alpha);

// The spider with one leg of each finite length: eta = w, rho = w*2.
FamilyReport tomega_report();

// Per-vertex capture-time ordinals in that spider.
Ordinal eta_tomega_root();                                   // w
Ordinal eta_tomega_vertex(std::uint64_t i, std::uint64_t j); // w + (j-1); pre 0 < j <= i

// CR-ordinal of the generalized Polat family: w + i for j = 1 (the base
// graph is i = 1), and w*j + (i + j) for j >= 2. Pre: i, j >= 1.
Ordinal rho_polat_generalized(std::uint64_t i, std::uint64_t j);

FamilyReport polat_report(std::uint64_t i, std::uint64_t j);

// Tree CR-ordinals: the diameter when the radius is finite, eta + w when it
// is infinite.
Ordinal tree_rho_from_eta(const Ordinal& eta, bool finite_radius,
                          std::optional<std::int64_t> diameter_if_finite = std::nullopt);

// Membership in the class of tree CR-ordinals: all finite ordinals together
// with the ordinals alpha + w for limit alpha. In CNF: infinite members
// have no finite part, trailing exponent exactly 1, and are >= w*2.
bool in_lambda_T(const Ordinal& a);

// Membership in the conjectured class of general CR-ordinals: w*i + (i+j)
// for finite i, j, together with alpha + w for limit alpha.
bool in_upsilon(const Ordinal& a);

}  // namespace copwin
