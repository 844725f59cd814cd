#pragma once

#include <vector>

#include "vessiot/jet.hpp"
#include "vessiot/section.hpp"

namespace vessiot {

/// Infinitesimal Lie equations Omega^tau = L(xi_q) omega in Medolaghi form,
/// one equation per component in the kind's key order.
///
/// Templates (xi^k_i = d_i xi^k, summation over r):
///   ONE_FORM_1D        alpha xi_1 + xi d alpha
///   CHRISTOFFEL_1D     xi_11 + gamma xi_1 + xi d gamma
///   METRIC_2D          omega_rj xi^r_i + omega_ir xi^r_j + xi^r d_r omega_ij
///   PRODUCT_TRIPLE_2D  Omega^1 = xi^1_2 + w1 xi^2_2 - w1 xi^1_1 - w1^2 xi^2_1 + xi^r d_r w1
///                      Omega^2 = xi^2_1 + w2 xi^1_1 - w2 xi^2_2 - w2^2 xi^1_2 + xi^r d_r w2
///                      Omega^3 = w3 (xi^1_1 + xi^2_2) + w1 w3 xi^2_1 + w2 w3 xi^1_2 + xi^r d_r w3
///   CHRISTOFFEL_2D     xi^k_ij + g^k_rj xi^r_i + g^k_ir xi^r_j - g^r_ij xi^k_r + xi^r d_r g^k_ij
///   CONTACT_PAIR_3D    Lie derivatives of alpha_i and beta_ij
///
/// Throws DegenerateSection when the nondegeneracy witness is identically 0.
[[nodiscard]] std::vector<LinearJetEquation> medolaghi_equations(const GeometricSection& section);

/// True iff both sections have the same Medolaghi system, compared as
/// row spaces (reduced echelon form over the function field).
/// Throws KindMismatch.
[[nodiscard]] bool same_equations(const GeometricSection& a, const GeometricSection& b);

}  // namespace vessiot
