#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vessiot/forms.hpp"
#include "vessiot/section.hpp"
#include "vessiot/structure_report.hpp"

namespace vessiot {

/// c = (d alpha - gamma alpha) / alpha^2. Throws DegenerateSection.
[[nodiscard]] StructureReport affine_constant_1d(const Expression& alpha, const Expression& gamma);

/// c' = (d omega - 2 omega gamma) / sigma^3 with omega = sigma^2. When sigma
/// is not given a rational square root of omega is searched for.
/// Throws DegenerateSection, NotAPerfectSquare, PreconditionViolation
/// (sigma^2 != omega).
[[nodiscard]] StructureReport isometry_constant_1d(const Expression& omega, const Expression& gamma,
                                                   const std::optional<Expression>& sigma = std::nullopt);

/// d gamma - gamma^2 / 2 - nu.
[[nodiscard]] Expression projective_residual_1d(const Expression& gamma, const Expression& nu);

/// (omega^4, ..., omega^9) solving the six first-order relations of a
/// PRODUCT_TRIPLE_2D section.
[[nodiscard]] std::array<Expression, 6> solve_intermediate_product(const GeometricSection& section);

[[nodiscard]] StructureReport product_constants(const GeometricSection& section);

/// Divides the constants of a product or metric report by a. Throws ZeroScale.
[[nodiscard]] StructureReport scaling_law(const StructureReport& report, const Expression& a);

struct EquivalenceVerdict {
    enum class Status { Obstructed, NecessaryConditionsPass };

    Status status = Status::NecessaryConditionsPass;
    std::vector<std::string> reasons;
    std::vector<std::string> notes;
    std::map<Symbol, Rational> sample_point;
    StructureReport left;
    StructureReport right;
};

[[nodiscard]] const char* status_name(EquivalenceVerdict::Status status);

/// Necessary conditions for the existence of a map taking one section to the
/// other. Never claims solvability. Throws KindMismatch, NotIntegrable.
[[nodiscard]] EquivalenceVerdict equivalence_gate(const GeometricSection& left, const GeometricSection& right,
                                                  const std::optional<std::map<Symbol, Rational>>& sample_point = std::nullopt);

/// Solves d alpha = c' beta and d beta = c'' alpha ^ beta on n = 3.
/// Throws DegeneratePair, NotProportional.
[[nodiscard]] StructureReport contact_constants(const DifferentialForm& alpha, const DifferentialForm& beta);

/// The 1-form and 2-form of a CONTACT_PAIR_3D section.
[[nodiscard]] std::pair<DifferentialForm, DifferentialForm> contact_forms(const GeometricSection& section);

/// Runs the pipeline matching the section's kind.
[[nodiscard]] StructureReport compute_structure(const GeometricSection& section);

}  // namespace vessiot
