#pragma once

#include <string_view>
#include <vector>

#include "vessiot/jet.hpp"

namespace vessiot {

inline constexpr int kDefaultMaxJetOrder = 4;

/// One summand coeff * d_mu Omega^component of a compatibility condition.
struct CcTerm {
    Expression coeff;
    MultiIndex derivative;
    int component;  // 1-based tau
};

using CompatibilityCondition = std::vector<CcTerm>;

/// Parses comma-separated terms `[+|-][INT]d<dirs>O<tau>`, e.g.
/// "d11O1,+d22O2,-2d12O3". The `d<dirs>` part may be omitted for an
/// undifferentiated term.
[[nodiscard]] CompatibilityCondition parse_cc_spec(std::string_view text, int n);

/// Substitutes each Omega^tau by its equation and applies the operators. The
/// result is the zero equation iff the condition holds identically in the
/// jets of xi. Throws OrderOverflow past `max_order`.
[[nodiscard]] LinearJetEquation check_cc_identity(const std::vector<LinearJetEquation>& system,
                                                  const CompatibilityCondition& cc,
                                                  int max_order = kDefaultMaxJetOrder);

}  // namespace vessiot
