#include "vessiot/compatibility.hpp"

#include <regex>
#include <string>

#include "vessiot/errors.hpp"

namespace vessiot {

CompatibilityCondition parse_cc_spec(std::string_view text, int n) {
    static const std::regex term_re(R"(^\s*([+-]?)\s*(\d*)\s*(?:d(\d+))?\s*O(\d+)\s*$)");
    CompatibilityCondition cc;
    std::size_t start = 0;
    const std::string s(text);
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::smatch m;
        if (!std::regex_match(piece, m, term_re)) throw SyntaxError("malformed compatibility term '" + piece + "'", start);
        long mult = m[2].str().empty() ? 1 : std::stol(m[2].str());
        if (m[1].str() == "-") mult = -mult;
        MultiIndex mu(n);
        for (char c : m[3].str()) {
            const int dir = c - '0';
            if (dir < 1 || dir > n) throw IndexOutOfRange("derivative direction " + std::string(1, c) + " outside 1.." + std::to_string(n));
            mu = mu.incremented(dir);
        }
        const int tau = std::stoi(m[4].str());
        if (tau < 1) throw IndexOutOfRange("component index must be >= 1");
        cc.push_back({Expression(mult), std::move(mu), tau});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (cc.empty()) throw SyntaxError("empty compatibility condition", 0);
    return cc;
}

LinearJetEquation check_cc_identity(const std::vector<LinearJetEquation>& system, const CompatibilityCondition& cc,
                                    int max_order) {
    if (system.empty()) throw PreconditionViolation("compatibility check on an empty system");
    LinearJetEquation residual(system.front().n());
    for (const auto& term : cc) {
        if (term.component < 1 || term.component > static_cast<int>(system.size()))
            throw IndexOutOfRange("component O" + std::to_string(term.component) + " not in a system of " +
                                  std::to_string(system.size()) + " equations");
        const auto& eq = system[static_cast<std::size_t>(term.component - 1)];
        if (eq.order() + term.derivative.order() > max_order)
            throw OrderOverflow("d_" + term.derivative.to_string() + " O" + std::to_string(term.component) +
                                " reaches jet order " + std::to_string(eq.order() + term.derivative.order()) +
                                " beyond the maximum " + std::to_string(max_order));
        residual += formal_derivative(eq, term.derivative).scaled(term.coeff);
    }
    return residual;
}

}  // namespace vessiot
