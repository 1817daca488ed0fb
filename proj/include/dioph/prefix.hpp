#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioph/aggregates.hpp"

namespace dioph {

enum class Provenance { User, Generated, Measured };
std::string provenanceName(Provenance p);
Provenance provenanceFromString(const std::string& s);

// Finite prefix of one exponent sequence: values[i] is the exponent at
// index n = i + 1.
struct ExponentPrefix {
    Role role = Role::W;
    std::vector<ExtReal> values;
    Provenance provenance = Provenance::User;

    int length() const { return static_cast<int>(values.size()); }
    const ExtReal& at(int n) const;  // 1-based

    std::string toJson() const;
    static ExponentPrefix fromJson(const std::string& json);
};

struct PrefixPair {
    ExponentPrefix w;       // role W
    ExponentPrefix lambda;  // role Lambda

    std::string toJson() const;
    static PrefixPair fromJson(const std::string& json);
};

struct Violation {
    std::string citation;
    std::vector<int> indices;
    ExtReal lhs, rhs;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> notes;  // advisory only, never fail the report
    bool passed() const { return violations.empty(); }
    std::string summary() const;
};

// Checks every applicable provable constraint: monotonicity and Dirichlet
// floors per prefix, and (when both sides are present) the transference
// corridor per index, the herz lower bounds, the trampel identity where
// lambda_n > 1, and the vor2 caps induced by finite w_m.
ValidationReport validatePrefix(const std::optional<ExponentPrefix>& w,
                                const std::optional<ExponentPrefix>& lambda);

// Finite-prefix estimators of the aggregate quantities over the last
// `tailWindow` indices. Results carry the estimate marker.
AggregateQuantities aggregatesFromPrefix(const PrefixPair& pair, int tailWindow);

// Limit-data estimates for classification (constant-tail detection plus
// the divergence flag for n*lambda_n).
LimitData estimateLimits(const PrefixPair& pair, int tailWindow);

MahlerClass classifyPrefix(const PrefixPair& pair, int tailWindow);

// Deterministic pseudo-random admissible prefix pair whose tail profile is
// consistent with the target class. Closed loop: the result always passes
// validatePrefix.
PrefixPair generateAdmissible(std::uint64_t seed, int K, const MahlerClass& target);

}  // namespace dioph
