#pragma once

#include <string>

#include "dioph/extreal.hpp"

namespace dioph {

// The six exponent families. W/WHat act on polynomial evaluations,
// Lambda/LambdaHat on simultaneous approximation to successive powers,
// WStar/WHatStar on approximation by algebraic numbers.
enum class Role { W, WHat, Lambda, LambdaHat, WStar, WHatStar };

std::string roleName(Role r);
Role roleFromString(const std::string& s);
bool isUniformRole(Role r);
bool isLambdaSide(Role r);

// One exponent value, tagged with its role, the degree/dimension index n,
// and the successive-minimum index j (j = 1 recovers the classical value).
struct ExponentValue {
    Role role;
    int n;
    int j;
    ExtReal value;

    ExponentValue(Role role_, int n_, ExtReal value_, int j_ = 1);
};

// Admissibility check behind ExponentValue: Dirichlet floors
// (w_n, what_n >= n; lambda floors 1/n) for finite values.
void checkAdmissible(Role role, int n, int j, const ExtReal& value);

enum class BoundKind { Lower, Upper, Equality };

// Output of every bound formula: the value, its direction, whether the
// hypotheses of the producing rule held, and the rule tag.
struct BoundResult {
    ExtReal value;
    BoundKind kind = BoundKind::Upper;
    bool applicable = true;
    std::string citation;
    std::string note;  // "floor-substituted", "asymptotic", "vacuous", ...

    static BoundResult inapplicable(BoundKind kind, std::string citation,
                                    std::string why);
};

std::string boundKindName(BoundKind k);

}  // namespace dioph
