#include "dioph/exponents.hpp"

namespace dioph {

std::string roleName(Role r) {
    switch (r) {
        case Role::W: return "w";
        case Role::WHat: return "w_hat";
        case Role::Lambda: return "lambda";
        case Role::LambdaHat: return "lambda_hat";
        case Role::WStar: return "w_star";
        case Role::WHatStar: return "w_hat_star";
    }
    throw std::logic_error("bad role");
}

Role roleFromString(const std::string& s) {
    if (s == "w") return Role::W;
    if (s == "w_hat" || s == "what") return Role::WHat;
    if (s == "lambda") return Role::Lambda;
    if (s == "lambda_hat" || s == "lambdahat") return Role::LambdaHat;
    if (s == "w_star" || s == "wstar") return Role::WStar;
    if (s == "w_hat_star" || s == "whatstar") return Role::WHatStar;
    throw std::invalid_argument("unknown exponent role: " + s);
}

bool isUniformRole(Role r) {
    return r == Role::WHat || r == Role::LambdaHat || r == Role::WHatStar;
}

bool isLambdaSide(Role r) { return r == Role::Lambda || r == Role::LambdaHat; }

void checkAdmissible(Role role, int n, int j, const ExtReal& value) {
    if (n < 1) throw std::invalid_argument("exponent index n must be positive");
    if (j < 1 || j > n + 1) throw std::invalid_argument("minima index j out of [1, n+1]");
    if (value.isInf()) return;
    if (j > 1) return;  // floors below are stated for the classical j = 1 values
    if (role == Role::W || role == Role::WHat) {
        if (certifiedLess(value, ExtReal(Rat(n))) == true)
            throw std::invalid_argument(roleName(role) + "_" + std::to_string(n) +
                                        " below Dirichlet floor n");
    } else if (role == Role::Lambda || role == Role::LambdaHat) {
        if (certifiedLess(value, ExtReal(Rat(1, n))) == true)
            throw std::invalid_argument(roleName(role) + "_" + std::to_string(n) +
                                        " below Dirichlet floor 1/n");
    }
}

ExponentValue::ExponentValue(Role role_, int n_, ExtReal value_, int j_)
    : role(role_), n(n_), j(j_), value(std::move(value_)) {
    checkAdmissible(role, n, j, value);
}

BoundResult BoundResult::inapplicable(BoundKind kind, std::string citation,
                                      std::string why) {
    BoundResult r;
    r.value = ExtReal::infinity();
    r.kind = kind;
    r.applicable = false;
    r.citation = std::move(citation);
    r.note = std::move(why);
    return r;
}

std::string boundKindName(BoundKind k) {
    switch (k) {
        case BoundKind::Lower: return "lower";
        case BoundKind::Upper: return "upper";
        case BoundKind::Equality: return "equality";
    }
    throw std::logic_error("bad bound kind");
}

}  // namespace dioph
