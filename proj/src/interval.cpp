#include "dioph/interval.hpp"

#include <algorithm>

namespace dioph {

Ivl operator+(const Ivl& a, const Ivl& b) { return Ivl(a.lo + b.lo, a.hi + b.hi); }

Ivl operator-(const Ivl& a, const Ivl& b) { return Ivl(a.lo - b.hi, a.hi - b.lo); }

Ivl operator-(const Ivl& a) { return Ivl(-a.hi, -a.lo); }

Ivl operator*(const Ivl& a, const Ivl& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Ivl(std::move(lo), std::move(hi));
}

Ivl operator/(const Ivl& a, const Ivl& b) {
    if (b.containsZero()) throw std::domain_error("division by interval containing zero");
    return a * Ivl(Rat(1) / b.hi, Rat(1) / b.lo);
}

Ivl intervalArith(const Ivl& a, const Ivl& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': case 'x': return a * b;
        case '/': return a / b;
        default: throw std::invalid_argument(std::string("unknown interval op: ") + op);
    }
}

Ivl hull(const Ivl& a, const Ivl& b) {
    return Ivl(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

std::optional<Ivl> intersect(const Ivl& a, const Ivl& b) {
    Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Ivl(std::move(lo), std::move(hi));
}

Ivl absIvl(const Ivl& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return Ivl(Rat(0), std::max(-a.lo, a.hi));
}

Cmp compare(const Ivl& a, const Ivl& b) {
    if (a.hi < b.lo) return Cmp::Less;
    if (b.hi < a.lo) return Cmp::Greater;
    return Cmp::Overlap;
}

std::string toString(const Ivl& a) {
    return "[" + ratToString(a.lo) + ", " + ratToString(a.hi) + "]";
}

std::string displayString(const Ivl& a, int digits) {
    return "[" + decimalString(a.lo, digits) + ", " + decimalString(a.hi, digits) + "]";
}

}  // namespace dioph
