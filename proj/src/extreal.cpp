#include "dioph/extreal.hpp"

namespace dioph {

bool ExtReal::certainlyPositive() const {
    if (isInf()) return true;
    if (isExact()) return exact_ > 0;
    return ivl_.strictlyPositive();
}

bool ExtReal::certainlyNegative() const {
    if (isInf()) return false;
    if (isExact()) return exact_ < 0;
    return ivl_.strictlyNegative();
}

ExtReal ExtReal::operator-() const {
    if (isInf()) throw InconsistentExtended("negation of +inf");
    if (isExact()) return ExtReal(Rat(-exact_));
    return ExtReal(-ivl_);
}

ExtReal ExtReal::reciprocal() const {
    if (isInf()) return ExtReal(Rat(0));
    if (certainlyZero()) return ExtReal::infinity();
    if (certainlyNegative()) throw InconsistentExtended("reciprocal of negative value");
    if (isExact()) return ExtReal(Rat(Rat(1) / exact_));
    if (ivl_.containsZero())
        throw std::domain_error("reciprocal of enclosure straddling zero");
    return ExtReal(Rat(1) / ivl_);
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.isInf() || b.isInf()) return ExtReal::infinity();
    if (a.isExact() && b.isExact()) return ExtReal(Rat(a.exact_ + b.exact_));
    return ExtReal(a.enclosure() + b.enclosure());
}

ExtReal operator-(const ExtReal& a, const ExtReal& b) {
    if (b.isInf()) throw InconsistentExtended(a.isInf() ? "inf - inf" : "finite - inf");
    if (a.isInf()) return ExtReal::infinity();
    if (a.isExact() && b.isExact()) return ExtReal(Rat(a.exact_ - b.exact_));
    return ExtReal(a.enclosure() - b.enclosure());
}

ExtReal operator*(const ExtReal& a, const ExtReal& b) {
    if (a.isInf() || b.isInf()) {
        const ExtReal& fin = a.isInf() ? b : a;
        if (fin.isInf()) return ExtReal::infinity();
        if (fin.certainlyPositive()) return ExtReal::infinity();
        throw InconsistentExtended("inf * value not certainly positive");
    }
    if (a.isExact() && b.isExact()) return ExtReal(Rat(a.exact_ * b.exact_));
    return ExtReal(a.enclosure() * b.enclosure());
}

ExtReal operator/(const ExtReal& a, const ExtReal& b) {
    if (b.isInf()) {
        if (a.isInf()) throw InconsistentExtended("inf / inf");
        return ExtReal(Rat(0));
    }
    if (b.certainlyZero()) {
        if (a.certainlyZero()) throw InconsistentExtended("0 / 0");
        if (a.isInf() || a.certainlyPositive()) return ExtReal::infinity();
        throw InconsistentExtended("negative / 0");
    }
    if (a.isInf()) {
        if (b.certainlyPositive()) return ExtReal::infinity();
        throw InconsistentExtended("inf / value not certainly positive");
    }
    if (a.isExact() && b.isExact()) return ExtReal(Rat(a.exact_ / b.exact_));
    return ExtReal(a.enclosure() / b.enclosure());
}

bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.isInf() || b.isInf()) return a.isInf() && b.isInf();
    if (a.isExact() && b.isExact()) return a.exact_ == b.exact_;
    Ivl x = a.enclosure(), y = b.enclosure();
    return x.lo == y.lo && x.hi == y.hi;
}

std::string ExtReal::str() const {
    if (isInf()) return "inf";
    if (isExact()) return ratToString(exact_);
    return toString(ivl_);
}

std::string ExtReal::display(int digits) const {
    if (isInf()) return "inf";
    if (isExact()) return decimalString(exact_, digits);
    return displayString(ivl_, digits);
}

ExtReal ExtReal::fromString(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF" || s == "+inf" || s == "infinity")
        return ExtReal::infinity();
    return ExtReal(ratFromString(s));
}

Cmp compare(const ExtReal& a, const ExtReal& b) {
    if (a.isInf() && b.isInf()) return Cmp::Overlap;
    if (a.isInf()) return Cmp::Greater;
    if (b.isInf()) return Cmp::Less;
    return compare(a.enclosure(), b.enclosure());
}

std::optional<bool> certifiedLess(const ExtReal& a, const ExtReal& b) {
    switch (compare(a, b)) {
        case Cmp::Less: return true;
        case Cmp::Greater: return false;
        default:
            if (a == b) return false;  // equal exact values are not strictly less
            return std::nullopt;
    }
}

std::optional<bool> certifiedLessEq(const ExtReal& a, const ExtReal& b) {
    if (a == b) return true;
    switch (compare(a, b)) {
        case Cmp::Less: return true;
        case Cmp::Greater: return false;
        default: return std::nullopt;
    }
}

ExtReal minExt(const ExtReal& a, const ExtReal& b) {
    if (a.isInf()) return b;
    if (b.isInf()) return a;
    if (a.isExact() && b.isExact()) return a.exact() <= b.exact() ? a : b;
    Ivl x = a.enclosure(), y = b.enclosure();
    return ExtReal(Ivl(std::min(x.lo, y.lo), std::min(x.hi, y.hi)));
}

ExtReal maxExt(const ExtReal& a, const ExtReal& b) {
    if (a.isInf() || b.isInf()) return ExtReal::infinity();
    if (a.isExact() && b.isExact()) return a.exact() >= b.exact() ? a : b;
    Ivl x = a.enclosure(), y = b.enclosure();
    return ExtReal(Ivl(std::max(x.lo, y.lo), std::max(x.hi, y.hi)));
}

}  // namespace dioph
