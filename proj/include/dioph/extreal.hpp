#pragma once

#include <optional>
#include <string>

#include "dioph/interval.hpp"

namespace dioph {

// Thrown when a formula hits an undefined extended-real combination
// (0 * inf, inf - inf, 0/0). These are rejected, never defined.
struct InconsistentExtended : std::domain_error {
    explicit InconsistentExtended(const std::string& what) : std::domain_error(what) {}
};

// Extended real: exact rational, certified enclosure, or +infinity.
// Arithmetic follows the convention 1/inf = 0 and 1/0 = +inf; negative
// infinity never arises in the formulas handled here.
class ExtReal {
public:
    ExtReal() : kind_(Kind::Exact), exact_(0) {}
    ExtReal(Rat v) : kind_(Kind::Exact), exact_(std::move(v)) {}
    ExtReal(long v) : kind_(Kind::Exact), exact_(v) {}
    ExtReal(int v) : kind_(Kind::Exact), exact_(v) {}
    ExtReal(Ivl v) : kind_(Kind::Enclosed), ivl_(std::move(v)) {
        if (ivl_.isPoint()) {
            kind_ = Kind::Exact;
            exact_ = ivl_.lo;
        }
    }
    static ExtReal infinity() {
        ExtReal r;
        r.kind_ = Kind::Inf;
        return r;
    }

    bool isInf() const { return kind_ == Kind::Inf; }
    bool isExact() const { return kind_ == Kind::Exact; }
    bool isEnclosed() const { return kind_ == Kind::Enclosed; }
    bool isFinite() const { return kind_ != Kind::Inf; }

    const Rat& exact() const {
        if (!isExact()) throw std::logic_error("not an exact rational");
        return exact_;
    }
    Ivl enclosure() const {
        if (isInf()) throw std::logic_error("infinite value has no enclosure");
        return isExact() ? Ivl::point(exact_) : ivl_;
    }

    // Certified sign tests (false means "not certified", not negation).
    bool certainlyPositive() const;
    bool certainlyNegative() const;
    bool certainlyZero() const { return isExact() && exact_ == 0; }

    ExtReal operator-() const;
    // 1/x with the stated conventions; throws on zero-straddling enclosures
    // and on certainly-negative values.
    ExtReal reciprocal() const;

    friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
    friend ExtReal operator-(const ExtReal& a, const ExtReal& b);
    friend ExtReal operator*(const ExtReal& a, const ExtReal& b);
    friend ExtReal operator/(const ExtReal& a, const ExtReal& b);

    friend bool operator==(const ExtReal& a, const ExtReal& b);

    std::string str() const;                  // exact display ("p/q", "[..]", "inf")
    std::string display(int digits) const;    // decimal display

    static ExtReal fromString(const std::string& s);

private:
    enum class Kind { Exact, Enclosed, Inf };
    Kind kind_;
    Rat exact_;
    Ivl ivl_;
};

// Certified tri-state order of the represented values. Equal infinities
// and overlapping enclosures report Overlap.
Cmp compare(const ExtReal& a, const ExtReal& b);

// True only when the order is certified.
std::optional<bool> certifiedLess(const ExtReal& a, const ExtReal& b);
std::optional<bool> certifiedLessEq(const ExtReal& a, const ExtReal& b);

// Pointwise min/max (interval semantics on enclosures).
ExtReal minExt(const ExtReal& a, const ExtReal& b);
ExtReal maxExt(const ExtReal& a, const ExtReal& b);

}  // namespace dioph
