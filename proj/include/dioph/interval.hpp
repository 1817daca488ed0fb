#pragma once

#include <optional>
#include <string>

#include "dioph/rational.hpp"

namespace dioph {

// Closed rational interval [lo, hi] certified to contain one exact real.
// Endpoints are exact rationals, so +,-,*,/ are computed exactly; no
// directed rounding is ever needed beyond the interval hull itself.
struct Ivl {
    Rat lo, hi;

    Ivl() : lo(0), hi(0) {}
    Ivl(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }
    static Ivl point(const Rat& v) { return Ivl(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool containsZero() const { return lo <= 0 && 0 <= hi; }
    bool isPoint() const { return lo == hi; }
    bool strictlyPositive() const { return lo > 0; }
    bool strictlyNegative() const { return hi < 0; }
};

Ivl operator+(const Ivl& a, const Ivl& b);
Ivl operator-(const Ivl& a, const Ivl& b);
Ivl operator-(const Ivl& a);
Ivl operator*(const Ivl& a, const Ivl& b);
// Throws std::domain_error when 0 lies in b.
Ivl operator/(const Ivl& a, const Ivl& b);

inline Ivl operator+(const Ivl& a, const Rat& b) { return a + Ivl::point(b); }
inline Ivl operator-(const Ivl& a, const Rat& b) { return a - Ivl::point(b); }
inline Ivl operator*(const Ivl& a, const Rat& b) { return a * Ivl::point(b); }
inline Ivl operator/(const Ivl& a, const Rat& b) { return a / Ivl::point(b); }
inline Ivl operator+(const Rat& a, const Ivl& b) { return Ivl::point(a) + b; }
inline Ivl operator-(const Rat& a, const Ivl& b) { return Ivl::point(a) - b; }
inline Ivl operator*(const Rat& a, const Ivl& b) { return Ivl::point(a) * b; }
inline Ivl operator/(const Rat& a, const Ivl& b) { return Ivl::point(a) / b; }

// The generic op surface used by the CLI and tests.
Ivl intervalArith(const Ivl& a, const Ivl& b, char op);

Ivl hull(const Ivl& a, const Ivl& b);
std::optional<Ivl> intersect(const Ivl& a, const Ivl& b);

// |interval| as an interval.
Ivl absIvl(const Ivl& a);

// Certified three-way comparison of the enclosed reals.
enum class Cmp { Less, Greater, Overlap };
Cmp compare(const Ivl& a, const Ivl& b);

std::string toString(const Ivl& a);
// "[lo, hi]" with fixed decimal endpoints (outward-safe display only).
std::string displayString(const Ivl& a, int digits);

}  // namespace dioph
