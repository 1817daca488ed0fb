#pragma once

#include <functional>
#include <vector>

#include "dioph/interval.hpp"

namespace dioph {

// Dense polynomial with rational coefficients, c[i] * x^i.
struct Poly {
    std::vector<Rat> c;

    static Poly fromIntCoeffs(const std::vector<Int>& coeffs);
    int degree() const;
    Rat eval(const Rat& x) const;       // exact Horner
    Ivl eval(const Ivl& x) const;       // interval Horner
    Poly derivative() const;
    bool isZero() const;
};

// Sign oracle: enclosure of f(x); `level` asks for a tighter evaluation
// (each level should at least halve the achievable width).
using EnclosureFn = std::function<Ivl(const Rat& x, int level)>;

// Certified sign at a point: +1/-1, or 0 when f(x) is exactly zero
// (point enclosure at zero). Throws when the sign stays undecidable at
// the maximum refinement level.
int certifiedSign(const EnclosureFn& f, const Rat& x, int maxLevel);

// Bisection on a bracket with strictly opposite certified endpoint signs.
// Returns an interval of width <= `width` containing a root. If a midpoint
// evaluates to exactly zero the point interval is returned.
Ivl isolateRoot(const EnclosureFn& f, const Ivl& bracket, const Rat& width,
                int maxLevel = 64);

// Convenience wrapper for exact polynomial sign tests.
Ivl isolateRoot(const Poly& p, const Ivl& bracket, const Rat& width);

}  // namespace dioph
