#pragma once

#include "dioph/interval.hpp"

namespace dioph {

// Validated elementary functions on rational data. Every routine returns an
// interval certified to contain the exact real value, with width at most the
// requested target (input spread is added on top for interval arguments).

// Lower/upper rational bounds on sqrt(r), r >= 0, within `width` of the truth.
Rat sqrtLower(const Rat& r, const Rat& width);
Rat sqrtUpper(const Rat& r, const Rat& width);

// Enclosure of sqrt over an interval with nonnegative lower endpoint.
Ivl sqrtEnclosure(const Ivl& a, const Rat& width);

// Natural log of a positive rational / positive interval.
Ivl logRat(const Rat& r, const Rat& width);
Ivl logEnclosure(const Ivl& a, const Rat& width);

// exp of a rational / interval.
Ivl expRat(const Rat& r, const Rat& width);
Ivl expEnclosure(const Ivl& a, const Rat& width);

// base^expo = exp(expo * log base) for base > 0.
Ivl powEnclosure(const Ivl& base, const Ivl& expo, const Rat& width);

// Enclosure of log 2 (memoised internally).
Ivl log2Enclosure(const Rat& width);

}  // namespace dioph
