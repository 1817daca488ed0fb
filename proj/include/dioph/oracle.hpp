#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dioph/interval.hpp"
#include "dioph/roots.hpp"

namespace dioph {

// Queryable source of enclosures of one fixed real constant. Every call
// returns an interval of width <= eps containing the same real; successive
// queries are nested-compatible. Implementations are safe for concurrent
// queries (internal caches are mutex-guarded).
class NumberOracle {
public:
    virtual ~NumberOracle() = default;
    virtual Ivl enclosure(const Rat& eps) const = 0;
    virtual std::string name() const = 0;
    // Search bounds where the constant has engineered close approximations
    // (Liouville-type constructions); empty for generic constants.
    virtual std::vector<Int> spikeHints(const Int& xmax) const { return {}; }
    // Exactly representable rationals are fine for plumbing but rejected
    // for exponent estimation.
    virtual bool isRationalValue() const { return false; }
};

using OraclePtr = std::shared_ptr<const NumberOracle>;

// Root of an integer polynomial isolated by a bracket with certified
// opposite endpoint signs. Irreducibility is the caller's responsibility.
OraclePtr makeAlgebraic(const std::vector<Int>& coeffs, const Rat& lo, const Rat& hi,
                        std::string name = "");

// zeta = sum_{k>=1} b^{-k!}.
OraclePtr makeLiouville(int base);

// zeta = 0.(P(h0))_b (P(h0+1))_b ... with P non-constant, positive leading
// coefficient; the start index skips any non-positive values.
OraclePtr makeChampernowne(int base, const std::vector<Int>& polyCoeffs);

// Deterministic seeded digit stream in the given base.
OraclePtr makeDigitRandom(std::uint64_t seed, int base);

// Continued fraction [a0; a1, a2, ...] with an eventually-periodic rule:
// preperiod then repeating period (period may be empty for finite = rational).
OraclePtr makeCfDefined(const std::vector<Int>& preperiod,
                        const std::vector<Int>& period, std::string name = "");

// Exact rational constant (plumbing/test stub).
OraclePtr makeRationalStub(const Rat& value);

// Enclosures of zeta^1..zeta^n, each of width <= eps.
std::vector<Ivl> powersEnclosure(const NumberOracle& oracle, int n, const Rat& eps);

}  // namespace dioph
