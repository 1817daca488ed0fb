#pragma once

#include <variant>
#include <vector>

#include "dioph/interval.hpp"
#include "dioph/oracle.hpp"

namespace dioph {

struct SimWitness {
    Int x;
    std::vector<Int> y;
    friend bool operator==(const SimWitness& a, const SimWitness& b) {
        return a.x == b.x && a.y == b.y;
    }
};

struct PolyWitness {
    std::vector<Int> coeffs;  // coeffs[i] multiplies zeta^i
    Int height() const;
    friend bool operator==(const PolyWitness& a, const PolyWitness& b) {
        return a.coeffs == b.coeffs;
    }
};

struct BestApproxRecord {
    Int X;
    std::variant<SimWitness, PolyWitness> witness;
    Ivl error;           // certified enclosure of the achieved minimum
    Ivl sampleExponent;  // -log(error)/log(X); [0,0] when X = 1

    std::string witnessString() const;
};

struct SearchOptions {
    int threads = 0;             // 0 = library default
    long lambdaCeiling = 4;      // measurable exponent ceiling (precision policy)
    long long budget = 1000000000;  // candidate-evaluation guard
    int refineRounds = 48;       // extra halvings before declaring a tie
};

// Exhaustive minimum of max_i |zeta^i x - y_i| over 1 <= x <= X.
// Parallel kernel (deterministic, thread-count independent) and the serial
// reference it is tested against.
BestApproxRecord bestSimultaneous(const NumberOracle& oracle, int n, const Int& X,
                                  const SearchOptions& opts = {});
BestApproxRecord bestSimultaneousSerial(const NumberOracle& oracle, int n,
                                        const Int& X, const SearchOptions& opts = {});

// Exhaustive minimum of |P(zeta)| over nonzero integer polynomials with
// deg <= n and H(P) <= X (sign-canonical; candidates indistinguishable from
// zero at full refinement are excluded per the strict positivity in the
// defining inequality).
BestApproxRecord bestPolynomial(const NumberOracle& oracle, int n, const Int& X,
                                const SearchOptions& opts = {});
BestApproxRecord bestPolynomialSerial(const NumberOracle& oracle, int n,
                                      const Int& X, const SearchOptions& opts = {});

// Incremental simultaneous search over a growing bound, used by the
// schedule-driven estimators. Precision is pinned to the final bound.
class SimSearcher {
public:
    SimSearcher(const NumberOracle& oracle, int n, const Int& finalX,
                const SearchOptions& opts = {});
    ~SimSearcher();
    SimSearcher(const SimSearcher&) = delete;
    SimSearcher& operator=(const SimSearcher&) = delete;

    // Extends the scanned range to [1, X] and returns the record at X.
    BestApproxRecord recordAt(const Int& X);

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace dioph
