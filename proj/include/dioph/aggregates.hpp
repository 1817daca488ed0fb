#pragma once

#include <optional>
#include <vector>

#include "dioph/bounds.hpp"
#include "dioph/exponents.hpp"

namespace dioph {

// Asymptotic summary quantities of an exponent profile. Fields labelled
// *Bar are limsups, *Under liminfs; tau/sigma/theta are the log-scale
// orders. When `estimate` is set the values are finite-prefix estimators
// over the last `tailWindow` indices, not limits.
struct AggregateQuantities {
    ExtReal wBar = ExtReal(Rat(1));
    ExtReal wUnder = ExtReal(Rat(1));
    ExtReal lambdaBar = ExtReal(Rat(1));
    ExtReal lambdaUnder = ExtReal(Rat(1));
    std::optional<ExtReal> wHatBar, wHatUnder;  // uniform-side inputs when known
    ExtReal tau = ExtReal(Rat(1));
    ExtReal sigma = ExtReal(Rat(0));
    ExtReal theta = ExtReal(Rat(0));
    bool estimate = false;
    int tailWindow = 0;
    bool nLambdaDivergent = false;  // n*lambda_n grows across the tail
    std::optional<Rat> lambdaTailConstant;  // detected constant lambda tail
};

enum class AggregateTarget {
    LambdaBar,
    LambdaUnder,
    WHatStarUnder,
    WHatStarBar,
    LambdaHatBar,
    LambdaHatUnder,
    WHatBar,
    WHatUnder,
};
AggregateTarget aggregateTargetFromString(const std::string& s);

// Two-sided bounds on the target quantity from the available aggregates.
Corridor aggregateBounds(const AggregateQuantities& q, AggregateTarget target);

// Consistency report for the open conjecture wBar = lambdaBar (and the
// underline analogue): never asserted, only measured.
struct ConjectureReport {
    bool comparable = false;
    bool consistent = false;
    std::string detail;
};
ConjectureReport conjectureConsistency(const AggregateQuantities& q);

struct MahlerClass {
    enum Kind { S, T, U } kind = S;
    int m = 0;  // subclass index for U-numbers; 0 when undetermined
    bool isLiouville() const { return kind == U && m == 1; }
    std::string name() const;
    friend bool operator==(const MahlerClass& a, const MahlerClass& b) {
        return a.kind == b.kind && (a.kind != U || a.m == b.m);
    }
};

struct InconsistentLimits : std::domain_error {
    explicit InconsistentLimits(const std::string& what) : std::domain_error(what) {}
};

// Limit data feeding the classification criteria. Any consistent subset
// may be supplied; contradictory fields raise InconsistentLimits.
struct LimitData {
    std::optional<ExtReal> limLambda;             // lim lambda_n
    std::optional<ExtReal> limsupNLambda;         // limsup n lambda_n
    std::optional<ExtReal> limWHatStar;           // lim what*_n
    std::optional<ExtReal> liminfWHatStarOverN;   // liminf what*_n / n
    std::optional<int> firstInfiniteW;            // minimal m with w_m = inf
};

MahlerClass classify(const LimitData& data);

enum class SpectrumKind { AlgebraicLikeZzz, U2Besser };
SpectrumKind spectrumKindFromString(const std::string& s);

// Known full lambda-spectra: the algebraic-like profile of a U_m-number
// with trivial lower-degree data, and the U_2 family parameterised by
// w_1 = w.
std::vector<ExtReal> spectrumSequence(SpectrumKind kind, int m, const Rat& w,
                                      int length);

}  // namespace dioph
