#pragma once

#include <optional>
#include <vector>

#include "dioph/exponents.hpp"
#include "dioph/interval.hpp"

namespace dioph {

struct Corridor {
    BoundResult lower, upper;
};

// Two-sided transference corridor for lambda_n given w_n:
//   w/((n-1)w + n) <= lambda_n <= (w - n + 1)/n.
// Infinite w is handled by the limit values. Throws when w < n.
Corridor khintchineCorridor(int n, const ExtReal& w);

// lambda_{n*k} >= (lambda_k - n + 1)/n, clamped below at 1/(nk).
BoundResult herzLower(int k, int n, const ExtReal& lambdaK);

// Conditional identity lambda_n = (lambda_1 - n + 1)/n valid when
// lambda_n > 1; inapplicable when the produced value contradicts that.
BoundResult trampelEquality(int n, const ExtReal& lambda1);

enum class TransferVariant { Vor1, Vor4, Vor2 };
TransferVariant transferVariantFromString(const std::string& s);

struct TransferInputs {
    ExtReal w_n;                      // required, finite
    std::optional<ExtReal> wHatN;     // defaults to Dirichlet floor n
    std::optional<ExtReal> wHatTail;  // what_{N-n+1}, defaults to floor N-n+1
    std::optional<ExtReal> wAux;      // w_{N-2n} for Vor4 (0 when N = 2n)
};

// Upper bounds on lambda_N transferred from degree-n data.
BoundResult transferUpperLambda(TransferVariant v, int n, int N,
                                const TransferInputs& in);

enum class Lambda2nMode { Tropf, SSReform, Conditional };
Lambda2nMode lambda2nModeFromString(const std::string& s);

// Upper bounds for lambda_hat_{2n}:
//  - Tropf:       sqrt((n + 1/(2n))^2 - 1/n) - n + 1/(2n)
//  - SSReform:    the parametric-geometry reformulation at a given lambda_{2n}
//  - Conditional: root of n^{2n} t^{2n+1} - (n+1) t + 1 in (1/(n+1), 1/n)
BoundResult lambda2nUpper(int n, Lambda2nMode mode,
                          const std::optional<ExtReal>& lambda2n = std::nullopt,
                          const Rat& width = Rat(1, 1000000000));

// Exact rational radicand of the Tropf bound, (n + 1/(2n))^2 - 1/n.
Rat tropfRadicand(int n);

// Unique positive root of -1 + sum_{k>=1} (-2)^{k+1} x^k / (k+1)!,
// equivalently of e^{-2x} = 1 - x; lies in (0.796, 0.797).
Ivl alphaSeriesRoot(const Rat& width);

// Reference constant (2 + sqrt 5 - sqrt(7 + 2 sqrt 5)) / 2 = 0.4245... ,
// the classical upper bound for lambda_hat_3.
Ivl royConstant(const Rat& width);

enum class NextVariant { Sturz, Salsa, Traene, Unkon, Tja, Unkonp, Tjap, Ribiza };
NextVariant nextVariantFromString(const std::string& s);

struct NextParams {
    int n = 0;           // degree parameter
    int u = 1;           // step count (Sturz/Salsa/Unkon/Tja)
    int j = 0;           // offset within 0..u-1 (Sturz/Salsa)
    int m = 0;           // companion index (Traene/Ribiza)
    ExtReal wHatOrStar;  // what*_n or what_n depending on variant
    std::optional<ExtReal> w_m;  // w_m for Traene/Ribiza
};

// Upper bounds on the next exponent(s) under uniform-exponent excess
// hypotheses; see the per-variant preconditions in the implementation.
BoundResult nextExponentUpper(NextVariant v, const NextParams& p);

// w_3 <= (t^3 - t^2 + 3t - 4)/(t - 2)^2 at t = what_2, valid on
// (2, (3+sqrt5)/2].
BoundResult wkBound(const ExtReal& wHat2);
// Supremum of the numerator over the valid range (attained at (3+sqrt5)/2).
Ivl wkDConstant(const Rat& width);

enum class DecayKind { Adb, Champ, Gbush, Gwbush };
DecayKind decayKindFromString(const std::string& s);

// Growth bounds on w*_m (Adb/Champ) and decay bounds on lambda_N
// (Gbush/Gwbush), each with a user-supplied ineffective constant c.
BoundResult decayEnvelope(DecayKind kind, const Rat& c, int n, const Rat& eps,
                          const Int& mOrN, const Rat& width = Rat(1, 1000000000));

enum class StarDirection { Duzu, Bound2, Besides, Najo, WirsingLower };
StarDirection starDirectionFromString(const std::string& s);

struct RoleBound {
    Role role;
    int n;
    BoundResult bound;
};

// Conversions between the starred, plain and uniform exponent families.
std::vector<RoleBound> starConversions(StarDirection d,
                                       const std::vector<ExponentValue>& inputs);

// sigma = -1/tau and theta = 1/tau for tau in [1, inf].
std::pair<ExtReal, ExtReal> sigmaThetaFromTau(const ExtReal& tau);

}  // namespace dioph
