#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dioph/extreal.hpp"
#include "dioph/interval.hpp"

namespace dioph {

// Query for h_N^lambda = dim{zeta : lambda_N(zeta) >= lambda}.
struct DimensionQuery {
    int N;
    Rat lambda;
};

// dim{w_n >= w} = (n+1)/(w+1) for w >= n (0 for w = inf).
Rat bernDimension(int n, const ExtReal& w);

struct PartitionInterval {
    int n;
    Rat lo;
    std::optional<Rat> hi;  // absent for the unbounded first interval
};

// The N intervals I_1..I_N partitioning [1/N, inf).
std::vector<PartitionInterval> partitionIntervals(int N);

// Index n with lambda in I_n; nullopt when lambda < 1/N.
std::optional<int> partitionSelect(int N, const Rat& lambda);

// The optimisable lower-bound expression maximised by the partition choice:
// (1+n)(1+lambda-n*lambda) / ((1+lambda)(N+1-n)).
Rat schauherExpression(int N, int n, const Rat& lambda);

// One evaluated bound at a query point. Exact sources carry a rational
// value; the asymptotic sources carry a 12-digit midpoint of an enclosure
// of the N-free leading term and never enter the envelopes.
struct DimBound {
    std::string source;
    bool applicable = false;
    bool gKind = false;       // proven for the strict-inequality set only
    bool asymptotic = false;  // leading term, O(1/N) correction unquantified
    std::optional<Rat> value;
};

std::vector<DimBound> lowerBounds(const DimensionQuery& q);
std::vector<DimBound> upperBounds(const DimensionQuery& q);

struct EnvelopePoint {
    DimensionQuery query;
    std::vector<DimBound> lower, upper;
    std::optional<Rat> lowerEnvelope, upperEnvelope;
    bool consistent = true;  // lowerEnvelope <= upperEnvelope when both exist
};

// Full bound table at one point. The upper envelope combines h-valid
// sources with left limits of the g-only step bounds.
EnvelopePoint envelopeAt(const DimensionQuery& q);

// Grid evaluation (parallel over points, output ordered by the grid).
std::vector<EnvelopePoint> figureData(int N, const std::vector<Rat>& grid);

// Fixed column orders used by the CSV/SVG emitters.
const std::vector<std::string>& lowerSourceNames();
const std::vector<std::string>& upperSourceNames();

std::string envelopeCsv(const std::vector<EnvelopePoint>& rows);
std::string envelopeSvg(const std::vector<EnvelopePoint>& rows);

// N-free leading terms of the fixed-ratio bounds at lambda_tilde >= 1.
struct AsymptoticRatioBounds {
    Ivl lower;                         // 1/(2t - 1 + 2 sqrt(t^2 - t))
    std::optional<Rat> upperBaldda;    // 1/(t - 2) for t >= 3
    std::optional<Ivl> upperBalduin;   // 2t/(2t - 1 + sqrt(4t^2 - 8t + 1)), t >= 2
};
AsymptoticRatioBounds asymptoticRatioBounds(const Rat& lambdaTilde,
                                            const Rat& width = Rat(1, 1000000000));

// Crossing of the continued Beresnevich line with the piecewise partition
// bound, isolated to the requested width.
Ivl beresnTrittIntersection(int N, const Rat& width);

}  // namespace dioph
