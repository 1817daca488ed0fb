#include "dioph/hausdorff.hpp"

#include <algorithm>

#include "dioph/realfun.hpp"
#include "dioph/roots.hpp"

namespace dioph {

Rat bernDimension(int n, const ExtReal& w) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (w.isInf()) return Rat(0);
    if (certifiedLess(w, ExtReal(Rat(n))) == true)
        throw std::invalid_argument("bern dimension requires w >= n");
    if (!w.isExact()) throw std::invalid_argument("bern dimension takes exact w");
    return Rat(n + 1) / (w.exact() + 1);
}

std::vector<PartitionInterval> partitionIntervals(int N) {
    if (N < 2) throw std::invalid_argument("partition requires N >= 2");
    std::vector<PartitionInterval> out;
    auto lowerEndpoint = [N](int n) {
        long nl = n;
        return Rat(N + 2) / Rat(N + 2L * N * nl + nl - nl * nl);
    };
    out.push_back(PartitionInterval{1, Rat(N + 2) / Rat(3 * N), std::nullopt});
    for (int n = 2; n <= N; ++n)
        out.push_back(PartitionInterval{n, lowerEndpoint(n), lowerEndpoint(n - 1)});
    return out;
}

std::optional<int> partitionSelect(int N, const Rat& lambda) {
    if (lambda < Rat(1, N)) return std::nullopt;
    if (lambda >= Rat(N + 2) / Rat(3 * N)) return 1;
    for (const PartitionInterval& iv : partitionIntervals(N)) {
        if (iv.n == 1) continue;
        if (lambda >= iv.lo && lambda < *iv.hi) return iv.n;
    }
    // lambda == 1/N lands in I_N by the closed lower endpoint.
    return N;
}

Rat schauherExpression(int N, int n, const Rat& lambda) {
    return (Rat(1 + n) * (1 + lambda - n * lambda)) /
           ((1 + lambda) * Rat(N + 1 - n));
}

namespace {

DimBound inapplicableBound(std::string source, bool gKind = false,
                           bool asymptotic = false) {
    DimBound b;
    b.source = std::move(source);
    b.gKind = gKind;
    b.asymptotic = asymptotic;
    return b;
}

DimBound ratBound(std::string source, Rat value, bool gKind = false,
                  bool asymptotic = false) {
    DimBound b;
    b.source = std::move(source);
    b.applicable = true;
    b.gKind = gKind;
    b.asymptotic = asymptotic;
    b.value = std::move(value);
    return b;
}

// Asymptotic values are displayed via a tight enclosure midpoint.
DimBound asymptoticBound(std::string source, const Ivl& v) {
    DimBound b;
    b.source = std::move(source);
    b.applicable = true;
    b.asymptotic = true;
    b.value = v.mid();
    return b;
}

Rat altegleValue(int N, const Rat& lambda) { return Rat(2) / ((1 + lambda) * N); }

Rat beresnValue(int N, const Rat& lambda) {
    return Rat(N + 1) / (1 + lambda) - Rat(N - 1);
}

// expre step value at ceiling index k.
std::optional<Rat> expreAt(int N, const Int& k) {
    if (k < 1) return std::nullopt;
    if (Int(N) < 3 * k - 1) return std::nullopt;
    Rat den = Rat(N) - 2 * Rat(k) + 2;
    if (den <= 0) return std::nullopt;
    return (Rat(k) + 1) / den;
}

struct FreitagChoice {
    int n;
    Rat threshold;
    Rat bound;
};

// All admissible freitag parameters for this N: 2n < N < 3n with a
// positive threshold denominator.
std::vector<FreitagChoice> freitagChoices(int N) {
    std::vector<FreitagChoice> out;
    for (int n = 1; n <= N; ++n) {
        if (!(2 * n < N && N < 3 * n)) continue;
        long nl = n, Nl = N;
        Rat gamma = Rat(Nl * Nl + 2 * nl * nl - 3 * Nl * nl + 2 * Nl - 4 * nl) /
                    Rat((nl + 1) * (Nl - 2 * nl));
        Rat den = (1 - gamma) * Nl + (2 * gamma - 1) * nl;
        if (den <= 0) continue;
        out.push_back(FreitagChoice{n, Rat(1) / den, Rat(nl + 1) / Rat(Nl - nl + 1)});
    }
    // Ties broken by smaller bound value, then smaller n.
    std::sort(out.begin(), out.end(), [](const FreitagChoice& a, const FreitagChoice& b) {
        if (a.bound != b.bound) return a.bound < b.bound;
        return a.n < b.n;
    });
    return out;
}

}  // namespace

std::vector<DimBound> lowerBounds(const DimensionQuery& q) {
    int N = q.N;
    const Rat& lam = q.lambda;
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (lam <= 0) throw std::invalid_argument("lambda must be positive");
    std::vector<DimBound> out;
    Rat floorN(1, N);

    out.push_back(lam <= floorN ? ratBound("dirichlet", Rat(1))
                                : inapplicableBound("dirichlet"));

    out.push_back(lam >= floorN ? ratBound("altegle", altegleValue(N, lam))
                                : inapplicableBound("altegle"));

    bool beresnValid = lam >= floorN && lam < Rat(3) / Rat(2 * N - 1);
    out.push_back(beresnValid ? ratBound("beresn", beresnValue(N, lam))
                              : inapplicableBound("beresn"));

    if (N >= 2) {
        auto n = partitionSelect(N, lam);
        out.push_back(n ? ratBound("tritt", schauherExpression(N, *n, lam))
                        : inapplicableBound("tritt"));
    } else {
        out.push_back(inapplicableBound("tritt"));
    }

    if (lam <= 1 && Rat(N) >= floorInt(Rat(1) / lam)) {
        Int K = floorInt((1 + lam) / (2 * lam));
        if (K >= 1 && Int(N) + 1 > K) {
            Rat v = (Rat(1 + K) * (1 + lam - Rat(K) * lam)) /
                    ((Rat(N + 1) - Rat(K)) * (1 + lam));
            out.push_back(ratBound("stolt", v));
        } else {
            out.push_back(inapplicableBound("stolt"));
        }
    } else {
        out.push_back(inapplicableBound("stolt"));
    }

    bool bervelLower = N == 2 && lam >= Rat(1, 2) && lam <= 1;
    out.push_back(bervelLower ? ratBound("bervel", (2 - lam) / (1 + lam))
                              : inapplicableBound("bervel"));

    out.push_back(lam > 1 ? ratBound("altegl", altegleValue(N, lam))
                          : inapplicableBound("altegl"));

    Rat tilde = lam * N;
    if (tilde >= 1) {
        out.push_back(asymptoticBound(
            "neuy", asymptoticRatioBounds(tilde, Rat(1, 10000000000000L)).lower));
    } else {
        out.push_back(inapplicableBound("neuy", false, true));
    }
    return out;
}

std::vector<DimBound> upperBounds(const DimensionQuery& q) {
    int N = q.N;
    const Rat& lam = q.lambda;
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (lam <= 0) throw std::invalid_argument("lambda must be positive");
    std::vector<DimBound> out;

    out.push_back(ratBound("one", Rat(1)));

    out.push_back(lam > 1 ? ratBound("altegl", altegleValue(N, lam))
                          : inapplicableBound("altegl"));

    bool bervelUpper = N >= 2 && lam >= Rat(1, 2) && lam <= 1;
    out.push_back(bervelUpper ? ratBound("bervel", (2 - lam) / (1 + lam))
                              : inapplicableBound("bervel"));

    if (lam <= 1) {
        Int k = ceilInt(Rat(1) / lam);
        auto v = expreAt(N, k);
        out.push_back(v ? ratBound("expre", *v, true) : inapplicableBound("expre", true));
    } else {
        out.push_back(inapplicableBound("expre", true));
    }

    {
        std::optional<Rat> best;
        for (const FreitagChoice& c : freitagChoices(N)) {
            if (lam >= c.threshold) {
                best = c.bound;
                break;  // choices sorted by bound value
            }
        }
        out.push_back(best ? ratBound("freitag", *best, true)
                           : inapplicableBound("freitag", true));
    }

    bool zusatzHere = N % 2 == 0 && lam == Rat(2, N);
    out.push_back(zusatzHere ? ratBound("zusatz", Rat(N + 2) / Rat(N + 4), true)
                             : inapplicableBound("zusatz", true));

    Rat tilde = lam * N;
    AsymptoticRatioBounds arb;
    bool haveArb = tilde >= 1;
    if (haveArb) arb = asymptoticRatioBounds(tilde, Rat(1, 10000000000000L));
    if (haveArb && arb.upperBalduin)
        out.push_back(asymptoticBound("balduin", *arb.upperBalduin));
    else
        out.push_back(inapplicableBound("balduin", false, true));
    if (haveArb && arb.upperBaldda)
        out.push_back(ratBound("baldda", *arb.upperBaldda, false, true));
    else
        out.push_back(inapplicableBound("baldda", false, true));
    return out;
}

namespace {

// Left limit of the combined g-kind step bounds at lambda; these bound
// h_N^lambda because H_N^lambda is contained in G_N^{lambda'} for any
// lambda' < lambda.
std::optional<Rat> gLeftLimit(int N, const Rat& lam) {
    std::optional<Rat> best;
    auto consider = [&best](const Rat& v) {
        if (!best || v < *best) best = v;
    };
    // expre: ceil(1/lambda') for lambda' just below lambda (lambda' = 1
    // itself is admissible once lambda exceeds 1).
    Rat inv = Rat(1) / lam;
    Int k = isInteger(inv) ? Int(inv.get_num() + 1) : ceilInt(inv);
    if (lam > 1) k = 1;
    if (auto v = expreAt(N, k)) consider(*v);
    // freitag: thresholds strictly below lambda.
    for (const FreitagChoice& c : freitagChoices(N))
        if (c.threshold < lam) consider(c.bound);
    // zusatz point bound at 2/N.
    if (N % 2 == 0 && lam > Rat(2, N)) consider(Rat(N + 2) / Rat(N + 4));
    return best;
}

}  // namespace

EnvelopePoint envelopeAt(const DimensionQuery& q) {
    EnvelopePoint pt;
    pt.query = q;
    pt.lower = lowerBounds(q);
    pt.upper = upperBounds(q);

    for (const DimBound& b : pt.lower) {
        if (!b.applicable || b.asymptotic) continue;
        if (!pt.lowerEnvelope || *b.value > *pt.lowerEnvelope)
            pt.lowerEnvelope = b.value;
    }
    if (pt.lowerEnvelope && *pt.lowerEnvelope < 0) pt.lowerEnvelope = Rat(0);

    for (const DimBound& b : pt.upper) {
        if (!b.applicable || b.asymptotic || b.gKind) continue;
        if (!pt.upperEnvelope || *b.value < *pt.upperEnvelope)
            pt.upperEnvelope = b.value;
    }
    if (auto g = gLeftLimit(q.N, q.lambda))
        if (!pt.upperEnvelope || *g < *pt.upperEnvelope) pt.upperEnvelope = *g;
    if (pt.upperEnvelope && *pt.upperEnvelope > 1) pt.upperEnvelope = Rat(1);

    if (q.lambda <= Rat(1, q.N)) {
        // Trivial full-measure regime.
        pt.lowerEnvelope = Rat(1);
        pt.upperEnvelope = Rat(1);
    }

    pt.consistent = !pt.lowerEnvelope || !pt.upperEnvelope ||
                    *pt.lowerEnvelope <= *pt.upperEnvelope;
    return pt;
}

std::vector<EnvelopePoint> figureData(int N, const std::vector<Rat>& grid) {
    std::vector<EnvelopePoint> rows(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(grid.size()); ++i)
        rows[static_cast<size_t>(i)] =
            envelopeAt(DimensionQuery{N, grid[static_cast<size_t>(i)]});
    return rows;
}

const std::vector<std::string>& lowerSourceNames() {
    static const std::vector<std::string> names = {
        "dirichlet", "altegle", "beresn", "tritt", "stolt", "bervel", "altegl", "neuy"};
    return names;
}

const std::vector<std::string>& upperSourceNames() {
    static const std::vector<std::string> names = {
        "one", "altegl", "bervel", "expre", "freitag", "zusatz", "balduin", "baldda"};
    return names;
}

std::string envelopeCsv(const std::vector<EnvelopePoint>& rows) {
    std::string out = "N,lambda";
    for (const auto& s : lowerSourceNames()) out += ",lower_" + s;
    for (const auto& s : upperSourceNames()) out += ",upper_" + s;
    out += ",lower_envelope,upper_envelope\n";
    auto cell = [](const DimBound& b) {
        return b.applicable ? "," + decimalString(*b.value, 12) : std::string(",");
    };
    for (const EnvelopePoint& pt : rows) {
        out += std::to_string(pt.query.N) + "," + ratToString(pt.query.lambda);
        for (const DimBound& b : pt.lower) out += cell(b);
        for (const DimBound& b : pt.upper) out += cell(b);
        out += pt.lowerEnvelope ? "," + decimalString(*pt.lowerEnvelope, 12) : ",";
        out += pt.upperEnvelope ? "," + decimalString(*pt.upperEnvelope, 12) : ",";
        out += "\n";
    }
    return out;
}

AsymptoticRatioBounds asymptoticRatioBounds(const Rat& lambdaTilde, const Rat& width) {
    if (lambdaTilde < 1)
        throw std::invalid_argument("lambda_tilde must be at least 1");
    AsymptoticRatioBounds out;
    const Rat& t = lambdaTilde;
    {
        Ivl s = sqrtEnclosure(Ivl::point(t * t - t), width / 4);
        Ivl den = Ivl::point(2 * t - 1) + Ivl::point(Rat(2)) * s;
        out.lower = Ivl::point(Rat(1)) / den;
    }
    if (t >= 3 && t > 2) out.upperBaldda = Rat(1) / (t - 2);
    if (t >= 2) {
        Ivl s = sqrtEnclosure(Ivl::point(4 * t * t - 8 * t + 1), width / 4);
        Ivl den = Ivl::point(2 * t - 1) + s;
        out.upperBalduin = Ivl::point(2 * t) / den;
    }
    return out;
}

Ivl beresnTrittIntersection(int N, const Rat& width) {
    if (N < 4) throw std::invalid_argument("needs N >= 4");
    // Continued Beresnevich line minus the partition bound changes sign
    // between the end of its validity interval and the first-interval start.
    EnclosureFn f = [N](const Rat& lam, int) {
        Rat ext = beresnValue(N, lam);
        auto n = partitionSelect(N, lam);
        if (!n) throw std::domain_error("lambda below 1/N");
        return Ivl::point(ext - schauherExpression(N, *n, lam));
    };
    Ivl bracket(Rat(3) / Rat(2 * N - 1), Rat(N + 2) / Rat(3 * N));
    return isolateRoot(f, bracket, width, 0);
}

std::string envelopeSvg(const std::vector<EnvelopePoint>& rows) {
    // Minimal deterministic polyline chart: one path per source plus the
    // two envelopes, fixed canvas, data-driven x range, y in [0, 1.05].
    const int W = 750, H = 650, ML = 60, MR = 20, MT = 20, MB = 45;
    if (rows.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>";
    Rat xmin = rows.front().query.lambda, xmax = rows.back().query.lambda;
    for (const auto& r : rows) {
        xmin = std::min(xmin, r.query.lambda);
        xmax = std::max(xmax, r.query.lambda);
    }
    if (xmax == xmin) xmax = xmin + 1;
    Rat yMaxR(21, 20);
    auto px = [&](const Rat& x) {
        Rat t = (x - xmin) / (xmax - xmin);
        return decimalString(Rat(ML) + t * (W - ML - MR), 2);
    };
    auto py = [&](const Rat& y) {
        Rat t = y / yMaxR;
        return decimalString(Rat(H - MB) - t * (H - MT - MB), 2);
    };
    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(W) +
        "\" height=\"" + std::to_string(H) + "\" viewBox=\"0 0 " + std::to_string(W) +
        " " + std::to_string(H) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg += "<line x1=\"" + std::to_string(ML) + "\" y1=\"" + std::to_string(H - MB) +
           "\" x2=\"" + std::to_string(W - MR) + "\" y2=\"" + std::to_string(H - MB) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + std::to_string(ML) + "\" y1=\"" + std::to_string(MT) +
           "\" x2=\"" + std::to_string(ML) + "\" y2=\"" + std::to_string(H - MB) +
           "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        Rat xv = xmin + (xmax - xmin) * Rat(i, 4);
        Rat yv = Rat(i, 4);
        svg += "<text x=\"" + px(xv) + "\" y=\"" + std::to_string(H - MB + 18) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + decimalString(xv, 3) +
               "</text>\n";
        svg += "<text x=\"" + std::to_string(ML - 8) + "\" y=\"" + py(yv) +
               "\" font-size=\"11\" text-anchor=\"end\">" + decimalString(yv, 2) +
               "</text>\n";
    }
    struct Series {
        std::string name, color;
        bool lowerSide;
    };
    // Colors follow the published figure convention where one exists.
    std::vector<Series> series = {
        {"beresn", "#1f4fd8", true},  {"tritt", "#d82a2a", true},
        {"altegle", "#1e9e3a", true}, {"stolt", "#a05ad8", true},
        {"bervel", "#c87820", true},  {"lower_envelope", "#000000", true},
        {"upper_envelope", "#707070", false}};
    for (const Series& s : series) {
        std::string pts;
        for (const EnvelopePoint& r : rows) {
            std::optional<Rat> v;
            if (s.name == "lower_envelope") v = r.lowerEnvelope;
            else if (s.name == "upper_envelope") v = r.upperEnvelope;
            else {
                const auto& list = s.lowerSide ? r.lower : r.upper;
                for (const DimBound& b : list)
                    if (b.source == s.name && b.applicable) v = b.value;
            }
            if (!v || *v < 0 || *v > yMaxR) continue;
            pts += px(r.query.lambda) + "," + py(*v) + " ";
        }
        if (pts.empty()) continue;
        svg += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace dioph
