#include "dioph/prefix.hpp"

#include <algorithm>
#include <random>

#include "dioph/realfun.hpp"
#include "json.hpp"

namespace dioph {

namespace {

using nlohmann::json;

json prefixToJsonObj(const ExponentPrefix& p) {
    json j;
    j["role"] = roleName(p.role);
    j["provenance"] = provenanceName(p.provenance);
    json vals = json::array();
    for (const ExtReal& v : p.values) {
        if (v.isInf()) vals.push_back("inf");
        else if (v.isExact()) vals.push_back(ratToString(v.exact()));
        else vals.push_back(json::array({ratToString(v.enclosure().lo),
                                         ratToString(v.enclosure().hi)}));
    }
    j["values"] = std::move(vals);
    return j;
}

ExponentPrefix prefixFromJsonObj(const json& j) {
    ExponentPrefix p;
    p.role = roleFromString(j.at("role").get<std::string>());
    if (j.contains("provenance"))
        p.provenance = provenanceFromString(j.at("provenance").get<std::string>());
    for (const auto& v : j.at("values")) {
        if (v.is_array())
            p.values.emplace_back(Ivl(ratFromString(v.at(0).get<std::string>()),
                                      ratFromString(v.at(1).get<std::string>())));
        else
            p.values.push_back(ExtReal::fromString(v.get<std::string>()));
    }
    return p;
}

}  // namespace

std::string provenanceName(Provenance p) {
    switch (p) {
        case Provenance::User: return "user";
        case Provenance::Generated: return "generated";
        case Provenance::Measured: return "measured";
    }
    throw std::logic_error("bad provenance");
}

Provenance provenanceFromString(const std::string& s) {
    if (s == "user") return Provenance::User;
    if (s == "generated") return Provenance::Generated;
    if (s == "measured") return Provenance::Measured;
    throw std::invalid_argument("unknown provenance: " + s);
}

const ExtReal& ExponentPrefix::at(int n) const {
    if (n < 1 || n > length()) throw std::out_of_range("prefix index");
    return values[static_cast<size_t>(n - 1)];
}

std::string ExponentPrefix::toJson() const { return prefixToJsonObj(*this).dump(2); }

ExponentPrefix ExponentPrefix::fromJson(const std::string& s) {
    return prefixFromJsonObj(json::parse(s));
}

std::string PrefixPair::toJson() const {
    json j;
    j["w"] = prefixToJsonObj(w);
    j["lambda"] = prefixToJsonObj(lambda);
    return j.dump(2);
}

PrefixPair PrefixPair::fromJson(const std::string& s) {
    json j = json::parse(s);
    PrefixPair p;
    p.w = prefixFromJsonObj(j.at("w"));
    p.lambda = prefixFromJsonObj(j.at("lambda"));
    return p;
}

std::string ValidationReport::summary() const {
    if (passed()) return "passed";
    std::string s = "failed: ";
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) s += ", ";
        s += violations[i].citation;
    }
    return s;
}

namespace {

void addViolation(ValidationReport& rep, std::string citation,
                  std::vector<int> indices, ExtReal lhs, ExtReal rhs,
                  std::string detail) {
    rep.violations.push_back(Violation{std::move(citation), std::move(indices),
                                       std::move(lhs), std::move(rhs),
                                       std::move(detail)});
}

void checkSinglePrefix(const ExponentPrefix& p, ValidationReport& rep) {
    bool wSide = p.role == Role::W || p.role == Role::WHat;
    for (int n = 1; n <= p.length(); ++n) {
        const ExtReal& v = p.at(n);
        if (wSide) {
            if (certifiedLess(v, ExtReal(Rat(n))) == true)
                addViolation(rep, "wmono", {n}, v, ExtReal(Rat(n)),
                             roleName(p.role) + "_n below Dirichlet floor n");
        } else {
            if (certifiedLess(v, ExtReal(Rat(1, n))) == true)
                addViolation(rep, "ldiri", {n}, v, ExtReal(Rat(1, n)),
                             roleName(p.role) + "_n below Dirichlet floor 1/n");
        }
        if (n >= 2) {
            const ExtReal& prev = p.at(n - 1);
            if (wSide) {
                if (certifiedLess(v, prev) == true)
                    addViolation(rep, "obv", {n - 1, n}, prev, v,
                                 "w-prefix must be non-decreasing");
            } else {
                if (certifiedLess(prev, v) == true)
                    addViolation(rep, "reihenfolge", {n - 1, n}, prev, v,
                                 "lambda-prefix must be non-increasing");
            }
        }
    }
}

}  // namespace

ValidationReport validatePrefix(const std::optional<ExponentPrefix>& w,
                                const std::optional<ExponentPrefix>& lambda) {
    ValidationReport rep;
    if (w && w->role != Role::W && w->role != Role::WHat)
        throw std::invalid_argument("first prefix must carry a w-side role");
    if (lambda && lambda->role != Role::Lambda && lambda->role != Role::LambdaHat)
        throw std::invalid_argument("second prefix must carry a lambda-side role");

    if (w) checkSinglePrefix(*w, rep);
    if (lambda) checkSinglePrefix(*lambda, rep);

    if (lambda) {
        const ExponentPrefix& lam = *lambda;
        int K = lam.length();
        // herz: lambda_{k*u} >= (lambda_k - u + 1)/u.
        for (int k = 1; k <= K; ++k) {
            for (int u = 2; static_cast<long>(k) * u <= K; ++u) {
                int n = k * u;
                ExtReal low = (lam.at(k) - ExtReal(Rat(u - 1))) / ExtReal(Rat(u));
                if (certifiedLess(lam.at(n), low) == true)
                    addViolation(rep, "herz", {k, u, n}, lam.at(n), low,
                                 "lambda_{ku} below (lambda_k - u + 1)/u");
            }
        }
        // trampel: lambda_n > 1 forces equality with (lambda_1 - n + 1)/n.
        for (int n = 2; n <= K; ++n) {
            if (certifiedLess(ExtReal(1), lam.at(n)) == true) {
                ExtReal want = (lam.at(1) - ExtReal(Rat(n - 1))) / ExtReal(Rat(n));
                if (compare(lam.at(n), want) != Cmp::Overlap)
                    addViolation(rep, "trampel", {n}, lam.at(n), want,
                                 "lambda_n > 1 must equal (lambda_1 - n + 1)/n");
            }
        }
    }

    if (w && lambda) {
        int K = std::min(w->length(), lambda->length());
        for (int n = 1; n <= K; ++n) {
            const ExtReal& wn = w->at(n);
            const ExtReal& ln = lambda->at(n);
            if (certifiedLess(wn, ExtReal(Rat(n))) == true) continue;  // reported above
            Corridor c = khintchineCorridor(n, wn);
            if (certifiedLess(ln, c.lower.value) == true)
                addViolation(rep, "khintchine", {n}, ln, c.lower.value,
                             "lambda_n below transference corridor");
            if (certifiedLess(c.upper.value, ln) == true)
                addViolation(rep, "khintchine", {n}, ln, c.upper.value,
                             "lambda_n above transference corridor");
        }
        // vor2 caps: lambda_N <= 1/m once N >= ceil(w_m) + 2m - 1.
        for (int m = 1; m <= w->length(); ++m) {
            const ExtReal& wm = w->at(m);
            if (wm.isInf()) continue;
            Ivl e = wm.enclosure();
            Int thresholdI = ceilInt(e.hi) + 2 * m - 1;
            if (!thresholdI.fits_sint_p()) continue;
            int threshold = static_cast<int>(thresholdI.get_si());
            for (int N = threshold; N <= lambda->length(); ++N) {
                if (certifiedLess(ExtReal(Rat(1, m)), lambda->at(N)) == true)
                    addViolation(rep, "vor2", {m, N}, lambda->at(N),
                                 ExtReal(Rat(1, m)),
                                 "lambda_N exceeds 1/m for N >= ceil(w_m)+2m-1");
            }
        }
        // Aggregate corridor (asymptotic): advisory only on finite prefixes.
        if (K >= 4) {
            AggregateQuantities q = aggregatesFromPrefix(
                PrefixPair{*w, *lambda}, std::max(2, K / 2));
            Corridor c = aggregateBounds(q, AggregateTarget::LambdaBar);
            auto inside = [&q, &c]() {
                return certifiedLess(q.lambdaBar, c.lower.value) != true &&
                       certifiedLess(c.upper.value, q.lambdaBar) != true;
            };
            if (!inside())
                rep.notes.push_back(
                    "advisory: prefix estimate of limsup n*lambda_n sits outside "
                    "the leftie corridor (asymptotic, not a violation)");
        }
    }
    return rep;
}

namespace {

// max over tail of (value op index), generic helper.
template <typename F>
ExtReal tailMax(const ExponentPrefix& p, int from, F&& f) {
    ExtReal best;
    bool first = true;
    for (int n = from; n <= p.length(); ++n) {
        ExtReal v = f(n, p.at(n));
        if (first || certifiedLess(best, v) == true) best = v, first = false;
    }
    return best;
}

template <typename F>
ExtReal tailMin(const ExponentPrefix& p, int from, F&& f) {
    ExtReal best;
    bool first = true;
    for (int n = from; n <= p.length(); ++n) {
        ExtReal v = f(n, p.at(n));
        if (first || certifiedLess(v, best) == true) best = v, first = false;
    }
    return best;
}

ExtReal logRatioEstimate(const ExtReal& value, int n) {
    // log value / log n as an enclosure; inf propagates.
    if (value.isInf()) return ExtReal::infinity();
    Ivl e = value.enclosure();
    if (e.lo <= 0) throw std::domain_error("log of nonpositive prefix value");
    Rat width(1, 1000000);
    Ivl lg = logEnclosure(e, width);
    Ivl ln = logRat(Rat(n), width);
    return ExtReal(lg / ln);
}

}  // namespace

AggregateQuantities aggregatesFromPrefix(const PrefixPair& pair, int tailWindow) {
    int K = std::min(pair.w.length(), pair.lambda.length());
    if (tailWindow < 2) throw std::invalid_argument("tail window must be >= 2");
    if (K < tailWindow) throw std::invalid_argument("prefix shorter than tail window");
    int from = K - tailWindow + 1;

    AggregateQuantities q;
    q.estimate = true;
    q.tailWindow = tailWindow;
    auto overN = [](int n, const ExtReal& v) { return v / ExtReal(Rat(n)); };
    auto timesN = [](int n, const ExtReal& v) { return v * ExtReal(Rat(n)); };
    q.wBar = tailMax(pair.w, from, overN);
    q.wUnder = tailMin(pair.w, from, overN);
    q.lambdaBar = tailMax(pair.lambda, from, timesN);
    q.lambdaUnder = tailMin(pair.lambda, from, timesN);

    bool anyInfW = false;
    for (int n = from; n <= pair.w.length(); ++n) anyInfW |= pair.w.at(n).isInf();
    q.tau = anyInfW ? ExtReal::infinity()
                    : tailMax(pair.w, std::max(from, 2),
                              [](int n, const ExtReal& v) {
                                  return logRatioEstimate(v, n);
                              });
    bool anyInfL = false;
    for (int n = from; n <= pair.lambda.length(); ++n)
        anyInfL |= pair.lambda.at(n).isInf();
    q.sigma = anyInfL ? ExtReal::infinity()
                      : tailMax(pair.lambda, std::max(from, 2),
                                [](int n, const ExtReal& v) {
                                    return logRatioEstimate(v, n);
                                });
    q.theta = q.tau.isInf() ? ExtReal(Rat(0)) : q.tau.reciprocal();

    // Divergence of n*lambda_n: compare an early window against the tail.
    int lateFrom = from;
    int earlyFrom = std::max(1, K - 3 * tailWindow + 1);
    int earlyTo = earlyFrom + tailWindow - 1;
    ExtReal lateMax = q.lambdaBar;
    ExtReal earlyMax;
    bool first = true;
    for (int n = earlyFrom; n <= std::min(earlyTo, pair.lambda.length()); ++n) {
        ExtReal v = pair.lambda.at(n) * ExtReal(Rat(n));
        if (first || certifiedLess(earlyMax, v) == true) earlyMax = v, first = false;
    }
    if (!first) {
        if (lateMax.isInf())
            q.nLambdaDivergent = !earlyMax.isInf();
        else if (!earlyMax.isInf())
            q.nLambdaDivergent =
                certifiedLess(earlyMax * ExtReal(Rat(5, 4)), lateMax) == true;
    }
    (void)lateFrom;

    // Constant lambda tail (exact values only).
    bool constant = true;
    std::optional<Rat> tailValue;
    for (int n = from; n <= pair.lambda.length(); ++n) {
        const ExtReal& v = pair.lambda.at(n);
        if (!v.isExact()) { constant = false; break; }
        if (!tailValue) tailValue = v.exact();
        else if (*tailValue != v.exact()) { constant = false; break; }
    }
    if (constant && tailValue) q.lambdaTailConstant = *tailValue;
    return q;
}

LimitData estimateLimits(const PrefixPair& pair, int tailWindow) {
    AggregateQuantities q = aggregatesFromPrefix(pair, tailWindow);
    LimitData d;
    int K = std::min(pair.w.length(), pair.lambda.length());
    int from = K - tailWindow + 1;

    for (int m = 1; m <= pair.w.length(); ++m) {
        if (pair.w.at(m).isInf()) { d.firstInfiniteW = m; break; }
    }

    bool allInfL = true;
    for (int n = from; n <= pair.lambda.length(); ++n)
        allInfL &= pair.lambda.at(n).isInf();
    if (allInfL) {
        d.limLambda = ExtReal::infinity();
    } else if (q.lambdaTailConstant) {
        d.limLambda = ExtReal(*q.lambdaTailConstant);
    } else {
        d.limLambda = ExtReal(Rat(0));  // decaying tail: estimated limit 0
    }
    d.limsupNLambda = q.nLambdaDivergent ? ExtReal::infinity() : q.lambdaBar;
    return d;
}

MahlerClass classifyPrefix(const PrefixPair& pair, int tailWindow) {
    return classify(estimateLimits(pair, tailWindow));
}

namespace {

// Small random rationals on a fixed grid, reproducible across platforms.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long pick(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rat grid(long num_lo, long num_hi, long den) {
        return Rat(pick(num_lo, num_hi), den);
    }
};

Rat khintchineLowerRat(int n, const Rat& w) {
    return w / (Rat(n - 1) * w + n);
}

Rat khintchineUpperRat(int n, const Rat& w) { return (w - n + 1) / n; }

// vor2 cap at index N given exact finite w-prefix values.
std::optional<Rat> vor2Cap(const std::vector<Rat>& w, int N) {
    std::optional<Rat> cap;
    for (int m = 1; m <= static_cast<int>(w.size()); ++m) {
        Int threshold = ceilInt(w[static_cast<size_t>(m - 1)]) + 2 * m - 1;
        if (threshold <= N) {
            Rat c(1, m);
            if (!cap || c < *cap) cap = c;
        }
    }
    return cap;
}

PrefixPair assemble(std::vector<ExtReal> w, std::vector<ExtReal> lam) {
    PrefixPair p;
    p.w.role = Role::W;
    p.w.provenance = Provenance::Generated;
    p.w.values = std::move(w);
    p.lambda.role = Role::Lambda;
    p.lambda.provenance = Provenance::Generated;
    p.lambda.values = std::move(lam);
    return p;
}

PrefixPair generateS(Rng& rng, int K) {
    Rat c = Rat(rng.pick(4, 12), 4);       // w_n/n target in [1, 3]
    Rat rho = Rat(rng.pick(10, 16), 8);    // n*lambda_n target in [5/4, 2]
    std::vector<Rat> w(static_cast<size_t>(K));
    for (int n = 1; n <= K; ++n)
        w[static_cast<size_t>(n - 1)] = Rat(ceilInt(Rat(4 * n) * c), 4);
    std::vector<Rat> lam(static_cast<size_t>(K));
    lam[0] = w[0];  // n = 1 corridor collapses to equality
    for (int n = 2; n <= K; ++n) {
        const Rat& wn = w[static_cast<size_t>(n - 1)];
        Rat lo = std::max(Rat(1, n), khintchineLowerRat(n, wn));
        // herz floors from lambda_1 (the only value possibly above 1)
        for (int u = 2; u <= n; ++u) {
            if (n % u == 0) {
                int k = n / u;
                Rat h = (lam[static_cast<size_t>(k - 1)] - (u - 1)) / u;
                if (h > lo) lo = h;
            }
        }
        Rat hi = std::min(lam[static_cast<size_t>(n - 2)],
                          khintchineUpperRat(n, wn));
        if (hi > 1) hi = Rat(1);  // stay out of the trampel-forced zone
        if (auto cap = vor2Cap(w, n); cap && *cap < hi) hi = *cap;
        if (lo > hi) throw std::logic_error("S-generator infeasible corridor");
        Rat want = rho / n;
        Rat pick = std::min(std::max(want, lo), hi);
        lam[static_cast<size_t>(n - 1)] = pick;
    }
    std::vector<ExtReal> wv(w.begin(), w.end()), lv(lam.begin(), lam.end());
    return assemble(std::move(wv), std::move(lv));
}

PrefixPair generateT(Rng& rng, int K) {
    std::vector<ExtReal> w, lam;
    w.reserve(static_cast<size_t>(K));
    lam.reserve(static_cast<size_t>(K));
    for (int n = 1; n <= K; ++n) {
        Int r = sqrt(Int(n));
        if (r * r < n) r += 1;  // ceil(sqrt n)
        lam.emplace_back(Rat(1, r));
        if (n == 1) w.emplace_back(Rat(1));
        else if (n == 2) w.emplace_back(Rat(2));
        else w.emplace_back(Rat(static_cast<long>(n) * n + rng.pick(0, 3)));
    }
    return assemble(std::move(w), std::move(lam));
}

PrefixPair generateU(Rng& rng, int K, int m) {
    std::vector<ExtReal> w, lam;
    if (m == 1) {
        for (int n = 1; n <= K; ++n) {
            w.push_back(ExtReal::infinity());
            lam.push_back(ExtReal::infinity());
        }
        return assemble(std::move(w), std::move(lam));
    }
    Rat w1 = Rat(rng.pick(4, 8), 4);  // w_1 in [1, 2]
    for (int n = 1; n <= K; ++n) {
        if (n == 1) w.emplace_back(w1);
        else if (n <= m - 1) w.emplace_back(Rat(n));
        else w.push_back(ExtReal::infinity());
        if (n == 1) lam.emplace_back(w1);
        else lam.emplace_back(Rat(1, std::min(n, m - 1)));
    }
    return assemble(std::move(w), std::move(lam));
}

}  // namespace

PrefixPair generateAdmissible(std::uint64_t seed, int K, const MahlerClass& target) {
    if (K < 1) throw std::invalid_argument("K must be >= 1");
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + 1);
    switch (target.kind) {
        case MahlerClass::S: return generateS(rng, K);
        case MahlerClass::T: return generateT(rng, K);
        case MahlerClass::U: {
            int m = target.m;
            if (m == 0) m = static_cast<int>(rng.pick(1, 5));
            return generateU(rng, K, m);
        }
    }
    throw std::logic_error("bad class");
}

}  // namespace dioph
