#include "dioph/search.hpp"

#include <algorithm>

#include "dioph/realfun.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dioph {

namespace {

// Fixed-point view of zeta^1..zeta^n at scale 2^B:
// zeta^i lies in [L[i], L[i] + s[i]] / 2^B with small s[i].
struct PowerTable {
    long bits = 0;
    Int full, half;          // 2^B, 2^(B-1)
    std::vector<Int> L, s;   // index 0 unused for the simultaneous side

    void build(const NumberOracle& oracle, int n, long B) {
        bits = B;
        full = 1;
        mpz_mul_2exp(full.get_mpz_t(), full.get_mpz_t(), static_cast<unsigned long>(B));
        half = full >> 1;
        Rat eps(1, full);
        std::vector<Ivl> powers = powersEnclosure(oracle, n, eps);
        L.assign(static_cast<size_t>(n) + 1, Int(0));
        s.assign(static_cast<size_t>(n) + 1, Int(0));
        for (int i = 1; i <= n; ++i) {
            const Ivl& p = powers[static_cast<size_t>(i - 1)];
            Int lo = floorInt(p.lo * eps.get_den());
            Int hi = ceilInt(p.hi * eps.get_den());
            L[static_cast<size_t>(i)] = lo;
            s[static_cast<size_t>(i)] = hi - lo;
        }
    }
};

long bitLength(const Int& v) {
    return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

// Distance of the interval [T, T+W]/2^B to the nearest integer, as
// numerators over 2^B, plus the witness integer.
struct DistResult {
    Int lo, hi, y;
};

DistResult distToNearest(const Int& T, const Int& W, const PowerTable& pt) {
    DistResult d;
    Int q = T >> static_cast<unsigned long>(pt.bits);
    Int r = T - (q << static_cast<unsigned long>(pt.bits));
    Int rw = r + W;
    if (rw >= pt.full) {  // interval crosses the next integer
        d.y = q + 1;
        d.lo = 0;
        d.hi = std::max(Int(pt.full - r), Int(rw - pt.full));
        return d;
    }
    if (rw <= pt.half) {
        d.y = q;
        d.lo = r;
        d.hi = rw;
        return d;
    }
    if (r >= pt.half) {
        d.y = q + 1;
        d.lo = pt.full - rw;
        d.hi = pt.full - r;
        return d;
    }
    // straddles the half-integer: tent peak
    d.y = (2 * r + W <= pt.full) ? q : Int(q + 1);
    d.lo = std::min(r, Int(pt.full - rw));
    d.hi = pt.half;
    return d;
}

// Candidates not yet certifiedly beaten. Entries whose lower endpoint is
// zero (possible exact hits) are held apart so their shrinking upper
// endpoints cannot prune genuine competitors.
template <typename Witness>
struct Front {
    struct Entry {
        Int lo, hi;
        Witness wit;
    };
    std::vector<Entry> entries;
    std::vector<Entry> zeroSuspects;
    bool haveMinHi = false;
    Int minHi;

    bool wouldReject(const Int& lo) const { return haveMinHi && lo > minHi; }

    void offer(Int lo, Int hi, Witness wit) {
        if (lo == 0) {
            zeroSuspects.push_back(Entry{std::move(lo), std::move(hi), std::move(wit)});
            return;
        }
        if (wouldReject(lo)) return;
        if (!haveMinHi || hi < minHi) {
            minHi = hi;
            haveMinHi = true;
        }
        entries.push_back(Entry{std::move(lo), std::move(hi), std::move(wit)});
        prune();
        if (entries.size() > 65536)
            throw std::runtime_error("search front overflow (pathological overlap)");
    }

    void prune() {
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [this](const Entry& e) { return e.lo > minHi; }),
                      entries.end());
    }

    void absorb(const Front& other) {
        for (const Entry& e : other.zeroSuspects) zeroSuspects.push_back(e);
        for (const Entry& e : other.entries) offer(e.lo, e.hi, e.wit);
    }
};

// ---------------------------------------------------------------------------
// Simultaneous side
// ---------------------------------------------------------------------------

struct SimContext {
    const NumberOracle* oracle = nullptr;
    int n = 0;
    PowerTable pt;
    SearchOptions opts;

    void build(const NumberOracle& o, int n_, const Int& X, const SearchOptions& op) {
        if (n_ < 1) throw std::invalid_argument("n must be >= 1");
        if (X < 1) throw std::invalid_argument("X must be >= 1");
        oracle = &o;
        n = n_;
        opts = op;
        Int cands = X * n_;
        if (cands > op.budget)
            throw std::invalid_argument("enumeration budget exceeded");
        long B = (op.lambdaCeiling + 2) * std::max<long>(bitLength(X), 1) + 8;
        pt.build(o, n_, B);
    }
};

using SimFront = Front<SimWitness>;

// Certified error interval numerators (over 2^bits) for a single x.
std::pair<Int, Int> simErrorAt(const SimContext& ctx, const PowerTable& pt,
                               const Int& x, std::vector<Int>* yOut) {
    Int lo(0), hi(0);
    if (yOut) yOut->assign(static_cast<size_t>(ctx.n), Int(0));
    for (int i = 1; i <= ctx.n; ++i) {
        Int T = x * pt.L[static_cast<size_t>(i)];
        Int W = x * pt.s[static_cast<size_t>(i)];
        DistResult d = distToNearest(T, W, pt);
        if (i == 1 || d.lo > lo) lo = d.lo;
        if (i == 1 || d.hi > hi) hi = d.hi;
        if (yOut) (*yOut)[static_cast<size_t>(i - 1)] = d.y;
    }
    return {lo, hi};
}

void scanSimRange(const SimContext& ctx, const Int& from, const Int& to,
                  SimFront& front) {
    const PowerTable& pt = ctx.pt;
    int n = ctx.n;
    std::vector<Int> T(static_cast<size_t>(n) + 1), W(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        T[static_cast<size_t>(i)] = from * pt.L[static_cast<size_t>(i)];
        W[static_cast<size_t>(i)] = from * pt.s[static_cast<size_t>(i)];
    }
    Int lo, hi;
    for (Int x = from; x <= to; ++x) {
        bool first = true;
        bool skip = false;
        for (int i = 1; i <= n && !skip; ++i) {
            DistResult d = distToNearest(T[static_cast<size_t>(i)],
                                         W[static_cast<size_t>(i)], pt);
            if (first || d.lo > lo) lo = d.lo;
            if (first || d.hi > hi) hi = d.hi;
            first = false;
            if (lo != 0 && front.wouldReject(lo)) skip = true;
        }
        if (!skip) {
            std::vector<Int> y;
            simErrorAt(ctx, pt, x, &y);
            front.offer(lo, hi, SimWitness{x, std::move(y)});
        }
        for (int i = 1; i <= n; ++i) {
            T[static_cast<size_t>(i)] += pt.L[static_cast<size_t>(i)];
            W[static_cast<size_t>(i)] += pt.s[static_cast<size_t>(i)];
        }
    }
}

// Refines every surviving candidate at a higher precision table.
void refineSim(const SimContext& ctx, SimFront& front, long extraBits) {
    PowerTable fine;
    fine.build(*ctx.oracle, ctx.n, ctx.pt.bits + extraBits);
    SimFront next;
    auto reeval = [&](const SimFront::Entry& e) {
        std::vector<Int> y;
        auto [lo, hi] = simErrorAt(ctx, fine, e.wit.x, &y);
        next.offer(lo, hi, SimWitness{e.wit.x, std::move(y)});
    };
    for (const auto& e : front.entries) reeval(e);
    for (const auto& e : front.zeroSuspects) reeval(e);
    front = std::move(next);
}

BestApproxRecord finishSim(const SimContext& ctx, SimFront front, const Int& X) {
    long extra = 64;
    for (int round = 0; round < ctx.opts.refineRounds; ++round) {
        bool needWork = front.entries.size() + front.zeroSuspects.size() > 1 ||
                        front.entries.empty();
        if (!needWork) break;
        refineSim(ctx, front, extra);
        extra *= 2;
        if (front.entries.size() <= 1 && front.zeroSuspects.empty()) break;
    }
    if (front.entries.empty()) {
        if (!front.zeroSuspects.empty()) {
            // Exact-valued oracles let us decide zero exactly.
            Ivl probe = ctx.oracle->enclosure(Rat(1, 4));
            if (probe.isPoint() || ctx.oracle->isRationalValue())
                throw std::domain_error(
                    "rational input: simultaneous error hits zero exactly");
            throw std::runtime_error(
                "precision budget exceeded: cannot certify a nonzero minimum");
        }
        throw std::logic_error("empty search front");
    }
    // Deterministic tie-break: smallest x among surviving contenders.
    const SimFront::Entry* best = &front.entries.front();
    for (const auto& e : front.entries)
        if (e.wit.x < best->wit.x) best = &e;

    // Polish the winner to a tight relative width.
    PowerTable fine;
    long bits = ctx.pt.bits;
    Int lo = best->lo, hi = best->hi;
    std::vector<Int> y = best->wit.y;
    Int x = best->wit.x;
    Rat errLo(lo, ctx.pt.full), errHi(hi, ctx.pt.full);
    for (int round = 0; round < ctx.opts.refineRounds; ++round) {
        if (errLo > 0 && (errHi - errLo) * 100 <= errLo) break;
        bits += 64;
        fine.build(*ctx.oracle, ctx.n, bits);
        auto [l2, h2] = simErrorAt(ctx, fine, x, &y);
        errLo = Rat(l2, fine.full);
        errHi = Rat(h2, fine.full);
    }
    if (errHi == 0)
        throw std::domain_error("rational input: exact zero approximation error");
    if (errLo == 0)
        throw std::runtime_error(
            "precision budget exceeded: zero-straddling winner error");

    BestApproxRecord rec;
    rec.X = X;
    rec.witness = SimWitness{x, y};
    rec.error = Ivl(errLo, errHi);
    if (X >= 2) {
        Rat w(1, 1000000000);
        Ivl lg = logEnclosure(rec.error, w);
        Ivl lx = logRat(Rat(X), w);
        rec.sampleExponent = -(lg / lx);
    } else {
        rec.sampleExponent = Ivl::point(Rat(0));
    }
    return rec;
}

std::vector<std::pair<Int, Int>> splitRange(const Int& from, const Int& to,
                                            int pieces) {
    std::vector<std::pair<Int, Int>> out;
    Int total = to - from + 1;
    if (total <= 0) return out;
    Int base = total / pieces, rem = total % pieces;
    Int cur = from;
    for (int i = 0; i < pieces && cur <= to; ++i) {
        Int len = base + (Int(i) < rem ? 1 : 0);
        if (len == 0) continue;
        Int end = cur + len - 1;
        out.emplace_back(cur, end);
        cur = end + 1;
    }
    return out;
}

int effectiveThreads(const SearchOptions& opts) {
#ifdef _OPENMP
    return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
    return 1;
#endif
}

SimFront scanSimParallel(const SimContext& ctx, const Int& from, const Int& to,
                         int threads) {
    auto ranges = splitRange(from, to, std::max(1, threads * 8));
    std::vector<SimFront> partial(ranges.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
#endif
    for (long i = 0; i < static_cast<long>(ranges.size()); ++i) {
        const auto& r = ranges[static_cast<size_t>(i)];
        scanSimRange(ctx, r.first, r.second, partial[static_cast<size_t>(i)]);
    }
    SimFront merged;
    for (const SimFront& f : partial) merged.absorb(f);
    return merged;
}

// ---------------------------------------------------------------------------
// Polynomial side
// ---------------------------------------------------------------------------

struct PolyContext {
    const NumberOracle* oracle = nullptr;
    int n = 0;
    Int X;
    PowerTable pt;
    SearchOptions opts;

    void build(const NumberOracle& o, int n_, const Int& X_, const SearchOptions& op) {
        if (n_ < 1) throw std::invalid_argument("n must be >= 1");
        if (X_ < 1) throw std::invalid_argument("X must be >= 1");
        if (n_ > 3) throw std::invalid_argument(
            "enumeration budget: polynomial search supports n <= 3");
        Int count = powInt(2 * X_ + 1, static_cast<unsigned long>(n_) + 1);
        if (count > op.budget)
            throw std::invalid_argument("enumeration budget exceeded");
        oracle = &o;
        n = n_;
        X = X_;
        opts = op;
        long B = (op.lambdaCeiling + 2) * std::max<long>(bitLength(X_), 1) + 8;
        pt.build(o, n_, B);
    }
};

using PolyFront = Front<PolyWitness>;

// |interval| for a signed numerator interval.
void absInterval(const Int& lo, const Int& hi, Int& outLo, Int& outHi) {
    if (lo >= 0) {
        outLo = lo;
        outHi = hi;
    } else if (hi <= 0) {
        outLo = -hi;
        outHi = -lo;
    } else {
        outLo = 0;
        outHi = std::max(Int(-lo), hi);
    }
}

std::pair<Int, Int> polyErrorAt(const PolyContext& ctx, const PowerTable& pt,
                                const std::vector<Int>& coeffs) {
    Int lo(0), hi(0);
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const Int& a = coeffs[static_cast<size_t>(i)];
        if (a == 0) continue;
        Int cl, ch;
        if (i == 0) {
            cl = a << static_cast<unsigned long>(pt.bits);
            ch = cl;
        } else {
            const Int& Li = pt.L[static_cast<size_t>(i)];
            Int Ui = Li + pt.s[static_cast<size_t>(i)];
            if (a > 0) {
                cl = a * Li;
                ch = a * Ui;
            } else {
                cl = a * Ui;
                ch = a * Li;
            }
        }
        lo += cl;
        hi += ch;
    }
    Int alo, ahi;
    absInterval(lo, hi, alo, ahi);
    return {alo, ahi};
}

// Scans all candidates with fixed leading term coeffs[d] = lead and free
// lower coefficients, maintaining interval partial sums per level.
void scanPolyJob(const PolyContext& ctx, int d, const Int& lead, PolyFront& front) {
    const PowerTable& pt = ctx.pt;
    std::vector<Int> coeffs(static_cast<size_t>(d) + 1, Int(0));
    coeffs[static_cast<size_t>(d)] = lead;

    // partial sums over levels d..1 (numerator intervals)
    std::vector<Int> sumLo(static_cast<size_t>(d) + 2, Int(0));
    std::vector<Int> sumHi(static_cast<size_t>(d) + 2, Int(0));
    {
        const Int& Ld = pt.L[static_cast<size_t>(d)];
        Int Ud = Ld + pt.s[static_cast<size_t>(d)];
        if (d == 0) {
            sumLo[1] = 0;
            sumHi[1] = 0;
        } else {
            sumLo[static_cast<size_t>(d)] = lead * Ld;
            sumHi[static_cast<size_t>(d)] = lead * Ud;
        }
    }

    // Iterative odometer over levels d-1..0.
    std::function<void(int)> descend = [&](int level) {
        if (level == 0) {
            // innermost: incremental walk over a_0
            Int valLo = sumLo[1] - (ctx.X << static_cast<unsigned long>(pt.bits));
            Int valHi = sumHi[1] - (ctx.X << static_cast<unsigned long>(pt.bits));
            Int step = Int(1) << static_cast<unsigned long>(pt.bits);
            for (Int a0 = -ctx.X; a0 <= ctx.X; ++a0) {
                if (d != 0 || a0 > 0) {  // skip the zero polynomial; d=0 needs a0>=1
                    Int alo, ahi;
                    absInterval(valLo, valHi, alo, ahi);
                    if (!(alo != 0 && front.wouldReject(alo))) {
                        coeffs[0] = a0;
                        std::vector<Int> full = coeffs;
                        full.resize(static_cast<size_t>(ctx.n) + 1, Int(0));
                        front.offer(alo, ahi, PolyWitness{std::move(full)});
                    }
                }
                valLo += step;
                valHi += step;
            }
            coeffs[0] = 0;
            return;
        }
        const Int& Li = pt.L[static_cast<size_t>(level)];
        Int Ui = Li + pt.s[static_cast<size_t>(level)];
        for (Int a = -ctx.X; a <= ctx.X; ++a) {
            coeffs[static_cast<size_t>(level)] = a;
            Int cl, ch;
            if (a > 0) { cl = a * Li; ch = a * Ui; }
            else if (a < 0) { cl = a * Ui; ch = a * Li; }
            else { cl = 0; ch = 0; }
            sumLo[static_cast<size_t>(level)] = sumLo[static_cast<size_t>(level) + 1] + cl;
            sumHi[static_cast<size_t>(level)] = sumHi[static_cast<size_t>(level) + 1] + ch;
            descend(level - 1);
        }
        coeffs[static_cast<size_t>(level)] = 0;
    };

    if (d == 0) {
        descend(0);
    } else {
        sumLo[static_cast<size_t>(d) + 1] = 0;  // unused sentinel
        sumHi[static_cast<size_t>(d) + 1] = 0;
        // levels d-1 .. 0 vary; seed the partial sum of level d computed above
        if (d >= 1) {
            // copy level-d sums downward through the recursion entry
            std::function<void(int)> start = [&](int level) { descend(level); };
            start(d - 1);
        }
    }
}

bool lexLess(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

void refinePoly(const PolyContext& ctx, PolyFront& front, long extraBits) {
    PowerTable fine;
    fine.build(*ctx.oracle, ctx.n, ctx.pt.bits + extraBits);
    PolyFront next;
    auto reeval = [&](const PolyFront::Entry& e) {
        auto [lo, hi] = polyErrorAt(ctx, fine, e.wit.coeffs);
        next.offer(lo, hi, e.wit);
    };
    for (const auto& e : front.entries) reeval(e);
    for (const auto& e : front.zeroSuspects) reeval(e);
    front = std::move(next);
}

BestApproxRecord finishPoly(const PolyContext& ctx, PolyFront front, const Int& X) {
    long extra = 64;
    for (int round = 0; round < ctx.opts.refineRounds; ++round) {
        bool needWork = front.entries.size() + front.zeroSuspects.size() > 1 ||
                        front.entries.empty();
        if (!needWork) break;
        refinePoly(ctx, front, extra);
        extra *= 2;
        if (front.entries.size() == 1 && front.zeroSuspects.empty()) break;
    }
    if (front.entries.empty()) {
        if (!front.zeroSuspects.empty()) {
            Ivl probe = ctx.oracle->enclosure(Rat(1, 4));
            if (probe.isPoint() || ctx.oracle->isRationalValue())
                throw std::domain_error("rational input: |P(zeta)| = 0 exactly");
            throw std::runtime_error(
                "precision budget exceeded: every candidate straddles zero");
        }
        throw std::logic_error("empty polynomial front");
    }
    // Unresolved zero-straddlers are excluded: the defining inequality is
    // strict, and at full refinement they are indistinguishable from exact
    // vanishing.
    const PolyFront::Entry* best = &front.entries.front();
    for (const auto& e : front.entries)
        if (lexLess(e.wit.coeffs, best->wit.coeffs)) best = &e;

    long bits = ctx.pt.bits;
    Int lo = best->lo, hi = best->hi;
    Rat errLo(lo, ctx.pt.full), errHi(hi, ctx.pt.full);
    PolyWitness wit = best->wit;
    for (int round = 0; round < ctx.opts.refineRounds; ++round) {
        if (errLo > 0 && (errHi - errLo) * 100 <= errLo) break;
        bits += 64;
        PowerTable fine;
        fine.build(*ctx.oracle, ctx.n, bits);
        auto [l2, h2] = polyErrorAt(ctx, fine, wit.coeffs);
        errLo = Rat(l2, fine.full);
        errHi = Rat(h2, fine.full);
    }
    if (errHi == 0) throw std::domain_error("rational input: exact zero evaluation");
    if (errLo == 0)
        throw std::runtime_error("precision budget exceeded: winner straddles zero");

    BestApproxRecord rec;
    rec.X = X;
    rec.witness = wit;
    rec.error = Ivl(errLo, errHi);
    if (X >= 2) {
        Rat w(1, 1000000000);
        Ivl lg = logEnclosure(rec.error, w);
        Ivl lx = logRat(Rat(X), w);
        rec.sampleExponent = -(lg / lx);
    } else {
        rec.sampleExponent = Ivl::point(Rat(0));
    }
    return rec;
}

struct PolyJob {
    int d;
    Int lead;
};

std::vector<PolyJob> polyJobs(int n, const Int& X) {
    std::vector<PolyJob> jobs;
    for (int d = n; d >= 0; --d)
        for (Int lead(1); lead <= X; ++lead) jobs.push_back(PolyJob{d, lead});
    return jobs;
}

}  // namespace

Int PolyWitness::height() const {
    Int h(0);
    for (const Int& c : coeffs) h = std::max(h, Int(abs(c)));
    return h;
}

std::string BestApproxRecord::witnessString() const {
    if (std::holds_alternative<SimWitness>(witness)) {
        const auto& w = std::get<SimWitness>(witness);
        std::string s = "x=" + w.x.get_str() + ";y=";
        for (size_t i = 0; i < w.y.size(); ++i) s += (i ? "," : "") + w.y[i].get_str();
        return s;
    }
    const auto& w = std::get<PolyWitness>(witness);
    std::string s = "poly=";
    for (size_t i = 0; i < w.coeffs.size(); ++i)
        s += (i ? "," : "") + w.coeffs[i].get_str();
    return s;
}

BestApproxRecord bestSimultaneousSerial(const NumberOracle& oracle, int n,
                                        const Int& X, const SearchOptions& opts) {
    SimContext ctx;
    ctx.build(oracle, n, X, opts);
    SimFront front;
    scanSimRange(ctx, Int(1), X, front);
    return finishSim(ctx, std::move(front), X);
}

BestApproxRecord bestSimultaneous(const NumberOracle& oracle, int n, const Int& X,
                                  const SearchOptions& opts) {
    SimContext ctx;
    ctx.build(oracle, n, X, opts);
    SimFront front = scanSimParallel(ctx, Int(1), X, effectiveThreads(opts));
    return finishSim(ctx, std::move(front), X);
}

BestApproxRecord bestPolynomialSerial(const NumberOracle& oracle, int n, const Int& X,
                                      const SearchOptions& opts) {
    PolyContext ctx;
    ctx.build(oracle, n, X, opts);
    PolyFront front;
    for (const PolyJob& job : polyJobs(n, X)) scanPolyJob(ctx, job.d, job.lead, front);
    return finishPoly(ctx, std::move(front), X);
}

BestApproxRecord bestPolynomial(const NumberOracle& oracle, int n, const Int& X,
                                const SearchOptions& opts) {
    PolyContext ctx;
    ctx.build(oracle, n, X, opts);
    std::vector<PolyJob> jobs = polyJobs(n, X);
    std::vector<PolyFront> partial(jobs.size());
    int threads = effectiveThreads(opts);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
#endif
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i)
        scanPolyJob(ctx, jobs[static_cast<size_t>(i)].d,
                    jobs[static_cast<size_t>(i)].lead,
                    partial[static_cast<size_t>(i)]);
    PolyFront merged;
    for (const PolyFront& f : partial) merged.absorb(f);
    (void)threads;
    return finishPoly(ctx, std::move(merged), X);
}

struct SimSearcher::Impl {
    SimContext ctx;
    SimFront front;
    Int scannedTo{0};
    int threads;
};

SimSearcher::SimSearcher(const NumberOracle& oracle, int n, const Int& finalX,
                         const SearchOptions& opts)
    : impl_(new Impl) {
    impl_->ctx.build(oracle, n, finalX, opts);
    impl_->threads = effectiveThreads(opts);
}

SimSearcher::~SimSearcher() { delete impl_; }

BestApproxRecord SimSearcher::recordAt(const Int& X) {
    if (X <= impl_->scannedTo)
        throw std::invalid_argument("schedule points must be strictly increasing");
    SimFront add = scanSimParallel(impl_->ctx, impl_->scannedTo + 1, X,
                                   impl_->threads);
    impl_->front.absorb(add);
    impl_->scannedTo = X;
    SimFront copy = impl_->front;
    return finishSim(impl_->ctx, std::move(copy), X);
}

}  // namespace dioph
