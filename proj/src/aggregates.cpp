#include "dioph/aggregates.hpp"

namespace dioph {

namespace {

BoundResult mk(ExtReal v, BoundKind k, const char* cite, std::string note = "") {
    BoundResult r;
    r.value = std::move(v);
    r.kind = k;
    r.citation = cite;
    r.note = std::move(note);
    return r;
}

// (x+1)^2/(4x), the lower transference constant; x = inf gives inf.
ExtReal quarterSquare(const ExtReal& x) {
    if (x.isInf()) return ExtReal::infinity();
    ExtReal xp1 = x + ExtReal(1);
    return xp1 * xp1 / (ExtReal(4) * x);
}

std::string estimateNote(const AggregateQuantities& q) {
    if (!q.estimate) return "";
    return "prefix estimate (tail window " + std::to_string(q.tailWindow) + ")";
}

}  // namespace

AggregateTarget aggregateTargetFromString(const std::string& s) {
    if (s == "lambda_bar") return AggregateTarget::LambdaBar;
    if (s == "lambda_under") return AggregateTarget::LambdaUnder;
    if (s == "w_hat_star_under") return AggregateTarget::WHatStarUnder;
    if (s == "w_hat_star_bar") return AggregateTarget::WHatStarBar;
    if (s == "lambda_hat_bar") return AggregateTarget::LambdaHatBar;
    if (s == "lambda_hat_under") return AggregateTarget::LambdaHatUnder;
    if (s == "w_hat_bar") return AggregateTarget::WHatBar;
    if (s == "w_hat_under") return AggregateTarget::WHatUnder;
    throw std::invalid_argument("unknown aggregate target: " + s);
}

Corridor aggregateBounds(const AggregateQuantities& q, AggregateTarget target) {
    std::string note = estimateNote(q);
    switch (target) {
        case AggregateTarget::LambdaBar:
            return {mk(quarterSquare(q.wBar), BoundKind::Lower, "leftie", note),
                    mk(q.wBar + ExtReal(2), BoundKind::Upper, "leftie", note)};
        case AggregateTarget::LambdaUnder:
            return {mk(quarterSquare(q.wUnder), BoundKind::Lower, "leftie", note),
                    mk(q.wUnder + ExtReal(2), BoundKind::Upper, "leftie", note)};
        case AggregateTarget::WHatStarUnder:
            return {mk((q.wBar + ExtReal(2)).reciprocal(), BoundKind::Lower, "hum",
                       note),
                    mk(minExt(q.wUnder, ExtReal(4) / q.wBar), BoundKind::Upper, "hum",
                       note)};
        case AggregateTarget::WHatStarBar:
            return {mk((q.wUnder + ExtReal(2)).reciprocal(), BoundKind::Lower, "bug",
                       note),
                    mk(minExt(q.wBar, ExtReal(4) / q.wUnder), BoundKind::Upper, "bug",
                       note)};
        case AggregateTarget::LambdaHatBar: {
            if (!q.wHatBar || !q.wHatUnder)
                return {BoundResult::inapplicable(BoundKind::Lower, "family",
                                                  "uniform aggregates not supplied"),
                        BoundResult::inapplicable(BoundKind::Upper, "family",
                                                  "uniform aggregates not supplied")};
            return {mk(quarterSquare(*q.wHatBar), BoundKind::Lower, "family", note),
                    mk(ExtReal(1) + q.wHatUnder->reciprocal(), BoundKind::Upper,
                       "family", note)};
        }
        case AggregateTarget::LambdaHatUnder: {
            if (!q.wHatBar || !q.wHatUnder)
                return {BoundResult::inapplicable(BoundKind::Lower, "family",
                                                  "uniform aggregates not supplied"),
                        BoundResult::inapplicable(BoundKind::Upper, "family",
                                                  "uniform aggregates not supplied")};
            return {mk(quarterSquare(*q.wHatUnder), BoundKind::Lower, "family", note),
                    mk(ExtReal(1) + q.wHatBar->reciprocal(), BoundKind::Upper,
                       "family", note)};
        }
        case AggregateTarget::WHatBar:
            return {mk(ExtReal(1), BoundKind::Lower, "wmono", note),
                    mk(minExt(ExtReal(2),
                              minExt(q.wBar, ExtReal(1) + ExtReal(4) / q.wUnder)),
                       BoundKind::Upper, "day", note)};
        case AggregateTarget::WHatUnder:
            return {mk(ExtReal(1), BoundKind::Lower, "wmono", note),
                    mk(minExt(ExtReal(2),
                              minExt(q.wUnder, ExtReal(1) + ExtReal(4) / q.wBar)),
                       BoundKind::Upper, "day", note)};
    }
    throw std::logic_error("bad aggregate target");
}

ConjectureReport conjectureConsistency(const AggregateQuantities& q) {
    ConjectureReport r;
    if (q.estimate) {
        // Finite prefixes can only report distance, never settle the conjecture.
        r.comparable = true;
        auto gap = [](const ExtReal& a, const ExtReal& b) -> std::string {
            if (a.isInf() || b.isInf())
                return a.isInf() == b.isInf() ? std::string("both infinite")
                                              : std::string("one side infinite");
            return "difference " + (a - b).display(6);
        };
        r.detail = "wBar vs lambdaBar: " + gap(q.wBar, q.lambdaBar) +
                   "; wUnder vs lambdaUnder: " + gap(q.wUnder, q.lambdaUnder);
        r.consistent = true;
        return r;
    }
    r.comparable = true;
    r.consistent = (compare(q.wBar, q.lambdaBar) == Cmp::Overlap) &&
                   (compare(q.wUnder, q.lambdaUnder) == Cmp::Overlap);
    r.detail = r.consistent ? "limits overlap" : "limits certified distinct";
    return r;
}

std::string MahlerClass::name() const {
    switch (kind) {
        case S: return "S";
        case T: return "T";
        case U:
            if (m == 1) return "Liouville";
            if (m == 0) return "U";
            return "U_" + std::to_string(m);
    }
    throw std::logic_error("bad class");
}

MahlerClass classify(const LimitData& data) {
    // U_m from the w-profile directly.
    if (data.firstInfiniteW) {
        int m = *data.firstInfiniteW;
        if (m < 1) throw std::invalid_argument("firstInfiniteW must be >= 1");
        if (data.limLambda) {
            const ExtReal& L = *data.limLambda;
            if (m == 1) {
                if (!L.isInf())
                    throw InconsistentLimits(
                        "U_1 requires lim lambda_n = inf");
            } else if (compare(L, ExtReal(Rat(1, m - 1))) != Cmp::Overlap) {
                throw InconsistentLimits("lim lambda_n inconsistent with U_" +
                                         std::to_string(m));
            }
        }
        return MahlerClass{MahlerClass::U, m};
    }

    if (data.limLambda) {
        const ExtReal& L = *data.limLambda;
        if (L.isInf()) return MahlerClass{MahlerClass::U, 1};
        if (L.certainlyPositive()) {
            if (!L.isExact())
                throw InconsistentLimits(
                    "positive lim lambda_n must be an exact reciprocal 1/(m-1)");
            Rat inv = Rat(1) / L.exact();
            if (!isInteger(inv))
                throw InconsistentLimits(
                    "lim lambda_n = " + L.str() +
                    " lies outside the admissible set {0, inf, 1, 1/2, 1/3, ...}");
            Int m = inv.get_num() + 1;
            if (!m.fits_sint_p())
                throw InconsistentLimits("U-subclass index overflow");
            return MahlerClass{MahlerClass::U, static_cast<int>(m.get_si())};
        }
        if (!L.certainlyZero())
            throw InconsistentLimits("lim lambda_n sign undecided");
        if (data.limsupNLambda) {
            if (data.limsupNLambda->isInf()) return MahlerClass{MahlerClass::T, 0};
            return MahlerClass{MahlerClass::S, 0};
        }
        throw std::invalid_argument(
            "limsup n*lambda_n required to split S from T");
    }

    // Fallback: the uniform-starred criteria.
    if (data.limWHatStar) {
        const ExtReal& W = *data.limWHatStar;
        if (W.isFinite()) {
            // lim what*_n sits in [m-1, m]; a non-integer value pins m.
            Ivl e = W.enclosure();
            Int lo = ceilInt(e.lo), hi = floorInt(e.hi) + 1;
            int m = (lo == hi && lo.fits_sint_p()) ? static_cast<int>(lo.get_si()) : 0;
            return MahlerClass{MahlerClass::U, m};
        }
        if (data.liminfWHatStarOverN) {
            if (data.liminfWHatStarOverN->certainlyZero())
                return MahlerClass{MahlerClass::T, 0};
            if (data.liminfWHatStarOverN->certainlyPositive())
                return MahlerClass{MahlerClass::S, 0};
        }
        throw std::invalid_argument(
            "liminf what*_n/n required to split S from T");
    }

    if (data.liminfWHatStarOverN && data.liminfWHatStarOverN->certainlyPositive())
        return MahlerClass{MahlerClass::S, 0};

    throw std::invalid_argument("insufficient limit data for classification");
}

SpectrumKind spectrumKindFromString(const std::string& s) {
    if (s == "zzz" || s == "algebraic_like_zzz") return SpectrumKind::AlgebraicLikeZzz;
    if (s == "u2" || s == "u2_besser") return SpectrumKind::U2Besser;
    throw std::invalid_argument("unknown spectrum kind: " + s);
}

std::vector<ExtReal> spectrumSequence(SpectrumKind kind, int m, const Rat& w,
                                      int length) {
    if (length < 1) throw std::invalid_argument("length must be positive");
    std::vector<ExtReal> out;
    out.reserve(static_cast<size_t>(length));
    switch (kind) {
        case SpectrumKind::AlgebraicLikeZzz: {
            if (m < 2) throw std::invalid_argument("zzz requires m >= 2");
            if (w < 1 || w > 2)
                throw std::invalid_argument("zzz requires w in [1, 2]");
            out.emplace_back(w);
            for (int n = 2; n <= length; ++n)
                out.emplace_back(Rat(1, std::min(n, m - 1)));
            break;
        }
        case SpectrumKind::U2Besser: {
            if (w < 1) throw std::invalid_argument("u2 requires w >= 1");
            for (int n = 1; n <= length; ++n) {
                Rat v = (w + 1 - n) / n;
                out.emplace_back(std::max(v, Rat(1)));
            }
            break;
        }
    }
    return out;
}

}  // namespace dioph
