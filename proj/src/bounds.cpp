#include "dioph/bounds.hpp"

#include "dioph/realfun.hpp"
#include "dioph/roots.hpp"

namespace dioph {

namespace {

BoundResult bound(ExtReal v, BoundKind k, std::string citation, std::string note = "") {
    BoundResult r;
    r.value = std::move(v);
    r.kind = k;
    r.citation = std::move(citation);
    r.note = std::move(note);
    return r;
}

// ceil of an extended real when decidable.
std::optional<Int> tryCeil(const ExtReal& v) {
    if (v.isInf()) return std::nullopt;
    Ivl e = v.enclosure();
    Int lo = ceilInt(e.lo), hi = ceilInt(e.hi);
    if (lo == hi) return lo;
    return std::nullopt;
}

std::optional<Int> tryFloor(const ExtReal& v) {
    if (v.isInf()) return std::nullopt;
    Ivl e = v.enclosure();
    Int lo = floorInt(e.lo), hi = floorInt(e.hi);
    if (lo == hi) return lo;
    return std::nullopt;
}

// 1/g for a transfer gap g; gap <= 0 means the transferred bound is vacuous.
std::pair<ExtReal, std::string> reciprocalGap(const ExtReal& gap) {
    if (gap.isInf()) return {ExtReal(Rat(0)), ""};
    if (gap.certainlyZero() || gap.certainlyNegative())
        return {ExtReal::infinity(), "vacuous (nonpositive transfer gap)"};
    if (!gap.certainlyPositive())
        return {ExtReal::infinity(), "vacuous (gap sign undecided)"};
    return {gap.reciprocal(), ""};
}

}  // namespace

Corridor khintchineCorridor(int n, const ExtReal& w) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (certifiedLess(w, ExtReal(Rat(n))) == true)
        throw std::invalid_argument("khintchine corridor requires w_n >= n");
    Corridor c;
    if (w.isInf()) {
        ExtReal lower = (n == 1) ? ExtReal::infinity() : ExtReal(Rat(1, n - 1));
        c.lower = bound(lower, BoundKind::Lower, "khintchine",
                        n == 1 ? "limit convention" : "limit of w/((n-1)w+n)");
        c.upper = bound(ExtReal::infinity(), BoundKind::Upper, "khintchine");
        return c;
    }
    ExtReal nE{Rat(n)}, n1E{Rat(n - 1)};
    c.lower = bound(w / (n1E * w + nE), BoundKind::Lower, "khintchine");
    c.upper = bound((w - nE + ExtReal(1)) / nE, BoundKind::Upper, "khintchine");
    return c;
}

BoundResult herzLower(int k, int n, const ExtReal& lambdaK) {
    if (k < 1 || n < 1) throw std::invalid_argument("herz indices must be positive");
    if (certifiedLess(lambdaK, ExtReal(Rat(1, k))) == true)
        throw std::invalid_argument("herz requires lambda_k >= 1/k");
    ExtReal raw = (lambdaK - ExtReal(Rat(n - 1))) / ExtReal(Rat(n));
    ExtReal floorVal{Rat(1, static_cast<long>(n) * k)};
    if (certifiedLess(raw, floorVal) == true)
        return bound(floorVal, BoundKind::Lower, "herz", "clamped to Dirichlet floor");
    return bound(maxExt(raw, floorVal), BoundKind::Lower, "herz");
}

BoundResult trampelEquality(int n, const ExtReal& lambda1) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    ExtReal v = (lambda1 - ExtReal(Rat(n - 1))) / ExtReal(Rat(n));
    BoundResult r = bound(v, BoundKind::Equality, "trampel");
    if (certifiedLess(ExtReal(1), v) != true) {
        r.applicable = false;
        r.note = "value contradicts the lambda_n > 1 hypothesis";
    }
    return r;
}

TransferVariant transferVariantFromString(const std::string& s) {
    if (s == "vor1") return TransferVariant::Vor1;
    if (s == "vor4") return TransferVariant::Vor4;
    if (s == "vor2") return TransferVariant::Vor2;
    throw std::invalid_argument("unknown transfer variant: " + s);
}

BoundResult transferUpperLambda(TransferVariant v, int n, int N,
                                const TransferInputs& in) {
    if (n < 1 || N < 1) throw std::invalid_argument("indices must be positive");
    const char* cite = v == TransferVariant::Vor1   ? "vor1"
                       : v == TransferVariant::Vor4 ? "vor4"
                                                    : "vor2";
    if (in.w_n.isInf())
        return BoundResult::inapplicable(BoundKind::Upper, cite, "requires finite w_n");
    if (certifiedLess(in.w_n, ExtReal(Rat(n))) == true)
        throw std::invalid_argument("w_n below Dirichlet floor");

    std::string note;
    ExtReal wHatN = in.wHatN.value_or(ExtReal(Rat(n)));
    if (!in.wHatN) note = "floor-substituted what_n";

    if (v == TransferVariant::Vor2) {
        auto ceilW = tryCeil(in.w_n);
        if (!ceilW)
            return BoundResult::inapplicable(BoundKind::Upper, cite,
                                             "ceil(w_n) undecidable");
        if (Int(N) < *ceilW + 2 * n - 1)
            return BoundResult::inapplicable(BoundKind::Upper, cite,
                                             "requires N >= ceil(w_n) + 2n - 1");
        return bound(ExtReal(Rat(1, n)), BoundKind::Upper, cite, note);
    }

    ExtReal wHatTail = in.wHatTail.value_or(ExtReal(Rat(N - n + 1)));
    if (!in.wHatTail)
        note += (note.empty() ? "" : "; ") + std::string("floor-substituted what_{N-n+1}");

    if (v == TransferVariant::Vor1) {
        auto ceilW = tryCeil(in.w_n);
        if (!ceilW)
            return BoundResult::inapplicable(BoundKind::Upper, cite,
                                             "ceil(w_n) undecidable");
        if (Int(N) < *ceilW + n - 1)
            return BoundResult::inapplicable(BoundKind::Upper, cite,
                                             "requires N >= ceil(w_n) + n - 1");
        auto [inv, vnote] = reciprocalGap(wHatTail - in.w_n);
        if (!vnote.empty()) note += (note.empty() ? "" : "; ") + vnote;
        return bound(maxExt(wHatN.reciprocal(), inv), BoundKind::Upper, cite, note);
    }

    // Vor4
    if (certifiedLess(in.w_n, ExtReal(Rat(2 * n + 1))) != true)
        return BoundResult::inapplicable(BoundKind::Upper, cite,
                                         "requires w_n < 2n + 1");
    auto floorW = tryFloor(in.w_n);
    if (!floorW)
        return BoundResult::inapplicable(BoundKind::Upper, cite,
                                         "floor(w_n) undecidable");
    if (Int(N) < *floorW + n || N > 3 * n)
        return BoundResult::inapplicable(BoundKind::Upper, cite,
                                         "requires floor(w_n) + n <= N <= 3n");
    ExtReal wAux{Rat(0)};
    if (N > 2 * n) {
        if (!in.wAux)
            return BoundResult::inapplicable(BoundKind::Upper, cite,
                                             "w_{N-2n} required when N > 2n");
        wAux = *in.wAux;
    } else if (in.wAux) {
        wAux = *in.wAux;  // N = 2n: index 0, conventionally w_0 = 0
    }
    if (wAux.isInf())
        return BoundResult::inapplicable(BoundKind::Upper, cite,
                                         "requires finite w_{N-2n}");
    auto [inv, vnote] = reciprocalGap(wHatTail - wAux);
    if (!vnote.empty()) note += (note.empty() ? "" : "; ") + vnote;
    return bound(maxExt(wHatN.reciprocal(), inv), BoundKind::Upper, cite, note);
}

Lambda2nMode lambda2nModeFromString(const std::string& s) {
    if (s == "tropf") return Lambda2nMode::Tropf;
    if (s == "ss" || s == "ss_reform") return Lambda2nMode::SSReform;
    if (s == "conditional") return Lambda2nMode::Conditional;
    throw std::invalid_argument("unknown lambda2n mode: " + s);
}

Rat tropfRadicand(int n) {
    Rat half(1, 2 * static_cast<long>(n));
    Rat t = Rat(n) + half;
    return t * t - Rat(1, n);
}

BoundResult lambda2nUpper(int n, Lambda2nMode mode,
                          const std::optional<ExtReal>& lambda2n, const Rat& width) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    switch (mode) {
        case Lambda2nMode::Tropf: {
            Ivl root = sqrtEnclosure(Ivl::point(tropfRadicand(n)), width / 2);
            Ivl v = root - Ivl::point(Rat(n) - Rat(1, 2 * static_cast<long>(n)));
            return bound(ExtReal(v), BoundKind::Upper, "tropf");
        }
        case Lambda2nMode::SSReform: {
            if (!lambda2n || lambda2n->isInf())
                throw std::invalid_argument("ss_reform requires a finite lambda_2n");
            Ivl lam = lambda2n->enclosure();
            Ivl a = (Ivl::point(Rat(2 * n - 2)) + Ivl::point(Rat(2 * n - 1)) * lam) /
                    Ivl::point(Rat(2));
            Ivl radicand = a * a + Ivl::point(Rat(2 * n - 1)) * lam;
            Ivl v = sqrtEnclosure(radicand, width / 2) - a;
            return bound(ExtReal(v), BoundKind::Upper, "ss_reform");
        }
        case Lambda2nMode::Conditional: {
            // n^{2n} t^{2n+1} - (n+1) t + 1 has t = 1/n as an exact root;
            // dividing it out leaves sum_{k=1..2n} n^{k-1} t^k - 1, which is
            // strictly increasing on (0, inf) with a sign change across
            // (1/(n+1), 1/n). Bisection on the quotient isolates the interior
            // root the original bracket endpoints cannot (the right endpoint
            // of the stated bracket is itself a root of the full polynomial).
            Poly q;
            q.c.assign(static_cast<size_t>(2 * n + 1), Rat(0));
            q.c[0] = Rat(-1);
            Rat pw(1);
            for (int k = 1; k <= 2 * n; ++k) {
                q.c[static_cast<size_t>(k)] = pw;
                pw *= n;
            }
            Ivl bracket(Rat(1, n + 1), Rat(1, n));
            Ivl root = isolateRoot(q, bracket, width);
            return bound(ExtReal(root), BoundKind::Upper, "conditional",
                         "assumes the parametric-geometry ratio conjecture");
        }
    }
    throw std::logic_error("bad lambda2n mode");
}

Ivl alphaSeriesRoot(const Rat& width) {
    // f(x) = -1 + sum_{k>=1} (-2)^{k+1} x^k/(k+1)!; terms decay by a factor
    // 2x/(k+2) <= 1/2 for x <= 1, k >= 2, so the dropped tail is at most
    // twice the first omitted term.
    EnclosureFn f = [](const Rat& x, int level) {
        unsigned long terms = 16 + 8 * static_cast<unsigned long>(level);
        Rat sum(-1);
        Rat term = 2 * x;  // k = 1 term: (-2)^2 x / 2!
        for (unsigned long k = 1; k <= terms; ++k) {
            sum += term;
            term *= Rat(-2) * x;
            term /= Rat(static_cast<long>(k) + 2);
        }
        Rat tail = 2 * absRat(term);
        return Ivl(sum - tail, sum + tail);
    };
    return isolateRoot(f, Ivl(Rat(1, 2), Rat(1)), width);
}

Ivl royConstant(const Rat& width) {
    Ivl s5 = sqrtEnclosure(Ivl::point(Rat(5)), width / 8);
    Ivl inner = Ivl::point(Rat(7)) + Ivl::point(Rat(2)) * s5;
    Ivl s = sqrtEnclosure(inner, width / 4);
    return (Ivl::point(Rat(2)) + s5 - s) / Ivl::point(Rat(2));
}

NextVariant nextVariantFromString(const std::string& s) {
    if (s == "sturz") return NextVariant::Sturz;
    if (s == "salsa") return NextVariant::Salsa;
    if (s == "traene") return NextVariant::Traene;
    if (s == "unkon") return NextVariant::Unkon;
    if (s == "tja") return NextVariant::Tja;
    if (s == "unkonp") return NextVariant::Unkonp;
    if (s == "tjap") return NextVariant::Tjap;
    if (s == "ribiza") return NextVariant::Ribiza;
    throw std::invalid_argument("unknown variant: " + s);
}

namespace {

// (n-1) h / (h - (n+j)) for Sturz/Salsa.
BoundResult stepBound(const char* cite, int n, int u, int j, const ExtReal& h,
                      const std::string& extraNote) {
    if (n < 1 || u < 1 || j < 0 || j > u - 1)
        throw std::invalid_argument("require n >= 1, u >= 1, 0 <= j <= u-1");
    if (certifiedLess(ExtReal(Rat(n + u - 1)), h) != true)
        return BoundResult::inapplicable(BoundKind::Upper, cite,
                                         "requires excess over n + u - 1");
    if (h.isInf()) return bound(ExtReal(Rat(n - 1)), BoundKind::Upper, cite,
                                "limit value" + extraNote);
    ExtReal den = h - ExtReal(Rat(n + j));
    if (!den.certainlyPositive())
        return BoundResult::inapplicable(BoundKind::Upper, cite,
                                         "denominator not certainly positive");
    return bound(ExtReal(Rat(n - 1)) * h / den, BoundKind::Upper, cite,
                 extraNote.empty() ? "" : extraNote.substr(2));
}

// Cubic-over-quadratic bound of Unkon/Tja.
BoundResult cubicBound(const char* cite, int n, int u, const ExtReal& h,
                       const std::string& extraNote) {
    if (n < 2 || u < 1) throw std::invalid_argument("require n >= 2, u >= 1");
    auto excess = certifiedLess(ExtReal(Rat(n + u - 1)), h);
    if (excess != true)
        return BoundResult::inapplicable(BoundKind::Upper, cite,
                                         "requires value > n + u - 1");
    if (h.isInf())
        return BoundResult::inapplicable(BoundKind::Upper, cite,
                                         "requires finite uniform exponent");
    Ivl x = h.enclosure();
    Ivl num = x * x * x - Ivl::point(Rat(u)) * x * x +
              Ivl::point(Rat(static_cast<long>(n) * u + n - 1)) * x -
              Ivl::point(Rat(static_cast<long>(n) * n));
    Ivl den = (x - Ivl::point(Rat(n))) * (x - Ivl::point(Rat(n + u - 1)));
    return bound(ExtReal(num / den), BoundKind::Upper, cite,
                 extraNote.empty() ? "" : extraNote.substr(2));
}

}  // namespace

BoundResult nextExponentUpper(NextVariant v, const NextParams& p) {
    switch (v) {
        case NextVariant::Sturz:
            return stepBound("sturz", p.n, p.u, p.j, p.wHatOrStar, "");
        case NextVariant::Salsa:
            return stepBound("salsa", p.n, p.u, p.j, p.wHatOrStar,
                             "; assumes the uaah side condition");
        case NextVariant::Traene: {
            if (p.m < 1 || p.n < 1) throw std::invalid_argument("require m, n >= 1");
            if (!p.w_m) throw std::invalid_argument("traene requires w_m");
            const ExtReal& wm = *p.w_m;
            if (certifiedLess(ExtReal(Rat(p.m + p.n - 1)), wm) != true)
                return BoundResult::inapplicable(BoundKind::Upper, "traene",
                                                 "requires w_m > m + n - 1");
            if (wm.isInf())
                return bound(ExtReal(Rat(p.m)), BoundKind::Upper, "traene",
                             "limit value");
            ExtReal den = wm - ExtReal(Rat(p.n - 1));
            return bound(ExtReal(Rat(p.m)) * wm / den, BoundKind::Upper, "traene");
        }
        case NextVariant::Unkon:
            return cubicBound("unkon", p.n, p.u, p.wHatOrStar, "");
        case NextVariant::Tja:
            return cubicBound("tja", p.n, p.u, p.wHatOrStar,
                              "; assumes the uaah side condition");
        case NextVariant::Unkonp:
        case NextVariant::Tjap: {
            const char* cite = v == NextVariant::Unkonp ? "unkonp" : "tjap";
            if (p.n < 2) throw std::invalid_argument("require n >= 2");
            const ExtReal& h = p.wHatOrStar;
            if (certifiedLess(ExtReal(Rat(p.n)), h) != true)
                return BoundResult::inapplicable(BoundKind::Upper, cite,
                                                 "requires value > n");
            if (h.isInf())
                return BoundResult::inapplicable(BoundKind::Upper, cite,
                                                 "requires finite uniform exponent");
            Ivl x = h.enclosure();
            Ivl num = x * x * x - x;
            Ivl den = (x - Ivl::point(Rat(p.n))) * (x - Ivl::point(Rat(p.n)));
            Ivl out = num / den - Ivl::point(Rat(1));
            return bound(ExtReal(out), BoundKind::Upper, cite,
                         v == NextVariant::Tjap ? "assumes the uaah side condition"
                                                : "");
        }
        case NextVariant::Ribiza: {
            if (p.m < 1 || p.n < 1) throw std::invalid_argument("require m, n >= 1");
            std::string note;
            ExtReal wm = p.w_m.value_or(ExtReal(Rat(p.m)));
            if (!p.w_m) note = "floor-substituted w_m";
            ExtReal whn = p.wHatOrStar;
            return bound(maxExt(wm.reciprocal(), whn.reciprocal()), BoundKind::Upper,
                         "ribiza", note);
        }
    }
    throw std::logic_error("bad variant");
}

namespace {

// what_2 <= (3+sqrt5)/2 test, exact: 2t-3 <= sqrt5  <=>  (2t-3)^2 <= 5.
bool withinDavenportSchmidt(const Rat& t) {
    Rat s = 2 * t - 3;
    if (s <= 0) return true;
    return s * s <= 5;
}

}  // namespace

BoundResult wkBound(const ExtReal& wHat2) {
    if (certifiedLess(ExtReal(Rat(2)), wHat2) != true)
        return BoundResult::inapplicable(BoundKind::Upper, "wk",
                                         "requires what_2 > 2");
    if (wHat2.isInf())
        return BoundResult::inapplicable(BoundKind::Upper, "wk",
                                         "requires finite what_2");
    Ivl t = wHat2.enclosure();
    if (!withinDavenportSchmidt(t.hi))
        return BoundResult::inapplicable(BoundKind::Upper, "wk",
                                         "above the Davenport-Schmidt range");
    Ivl num = t * t * t - t * t + Ivl::point(Rat(3)) * t - Ivl::point(Rat(4));
    Ivl den = (t - Ivl::point(Rat(2))) * (t - Ivl::point(Rat(2)));
    return bound(ExtReal(num / den), BoundKind::Upper, "wk");
}

Ivl wkDConstant(const Rat& width) {
    // Numerator t^3 - t^2 + 3t - 4 is increasing, so the supremum over
    // (2, (3+sqrt5)/2] sits at the right endpoint.
    Rat delta = width / 64;
    for (int attempt = 0; attempt < 32; ++attempt) {
        Ivl t = (Ivl::point(Rat(3)) + sqrtEnclosure(Ivl::point(Rat(5)), delta)) /
                Ivl::point(Rat(2));
        Ivl num = t * t * t - t * t + Ivl::point(Rat(3)) * t - Ivl::point(Rat(4));
        if (num.width() <= width) return num;
        delta /= 16;
    }
    throw std::runtime_error("wkDConstant failed to reach requested width");
}

DecayKind decayKindFromString(const std::string& s) {
    if (s == "adb") return DecayKind::Adb;
    if (s == "champ") return DecayKind::Champ;
    if (s == "gbush") return DecayKind::Gbush;
    if (s == "gwbush") return DecayKind::Gwbush;
    throw std::invalid_argument("unknown decay kind: " + s);
}

namespace {

Ivl powN(const Ivl& x, int n) {
    Ivl out = Ivl::point(Rat(1));
    for (int i = 0; i < n; ++i) out = out * x;
    return out;
}

}  // namespace

BoundResult decayEnvelope(DecayKind kind, const Rat& c, int n, const Rat& eps,
                          const Int& mOrN, const Rat& width) {
    if (c <= 0) throw std::invalid_argument("constant c must be positive");
    switch (kind) {
        case DecayKind::Adb: {
            if (mOrN < n + 1)
                return BoundResult::inapplicable(BoundKind::Upper, "adb",
                                                 "requires m >= n + 1");
            Rat delta = width / 1000;
            Ivl lg = logRat(Rat(3 * mOrN), delta);
            Ivl llg = logEnclosure(lg, delta);
            Ivl arg = Ivl::point(c) * powN(lg, n) * powN(llg, n);
            return bound(ExtReal(expEnclosure(arg, width)), BoundKind::Upper, "adb");
        }
        case DecayKind::Champ: {
            if (mOrN < 1)
                return BoundResult::inapplicable(BoundKind::Upper, "champ",
                                                 "requires m >= 1");
            Rat delta = width / 1000;
            Ivl lg = logRat(Rat(3 * mOrN), delta);
            Ivl llg = logEnclosure(lg, delta);
            Ivl expo = Ivl::point(c) * llg;
            Ivl v = powEnclosure(Ivl::point(Rat(2 * mOrN)), expo, width);
            return bound(ExtReal(v), BoundKind::Upper, "champ");
        }
        case DecayKind::Gbush:
        case DecayKind::Gwbush: {
            const char* cite = kind == DecayKind::Gbush ? "gbush" : "gwbush";
            if (eps <= 0 || eps >= 1)
                throw std::invalid_argument("eps must lie in (0,1)");
            if (mOrN < 1)
                return BoundResult::inapplicable(BoundKind::Upper, cite,
                                                 "requires N >= 1");
            if (mOrN == 1) return bound(ExtReal(Rat(1)), BoundKind::Upper, cite);
            Rat q = kind == DecayKind::Gbush ? Rat(1 - eps) / n : Rat(1 - eps);
            Rat delta = width / 1000;
            Ivl lg = logRat(Rat(mOrN), delta);
            Ivl powed = powEnclosure(lg, Ivl::point(q), delta);
            Ivl arg = -(Ivl::point(c) * powed);
            return bound(ExtReal(expEnclosure(arg, width)), BoundKind::Upper, cite);
        }
    }
    throw std::logic_error("bad decay kind");
}

StarDirection starDirectionFromString(const std::string& s) {
    if (s == "duzu") return StarDirection::Duzu;
    if (s == "bound2") return StarDirection::Bound2;
    if (s == "besides") return StarDirection::Besides;
    if (s == "najo") return StarDirection::Najo;
    if (s == "wirsing" || s == "wirsing_lower") return StarDirection::WirsingLower;
    throw std::invalid_argument("unknown star conversion: " + s);
}

std::vector<RoleBound> starConversions(StarDirection d,
                                       const std::vector<ExponentValue>& inputs) {
    std::vector<RoleBound> out;
    auto push = [&out](Role role, int n, BoundResult b) {
        out.push_back(RoleBound{role, n, std::move(b)});
    };
    for (const ExponentValue& e : inputs) {
        int n = e.n;
        ExtReal nm1{Rat(n - 1)};
        switch (d) {
            case StarDirection::Duzu:
                if (e.role == Role::WStar) {
                    push(Role::W, n, bound(e.value, BoundKind::Lower, "duzu"));
                    push(Role::W, n, bound(e.value + nm1, BoundKind::Upper, "duzu"));
                } else if (e.role == Role::W) {
                    push(Role::WStar, n,
                         bound(e.value.isInf() ? ExtReal::infinity() : e.value - nm1,
                               BoundKind::Lower, "duzu"));
                    push(Role::WStar, n, bound(e.value, BoundKind::Upper, "duzu"));
                }
                break;
            case StarDirection::Bound2:
                if (e.role == Role::WHatStar) {
                    push(Role::WHat, n, bound(e.value, BoundKind::Lower, "bound2"));
                    push(Role::WHat, n,
                         bound(minExt(ExtReal(Rat(2 * n - 1)), e.value + nm1),
                               BoundKind::Upper, "bound2"));
                } else if (e.role == Role::WHat) {
                    push(Role::WHatStar, n,
                         bound(e.value - nm1, BoundKind::Lower, "bound2"));
                    push(Role::WHatStar, n, bound(e.value, BoundKind::Upper, "bound2"));
                }
                break;
            case StarDirection::Besides:
                if (e.role == Role::Lambda)
                    push(Role::WHatStar, n,
                         bound(e.value.reciprocal(), BoundKind::Lower, "besides"));
                else if (e.role == Role::LambdaHat)
                    push(Role::WStar, n,
                         bound(e.value.reciprocal(), BoundKind::Lower, "besides"));
                break;
            case StarDirection::Najo:
                if (e.role == Role::W || e.role == Role::WHat) {
                    Role target = e.role == Role::W ? Role::WHatStar : Role::WStar;
                    if (e.value.isInf()) {
                        push(target, n,
                             bound(ExtReal(Rat(1)), BoundKind::Lower, "najo",
                                   "limit value"));
                        break;
                    }
                    ExtReal den = e.value - nm1;
                    if (!den.certainlyPositive()) {
                        push(target, n,
                             BoundResult::inapplicable(BoundKind::Lower, "najo",
                                                       "nonpositive denominator"));
                        break;
                    }
                    push(target, n, bound(e.value / den, BoundKind::Lower, "najo"));
                }
                break;
            case StarDirection::WirsingLower:
                if (e.role == Role::W)
                    push(Role::WStar, n,
                         bound((e.value + ExtReal(1)) / ExtReal(2), BoundKind::Lower,
                               "wirsing"));
                break;
        }
    }
    return out;
}

std::pair<ExtReal, ExtReal> sigmaThetaFromTau(const ExtReal& tau) {
    if (certifiedLess(tau, ExtReal(Rat(1))) == true)
        throw std::invalid_argument("tau must lie in [1, inf]");
    ExtReal theta = tau.reciprocal();
    ExtReal sigma = theta.certainlyZero() ? ExtReal(Rat(0)) : -theta;
    return {sigma, theta};
}

}  // namespace dioph
