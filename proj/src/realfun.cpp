#include "dioph/realfun.hpp"

#include <mutex>

namespace dioph {

namespace {

void requirePositiveWidth(const Rat& width) {
    if (width <= 0) throw std::invalid_argument("width target must be positive");
}

// Smallest m with 2^-m * scale <= width, as exponent for binary refinement.
unsigned long binaryDigitsFor(const Rat& width, const Rat& scale) {
    Rat need = scale / width;  // require 2^m >= need
    if (need <= 1) return 0;
    Int n = ceilInt(need);
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

// atanh(u) = sum u^(2i+1)/(2i+1) for |u| < 1, with a certified geometric
// tail bound. Returns an enclosure of width <= `width`.
Ivl atanhSeries(const Rat& u, const Rat& width) {
    Rat u2 = u * u;
    Rat term = u;  // u^(2i+1)
    Rat sum = 0;
    unsigned long k = 0;
    for (;;) {
        sum += term / Rat(2 * k + 1);
        term *= u2;
        // tail <= |term|/(2k+3) * 1/(1-u^2)
        Rat tail = absRat(term) / (Rat(2 * k + 3) * (Rat(1) - u2));
        if (2 * tail <= width) return Ivl(sum - tail, sum + tail);
        ++k;
        if (k > 100000) throw std::runtime_error("atanh series failed to converge");
    }
}

}  // namespace

Rat sqrtLower(const Rat& r, const Rat& width) {
    requirePositiveWidth(width);
    if (r < 0) throw std::domain_error("sqrt of negative value");
    if (r == 0) return Rat(0);
    // sqrt(p/q) = sqrt(pq)/q; floor integer sqrt at scale 2^m gives
    // an error below 1/(q*2^m).
    const Int& p = r.get_num();
    const Int& q = r.get_den();
    unsigned long m = binaryDigitsFor(width, Rat(1) / Rat(q));
    Int scaled = p * q;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * m);
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Rat out(s, q);
    out /= powRat(Rat(2), m);
    out.canonicalize();
    return out;
}

Rat sqrtUpper(const Rat& r, const Rat& width) {
    requirePositiveWidth(width);
    if (r < 0) throw std::domain_error("sqrt of negative value");
    if (r == 0) return Rat(0);
    const Int& p = r.get_num();
    const Int& q = r.get_den();
    unsigned long m = binaryDigitsFor(width, Rat(1) / Rat(q));
    Int scaled = p * q;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * m);
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    s += 1;
    Rat out(s, q);
    out /= powRat(Rat(2), m);
    out.canonicalize();
    return out;
}

Ivl sqrtEnclosure(const Ivl& a, const Rat& width) {
    if (a.lo < 0) throw std::domain_error("sqrt of interval with negative endpoint");
    Rat half = width / 2;
    return Ivl(sqrtLower(a.lo, half), sqrtUpper(a.hi, half));
}

Ivl log2Enclosure(const Rat& width) {
    static std::mutex mu;
    static Rat cachedWidth(0);
    static Ivl cached;
    std::lock_guard<std::mutex> lock(mu);
    if (cachedWidth != 0 && cachedWidth <= width) return cached;
    cached = atanhSeries(Rat(1, 3), width / 2) * Rat(2);
    cachedWidth = width;
    return cached;
}

Ivl logRat(const Rat& r, const Rat& width) {
    requirePositiveWidth(width);
    if (r <= 0) throw std::domain_error("log of nonpositive value");
    // Reduce r' = r / 2^k into [3/4, 3/2); then |u| <= 1/5 below.
    long k = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
    Rat rp = r;
    if (k > 0) rp /= powRat(Rat(2), static_cast<unsigned long>(k));
    else if (k < 0) rp *= powRat(Rat(2), static_cast<unsigned long>(-k));
    while (rp >= Rat(3, 2)) { rp /= 2; ++k; }
    while (rp < Rat(3, 4)) { rp *= 2; --k; }
    Rat u = (rp - 1) / (rp + 1);
    Ivl core = atanhSeries(u, width / 4) * Rat(2);
    if (k == 0) return core;
    Rat l2width = width / (2 * (absRat(Rat(k)) + 1));
    Ivl l2 = log2Enclosure(l2width);
    return core + l2 * Rat(k);
}

Ivl logEnclosure(const Ivl& a, const Rat& width) {
    if (a.lo <= 0) throw std::domain_error("log of interval touching zero");
    Rat half = width / 2;
    Ivl lo = logRat(a.lo, half);
    Ivl hi = logRat(a.hi, half);
    return Ivl(lo.lo, hi.hi);
}

Ivl expRat(const Rat& r, const Rat& width) {
    requirePositiveWidth(width);
    Rat ar = absRat(r);
    // Halve the argument until |t| <= 1/2, then Taylor + squaring.
    unsigned long m = binaryDigitsFor(Rat(1, 2), ar);  // 2^m >= 2|r|
    Rat t = r / powRat(Rat(2), m);
    // Exp(r) <= 4^ceil(|r|); widths roughly double per squaring.
    Int bound = ceilInt(ar);
    if (!bound.fits_ulong_p()) throw std::domain_error("exp argument out of supported range");
    Rat valueCap = powRat(Rat(4), bound.get_ui() + 1);
    Rat target = width / (powRat(Rat(2), m + 1) * valueCap);
    Rat term(1), sum(1);
    unsigned long k = 0;
    Rat tail;
    for (;;) {
        ++k;
        term *= t;
        term /= Rat(k);
        sum += term;
        tail = 2 * absRat(term) * absRat(t) / Rat(k + 1);
        if (tail <= target && k >= 2) break;
        if (k > 100000) throw std::runtime_error("exp series failed to converge");
    }
    Ivl e(sum - tail, sum + tail);
    for (unsigned long i = 0; i < m; ++i) e = e * e;
    if (e.lo < 0) e = Ivl(Rat(0), e.hi);
    return e;
}

Ivl expEnclosure(const Ivl& a, const Rat& width) {
    Rat half = width / 2;
    Ivl lo = expRat(a.lo, half);
    Ivl hi = expRat(a.hi, half);
    return Ivl(lo.lo, hi.hi);
}

Ivl powEnclosure(const Ivl& base, const Ivl& expo, const Rat& width) {
    if (base.lo <= 0) throw std::domain_error("pow requires positive base");
    // Refine until the composed enclosure is narrow enough. Wide base/expo
    // inputs put a floor on the attainable width; stop once refinement no
    // longer helps and return the input-limited enclosure.
    Rat delta = width / 4;
    std::optional<Ivl> best;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Ivl lg = logEnclosure(base, delta);
        Ivl product = expo * lg;
        Ivl result = expEnclosure(product, delta);
        if (result.width() <= width) return result;
        if (best && result.width() * 100 > best->width() * 99) return *best;
        if (!best || result.width() < best->width()) best = result;
        delta /= 16;
    }
    return *best;
}

}  // namespace dioph
