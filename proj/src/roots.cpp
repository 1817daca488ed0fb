#include "dioph/roots.hpp"

namespace dioph {

Poly Poly::fromIntCoeffs(const std::vector<Int>& coeffs) {
    Poly p;
    p.c.reserve(coeffs.size());
    for (const Int& a : coeffs) p.c.emplace_back(a);
    return p;
}

int Poly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i] != 0) return i;
    return -1;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Ivl Poly::eval(const Ivl& x) const {
    Ivl acc = Ivl::point(Rat(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Ivl::point(*it);
    return acc;
}

Poly Poly::derivative() const {
    Poly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rat(static_cast<long>(i)));
    return d;
}

bool Poly::isZero() const { return degree() < 0; }

int certifiedSign(const EnclosureFn& f, const Rat& x, int maxLevel) {
    for (int level = 0; level <= maxLevel; ++level) {
        Ivl v = f(x, level);
        if (v.strictlyPositive()) return 1;
        if (v.strictlyNegative()) return -1;
        if (v.isPoint()) return 0;  // exactly zero
    }
    throw std::runtime_error("sign undecidable at maximum precision budget");
}

Ivl isolateRoot(const EnclosureFn& f, const Ivl& bracket, const Rat& width,
                int maxLevel) {
    if (width <= 0) throw std::invalid_argument("width target must be positive");
    int sLo = certifiedSign(f, bracket.lo, maxLevel);
    int sHi = certifiedSign(f, bracket.hi, maxLevel);
    if (sLo == 0) return Ivl::point(bracket.lo);
    if (sHi == 0) return Ivl::point(bracket.hi);
    if (sLo == sHi) throw std::domain_error("no sign change on bracket");
    Rat lo = bracket.lo, hi = bracket.hi;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        int sMid = certifiedSign(f, mid, maxLevel);
        if (sMid == 0) return Ivl::point(mid);
        if (sMid == sLo) lo = mid;
        else hi = mid;
    }
    return Ivl(lo, hi);
}

Ivl isolateRoot(const Poly& p, const Ivl& bracket, const Rat& width) {
    EnclosureFn f = [&p](const Rat& x, int) { return Ivl::point(p.eval(x)); };
    return isolateRoot(f, bracket, width, 0);
}

}  // namespace dioph
