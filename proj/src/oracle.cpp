#include "dioph/oracle.hpp"

#include <mutex>
#include <random>

namespace dioph {

namespace {

class AlgebraicOracle final : public NumberOracle {
public:
    AlgebraicOracle(Poly p, Rat lo, Rat hi, std::string name)
        : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)),
          name_(std::move(name)) {
        Rat flo = poly_.eval(lo_);
        Rat fhi = poly_.eval(hi_);
        if (flo == 0 || fhi == 0 || (flo > 0) == (fhi > 0))
            throw std::domain_error(
                "bracket endpoints do not certify a single sign change");
        signLo_ = flo > 0 ? 1 : -1;
    }

    Ivl enclosure(const Rat& eps) const override {
        if (eps <= 0) throw std::invalid_argument("eps must be positive");
        std::lock_guard<std::mutex> lock(mu_);
        while (hi_ - lo_ > eps) {
            Rat mid = (lo_ + hi_) / 2;
            Rat fm = poly_.eval(mid);
            if (fm == 0) {  // rational root; enclosure collapses
                lo_ = mid;
                hi_ = mid;
                break;
            }
            if ((fm > 0 ? 1 : -1) == signLo_) lo_ = mid;
            else hi_ = mid;
        }
        return Ivl(lo_, hi_);
    }

    std::string name() const override { return name_; }

private:
    Poly poly_;
    mutable std::mutex mu_;
    mutable Rat lo_, hi_;
    int signLo_;
    std::string name_;
};

class LiouvilleOracle final : public NumberOracle {
public:
    explicit LiouvilleOracle(int base) : base_(base) {
        if (base < 2) throw std::invalid_argument("base must be >= 2");
    }

    Ivl enclosure(const Rat& eps) const override {
        if (eps <= 0) throw std::invalid_argument("eps must be positive");
        unsigned long K = 1;
        unsigned long factNext = 2;  // (K+1)!
        for (;;) {
            Rat tail = 2 * Rat(1, powInt(Int(base_), factNext));
            if (tail <= eps) break;
            ++K;
            factNext *= (K + 1);
            if (K > 12) throw std::invalid_argument("eps too small for the series");
        }
        Rat sum(0);
        unsigned long fact = 1;
        for (unsigned long k = 1; k <= K; ++k) {
            fact *= k;
            sum += Rat(1, powInt(Int(base_), fact));
        }
        Rat tail = 2 * Rat(1, powInt(Int(base_), factNext));
        return Ivl(sum, sum + tail);
    }

    std::string name() const override { return "liouville" + std::to_string(base_); }

    std::vector<Int> spikeHints(const Int& xmax) const override {
        std::vector<Int> hints;
        unsigned long fact = 1;
        for (unsigned long k = 1;; ++k) {
            fact *= k;
            Int h = powInt(Int(base_), fact);
            if (h > xmax) break;
            hints.push_back(h);
            if (k > 12) break;
        }
        return hints;
    }

private:
    int base_;
};

class DigitStreamOracle : public NumberOracle {
public:
    explicit DigitStreamOracle(int base) : base_(base) {
        if (base < 2 || base > 36) throw std::invalid_argument("base out of [2, 36]");
    }

    Ivl enclosure(const Rat& eps) const override {
        if (eps <= 0) throw std::invalid_argument("eps must be positive");
        // need (prefix length D) with b^-D <= eps/2, i.e. prefix pins the
        // value to [p, p+1]/b^D.
        unsigned long D = 1;
        Rat scale(1, base_);
        while (2 * scale > eps) {
            scale /= base_;
            ++D;
        }
        std::lock_guard<std::mutex> lock(mu_);
        while (digits_.size() < D) extendDigits();
        Int prefix(0);
        for (unsigned long i = 0; i < D; ++i) prefix = prefix * base_ + digits_[i];
        Int den = powInt(Int(base_), D);
        return Ivl(Rat(prefix, den), Rat(prefix + 1, den));
    }

protected:
    virtual void extendDigits() const = 0;  // append >= 1 digit under lock

    int base_;
    mutable std::mutex mu_;
    mutable std::vector<int> digits_;
};

class ChampernowneOracle final : public DigitStreamOracle {
public:
    ChampernowneOracle(int base, std::vector<Int> coeffs)
        : DigitStreamOracle(base), poly_(Poly::fromIntCoeffs(coeffs)) {
        if (poly_.degree() < 1)
            throw std::invalid_argument("polynomial must be non-constant");
        if (poly_.c.back() <= 0)
            throw std::invalid_argument("leading coefficient must be positive");
        // Cauchy bound: beyond 1 + max|a_i|/lead every value is positive.
        Rat maxAbs(0);
        for (size_t i = 0; i + 1 < poly_.c.size(); ++i)
            maxAbs = std::max(maxAbs, absRat(poly_.c[i]));
        Rat cauchy = 1 + maxAbs / poly_.c.back();
        Int beyond = ceilInt(cauchy);
        for (Int h(1);; ++h) {
            bool ok = true;
            for (Int j = h; j <= std::max(h, beyond); ++j)
                if (poly_.eval(Rat(j)) <= 0) { ok = false; break; }
            if (ok) { next_ = h; break; }
        }
        descriptor_ = "champernowne" + std::to_string(base_);
    }

    std::string name() const override { return descriptor_; }

private:
    void extendDigits() const override {
        Rat v = poly_.eval(Rat(next_));
        Int value = v.get_num();  // integer by construction
        std::string s = value.get_str(base_);
        for (char c : s) {
            int d = (c >= '0' && c <= '9') ? c - '0' : c - 'a' + 10;
            digits_.push_back(d);
        }
        ++next_;
    }

    Poly poly_;
    mutable Int next_;
    std::string descriptor_;
};

class DigitRandomOracle final : public DigitStreamOracle {
public:
    DigitRandomOracle(std::uint64_t seed, int base)
        : DigitStreamOracle(base), seed_(seed), gen_(seed) {}

    std::string name() const override {
        return "rand" + std::to_string(seed_) + "b" + std::to_string(base_);
    }

private:
    void extendDigits() const override {
        digits_.push_back(static_cast<int>(gen_() % static_cast<unsigned>(base_)));
    }

    std::uint64_t seed_;
    mutable std::mt19937_64 gen_;
};

class CfDefinedOracle final : public NumberOracle {
public:
    CfDefinedOracle(std::vector<Int> pre, std::vector<Int> period, std::string name)
        : pre_(std::move(pre)), period_(std::move(period)), name_(std::move(name)) {
        if (pre_.empty()) throw std::invalid_argument("need at least a_0");
        if (pre_[0] < 0) throw std::invalid_argument("a_0 must be >= 0");
        for (size_t i = 1; i < pre_.size(); ++i)
            if (pre_[i] < 1) throw std::invalid_argument("partial quotients must be >= 1");
        for (const Int& a : period_)
            if (a < 1) throw std::invalid_argument("partial quotients must be >= 1");
    }

    Ivl enclosure(const Rat& eps) const override {
        if (eps <= 0) throw std::invalid_argument("eps must be positive");
        Int pPrev(1), qPrev(0);  // p_{-1}/q_{-1}
        Int p = quotient(0), q(1);
        if (isRationalValue() && pre_.size() == 1) return Ivl::point(Rat(p));
        for (size_t k = 1;; ++k) {
            if (period_.empty() && k >= pre_.size()) return Ivl::point(Rat(p, q));
            Int a = quotient(k);
            Int pNew = a * p + pPrev;
            Int qNew = a * q + qPrev;
            pPrev = p; qPrev = q; p = pNew; q = qNew;
            if (k >= 1 && Rat(1, qPrev * q) <= eps) {
                Rat c1(pPrev, qPrev), c2(p, q);
                return c1 <= c2 ? Ivl(c1, c2) : Ivl(c2, c1);
            }
        }
    }

    std::string name() const override { return name_; }
    bool isRationalValue() const override { return period_.empty(); }

private:
    Int quotient(size_t k) const {
        if (k < pre_.size()) return pre_[k];
        return period_[(k - pre_.size()) % period_.size()];
    }

    std::vector<Int> pre_, period_;
    std::string name_;
};

class RationalStubOracle final : public NumberOracle {
public:
    explicit RationalStubOracle(Rat v) : v_(std::move(v)) {}
    Ivl enclosure(const Rat&) const override { return Ivl::point(v_); }
    std::string name() const override { return ratToString(v_); }
    bool isRationalValue() const override { return true; }

private:
    Rat v_;
};

}  // namespace

OraclePtr makeAlgebraic(const std::vector<Int>& coeffs, const Rat& lo, const Rat& hi,
                        std::string name) {
    if (name.empty()) {
        name = "algebraic[";
        for (size_t i = 0; i < coeffs.size(); ++i)
            name += (i ? "," : "") + coeffs[i].get_str();
        name += "]";
    }
    return std::make_shared<AlgebraicOracle>(Poly::fromIntCoeffs(coeffs), lo, hi,
                                             std::move(name));
}

OraclePtr makeLiouville(int base) { return std::make_shared<LiouvilleOracle>(base); }

OraclePtr makeChampernowne(int base, const std::vector<Int>& polyCoeffs) {
    return std::make_shared<ChampernowneOracle>(base, polyCoeffs);
}

OraclePtr makeDigitRandom(std::uint64_t seed, int base) {
    return std::make_shared<DigitRandomOracle>(seed, base);
}

OraclePtr makeCfDefined(const std::vector<Int>& preperiod,
                        const std::vector<Int>& period, std::string name) {
    if (name.empty()) name = "cf";
    return std::make_shared<CfDefinedOracle>(preperiod, period, std::move(name));
}

OraclePtr makeRationalStub(const Rat& value) {
    return std::make_shared<RationalStubOracle>(value);
}

std::vector<Ivl> powersEnclosure(const NumberOracle& oracle, int n, const Rat& eps) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    Ivl base = oracle.enclosure(std::min(eps, Rat(1, 16)));
    Rat mag = std::max(absRat(base.lo), absRat(base.hi)) + 1;
    Rat magPow(1);
    for (int i = 1; i < n; ++i) magPow *= mag;
    Rat delta = eps / (Rat(n) * magPow + 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Ivl zeta = oracle.enclosure(delta);
        std::vector<Ivl> powers;
        powers.reserve(static_cast<size_t>(n));
        powers.push_back(zeta);
        bool ok = zeta.width() <= eps;
        for (int i = 2; i <= n && ok; ++i) {
            powers.push_back(powers.back() * zeta);
            ok = powers.back().width() <= eps;
        }
        if (ok) return powers;
        delta /= 16;
    }
    throw std::runtime_error("powersEnclosure failed to reach requested width");
}

}  // namespace dioph
