#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dioph {

// All exact arithmetic runs on GMP rationals. Canonical form (positive
// denominator, reduced) is maintained by mpq_class itself.
using Int = mpz_class;
using Rat = mpq_class;

inline Int floorInt(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceilInt(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Nearest integer, halves rounded up (floor(r + 1/2)).
inline Int roundInt(const Rat& r) {
    Rat shifted = r + Rat(1, 2);
    return floorInt(shifted);
}

inline bool isInteger(const Rat& r) { return r.get_den() == 1; }

inline Rat absRat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat powRat(const Rat& base, unsigned long e) {
    Rat num, out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

inline Int powInt(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat ratOfInt(const Int& n) { return Rat(n); }

// Accepts "p/q", plain integers, and decimal literals ("0.25", "-1.5e3" is
// not supported; exponents are not needed anywhere in the interfaces).
Rat ratFromString(const std::string& s);

// Exact form "p/q" (or "p" when the denominator is 1).
std::string ratToString(const Rat& r);

// Fixed-point decimal with the requested number of fractional digits,
// rounded to nearest (ties away from zero). Deterministic.
std::string decimalString(const Rat& r, int digits);

}  // namespace dioph
