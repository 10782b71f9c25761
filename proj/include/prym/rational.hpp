#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace prym {

// Arbitrary-precision integers and rationals. All arithmetic in the core is
// exact; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument on
// malformed input or zero denominator. Result is canonicalized (lowest terms,
// positive denominator).
Rat rat_from_string(const std::string& s);

// Formats as "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

inline Int int_pow2(long e) {
    if (e < 0) throw std::invalid_argument("int_pow2: negative exponent");
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return r;
}

// 2^e as a rational, e may be negative.
inline Rat rat_pow2(long e) {
    if (e >= 0) return Rat(int_pow2(e));
    return Rat(1, int_pow2(-e));
}

}  // namespace prym
