#pragma once

#include <gmpxx.h>

#include <string>

namespace reeslift {

// Exact rational coefficients. GMP keeps values canonical (reduced
// fraction, sign on the numerator) across arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" for non-integral values, plain "p" otherwise.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Accepts "p" or "p/q" with optional sign; rejects q == 0.
Rat parse_rational(const std::string& text);

Int binomial(long n, long k);

}  // namespace reeslift
