#include "reeslift/rational.hpp"

#include <stdexcept>

namespace reeslift {

Rat parse_rational(const std::string& text) {
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, text.c_str(), 10) != 0) {
        mpq_clear(q);
        throw std::invalid_argument("invalid rational: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    }
    mpq_canonicalize(q);
    Rat out(q);
    mpq_clear(q);
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

}  // namespace reeslift
