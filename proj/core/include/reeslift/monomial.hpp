#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reeslift/varid.hpp"

namespace reeslift {

// Power product with positive exponents. Factors are kept sorted by VarId
// and packed into 4 bytes each so the hot paths (compare, multiply,
// divide) never touch the heap at desk scale. The empty factor list is
// the monomial 1.
class Monomial {
  public:
    struct Factor {
        std::uint16_t var;  // order-preserving encoding of VarId
        std::uint16_t exp;

        friend bool operator==(const Factor&, const Factor&) = default;
    };
    using Factors = boost::container::small_vector<Factor, 14>;

    Monomial() = default;

    static Monomial one() { return Monomial{}; }

    static Monomial variable(VarId v, int exp = 1) {
        if (exp <= 0) throw std::invalid_argument("Monomial: exponent must be positive");
        Monomial m;
        m.factors_.push_back({encode(v), static_cast<std::uint16_t>(exp)});
        return m;
    }

    // Builds from possibly unsorted/repeated factors; exponents accumulate.
    static Monomial from_factors(std::vector<std::pair<VarId, int>> factors);

    // (kind, a, b) packs into 16 bits so that integer order equals the
    // documented VarId order: x before T, x row-major, T by index.
    static std::uint16_t encode(VarId v) {
        if (v.a < 1 || v.a > 127 || v.b < 0 || v.b > 127)
            throw std::invalid_argument("Monomial: variable index exceeds 127");
        const std::uint16_t kind = v.is_t() ? 1 : 0;
        return static_cast<std::uint16_t>((kind << 14) | (v.a << 7) | (v.is_x() ? v.b : 0));
    }
    static VarId decode(std::uint16_t packed) {
        const int a = (packed >> 7) & 0x7f;
        const int b = packed & 0x7f;
        return (packed >> 14) ? VarId::t(a) : VarId::x(a, b);
    }

    const Factors& packed() const { return factors_; }
    std::vector<std::pair<VarId, int>> factors() const;
    bool is_one() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (const Factor& f : factors_) d += f.exp;
        return d;
    }
    int x_degree() const {
        int d = 0;
        for (const Factor& f : factors_)
            if (!(f.var >> 14)) d += f.exp;
        return d;
    }
    int t_degree() const { return degree() - x_degree(); }

    bool x_only() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const Factor& f) { return !(f.var >> 14); });
    }

    int exponent(VarId v) const {
        const std::uint16_t key = encode(v);
        for (const Factor& f : factors_)
            if (f.var == key) return f.exp;
        return 0;
    }

    Monomial operator*(const Monomial& other) const;

    // True if every exponent of this divisor is covered by `numerator`,
    // writing the quotient.
    bool divides_into(const Monomial& numerator, Monomial& quotient) const;

    friend bool operator==(const Monomial& lhs, const Monomial& rhs) {
        return lhs.factors_ == rhs.factors_;
    }

    // Lexicographic on the exponent vector in the global VarId order: the
    // first variable with differing exponent decides, larger exponent
    // meaning larger monomial.
    friend bool operator<(const Monomial& lhs, const Monomial& rhs);

    void validate(const Shape& shape) const {
        for (const Factor& f : factors_) decode(f.var).validate(shape);
    }

  private:
    Factors factors_;
};

}  // namespace reeslift
