#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reeslift/monomial.hpp"
#include "reeslift/rational.hpp"

namespace reeslift {

// Sparse multivariate polynomial over Q in the variables of one matrix
// shape context. Terms are held as a vector sorted ascending in the
// monomial order with no zero coefficients, so structural equality is
// canonical equality. Constants carry no shape and unify with any
// context; polynomials built under different shapes refuse to combine.
class Poly {
  public:
    using Term = std::pair<Monomial, Rat>;
    using Terms = std::vector<Term>;

    Poly() = default;  // zero
    explicit Poly(Rat constant);
    Poly(long constant) : Poly(Rat(constant)) {}

    static Poly variable(VarId v, const Shape& shape);
    static Poly monomial(Monomial m, Rat coeff, const Shape& shape);
    static Poly x_var(int i, int j, const Shape& shape) {
        return variable(VarId::x(i, j), shape);
    }
    static Poly t_var(int k, const Shape& shape) {
        return variable(VarId::t(k), shape);
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; the whole value when is_constant().
    Rat constant_value() const;

    // Total degree; rejects the zero polynomial (query is_zero first).
    int degree() const;
    bool is_homogeneous() const;
    bool is_t_homogeneous() const;
    int t_degree() const;  // of a t-homogeneous polynomial
    bool x_only() const;

    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rat coefficient(const Monomial& m) const;
    const std::optional<Shape>& shape() const { return shape_; }

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly operator-() const;
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    Poly& operator*=(const Poly& other) { return *this = *this * other; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly p, const Rat& c) { return p *= c; }
    friend Poly operator*(const Rat& c, Poly p) { return p *= c; }
    Poly pow(int e) const;

    friend bool operator==(const Poly&, const Poly&);

    std::string to_text() const;

  private:
    friend class PolyBuilder;

    void add_term(const Monomial& m, const Rat& c);
    void absorb_shape(const std::optional<Shape>& other);

    std::optional<Shape> shape_;
    Terms terms_;
};

// Accumulates terms in arbitrary order and canonicalizes once on take();
// intermediate buffers coalesce automatically when they grow large.
class PolyBuilder {
  public:
    explicit PolyBuilder(std::optional<Shape> shape = std::nullopt);
    void add(const Monomial& m, const Rat& c);
    void add(Monomial&& m, Rat&& c);
    void add(const Poly& p, const Rat& scale = Rat(1));
    void add_product(const Poly& a, const Poly& b, const Rat& scale = Rat(1));
    Poly take();

  private:
    void coalesce();

    std::optional<Shape> shape_;
    Poly::Terms raw_;
};

// Assignment of x-variables to linear forms (the GL substitution rule).
using LinearSubstitution = std::map<VarId, Poly>;

// Ring homomorphism substituting every x-variable through `xmap`;
// T-variables pass through unchanged. Every x-variable occurring in `p`
// must be assigned, and every image must be an x-linear form.
Poly substitute_linear(const Poly& p, const LinearSubstitution& xmap);

// Substitutes T_k by images[k-1] (a polynomial), leaving x untouched.
Poly substitute_t(const Poly& p, const std::vector<Poly>& images);

// Exact division: returns f/g when the homogeneous g divides f, nothing
// otherwise.
std::optional<Poly> try_divide_exact(const Poly& f, const Poly& g);

}  // namespace reeslift
