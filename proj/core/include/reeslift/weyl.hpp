#pragma once

#include <map>
#include <string>
#include <vector>

#include "reeslift/poly.hpp"

namespace reeslift {

// Constant-coefficient differential operator f(d) obtained from an
// x-polynomial f by reading x(i,j) as the partial derivative d(i,j).
class StarOperator {
  public:
    explicit StarOperator(Poly body);
    const Poly& body() const { return body_; }

  private:
    Poly body_;
};

// op applied to an x-polynomial by iterated differentiation.
Poly apply(const StarOperator& op, const Poly& g);

// <f*, g> for homogeneous f, g of one degree: the constant f(d) . g.
// On the monomial basis <m*, m> is the product of exponent factorials.
Rat pairing(const Poly& f, const Poly& g);

// Class in H_m^{mn}(R) presented as a rational combination of Laurent
// monomials with every exponent <= -1; the R-action truncates any monomial
// that reaches a nonnegative exponent. Exponent vectors are row-major over
// the shape's x-variables.
class LaurentClass {
  public:
    explicit LaurentClass(const Shape& shape) : shape_(shape) {}

    // 1/(prod x(i,j)): the socle generator, all exponents -1.
    static LaurentClass socle(const Shape& shape);

    const Shape& shape() const { return shape_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exponents, const Rat& coeff);

    LaurentClass& operator+=(const LaurentClass& other);
    friend LaurentClass operator+(LaurentClass lhs, const LaurentClass& rhs) {
        return lhs += rhs;
    }
    LaurentClass& operator*=(const Rat& c);
    friend LaurentClass operator*(LaurentClass c, const Rat& s) { return c *= s; }
    friend bool operator==(const LaurentClass&, const LaurentClass&);

    std::string to_text() const;

  private:
    Shape shape_;
    std::map<std::vector<int>, Rat> terms_;
};

// Same term syntax as the polynomial format but with negative exponents.
LaurentClass parse_laurent(const Shape& shape, const std::string& text);

// Formal differentiation of negative-exponent monomials:
// d(i,j) . x^b = b_ij x^(b - e_ij); exponents stay strictly negative.
LaurentClass apply_to_laurent(const StarOperator& op, const LaurentClass& c);

// Multiplication by an x-polynomial with truncation at exponent >= 0.
LaurentClass r_action(const Poly& p, const LaurentClass& c);

// d_i^* . (d_i d^s) on the n x (n-1) matrix, exactly.
Poly cayley_apply(int n, const std::vector<int>& s, int i);

struct CayleyScalar {
    bool proportional = false;  // result equals scalar * d^s
    Rat scalar;                 // the observed constant when proportional
};

// Observes d_i^* . (d_i d^s) = c * d^s and reports c; never assumes a
// closed form for c.
CayleyScalar cayley_scalar(int n, const std::vector<int>& s, int i);

struct FourierCheck {
    bool operator_side = false;  // f* . d^alpha == 0
    bool laurent_side = false;   // every monomial multiple of f kills (d^alpha)* . 1/x
    bool agree() const { return operator_side == laurent_side; }
};

// Both routes of the annihilation condition for |alpha| = t - n + 1,
// computed independently.
FourierCheck fourier_equivalence_check(const Poly& f, const std::vector<int>& alpha, int n,
                                       int t);

}  // namespace reeslift
