#pragma once

#include <cstdint>

#include "reeslift/poly.hpp"
#include "reeslift/rational_matrix.hpp"

namespace reeslift {

// Group element (theta1, theta2) of GL_m x GL_n acting on X by
// theta1 * X * theta2^{-1}.
struct GlPair {
    RationalMatrix theta1;
    RationalMatrix theta2;
};

GlPair gl_identity(const Shape& shape);

// Deterministic pseudo-random invertible pair with integer entries in
// [-3, 3]; resamples until both determinants are nonzero.
GlPair gl_random_element(const Shape& shape, std::uint64_t seed);

// Substitution realizing the action on R: x(i,j) -> (theta1 X theta2^{-1})(i,j).
LinearSubstitution gl_substitution(const Shape& shape, const GlPair& g);

// Contragredient substitution for star-operator bodies, so that the
// differentiation pairing is preserved: the variable vector transforms by
// the inverse transpose of the action on R.
LinearSubstitution gl_substitution_dual(const Shape& shape, const GlPair& g);

Poly gl_act(const Shape& shape, const GlPair& g, const Poly& p);
Poly gl_act_dual(const Shape& shape, const GlPair& g, const Poly& p);

// Nonzero homogeneous x-polynomial with `terms` random monomials of the
// given degree and small integer coefficients; deterministic in the seed.
Poly random_homogeneous_poly(const Shape& shape, int degree, int terms, std::uint64_t seed);

}  // namespace reeslift
