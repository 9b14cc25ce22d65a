#pragma once

#include <vector>

#include "reeslift/poly.hpp"

namespace reeslift {

// Every x-monomial of total degree r under the shape, descending in the
// monomial order. Enumeration is bounded to rows*cols <= 12 and r <= 8.
std::vector<Monomial> x_monomials_of_degree(const Shape& shape, int r);

// dim_Q of [ (gens) ]_r, the degree-r piece of the ideal generated by the
// (homogeneous, x-only) generators: rank of the coefficient matrix of all
// products monomial * generator in degree r. Exact arithmetic throughout.
int graded_component_dim(const Shape& shape, const std::vector<Poly>& gens, int r);

}  // namespace reeslift
