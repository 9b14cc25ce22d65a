#pragma once

#include <vector>

#include "reeslift/index_set.hpp"
#include "reeslift/partition.hpp"
#include "reeslift/poly.hpp"

namespace reeslift {

// Determinant of a small square matrix of polynomial entries.
Poly poly_determinant(const std::vector<std::vector<Poly>>& entries);

// X_{A,H}: determinant of the submatrix with rows A and columns H (both
// taken in increasing order); the empty minor is 1.
Poly minor(const Shape& shape, const IndexSet& rows, const IndexSet& cols);

// d_i: the maximal minor of an n x (n-1) matrix deleting row i.
Poly maximal_minor(const Shape& shape, int i);

// Delta_i = (-1)^i d_i, the Hilbert-Burch signs with sum_i Delta_i x(i,a) = 0.
Poly signed_minor(const Shape& shape, int i);

// Y_{A,H,i}: determinant of the row (x(i,a))_{a in H^c} stacked over the
// submatrix with rows A^c and columns H^c; requires #A >= 2, #H = #A - 2.
// Vanishes whenever i lies outside A (repeated row).
Poly y_polynomial(const Shape& shape, const IndexSet& A, const IndexSet& H, int i);

// All t x t generalized permanents per weakly increasing row and column
// multi-indices; repeats are kept as enumerated (so scalar multiples occur).
std::vector<Poly> generalized_permanents(const Shape& shape, int t);

// det_lambda = prod_i det_{lambda'_i} over the transpose partition, where
// det_l is the leading principal l x l minor.
Poly det_lambda(const Shape& shape, const Partition& lambda);

}  // namespace reeslift
