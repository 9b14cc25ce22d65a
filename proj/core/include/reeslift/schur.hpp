#pragma once

#include "reeslift/partition.hpp"

namespace reeslift {

// dim S_lambda(C^n) by the Weyl product formula
//   prod_{1<=i<j<=n} (lambda_i - lambda_j + j - i) / (j - i),
// computed as one exact integer quotient.
Int schur_dim(const DominantWeight& weight);

// Same, padding a partition with zeros to n parts; lambda must fit.
Int schur_dim(const Partition& lambda, int n);

// Independent oracle: exhaustive count of semistandard Young tableaux of
// shape lambda with entries in [1, n]; capped at |lambda| <= 12.
long ssyt_count(const Partition& lambda, int n);

// Sum over partitions lambda of r with at most n parts of
// dim S_lambda(C^m) * dim S_lambda(C^n); equals binomial(mn + r - 1, r).
Int cauchy_dim(int m, int n, int r);

// Same sum restricted to lambda_1 <= t - n: the representation-side
// prediction for dim [R / I_(t-n+1)]_r when m > n and t >= n.
Int schur_sum_dim(int m, int n, int t, int r);

}  // namespace reeslift
