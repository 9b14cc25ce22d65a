#include "reeslift/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace reeslift {

Int schur_dim(const DominantWeight& weight) {
    const auto& lam = weight.parts();
    const int n = weight.length();
    Int num(1), den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("schur_dim: product formula not integral");
    return q;
}

Int schur_dim(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw std::invalid_argument("schur_dim: partition has more than n parts");
    std::vector<int> padded(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        padded[static_cast<std::size_t>(i - 1)] = lambda.part(i);
    return schur_dim(DominantWeight(std::move(padded)));
}

namespace {

// Fill cells in row-major order: weakly increasing along rows, strictly
// increasing down columns.
long count_fillings(const Partition& lambda, int n, std::vector<std::vector<int>>& tab,
                    int row, int col) {
    if (row == lambda.length()) return 1;
    const int row_len = lambda.part(row + 1);
    int next_row = row, next_col = col + 1;
    if (next_col == row_len) {
        ++next_row;
        next_col = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, tab[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
    if (row > 0 && col < lambda.part(row))
        lo = std::max(lo, tab[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    long total = 0;
    for (int v = lo; v <= n; ++v) {
        tab[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        total += count_fillings(lambda, n, tab, next_row, next_col);
    }
    return total;
}

}  // namespace

long ssyt_count(const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("ssyt_count: negative alphabet");
    if (lambda.size() > 12) throw std::invalid_argument("ssyt_count: |lambda| capped at 12");
    if (lambda.length() == 0) return 1;
    if (lambda.length() > n) return 0;  // first column needs distinct entries
    std::vector<std::vector<int>> tab;
    for (int i = 1; i <= lambda.length(); ++i)
        tab.emplace_back(static_cast<std::size_t>(lambda.part(i)), 0);
    return count_fillings(lambda, n, tab, 0, 0);
}

Int cauchy_dim(int m, int n, int r) {
    if (m < n || n < 1) throw std::invalid_argument("cauchy_dim: require m >= n >= 1");
    if (r < 0) return Int(0);
    Int total(0);
    for (const Partition& lam : partitions_of(r, n, r))
        total += schur_dim(lam, m) * schur_dim(lam, n);
    return total;
}

Int schur_sum_dim(int m, int n, int t, int r) {
    if (m <= n) throw std::invalid_argument("schur_sum_dim: require m > n");
    if (t < n) throw std::invalid_argument("schur_sum_dim: require t >= n");
    if (r < 0) return Int(0);
    Int total(0);
    for (const Partition& lam : partitions_of(r, n, t - n))
        total += schur_dim(lam, m) * schur_dim(lam, n);
    return total;
}

}  // namespace reeslift
