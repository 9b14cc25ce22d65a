#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reeslift/rational.hpp"

namespace reeslift {

// Dense matrix over Q with deterministic fraction arithmetic.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Rat& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i * cols_ + j)];
    }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    int rank_by_rows() const;
    int rank_by_cols() const { return transpose().rank_by_rows(); }
    int rank() const { return rank_by_rows(); }

    Rat determinant() const;  // square only
    std::optional<RationalMatrix> inverse() const;

  private:
    int rows_;
    int cols_;
    std::vector<Rat> entries_;
};

// One matrix row in sparse form: (column, value) sorted by column.
using SparseRow = std::vector<std::pair<int, Rat>>;

// Rank over Q by incremental reduction against a pivot basis; rows may
// arrive in any order.
int sparse_rank(std::vector<SparseRow> rows);

}  // namespace reeslift
