#include "reeslift/rational_matrix.hpp"

#include <map>
#include <stdexcept>

namespace reeslift {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative size");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: size mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
        }
    return out;
}

int RationalMatrix::rank_by_rows() const {
    RationalMatrix work = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (work.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(work.at(rank, j), work.at(pivot, j));
        const Rat lead = work.at(rank, col);
        for (int i = rank + 1; i < rows_; ++i) {
            if (work.at(i, col) == 0) continue;
            const Rat factor = work.at(i, col) / lead;
            for (int j = col; j < cols_; ++j) work.at(i, j) -= factor * work.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Rat RationalMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    RationalMatrix work = *this;
    Rat det(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (work.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(work.at(col, j), work.at(pivot, j));
            det = -det;
        }
        const Rat lead = work.at(col, col);
        det *= lead;
        for (int i = col + 1; i < rows_; ++i) {
            if (work.at(i, col) == 0) continue;
            const Rat factor = work.at(i, col) / lead;
            for (int j = col; j < cols_; ++j) work.at(i, j) -= factor * work.at(col, j);
        }
    }
    return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
    const int n = rows_;
    RationalMatrix work = *this;
    RationalMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (work.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(col, j), work.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        const Rat lead = work.at(col, col);
        for (int j = 0; j < n; ++j) {
            work.at(col, j) /= lead;
            inv.at(col, j) /= lead;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || work.at(i, col) == 0) continue;
            const Rat factor = work.at(i, col);
            for (int j = 0; j < n; ++j) {
                work.at(i, j) -= factor * work.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

// other += scale * pivot_row, merged on sorted columns.
SparseRow axpy(const SparseRow& row, const SparseRow& pivot_row, const Rat& scale) {
    SparseRow out;
    out.reserve(row.size() + pivot_row.size());
    auto i = row.begin();
    auto j = pivot_row.begin();
    while (i != row.end() && j != pivot_row.end()) {
        if (i->first < j->first)
            out.push_back(*i++);
        else if (j->first < i->first) {
            out.emplace_back(j->first, scale * j->second);
            ++j;
        } else {
            Rat v = i->second + scale * j->second;
            if (v != 0) out.emplace_back(i->first, std::move(v));
            ++i, ++j;
        }
    }
    out.insert(out.end(), i, row.end());
    for (; j != pivot_row.end(); ++j) out.emplace_back(j->first, scale * j->second);
    return out;
}

}  // namespace

int sparse_rank(std::vector<SparseRow> rows) {
    std::map<int, SparseRow> pivots;  // leading column -> normalized row
    int rank = 0;
    for (auto& row : rows) {
        SparseRow current = std::move(row);
        while (!current.empty()) {
            const int lead = current.front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                const Rat inv_lead = Rat(1) / current.front().second;
                for (auto& [c, v] : current) v *= inv_lead;
                pivots.emplace(lead, std::move(current));
                ++rank;
                break;
            }
            current = axpy(current, it->second, -current.front().second);
        }
    }
    return rank;
}

}  // namespace reeslift
