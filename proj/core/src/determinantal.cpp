#include "reeslift/determinantal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace reeslift {

std::vector<IndexSet> subsets_of_size(int universe, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > universe) return out;
    IndexSet current;
    current.reserve(static_cast<std::size_t>(k));
    // iterative lexicographic enumeration
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        const int needed = k - static_cast<int>(current.size());
        for (int v = next; v <= universe - needed + 1; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 1);
    return out;
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& entries) {
    const std::size_t n = entries.size();
    for (const auto& row : entries)
        if (row.size() != n) throw std::invalid_argument("poly_determinant: not square");
    if (n == 0) return Poly{Rat(1)};
    // Laplace expansion along the first row, recursing on column subsets.
    std::vector<int> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = static_cast<int>(j);
    auto expand = [&](auto&& self, std::size_t row, std::vector<int> live) -> Poly {
        if (live.empty()) return Poly{Rat(1)};
        Poly acc;
        int sign = 1;
        for (std::size_t k = 0; k < live.size(); ++k) {
            const Poly& e = entries[row][static_cast<std::size_t>(live[k])];
            if (!e.is_zero()) {
                std::vector<int> rest = live;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
                Poly sub = self(self, row + 1, std::move(rest));
                acc += (sign > 0) ? e * sub : -(e * sub);
            }
            sign = -sign;
        }
        return acc;
    };
    return expand(expand, 0, cols);
}

namespace {

Poly submatrix_det(const Shape& shape, const IndexSet& rows, const IndexSet& cols,
                   std::map<std::pair<IndexSet, IndexSet>, Poly>& memo) {
    if (rows.empty()) return Poly{Rat(1)};
    auto key = std::make_pair(rows, cols);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        Poly entry = Poly::x_var(rows[0], cols[k], shape);
        IndexSet sub_rows(rows.begin() + 1, rows.end());
        Poly sub = submatrix_det(shape, sub_rows, set_without(cols, cols[k]), memo);
        acc += (sign > 0) ? entry * sub : -(entry * sub);
        sign = -sign;
    }
    memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace

Poly minor(const Shape& shape, const IndexSet& rows, const IndexSet& cols) {
    validate_index_set(rows);
    validate_index_set(cols);
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor: row and column sets must have equal size");
    if (!rows.empty() && (rows.back() > shape.rows || cols.back() > shape.cols))
        throw std::invalid_argument("minor: index out of range for shape " + shape.to_string());
    std::map<std::pair<IndexSet, IndexSet>, Poly> memo;
    return submatrix_det(shape, rows, cols, memo);
}

Poly maximal_minor(const Shape& shape, int i) {
    if (!shape.almost_square())
        throw std::invalid_argument("maximal_minor: shape must be n x (n-1)");
    if (i < 1 || i > shape.rows) throw std::invalid_argument("maximal_minor: row out of range");
    IndexSet all_cols;
    for (int j = 1; j <= shape.cols; ++j) all_cols.push_back(j);
    return minor(shape, complement({i}, shape.rows), all_cols);
}

Poly signed_minor(const Shape& shape, int i) {
    Poly d = maximal_minor(shape, i);
    return (i % 2 == 0) ? d : -d;
}

Poly y_polynomial(const Shape& shape, const IndexSet& A, const IndexSet& H, int i) {
    validate_index_set(A);
    validate_index_set(H);
    if (!shape.almost_square())
        throw std::invalid_argument("y_polynomial: shape must be n x (n-1)");
    const int n = shape.rows;
    const int r = static_cast<int>(A.size());
    if (r < 2 || r > n || static_cast<int>(H.size()) != r - 2)
        throw std::invalid_argument("y_polynomial: require #A = r in [2,n] and #H = r-2");
    if (i < 1 || i > n) throw std::invalid_argument("y_polynomial: row out of range");
    if (!A.empty() && A.back() > n)
        throw std::invalid_argument("y_polynomial: A out of range");
    if (!H.empty() && H.back() > n - 1)
        throw std::invalid_argument("y_polynomial: H out of range");

    const IndexSet col_pool = complement(H, n - 1);
    std::vector<std::vector<Poly>> entries;
    auto row_of = [&](int row_index) {
        std::vector<Poly> row;
        row.reserve(col_pool.size());
        for (int c : col_pool) row.push_back(Poly::x_var(row_index, c, shape));
        return row;
    };
    entries.push_back(row_of(i));
    for (int a : complement(A, n)) entries.push_back(row_of(a));
    return poly_determinant(entries);
}

namespace {

void weakly_increasing(int length, int max, std::vector<int>& stack,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(stack.size()) == length) {
        out.push_back(stack);
        return;
    }
    const int lo = stack.empty() ? 1 : stack.back();
    for (int v = lo; v <= max; ++v) {
        stack.push_back(v);
        weakly_increasing(length, max, stack, out);
        stack.pop_back();
    }
}

Poly permanent(const Shape& shape, const std::vector<int>& alpha,
               const std::vector<int>& beta) {
    const std::size_t t = alpha.size();
    std::vector<int> perm(t);
    for (std::size_t k = 0; k < t; ++k) perm[k] = static_cast<int>(k);
    PolyBuilder acc(shape);
    do {
        Monomial m = Monomial::one();
        for (std::size_t k = 0; k < t; ++k)
            m = m * Monomial::variable(
                        VarId::x(alpha[k], beta[static_cast<std::size_t>(perm[k])]));
        acc.add(m, Rat(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.take();
}

}  // namespace

std::vector<Poly> generalized_permanents(const Shape& shape, int t) {
    if (t < 1) throw std::invalid_argument("generalized_permanents: require t >= 1");
    std::vector<std::vector<int>> rows_idx, cols_idx;
    std::vector<int> stack;
    weakly_increasing(t, shape.rows, stack, rows_idx);
    weakly_increasing(t, shape.cols, stack, cols_idx);
    std::vector<Poly> out;
    out.reserve(rows_idx.size() * cols_idx.size());
    for (const auto& alpha : rows_idx)
        for (const auto& beta : cols_idx) out.push_back(permanent(shape, alpha, beta));
    return out;
}

Poly det_lambda(const Shape& shape, const Partition& lambda) {
    const Partition transposed = lambda.transpose();
    Poly out{Rat(1)};
    for (int i = 1; i <= lambda.part(1); ++i) {
        const int l = transposed.part(i);
        if (l > shape.cols || l > shape.rows)
            throw std::invalid_argument("det_lambda: transpose part " + std::to_string(l) +
                                        " exceeds shape " + shape.to_string());
        IndexSet leading;
        for (int k = 1; k <= l; ++k) leading.push_back(k);
        out = out * minor(shape, leading, leading);
    }
    return out;
}

}  // namespace reeslift
