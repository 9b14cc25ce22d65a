#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace reeslift {

// Shape of the generic matrix X: rows x cols with rows >= cols >= 1.
// The Hilbert-Burch setting of the lift is Shape{n, n-1}.
struct Shape {
    int rows = 0;
    int cols = 0;

    friend bool operator==(const Shape&, const Shape&) = default;

    int var_count() const { return rows * cols; }
    bool almost_square() const { return rows == cols + 1; }

    static Shape checked(int rows, int cols) {
        if (cols < 1 || rows < cols)
            throw std::invalid_argument("Shape: require rows >= cols >= 1");
        return Shape{rows, cols};
    }
    std::string to_string() const {
        return std::to_string(rows) + "x" + std::to_string(cols);
    }
};

// A variable of S = R[T_1..T_rows]: either an entry x(i,j) of X or a Rees
// variable T(k). All indices are 1-based. The total order is fixed: every
// x before every T, x row-major, T by index.
struct VarId {
    enum class Kind : int { X = 0, T = 1 };

    Kind kind = Kind::X;
    int a = 1;  // row i for X, index k for T
    int b = 1;  // column j for X, unused for T

    static VarId x(int i, int j) { return VarId{Kind::X, i, j}; }
    static VarId t(int k) { return VarId{Kind::T, k, 0}; }

    bool is_x() const { return kind == Kind::X; }
    bool is_t() const { return kind == Kind::T; }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    void validate(const Shape& shape) const {
        const bool ok = is_x()
                            ? (a >= 1 && a <= shape.rows && b >= 1 && b <= shape.cols)
                            : (a >= 1 && a <= shape.rows);
        if (!ok)
            throw std::invalid_argument("variable " + to_string() +
                                        " out of range for shape " + shape.to_string());
    }

    std::string to_string() const {
        if (is_x())
            return "x[" + std::to_string(a) + "," + std::to_string(b) + "]";
        return "T[" + std::to_string(a) + "]";
    }
};

}  // namespace reeslift
