#include "reeslift/graded.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reeslift/rational_matrix.hpp"

namespace reeslift {

namespace {

constexpr int kMaxVars = 12;
constexpr int kMaxDegree = 8;

void enumerate(const std::vector<VarId>& vars, std::size_t idx, int remaining,
               std::vector<std::pair<VarId, int>>& stack, std::vector<Monomial>& out) {
    if (idx + 1 == vars.size()) {
        auto factors = stack;
        if (remaining > 0) factors.emplace_back(vars[idx], remaining);
        out.push_back(Monomial::from_factors(std::move(factors)));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        if (e > 0) stack.emplace_back(vars[idx], e);
        enumerate(vars, idx + 1, remaining - e, stack, out);
        if (e > 0) stack.pop_back();
    }
}

}  // namespace

std::vector<Monomial> x_monomials_of_degree(const Shape& shape, int r) {
    if (r < 0) throw std::invalid_argument("x_monomials_of_degree: negative degree");
    if (shape.var_count() > kMaxVars || r > kMaxDegree)
        throw std::invalid_argument(
            "graded enumeration is bounded to rows*cols <= 12 and degree <= 8 (got " +
            shape.to_string() + ", degree " + std::to_string(r) + ")");
    std::vector<VarId> vars;
    vars.reserve(static_cast<std::size_t>(shape.var_count()));
    for (int i = 1; i <= shape.rows; ++i)
        for (int j = 1; j <= shape.cols; ++j) vars.push_back(VarId::x(i, j));
    std::vector<Monomial> out;
    std::vector<std::pair<VarId, int>> stack;
    enumerate(vars, 0, r, stack, out);
    return out;
}

int graded_component_dim(const Shape& shape, const std::vector<Poly>& gens, int r) {
    if (r < 0) throw std::invalid_argument("graded_component_dim: negative degree");
    const std::vector<Monomial> basis = x_monomials_of_degree(shape, r);
    std::map<Monomial, int> column;
    for (std::size_t k = 0; k < basis.size(); ++k)
        column.emplace(basis[k], static_cast<int>(k));

    std::vector<SparseRow> rows;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        if (!g.x_only() || !g.is_homogeneous())
            throw std::invalid_argument(
                "graded_component_dim: generators must be homogeneous x-polynomials");
        const int d = g.degree();
        if (d > r) continue;
        for (const Monomial& m : x_monomials_of_degree(shape, r - d)) {
            SparseRow row;
            row.reserve(g.term_count());
            for (const auto& [gm, gc] : g.terms()) row.emplace_back(column.at(gm * m), gc);
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
    }
    return sparse_rank(std::move(rows));
}

}  // namespace reeslift
