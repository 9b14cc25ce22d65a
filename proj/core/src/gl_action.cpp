#include "reeslift/gl_action.hpp"

#include <random>
#include <stdexcept>

namespace reeslift {

GlPair gl_identity(const Shape& shape) {
    return GlPair{RationalMatrix::identity(shape.rows), RationalMatrix::identity(shape.cols)};
}

namespace {

RationalMatrix random_invertible(int n, std::mt19937_64& rng) {
    while (true) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = static_cast<long>(rng() % 7) - 3;  // uniform-ish on [-3,3]
        if (m.determinant() != 0) return m;
    }
}

}  // namespace

GlPair gl_random_element(const Shape& shape, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RationalMatrix theta1 = random_invertible(shape.rows, rng);
    RationalMatrix theta2 = random_invertible(shape.cols, rng);
    return GlPair{std::move(theta1), std::move(theta2)};
}

LinearSubstitution gl_substitution(const Shape& shape, const GlPair& g) {
    if (g.theta1.rows() != shape.rows || g.theta2.rows() != shape.cols)
        throw std::invalid_argument("gl_substitution: matrix sizes do not match shape");
    auto inv2 = g.theta2.inverse();
    if (!inv2) throw std::invalid_argument("gl_substitution: theta2 is singular");
    LinearSubstitution map;
    for (int i = 1; i <= shape.rows; ++i)
        for (int j = 1; j <= shape.cols; ++j) {
            Poly image;
            for (int k = 1; k <= shape.rows; ++k)
                for (int l = 1; l <= shape.cols; ++l) {
                    Rat c = g.theta1.at(i - 1, k - 1) * inv2->at(l - 1, j - 1);
                    if (c != 0) image += Poly::x_var(k, l, shape) * c;
                }
            map.emplace(VarId::x(i, j), std::move(image));
        }
    return map;
}

LinearSubstitution gl_substitution_dual(const Shape& shape, const GlPair& g) {
    auto inv1 = g.theta1.inverse();
    if (!inv1) throw std::invalid_argument("gl_substitution_dual: theta1 is singular");
    // x*(i,j) -> sum_{k,l} theta1^{-1}(k,i) * theta2(j,l) * x*(k,l)
    LinearSubstitution map;
    for (int i = 1; i <= shape.rows; ++i)
        for (int j = 1; j <= shape.cols; ++j) {
            Poly image;
            for (int k = 1; k <= shape.rows; ++k)
                for (int l = 1; l <= shape.cols; ++l) {
                    Rat c = inv1->at(k - 1, i - 1) * g.theta2.at(j - 1, l - 1);
                    if (c != 0) image += Poly::x_var(k, l, shape) * c;
                }
            map.emplace(VarId::x(i, j), std::move(image));
        }
    return map;
}

Poly gl_act(const Shape& shape, const GlPair& g, const Poly& p) {
    return substitute_linear(p, gl_substitution(shape, g));
}

Poly gl_act_dual(const Shape& shape, const GlPair& g, const Poly& p) {
    return substitute_linear(p, gl_substitution_dual(shape, g));
}

Poly random_homogeneous_poly(const Shape& shape, int degree, int terms, std::uint64_t seed) {
    if (degree < 0 || terms < 1)
        throw std::invalid_argument("random_homogeneous_poly: bad arguments");
    std::mt19937_64 rng(seed);
    while (true) {
        PolyBuilder acc(shape);
        for (int k = 0; k < terms; ++k) {
            Monomial m = Monomial::one();
            for (int d = 0; d < degree; ++d) {
                const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(shape.rows));
                const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(shape.cols));
                m = m * Monomial::variable(VarId::x(i + 1, j + 1));
            }
            long c = static_cast<long>(rng() % 9) - 4;
            if (c == 0) c = 1;
            acc.add(m, Rat(c));
        }
        Poly p = acc.take();
        if (!p.is_zero()) return p;
    }
}

}  // namespace reeslift
