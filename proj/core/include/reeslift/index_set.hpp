#pragma once

#include <stdexcept>
#include <vector>

namespace reeslift {

// Strictly increasing positive integers; the empty set is allowed.
using IndexSet = std::vector<int>;

inline void validate_index_set(const IndexSet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1) throw std::invalid_argument("IndexSet: indices are 1-based");
        if (i > 0 && a[i] <= a[i - 1])
            throw std::invalid_argument("IndexSet: indices must strictly increase");
    }
}

inline bool set_contains(const IndexSet& a, int v) {
    for (int x : a)
        if (x == v) return true;
    return false;
}

inline IndexSet complement(const IndexSet& a, int universe) {
    IndexSet out;
    out.reserve(static_cast<std::size_t>(universe));
    std::size_t k = 0;
    for (int v = 1; v <= universe; ++v) {
        if (k < a.size() && a[k] == v)
            ++k;
        else
            out.push_back(v);
    }
    if (k != a.size()) throw std::invalid_argument("complement: set exceeds universe");
    return out;
}

inline IndexSet set_without(const IndexSet& a, int v) {
    IndexSet out;
    out.reserve(a.size());
    for (int x : a)
        if (x != v) out.push_back(x);
    return out;
}

inline IndexSet set_with(IndexSet a, int v) {
    a.push_back(v);
    for (std::size_t i = a.size() - 1; i > 0 && a[i] < a[i - 1]; --i) std::swap(a[i], a[i - 1]);
    return a;
}

inline int index_sum(const IndexSet& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

// rho(A, B): 0 when the sets meet, otherwise (-1)^{#{(a,b) in AxB : a > b}}.
inline int rho(const IndexSet& a, const IndexSet& b) {
    long inversions = 0;
    for (int x : a)
        for (int y : b) {
            if (x == y) return 0;
            if (x > y) ++inversions;
        }
    return (inversions % 2 == 0) ? 1 : -1;
}

// rho({alpha}, A \ alpha) * rho({alpha}, A^c) == (-1)^(alpha - 1) within
// {1..universe}; exercised exhaustively by the identity suite.
inline bool sign_identity_holds(int alpha, const IndexSet& a, int universe) {
    if (!set_contains(a, alpha))
        throw std::invalid_argument("sign_identity_holds: alpha must lie in A");
    const int lhs = rho({alpha}, set_without(a, alpha)) * rho({alpha}, complement(a, universe));
    const int rhs = (alpha - 1) % 2 == 0 ? 1 : -1;
    return lhs == rhs;
}

// All k-subsets of {1..universe} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int universe, int k);

}  // namespace reeslift
