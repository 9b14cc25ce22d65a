// Acceptance suite: every identity is exact, so each criterion is an exact
// equality check at desk scale. One line is printed per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "reeslift/cohomology.hpp"
#include "reeslift/complexes.hpp"
#include "reeslift/determinantal.hpp"
#include "reeslift/gl_action.hpp"
#include "reeslift/runner.hpp"
#include "reeslift/schur.hpp"

using namespace reeslift;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool ok, double ms) {
    std::printf("[%s] criterion %d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), ms);
    if (!ok) ++failures;
}

template <typename F>
void timed(int number, const std::string& label, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
        ok = false;
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    criterion(number, label, ok, ms);
}

Poly delta(int i, const Shape& s) { return signed_minor(s, i); }

// 1. The worked example n = 3, t = 2, matched verbatim after expansion.
bool worked_example() {
    const Shape s{3, 2};
    StrandElement top(3, 2, 0);
    top.add_term({1, 2}, -(delta(1, s) * delta(2, s) * delta(3, s)));
    if (!(phi(3, 2, 3, {1, 2, 3}) == top)) return false;

    for (int a = 1; a <= 3; ++a) {
        StrandElement bottom(3, 0, 2);
        bottom.add_term({}, Poly::t_var(a, s).pow(2));
        if (!(phi(3, 2, 1, {a}) == bottom)) return false;
    }

    auto h = [&](int a, int b) {
        return delta(b, s) * Poly::t_var(a, s) + delta(a, s) * Poly::t_var(b, s);
    };
    struct Case {
        int a, b, c, sign;
    };
    for (const Case& cs : {Case{1, 2, 3, +1}, Case{1, 3, 2, -1}, Case{2, 3, 1, +1}}) {
        StrandElement mid(3, 1, 1);
        mid.add_term({1}, h(cs.a, cs.b) * Poly::x_var(cs.c, 2, s) * Rat(-cs.sign));
        mid.add_term({2}, h(cs.a, cs.b) * Poly::x_var(cs.c, 1, s) * Rat(cs.sign));
        if (!(phi(3, 2, 2, {cs.a, cs.b}) == mid)) return false;
    }
    return true;
}

// 2. Full lift commutativity across the listed (n, t) grid.
bool lift_grid() {
    const std::pair<int, int> grid[] = {{2, 1}, {2, 2}, {2, 3}, {3, 2},
                                        {3, 3}, {3, 4}, {4, 3}, {4, 4}};
    for (const auto& [n, t] : grid) {
        const VerificationReport report = check_full_lift(n, t);
        if (!report.passed()) {
            std::printf("  lift (n=%d, t=%d): %zu failing checks\n", n, t,
                        report.failure_count());
            return false;
        }
    }
    return true;
}

// 3. Identity suite: syzygy, row expansion, sign identity, key identity,
//    d^2 = 0, delta^2 = 0.
bool identity_suite() {
    CheckRequest req;
    req.check = "identities";
    return run(req).status == "pass";
}

// 4. Cayley-type proportionality with logged scalars for n in {2,3}, |s| <= 3.
bool cayley_proportionality() {
    bool truncated_always_matches = true;
    for (int n = 2; n <= 3; ++n)
        for (int w = 0; w <= 3; ++w)
            for (const auto& s : compositions(w, n))
                for (int i = 1; i <= n; ++i) {
                    const CayleyScalar observed = cayley_scalar(n, s, i);
                    if (!observed.proportional) return false;
                    Rat printed(s[static_cast<std::size_t>(i - 1)] + 1);
                    for (int j = 2; j <= n; ++j) printed *= w + j;
                    Rat truncated(s[static_cast<std::size_t>(i - 1)] + 1);
                    for (int j = 2; j <= n - 1; ++j) truncated *= w + j;
                    if (observed.scalar != truncated) truncated_always_matches = false;
                    if (observed.scalar != printed && observed.scalar != truncated) {
                        std::printf("  scalar for n=%d i=%d |s|=%d matches neither product\n",
                                    n, i, w);
                    }
                }
    std::printf("  observed scalars %s the product ending at (s+n-1)\n",
                truncated_always_matches ? "all match" : "do not all match");
    return true;  // the pass condition is proportionality; the products are logged
}

// 5. Ext realization: lift fractions reduce to the closed-form generators
//    reduction; the Laurent-route generators are nonzero and independent;
//    the known n = 3, t = 3 derivative class is reproduced up to sign.
bool ext_realization() {
    for (int n = 2; n <= 3; ++n)
        for (int t = n - 1; t <= 4; ++t) {
            const auto fractions = ext_via_lift(n, t);
            const auto alphas = compositions(t - n + 1, n);
            if (fractions.size() != alphas.size()) return false;
            for (const auto& alpha : alphas) {
                const auto it = fractions.find(alpha);
                if (it == fractions.end()) return false;
                const ExtFraction& f = it->second;
                if (!f.numerator.is_constant()) return false;
                const Rat c = f.numerator.constant_value();
                if (c != 1 && c != -1) return false;
                for (int i = 0; i < n; ++i)
                    if (f.delta_exponents[static_cast<std::size_t>(i)] !=
                        1 + alpha[static_cast<std::size_t>(i)])
                        return false;
            }
            if (t >= n - 1) {
                const auto gens = ext_generators(n, t);
                for (const auto& [alpha, cls] : gens.generators)
                    if (cls.is_zero()) return false;
                if (!ext_generators_independent(gens)) return false;
            }
        }
    // the hand-expanded n = 3, t = 3 class
    const Shape s{3, 2};
    const LaurentClass g = ext_generators(3, 3).generators.at({0, 0, 1});
    LaurentClass expected(s);
    std::vector<int> e(6, -1);
    e[0] = -2, e[3] = -2;
    expected.add_term(e, Rat(1));
    e.assign(6, -1);
    e[1] = -2, e[2] = -2;
    expected.add_term(e, Rat(-1));
    return g == expected || g == expected * Rat(-1);
}

// 6. Annihilator: containment and tightness for the listed (n, t),
//    with the two annihilation routes agreeing on every tested pair.
bool annihilator_suite() {
    const std::pair<int, int> grid[] = {{2, 2}, {2, 3}, {3, 3}, {3, 4}};
    for (const auto& [n, t] : grid) {
        const AnnihilatorReport report = annihilator_check(n, t);
        if (!report.containment_passed || !report.tightness_passed ||
            !report.fourier_agreed) {
            std::printf("  annihilator (n=%d, t=%d): containment=%d tightness=%d fourier=%d\n",
                        n, t, report.containment_passed, report.tightness_passed,
                        report.fourier_agreed);
            return false;
        }
    }
    return true;
}

// 7. Hilbert-function identity on the listed (m, n, t, r_max).
bool hilbert_identity() {
    const std::array<int, 4> grid[] = {
        {3, 2, 2, 4}, {3, 2, 3, 5}, {3, 2, 4, 5}, {4, 2, 3, 4}, {4, 3, 4, 4}};
    for (const auto& [m, n, t, r_max] : grid) {
        const HilbertReport report = hilbert_compare(m, n, t, r_max);
        if (!report.equal) {
            for (const auto& row : report.rows)
                if (row.lhs != row.rhs)
                    std::printf("  hilbert (m=%d,n=%d,t=%d) r=%d: lhs=%s rhs=%s\n", m, n, t,
                                row.r, row.lhs.get_str().c_str(), row.rhs.get_str().c_str());
            return false;
        }
    }
    return true;
}

// 8. Pairing equivariance, 100 seeded trials, plus orbit annihilation.
bool pairing_equivariance() {
    CheckRequest req;
    req.check = "pairing";
    req.seed = 0;
    req.trials = 100;
    return run(req).status == "pass";
}

// 9. Combinatorial oracles at the stated ranges.
bool combinatorial_oracles() {
    for (int n = 1; n <= 4; ++n)
        for (int size = 0; size <= 6; ++size)
            for (const Partition& lam : partitions_of(size, n, size))
                if (schur_dim(lam, n) != ssyt_count(lam, n)) return false;
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= m && m * n <= 12; ++n)
            for (int r = 0; r <= 6; ++r)
                if (cauchy_dim(m, n, r) != binomial(static_cast<long>(m) * n + r - 1, r))
                    return false;
    return true;
}

}  // namespace

int main() {
    timed(1, "worked-example reproduction (n=3, t=2)", worked_example);
    timed(2, "lift commutativity over the (n,t) grid", lift_grid);
    timed(3, "identity suite", identity_suite);
    timed(4, "Cayley-type proportionality with logged scalars", cayley_proportionality);
    timed(5, "Ext realization via lift and Laurent classes", ext_realization);
    timed(6, "annihilator containment, tightness, Fourier agreement", annihilator_suite);
    timed(7, "Hilbert-function identity", hilbert_identity);
    timed(8, "pairing equivariance and orbit annihilation", pairing_equivariance);
    timed(9, "combinatorial oracles", combinatorial_oracles);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
