#pragma once

#include <map>
#include <vector>

#include "reeslift/partition.hpp"
#include "reeslift/report.hpp"
#include "reeslift/weyl.hpp"

namespace reeslift {

// The generators (d^alpha)* . 1/x of Ext^n(R/I^t, R) inside H_m^{n(n-1)}(R),
// one per alpha with |alpha| = t - n + 1; empty for t < n - 1.
struct ExtGeneratorSet {
    int n = 0;
    int t = 0;
    std::map<std::vector<int>, LaurentClass> generators;
};

ExtGeneratorSet ext_generators(int n, int t);

// True when the generators are linearly independent over Q (rank of the
// coefficient matrix on Laurent monomials equals their number).
bool ext_generators_independent(const ExtGeneratorSet& set);

// Containment I_(t-n+2) into the annihilator: every generalized permanent p
// of size t-n+2 satisfies p* . d^alpha = 0 for every |alpha| = t-n+1.
VerificationReport annihilator_containment(int n, int t);

// Tightness witness: d_n^{t-n+1} does not kill the alpha = (0..0, t-n+1)
// generator, blocking every strictly larger invariant ideal.
VerificationReport annihilator_tightness(int n, int t);

struct AnnihilatorReport {
    int n = 0;
    int t = 0;
    bool containment_passed = false;
    bool tightness_passed = false;
    bool fourier_agreed = false;
    VerificationReport detail;

    Json to_json() const;
};

// Containment, tightness, and the two-route Fourier agreement on every
// tested (permanent, alpha) pair.
AnnihilatorReport annihilator_check(int n, int t);

struct HilbertRow {
    int r = 0;
    Int lhs;  // dim [R / I_(t-n+1)]_r by exact rank
    Int rhs;  // Schur-functor sum with lambda_1 <= t-n
};

struct HilbertReport {
    int m = 0, n = 0, t = 0, r_max = 0;
    bool equal = false;
    std::vector<HilbertRow> rows;

    Json to_json() const;
};

// Degreewise comparison of the rank route against the Schur-sum route on
// the general m x n matrix (m > n, t >= n).
HilbertReport hilbert_compare(int m, int n, int t, int r_max);

// Reduced fraction numerator / prod Delta_i^{e_i}.
struct ExtFraction {
    Poly numerator;
    std::vector<int> delta_exponents;
};

// Reads the coefficient of each T^alpha off phi_t^{n-1}(e_{1..n}), divides
// by (prod Delta_i)^t and reduces; the expected value is +-1 over
// prod Delta_i^{1 + alpha_i}.
std::map<std::vector<int>, ExtFraction> ext_via_lift(int n, int t);

}  // namespace reeslift
