#pragma once

#include <map>

#include "reeslift/index_set.hpp"
#include "reeslift/poly.hpp"
#include "reeslift/report.hpp"

namespace reeslift {

// Element of one exterior degree of R^n: R-coefficients over the basis
// e_A, A a subset of {1..n} of fixed cardinality.
class ExteriorElement {
  public:
    ExteriorElement(int n, int degree);

    int n() const { return n_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexSet, Poly>& terms() const { return terms_; }

    void add_term(const IndexSet& basis, const Poly& coeff);
    friend bool operator==(const ExteriorElement&, const ExteriorElement&);

    Json to_json() const;

  private:
    int n_;
    int degree_;
    std::map<IndexSet, Poly> terms_;
};

// Element of one linear strand of the Rees Koszul complex: S-coefficients
// over the basis f_K, K a subset of {1..n-1}, every coefficient
// T-homogeneous of the declared T-degree.
class StrandElement {
  public:
    StrandElement(int n, int degree, int t_degree);

    int n() const { return n_; }
    int degree() const { return degree_; }
    int t_degree() const { return t_degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexSet, Poly>& terms() const { return terms_; }

    void add_term(const IndexSet& basis, const Poly& coeff);
    StrandElement& operator+=(const StrandElement& other);
    friend StrandElement operator+(StrandElement lhs, const StrandElement& rhs) {
        return lhs += rhs;
    }
    // Multiply by a T-homogeneous polynomial; the declared T-degree shifts.
    StrandElement scaled(const Poly& factor) const;
    friend bool operator==(const StrandElement&, const StrandElement&);

    Json to_json() const;

  private:
    int n_;
    int degree_;
    int t_degree_;
    std::map<IndexSet, Poly> terms_;
};

// Differential of K(Delta_1^t, ..., Delta_n^t; R):
//   d(e_A) = sum_{a in A} rho({a}, A\a) Delta_a^t e_{A\a}.
ExteriorElement koszul_diff(int n, int t, const ExteriorElement& v);

// Strand differential delta(f_K) = sum_{k in K} rho({k}, K\k) F_k f_{K\k}
// with F_j = sum_i x(i,j) T_i; raises T-degree by one.
StrandElement strand_diff(const StrandElement& w);

// Delta_A^e h_e(A) as a polynomial: the complete homogeneous symmetric
// function of degree e in T_a/Delta_a, cleared of denominators:
//   sum_{|beta| = e, supp(beta) in A} T^beta prod_{a in A} Delta_a^{e - beta_a}.
Poly h_poly(int n, const IndexSet& A, int e);

// The lift phi_t^{r-1} on the basis element e_A (#A = r):
//   t <  r-1: 0
//   t == r-1: (-1)^{r-1} Delta_A^{r-2} sum_K (-1)^{A+K} X_{A^c,K^c} f_K
//   t >  r-1: the base map times Delta_A^{t-r+1} h_{t-r+1}(A)
// with phi_t^0(e_a) = T_a^t. Result lives in exterior degree r-1, T-degree
// t-r+1.
StrandElement phi(int n, int t, int r, const IndexSet& A);

// Linear extension of phi to an exterior element of degree r.
StrandElement phi(int n, int t, const ExteriorElement& v);

// Certifies delta(phi(e_A)) == phi(d(e_A)) for every #A = r. r ranges in
// [2, n+1]; r == n+1 is the square against the zero module.
VerificationReport check_square(int n, int t, int r);

// The key vanishing sum_{a in A} rho({a},A\a) Delta_a^{r-2}
// phi_{r-2}^{r-2}(e_{A\a}) = 0 for every #A = r.
VerificationReport key_identity_check(int n, int r);

// All squares plus d o d = 0, delta o delta = 0, and the evaluation square
// substituting T_i -> Delta_i into phi_t^0.
VerificationReport check_full_lift(int n, int t);

}  // namespace reeslift
