#include "reeslift/complexes.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "reeslift/determinantal.hpp"
#include "reeslift/poly_text.hpp"

namespace reeslift {

ExteriorElement::ExteriorElement(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1 || degree < 0 || degree > n)
        throw std::invalid_argument("ExteriorElement: degree out of range");
}

void ExteriorElement::add_term(const IndexSet& basis, const Poly& coeff) {
    validate_index_set(basis);
    if (static_cast<int>(basis.size()) != degree_ || (!basis.empty() && basis.back() > n_))
        throw std::invalid_argument("ExteriorElement: basis set out of range");
    if (!coeff.x_only())
        throw std::invalid_argument("ExteriorElement: coefficients live in R");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(basis, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool operator==(const ExteriorElement& lhs, const ExteriorElement& rhs) {
    if (lhs.is_zero() && rhs.is_zero()) return true;
    return lhs.n_ == rhs.n_ && lhs.degree_ == rhs.degree_ && lhs.terms_ == rhs.terms_;
}

Json ExteriorElement::to_json() const {
    Json out = Json::array();
    for (const auto& [basis, coeff] : terms_)
        out.push_back({{"basis", basis}, {"coeff", poly_to_text(coeff)}});
    return out;
}

StrandElement::StrandElement(int n, int degree, int t_degree)
    : n_(n), degree_(degree), t_degree_(t_degree) {
    if (n < 2 || degree < 0 || degree > n - 1)
        throw std::invalid_argument("StrandElement: degree out of range");
}

void StrandElement::add_term(const IndexSet& basis, const Poly& coeff) {
    validate_index_set(basis);
    if (static_cast<int>(basis.size()) != degree_ || (!basis.empty() && basis.back() > n_ - 1))
        throw std::invalid_argument("StrandElement: basis set out of range");
    if (coeff.is_zero()) return;
    if (!coeff.is_t_homogeneous() || coeff.t_degree() != t_degree_)
        throw std::invalid_argument("StrandElement: coefficient not T-homogeneous of degree " +
                                    std::to_string(t_degree_));
    auto [it, inserted] = terms_.emplace(basis, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

StrandElement& StrandElement::operator+=(const StrandElement& other) {
    if (other.is_zero()) return *this;
    if (n_ != other.n_ || degree_ != other.degree_ || t_degree_ != other.t_degree_)
        throw std::invalid_argument("StrandElement: adding incompatible strands");
    for (const auto& [basis, coeff] : other.terms_) add_term(basis, coeff);
    return *this;
}

StrandElement StrandElement::scaled(const Poly& factor) const {
    if (factor.is_zero()) return StrandElement(n_, degree_, t_degree_);
    if (!factor.is_t_homogeneous())
        throw std::invalid_argument("StrandElement::scaled: factor must be T-homogeneous");
    StrandElement out(n_, degree_, t_degree_ + factor.t_degree());
    for (const auto& [basis, coeff] : terms_) out.add_term(basis, coeff * factor);
    return out;
}

bool operator==(const StrandElement& lhs, const StrandElement& rhs) {
    if (lhs.is_zero() && rhs.is_zero()) return true;
    return lhs.n_ == rhs.n_ && lhs.degree_ == rhs.degree_ &&
           lhs.t_degree_ == rhs.t_degree_ && lhs.terms_ == rhs.terms_;
}

Json StrandElement::to_json() const {
    Json out = Json::array();
    for (const auto& [basis, coeff] : terms_)
        out.push_back({{"basis", basis}, {"coeff", poly_to_text(coeff)}});
    return out;
}

ExteriorElement koszul_diff(int n, int t, const ExteriorElement& v) {
    if (n < 2) throw std::invalid_argument("koszul_diff: require n >= 2");
    if (v.n() != n) throw std::invalid_argument("koszul_diff: element lives over a different n");
    if (v.degree() < 1) throw std::invalid_argument("koszul_diff: degree must be >= 1");
    const Shape shape{n, n - 1};
    std::map<int, Poly> delta_pow;
    for (int a = 1; a <= n; ++a) delta_pow.emplace(a, signed_minor(shape, a).pow(t));
    ExteriorElement out(n, v.degree() - 1);
    for (const auto& [A, coeff] : v.terms()) {
        for (int a : A) {
            const int sign = rho({a}, set_without(A, a));
            Poly c = coeff * delta_pow.at(a);
            out.add_term(set_without(A, a), sign > 0 ? c : -c);
        }
    }
    return out;
}

StrandElement strand_diff(const StrandElement& w) {
    if (w.degree() < 1) throw std::invalid_argument("strand_diff: degree must be >= 1");
    const int n = w.n();
    const Shape shape{n, n - 1};
    std::map<int, Poly> rees_forms;  // F_j = sum_i x(i,j) T_i
    for (int j = 1; j <= n - 1; ++j) {
        Poly f;
        for (int i = 1; i <= n; ++i) f += Poly::x_var(i, j, shape) * Poly::t_var(i, shape);
        rees_forms.emplace(j, std::move(f));
    }
    StrandElement out(n, w.degree() - 1, w.t_degree() + 1);
    for (const auto& [K, coeff] : w.terms()) {
        for (int k : K) {
            const int sign = rho({k}, set_without(K, k));
            Poly c = coeff * rees_forms.at(k);
            out.add_term(set_without(K, k), sign > 0 ? c : -c);
        }
    }
    return out;
}

Poly h_poly(int n, const IndexSet& A, int e) {
    if (n < 2) throw std::invalid_argument("h_poly: require n >= 2");
    if (e < 0) throw std::invalid_argument("h_poly: negative degree");
    validate_index_set(A);
    if (!A.empty() && A.back() > n) throw std::invalid_argument("h_poly: A out of range");
    const Shape shape{n, n - 1};
    std::map<int, std::vector<Poly>> delta_powers;  // a -> [Delta_a^0..Delta_a^e]
    for (int a : A) {
        std::vector<Poly> powers{Poly{Rat(1)}};
        const Poly delta = signed_minor(shape, a);
        for (int k = 1; k <= e; ++k) powers.push_back(powers.back() * delta);
        delta_powers.emplace(a, std::move(powers));
    }
    // compositions beta of e supported on A
    PolyBuilder acc(shape);
    std::vector<int> beta(A.size(), 0);
    auto recurse = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == A.size() || A.empty()) {
            if (!A.empty()) beta[idx] = remaining;
            Poly term{Rat(1)};
            for (std::size_t k = 0; k < A.size(); ++k) {
                term = term * delta_powers.at(A[k])[static_cast<std::size_t>(e - beta[k])];
                if (beta[k] > 0)
                    term = term * Poly::t_var(A[k], shape).pow(beta[k]);
            }
            acc.add(term);
            return;
        }
        for (int b = 0; b <= remaining; ++b) {
            beta[idx] = b;
            self(self, idx + 1, remaining - b);
        }
    };
    if (A.empty()) {
        // s_e of the empty alphabet: 1 for e = 0, else 0
        return e == 0 ? Poly{Rat(1)} : Poly{};
    }
    recurse(recurse, 0, e);
    return acc.take();
}

namespace {

// Memo for repeated basis evaluations; one instance per top-level call, so
// concurrent callers never share state.
using PhiCache = std::map<std::tuple<int, int, int, IndexSet>, StrandElement>;

StrandElement phi_on_basis(int n, int t, int r, const IndexSet& A) {
    const Shape shape{n, n - 1};
    StrandElement out(n, r - 1, t - r + 1);
    if (t < r - 1) return out;

    if (r == 1) {
        // phi_t^0(e_a) = T_a^t, realized as Delta_a^t h_t({a})
        out.add_term({}, h_poly(n, A, t));
        return out;
    }

    Poly delta_A{Rat(1)};
    for (int a : A) delta_A = delta_A * signed_minor(shape, a);
    Poly prefactor = delta_A.pow(r - 2);
    if ((r - 1) % 2 != 0) prefactor = -prefactor;

    StrandElement base(n, r - 1, 0);
    const IndexSet a_comp = complement(A, n);
    for (const IndexSet& K : subsets_of_size(n - 1, r - 1)) {
        Poly coeff = prefactor * minor(shape, a_comp, complement(K, n - 1));
        if ((index_sum(A) + index_sum(K)) % 2 != 0) coeff = -coeff;
        base.add_term(K, coeff);
    }
    if (t == r - 1) return base;
    return base.scaled(h_poly(n, A, t - r + 1));
}

const StrandElement& phi_cached(int n, int t, int r, const IndexSet& A, PhiCache& cache) {
    auto key = std::make_tuple(n, t, r, A);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(std::move(key), phi_on_basis(n, t, r, A)).first;
    return it->second;
}

}  // namespace

StrandElement phi(int n, int t, int r, const IndexSet& A) {
    validate_index_set(A);
    if (r < 1 || r > n) throw std::invalid_argument("phi: require 1 <= r <= n");
    if (static_cast<int>(A.size()) != r || (!A.empty() && A.back() > n))
        throw std::invalid_argument("phi: #A must equal r within {1..n}");
    return phi_on_basis(n, t, r, A);
}

StrandElement phi(int n, int t, const ExteriorElement& v) {
    if (v.n() != n) throw std::invalid_argument("phi: element lives over a different n");
    const int r = v.degree();
    StrandElement out(n, r - 1, t - r + 1);
    for (const auto& [A, coeff] : v.terms()) out += phi(n, t, r, A).scaled(coeff);
    return out;
}

namespace {

VerificationReport check_square_impl(int n, int t, int r, PhiCache& cache) {
    VerificationReport report;
    report.check = "lift.square";
    report.params = {{"n", n}, {"t", t}, {"r", r}};
    const Shape shape{n, n - 1};

    const auto sets = subsets_of_size(n, r);
    if (sets.empty()) {
        report.add_pass("vacuous", {{"reason", "exterior power vanishes"}});
        return report;
    }
    std::map<int, Poly> delta_pow;
    for (int a = 1; a <= n; ++a) delta_pow.emplace(a, signed_minor(shape, a).pow(t));
    for (const IndexSet& A : sets) {
        // delta(phi(e_A))
        StrandElement lhs(n, r - 2, t - r + 2);
        {
            const StrandElement& up = phi_cached(n, t, r, A, cache);
            if (!up.is_zero()) lhs = strand_diff(up);
        }
        // phi(d(e_A))
        StrandElement rhs(n, r - 2, t - r + 2);
        for (int a : A) {
            const int sign = rho({a}, set_without(A, a));
            Poly c = delta_pow.at(a);
            if (sign < 0) c = -c;
            rhs += phi_cached(n, t, r - 1, set_without(A, a), cache).scaled(c);
        }
        const bool ok = (lhs == rhs);
        Json payload = {{"A", A}};
        if (!ok) {
            payload["delta_phi"] = lhs.to_json();
            payload["phi_d"] = rhs.to_json();
        }
        report.add("square", ok, std::move(payload));
    }
    return report;
}

}  // namespace

VerificationReport check_square(int n, int t, int r) {
    if (r < 2 || r > n + 1)
        throw std::invalid_argument("check_square: require 2 <= r <= n+1");
    PhiCache cache;
    return check_square_impl(n, t, r, cache);
}

VerificationReport key_identity_check(int n, int r) {
    if (r < 2 || r > n) throw std::invalid_argument("key_identity_check: require 2 <= r <= n");
    VerificationReport report;
    report.check = "lift.key_identity";
    report.params = {{"n", n}, {"r", r}};
    const Shape shape{n, n - 1};
    for (const IndexSet& A : subsets_of_size(n, r)) {
        StrandElement sum(n, r - 2, 0);
        for (int a : A) {
            const int sign = rho({a}, set_without(A, a));
            Poly c = signed_minor(shape, a).pow(r - 2);
            if (sign < 0) c = -c;
            sum += phi(n, r - 2, r - 1, set_without(A, a)).scaled(c);
        }
        Json payload = {{"A", A}};
        if (!sum.is_zero()) payload["sum"] = sum.to_json();
        report.add("vanishes", sum.is_zero(), std::move(payload));
    }
    return report;
}

VerificationReport check_full_lift(int n, int t) {
    if (n < 2 || t < 1)
        throw std::invalid_argument("check_full_lift: require n >= 2 and t >= 1");
    VerificationReport report;
    report.check = "lift.full";
    report.params = {{"n", n}, {"t", t}};
    const Shape shape{n, n - 1};

    // d o d = 0
    for (int r = 2; r <= n; ++r)
        for (const IndexSet& A : subsets_of_size(n, r)) {
            ExteriorElement e(n, r);
            e.add_term(A, Poly{Rat(1)});
            const bool ok = koszul_diff(n, t, koszul_diff(n, t, e)).is_zero();
            report.add("d2_zero", ok, {{"r", r}, {"A", A}});
        }
    // delta o delta = 0
    for (int k = 2; k <= n - 1; ++k)
        for (const IndexSet& K : subsets_of_size(n - 1, k)) {
            StrandElement w(n, k, 0);
            w.add_term(K, Poly{Rat(1)});
            const bool ok = strand_diff(strand_diff(w)).is_zero();
            report.add("delta2_zero", ok, {{"k", k}, {"K", K}});
        }
    // commuting squares, including the square against the zero module; one
    // shared memo spans all levels
    PhiCache cache;
    for (int r = 2; r <= n + 1; ++r)
        report.merge(check_square_impl(n, t, r, cache), "r" + std::to_string(r));
    // evaluation square: T_i -> Delta_i on phi_t^0 recovers Delta_a^t
    std::vector<Poly> deltas;
    for (int a = 1; a <= n; ++a) deltas.push_back(signed_minor(shape, a));
    for (int a = 1; a <= n; ++a) {
        const StrandElement bottom = phi(n, t, 1, {a});
        const Poly value = substitute_t(bottom.terms().begin()->second, deltas);
        const bool ok = (value == deltas[static_cast<std::size_t>(a - 1)].pow(t));
        report.add("evaluation", ok, {{"a", a}});
    }
    return report;
}

}  // namespace reeslift
