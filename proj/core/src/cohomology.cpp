#include "reeslift/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "reeslift/complexes.hpp"
#include "reeslift/determinantal.hpp"
#include "reeslift/graded.hpp"
#include "reeslift/poly_text.hpp"
#include "reeslift/rational_matrix.hpp"
#include "reeslift/schur.hpp"

namespace reeslift {

namespace {

Poly d_power(const Shape& shape, const std::vector<int>& alpha) {
    Poly out{Rat(1)};
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > 0)
            out = out * maximal_minor(shape, static_cast<int>(i) + 1).pow(alpha[i]);
    return out;
}

}  // namespace

ExtGeneratorSet ext_generators(int n, int t) {
    if (n < 2 || t < 1) throw std::invalid_argument("ext_generators: require n >= 2, t >= 1");
    ExtGeneratorSet out;
    out.n = n;
    out.t = t;
    if (t < n - 1) return out;  // projdim < n, the Ext module vanishes
    const Shape shape{n, n - 1};
    const LaurentClass socle = LaurentClass::socle(shape);
    for (const auto& alpha : compositions(t - n + 1, n)) {
        LaurentClass g = apply_to_laurent(StarOperator(d_power(shape, alpha)), socle);
        if (g.is_zero()) throw std::logic_error("ext_generators: vanishing generator");
        out.generators.emplace(alpha, std::move(g));
    }
    return out;
}

bool ext_generators_independent(const ExtGeneratorSet& set) {
    std::map<std::vector<int>, int> column;
    for (const auto& [alpha, cls] : set.generators)
        for (const auto& [expv, c] : cls.terms())
            column.emplace(expv, static_cast<int>(column.size()));
    std::vector<SparseRow> rows;
    for (const auto& [alpha, cls] : set.generators) {
        SparseRow row;
        for (const auto& [expv, c] : cls.terms()) row.emplace_back(column.at(expv), c);
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
    }
    return sparse_rank(std::move(rows)) == static_cast<int>(set.generators.size());
}

VerificationReport annihilator_containment(int n, int t) {
    if (t < n - 1)
        throw std::invalid_argument("annihilator_containment: require t >= n - 1");
    VerificationReport report;
    report.check = "annihilator.containment";
    report.params = {{"n", n}, {"t", t}};
    const Shape shape{n, n - 1};
    const auto perms = generalized_permanents(shape, t - n + 2);
    const auto alphas = compositions(t - n + 1, n);
    std::vector<Poly> d_alphas;
    d_alphas.reserve(alphas.size());
    for (const auto& alpha : alphas) d_alphas.push_back(d_power(shape, alpha));
    for (std::size_t pi = 0; pi < perms.size(); ++pi) {
        const StarOperator op(perms[pi]);
        bool all_zero = true;
        Json witness;
        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
            const Poly image = apply(op, d_alphas[ai]);
            if (!image.is_zero()) {
                all_zero = false;
                witness = {{"alpha", alphas[ai]}, {"image", poly_to_text(image)}};
                break;
            }
        }
        Json payload = {{"permanent", poly_to_text(perms[pi])}};
        if (!all_zero) payload["witness"] = witness;
        report.add("kills_all_alpha", all_zero, std::move(payload));
    }
    return report;
}

VerificationReport annihilator_tightness(int n, int t) {
    if (t < n - 1)
        throw std::invalid_argument("annihilator_tightness: require t >= n - 1");
    VerificationReport report;
    report.check = "annihilator.tightness";
    report.params = {{"n", n}, {"t", t}};
    const Shape shape{n, n - 1};
    const int k = t - n + 1;
    const Poly witness = maximal_minor(shape, n).pow(k);  // d_n^{t-n+1} = det_((t-n+1)^(n-1))
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    alpha.back() = k;
    const LaurentClass gen =
        apply_to_laurent(StarOperator(d_power(shape, alpha)), LaurentClass::socle(shape));
    report.add("generator_nonzero", !gen.is_zero(), {{"alpha", alpha}});
    const LaurentClass moved = r_action(witness, gen);
    report.add("witness_survives", !moved.is_zero(),
               {{"alpha", alpha}, {"class", moved.to_text()}});
    return report;
}

Json AnnihilatorReport::to_json() const {
    Json out;
    out["n"] = n;
    out["t"] = t;
    out["containment_passed"] = containment_passed;
    out["tightness_passed"] = tightness_passed;
    out["fourier_agreed"] = fourier_agreed;
    out["detail"] = detail.to_json();
    return out;
}

AnnihilatorReport annihilator_check(int n, int t) {
    AnnihilatorReport out;
    out.n = n;
    out.t = t;
    out.detail.check = "annihilator";
    out.detail.params = {{"n", n}, {"t", t}};

    const VerificationReport containment = annihilator_containment(n, t);
    out.containment_passed = containment.passed();
    out.detail.merge(containment, "containment");

    const VerificationReport tightness = annihilator_tightness(n, t);
    out.tightness_passed = tightness.passed();
    out.detail.merge(tightness, "tightness");

    const Shape shape{n, n - 1};
    const auto perms = generalized_permanents(shape, t - n + 2);
    const auto alphas = compositions(t - n + 1, n);
    bool agreed = true;
    for (std::size_t pi = 0; pi < perms.size() && agreed; ++pi)
        for (const auto& alpha : alphas) {
            const FourierCheck check = fourier_equivalence_check(perms[pi], alpha, n, t);
            if (!check.agree()) {
                agreed = false;
                out.detail.add_fail("fourier.agree",
                                    {{"permanent", poly_to_text(perms[pi])},
                                     {"alpha", alpha},
                                     {"operator_side", check.operator_side},
                                     {"laurent_side", check.laurent_side}});
                break;
            }
        }
    if (agreed)
        out.detail.add_pass("fourier.agree", {{"pairs", perms.size() * alphas.size()}});
    out.fourier_agreed = agreed;
    return out;
}

Json HilbertReport::to_json() const {
    Json out;
    out["m"] = m;
    out["n"] = n;
    out["t"] = t;
    out["r_max"] = r_max;
    out["equal"] = equal;
    Json table = Json::array();
    for (const auto& row : rows)
        table.push_back({{"r", row.r}, {"lhs", row.lhs.get_str()}, {"rhs", row.rhs.get_str()}});
    out["table"] = table;
    return out;
}

HilbertReport hilbert_compare(int m, int n, int t, int r_max) {
    if (m <= n) throw std::invalid_argument("hilbert_compare: require m > n");
    if (t < n) throw std::invalid_argument("hilbert_compare: require t >= n");
    if (r_max < 0) throw std::invalid_argument("hilbert_compare: negative r_max");
    const Shape shape{m, n};
    HilbertReport report;
    report.m = m;
    report.n = n;
    report.t = t;
    report.r_max = r_max;
    report.equal = true;
    const auto gens = generalized_permanents(shape, t - n + 1);
    for (int r = 0; r <= r_max; ++r) {
        HilbertRow row;
        row.r = r;
        row.lhs = binomial(static_cast<long>(m) * n + r - 1, r) -
                  graded_component_dim(shape, gens, r);
        row.rhs = schur_sum_dim(m, n, t, r);
        if (row.lhs != row.rhs) report.equal = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::map<std::vector<int>, ExtFraction> ext_via_lift(int n, int t) {
    if (t < n - 1) throw std::invalid_argument("ext_via_lift: require t >= n - 1");
    const Shape shape{n, n - 1};
    IndexSet full;
    for (int a = 1; a <= n; ++a) full.push_back(a);
    const StrandElement top = phi(n, t, n, full);
    if (top.terms().size() != 1)
        throw std::logic_error("ext_via_lift: expected a single exterior basis element");
    const Poly& coeff = top.terms().begin()->second;

    // split the single coefficient by T-monomial
    std::map<std::vector<int>, Poly> by_t;
    for (const auto& [mono, c] : coeff.terms()) {
        std::vector<int> alpha(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<VarId, int>> x_part;
        for (const auto& [v, e] : mono.factors()) {
            if (v.is_t())
                alpha[static_cast<std::size_t>(v.a - 1)] = e;
            else
                x_part.emplace_back(v, e);
        }
        by_t[alpha] += Poly::monomial(Monomial::from_factors(std::move(x_part)), c, shape);
    }

    std::vector<Poly> deltas;
    for (int a = 1; a <= n; ++a) deltas.push_back(signed_minor(shape, a));

    std::map<std::vector<int>, ExtFraction> out;
    for (auto& [alpha, numerator] : by_t) {
        ExtFraction frac;
        frac.numerator = std::move(numerator);
        frac.delta_exponents.assign(static_cast<std::size_t>(n), t);
        for (int a = 0; a < n; ++a) {
            while (frac.delta_exponents[static_cast<std::size_t>(a)] > 0) {
                auto q = try_divide_exact(frac.numerator, deltas[static_cast<std::size_t>(a)]);
                if (!q) break;
                frac.numerator = std::move(*q);
                frac.delta_exponents[static_cast<std::size_t>(a)] -= 1;
            }
        }
        out.emplace(alpha, std::move(frac));
    }
    return out;
}

}  // namespace reeslift
