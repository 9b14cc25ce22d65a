#include "reeslift/runner.hpp"

#include <chrono>
#include <sstream>

#include "reeslift/cohomology.hpp"
#include "reeslift/complexes.hpp"
#include "reeslift/determinantal.hpp"
#include "reeslift/gl_action.hpp"
#include "reeslift/graded.hpp"
#include "reeslift/poly_text.hpp"
#include "reeslift/schur.hpp"
#include "reeslift/weyl.hpp"

namespace reeslift {

namespace {

Json params_json(const CheckRequest& r, int resolved_m) {
    return Json{{"m", resolved_m}, {"n", r.n},       {"t", r.t},
                {"r_max", r.r_max}, {"seed", r.seed}, {"trials", r.trials}};
}

// ---- lift ------------------------------------------------------------

void worked_example_details(VerificationReport& report) {
    // n = 3, t = 2: the three layers of the lift, expanded.
    const int n = 3;
    const Shape shape{3, 2};
    auto delta = [&](int i) { return signed_minor(shape, i); };

    {
        StrandElement expected(n, 2, 0);
        expected.add_term({1, 2}, -(delta(1) * delta(2) * delta(3)));
        const bool ok = (phi(n, 2, 3, {1, 2, 3}) == expected);
        report.add("example.phi2_top", ok, {{"expected", expected.to_json()}});
    }
    for (int a = 1; a <= 3; ++a) {
        StrandElement expected(n, 0, 2);
        expected.add_term({}, Poly::t_var(a, shape).pow(2));
        const bool ok = (phi(n, 2, 1, {a}) == expected);
        report.add("example.phi2_bottom", ok, {{"a", a}});
    }
    struct Case {
        int a, b, c;
        int sign_f1;  // sign on x(c,2) f_1; f_2 carries the opposite sign on x(c,1)
    };
    // -(Delta_b T_a + Delta_a T_b)((-1)^{a+b+1} x(c,2) f_1 + (-1)^{a+b+2} x(c,1) f_2)
    const Case cases[] = {{1, 2, 3, +1}, {1, 3, 2, -1}, {2, 3, 1, +1}};
    for (const Case& cs : cases) {
        Poly h = delta(cs.b) * Poly::t_var(cs.a, shape) + delta(cs.a) * Poly::t_var(cs.b, shape);
        Poly c1 = h * Poly::x_var(cs.c, 2, shape) * Rat(-cs.sign_f1);
        Poly c2 = h * Poly::x_var(cs.c, 1, shape) * Rat(cs.sign_f1);
        StrandElement expected(n, 1, 1);
        expected.add_term({1}, c1);
        expected.add_term({2}, c2);
        const bool ok = (phi(n, 2, 2, {cs.a, cs.b}) == expected);
        report.add("example.phi2_middle", ok,
                   {{"pair", Json::array({cs.a, cs.b})}, {"expected", expected.to_json()}});
    }
}

VerificationReport run_lift(const CheckRequest& req) {
    if (req.n < 2 || req.t < 1) throw UsageError("lift: require n >= 2 and t >= 1");
    VerificationReport report;
    report.check = "lift";
    report.params = {{"n", req.n}, {"t", req.t}};
    if (req.n > 4 || req.t > 5) {
        report.add_skip("lift", {{"reason", "desk-scale bound is n <= 4, t <= 5"}});
        return report;
    }
    const VerificationReport full = check_full_lift(req.n, req.t);
    report.merge(full, "full");
    if (req.n == 3 && req.t == 2) worked_example_details(report);
    // surface one strand element through the JSON interface
    IndexSet top;
    for (int a = 1; a <= req.n; ++a) top.push_back(a);
    report.add_pass("phi_top_serialized",
                    {{"element", phi(req.n, req.t, req.n, top).to_json()}});
    return report;
}

// ---- cayley ----------------------------------------------------------

VerificationReport run_cayley(const CheckRequest& req) {
    if (req.n < 2) throw UsageError("cayley: require n >= 2");
    VerificationReport report;
    report.check = "cayley";
    report.params = {{"n", req.n}, {"s_bound", req.t}};
    if (req.n > 4 || req.t > 4) {
        report.add_skip("cayley", {{"reason", "desk-scale bound is n <= 4, |s| <= 4"}});
        return report;
    }
    Json table = Json::array();
    bool all_proportional = true;
    for (int w = 0; w <= req.t; ++w) {
        for (const auto& s : compositions(w, req.n)) {
            for (int i = 1; i <= req.n; ++i) {
                const CayleyScalar observed = cayley_scalar(req.n, s, i);
                // candidate scalars: the printed product (s_i+1)(s+2)...(s+n)
                // and the truncated reading ending at (s+n-1)
                Rat printed(s[static_cast<std::size_t>(i - 1)] + 1);
                for (int j = 2; j <= req.n; ++j) printed *= w + j;
                Rat truncated(s[static_cast<std::size_t>(i - 1)] + 1);
                for (int j = 2; j <= req.n - 1; ++j) truncated *= w + j;
                if (!observed.proportional) all_proportional = false;
                table.push_back({{"s", s},
                                 {"i", i},
                                 {"proportional", observed.proportional},
                                 {"observed", rat_to_string(observed.scalar)},
                                 {"product_to_n", rat_to_string(printed)},
                                 {"product_to_n_minus_1", rat_to_string(truncated)},
                                 {"matches_product_to_n", observed.scalar == printed},
                                 {"matches_product_to_n_minus_1",
                                  observed.scalar == truncated}});
            }
        }
    }
    report.add("proportionality", all_proportional, {{"scalars", table}});
    return report;
}

// ---- annihilator -----------------------------------------------------

VerificationReport run_annihilator(const CheckRequest& req) {
    if (req.n < 2) throw UsageError("annihilator: require n >= 2");
    VerificationReport report;
    report.check = "annihilator";
    report.params = {{"n", req.n}, {"t", req.t}};
    if (req.t < req.n - 1) {
        report.add_skip("annihilator",
                        {{"reason", "Ext module vanishes for t < n - 1; nothing to check"}});
        return report;
    }
    if (req.n > 4 || req.t - req.n + 2 > 4) {
        report.add_skip("annihilator",
                        {{"reason", "desk-scale bound is n <= 4, permanent size <= 4"}});
        return report;
    }
    const AnnihilatorReport ann = annihilator_check(req.n, req.t);
    report.merge(ann.detail, "ann");
    report.add("containment", ann.containment_passed);
    report.add("tightness", ann.tightness_passed);
    report.add("fourier_agreement", ann.fourier_agreed);
    return report;
}

// ---- hilbert ----------------------------------------------------------

VerificationReport run_hilbert(const CheckRequest& req, int m) {
    VerificationReport report;
    report.check = "hilbert";
    report.params = {{"m", m}, {"n", req.n}, {"t", req.t}, {"r_max", req.r_max}};
    if (m <= req.n || req.n < 1) {
        report.add_skip("hilbert", {{"reason", "requires m > n >= 1"}});
        return report;
    }
    if (req.t < req.n) {
        report.add_skip("hilbert", {{"reason", "module vanishes for t < n (J_t = R)"}});
        return report;
    }
    if (m * req.n > 12 || req.r_max > 8 || req.t - req.n + 1 > 4) {
        report.add_skip("hilbert",
                        {{"reason",
                          "graded enumeration bounded to mn <= 12, r_max <= 8, t-n+1 <= 4"}});
        return report;
    }
    // the coefficient matrix has one row per (generator, multiplier) pair
    const int d = req.t - req.n + 1;
    const Int gen_count = binomial(m + d - 1, d) * binomial(req.n + d - 1, d);
    const Int row_estimate =
        gen_count * binomial(static_cast<long>(m) * req.n + req.r_max - d - 1,
                             req.r_max - d);
    if (row_estimate > 300000) {
        report.add_skip("hilbert", {{"reason", "coefficient matrix exceeds the desk-scale "
                                               "row budget"},
                                    {"estimated_rows", row_estimate.get_str()}});
        return report;
    }
    const HilbertReport table = hilbert_compare(m, req.n, req.t, req.r_max);
    for (const auto& row : table.rows)
        report.add("degree_" + std::to_string(row.r), row.lhs == row.rhs,
                   {{"lhs", row.lhs.get_str()}, {"rhs", row.rhs.get_str()}});
    report.add("table_equal", table.equal, {{"report", table.to_json()}});
    return report;
}

// ---- pairing ----------------------------------------------------------

VerificationReport run_pairing(const CheckRequest& req) {
    if (req.trials < 1) throw UsageError("pairing: require trials >= 1");
    VerificationReport report;
    report.check = "pairing";
    report.params = {{"seed", req.seed}, {"trials", req.trials}};
    if (req.trials > 2000) {
        report.add_skip("pairing", {{"reason", "trials capped at 2000"}});
        return report;
    }
    const Shape shapes[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
    int failures = 0;
    Json counterexample;
    for (int k = 0; k < req.trials; ++k) {
        const Shape shape = shapes[static_cast<std::size_t>(k % 5)];
        const int degree = (k % 3) + 1;
        const std::uint64_t s = req.seed + static_cast<std::uint64_t>(k);
        const GlPair g = gl_random_element(shape, s);
        const Poly f = random_homogeneous_poly(shape, degree, 3, s ^ 0x9e3779b97f4a7c15ULL);
        const Poly h = random_homogeneous_poly(shape, degree, 3, s ^ 0xc2b2ae3d27d4eb4fULL);
        const Rat lhs = pairing(gl_act_dual(shape, g, f), gl_act(shape, g, h));
        const Rat rhs = pairing(f, h);
        if (lhs != rhs && failures++ == 0)
            counterexample = {{"trial", k},
                              {"shape", shape.to_string()},
                              {"f", poly_to_text(f)},
                              {"g", poly_to_text(h)},
                              {"lhs", rat_to_string(lhs)},
                              {"rhs", rat_to_string(rhs)}};
    }
    Json payload = {{"cases", req.trials}};
    if (failures) payload["counterexample"] = counterexample;
    report.add("equivariance", failures == 0, std::move(payload));

    // the whole GL-orbit of det_(k+1) = x(1,1)^(k+1) annihilates the span
    // of the d^alpha with |alpha| = k
    const int n = 3;
    const Shape shape{n, n - 1};
    int orbit_failures = 0;
    for (int k = 1; k <= 2; ++k) {
        const Poly det_pow = Poly::x_var(1, 1, shape).pow(k + 1);
        const auto alphas = compositions(k, n);
        for (int trial = 0; trial < 5; ++trial) {
            const GlPair g =
                gl_random_element(shape, req.seed + 1000 + static_cast<std::uint64_t>(trial));
            const Poly moved = gl_act(shape, g, det_pow);
            const StarOperator op(moved);
            for (const auto& alpha : alphas) {
                Poly d_alpha{Rat(1)};
                for (int i = 0; i < n; ++i)
                    if (alpha[static_cast<std::size_t>(i)] > 0)
                        d_alpha = d_alpha * maximal_minor(shape, i + 1)
                                                .pow(alpha[static_cast<std::size_t>(i)]);
                if (!apply(op, d_alpha).is_zero()) ++orbit_failures;
            }
        }
    }
    report.add("orbit_annihilation", orbit_failures == 0,
               {{"n", n}, {"k_max", 2}, {"orbit_samples", 5}});
    return report;
}

// ---- schur ------------------------------------------------------------

VerificationReport run_schur(const CheckRequest&) {
    VerificationReport report;
    report.check = "schur";
    report.params = Json::object();

    int cases = 0, failures = 0;
    Json counterexample;
    for (int n = 1; n <= 4; ++n)
        for (int size = 0; size <= 6; ++size)
            for (const Partition& lam : partitions_of(size, n, size)) {
                ++cases;
                if (schur_dim(lam, n) != ssyt_count(lam, n) && failures++ == 0)
                    counterexample = {{"lambda", lam.parts()}, {"n", n}};
            }
    Json payload = {{"cases", cases}};
    if (failures) payload["counterexample"] = counterexample;
    report.add("schur_dim_vs_ssyt", failures == 0, std::move(payload));

    cases = failures = 0;
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= m && m * n <= 12; ++n)
            for (int r = 0; r <= 6; ++r) {
                ++cases;
                if (cauchy_dim(m, n, r) != binomial(static_cast<long>(m) * n + r - 1, r) &&
                    failures++ == 0)
                    counterexample = {{"m", m}, {"n", n}, {"r", r}};
            }
    payload = {{"cases", cases}};
    if (failures) payload["counterexample"] = counterexample;
    report.add("cauchy_vs_binomial", failures == 0, std::move(payload));
    return report;
}

// ---- identities --------------------------------------------------------

VerificationReport run_identities(const CheckRequest&) {
    VerificationReport report;
    report.check = "identities";
    report.params = Json::object();

    // Hilbert-Burch syzygy sum_i Delta_i x(i,a) = 0, exhaustively for n <= 5
    for (int n = 2; n <= 5; ++n) {
        const Shape shape{n, n - 1};
        bool ok = true;
        for (int col = 1; col <= n - 1 && ok; ++col) {
            Poly sum;
            for (int i = 1; i <= n; ++i)
                sum += signed_minor(shape, i) * Poly::x_var(i, col, shape);
            ok = sum.is_zero();
        }
        report.add("syzygy.n" + std::to_string(n), ok, {{"columns", n - 1}});
    }

    // first-row expansion of Y_{A,H,i}
    for (int n = 2; n <= 4; ++n) {
        const Shape shape{n, n - 1};
        int cases = 0, failures = 0;
        Json counterexample;
        for (int r = 2; r <= n; ++r)
            for (const IndexSet& A : subsets_of_size(n, r))
                for (const IndexSet& H : subsets_of_size(n - 1, r - 2))
                    for (int i = 1; i <= n; ++i) {
                        ++cases;
                        Poly expansion;
                        const IndexSet h_comp = complement(H, n - 1);
                        for (int alpha : h_comp) {
                            const int sign = rho({alpha}, set_without(h_comp, alpha));
                            Poly term = Poly::x_var(i, alpha, shape) *
                                        minor(shape, complement(A, n),
                                              complement(set_with(H, alpha), n - 1));
                            expansion += (sign > 0) ? term : -term;
                        }
                        if (y_polynomial(shape, A, H, i) != expansion && failures++ == 0)
                            counterexample = {{"A", A}, {"H", H}, {"i", i}};
                    }
        Json payload = {{"cases", cases}};
        if (failures) payload["counterexample"] = counterexample;
        report.add("row_expansion.n" + std::to_string(n), failures == 0, std::move(payload));
    }

    // rho({a},A\a) rho({a},A^c) = (-1)^(a-1) over universes up to 6
    {
        int cases = 0, failures = 0;
        Json counterexample;
        for (int universe = 1; universe <= 6; ++universe)
            for (int r = 1; r <= universe; ++r)
                for (const IndexSet& A : subsets_of_size(universe, r))
                    for (int alpha : A) {
                        ++cases;
                        if (!sign_identity_holds(alpha, A, universe) && failures++ == 0)
                            counterexample = {{"alpha", alpha}, {"A", A}, {"universe", universe}};
                    }
        Json payload = {{"cases", cases}};
        if (failures) payload["counterexample"] = counterexample;
        report.add("sign_identity", failures == 0, std::move(payload));
    }

    // key vanishing identity behind the full lift
    for (int n = 2; n <= 4; ++n)
        for (int r = 2; r <= n; ++r) {
            const VerificationReport sub = key_identity_check(n, r);
            report.add("key_identity.n" + std::to_string(n) + ".r" + std::to_string(r),
                       sub.passed(), {{"cases", sub.details.size()}});
        }

    // d o d = 0 and delta o delta = 0
    for (int n = 2; n <= 4; ++n) {
        bool d2 = true;
        for (int t = 1; t <= 4 && d2; ++t)
            for (int r = 2; r <= n && d2; ++r)
                for (const IndexSet& A : subsets_of_size(n, r)) {
                    ExteriorElement e(n, r);
                    e.add_term(A, Poly{Rat(1)});
                    if (!koszul_diff(n, t, koszul_diff(n, t, e)).is_zero()) {
                        d2 = false;
                        break;
                    }
                }
        report.add("koszul_d2.n" + std::to_string(n), d2, {{"t_max", 4}});
        bool delta2 = true;
        for (int k = 2; k <= n - 1 && delta2; ++k)
            for (const IndexSet& K : subsets_of_size(n - 1, k)) {
                StrandElement w(n, k, 0);
                w.add_term(K, Poly{Rat(1)});
                if (!strand_diff(strand_diff(w)).is_zero()) {
                    delta2 = false;
                    break;
                }
            }
        report.add("strand_delta2.n" + std::to_string(n), delta2, Json::object());
    }

    // h_poly recurrence, cleared of denominators:
    // H_{e+1}(A) = T_b Delta_{A\b} H_e(A) + Delta_b^{e+1} H_{e+1}(A\b);
    // the n = 4 cases cap the Delta-factor count (e+1)(#A-1) at 6 to keep
    // the expansions at desk scale
    for (int n = 2; n <= 4; ++n) {
        const Shape shape{n, n - 1};
        int cases = 0, failures = 0;
        for (int r = 1; r <= n; ++r)
            for (const IndexSet& A : subsets_of_size(n, r))
                for (int e = 0; e <= 3; ++e)
                    for (int b : A) {
                        if (n == 4 && (e + 1) * (r - 1) > 6) continue;
                        ++cases;
                        Poly delta_rest{Rat(1)};
                        for (int a : A)
                            if (a != b) delta_rest = delta_rest * signed_minor(shape, a);
                        const Poly lhs = h_poly(n, A, e + 1);
                        const Poly rhs =
                            Poly::t_var(b, shape) * delta_rest * h_poly(n, A, e) +
                            signed_minor(shape, b).pow(e + 1) *
                                h_poly(n, set_without(A, b), e + 1);
                        if (lhs != rhs) ++failures;
                    }
        report.add("h_recurrence.n" + std::to_string(n), failures == 0, {{"cases", cases}});
    }
    return report;
}

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "lift", "cayley", "annihilator", "hilbert", "pairing", "schur", "identities", "all"};
    return names;
}

Json ReportEnvelope::to_json() const {
    Json out;
    out["tool"] = tool;
    out["version"] = version;
    out["check"] = check;
    out["params"] = params;
    out["status"] = status;
    Json list = Json::array();
    for (const auto& d : details)
        list.push_back({{"name", d.name}, {"status", d.status}, {"payload", d.payload}});
    out["details"] = list;
    out["elapsed_ms"] = elapsed_ms;
    return out;
}

std::string ReportEnvelope::to_text() const {
    std::ostringstream os;
    os << tool << " " << version << " check=" << check << " params=" << params.dump()
       << "\n";
    for (const auto& d : details) {
        const char* tag = d.status == "pass" ? "[PASS]" : (d.status == "fail" ? "[FAIL]" : "[SKIP]");
        os << "  " << tag << " " << d.name;
        if (d.status != "pass" && !d.payload.empty()) os << " " << d.payload.dump();
        os << "\n";
    }
    os << "status: " << status << " (" << details.size() << " checks, " << elapsed_ms
       << " ms)\n";
    return os.str();
}

int ReportEnvelope::exit_code() const {
    if (status == "pass") return 0;
    if (status == "skipped") return 3;
    return 1;
}

ReportEnvelope run(const CheckRequest& request) {
    bool known = false;
    for (const auto& name : known_checks()) known = known || name == request.check;
    if (!known) throw UsageError("unknown check '" + request.check + "'");
    if (request.n < 1 || request.t < 0 || request.r_max < 0 || request.trials < 0 ||
        request.m < 0)
        throw UsageError("parameters out of range");

    const int m = request.m == 0 ? request.n + 1 : request.m;
    const auto start = std::chrono::steady_clock::now();

    ReportEnvelope env;
    env.check = request.check;
    env.params = params_json(request, m);

    std::vector<VerificationReport> sections;
    if (request.check == "lift") sections.push_back(run_lift(request));
    else if (request.check == "cayley") sections.push_back(run_cayley(request));
    else if (request.check == "annihilator") sections.push_back(run_annihilator(request));
    else if (request.check == "hilbert") sections.push_back(run_hilbert(request, m));
    else if (request.check == "pairing") sections.push_back(run_pairing(request));
    else if (request.check == "schur") sections.push_back(run_schur(request));
    else if (request.check == "identities") sections.push_back(run_identities(request));
    else {  // all
        sections.push_back(run_lift(request));
        sections.push_back(run_cayley(request));
        sections.push_back(run_annihilator(request));
        sections.push_back(run_hilbert(request, m));
        sections.push_back(run_pairing(request));
        sections.push_back(run_schur(request));
        sections.push_back(run_identities(request));
    }

    bool any_fail = false, any_pass = false;
    for (const auto& section : sections) {
        const bool single = sections.size() == 1;
        for (const auto& d : section.details) {
            env.details.push_back({single ? d.name : section.check + "." + d.name, d.status,
                                   d.payload});
            if (d.status == "fail") any_fail = true;
            if (d.status == "pass") any_pass = true;
        }
    }
    env.status = any_fail ? "fail" : (any_pass ? "pass" : "skipped");
    env.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return env;
}

}  // namespace reeslift
