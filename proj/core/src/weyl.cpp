#include "reeslift/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "reeslift/determinantal.hpp"

namespace reeslift {

StarOperator::StarOperator(Poly body) : body_(std::move(body)) {
    if (!body_.x_only())
        throw std::invalid_argument("StarOperator: body must involve x-variables only");
}

namespace {

// d^a . x^b termwise; zero when some exponent of a exceeds b.
bool differentiate_monomial(const Monomial& a, const Monomial& b, Monomial& out, Rat& scale) {
    Monomial quotient;
    if (!a.divides_into(b, quotient)) return false;
    scale = 1;
    auto bi = b.packed().begin();
    for (const auto& f : a.packed()) {
        while (bi->var != f.var) ++bi;  // divisibility guarantees f.var occurs in b
        for (int k = 0; k < f.exp; ++k) scale *= bi->exp - k;
    }
    out = std::move(quotient);
    return true;
}

}  // namespace

Poly apply(const StarOperator& op, const Poly& g) {
    if (!g.x_only())
        throw std::invalid_argument("apply: operators act on x-polynomials only");
    PolyBuilder acc(g.shape());
    for (const auto& [a, ca] : op.body().terms()) {
        for (const auto& [b, cb] : g.terms()) {
            Monomial m;
            Rat scale;
            if (differentiate_monomial(a, b, m, scale)) acc.add(m, ca * cb * scale);
        }
    }
    return acc.take();
}

Rat pairing(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    if (!f.is_homogeneous() || !g.is_homogeneous() || f.degree() != g.degree())
        throw std::invalid_argument("pairing: arguments must be homogeneous of equal degree");
    Poly value = apply(StarOperator(f), g);
    if (!value.is_constant()) throw std::logic_error("pairing: non-constant result");
    return value.constant_value();
}

LaurentClass LaurentClass::socle(const Shape& shape) {
    LaurentClass c(shape);
    c.add_term(std::vector<int>(static_cast<std::size_t>(shape.var_count()), -1), Rat(1));
    return c;
}

void LaurentClass::add_term(const std::vector<int>& exponents, const Rat& coeff) {
    if (static_cast<int>(exponents.size()) != shape_.var_count())
        throw std::invalid_argument("LaurentClass: exponent vector length mismatch");
    for (int e : exponents)
        if (e >= 0)
            throw std::invalid_argument("LaurentClass: exponents must be strictly negative");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentClass& LaurentClass::operator+=(const LaurentClass& other) {
    if (!(shape_ == other.shape_))
        throw std::invalid_argument("LaurentClass: mixing shape contexts");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentClass& LaurentClass::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

bool operator==(const LaurentClass& lhs, const LaurentClass& rhs) {
    return lhs.shape_ == rhs.shape_ && lhs.terms_ == rhs.terms_;
}

std::string LaurentClass::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.get_str();
        std::size_t k = 0;
        for (int i = 1; i <= shape_.rows; ++i)
            for (int j = 1; j <= shape_.cols; ++j, ++k)
                if (it->first[k] != 0)
                    os << "*" << VarId::x(i, j).to_string() << "^" << it->first[k];
    }
    return os.str();
}

LaurentClass parse_laurent(const Shape& shape, const std::string& text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw std::invalid_argument("laurent parse error: empty input");
    if (compact == "0") return LaurentClass(shape);

    LaurentClass out(shape);
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("laurent parse error: " + what + " at position " +
                                    std::to_string(pos));
    };
    auto read_long = [&](bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < compact.size() && (compact[pos] == '-' || compact[pos] == '+'))
            ++pos;
        while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(
                                                     compact[start]))))
            fail("expected integer");
        return std::stol(compact.substr(start, pos - start));
    };
    while (true) {
        std::size_t start = pos;
        if (pos < compact.size() && (compact[pos] == '-' || compact[pos] == '+')) ++pos;
        while (pos < compact.size() &&
               (std::isdigit(static_cast<unsigned char>(compact[pos])) || compact[pos] == '/'))
            ++pos;
        if (pos == start) fail("expected coefficient");
        Rat coeff = parse_rational(compact.substr(start, pos - start));
        std::vector<int> exps(static_cast<std::size_t>(shape.var_count()), 0);
        while (pos < compact.size() && compact[pos] == '*') {
            ++pos;
            if (pos >= compact.size() || compact[pos] != 'x') fail("expected x-variable");
            ++pos;
            if (pos >= compact.size() || compact[pos] != '[') fail("expected '['");
            ++pos;
            long i = read_long(false);
            if (pos >= compact.size() || compact[pos] != ',') fail("expected ','");
            ++pos;
            long j = read_long(false);
            if (pos >= compact.size() || compact[pos] != ']') fail("expected ']'");
            ++pos;
            if (pos >= compact.size() || compact[pos] != '^') fail("expected '^'");
            ++pos;
            long e = read_long(true);
            VarId v = VarId::x(static_cast<int>(i), static_cast<int>(j));
            v.validate(shape);
            exps[static_cast<std::size_t>((i - 1) * shape.cols + (j - 1))] +=
                static_cast<int>(e);
        }
        out.add_term(exps, coeff);
        if (pos >= compact.size()) break;
        if (compact[pos] != '+') fail("expected '+' between terms");
        ++pos;
    }
    return out;
}

LaurentClass apply_to_laurent(const StarOperator& op, const LaurentClass& c) {
    const Shape& shape = c.shape();
    LaurentClass out(shape);
    for (const auto& [body_mono, body_coeff] : op.body().terms()) {
        const auto factors = body_mono.factors();
        for (const auto& [beta, coeff] : c.terms()) {
            std::vector<int> exps = beta;
            Rat scale = body_coeff * coeff;
            for (const auto& [v, e] : factors) {
                const std::size_t k =
                    static_cast<std::size_t>((v.a - 1) * shape.cols + (v.b - 1));
                for (int step = 0; step < e; ++step) {
                    scale *= exps[k];
                    exps[k] -= 1;
                }
            }
            out.add_term(exps, scale);
        }
    }
    return out;
}

LaurentClass r_action(const Poly& p, const LaurentClass& c) {
    if (!p.x_only()) throw std::invalid_argument("r_action: polynomial must be x-only");
    const Shape& shape = c.shape();
    LaurentClass out(shape);
    for (const auto& [m, pc] : p.terms()) {
        const auto factors = m.factors();
        for (const auto& [beta, coeff] : c.terms()) {
            std::vector<int> exps = beta;
            bool truncated = false;
            for (const auto& [v, e] : factors) {
                const std::size_t k =
                    static_cast<std::size_t>((v.a - 1) * shape.cols + (v.b - 1));
                exps[k] += e;
                if (exps[k] >= 0) {
                    truncated = true;
                    break;
                }
            }
            if (!truncated) out.add_term(exps, pc * coeff);
        }
    }
    return out;
}

namespace {

Poly d_power_product(const Shape& shape, const std::vector<int>& alpha) {
    Poly out{Rat(1)};
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw std::invalid_argument("negative exponent in alpha");
        if (alpha[i] > 0)
            out = out * maximal_minor(shape, static_cast<int>(i) + 1).pow(alpha[i]);
    }
    return out;
}

}  // namespace

Poly cayley_apply(int n, const std::vector<int>& s, int i) {
    if (n < 2) throw std::invalid_argument("cayley_apply: require n >= 2");
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("cayley_apply: s must have n components");
    int total = 0;
    for (int v : s) total += v;
    if (total > 6) throw std::invalid_argument("cayley_apply: |s| capped at 6");
    const Shape shape{n, n - 1};
    const Poly d_i = maximal_minor(shape, i);
    return apply(StarOperator(d_i), d_i * d_power_product(shape, s));
}

CayleyScalar cayley_scalar(int n, const std::vector<int>& s, int i) {
    const Shape shape{n, n - 1};
    const Poly result = cayley_apply(n, s, i);
    const Poly reference = d_power_product(shape, s);
    CayleyScalar out;
    if (result.is_zero()) {
        out.proportional = true;
        out.scalar = 0;
        return out;
    }
    const auto& lead = *reference.terms().rbegin();
    Rat candidate = result.coefficient(lead.first) / lead.second;
    out.proportional = (result == reference * candidate);
    if (out.proportional) out.scalar = candidate;
    return out;
}

FourierCheck fourier_equivalence_check(const Poly& f, const std::vector<int>& alpha, int n,
                                       int t) {
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("fourier_equivalence_check: alpha must have n parts");
    int total = 0;
    for (int a : alpha) total += a;
    if (total != t - n + 1)
        throw std::invalid_argument("fourier_equivalence_check: require |alpha| = t - n + 1");
    const Shape shape{n, n - 1};
    const Poly d_alpha = d_power_product(shape, alpha);

    FourierCheck out;
    out.operator_side = apply(StarOperator(f), d_alpha).is_zero();

    const LaurentClass cls = apply_to_laurent(StarOperator(d_alpha), LaurentClass::socle(shape));
    // Monomial multiples outside the divisor box of some -1-beta die on cls
    // already, so the survey below is exhaustive.
    std::set<Monomial> box;
    for (const auto& [beta, coeff] : cls.terms()) {
        std::vector<std::pair<VarId, int>> caps;
        std::size_t k = 0;
        for (int i2 = 1; i2 <= shape.rows; ++i2)
            for (int j2 = 1; j2 <= shape.cols; ++j2, ++k)
                if (-1 - beta[k] > 0) caps.emplace_back(VarId::x(i2, j2), -1 - beta[k]);
        // all divisors of prod v^cap
        std::vector<std::pair<VarId, int>> stack;
        auto expand = [&](auto&& self, std::size_t idx) -> void {
            if (idx == caps.size()) {
                box.insert(Monomial::from_factors(stack));
                return;
            }
            for (int e = 0; e <= caps[idx].second; ++e) {
                if (e > 0) stack.emplace_back(caps[idx].first, e);
                self(self, idx + 1);
                if (e > 0) stack.pop_back();
            }
        };
        expand(expand, 0);
    }
    out.laurent_side = true;
    for (const Monomial& m : box) {
        Poly fm = f;
        {
            PolyBuilder b(f.shape());
            b.add(m, Rat(1));
            fm = f * b.take();
        }
        if (!r_action(fm, cls).is_zero()) {
            out.laurent_side = false;
            break;
        }
    }
    return out;
}

}  // namespace reeslift
