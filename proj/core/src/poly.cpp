#include "reeslift/poly.hpp"

#include <algorithm>

namespace reeslift {

namespace {

// Internal fast path: the monomial is already known to live in `shape`.
Poly unchecked_monomial(const Monomial& m, const Rat& c, const std::optional<Shape>& shape) {
    PolyBuilder b(shape);
    b.add(m, c);
    return b.take();
}

// Sorts raw terms and sums equal monomials, dropping zeros.
void coalesce_terms(Poly::Terms& raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Poly::Term& a, const Poly::Term& b) { return a.first < b.first; });
    Poly::Terms out;
    out.reserve(raw.size());
    for (auto& term : raw) {
        if (!out.empty() && out.back().first == term.first)
            out.back().second += term.second;
        else
            out.push_back(std::move(term));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    raw = std::move(out);
}

}  // namespace

Monomial Monomial::from_factors(std::vector<std::pair<VarId, int>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    Monomial m;
    for (auto& [v, e] : factors) {
        if (e == 0) continue;
        if (e < 0) throw std::invalid_argument("Monomial: exponent must be positive");
        const std::uint16_t key = encode(v);
        if (!m.factors_.empty() && m.factors_.back().var == key)
            m.factors_.back().exp = static_cast<std::uint16_t>(m.factors_.back().exp + e);
        else
            m.factors_.push_back({key, static_cast<std::uint16_t>(e)});
    }
    return m;
}

std::vector<std::pair<VarId, int>> Monomial::factors() const {
    std::vector<std::pair<VarId, int>> out;
    out.reserve(factors_.size());
    for (const Factor& f : factors_) out.emplace_back(decode(f.var), f.exp);
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto i = factors_.begin();
    auto j = other.factors_.begin();
    while (i != factors_.end() && j != other.factors_.end()) {
        if (i->var < j->var)
            out.factors_.push_back(*i++);
        else if (j->var < i->var)
            out.factors_.push_back(*j++);
        else {
            out.factors_.push_back({i->var, static_cast<std::uint16_t>(i->exp + j->exp)});
            ++i, ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, factors_.end());
    out.factors_.insert(out.factors_.end(), j, other.factors_.end());
    return out;
}

bool Monomial::divides_into(const Monomial& numerator, Monomial& quotient) const {
    Monomial out;
    auto d = factors_.begin();
    for (const Factor& f : numerator.factors_) {
        int need = 0;
        if (d != factors_.end() && d->var < f.var) return false;  // divisor var not in numerator
        if (d != factors_.end() && d->var == f.var) {
            need = d->exp;
            ++d;
        }
        if (need > f.exp) return false;
        if (f.exp - need > 0)
            out.factors_.push_back({f.var, static_cast<std::uint16_t>(f.exp - need)});
    }
    if (d != factors_.end()) return false;
    quotient = std::move(out);
    return true;
}

bool operator<(const Monomial& lhs, const Monomial& rhs) {
    auto i = lhs.factors_.begin();
    auto j = rhs.factors_.begin();
    while (i != lhs.factors_.end() && j != rhs.factors_.end()) {
        if (i->var < j->var) return false;  // lhs has positive exp where rhs has 0
        if (j->var < i->var) return true;
        if (i->exp != j->exp) return i->exp < j->exp;
        ++i, ++j;
    }
    if (i != lhs.factors_.end()) return false;
    return j != rhs.factors_.end();
}

Poly::Poly(Rat constant) {
    if (constant != 0) terms_.emplace_back(Monomial::one(), std::move(constant));
}

Poly Poly::variable(VarId v, const Shape& shape) {
    v.validate(shape);
    Poly p;
    p.shape_ = shape;
    p.terms_.emplace_back(Monomial::variable(v), Rat(1));
    return p;
}

Poly Poly::monomial(Monomial m, Rat coeff, const Shape& shape) {
    m.validate(shape);
    Poly p;
    p.shape_ = shape;
    if (coeff != 0) p.terms_.emplace_back(std::move(m), std::move(coeff));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rat Poly::constant_value() const {
    if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
    return Rat(0);
}

int Poly::degree() const {
    if (is_zero())
        throw std::invalid_argument("degree of the zero polynomial is undefined");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (is_zero()) return true;
    const int d = terms_.front().first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Poly::is_t_homogeneous() const {
    if (is_zero()) return true;
    const int d = terms_.front().first.t_degree();
    for (const auto& [m, c] : terms_)
        if (m.t_degree() != d) return false;
    return true;
}

int Poly::t_degree() const {
    if (is_zero())
        throw std::invalid_argument("t_degree of the zero polynomial is undefined");
    if (!is_t_homogeneous())
        throw std::invalid_argument("t_degree of a non-T-homogeneous polynomial");
    return terms_.front().first.t_degree();
}

bool Poly::x_only() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.first.x_only(); });
}

Rat Poly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rat(0);
}

void Poly::absorb_shape(const std::optional<Shape>& other) {
    if (!other) return;
    if (!shape_) {
        shape_ = other;
        return;
    }
    if (*shape_ != *other)
        throw std::invalid_argument("mixing polynomials from shape contexts " +
                                    shape_->to_string() + " and " + other->to_string());
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{m, c});
    }
}

Poly& Poly::operator+=(const Poly& other) {
    absorb_shape(other.shape_);
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = other.terms_;
        return *this;
    }
    Terms merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() && j != other.terms_.end()) {
        if (i->first < j->first)
            merged.push_back(std::move(*i++));
        else if (j->first < i->first)
            merged.push_back(*j++);
        else {
            Rat c = std::move(i->second);
            c += j->second;
            if (c != 0) merged.emplace_back(std::move(i->first), std::move(c));
            ++i, ++j;
        }
    }
    for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
    merged.insert(merged.end(), j, other.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    absorb_shape(other.shape_);
    if (other.terms_.empty()) return *this;
    Terms merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() && j != other.terms_.end()) {
        if (i->first < j->first)
            merged.push_back(std::move(*i++));
        else if (j->first < i->first) {
            merged.emplace_back(j->first, -j->second);
            ++j;
        } else {
            Rat c = std::move(i->second);
            c -= j->second;
            if (c != 0) merged.emplace_back(std::move(i->first), std::move(c));
            ++i, ++j;
        }
    }
    for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
    for (; j != other.terms_.end(); ++j) merged.emplace_back(j->first, -j->second);
    terms_ = std::move(merged);
    return *this;
}

Poly Poly::operator-() const {
    Poly out;
    out.shape_ = shape_;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
    return out;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly out;
    out.shape_ = lhs.shape_;
    out.absorb_shape(rhs.shape_);
    if (lhs.terms_.empty() || rhs.terms_.empty()) return out;

    const bool lhs_small = lhs.terms_.size() <= rhs.terms_.size();
    const Poly::Terms& small = lhs_small ? lhs.terms_ : rhs.terms_;
    const Poly::Terms& big = lhs_small ? rhs.terms_ : lhs.terms_;

    if (small.size() == 1) {
        // multiplication by one monomial preserves the term order
        out.terms_.reserve(big.size());
        for (const auto& [m, c] : big)
            out.terms_.emplace_back(m * small.front().first, c * small.front().second);
        return out;
    }

    // Johnson's heap merge: one sorted stream per term of the small factor.
    struct Node {
        Monomial key;
        std::uint32_t si;
        std::uint32_t bi;
    };
    const auto greater = [](const Node& a, const Node& b) { return b.key < a.key; };
    std::vector<Node> heap;
    heap.reserve(small.size());
    for (std::uint32_t si = 0; si < small.size(); ++si)
        heap.push_back({small[si].first * big[0].first, si, 0});
    std::make_heap(heap.begin(), heap.end(), greater);

    out.terms_.reserve(big.size() + small.size());
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), greater);
        Node node = std::move(heap.back());
        heap.pop_back();
        Rat product = small[node.si].second * big[node.bi].second;
        if (!out.terms_.empty() && out.terms_.back().first == node.key) {
            out.terms_.back().second += product;
            if (out.terms_.back().second == 0) out.terms_.pop_back();
        } else {
            out.terms_.emplace_back(node.key, std::move(product));
        }
        if (node.bi + 1 < big.size()) {
            heap.push_back(
                {small[node.si].first * big[node.bi + 1].first, node.si, node.bi + 1});
            std::push_heap(heap.begin(), heap.end(), greater);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly out{Rat(1)};
    out.shape_ = shape_;
    Poly base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.terms_ == rhs.terms_; }

PolyBuilder::PolyBuilder(std::optional<Shape> shape) : shape_(std::move(shape)) {}

void PolyBuilder::coalesce() {
    constexpr std::size_t kFlushThreshold = 1u << 21;
    if (raw_.size() >= kFlushThreshold) coalesce_terms(raw_);
}

void PolyBuilder::add(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    raw_.emplace_back(m, c);
    coalesce();
}

void PolyBuilder::add(Monomial&& m, Rat&& c) {
    if (c == 0) return;
    raw_.emplace_back(std::move(m), std::move(c));
    coalesce();
}

void PolyBuilder::add(const Poly& p, const Rat& scale) {
    if (!shape_ && p.shape())
        shape_ = p.shape();
    else if (shape_ && p.shape() && !(*shape_ == *p.shape()))
        throw std::invalid_argument("PolyBuilder: mixing shape contexts");
    if (scale == 0) return;
    for (const auto& [m, c] : p.terms()) raw_.emplace_back(m, c * scale);
    coalesce();
}

void PolyBuilder::add_product(const Poly& a, const Poly& b, const Rat& scale) {
    if (scale == 0) return;
    add(a * b, scale);
}

Poly PolyBuilder::take() {
    coalesce_terms(raw_);
    Poly out;
    out.shape_ = shape_;
    out.terms_ = std::move(raw_);
    raw_.clear();
    return out;
}

Poly substitute_linear(const Poly& p, const LinearSubstitution& xmap) {
    for (const auto& [v, image] : xmap) {
        if (!v.is_x())
            throw std::invalid_argument("substitute_linear: keys must be x-variables");
        if (image.is_zero()) continue;
        if (!image.x_only() || !image.is_homogeneous() || image.degree() != 1)
            throw std::invalid_argument(
                "substitute_linear: image of " + v.to_string() + " is not an x-linear form");
    }
    PolyBuilder out(p.shape());
    for (const auto& [m, c] : p.terms()) {
        Poly term{c};
        std::vector<std::pair<VarId, int>> t_part;
        for (const auto& [v, e] : m.factors()) {
            if (v.is_t()) {
                t_part.emplace_back(v, e);
                continue;
            }
            auto it = xmap.find(v);
            if (it == xmap.end())
                throw std::invalid_argument("substitute_linear: no assignment for " +
                                            v.to_string());
            term = term * it->second.pow(e);
        }
        if (!t_part.empty())
            term = term * unchecked_monomial(Monomial::from_factors(std::move(t_part)),
                                             Rat(1), p.shape());
        out.add(term);
    }
    return out.take();
}

Poly substitute_t(const Poly& p, const std::vector<Poly>& images) {
    PolyBuilder out(p.shape());
    for (const auto& [m, c] : p.terms()) {
        Poly term{c};
        std::vector<std::pair<VarId, int>> x_part;
        for (const auto& [v, e] : m.factors()) {
            if (v.is_x()) {
                x_part.emplace_back(v, e);
                continue;
            }
            if (v.a < 1 || static_cast<std::size_t>(v.a) > images.size())
                throw std::invalid_argument("substitute_t: no image for " + v.to_string());
            term = term * images[static_cast<std::size_t>(v.a) - 1].pow(e);
        }
        if (!x_part.empty())
            term = term * unchecked_monomial(Monomial::from_factors(std::move(x_part)),
                                             Rat(1), p.shape());
        out.add(term);
    }
    return out.take();
}

std::optional<Poly> try_divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    // Homogeneous divisor keeps every intermediate bounded by deg(f), which
    // makes the leading-term reduction terminate.
    if (!g.is_homogeneous())
        throw std::invalid_argument("try_divide_exact: divisor must be homogeneous");
    Poly rem = f;
    PolyBuilder quotient(f.shape());
    const auto& lead_g = g.terms().back();
    while (!rem.is_zero()) {
        const auto& lead_r = rem.terms().back();
        Monomial q_mono;
        if (!lead_g.first.divides_into(lead_r.first, q_mono)) return std::nullopt;
        Rat q_coeff = lead_r.second / lead_g.second;
        PolyBuilder step(f.shape());
        for (const auto& [m, c] : g.terms()) step.add(m * q_mono, c * q_coeff);
        rem -= step.take();
        quotient.add(q_mono, q_coeff);
    }
    return quotient.take();
}

}  // namespace reeslift
