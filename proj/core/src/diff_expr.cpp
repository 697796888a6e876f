#include "jetcoh/diff_expr.hpp"

#include "jetcoh/calculus.hpp"
#include "jetcoh/error.hpp"
#include "jetcoh/expr_tree.hpp"

#include <algorithm>
#include <sstream>

namespace jetcoh {

// ---------------------------------------------------------------- jets

std::string_view family_name(Family fam) {
    switch (fam) {
    case Family::f: return "f";
    case Family::g: return "g";
    case Family::k: return "k";
    case Family::T: return "T";
    case Family::R: return "R";
    case Family::w: return "w";
    case Family::h: return "h";
    case Family::hinv: return "hinv";
    }
    return "?";
}

bool family_from_letter(char c, Family& out) {
    switch (c) {
    case 'f': out = Family::f; return true;
    case 'g': out = Family::g; return true;
    case 'k': out = Family::k; return true;
    case 'T': out = Family::T; return true;
    case 'R': out = Family::R; return true;
    case 'w': out = Family::w; return true;
    case 'h': out = Family::h; return true;
    default: return false;
    }
}

JetLimits JetLimits::with_max_order(int n) {
    if (n < 1 || n > kJetSlots - 1)
        throw InvalidArgument("max order must lie in [1, " + std::to_string(kJetSlots - 1) + "], got " + std::to_string(n));
    return JetLimits{n};
}

std::string JetSymbol::to_string() const {
    if (family == Family::hinv) return "hinv";
    return std::string(family_name(family)) + "[" + std::to_string(order) + "]";
}

JetSymbol jet(Family fam, int order, const JetLimits& limits) {
    if (fam == Family::hinv) {
        if (order != 0) throw InvalidArgument("hinv carries no jets");
        return hinv_symbol();
    }
    if (order < 0) throw InvalidArgument("negative jet order");
    if (fam == Family::h && order < 1) throw InvalidArgument("h jets start at order 1 (h[1] = h')");
    if (order > limits.max_order)
        throw OrderCapExceeded(std::string(family_name(fam)) + "[" + std::to_string(order) + "] exceeds jet order cap " +
                               std::to_string(limits.max_order));
    return JetSymbol{fam, order};
}

// ---------------------------------------------------------------- monomials

namespace {
constexpr int kH1 = static_cast<int>(Family::h) * kJetSlots + 1;
constexpr int kHinv = static_cast<int>(Family::hinv) * kJetSlots;
}  // namespace

Monomial::Monomial(JetSymbol s, int exponent) {
    exps_.fill(0);
    if (exponent < 0 || exponent > 255) throw InvalidArgument("monomial exponent out of range");
    exps_[s.index()] = static_cast<std::uint8_t>(exponent);
}

bool Monomial::is_one() const noexcept {
    for (auto e : exps_)
        if (e) return false;
    return true;
}

int Monomial::total_degree() const noexcept {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

int Monomial::family_degree(Family fam) const noexcept {
    int d = 0;
    const int base = static_cast<int>(fam) * kJetSlots;
    for (int i = 0; i < kJetSlots; ++i) d += exps_[base + i];
    return d;
}

int Monomial::max_order(Family fam) const noexcept {
    const int base = static_cast<int>(fam) * kJetSlots;
    for (int i = kJetSlots - 1; i >= 0; --i)
        if (exps_[base + i]) return i;
    return -1;
}

void Monomial::cancel_units() noexcept {
    auto m = std::min(exps_[kH1], exps_[kHinv]);
    exps_[kH1] = static_cast<std::uint8_t>(exps_[kH1] - m);
    exps_[kHinv] = static_cast<std::uint8_t>(exps_[kHinv] - m);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) {
        int s = a.exps_[i] + b.exps_[i];
        if (s > 255) throw InvalidArgument("monomial exponent overflow");
        r.exps_[i] = static_cast<std::uint8_t>(s);
    }
    r.cancel_units();
    return r;
}

Monomial Monomial::without_one(JetSymbol s) const {
    Monomial r = *this;
    --r.exps_[s.index()];
    return r;
}

Monomial Monomial::times(JetSymbol s, int e) const {
    Monomial r = *this;
    int v = r.exps_[s.index()] + e;
    if (v > 255 || v < 0) throw InvalidArgument("monomial exponent overflow");
    r.exps_[s.index()] = static_cast<std::uint8_t>(v);
    r.cancel_units();
    return r;
}

std::string Monomial::to_string() const {
    std::string out;
    for (int i = 0; i < kVarCount; ++i) {
        if (!exps_[i]) continue;
        if (!out.empty()) out += "*";
        out += JetSymbol::from_index(i).to_string();
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const noexcept {
    // FNV-1a over the exponent bytes
    std::uint64_t h = 1469598103934665603ULL;
    const auto* words = reinterpret_cast<const unsigned char*>(exps_.data());
    for (int i = 0; i < kVarCount; ++i) {
        h ^= words[i];
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- DiffExpr

namespace {

using Accumulator = std::unordered_map<Monomial, Coefficient, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return canonical_before(a.mono, b.mono); });
    return out;
}

void accumulate(Accumulator& acc, const Monomial& m, const Coefficient& c) {
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) it->second += c;
}

}  // namespace

DiffExpr::DiffExpr(const Rational& c) {
    if (c != 0) terms_.push_back(Term{Monomial(), Coefficient(c)});
}

DiffExpr::DiffExpr(const Coefficient& c) {
    if (!c.is_zero()) terms_.push_back(Term{Monomial(), c});
}

DiffExpr::DiffExpr(JetSymbol s) { terms_.push_back(Term{Monomial(s), Coefficient(1)}); }

DiffExpr::DiffExpr(const Monomial& m, const Coefficient& c) {
    if (!c.is_zero()) terms_.push_back(Term{m, c});
}

DiffExpr DiffExpr::lambda() { return DiffExpr(Coefficient::lambda()); }

DiffExpr DiffExpr::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return canonical_before(a.mono, b.mono); });
    DiffExpr r;
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
            r.terms_.back().coeff += t.coeff;
            if (r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

bool DiffExpr::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Coefficient DiffExpr::coefficient_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return canonical_before(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Coefficient();
}

int DiffExpr::max_order(Family fam) const noexcept {
    int best = -1;
    for (const auto& t : terms_) best = std::max(best, t.mono.max_order(fam));
    return best;
}

bool DiffExpr::homogeneous_in(Family fam, int degree) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.family_degree(fam) == degree; });
}

int DiffExpr::lambda_degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.coeff.degree());
    return d;
}

namespace {

template <class Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, Combine combine) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && canonical_before(a[i].mono, b[j].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || canonical_before(b[j].mono, a[i].mono)) {
            out.push_back(Term{b[j].mono, combine(Coefficient(), b[j].coeff)});
            ++j;
        } else {
            Coefficient c = combine(a[i].coeff, b[j].coeff);
            if (!c.is_zero()) out.push_back(Term{a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

DiffExpr& DiffExpr::operator+=(const DiffExpr& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, [](const Coefficient& x, const Coefficient& y) { return x + y; });
    return *this;
}

DiffExpr& DiffExpr::operator-=(const DiffExpr& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, [](const Coefficient& x, const Coefficient& y) { return x - y; });
    return *this;
}

DiffExpr DiffExpr::operator-() const {
    DiffExpr r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) {
    if (a.is_zero() || b.is_zero()) return DiffExpr();
    if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
    if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
    Accumulator acc;
    acc.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) accumulate(acc, x.mono * y.mono, x.coeff * y.coeff);
    DiffExpr r;
    r.terms_ = drain(acc);
    return r;
}

bool operator==(const DiffExpr& a, const DiffExpr& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

DiffExpr DiffExpr::scaled(const Coefficient& c) const {
    if (c.is_zero()) return DiffExpr();
    DiffExpr r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Coefficient p = t.coeff * c;
        if (!p.is_zero()) r.terms_.push_back(Term{t.mono, std::move(p)});
    }
    return r;
}

DiffExpr DiffExpr::pow(int exponent) const {
    if (exponent >= 0) {
        DiffExpr result(1), base = *this;
        int e = exponent;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }
    // Inverse of a unit: c * h[1]^a * hinv^b.
    if (terms_.size() != 1 || !terms_[0].coeff.is_constant())
        throw InvalidArgument("negative power of a non-unit expression: " + to_string());
    const Monomial& m = terms_[0].mono;
    const int a = m.exponent(jet(Family::h, 1, JetLimits{kJetSlots - 1}));
    const int b = m.exponent(hinv_symbol());
    if (m.total_degree() != a + b) throw InvalidArgument("negative power of a non-unit expression: " + to_string());
    Monomial inv = Monomial().times(hinv_symbol(), a).times(jet(Family::h, 1, JetLimits{kJetSlots - 1}), b);
    DiffExpr unit(inv, Coefficient(Rational(1) / terms_[0].coeff.constant()));
    return unit.pow(-exponent);
}

DiffExpr DiffExpr::at_lambda(const Rational& lam) const {
    std::vector<Term> out;
    for (const auto& t : terms_) out.push_back(Term{t.mono, Coefficient(t.coeff.evaluate(lam))});
    return from_terms(std::move(out));
}

DiffExpr DiffExpr::lambda_part(int i) const {
    DiffExpr r;
    for (const auto& t : terms_) {
        Rational c = t.coeff[static_cast<std::size_t>(i)];
        if (c != 0) r.terms_.push_back(Term{t.mono, Coefficient(c)});
    }
    return r;
}

std::string DiffExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const Coefficient& c = t.coeff;
        const bool mono_one = t.mono.is_one();
        bool negative = false;
        std::string coeff_text;
        if (c.is_constant()) {
            Rational v = c.constant();
            negative = v < 0;
            Rational mag = abs(v);
            if (mag != 1 || mono_one) coeff_text = mag.get_str();
        } else {
            // Pull a sign out of single-power coefficients like -2*lam.
            int nonzero = 0;
            for (const auto& x : c.coeffs())
                if (x != 0) ++nonzero;
            Coefficient shown = c;
            if (nonzero == 1 && c.coeffs().back() < 0) {
                negative = true;
                shown = -c;
            }
            coeff_text = nonzero == 1 ? shown.to_string() : "(" + shown.to_string() + ")";
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (!coeff_text.empty()) {
            os << coeff_text;
            if (!mono_one) os << "*";
        }
        if (!mono_one) os << t.mono.to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------- calculus on expressions

DiffExpr total_derivative(const DiffExpr& e, const JetLimits& limits) {
    Accumulator acc;
    acc.reserve(e.size() * 4);
    const JetSymbol hinv = hinv_symbol();
    const JetSymbol h2{Family::h, 2};
    for (const auto& t : e.terms()) {
        for (int idx = 0; idx < kVarCount; ++idx) {
            const int ex = t.mono.exponent_at(idx);
            if (ex == 0) continue;
            const JetSymbol s = JetSymbol::from_index(idx);
            Coefficient c = t.coeff * Coefficient(Rational(ex));
            if (s.family == Family::hinv) {
                // d(hinv) = -h[2] hinv^2
                if (limits.max_order < 2) throw OrderCapExceeded("h[2] exceeds jet order cap");
                accumulate(acc, t.mono.times(h2).times(hinv), -c);
                continue;
            }
            if (s.order + 1 > limits.max_order)
                throw OrderCapExceeded(std::string(family_name(s.family)) + "[" + std::to_string(s.order + 1) +
                                       "] exceeds jet order cap " + std::to_string(limits.max_order));
            accumulate(acc, t.mono.without_one(s).times(JetSymbol{s.family, s.order + 1}), c);
        }
    }
    return DiffExpr::from_terms(drain(acc));
}

DiffExpr total_derivative(const DiffExpr& e, int n, const JetLimits& limits) {
    DiffExpr r = e;
    for (int i = 0; i < n; ++i) r = total_derivative(r, limits);
    return r;
}

DiffExpr partial(const DiffExpr& e, JetSymbol s) {
    std::vector<Term> out;
    for (const auto& t : e.terms()) {
        const int ex = t.mono.exponent(s);
        if (ex == 0) continue;
        out.push_back(Term{t.mono.without_one(s), t.coeff * Coefficient(Rational(ex))});
    }
    return DiffExpr::from_terms(std::move(out));
}

DiffExpr substitute_table(const DiffExpr& e, const SymbolTable& table) {
    std::array<std::optional<DiffExpr>, kVarCount> repl;
    std::array<bool, kVarCount> looked{};
    std::map<std::pair<int, int>, DiffExpr> powers;
    auto power_of = [&](int idx, int ex) -> const DiffExpr& {
        if (ex == 1) return *repl[idx];
        auto it = powers.find({idx, ex});
        if (it != powers.end()) return it->second;
        DiffExpr p = *repl[idx];
        for (int i = 1; i < ex; ++i) p = p * *repl[idx];
        return powers.emplace(std::make_pair(idx, ex), std::move(p)).first->second;
    };
    Accumulator acc;
    for (const auto& t : e.terms()) {
        DiffExpr prod(Monomial(), t.coeff);
        Monomial kept;
        for (int idx = 0; idx < kVarCount; ++idx) {
            const int ex = t.mono.exponent_at(idx);
            if (ex == 0) continue;
            if (!looked[idx]) {
                repl[idx] = table(JetSymbol::from_index(idx));
                looked[idx] = true;
            }
            if (repl[idx]) {
                prod = prod * power_of(idx, ex);
                if (prod.is_zero()) break;
            } else {
                kept = kept.times(JetSymbol::from_index(idx), ex);
            }
        }
        for (const auto& pt : prod.terms()) accumulate(acc, pt.mono * kept, pt.coeff);
    }
    return DiffExpr::from_terms(drain(acc));
}

DiffExpr substitute(const DiffExpr& e, const std::map<Family, DiffExpr>& bindings, const JetLimits& limits) {
    std::map<Family, std::vector<DiffExpr>> prolonged;
    for (const auto& [fam, binding] : bindings) {
        if (fam == Family::h || fam == Family::hinv)
            throw InvalidArgument("cannot bind the transition family " + std::string(family_name(fam)));
        const int top = e.max_order(fam);
        std::vector<DiffExpr> seq;
        if (top >= 0) {
            seq.push_back(binding);
            for (int n = 1; n <= top; ++n) seq.push_back(total_derivative(seq.back(), limits));
        }
        prolonged.emplace(fam, std::move(seq));
    }
    return substitute_table(e, [&](JetSymbol s) -> std::optional<DiffExpr> {
        auto it = prolonged.find(s.family);
        if (it == prolonged.end()) return std::nullopt;
        return it->second.at(static_cast<std::size_t>(s.order));
    });
}

// ---------------------------------------------------------------- evaluation

void EvalPoint::set(JetSymbol s, const Rational& v) {
    if (s.family == Family::h && s.order == 1) {
        if (v == 0) throw EvaluationError("h[1] assigned 0");
        values_[s.index()] = v;
        assigned_[s.index()] = true;
        values_[hinv_symbol().index()] = Rational(1) / v;
        assigned_[hinv_symbol().index()] = true;
        return;
    }
    if (s.family == Family::hinv) {
        if (v == 0) throw EvaluationError("hinv assigned 0");
        const JetSymbol h1{Family::h, 1};
        if (assigned_[h1.index()] && values_[h1.index()] * v != 1)
            throw EvaluationError("hinv is not the reciprocal of h[1]");
    }
    values_[s.index()] = v;
    assigned_[s.index()] = true;
}

const Rational& EvalPoint::get(JetSymbol s) const {
    if (!assigned_[s.index()]) throw EvaluationError("unassigned symbol " + s.to_string());
    return values_[s.index()];
}

Rational eval_rational(const DiffExpr& e, const EvalPoint& point) {
    if (e.lambda_degree() > 0 && !point.lambda()) throw EvaluationError("expression depends on lambda but no value given");
    const Rational lam = point.lambda().value_or(Rational(0));
    return evaluate<Rational>(e, [&](JetSymbol s) { return point.get(s); }, lam);
}

// ---------------------------------------------------------------- raw trees

ExprNode ExprNode::number(Rational v) {
    ExprNode n;
    n.kind = Kind::number;
    n.value = std::move(v);
    return n;
}

ExprNode ExprNode::lam() {
    ExprNode n;
    n.kind = Kind::lambda;
    return n;
}

ExprNode ExprNode::jet(JetSymbol s) {
    ExprNode n;
    n.kind = Kind::jet;
    n.symbol = s;
    return n;
}

ExprNode ExprNode::binary(Kind k, ExprNode a, ExprNode b) {
    ExprNode n;
    n.kind = k;
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return n;
}

ExprNode ExprNode::negate(ExprNode a) {
    ExprNode n;
    n.kind = Kind::neg;
    n.children.push_back(std::move(a));
    return n;
}

ExprNode ExprNode::power(ExprNode base, Rational exponent) {
    ExprNode n;
    n.kind = Kind::pow;
    n.value = std::move(exponent);
    n.children.push_back(std::move(base));
    return n;
}

ExprNode ExprNode::schwarzian_node() {
    ExprNode n;
    n.kind = Kind::schwarzian;
    return n;
}

ExprNode ExprNode::det(int p, int q) {
    ExprNode n;
    n.kind = Kind::det;
    n.det_p = p;
    n.det_q = q;
    return n;
}

DiffExpr normalize(const ExprNode& tree, const JetLimits& limits) {
    switch (tree.kind) {
    case ExprNode::Kind::number: return DiffExpr(tree.value);
    case ExprNode::Kind::lambda: return DiffExpr::lambda();
    case ExprNode::Kind::jet: return DiffExpr(jet(tree.symbol.family, tree.symbol.order, limits));
    case ExprNode::Kind::add: return normalize(tree.children[0], limits) + normalize(tree.children[1], limits);
    case ExprNode::Kind::sub: return normalize(tree.children[0], limits) - normalize(tree.children[1], limits);
    case ExprNode::Kind::mul: return normalize(tree.children[0], limits) * normalize(tree.children[1], limits);
    case ExprNode::Kind::neg: return -normalize(tree.children[0], limits);
    case ExprNode::Kind::pow: {
        if (tree.value.get_den() != 1) throw InvalidArgument("non-integer exponent " + tree.value.get_str());
        if (!tree.value.get_num().fits_sint_p()) throw InvalidArgument("exponent out of range");
        return normalize(tree.children[0], limits).pow(static_cast<int>(tree.value.get_num().get_si()));
    }
    case ExprNode::Kind::schwarzian: return schwarzian(limits);
    case ExprNode::Kind::det: {
        if (tree.det_p >= tree.det_q)
            throw InvalidArgument("det(" + std::to_string(tree.det_p) + "," + std::to_string(tree.det_q) + ") needs p < q");
        const JetSymbol fp = jet(Family::f, tree.det_p, limits), fq = jet(Family::f, tree.det_q, limits);
        const JetSymbol gp = jet(Family::g, tree.det_p, limits), gq = jet(Family::g, tree.det_q, limits);
        return DiffExpr(fp) * DiffExpr(gq) - DiffExpr(fq) * DiffExpr(gp);
    }
    }
    throw InvalidArgument("unknown expression node");
}

}  // namespace jetcoh
