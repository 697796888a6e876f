#include "jetcoh/corrections.hpp"

#include "jetcoh/error.hpp"
#include "jetcoh/linear_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace jetcoh {

namespace {

int jet_weight(JetSymbol s) {
    switch (s.family) {
    case Family::T: return s.order + 1;
    case Family::R: return s.order + 2;
    default: return 0;
    }
}

// Monomials in T_i, R_i of exact weight w, each listed once.
void connection_monomials(int w, int max_order, std::vector<Monomial>& out) {
    std::vector<JetSymbol> vars;
    for (int i = 0; i <= max_order; ++i) {
        if (i + 1 <= w) vars.push_back(JetSymbol{Family::T, i});
        if (i + 2 <= w) vars.push_back(JetSymbol{Family::R, i});
    }
    auto rec = [&](auto&& self, std::size_t from, int left, const Monomial& m) -> void {
        if (left == 0) {
            out.push_back(m);
            return;
        }
        for (std::size_t i = from; i < vars.size(); ++i) {
            const int vw = jet_weight(vars[i]);
            if (vw <= left) self(self, i, left - vw, m.times(vars[i]));
        }
    };
    rec(rec, 0, w, Monomial());
}

struct AnsatzTerm {
    Monomial coef;
    int p = 0, q = 0;
    DiffExpr expr;
};

int t_degree(const Monomial& m) { return m.family_degree(Family::T); }

bool column_before(const AnsatzTerm& a, const AnsatzTerm& b) {
    const int ta = t_degree(a.coef), tb = t_degree(b.coef);
    if ((ta > 0) != (tb > 0)) return ta == 0;
    if (ta != tb) return ta > tb;
    if (a.p + a.q != b.p + b.q) return a.p + a.q > b.p + b.q;
    if (!(a.coef == b.coef)) return canonical_before(a.coef, b.coef);
    return a.p > b.p;
}

using RowMap = std::unordered_map<Monomial, std::vector<SparseLinearSystem::Entry>, MonomialHash>;

void scatter(RowMap& rows, const DiffExpr& e, std::size_t column) {
    for (const auto& t : e.terms()) rows[t.mono].emplace_back(column, t.coeff.constant());
}

DiffExpr combine(const std::vector<AnsatzTerm>& ansatz, const std::vector<Rational>& x) {
    DiffExpr out;
    for (std::size_t j = 0; j < ansatz.size(); ++j)
        if (x[j] != 0) out += ansatz[j].expr.scaled(Coefficient(x[j]));
    return out;
}

bool only_argument_jets(const DiffExpr& e) {
    for (Family fam : {Family::k, Family::T, Family::R, Family::w, Family::h, Family::hinv})
        if (e.contains(fam)) return false;
    return true;
}

// f-order + g-order - 2 and the (T, R) weight of the remaining factor.
std::pair<int, int> term_weights(const Monomial& m) {
    int det_w = -2, conn_w = 0;
    for (int idx = 0; idx < kVarCount; ++idx) {
        const int ex = m.exponent_at(idx);
        if (!ex) continue;
        const JetSymbol s = JetSymbol::from_index(idx);
        if (s.family == Family::f || s.family == Family::g) det_w += ex * s.order;
        else conn_w += ex * jet_weight(s);
    }
    return {det_w, conn_w};
}

}  // namespace

CorrectionResult solve_corrections(const Cochain2& symbol, int weight, std::optional<Rational> module_lambda,
                                   const JetLimits& limits) {
    if (!only_argument_jets(symbol.coeff)) throw InvalidArgument("correction symbol must be flat (f- and g-jets only)");
    if (symbol.value_weight != weight)
        throw InvalidArgument("symbol has weight " + std::to_string(symbol.value_weight) + ", requested " +
                              std::to_string(weight));
    for (const auto& t : symbol.coeff.terms())
        if (term_weights(t.mono).first != weight) throw InvalidArgument("symbol is not homogeneous of its weight");
    const Rational lam = module_lambda.value_or(Rational(weight));
    const Coefficient lam_c(lam);

    // ansatz: coef(T,R) * det(p,q), p+q-2 < weight, total weight = weight
    std::vector<AnsatzTerm> ansatz;
    for (int s = 1; s - 2 < weight; ++s) {
        const int cw = weight - (s - 2);
        std::vector<Monomial> monos;
        connection_monomials(cw, cw, monos);
        for (int p = 0; 2 * p < s; ++p) {
            const int q = s - p;
            if (q > limits.max_order) throw OrderCapExceeded("correction ansatz needs det(" + std::to_string(p) + "," +
                                                             std::to_string(q) + ") beyond the order cap");
            const DiffExpr d = det_expr(p, q, limits);
            for (const auto& m : monos) {
                if (m.max_order(Family::T) + 1 > limits.max_order || m.max_order(Family::R) + 1 > limits.max_order)
                    throw OrderCapExceeded("correction ansatz needs connection jets beyond the order cap");
                ansatz.push_back(AnsatzTerm{m, p, q, DiffExpr(m) * d});
            }
        }
    }
    std::stable_sort(ansatz.begin(), ansatz.end(), column_before);

    const std::size_t n = ansatz.size();
    ChartFrame frame(limits);
    const DiffExpr scale = weight_factor(weight);
    const Cochain2 sym = symbol.with_lambda(lam_c);

    RowMap global_rows, cocycle_rows;
    const std::size_t rhs_col = n;  // collected separately below
    scatter(global_rows, pushforward(sym.coeff, frame) - scale * sym.coeff, rhs_col);
    scatter(cocycle_rows, ce_differential(sym, ActionMode::lie, limits), rhs_col);
    for (std::size_t j = 0; j < n; ++j) {
        const Cochain2 b{ansatz[j].expr, weight, lam_c};
        scatter(global_rows, pushforward(b.coeff, frame) - scale * b.coeff, j);
        scatter(cocycle_rows, ce_differential(b, ActionMode::lie, limits), j);
    }

    SparseLinearSystem sys(n);
    auto feed = [&](RowMap& rows) {
        std::vector<std::pair<Monomial, std::vector<SparseLinearSystem::Entry>>> ordered(rows.begin(), rows.end());
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return canonical_before(a.first, b.first); });
        for (auto& [_, entries] : ordered) {
            Rational rhs(0);
            std::vector<SparseLinearSystem::Entry> row;
            for (auto& e : entries) {
                if (e.first == rhs_col) rhs -= e.second;
                else row.push_back(std::move(e));
            }
            sys.add_equation(std::move(row), rhs);
        }
    };
    feed(global_rows);
    feed(cocycle_rows);

    CorrectionResult out;
    out.unknowns = n;
    out.equations = sys.equations();
    out.rank = sys.rank();
    const LinearSolution sol = sys.solve();
    out.feasible = sol.consistent;
    if (!sol.consistent) return out;
    out.dimension = sol.nullspace.size();
    out.representative = Cochain2{symbol.coeff + combine(ansatz, sol.particular), weight, lam_c};
    for (const auto& v : sol.nullspace) out.gauge.push_back(combine(ansatz, v));
    return out;
}

MembershipVerdict correction_membership(const Cochain2& candidate, const Cochain2& symbol, int weight,
                                        const Rational& module_lambda, const ChartFrame& frame) {
    MembershipVerdict v;
    const DiffExpr diff = candidate.coeff - symbol.coeff;
    v.support_ok = !diff.contains(Family::k) && !diff.contains(Family::w) && !diff.contains(Family::h) &&
                   !diff.contains(Family::hinv) && diff.lambda_degree() <= 0;
    for (const auto& t : diff.terms()) {
        const auto [dw, cw] = term_weights(t.mono);
        if (dw >= weight || dw + cw != weight || cw == 0) v.support_ok = false;
    }
    const Cochain2 c{candidate.coeff, weight, Coefficient(module_lambda)};
    const GlobalityVerdict g = is_global(c, frame);
    v.global = g.global;
    v.global_residual = g.residual;
    v.cocycle_residual = ce_differential(c, ActionMode::lie, frame.limits());
    v.cocycle = v.cocycle_residual.is_zero();
    v.member = v.support_ok && v.global && v.cocycle;
    return v;
}

EquivalenceVerdict covariant_equivalence(Generator g, const std::optional<Cochain2>& derived_c7,
                                         const JetLimits& limits) {
    const DiffExpr cov = catalogue(g, Form::covariant, derived_c7, limits).cochain.coeff;
    const DiffExpr conn = catalogue(g, Form::connection, derived_c7, limits).cochain.coeff;
    const DiffExpr induced = induced_projective_connection(limits);
    EquivalenceVerdict v;
    v.normalization = "R = T[1] + 1/2*T[0]^2";
    v.residual = cov - substitute(conn, {{Family::R, induced}}, limits);
    if (v.residual.is_zero()) {
        v.pass = true;
        return v;
    }
    const DiffExpr flipped = cov - substitute(conn, {{Family::R, -induced}}, limits);
    if (flipped.is_zero()) {
        v.pass = true;
        v.normalization = "R = -(T[1] + 1/2*T[0]^2)";
        v.residual = flipped;
    }
    return v;
}

std::string det_form(const DiffExpr& e) {
    // key: (p, q) with p < q, ordered by decreasing p+q then decreasing q
    auto cmp = [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
        return std::make_tuple(-(a.first + a.second), -a.second) < std::make_tuple(-(b.first + b.second), -b.second);
    };
    std::map<std::pair<int, int>, std::vector<Term>, decltype(cmp)> groups(cmp);
    for (const auto& t : e.terms()) {
        if (t.mono.family_degree(Family::f) != 1 || t.mono.family_degree(Family::g) != 1)
            throw InvalidArgument("det_form needs a bilinear expression");
        const int a = t.mono.max_order(Family::f), b = t.mono.max_order(Family::g);
        if (a == b) throw InvalidArgument("det_form needs an antisymmetric expression");
        if (a > b) continue;
        const Monomial rest = t.mono.without_one(JetSymbol{Family::f, a}).without_one(JetSymbol{Family::g, b});
        groups[{a, b}].push_back(Term{rest, t.coeff});
    }
    if (groups.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [pq, terms] : groups) {
        const DiffExpr coef = DiffExpr::from_terms(terms);
        const std::string det = "det(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
        std::string c = coef.to_string();
        bool negative = false;
        if (coef.size() == 1 && !c.empty() && c[0] == '-') {
            negative = true;
            c = (-coef).to_string();
        }
        std::string piece;
        if (c == "1") piece = det;
        else if (coef.size() == 1) piece = c + "*" + det;
        else piece = "(" + c + ")*" + det;
        if (first) os << (negative ? "-" : "") << piece;
        else os << (negative ? " - " : " + ") << piece;
        first = false;
    }
    return os.str();
}

}  // namespace jetcoh
