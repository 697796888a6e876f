#include "jetcoh/cochain.hpp"

#include "jetcoh/error.hpp"

#include <sstream>

namespace jetcoh {

namespace {

DiffExpr swap_fg(const DiffExpr& e) {
    return substitute(e, {{Family::f, DiffExpr(JetSymbol{Family::g, 0})}, {Family::g, DiffExpr(JetSymbol{Family::f, 0})}},
                      JetLimits{kJetSlots - 1});
}

void require_only(const DiffExpr& e, std::initializer_list<Family> banned, const char* what) {
    for (Family fam : banned)
        if (e.contains(fam))
            throw InvalidArgument(std::string(what) + " may not contain " + std::string(family_name(fam)) + "-jets");
}

}  // namespace

Cochain2 Cochain2::make(DiffExpr coeff, int value_weight, Coefficient module_lambda) {
    require_only(coeff, {Family::k}, "2-cochain");
    if (!coeff.homogeneous_in(Family::f, 1) || !coeff.homogeneous_in(Family::g, 1))
        throw InvalidArgument("2-cochain is not bilinear in (f, g): " + coeff.to_string());
    if (!(swap_fg(coeff) == -coeff)) throw InvalidArgument("2-cochain is not antisymmetric: " + coeff.to_string());
    return Cochain2{std::move(coeff), value_weight, std::move(module_lambda)};
}

Cochain2 Cochain2::with_lambda(Coefficient lam) const {
    Cochain2 r = *this;
    r.module_lambda = std::move(lam);
    return r;
}

Cochain1 Cochain1::make(DiffExpr coeff, int value_weight, Coefficient module_lambda) {
    require_only(coeff, {Family::g, Family::k}, "1-cochain");
    if (!coeff.homogeneous_in(Family::f, 1)) throw InvalidArgument("1-cochain is not linear in f: " + coeff.to_string());
    return Cochain1{std::move(coeff), value_weight, std::move(module_lambda)};
}

DiffExpr det_expr(int p, int q, const JetLimits& limits) {
    if (p < 0 || p >= q)
        throw InvalidArgument("det(" + std::to_string(p) + "," + std::to_string(q) + ") needs 0 <= p < q");
    const DiffExpr fp = jet(Family::f, p, limits), fq = jet(Family::f, q, limits);
    const DiffExpr gp = jet(Family::g, p, limits), gq = jet(Family::g, q, limits);
    return fp * gq - fq * gp;
}

Cochain2 det_cochain(int p, int q, const JetLimits& limits) {
    return Cochain2{det_expr(p, q, limits), p + q - 2, Coefficient::lambda()};
}

DiffExpr apply(const Cochain2& c, const DiffExpr& x, const DiffExpr& y, const JetLimits& limits) {
    return substitute(c.coeff, {{Family::f, x}, {Family::g, y}}, limits);
}

DiffExpr apply(const Cochain1& b, const DiffExpr& x, const JetLimits& limits) {
    return substitute(b.coeff, {{Family::f, x}}, limits);
}

DiffExpr ce_differential(const Cochain2& c, ActionMode mode, const JetLimits& limits) {
    const Density F(DiffExpr(JetSymbol{Family::f, 0}), -1);
    const Density G(DiffExpr(JetSymbol{Family::g, 0}), -1);
    const Density K(DiffExpr(JetSymbol{Family::k, 0}), -1);
    auto value = [&](const Density& x, const Density& y) { return Density(apply(c, x.coeff, y.coeff, limits), c.value_weight); };
    DiffExpr out;
    if (mode == ActionMode::lie) {
        out += lie_action(F, value(G, K), c.module_lambda, limits).coeff;
        out -= lie_action(G, value(F, K), c.module_lambda, limits).coeff;
        out += lie_action(K, value(F, G), c.module_lambda, limits).coeff;
    }
    out -= value(bracket(F, G, limits), K).coeff;
    out += value(bracket(F, K, limits), G).coeff;
    out -= value(bracket(G, K, limits), F).coeff;
    return out;
}

Cochain2 coboundary(const Cochain1& b, const JetLimits& limits) {
    const Density F(DiffExpr(JetSymbol{Family::f, 0}), -1);
    const Density G(DiffExpr(JetSymbol{Family::g, 0}), -1);
    const Density bf(b.coeff, b.value_weight);
    const Density bg(apply(b, G.coeff, limits), b.value_weight);
    DiffExpr out = lie_action(F, bg, b.module_lambda, limits).coeff - lie_action(G, bf, b.module_lambda, limits).coeff -
                   apply(b, bracket(F, G, limits).coeff, limits);
    return Cochain2{std::move(out), b.value_weight, b.module_lambda};
}

bool is_cocycle(const Cochain2& c, ActionMode mode, const JetLimits& limits) {
    return ce_differential(c, mode, limits).is_zero();
}

bool is_total_derivative(const DiffExpr& p, const JetLimits& limits) {
    if (p.contains(Family::h) || p.contains(Family::hinv))
        throw InvalidArgument("total-derivative test does not support transition jets");
    for (const auto& t : p.terms())
        if (t.mono.is_one()) return false;
    for (Family fam : {Family::f, Family::g, Family::k, Family::T, Family::R, Family::w}) {
        const int top = p.max_order(fam);
        DiffExpr euler;
        for (int n = 0; n <= top; ++n) {
            DiffExpr d = partial(p, JetSymbol{fam, n});
            d = total_derivative(d, n, limits);
            if (n % 2) euler -= d;
            else euler += d;
        }
        if (!euler.is_zero()) return false;
    }
    return true;
}

bool LambdaSolutions::contains(const Rational& lam) const {
    switch (kind) {
    case Kind::all: return true;
    case Kind::none: return false;
    case Kind::finite:
        for (const auto& v : values)
            if (v == lam) return true;
        return false;
    }
    return false;
}

std::string LambdaSolutions::summary() const {
    switch (kind) {
    case Kind::all: return "all";
    case Kind::none: return "none";
    case Kind::finite: {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i].get_str();
        os << "}";
        return os.str();
    }
    }
    return "?";
}

LambdaSolutions lambda_solutions(const Cochain2& c, const JetLimits& limits) {
    LambdaSolutions out;
    const DiffExpr delta = ce_differential(c.with_lambda(Coefficient::lambda()), ActionMode::lie, limits);
    Coefficient g;
    for (const auto& t : delta.terms()) g = Coefficient::gcd(g, t.coeff);
    out.gcd = g;
    if (delta.is_zero()) {
        out.kind = LambdaSolutions::Kind::all;
    } else {
        out.values = g.rational_roots();
        out.kind = out.values.empty() ? LambdaSolutions::Kind::none : LambdaSolutions::Kind::finite;
    }
    const DiffExpr trivial = ce_differential(c, ActionMode::trivial, limits);
    out.trivial_pointwise = trivial.is_zero();
    try {
        out.trivial_integrated = trivial.is_zero() || is_total_derivative(trivial);
    } catch (const OrderCapExceeded&) {
        out.trivial_integrated.reset();
    }
    return out;
}

}  // namespace jetcoh
