#include "jetcoh/catalogue.hpp"

#include "jetcoh/error.hpp"

#include <array>

namespace jetcoh {

namespace {

constexpr std::array<std::pair<Generator, std::string_view>, 8> kNames{{
    {Generator::cbar0, "cbar0"},
    {Generator::c0omega, "c0omega"},
    {Generator::c1, "c1"},
    {Generator::cbar1, "cbar1"},
    {Generator::c2, "c2"},
    {Generator::cbar2, "cbar2"},
    {Generator::c5, "c5"},
    {Generator::c7, "c7"},
}};

constexpr std::array<std::pair<Form, std::string_view>, 4> kForms{{
    {Form::flat, "flat"},
    {Form::connection, "connection"},
    {Form::covariant, "covariant"},
    {Form::omega, "omega"},
}};

DiffExpr T(int n, const JetLimits& l) { return jet(Family::T, n, l); }
DiffExpr R(int n, const JetLimits& l) { return jet(Family::R, n, l); }
DiffExpr q(long num, long den = 1) { return DiffExpr(make_rational(num, den)); }

bool barred(Generator g) { return g == Generator::cbar0 || g == Generator::cbar1 || g == Generator::cbar2; }

int flat_weight(Generator g) {
    switch (g) {
    case Generator::cbar0: return -1;
    case Generator::c0omega: return 1;
    case Generator::c1: return 1;
    case Generator::cbar1: return 0;
    case Generator::c2: return 2;
    case Generator::cbar2: return 1;
    case Generator::c5: return 5;
    case Generator::c7: return 7;
    }
    return 0;
}

DiffExpr flat_expr(Generator g, const JetLimits& l) {
    switch (g) {
    case Generator::cbar0: return det_expr(0, 1, l);
    case Generator::c0omega: return q(1, 2) * det_expr(0, 3, l);
    case Generator::c1: return det_expr(1, 2, l);
    case Generator::cbar1: return det_expr(0, 2, l);
    case Generator::c2: return det_expr(1, 3, l);
    case Generator::cbar2: return det_expr(0, 3, l);
    case Generator::c5: return det_expr(3, 4, l);
    case Generator::c7: return q(2) * det_expr(3, 6, l) - q(9) * det_expr(4, 5, l);
    }
    return {};
}

DiffExpr connection_expr(Generator g, const JetLimits& l) {
    auto d = [&](int p, int r) { return det_expr(p, r, l); };
    switch (g) {
    case Generator::cbar0: return d(0, 1);
    case Generator::c0omega: return q(1, 2) * d(0, 3) - R(0, l) * d(0, 1);
    case Generator::c1: return d(1, 2) - T(0, l) * d(0, 2) + (R(0, l) - q(1, 2) * T(0, l) * T(0, l)) * d(0, 1);
    case Generator::cbar1: return d(0, 2) - T(0, l) * d(0, 1);
    case Generator::c2: return d(1, 3) - T(0, l) * d(0, 3) - (q(2) * T(0, l) * R(0, l) - R(1, l)) * d(0, 1);
    case Generator::cbar2: return d(0, 3) - q(2) * R(0, l) * d(0, 1);
    case Generator::c5:
        return d(3, 4) + R(2, l) * d(0, 3) + q(3) * R(1, l) * d(1, 3) + q(2) * R(0, l) * d(2, 3) +
               (q(2) * R(0, l) * R(1, l) - q(3) * R(1, l) * R(1, l)) * d(0, 1) - q(2) * R(0, l) * R(1, l) * d(0, 2) -
               R(1, l) * d(0, 4) - q(4) * R(0, l) * R(0, l) * d(1, 2) - q(2) * R(0, l) * d(1, 4);
    case Generator::c7: break;
    }
    throw InvalidArgument("no printed connection form for " + std::string(generator_name(g)));
}

DiffExpr covariant_expr(Generator g, const JetLimits& l) {
    auto d = [&](int p, int r) { return covariant_det(p, r, l); };
    switch (g) {
    case Generator::cbar0: return d(0, 1);
    case Generator::c1: return d(1, 2);
    case Generator::cbar1: return d(0, 2);
    case Generator::c2: return d(1, 3);
    case Generator::cbar2: return d(0, 3);
    case Generator::c5: return d(3, 4);
    case Generator::c7: return q(2) * d(3, 6) - q(9) * d(4, 5);
    case Generator::c0omega: break;
    }
    throw InvalidArgument("no covariant form for " + std::string(generator_name(g)));
}

}  // namespace

std::string_view generator_name(Generator g) {
    for (const auto& [k, v] : kNames)
        if (k == g) return v;
    return "?";
}

std::optional<Generator> generator_from_name(std::string_view name) {
    for (const auto& [k, v] : kNames)
        if (v == name) return k;
    return std::nullopt;
}

std::string_view form_name(Form f) {
    for (const auto& [k, v] : kForms)
        if (k == f) return v;
    return "?";
}

std::optional<Form> form_from_name(std::string_view name) {
    for (const auto& [k, v] : kForms)
        if (v == name) return k;
    return std::nullopt;
}

const std::vector<Generator>& all_generators() {
    static const std::vector<Generator> all = [] {
        std::vector<Generator> v;
        for (const auto& [k, _] : kNames) v.push_back(k);
        return v;
    }();
    return all;
}

int generator_lambda(Generator g) {
    switch (g) {
    case Generator::cbar0:
    case Generator::c0omega: return 0;
    case Generator::c1:
    case Generator::cbar1: return 1;
    case Generator::c2:
    case Generator::cbar2: return 2;
    case Generator::c5: return 5;
    case Generator::c7: return 7;
    }
    return 0;
}

DiffExpr covariant_det(int p, int r, const JetLimits& l) {
    if (p < 0 || p >= r) throw InvalidArgument("covariant det needs 0 <= p < q");
    const Density F(DiffExpr(JetSymbol{Family::f, 0}), -1);
    const Density G(DiffExpr(JetSymbol{Family::g, 0}), -1);
    const DiffExpr fp = covariant_derivative(F, p, l).coeff, fr = covariant_derivative(F, r, l).coeff;
    const DiffExpr gp = covariant_derivative(G, p, l).coeff, gr = covariant_derivative(G, r, l).coeff;
    return fp * gr - fr * gp;
}

Cochain2 c7_symbol(const JetLimits& limits) {
    return Cochain2::make(flat_expr(Generator::c7, limits), 7, Coefficient(Rational(7)));
}

Cochain2 c7_covariant_as_printed(const JetLimits& l) {
    DiffExpr e = q(2) * covariant_det(3, 4, l) - q(9) * covariant_det(4, 5, l);
    return Cochain2::make(std::move(e), 5, Coefficient(Rational(7)));
}

CatalogueEntry catalogue(Generator g, Form form, const std::optional<Cochain2>& derived_c7, const JetLimits& limits) {
    CatalogueEntry entry;
    entry.generator = g;
    entry.form = form;
    const int lam = generator_lambda(g);
    int weight = flat_weight(g);
    DiffExpr e;
    switch (form) {
    case Form::flat: e = flat_expr(g, limits); break;
    case Form::connection:
        if (g == Generator::c7) {
            if (!derived_c7) throw InvalidArgument("connection form of c7 is only available after solve_corrections");
            if (derived_c7->value_weight != 7) throw InvalidArgument("derived c7 has the wrong weight");
            e = derived_c7->coeff;
        } else {
            e = connection_expr(g, limits);
        }
        break;
    case Form::covariant: e = covariant_expr(g, limits); break;
    case Form::omega:
        if (!barred(g)) throw InvalidArgument(std::string(generator_name(g)) + " has no omega-paired form");
        e = connection_expr(g, limits) * DiffExpr(JetSymbol{Family::w, 0});
        weight += 1;
        break;
    }
    if (g == Generator::c0omega) {
        entry.mode = ActionMode::trivial;
        entry.integrated = true;
        entry.omega_deficit = -1;
    } else {
        entry.omega_deficit = lam - weight;
        if (entry.omega_deficit != (barred(g) && form != Form::omega ? 1 : 0))
            throw InvalidArgument("weight and module parameter disagree for " + std::string(generator_name(g)));
    }
    entry.cochain = Cochain2::make(std::move(e), weight, Coefficient(Rational(lam)));
    return entry;
}

}  // namespace jetcoh
