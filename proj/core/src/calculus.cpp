#include "jetcoh/calculus.hpp"

#include "jetcoh/error.hpp"

namespace jetcoh {

int Weight::as_int() const {
    if (!is_integer()) throw InvalidArgument("half-integer weight " + to_string() + " where an integer was required");
    return twice_ / 2;
}

std::string Weight::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

Density Density::with_weight(DiffExpr c, Weight w, bool allow_half_integer) {
    if (!w.is_integer() && !allow_half_integer)
        throw InvalidArgument("half-integer weight " + w.to_string() + " requires allow_half_integer");
    Density d;
    d.coeff = std::move(c);
    d.weight = w;
    return d;
}

namespace {
void require_vector_field(const Density& d, const char* what) {
    if (!d.is_vector_field())
        throw InvalidArgument(std::string(what) + ": expected a vector field (weight -1), got weight " + d.weight.to_string());
}
}  // namespace

Density lie_action(const Density& field, const Density& a, const Coefficient& module_lambda, const JetLimits& limits) {
    require_vector_field(field, "lie_action");
    Density r = a;
    r.coeff = field.coeff * total_derivative(a.coeff, limits) +
              (total_derivative(field.coeff, limits) * a.coeff).scaled(module_lambda);
    return r;
}

Density bracket(const Density& x, const Density& y, const JetLimits& limits) {
    require_vector_field(x, "bracket");
    require_vector_field(y, "bracket");
    return Density(x.coeff * total_derivative(y.coeff, limits) - total_derivative(x.coeff, limits) * y.coeff, -1);
}

DiffExpr schwarzian(const JetLimits& limits) {
    const DiffExpr h2 = jet(Family::h, 2, limits), h3 = jet(Family::h, 3, limits);
    const DiffExpr hinv = hinv_symbol();
    return h3 * hinv - (h2 * h2 * hinv * hinv).scaled(make_rational(3, 2));
}

DiffExpr eta() { return DiffExpr(JetSymbol{Family::h, 2}) * DiffExpr(hinv_symbol()); }

Density covariant_derivative(const Density& a, const JetLimits& limits) {
    Density r = a;
    r.coeff = total_derivative(a.coeff, limits) +
              (DiffExpr(jet(Family::T, 0, limits)) * a.coeff).scaled(a.weight.as_rational());
    r.weight = a.weight + Weight(1);
    return r;
}

Density covariant_derivative(const Density& a, int times, const JetLimits& limits) {
    Density r = a;
    for (int i = 0; i < times; ++i) r = covariant_derivative(r, limits);
    return r;
}

DiffExpr induced_projective_connection(const JetLimits& limits) {
    const DiffExpr t0 = jet(Family::T, 0, limits), t1 = jet(Family::T, 1, limits);
    return t1 + (t0 * t0).scaled(make_rational(1, 2));
}

Density density_product(const Density& a, const Density& b) {
    Density r;
    r.coeff = a.coeff * b.coeff;
    r.weight = a.weight + b.weight;
    return r;
}

Density action_via_nabla(const Density& field, const Density& a, const JetLimits& limits) {
    require_vector_field(field, "action_via_nabla");
    Density r = a;
    r.coeff = field.coeff * covariant_derivative(a, limits).coeff +
              (covariant_derivative(field, limits).coeff * a.coeff).scaled(a.weight.as_rational());
    return r;
}

}  // namespace jetcoh
