#include "jetcoh/calculus.hpp"
#include "support/random_expr.hpp"

#include <doctest.h>

using namespace jetcoh;

namespace {
DiffExpr J(Family f, int n) { return DiffExpr(JetSymbol{f, n}); }
Density field(Family f) { return Density(J(f, 0), -1); }
const DiffExpr& R_of_T() {
    static const DiffExpr r = induced_projective_connection();
    return r;
}
}  // namespace

TEST_CASE("lie action examples") {
    const Density a(J(Family::w, 0) * J(Family::T, 1), 2);
    const Density at0 = lie_action(field(Family::f), a, Coefficient(0));
    CHECK(at0.coeff == J(Family::f, 0) * total_derivative(a.coeff));
    CHECK(at0.weight == Weight(2));

    CHECK(lie_action(field(Family::f), field(Family::f), Coefficient(-1)).coeff.is_zero());

    const Density la = lie_action(field(Family::f), a, Coefficient::lambda());
    CHECK(la.coeff == J(Family::f, 0) * total_derivative(a.coeff) +
                          DiffExpr::lambda() * J(Family::f, 1) * a.coeff);

    CHECK_THROWS_AS(lie_action(a, a, Coefficient(1)), InvalidArgument);
}

TEST_CASE("bracket") {
    CHECK(bracket(field(Family::f), field(Family::f)).coeff.is_zero());
    CHECK(bracket(field(Family::f), field(Family::g)).coeff ==
          J(Family::f, 0) * J(Family::g, 1) - J(Family::f, 1) * J(Family::g, 0));
    const Density f = field(Family::f), g = field(Family::g), k = field(Family::k);
    const DiffExpr jac = bracket(bracket(f, g), k).coeff + bracket(bracket(g, k), f).coeff +
                         bracket(bracket(k, f), g).coeff;
    CHECK(jac.is_zero());
    CHECK_THROWS_AS(bracket(f, Density(J(Family::w, 0), 1)), InvalidArgument);
}

TEST_CASE("schwarzian") {
    const DiffExpr S = schwarzian();
    CHECK(S == J(Family::h, 3) * DiffExpr(hinv_symbol()) -
                   DiffExpr(make_rational(3, 2)) * J(Family::h, 2).pow(2) * DiffExpr(hinv_symbol()).pow(2));
    // affine transition
    const DiffExpr affine =
        substitute_table(S, [](JetSymbol s) -> std::optional<DiffExpr> {
            if (s.family == Family::h && s.order >= 2) return DiffExpr();
            return std::nullopt;
        });
    CHECK(affine.is_zero());

    EvalPoint p;
    for (int n = 1; n <= 3; ++n) p.set(JetSymbol{Family::h, n}, 1);
    CHECK(eval_rational(S, p) == make_rational(-1, 2));

    const DiffExpr e = eta();
    CHECK(S == total_derivative(e) - DiffExpr(make_rational(1, 2)) * e * e);
}

TEST_CASE("covariant derivative") {
    const Density phi(J(Family::w, 0) * J(Family::R, 0), 0);
    CHECK(covariant_derivative(phi).coeff == total_derivative(phi.coeff));

    const Density nf = covariant_derivative(field(Family::f));
    CHECK(nf.weight == Weight(0));
    CHECK(nf.coeff == J(Family::f, 1) - J(Family::T, 0) * J(Family::f, 0));

    const DiffExpr fg = J(Family::f, 0) * covariant_derivative(field(Family::g)).coeff -
                        nf.coeff * J(Family::g, 0);
    CHECK(fg == bracket(field(Family::f), field(Family::g)).coeff);

    std::mt19937 rng(21);
    testsupport::ExprShape shape;
    for (int i = 0; i < 30; ++i) {
        const int w = std::uniform_int_distribution<int>(-3, 4)(rng);
        const Density a(testsupport::rand_expr(rng, shape), w);
        const Density b = covariant_derivative(a, 2);
        REQUIRE(b.weight == Weight(w + 2));
        REQUIRE(b.coeff == covariant_derivative(covariant_derivative(a)).coeff);
    }
}

TEST_CASE("second covariant derivative on weight -1/2") {
    CHECK_THROWS_AS(Density::with_weight(J(Family::w, 0), Weight::from_twice(-1)), InvalidArgument);
    const Density phi = Density::with_weight(J(Family::w, 0), Weight::from_twice(-1), true);
    const Density n2 = covariant_derivative(phi, 2);
    CHECK(n2.weight == Weight::from_twice(3));
    // (∂² + ½R)φ with R the Γ-notation projective connection, R = -(T' + T²/2)
    const DiffExpr R_gamma = -R_of_T();
    CHECK(n2.coeff == J(Family::w, 2) + DiffExpr(make_rational(1, 2)) * R_gamma * J(Family::w, 0));
}

TEST_CASE("density product") {
    const Density x(J(Family::f, 0), -1), one(J(Family::w, 0), 1);
    CHECK(density_product(x, one).weight == Weight(0));
    CHECK(density_product(one, one).weight == Weight(2));
    const Density unit(DiffExpr(1), 0);
    const Density p = density_product(x, unit);
    CHECK(p.coeff == x.coeff);
    CHECK(p.weight == x.weight);
}

TEST_CASE("action through the covariant derivative") {
    std::mt19937 rng(22);
    testsupport::ExprShape shape;
    shape.with_lambda = false;
    for (int lam : {0, 1, 2, 5, 7}) {
        const Density a(testsupport::rand_expr(rng, shape) + J(Family::w, 3), lam);
        const Density via = action_via_nabla(field(Family::f), a);
        const Density direct = lie_action(field(Family::f), a, Coefficient(Rational(lam)));
        CHECK(via.coeff == direct.coeff);
        for (int i = 0; i < 20; ++i) {
            const EvalPoint p = testsupport::rand_point(rng, 8);
            REQUIRE(eval_rational(via.coeff, p) == eval_rational(direct.coeff, p));
        }
    }
    const Density phi(J(Family::w, 0), 0);
    CHECK(action_via_nabla(field(Family::f), phi).coeff == J(Family::f, 0) * J(Family::w, 1));
    CHECK_THROWS_AS(action_via_nabla(phi, phi), InvalidArgument);
}

TEST_CASE("induced projective connection") {
    CHECK(R_of_T() == J(Family::T, 1) + DiffExpr(make_rational(1, 2)) * J(Family::T, 0).pow(2));
}
