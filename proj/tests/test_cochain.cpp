#include "jetcoh/catalogue.hpp"
#include "jetcoh/linear_system.hpp"
#include "support/random_expr.hpp"
#include "support/series_oracle.hpp"

#include <doctest.h>

#include <map>

using namespace jetcoh;

namespace {
DiffExpr J(Family f, int n) { return DiffExpr(JetSymbol{f, n}); }

// library δc evaluated on random concrete series vs the oracle's δ
void check_against_oracle(const Cochain2& c, const Rational& lam, std::mt19937& rng, ActionMode mode = ActionMode::lie,
                          int rounds = 3) {
    const Cochain2 cl = c.with_lambda(Coefficient(lam));
    const DiffExpr d = ce_differential(cl, mode);
    for (int i = 0; i < rounds; ++i) {
        const oracle::Data data = oracle::random_data(rng, 14);
        const oracle::Series lib = oracle::eval(d, data.fn(), lam, 14);
        const oracle::Series ref = oracle::delta(c.coeff, lam, data, 14, mode == ActionMode::lie);
        REQUIRE((lib - ref).is_zero());
    }
}

Cochain1 random_cochain1(std::mt19937& rng) {
    testsupport::ExprShape bg;
    bg.families = {Family::T, Family::R, Family::w};
    bg.max_order = 2;
    bg.terms = 2;
    bg.with_lambda = false;
    DiffExpr e;
    for (int i = 0; i <= 3; ++i) e += testsupport::rand_expr(rng, bg) * J(Family::f, i);
    if (e.is_zero()) e = J(Family::f, 2);
    const int w = std::uniform_int_distribution<int>(-1, 3)(rng);
    return Cochain1::make(e, w, Coefficient::lambda());
}
}  // namespace

TEST_CASE("det cochains") {
    const Cochain2 d01 = det_cochain(0, 1);
    CHECK(d01.coeff == J(Family::f, 0) * J(Family::g, 1) - J(Family::f, 1) * J(Family::g, 0));
    CHECK(d01.value_weight == -1);
    CHECK(det_cochain(3, 4).value_weight == 5);
    CHECK(det_cochain(3, 4).coeff == catalogue(Generator::c5, Form::flat).cochain.coeff);
    CHECK_THROWS_AS(det_cochain(1, 1), InvalidArgument);
    CHECK_THROWS_AS(det_cochain(2, 1), InvalidArgument);
}

TEST_CASE("cochain constructors validate shape") {
    CHECK_THROWS_AS(Cochain2::make(J(Family::f, 0) * J(Family::g, 0), 0, Coefficient(0)), InvalidArgument);
    CHECK_THROWS_AS(Cochain2::make(J(Family::f, 0) * J(Family::f, 1), 0, Coefficient(0)), InvalidArgument);
    CHECK_THROWS_AS(Cochain2::make(J(Family::f, 0) * J(Family::g, 1) * J(Family::k, 0), 0, Coefficient(0)),
                    InvalidArgument);
    CHECK_THROWS_AS(Cochain1::make(J(Family::f, 0) * J(Family::f, 0), 0, Coefficient(0)), InvalidArgument);
}

TEST_CASE("differential examples") {
    CHECK(ce_differential(det_cochain(0, 1)).is_zero());

    const DiffExpr d02 = ce_differential(det_cochain(0, 2));
    CHECK_FALSE(d02.is_zero());
    CHECK(d02.at_lambda(Rational(1)).is_zero());
    for (const Term& t : d02.terms()) {
        Coefficient q, r;
        Coefficient::divmod(t.coeff, Coefficient::lambda() - Coefficient(1), q, r);
        REQUIRE(r.is_zero());
    }

    for (int lam = -2; lam <= 8; ++lam) CHECK_FALSE(is_cocycle(det_cochain(0, 4).with_lambda(Coefficient(lam))));
}

TEST_CASE("lambda solutions of the determinant table") {
    const std::map<std::pair<int, int>, std::string> expected{
        {{0, 1}, "all"}, {{0, 2}, "{1}"}, {{0, 3}, "{2}"}, {{1, 2}, "all"}, {{1, 3}, "all"},
        {{0, 4}, "none"}, {{1, 4}, "none"}, {{2, 3}, "{3}"}, {{3, 4}, "{5}"}};
    for (const auto& [pq, want] : expected) {
        const LambdaSolutions s = lambda_solutions(det_cochain(pq.first, pq.second));
        CAPTURE(pq.first);
        CAPTURE(pq.second);
        CHECK(s.summary() == want);
    }
    const LambdaSolutions s12 = lambda_solutions(det_cochain(1, 2));
    CHECK_FALSE(s12.trivial_pointwise);
    REQUIRE(s12.trivial_integrated.has_value());
    CHECK(*s12.trivial_integrated);
    CHECK(s12.contains(Rational(1)));

    const LambdaSolutions s23 = lambda_solutions(det_cochain(2, 3));
    CHECK(s23.contains(Rational(3)));
    CHECK_FALSE(s23.contains(Rational(2)));
    CHECK_FALSE(*s23.trivial_integrated);
}

TEST_CASE("det(1,2) is a cocycle for every lambda on concrete series") {
    std::mt19937 rng(31);
    for (int lam : {-3, 0, 1, 2, 7}) check_against_oracle(det_cochain(1, 2), Rational(lam), rng);
}

TEST_CASE("differential matches the series oracle") {
    std::mt19937 rng(32);
    for (auto [p, q] : {std::pair{0, 2}, {0, 4}, {2, 3}, {1, 4}, {3, 4}})
        check_against_oracle(det_cochain(p, q), testsupport::rand_q(rng), rng);
    for (Generator g : {Generator::c1, Generator::c2, Generator::cbar2, Generator::c5}) {
        const CatalogueEntry e = catalogue(g, Form::connection);
        check_against_oracle(e.cochain, Rational(generator_lambda(g)), rng);
    }
    const CatalogueEntry om = catalogue(Generator::cbar1, Form::omega);
    check_against_oracle(om.cochain, Rational(1), rng);
    check_against_oracle(det_cochain(1, 2), Rational(0), rng, ActionMode::trivial);
}

TEST_CASE("coboundary examples") {
    // identity on the adjoint module: [f,g] - [g,f] - [f,g] = [f,g]
    const Cochain1 ident = Cochain1::make(J(Family::f, 0), -1, Coefficient(-1));
    CHECK(coboundary(ident).coeff == det_expr(0, 1));
    const Cochain1 deriv = Cochain1::make(J(Family::f, 1), 0, Coefficient(0));
    CHECK(coboundary(deriv).coeff.is_zero());
}

TEST_CASE("delta squared vanishes on random 1-cochains") {
    std::mt19937 rng(33);
    for (int i = 0; i < 20; ++i) {
        const Cochain1 b = random_cochain1(rng);
        const Cochain2 db = coboundary(b);
        REQUIRE(ce_differential(db).is_zero());

        const Rational lam = testsupport::rand_q(rng);
        const oracle::Data data = oracle::random_data(rng, 12);
        const oracle::Series& f = data.base.at(Family::f);
        const oracle::Series& g = data.base.at(Family::g);
        auto B = [&](const oracle::Series& x) {
            oracle::Data d = data;
            d.base[Family::f] = x;
            return oracle::eval(b.coeff, d.fn(), lam, 12);
        };
        const oracle::Series ref =
            oracle::act(f, B(g), lam) - oracle::act(g, B(f), lam) - B(oracle::bracket(f, g));
        const oracle::Series lib = oracle::eval(db.coeff, data.fn(), lam, 12);
        REQUIRE((lib - ref).is_zero());
    }
}

TEST_CASE("total derivative test") {
    std::mt19937 rng(34);
    testsupport::ExprShape shape;
    shape.with_lambda = false;
    for (int i = 0; i < 40; ++i) {
        const DiffExpr e = testsupport::rand_expr(rng, shape);
        const DiffExpr de = total_derivative(e);
        if (de.is_zero()) continue;
        REQUIRE(is_total_derivative(de));
    }
    CHECK_FALSE(is_total_derivative(J(Family::f, 0).pow(2)));
    CHECK(is_total_derivative(J(Family::f, 0) * J(Family::f, 1)));
    CHECK_FALSE(is_total_derivative(J(Family::f, 0) * J(Family::g, 1)));
    CHECK(is_total_derivative(J(Family::f, 0) * J(Family::g, 1) + J(Family::f, 1) * J(Family::g, 0)));
}

TEST_CASE("flat catalogue entries are cocycles at their lambda") {
    for (Generator g : all_generators()) {
        const CatalogueEntry e = catalogue(g, Form::flat);
        CAPTURE(generator_name(g));
        if (e.integrated)
            CHECK(is_total_derivative(ce_differential(e.cochain, e.mode)));
        else
            CHECK(is_cocycle(e.cochain, e.mode));
    }
}

TEST_CASE("c7 ratio is forced") {
    const Coefficient seven(Rational(7));
    const DiffExpr a = ce_differential(det_cochain(3, 6).with_lambda(seven));
    const DiffExpr b = ce_differential(det_cochain(4, 5).with_lambda(seven));
    CHECK_FALSE(a.is_zero());
    CHECK_FALSE(b.is_zero());
    SparseLinearSystem sys(2);
    for (const Term& t : a.terms()) sys.add_equation({{0, t.coeff.constant()}, {1, b.coefficient_of(t.mono).constant()}});
    for (const Term& t : b.terms()) sys.add_equation({{0, a.coefficient_of(t.mono).constant()}, {1, t.coeff.constant()}});
    const LinearSolution s = sys.solve();
    REQUIRE(s.nullspace.size() == 1);
    const auto& v = s.nullspace[0];
    CHECK(v[0] * Rational(-9) == v[1] * Rational(2));
}

TEST_CASE("catalogue names and errors") {
    for (Generator g : all_generators()) CHECK(generator_from_name(generator_name(g)) == g);
    CHECK_FALSE(generator_from_name("c3").has_value());
    CHECK(form_from_name("omega") == Form::omega);
    CHECK_THROWS_AS(catalogue(Generator::c7, Form::connection), InvalidArgument);
    CHECK_THROWS_AS(catalogue(Generator::c5, Form::omega), InvalidArgument);
    const CatalogueEntry k = catalogue(Generator::c0omega, Form::connection);
    CHECK(k.cochain.value_weight == 1);
    CHECK(k.cochain.coeff == DiffExpr(make_rational(1, 2)) * det_expr(0, 3) - J(Family::R, 0) * det_expr(0, 1));
    CHECK(catalogue(Generator::c7, Form::flat).cochain.coeff == DiffExpr(2) * det_expr(3, 6) - DiffExpr(9) * det_expr(4, 5));
}
