// Acceptance runner: one PASS/FAIL line per criterion, exact arithmetic only.
// `acceptance` runs everything, `acceptance --criterion N` runs one.

#include "jetcoh/linear_system.hpp"
#include "jetcoh/parser.hpp"
#include "jetcoh/suite.hpp"
#include "jetcoh/witt.hpp"
#include "support/random_expr.hpp"
#include "support/series_oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace jetcoh;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
    }
};

DiffExpr J(Family f, int n) { return DiffExpr(JetSymbol{f, n}); }

std::string clip(const std::string& s, std::size_t n = 160) {
    return s.size() <= n ? s : s.substr(0, n) + " ...";
}

const ChartFrame& frame() {
    static const ChartFrame fr;
    return fr;
}

// identities that passed symbolically, re-checked on random jets by the series oracle
struct OracleClaim {
    std::string name;
    std::function<bool(std::mt19937&)> holds_at_random_point;
};
std::vector<OracleClaim>& claims() {
    static std::vector<OracleClaim> c;
    return c;
}

void claim_cocycle(const std::string& name, const Cochain2& c, const Rational& lam, bool act) {
    const DiffExpr coeff = c.coeff;
    claims().push_back({name + " cocycle", [coeff, lam, act](std::mt19937& rng) {
                            const oracle::Data d = oracle::random_data(rng, 11);
                            return oracle::delta(coeff, lam, d, 11, act)[0] == 0;
                        }});
}

void claim_global(const std::string& name, const DiffExpr& e, int weight) {
    claims().push_back({name + " global", [e, weight](std::mt19937& rng) {
                            const oracle::Data d = oracle::random_data(rng, 12);
                            return oracle::global_defect(e, weight, d, 12)[0] == 0;
                        }});
}

// ------------------------------------------------------------------ 1

Outcome criterion1() {
    Outcome o;
    struct Row {
        int p, q;
        std::string want;
        bool trivial;
    };
    const std::vector<Row> rows{{0, 1, "all", false}, {0, 2, "{1}", false}, {0, 3, "{2}", false},
                                {1, 2, "none", true}, {1, 3, "all", false}, {0, 4, "none", false},
                                {1, 4, "none", false}, {2, 3, "{3}", false}, {3, 4, "{5}", false}};
    for (const Row& r : rows) {
        const LambdaSolutions s = lambda_solutions(det_cochain(r.p, r.q));
        const bool trivial = s.trivial_pointwise || s.trivial_integrated.value_or(false);
        bool ok = s.summary() == r.want && (!r.trivial || trivial);
        std::ostringstream msg;
        msg << "det(" << r.p << "," << r.q << "): lam in " << s.summary() << ", expected " << r.want;
        if (r.trivial) msg << " with trivial-action pass (trivial action: " << (trivial ? "pass" : "fail") << ")";
        if (!ok) msg << "; gcd of the differential " << s.gcd.to_string();
        o.require(ok, msg.str());
    }
    return o;
}

// ------------------------------------------------------------------ 2

Outcome criterion2() {
    Outcome o;
    for (Generator g : {Generator::cbar0, Generator::c1, Generator::cbar1, Generator::c2, Generator::cbar2,
                        Generator::c5, Generator::c7}) {
        const CatalogueEntry e = catalogue(g, Form::flat);
        const DiffExpr d = ce_differential(e.cochain, e.mode);
        o.require(d.is_zero(), std::string(generator_name(g)) + " flat, lam = " +
                                   std::to_string(generator_lambda(g)) + ": differential " +
                                   (d.is_zero() ? "0" : clip(print_expr(d))));
        if (d.is_zero()) claim_cocycle(std::string(generator_name(g)) + " flat", e.cochain,
                                       Rational(generator_lambda(g)), true);
    }
    const Coefficient seven(Rational(7));
    const DiffExpr a = ce_differential(det_cochain(3, 6).with_lambda(seven));
    const DiffExpr b = ce_differential(det_cochain(4, 5).with_lambda(seven));
    o.require(!a.is_zero() && !b.is_zero(), "det(3,6) and det(4,5) alone are not lam = 7 cocycles");
    SparseLinearSystem sys(2);
    for (const Term& t : a.terms()) sys.add_equation({{0, t.coeff.constant()}, {1, b.coefficient_of(t.mono).constant()}});
    for (const Term& t : b.terms()) sys.add_equation({{0, a.coefficient_of(t.mono).constant()}, {1, t.coeff.constant()}});
    const LinearSolution s = sys.solve();
    bool ratio = s.nullspace.size() == 1 && s.nullspace[0][0] * Rational(-9) == s.nullspace[0][1] * Rational(2);
    o.require(ratio, "a det(3,6) + b det(4,5) cocycle at lam = 7: solution space of dimension " +
                         std::to_string(s.nullspace.size()) + ", spanned by 2 : -9");
    return o;
}

// ------------------------------------------------------------------ 3

Outcome criterion3() {
    Outcome o;
    for (Generator g : {Generator::cbar0, Generator::cbar1, Generator::c1, Generator::cbar2, Generator::c2,
                        Generator::c5, Generator::c0omega}) {
        const CatalogueEntry e = catalogue(g, Form::connection);
        const GlobalityVerdict v = is_global(e.cochain, frame());
        std::string msg = std::string(generator_name(g)) + " at weight " + std::to_string(e.cochain.value_weight) +
                          ": " + (v.global ? "global" : "not global, residual " + clip(print_expr(v.residual)));
        if (!v.global) {
            const CorrectionResult r = solve_corrections(
                Cochain2::make(catalogue(g, Form::flat).cochain.coeff, e.cochain.value_weight,
                               Coefficient(Rational(generator_lambda(g)))),
                e.cochain.value_weight, Rational(generator_lambda(g)));
            if (r.feasible) msg += "; solver-corrected form " + det_form(r.representative->coeff);
        } else {
            claim_global(std::string(generator_name(g)), e.cochain.coeff, e.cochain.value_weight);
        }
        o.require(v.global, msg);
    }
    for (auto [p, q, w] : {std::tuple{1, 2, 1}, {0, 2, 0}, {0, 3, 1}}) {
        const GlobalityVerdict v = is_global(det_expr(p, q), w, frame());
        o.require(!v.global && !v.residual.is_zero(),
                  "naked det(" + std::to_string(p) + "," + std::to_string(q) + ") at weight " + std::to_string(w) +
                      ": " + (v.global ? "unexpectedly global" : "fails, residual has " +
                                                                  std::to_string(v.residual.size()) + " terms"));
    }
    return o;
}

// ------------------------------------------------------------------ 4

Outcome criterion4() {
    Outcome o;
    auto check = [&](Generator g, Form f) {
        const CatalogueEntry e = catalogue(g, f);
        const DiffExpr d = ce_differential(e.cochain, e.mode);
        o.require(d.is_zero(), std::string(generator_name(g)) + " " + std::string(form_name(f)) + " form at lam = " +
                                   std::to_string(generator_lambda(g)) + ": differential " +
                                   (d.is_zero() ? "0" : clip(print_expr(d))));
        if (d.is_zero())
            claim_cocycle(std::string(generator_name(g)) + " " + std::string(form_name(f)), e.cochain,
                          Rational(generator_lambda(g)), e.mode == ActionMode::lie);
    };
    for (Generator g : {Generator::c1, Generator::cbar1, Generator::c2, Generator::cbar2, Generator::c5})
        check(g, Form::connection);
    for (Generator g : {Generator::cbar0, Generator::cbar1, Generator::cbar2}) check(g, Form::omega);
    return o;
}

// ------------------------------------------------------------------ 5

Outcome criterion5() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const CorrectionResult& r = derived_c7();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(r.feasible, "correction of 2 det(3,6) - 9 det(4,5) at weight 7: " +
                              std::string(r.feasible ? "feasible" : "infeasible") + " (" +
                              std::to_string(r.unknowns) + " unknowns, " + std::to_string(r.equations) +
                              " equations, rank " + std::to_string(r.rank) + ")");
    if (!r.feasible) return o;
    const Cochain2& c7 = *r.representative;
    const GlobalityVerdict g = is_global(c7, frame());
    o.require(g.global, "representative is global of weight 7");
    const bool cocycle = is_cocycle(c7);
    o.require(cocycle, "representative is a lam = 7 cocycle");
    o.require(!c7.coeff.is_zero(), "c7 = " + det_form(c7.coeff));
    o.notes.push_back("      solution space dimension " + std::to_string(r.dimension));
    char buf[64];
    std::snprintf(buf, sizeof buf, "      solve time %.1f s", secs);
    o.notes.push_back(buf);
    if (g.global) claim_global("c7 derived", c7.coeff, 7);
    if (cocycle) claim_cocycle("c7 derived", c7, Rational(7), true);
    return o;
}

// ------------------------------------------------------------------ 6

Outcome criterion6() {
    Outcome o;
    for (Generator g : {Generator::c1, Generator::cbar1, Generator::c2, Generator::cbar2, Generator::c5,
                        Generator::c7}) {
        std::optional<Cochain2> c7;
        if (g == Generator::c7) c7 = *derived_c7().representative;
        const EquivalenceVerdict v = covariant_equivalence(g, c7);
        std::string msg = std::string(generator_name(g)) +
                          (g == Generator::c7 ? " (nabla^3 paired with nabla^6, against the derived form)" : "") +
                          ": covariant vs connection form, " +
                          (v.pass ? "equal" : "differ by " + clip(print_expr(v.residual))) + " (" +
                          v.normalization + ")";
        o.require(v.pass, msg);
    }
    for (int lam : {0, 1, 2, 5, 7}) {
        const Density fld(J(Family::f, 0), -1);
        const Density a(J(Family::w, 0) * J(Family::R, 1) + J(Family::k, 2), lam);
        const bool same = action_via_nabla(fld, a).coeff == lie_action(fld, a, Coefficient(Rational(lam))).coeff;
        o.require(same, "f nabla a + lam (nabla f) a equals f a' + lam f' a at weight " + std::to_string(lam));
        const DiffExpr lhs = action_via_nabla(fld, a).coeff;
        claims().push_back({"action via nabla, weight " + std::to_string(lam), [lhs, a, lam](std::mt19937& rng) {
                                const oracle::Data d = oracle::random_data(rng, 6);
                                const oracle::Series& f = d.base.at(Family::f);
                                const oracle::Series av = oracle::eval(a.coeff, d.fn(), Rational(0), 6);
                                const oracle::Series ref = oracle::act(f, av, Rational(lam));
                                return (oracle::eval(lhs, d.fn(), Rational(0), 6) - ref)[0] == 0;
                            }});
    }
    return o;
}

// ------------------------------------------------------------------ 7

Outcome criterion7() {
    Outcome o;
    o.require(kn_value(1, -1) == 0, "kn(1,-1) = 0");
    const Rational base = kn_value(2, -2);
    o.require(base != 0, "kn(2,-2) = " + base.get_str());
    bool ratios = true;
    for (int m = 2; m <= 10; ++m) ratios = ratios && kn_value(m, -m) / base == make_rational(m * m * m - m, 6);
    o.require(ratios, "kn(m,-m) / kn(2,-2) = (m^3 - m)/6 for m = 2..10");
    bool off = true;
    for (int m = -10; m <= 10; ++m)
        for (int n = -10; n <= 10; ++n)
            if (m + n != 0) off = off && kn_value(m, n) == 0;
    o.require(off, "kn(m,n) = 0 off the diagonal m + n = 0 for |m|,|n| <= 10");
    const Cochain2 integrand = catalogue(Generator::c0omega, Form::flat).cochain;
    bool residue = true;
    for (int m = -6; m <= 6; ++m)
        for (int n = -6; n <= 6; ++n) residue = residue && residue_pair(evaluate_cochain(integrand, m, n)) == kn_value(m, n);
    o.require(residue, "residue of the integrand agrees with kn on |m|,|n| <= 6");
    return o;
}

// ------------------------------------------------------------------ 8

Outcome criterion8() {
    Outcome o;
    const Cochain2 integrand = catalogue(Generator::c0omega, Form::flat).cochain;
    const Certificate kn = nontriviality_certificate(integrand, Rational(0), 6, CertificateModule::residue);
    o.require(kn.nontrivial, "kn cocycle, trivial action on constants, window 6: " +
                                 std::string(kn.nontrivial ? "NONTRIVIAL" : "INCONCLUSIVE"));
    const Certificate c5 = nontriviality_certificate(catalogue(Generator::c5, Form::flat).cochain, Rational(5), 6);
    o.require(c5.nontrivial, "c5 at lam = 5, window 6: " + std::string(c5.nontrivial ? "NONTRIVIAL" : "INCONCLUSIVE"));
    int inconclusive = 0, total = 0;
    for (int j = 0; j <= 4; ++j) {
        const Cochain1 b = Cochain1::make(J(Family::f, j), j - 1, Coefficient::lambda());
        const Cochain2 db = coboundary(b);
        for (int lam : {0, 1, 2, 5}) {
            ++total;
            if (!nontriviality_certificate(db, Rational(lam), 6).nontrivial) ++inconclusive;
        }
    }
    o.require(inconclusive == total, std::to_string(inconclusive) + " of " + std::to_string(total) +
                                         " machine-generated coboundaries INCONCLUSIVE");
    return o;
}

// ------------------------------------------------------------------ 9

Outcome criterion9() {
    Outcome o;
    std::mt19937 rng(20261015);
    testsupport::ExprShape shape;
    shape.with_h = true;

    bool ring = true, ring_eval = true;
    for (int i = 0; i < 1000; ++i) {
        const DiffExpr a = testsupport::rand_expr(rng, shape), b = testsupport::rand_expr(rng, shape),
                       c = testsupport::rand_expr(rng, shape);
        ring = ring && (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
               a * (b + c) == a * b + a * c && a * DiffExpr(1) == a && (a - a).is_zero();
        const EvalPoint p = testsupport::rand_point(rng, 4);
        const Rational va = eval_rational(a, p), vb = eval_rational(b, p), vc = eval_rational(c, p);
        ring_eval = ring_eval && eval_rational(a * (b + c), p) == va * (vb + vc) &&
                    eval_rational(a - b, p) == va - vb;
    }
    o.require(ring, "commutative ring axioms on 1000 random triples");
    o.require(ring_eval, "eval_rational is a ring homomorphism on the same triples");

    bool leibniz = true, subst = true, trip = true, deriv_oracle = true;
    for (int i = 0; i < 200; ++i) {
        const DiffExpr a = testsupport::rand_expr(rng, shape), b = testsupport::rand_expr(rng, shape);
        leibniz = leibniz && total_derivative(a * b) == total_derivative(a) * b + a * total_derivative(b);
        trip = trip && parse_expr(print_expr(a)) == a;
        testsupport::ExprShape small;
        small.max_order = 2;
        const std::map<Family, DiffExpr> beta{{Family::f, testsupport::rand_expr(rng, small)},
                                              {Family::R, testsupport::rand_expr(rng, small)}};
        subst = subst && substitute(total_derivative(a), beta) == total_derivative(substitute(a, beta));
        testsupport::ExprShape plain = shape;
        plain.with_lambda = false;
        const DiffExpr e = testsupport::rand_expr(rng, plain);
        const oracle::Data d = oracle::random_data(rng, 8);
        deriv_oracle = deriv_oracle && (oracle::eval(total_derivative(e), d.fn(), 0, 8) -
                                        oracle::eval(e, d.fn(), 0, 8).derivative()).is_zero();
    }
    o.require(leibniz, "Leibniz rule on 200 random pairs");
    o.require(subst, "substitution commutes with prolongation on 200 random cases");
    o.require(trip, "parse(print(e)) = e on 200 random expressions");
    o.require(deriv_oracle, "total derivative agrees with differentiated series on 200 random expressions");
    o.require(total_derivative(DiffExpr(hinv_symbol()) * J(Family::h, 1)).is_zero(), "D(hinv h[1]) = 0");

    if (claims().empty()) {
        // symbolic passes come from the other criteria; collect them when run alone
        criterion2();
        criterion3();
        criterion4();
        criterion6();
    }
    int points = 0, bad = 0;
    for (const OracleClaim& c : claims()) {
        int fails = 0;
        for (int i = 0; i < 100; ++i)
            if (!c.holds_at_random_point(rng)) ++fails;
        points += 100;
        bad += fails;
        if (fails) o.require(false, c.name + ": oracle disagrees at " + std::to_string(fails) + " of 100 points");
    }
    o.require(bad == 0, std::to_string(claims().size()) + " symbolic passes re-checked at 100 random rational points each (" +
                            std::to_string(points) + " points)");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::map<int, std::function<Outcome()>> all{{1, criterion1}, {2, criterion2}, {3, criterion3},
                                                      {4, criterion4}, {5, criterion5}, {6, criterion6},
                                                      {7, criterion7}, {8, criterion8}, {9, criterion9}};
    bool ok = true;
    for (const auto& [n, run] : all) {
        if (only && n != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out.require(false, std::string("error: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s (%.1f s)\n", n, out.pass ? "PASS" : "FAIL", secs);
        for (const auto& note : out.notes) std::printf("    %s\n", note.c_str());
        std::fflush(stdout);
        ok = ok && out.pass;
    }
    return ok ? 0 : 1;
}
