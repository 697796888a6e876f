#include "jetcoh/suite.hpp"

#include "jetcoh/error.hpp"
#include "jetcoh/linear_system.hpp"
#include "jetcoh/parser.hpp"
#include "jetcoh/witt.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace jetcoh {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 7> kSuites{{
    {Suite::all, "all"},
    {Suite::theorem1, "theorem1"},
    {Suite::table3, "table3"},
    {Suite::global, "global"},
    {Suite::covariant, "covariant"},
    {Suite::witt, "witt"},
    {Suite::nontrivial, "nontrivial"},
}};

std::string pad2(int v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

std::string lam_text(int r) { return std::to_string(r); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string show(const DiffExpr& e) {
    try {
        return det_form(e);
    } catch (const InvalidArgument&) {
        return print_expr(e);
    }
}

class Collector {
public:
    explicit Collector(std::vector<CheckRecord>& out) : out_(out) {}

    // Runs `fn`, which fills in the record; errors become FAIL records.
    void check(std::string id, std::string ref, std::string lambda, const std::function<void(CheckRecord&)>& fn) {
        CheckRecord r;
        r.check_id = std::move(id);
        r.paper_ref = std::move(ref);
        r.lambda = std::move(lambda);
        try {
            fn(r);
        } catch (const std::exception& e) {
            r.status = Status::fail;
            r.residual = std::string("error: ") + e.what();
        }
        if (r.status == Status::fail && r.residual.empty()) r.residual = "(no residual recorded)";
        out_.push_back(std::move(r));
    }

private:
    std::vector<CheckRecord>& out_;
};

std::string flat_ref(Generator g) {
    return "list of generators, " + std::string(generator_name(g));
}

// ------------------------------------------------------------------ theorem1

void theorem1_checks(Collector& col, const SuiteOptions& opt) {
    const JetLimits& L = opt.limits;
    for (Generator g : all_generators()) {
        const std::string name(generator_name(g));
        col.check("theorem1.flat." + name, flat_ref(g), lam_text(generator_lambda(g)), [&](CheckRecord& r) {
            const CatalogueEntry e = catalogue(g, Form::flat, std::nullopt, L);
            const DiffExpr d = ce_differential(e.cochain, e.mode, L);
            const bool ok = e.integrated ? is_total_derivative(d) : d.is_zero();
            r.description = name + " flat form " + show(e.cochain.coeff) +
                            (e.integrated ? ": trivial-action differential is a total derivative"
                                          : ": cocycle identity holds");
            r.status = ok ? Status::pass : Status::fail;
            if (!ok) r.residual = print_expr(d);
        });
    }

    col.check("theorem1.c7.ratio", "list of generators, c7", "7", [&](CheckRecord& r) {
        const Cochain2 a{det_expr(3, 6, L), 7, Coefficient(Rational(7))};
        const Cochain2 b{det_expr(4, 5, L), 7, Coefficient(Rational(7))};
        const DiffExpr da = ce_differential(a, ActionMode::lie, L), db = ce_differential(b, ActionMode::lie, L);
        SparseLinearSystem sys(2);
        std::map<std::string, std::vector<SparseLinearSystem::Entry>> rows;
        for (const auto& t : da.terms()) rows[t.mono.to_string()].emplace_back(0, t.coeff.constant());
        for (const auto& t : db.terms()) rows[t.mono.to_string()].emplace_back(1, t.coeff.constant());
        for (auto& [_, row] : rows) sys.add_equation(std::move(row));
        const LinearSolution sol = sys.solve();
        bool ratio = false;
        if (sol.nullspace.size() == 1) {
            const auto& v = sol.nullspace[0];
            ratio = v[0] * Rational(-9) == v[1] * Rational(2) && v[0] != 0;
        }
        r.description = "a*det(3,6) + b*det(4,5) is a cocycle at lam=7 on a space of dimension " +
                        std::to_string(sol.nullspace.size()) + ", spanned by a:b = 2:-9: " + yes_no(ratio) +
                        "; det(3,6) alone is a cocycle: " + yes_no(da.is_zero()) +
                        ", det(4,5) alone: " + yes_no(db.is_zero());
        const bool ok = ratio && !da.is_zero() && !db.is_zero();
        r.status = ok ? Status::pass : Status::fail;
        if (!ok) r.residual = "nullspace dimension " + std::to_string(sol.nullspace.size());
    });

    for (Generator g : {Generator::cbar0, Generator::c0omega, Generator::c1, Generator::cbar1, Generator::c2,
                        Generator::cbar2, Generator::c5}) {
        const std::string name(generator_name(g));
        col.check("theorem1.connection." + name, "cocycle property of the corrected expressions",
                  lam_text(generator_lambda(g)), [&](CheckRecord& r) {
                      const CatalogueEntry e = catalogue(g, Form::connection, std::nullopt, L);
                      const DiffExpr d = ce_differential(e.cochain, e.mode, L);
                      const bool ok = e.integrated ? is_total_derivative(d) : d.is_zero();
                      r.description = name + " with T, R as background jets" +
                                      (e.integrated ? ", trivial action modulo total derivatives" : "") +
                                      ": cocycle identity " + (ok ? "holds" : "fails");
                      r.status = ok ? Status::pass : Status::fail;
                      if (!ok) r.residual = print_expr(d);
                  });
    }
    for (Generator g : {Generator::cbar0, Generator::cbar1, Generator::cbar2}) {
        const std::string name(generator_name(g));
        col.check("theorem1.omega." + name, "omega-paired families", lam_text(generator_lambda(g)),
                  [&](CheckRecord& r) {
                      const CatalogueEntry e = catalogue(g, Form::omega, std::nullopt, L);
                      const DiffExpr d = ce_differential(e.cochain, e.mode, L);
                      r.description = name + " times w (weight " + std::to_string(e.cochain.value_weight) +
                                      "), w as background jet: cocycle identity " + (d.is_zero() ? "holds" : "fails");
                      r.status = d.is_zero() ? Status::pass : Status::fail;
                      if (!d.is_zero()) r.residual = print_expr(d);
                  });
    }
}

// ------------------------------------------------------------------ table3

void table3_checks(Collector& col, const SuiteOptions& opt) {
    for (const TableRow& row : determinant_table()) {
        const std::string id = "table3.det" + std::to_string(row.p) + std::to_string(row.q);
        col.check(id, "cocycle-property list, det(" + std::to_string(row.p) + "," + std::to_string(row.q) + ")",
                  "symbolic", [&](CheckRecord& r) {
                      const LambdaSolutions s = lambda_solutions(det_cochain(row.p, row.q, opt.limits), opt.limits);
                      const bool trivial = s.trivial_pointwise || s.trivial_integrated.value_or(false);
                      bool ok = s.summary() == row.expected;
                      if (row.expect_trivial) ok = ok && trivial;
                      std::string integ = s.trivial_integrated ? yes_no(*s.trivial_integrated) : "unknown";
                      r.description = "det(" + std::to_string(row.p) + "," + std::to_string(row.q) +
                                      ") is a cocycle for lam in " + s.summary() + " (expected " + row.expected +
                                      "); trivial action: pointwise " + yes_no(s.trivial_pointwise) +
                                      ", modulo total derivatives " + integ;
                      r.status = ok ? Status::pass : Status::fail;
                      if (!ok)
                          r.residual = "gcd over lam of the differential: " + s.gcd.to_string() + " (solutions " +
                                       s.summary() + ")";
                  });
    }
}

// ------------------------------------------------------------------ global

void global_checks(Collector& col, const SuiteOptions& opt, bool with_naked) {
    const JetLimits& L = opt.limits;
    ChartFrame frame(L);
    for (Generator g : {Generator::cbar0, Generator::c0omega, Generator::c1, Generator::cbar1, Generator::c2,
                        Generator::cbar2, Generator::c5}) {
        const std::string name(generator_name(g));
        col.check("global." + name, "transformation-behavior list, " + name, lam_text(generator_lambda(g)),
                  [&](CheckRecord& r) {
                      const CatalogueEntry e = catalogue(g, Form::connection, std::nullopt, L);
                      const GlobalityVerdict v = is_global(e.cochain, frame);
                      r.description = name + " = " + show(e.cochain.coeff) + " at weight " +
                                      std::to_string(e.cochain.value_weight);
                      r.status = v.global ? Status::pass : Status::fail;
                      if (!v.global) {
                          r.residual = print_expr(v.residual);
                          const Cochain2 sym = catalogue(g, Form::flat, std::nullopt, L).cochain;
                          const std::optional<Rational> lam = Rational(generator_lambda(g));
                          const CorrectionResult cr = solve_corrections(sym, e.cochain.value_weight, lam, L);
                          if (cr.representative)
                              r.description += "; not global. Corrected by the solver: " +
                                               show(cr.representative->coeff);
                      }
                  });
    }
    col.check("global.c7.derived", "omitted c7 formula; derived", "7", [&](CheckRecord& r) {
        const CorrectionResult& cr = derived_c7(L);
        if (!cr.feasible || !cr.representative) {
            r.status = Status::fail;
            r.residual = "correction system is inconsistent";
            r.description = "no global cocycle with symbol 2*det(3,6) - 9*det(4,5)";
            return;
        }
        const GlobalityVerdict v = is_global(*cr.representative, frame);
        const DiffExpr d = ce_differential(*cr.representative, ActionMode::lie, L);
        r.description = "c7 = " + show(cr.representative->coeff) + "; solution space dimension " +
                        std::to_string(cr.dimension) + " (" + std::to_string(cr.unknowns) + " unknowns, rank " +
                        std::to_string(cr.rank) + "); global at weight 7: " + yes_no(v.global) +
                        ", cocycle at lam=7: " + yes_no(d.is_zero());
        const bool ok = v.global && d.is_zero();
        r.status = ok ? Status::pass : Status::fail;
        if (!ok) r.residual = print_expr(v.residual + d);
    });
    if (!with_naked) return;
    for (auto [p, q, w] : {std::tuple{1, 2, 1}, std::tuple{0, 2, 0}, std::tuple{0, 3, 1}}) {
        const std::string id = "naked.det" + std::to_string(p) + std::to_string(q);
        col.check(id, "remark that uncorrected cocycles are not global", "symbolic", [&, p = p, q = q, w = w](CheckRecord& r) {
            const GlobalityVerdict v = is_global(det_expr(p, q, L), w, frame);
            r.description = "det(" + std::to_string(p) + "," + std::to_string(q) + ") at weight " +
                            std::to_string(w) + " is not global (nonzero residual expected): " + yes_no(!v.global);
            r.status = v.global ? Status::fail : Status::pass;
            r.residual = v.global ? "residual vanished" : print_expr(v.residual);
        });
    }
}

// ------------------------------------------------------------------ covariant

void covariant_checks(Collector& col, const SuiteOptions& opt) {
    const JetLimits& L = opt.limits;
    ChartFrame frame(L);
    for (Generator g : {Generator::cbar0, Generator::c1, Generator::cbar1, Generator::c2, Generator::cbar2,
                        Generator::c5, Generator::c7}) {
        const std::string name(generator_name(g));
        col.check("covariant." + name, "covariant formulation, " + name, lam_text(generator_lambda(g)),
                  [&](CheckRecord& r) {
                      std::optional<Cochain2> c7;
                      if (g == Generator::c7) c7 = derived_c7(L).representative;
                      const EquivalenceVerdict v = covariant_equivalence(g, c7, L);
                      r.description = name + ": covariant form against the connection form under " + v.normalization;
                      if (g == Generator::c7) r.description += " (derived connection form, nabla^3 paired with nabla^6)";
                      r.status = v.pass ? Status::pass : Status::fail;
                      if (!v.pass) {
                          r.residual = show(v.residual);
                          const CatalogueEntry cov = catalogue(g, Form::covariant, c7, L);
                          const Cochain2 sym = catalogue(g, Form::flat, std::nullopt, L).cochain;
                          const MembershipVerdict m = correction_membership(
                              cov.cochain, sym, cov.cochain.value_weight, Rational(generator_lambda(g)), frame);
                          r.description += "; the covariant form itself is global: " + yes_no(m.global) +
                                           ", a cocycle: " + yes_no(m.cocycle);
                          const CorrectionResult cr = solve_corrections(sym, cov.cochain.value_weight,
                                                                        Rational(generator_lambda(g)), L);
                          if (cr.representative) {
                              const DiffExpr d =
                                  cov.cochain.coeff - substitute(cr.representative->coeff,
                                                                 {{Family::R, induced_projective_connection(L)}}, L);
                              r.description += "; agrees with the solver-corrected form " +
                                               show(cr.representative->coeff) + ": " + yes_no(d.is_zero());
                          }
                      }
                  });
    }
    col.check("covariant.c7.as_printed", "covariant formulation, c7", "7", [&](CheckRecord& r) {
        const Cochain2 printed = c7_covariant_as_printed(L);
        const bool cocycle7 = is_cocycle(printed, ActionMode::lie, L);
        const bool global7 = is_global(printed.coeff, 7, frame).global;
        r.description = "2|nabla^3;nabla^4| - 9|nabla^4;nabla^5| has weight 5; cocycle at lam=7: " + yes_no(cocycle7) +
                        ", global of weight 7: " + yes_no(global7) + ". Read as a misprint for nabla^3 with nabla^6";
        const bool ok = !cocycle7 && !global7;
        r.status = ok ? Status::pass : Status::fail;
        if (!ok) r.residual = "the printed pairing unexpectedly passes";
    });
    col.check("covariant.action_via_nabla", "action written with the covariant derivative", "0,1,2,5,7",
              [&](CheckRecord& r) {
                  const Density F(DiffExpr(JetSymbol{Family::f, 0}), -1);
                  DiffExpr bad;
                  for (int lam : {0, 1, 2, 5, 7}) {
                      const Density a(DiffExpr(JetSymbol{Family::k, 0}), lam);
                      bad += action_via_nabla(F, a, L).coeff - lie_action(F, a, Coefficient(Rational(lam)), L).coeff;
                      if (!bad.is_zero()) break;
                  }
                  r.description = "f*nabla(a) + lam*nabla(f)*a equals f*a' + lam*f'*a identically";
                  r.status = bad.is_zero() ? Status::pass : Status::fail;
                  if (!bad.is_zero()) r.residual = print_expr(bad);
              });
    col.check("covariant.bracket", "bracket through the covariant derivative", "symbolic", [&](CheckRecord& r) {
        const Density F(DiffExpr(JetSymbol{Family::f, 0}), -1), G(DiffExpr(JetSymbol{Family::g, 0}), -1);
        const DiffExpr lhs = F.coeff * covariant_derivative(G, L).coeff - covariant_derivative(F, L).coeff * G.coeff;
        const DiffExpr d = lhs - bracket(F, G, L).coeff;
        r.description = "f*nabla(g) - nabla(f)*g = [f,g] with T cancelling";
        r.status = d.is_zero() ? Status::pass : Status::fail;
        if (!d.is_zero()) r.residual = print_expr(d);
    });
    col.check("covariant.half_density", "second covariant derivative on weight -1/2", "-1/2", [&](CheckRecord& r) {
        const Density phi = Density::with_weight(DiffExpr(JetSymbol{Family::k, 0}), Weight::from_twice(-1), true);
        const Density n2 = covariant_derivative(phi, 2, L);
        const DiffExpr expect = DiffExpr(jet(Family::k, 2, L)) -
                                DiffExpr(make_rational(1, 2)) * induced_projective_connection(L) * DiffExpr(JetSymbol{Family::k, 0});
        const DiffExpr d = n2.coeff - expect;
        r.description = "nabla^2 phi = phi'' - 1/2*R*phi with R = T' + T^2/2, which is (d^2 + R/2) phi with the "
                        "opposite sign of R; result weight " + n2.weight.to_string();
        r.status = d.is_zero() && n2.weight == Weight::from_twice(3) ? Status::pass : Status::fail;
        if (r.status == Status::fail) r.residual = print_expr(d);
    });
}

// ------------------------------------------------------------------ witt

LaurentDensity numeric_delta(const Cochain2& c, const Rational& lam, int l, int m, int n) {
    const WittField Ll = WittField::basis(l), Lm = WittField::basis(m), Ln = WittField::basis(n);
    auto val = [&](const WittField& x, const WittField& y) { return evaluate_cochain(c, x, y, lam); };
    LaurentPoly out = laurent_action(Ll, val(Lm, Ln), lam).coeff - laurent_action(Lm, val(Ll, Ln), lam).coeff +
                      laurent_action(Ln, val(Ll, Lm), lam).coeff;
    out -= val(witt_bracket(Ll, Lm), Ln).coeff;
    out += val(witt_bracket(Ll, Ln), Lm).coeff;
    out -= val(witt_bracket(Lm, Ln), Ll).coeff;
    return LaurentDensity{std::move(out), c.value_weight};
}

void witt_checks(Collector& col, const SuiteOptions& opt) {
    const JetLimits& L = opt.limits;
    const int W = opt.window;
    const Rational base = kn_value(2, -2);
    for (int m = 1; m <= 10; ++m) {
        col.check("witt.kn.m" + pad2(m), "residue form of the globalized Gelfand-Fuks cocycle", "0",
                  [&](CheckRecord& r) {
                      const Rational v = kn_value(m, -m);
                      const Rational cube(m * m * m - m);
                      bool ok = v == -cube;
                      if (m == 1) ok = ok && v == 0;
                      else ok = ok && v * 6 == base * cube;
                      r.description = "kn(" + std::to_string(m) + "," + std::to_string(-m) + ") = " + v.get_str() +
                                      " = -(m^3-m); ratio to kn(2,-2) is (m^3-m)/6";
                      r.status = ok ? Status::pass : Status::fail;
                      if (!ok) r.residual = v.get_str();
                  });
    }
    col.check("witt.kn.offdiagonal", "residue form of the globalized Gelfand-Fuks cocycle", "0", [&](CheckRecord& r) {
        std::string bad;
        for (int m = -10; m <= 10 && bad.empty(); ++m)
            for (int n = -10; n <= 10; ++n)
                if (m + n != 0 && kn_value(m, n) != 0) {
                    bad = "kn(" + std::to_string(m) + "," + std::to_string(n) + ") = " + kn_value(m, n).get_str();
                    break;
                }
        r.description = "kn(m,n) = 0 for m+n != 0, |m|,|n| <= 10";
        r.status = bad.empty() ? Status::pass : Status::fail;
        r.residual = bad;
    });
    col.check("witt.kn.cocycle", "residue form of the globalized Gelfand-Fuks cocycle", "0", [&](CheckRecord& r) {
        std::string bad;
        for (int l = -W; l <= W && bad.empty(); ++l)
            for (int m = -W; m <= W && bad.empty(); ++m)
                for (int n = -W; n <= W; ++n) {
                    const Rational v = Rational(-(m - l)) * kn_value(l + m, n) + Rational(n - l) * kn_value(l + n, m) -
                                       Rational(n - m) * kn_value(m + n, l);
                    if (v != 0) {
                        bad = "(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + "): " +
                              v.get_str();
                        break;
                    }
                }
        r.description = "trivial-action cocycle identity for kn on |l|,|m|,|n| <= " + std::to_string(W);
        r.status = bad.empty() ? Status::pass : Status::fail;
        r.residual = bad;
    });
    col.check("witt.module_axiom", "action on densities", "-1,0,1,2,5", [&](CheckRecord& r) {
        std::string bad;
        for (int lam : {-1, 0, 1, 2, 5})
            for (int a = -3; a <= 3 && bad.empty(); ++a)
                for (int b = -3; b <= 3 && bad.empty(); ++b)
                    for (int s = -4; s <= 4; ++s) {
                        const WittField X = WittField::basis(a), Y = WittField::basis(b);
                        const LaurentDensity d{LaurentPoly::monomial(s), lam};
                        const LaurentPoly lhs = laurent_action(X, laurent_action(Y, d)).coeff -
                                                laurent_action(Y, laurent_action(X, d)).coeff;
                        if (!(lhs == laurent_action(witt_bracket(X, Y), d).coeff)) {
                            bad = "lam " + std::to_string(lam);
                            break;
                        }
                    }
        r.description = "L_x L_y - L_y L_x = L_[x,y] on z^s (dz)^lam";
        r.status = bad.empty() ? Status::pass : Status::fail;
        r.residual = bad;
    });
    for (Generator g : all_generators()) {
        if (g == Generator::c0omega) continue;
        const std::string name(generator_name(g));
        col.check("witt.flat." + name, "flat generators on Laurent fields", lam_text(generator_lambda(g)),
                  [&](CheckRecord& r) {
                      const CatalogueEntry e = catalogue(g, Form::flat, std::nullopt, L);
                      const Rational lam(generator_lambda(g));
                      const bool symbolic = ce_differential(e.cochain, ActionMode::lie, L).is_zero();
                      bool numeric = true;
                      for (int l = -W; l <= W && numeric; ++l)
                          for (int m = l + 1; m <= W && numeric; ++m)
                              for (int n = m + 1; n <= W; ++n)
                                  if (!numeric_delta(e.cochain, lam, l, m, n).coeff.is_zero()) {
                                      numeric = false;
                                      break;
                                  }
                      r.description = name + ": symbolic cocycle " + yes_no(symbolic) + ", graded values on |m| <= " +
                                      std::to_string(W) + " satisfy the identity " + yes_no(numeric);
                      r.status = symbolic == numeric && symbolic ? Status::pass : Status::fail;
                      if (r.status == Status::fail) r.residual = "symbolic and numeric verdicts disagree";
                  });
    }
}

// ------------------------------------------------------------------ nontrivial

void nontrivial_checks(Collector& col, const SuiteOptions& opt) {
    const JetLimits& L = opt.limits;
    const int W = opt.window;
    auto verdict = [](const Certificate& c) { return c.nontrivial ? Status::nontrivial : Status::inconclusive; };
    col.check("nontrivial.kn", "non-triviality via the circle restriction; graded certificate", "0", [&](CheckRecord& r) {
        const CatalogueEntry e = catalogue(Generator::c0omega, Form::flat, std::nullopt, L);
        const Certificate c = nontriviality_certificate(e.cochain, std::nullopt, W, CertificateModule::residue);
        r.description = "residue-valued Gelfand-Fuks cocycle against constant-valued coboundaries: " + c.detail;
        r.status = verdict(c);
    });
    for (Generator g : all_generators()) {
        if (g == Generator::c0omega) continue;
        const std::string name(generator_name(g));
        col.check("nontrivial." + name, "non-triviality via the circle restriction; graded certificate",
                  lam_text(generator_lambda(g)), [&](CheckRecord& r) {
                      const CatalogueEntry e = catalogue(g, Form::flat, std::nullopt, L);
                      const Certificate c =
                          nontriviality_certificate(e.cochain, Rational(generator_lambda(g)), W, CertificateModule::density);
                      r.description = name + ": " + c.detail;
                      r.status = verdict(c);
                  });
    }
    for (int j = 0; j <= 4; ++j)
        for (int lam : {0, 1, 2, 5}) {
            col.check("nontrivial.coboundary.j" + std::to_string(j) + ".lam" + std::to_string(lam), "derived",
                      lam_text(lam), [&](CheckRecord& r) {
                          const Cochain1 b = Cochain1::make(DiffExpr(jet(Family::f, j, L)), j - 1, Coefficient(Rational(lam)));
                          const Cochain2 c = coboundary(b, L);
                          const Certificate cert = nontriviality_certificate(c, Rational(lam), W);
                          r.description = "coboundary of f -> f[" + std::to_string(j) + "]: " + cert.detail;
                          r.status = cert.nontrivial ? Status::fail : Status::inconclusive;
                          if (cert.nontrivial) r.residual = "a coboundary was certified non-trivial";
                      });
        }
}

// ------------------------------------------------------------------ conventions

void conventions_check(Collector& col, const SuiteOptions& opt) {
    col.check("conventions", "definitions of affine and projective connections; covariant derivative", "symbolic",
              [&](CheckRecord& r) {
                  const JetLimits& L = opt.limits;
                  ChartFrame frame(L);
                  const DiffExpr f(JetSymbol{Family::f, 0}), w(JetSymbol{Family::w, 0});
                  DiffExpr defect;
                  for (const Density& a : {Density(f, -1), Density(f * w, 0), Density(w, 1), Density(w * w, 2)})
                      defect += covariance_defect(a, frame);
                  const DiffExpr induced = induced_projective_connection(L);
                  const DiffExpr hinv(hinv_symbol());
                  defect += pushforward(induced, frame) - hinv * hinv * (induced + schwarzian(L));
                  r.description = convention_ledger();
                  r.status = defect.is_zero() ? Status::pass : Status::fail;
                  if (!defect.is_zero()) r.residual = print_expr(defect);
              });
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
    for (const auto& [k, v] : kSuites)
        if (v == name) return k;
    return std::nullopt;
}

std::string_view suite_name(Suite s) {
    for (const auto& [k, v] : kSuites)
        if (k == s) return v;
    return "?";
}

const std::vector<TableRow>& determinant_table() {
    static const std::vector<TableRow> rows{
        {0, 1, "all", false}, {0, 2, "{1}", false},  {0, 3, "{2}", false}, {1, 2, "none", true}, {1, 3, "all", false},
        {0, 4, "none", false}, {1, 4, "none", false}, {2, 3, "{3}", false}, {3, 4, "{5}", false},
    };
    return rows;
}

const CorrectionResult& derived_c7(const JetLimits& limits) {
    static std::mutex mu;
    static std::map<int, CorrectionResult> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(limits.max_order);
    if (it != cache.end()) return it->second;
    CorrectionResult r = solve_corrections(c7_symbol(limits), 7, Rational(7), limits);
    return cache.emplace(limits.max_order, std::move(r)).first->second;
}

std::string convention_ledger() {
    return "Transition z_b = h(z_a): T_b*h' = T_a + h''/h', R_b*h'^2 = R_a + S(h), "
           "S(h) = h'''/h' - 3/2*(h''/h')^2; a weight-k coefficient scales by h'^-k. "
           "Covariant derivative nabla(a) = a' + k*T*a on weight k; induced R = T' + T^2/2. "
           "The Gamma notation nabla = d - k*Gamma corresponds to Gamma = -T and flips the sign of R. "
           "Lie action L_f a = f*a' + lam*f'*a; background T, R, w are differentiated, not acted on. "
           "Misprints read as: c7 covariant pairs nabla^3 with nabla^6; the last term of the nabla^3 f "
           "expansion carries f'; (2Gamma - Gamma^2) means (2Gamma' - Gamma^2). "
           "Residue at z = 0 replaces the surface integral; kn(m,-m) = -(m^3-m), constant c/(24 pi i) dropped.";
}

std::vector<CheckRecord> run_suite(Suite suite, const SuiteOptions& options) {
    if (options.window < 1) throw InvalidArgument("window must be positive");
    std::vector<CheckRecord> out;
    Collector col(out);
    conventions_check(col, options);
    const bool all = suite == Suite::all;
    if (all || suite == Suite::theorem1) theorem1_checks(col, options);
    if (all || suite == Suite::table3) table3_checks(col, options);
    if (all || suite == Suite::global) global_checks(col, options, all);
    if (all || suite == Suite::covariant) covariant_checks(col, options);
    if (all || suite == Suite::witt) witt_checks(col, options);
    // the Witt suite carries the certificates too
    if (all || suite == Suite::witt || suite == Suite::nontrivial) nontrivial_checks(col, options);
    sort_records(out);
    return out;
}

}  // namespace jetcoh
