// jetcoh command line: verify suites, globalize a symbol, evaluate on Laurent fields.
#include "jetcoh/corrections.hpp"
#include "jetcoh/error.hpp"
#include "jetcoh/parser.hpp"
#include "jetcoh/report.hpp"
#include "jetcoh/suite.hpp"
#include "jetcoh/witt.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

jetcoh::JetLimits limits_from(int max_order) { return jetcoh::JetLimits::with_max_order(max_order); }

int cmd_verify(const std::string& suite_name, int window, int max_order, const std::string& json_path,
               const std::string& text_path) {
    const auto suite = jetcoh::suite_from_name(suite_name);
    if (!suite) {
        std::cerr << "unknown suite '" << suite_name << "'\n";
        return kExitUsage;
    }
    jetcoh::SuiteOptions opt;
    opt.window = window;
    opt.limits = limits_from(max_order);
    const auto records = jetcoh::run_suite(*suite, opt);
    std::cout << jetcoh::to_text(records);
    if (!json_path.empty()) jetcoh::emit_report(records, jetcoh::ReportFormat::json, json_path);
    if (!text_path.empty()) jetcoh::emit_report(records, jetcoh::ReportFormat::text, text_path);
    return jetcoh::any_failure(records) ? kExitFail : 0;
}

int cmd_globalize(const std::string& symbol_text, int weight, int max_order, const std::string& lambda_text) {
    const auto limits = limits_from(max_order);
    const jetcoh::DiffExpr e = jetcoh::parse_expr(symbol_text, limits);
    std::optional<jetcoh::Rational> lam;
    if (!lambda_text.empty()) lam = jetcoh::parse_rational(lambda_text);
    const jetcoh::Rational lam_v = lam.value_or(jetcoh::Rational(weight));
    const auto symbol = jetcoh::Cochain2::make(e, weight, jetcoh::Coefficient(lam_v));
    const auto res = jetcoh::solve_corrections(symbol, weight, lam_v, limits);
    std::cout << "symbol:     " << jetcoh::det_form(symbol.coeff) << "\n";
    std::cout << "weight:     " << weight << "\nlambda:     " << lam_v.get_str() << "\n";
    std::cout << "unknowns:   " << res.unknowns << " (" << res.equations << " equations, rank " << res.rank << ")\n";
    if (!res.feasible) {
        std::cout << "no global cocycle with this symbol\n";
        return kExitFail;
    }
    jetcoh::ChartFrame frame(limits);
    const bool global = jetcoh::is_global(*res.representative, frame).global;
    const bool cocycle = jetcoh::is_cocycle(*res.representative, jetcoh::ActionMode::lie, limits);
    std::cout << "corrected:  " << jetcoh::det_form(res.representative->coeff) << "\n";
    std::cout << "dimension:  " << res.dimension << "\n";
    for (std::size_t i = 0; i < res.gauge.size(); ++i)
        std::cout << "gauge[" << i << "]:   " << jetcoh::det_form(res.gauge[i]) << "\n";
    std::cout << "re-checked: global " << (global ? "yes" : "no") << ", cocycle " << (cocycle ? "yes" : "no") << "\n";
    return global && cocycle ? 0 : kExitFail;
}

int cmd_eval(const std::string& name, int m, int n, const std::string& lambda_text, const std::string& form_text) {
    const auto g = jetcoh::generator_from_name(name);
    if (!g) {
        std::cerr << "unknown cocycle '" << name << "'\n";
        return kExitUsage;
    }
    const auto form = jetcoh::form_from_name(form_text);
    if (!form) {
        std::cerr << "unknown form '" << form_text << "'\n";
        return kExitUsage;
    }
    std::optional<jetcoh::Cochain2> c7;
    if (*g == jetcoh::Generator::c7 && *form == jetcoh::Form::connection) c7 = jetcoh::derived_c7().representative;
    const auto entry = jetcoh::catalogue(*g, *form, c7);
    std::optional<jetcoh::Rational> lam;
    if (!lambda_text.empty()) lam = jetcoh::parse_rational(lambda_text);
    const auto v = jetcoh::evaluate_cochain(entry.cochain, m, n, lam);
    std::cout << name << "(L_" << m << ", L_" << n << ") = " << v.to_string() << "\n";
    if (v.weight == 1) std::cout << "residue at 0: " << jetcoh::residue_pair(v).get_str() << "\n";
    return 0;
}

int cmd_table3(int max_order) {
    const auto limits = limits_from(max_order);
    bool ok = true;
    std::cout << "det      lam-solutions  expected  trivial(pointwise)  trivial(mod D)\n";
    for (const auto& row : jetcoh::determinant_table()) {
        const auto s = jetcoh::lambda_solutions(jetcoh::det_cochain(row.p, row.q, limits), limits);
        const bool trivial = s.trivial_pointwise || s.trivial_integrated.value_or(false);
        const bool match = s.summary() == row.expected && (!row.expect_trivial || trivial);
        ok = ok && match;
        const std::string det = "(" + std::to_string(row.p) + "," + std::to_string(row.q) + ")";
        const std::string sum = s.summary(), integ = s.trivial_integrated ? (*s.trivial_integrated ? "yes" : "no") : "?";
        std::cout << det << std::string(9 - det.size(), ' ') << sum << std::string(15 - sum.size(), ' ') << row.expected
                  << std::string(10 - row.expected.size(), ' ') << (s.trivial_pointwise ? "yes" : "no")
                  << std::string(s.trivial_pointwise ? 17 : 18, ' ') << integ << (match ? "" : "   MISMATCH") << "\n";
    }
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of globalized 2-cocycles of vector fields"};
    app.require_subcommand(1);

    std::string suite = "all", json_path, text_path;
    int window = 6, max_order = jetcoh::kDefaultMaxOrder;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "all|theorem1|table3|global|covariant|witt|nontrivial")->capture_default_str();
    verify->add_option("--window", window, "Witt window for graded checks")->check(CLI::Range(1, 40))->capture_default_str();
    verify->add_option("--max-order", max_order, "jet order cap")->check(CLI::Range(1, 15))->capture_default_str();
    verify->add_option("--json", json_path, "write the JSON report here");
    verify->add_option("--text", text_path, "write the text report here");

    std::string symbol, lambda_text;
    int weight = 0;
    auto* glob = app.add_subcommand("globalize", "correct a flat symbol into a global cocycle");
    glob->add_option("--symbol", symbol, "flat symbol, e.g. \"det(1,2)\"")->required();
    glob->add_option("--weight", weight, "value weight")->required();
    glob->add_option("--max-order", max_order, "jet order cap")->check(CLI::Range(1, 15))->capture_default_str();
    glob->add_option("--lambda", lambda_text, "module parameter (default: the weight)");

    std::string name, form = "flat";
    int m = 0, n = 0;
    auto* eval = app.add_subcommand("eval", "evaluate a generator on L_m, L_n");
    eval->add_option("--cocycle", name, "cbar0|c0omega|c1|cbar1|c2|cbar2|c5|c7")->required();
    eval->add_option("--m", m, "first index")->required();
    eval->add_option("--n", n, "second index")->required();
    eval->add_option("--lambda", lambda_text, "value of lam if the cochain depends on it");
    eval->add_option("--form", form, "flat|connection|covariant|omega (T = R = 0, w = dz/z)")->capture_default_str();

    auto* table3 = app.add_subcommand("table3", "determinant cocycle table");
    table3->add_option("--max-order", max_order, "jet order cap")->check(CLI::Range(1, 15))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(suite, window, max_order, json_path, text_path);
        if (*glob) return cmd_globalize(symbol, weight, max_order, lambda_text);
        if (*eval) return cmd_eval(name, m, n, lambda_text, form);
        if (*table3) return cmd_table3(max_order);
    } catch (const jetcoh::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const jetcoh::InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jetcoh::OrderCapExceeded& e) {
        std::cerr << "order cap: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
