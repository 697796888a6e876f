#include "jetcoh/parser.hpp"
#include "jetcoh/suite.hpp"
#include "support/random_expr.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jetcoh;

namespace {
DiffExpr J(Family f, int n) { return DiffExpr(JetSymbol{f, n}); }

std::size_t offset_of(std::string_view text) {
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::string::npos;
}

CheckRecord record(std::string id, Status st, std::string residual = "") {
    CheckRecord r;
    r.check_id = std::move(id);
    r.description = "d";
    r.status = st;
    r.residual = std::move(residual);
    r.paper_ref = "derived";
    return r;
}
}  // namespace

TEST_CASE("parser examples") {
    CHECK(parse_expr("det(0,1)") == J(Family::f, 0) * J(Family::g, 1) - J(Family::f, 1) * J(Family::g, 0));
    CHECK(parse_expr("det(0,3) - 2*R[0]*det(0,1)") == catalogue(Generator::cbar2, Form::connection).cochain.coeff);
    CHECK(parse_expr("S") == schwarzian());
    CHECK(parse_expr("h[1]^-1") == DiffExpr(hinv_symbol()));
    CHECK(parse_expr("hinv * h[1]") == DiffExpr(1));
    CHECK(parse_expr(" -3/6 * lam * ( f[2] + g[0] )^2 ") ==
          DiffExpr(Coefficient(make_rational(-1, 2)) * Coefficient::lambda()) *
              (J(Family::f, 2) + J(Family::g, 0)).pow(2));
    CHECK(parse_expr("+T[1] - -T[1]") == DiffExpr(2) * J(Family::T, 1));
    CHECK(parse_expr("w[0]^0") == DiffExpr(1));
}

TEST_CASE("parser errors carry offsets") {
    CHECK(offset_of("f[") == 2);
    CHECK(offset_of("q[0]") == 0);
    CHECK(offset_of("f[0] + ") == 7);
    CHECK(offset_of("det(2,1)") == 4);
    CHECK(offset_of("f[0] g[0]") == 5);
    CHECK(offset_of("(f[0]") == 5);
    CHECK(offset_of("3/0") == 2);
    CHECK(offset_of("h[0]") == 2);
    CHECK_THROWS_AS(parse_expr("f[13]"), OrderCapExceeded);
    CHECK_THROWS_AS(parse_expr("f[4]", JetLimits::with_max_order(3)), OrderCapExceeded);
    CHECK_THROWS_AS(parse_expr("f[0]^-1"), InvalidArgument);
    CHECK_THROWS_WITH_AS(parse_expr("f["), doctest::Contains("offset 2"), ParseError);
}

TEST_CASE("print/parse round trip on random expressions") {
    std::mt19937 rng(71);
    testsupport::ExprShape shape;
    shape.with_h = true;
    shape.terms = 5;
    shape.degree = 3;
    shape.families = {Family::f, Family::g, Family::k, Family::T, Family::R, Family::w};
    for (int i = 0; i < 500; ++i) {
        const DiffExpr e = testsupport::rand_expr(rng, shape);
        REQUIRE(parse_expr(print_expr(e)) == e);
    }
    CHECK(print_expr(DiffExpr()) == "0");
}

TEST_CASE("report json") {
    CHECK(to_json({}) == "[]");
    const auto one = nlohmann::json::parse(to_json({record("a", Status::pass)}));
    REQUIRE(one.is_array());
    REQUIRE(one.size() == 1);
    CHECK(one[0]["residual"] == "");
    CHECK(one[0]["status"] == "PASS");
    CHECK(one[0]["lambda"] == "symbolic");

    const std::string text = to_json({record("a", Status::fail, "f[0]*g[1]")});
    const std::vector<std::string> keys{"check_id", "description", "lambda", "status", "residual", "paper_ref"};
    std::size_t at = 0;
    for (const auto& k : keys) {
        const std::size_t pos = text.find("\"" + k + "\"");
        REQUIRE(pos != std::string::npos);
        CHECK(pos > at);
        at = pos;
    }
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed[0].size() == keys.size());
    CHECK(parse_expr(parsed[0]["residual"].get<std::string>()) == J(Family::f, 0) * J(Family::g, 1));
}

TEST_CASE("record validation and ordering") {
    CHECK_THROWS_AS(validate(record("x", Status::fail)), InvalidArgument);
    CheckRecord noref = record("y", Status::pass);
    noref.paper_ref.clear();
    CHECK_THROWS_AS(validate(noref), InvalidArgument);
    CHECK_NOTHROW(validate(record("z", Status::inconclusive)));

    std::vector<CheckRecord> rs{record("b", Status::pass), record("a", Status::nontrivial)};
    sort_records(rs);
    CHECK(rs[0].check_id == "a");
    CHECK_FALSE(any_failure(rs));
    rs.push_back(record("c", Status::fail, "1"));
    CHECK(any_failure(rs));
    CHECK(to_text(rs).find("FAIL") != std::string::npos);
    CHECK(status_name(Status::inconclusive) == "INCONCLUSIVE");
}

TEST_CASE("emit_report writes files and rejects bad paths") {
    const auto dir = std::filesystem::temp_directory_path() / "jetcoh_report_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "r.json").string();
    emit_report({record("a", Status::pass)}, ReportFormat::json, path);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"check_id\": \"a\"") != std::string::npos);
    CHECK_THROWS_AS(emit_report({}, ReportFormat::text, (dir / "missing" / "x.txt").string()), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("suites") {
    CHECK(suite_from_name("table3") == Suite::table3);
    CHECK_FALSE(suite_from_name("bogus").has_value());
    for (Suite s : {Suite::all, Suite::theorem1, Suite::table3, Suite::global, Suite::covariant, Suite::witt,
                    Suite::nontrivial})
        CHECK(suite_from_name(suite_name(s)) == s);

    const auto t3 = run_suite(Suite::table3);
    int table = 0;
    for (const auto& r : t3) {
        validate(r);
        if (r.check_id.rfind("table3.", 0) == 0) ++table;
    }
    CHECK(table == 9);
    CHECK(std::any_of(t3.begin(), t3.end(), [](const CheckRecord& r) { return r.check_id == "conventions"; }));
    CHECK(to_json(t3) == to_json(run_suite(Suite::table3)));
    CHECK(std::is_sorted(t3.begin(), t3.end(),
                         [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; }));

    const auto witt = run_suite(Suite::witt);
    int kn = 0;
    for (const auto& r : witt)
        if (r.check_id.rfind("witt.kn.m", 0) == 0) {
            ++kn;
            CHECK(r.status == Status::pass);
        }
    CHECK(kn == 10);
    CHECK(std::any_of(witt.begin(), witt.end(),
                      [](const CheckRecord& r) { return r.check_id == "nontrivial.c5" && r.status == Status::nontrivial; }));
    CHECK_FALSE(convention_ledger().empty());
}
