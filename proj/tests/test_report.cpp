#include <doctest.h>

#include "commands.hpp"
#include "cubicdet/builtins.hpp"
#include "cubicdet/detrep.hpp"
#include "test_util.hpp"

using namespace cubicdet;
using namespace cubicdet::cli;

TEST_CASE("Exact pencils and lines survive a JSON round trip") {
    auto m = fermat_pencil_double_prime();
    auto text = report::dump(report::pencil_to_json(m));
    CHECK(report::pencil_from_json<Eisenstein>(report::json::parse(text)) == m);
    for (const auto& l : fermat_paper_lines())
        CHECK(report::line_from_json<Eisenstein>(report::line_to_json(l)) == l);
    Gaussian g(Rational(-7, 3), Rational(5, 11));
    CHECK(report::scalar_from_json<Gaussian>(report::scalar_to_json(g)) == g);
    CHECK(report::scalar_from_json<Rational>(report::json(12)) == Rational(12));
}

TEST_CASE("Float pencils round trip bit for bit") {
    auto u = f5_printed_definite();
    auto back = report::pencil_from_json<ComplexFloat>(report::json::parse(report::dump(report::pencil_to_json(u))));
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) CHECK(back.coeff(j)(a, b).value() == u.coeff(j)(a, b).value());
}

TEST_CASE("Report schema version") {
    auto r = report::make_report("lines");
    CHECK(report::parse_report(report::dump(r)) == r);
    r["schema_version"] = "2.0";
    CHECK_THROWS_AS(report::parse_report(report::dump(r)), report::SchemaError);
    CHECK_THROWS_AS(report::parse_report("{\"command\": \"lines\"}"), report::SchemaError);
    CHECK_THROWS_AS(report::parse_report("not json"), report::SchemaError);
    r["schema_version"] = "1.7";
    CHECK_NOTHROW(report::parse_report(report::dump(r)));
}

TEST_CASE("Surface specs") {
    CHECK(spec_from_builtin("clebsch").builtin == "clebsch");
    CHECK_THROWS_AS(spec_from_builtin("cayley"), InputError);
    CHECK_THROWS_AS(spec_from_json(report::json::parse(R"({"builtin": "fermat", "points": []})")), InputError);
    CHECK_THROWS_AS(spec_from_json(report::json::parse(R"({"coefficients": [1, 2, 3]})")), InputError);
    CHECK(spec_from_json(report::json::parse(R"({"builtin": "f5paper"})")).builtin == "f5paper");
    CHECK_THROWS_AS(parse_mode("symbolic"), InputError);
}

TEST_CASE("classify-real on the Fermat cubic") {
    auto r = run_command("classify-real", spec_from_builtin("fermat"), {});
    CHECK(r["segre"]["type"] == "F4");
    CHECK(r["selfadjoint_class_count"] == 6);
    CHECK(r["self_conjugate_double_sixes"].size() == 3);
    CHECK(r["surface"]["mode"] == "exact");
    CHECK(report::parse_report(report::dump(r)) == r);
}

TEST_CASE("reps on the Fermat cubic") {
    auto r = run_command("reps", spec_from_builtin("fermat"), {});
    CHECK(r["count"] == 72);
    CHECK(r["pairwise_nonequivalent"] == true);
    CHECK(r["transpose_pairing"] == true);
    auto p = report::pencil_from_json<Eisenstein>(r["representations"][5]["pencil"]);
    CHECK(p.is_zero_diagonal());
    CHECK(det_pencil(p) == fermat_form<Eisenstein>());
}

TEST_CASE("definiteness on the F5 surface is deterministic") {
    Options opts;
    auto r = run_command("definiteness", spec_from_builtin("f5paper"), opts);
    CHECK(r["summary"]["classes"] == 24);
    CHECK(r["summary"]["definite"] == 16);
    CHECK(r["summary"]["indefinite"] == 8);
    CHECK(r["summary"]["unknown"] == 0);
    opts.jobs = 3;
    CHECK(report::dump(run_command("definiteness", spec_from_builtin("f5paper"), opts)) == report::dump(r));
}

TEST_CASE("Input errors") {
    Options exact;
    exact.mode = Mode::Exact;
    CHECK_THROWS_AS(run_command("reps", spec_from_builtin("f5paper"), exact), InputError);
    CHECK_THROWS_AS(run_command("rank", spec_from_builtin("fermat"), {}), InputError);
    auto collinear = spec_from_json(report::json::parse(
        R"({"points": [["1","0","0"], ["0","1","0"], ["1","1","0"], ["0","0","1"], ["1","2","3"], ["1","-1","4"]]})"));
    CHECK_THROWS_AS(run_command("lines", collinear, {}), InputError);
    auto cone = report::json::array();
    for (int k = 0; k < 20; ++k) cone.push_back(k == 0 || k == 10 || k == 16 ? 1 : 0);
    CHECK_THROWS_AS(run_command("lines", spec_from_json({{"coefficients", cone}}), {}), InputError);
    auto e = error_record("lines", "InputError", "bad");
    CHECK(e["error"]["kind"] == "InputError");
    CHECK(e["schema_version"] == report::kSchemaVersion);
}

TEST_CASE("verify passes on the builtins") {
    for (const char* s : {"fermat", "clebsch"}) {
        auto r = run_command("verify", spec_from_builtin(s), {});
        CHECK(r["passed"] == true);
    }
}
