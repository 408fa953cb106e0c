#include <doctest.h>

#include <string>

#include "cotwist/corpus.hpp"
#include "cotwist/session.hpp"
#include "cotwist/expr.hpp"

using namespace cotwist;

namespace {

std::string defsPath(const std::string& name) {
    return std::string(COTWIST_DEFS_DIR) + "/" + name;
}

Definition moyal(int order = 4) { return loadDefs(defsPath("moyal2d.defs"), order); }

}  // namespace

TEST_CASE("expression parsing and normalization") {
    Definition def = moyal();
    CHECK(normalizeExpr(def, "P0*M - M*P0") == "-P1");
    CHECK(normalizeExpr(def, "1") == "1");
    CHECK(normalizeExpr(def, "(1/2)*theta") == "(1/2)*theta");
    TensorElement t = parseTensor("P0@P1 - P1@P0", def.alg, 2);
    CHECK(t.arity() == 2);
    CHECK(parse_expr("x0*P1 + i", def.mod).index() == 1);  // a smash element
}

TEST_CASE("parse errors carry positions; unknown identifiers are rejected") {
    Definition def = moyal();
    CHECK_THROWS_AS(normalizeExpr(def, "P0*("), UsageError);
    CHECK_THROWS_AS(normalizeExpr(def, "Q7"), UsageError);
    CHECK_THROWS_AS(normalizeExpr(def, "P0 @ (P1@P1) + P0"), UsageError);  // leg mismatch
    CHECK_THROWS_AS(normalizeExpr(def, "x0^theta"), UsageError);           // non-integer power
}

TEST_CASE("parse after print is the identity on seeded corpora") {
    Definition def = moyal();
    for (const auto& a : ueaCorpus(def.alg, 12, 3, 21))
        CHECK(parseUea(a.str(), def.alg) == a);
    for (const auto& p : polyCorpus(def.coords, 12, 3, 22))
        CHECK(parsePoly(p.str(), def.coords) == p);
    for (const auto& s : smashCorpus(def.mod, 12, 3, 23))
        CHECK(parseSmash(s.str(), def.mod) == s);
    CHECK(parseSeries(def.twist()->theta.unitCoefficient().str(), def.ctx) ==
          Series::one(def.ctx));
}

TEST_CASE("definition files: structure errors are reported with line numbers") {
    CHECK_THROWS_WITH_AS(parseDefs("params theta\nfrobnicate = 1\n"),
                         doctest::Contains("line 2"), UsageError);
    CHECK_THROWS_AS(parseDefs("order -3\n"), UsageError);
    CHECK_THROWS_AS(parseDefs("generators P0\nbracket P0 Q1 = P0\n"), UsageError);
    CHECK_THROWS_AS(parseDefs("generators P0 P1\ntwist abelian\nfentry P0 P9 = 1\n"), UsageError);
    CHECK_THROWS_AS(loadDefs(defsPath("no-such-file.defs")), UsageError);
}

TEST_CASE("order override replaces the file's order") {
    Definition def = loadDefs(defsPath("moyal2d.defs"), 1);
    CHECK(def.ctx->max_order == 1);
    CHECK(loadDefs(defsPath("moyal2d.defs")).ctx->max_order == 4);
}

TEST_CASE("session star and phi match the library results") {
    Definition def = moyal();
    CHECK(starExpr(def, "x0", "x1") == "(1/2*i)*theta + x0*x1");
    CHECK(phiExpr(def, "x0") == "(1/2)*theta*P1 + x0");
    CHECK(normalizeExpr(def, "x0*x1 - x1*x0") == "0");
}

TEST_CASE("suites produce deterministic transcripts for a fixed seed") {
    Definition def = moyal();
    SuiteOptions opt{7, 2};
    std::string a = runSuite(def, "intertwine", opt).transcript();
    std::string b = runSuite(def, "intertwine", opt).transcript();
    CHECK(a == b);
    SuiteOptions other{8, 2};
    CHECK(runSuite(def, "intertwine", other).ok());
    CHECK_THROWS_AS(runSuite(def, "no-such-suite", opt), UsageError);
}

TEST_CASE("check-cocycle and moyal-demo entry points") {
    Definition def = moyal();
    CHECK(runCheckCocycle(def).ok());
    Definition jordan = loadDefs(defsPath("jordanian.defs"));
    CHECK(runCheckCocycle(jordan).ok());
    CHECK_THROWS_AS(runMoyalDemo(jordan), UsageError);
    CHECK_THROWS_AS(runSuite(jordan, "der-stability", SuiteOptions{}), UsageError);
}
