#include <iostream>

#include <CLI11.hpp>

#include "cotwist/session.hpp"

namespace {

// 0 = all checks passed, 1 = a mathematical check failed (counterexample in
// the transcript), 2 = usage / parse / validation error.
int reportExit(const cotwist::Report& r) {
    std::cout << r.transcript();
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twist verification over Q(i)[[params]]"};
    app.require_subcommand(1);

    std::string defs_path, expr_a, expr_b, suite;
    int order = -1;  // -1: keep the file's order
    std::uint64_t seed = 1;
    int max_degree = 3;

    auto addDefs = [&](CLI::App* cmd) {
        cmd->add_option("defs", defs_path, "definition file")->required();
        cmd->add_option("--order", order, "truncation order override");
    };

    CLI::App* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
    addDefs(normalize);
    normalize->add_option("expr", expr_a, "expression")->required();

    CLI::App* star = app.add_subcommand("star", "star product of two expressions");
    addDefs(star);
    star->add_option("exprA", expr_a, "left factor")->required();
    star->add_option("exprB", expr_b, "right factor")->required();

    CLI::App* phi = app.add_subcommand("phi", "cotwist image of an expression");
    addDefs(phi);
    phi->add_option("expr", expr_a, "expression")->required();

    CLI::App* cocycle = app.add_subcommand("check-cocycle", "verify the twist cocycle identity");
    addDefs(cocycle);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    addDefs(verify);
    std::string known;
    for (const auto& n : cotwist::suiteNames()) known += (known.empty() ? "" : ", ") + n;
    verify->add_option("--suite", suite, "one of: " + known)->required();
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--max-degree", max_degree, "corpus monomial degree bound");

    CLI::App* moyal = app.add_subcommand("moyal-demo", "flat-space demonstration");
    addDefs(moyal);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0; anything else is usage
    }

    try {
        cotwist::Definition def = cotwist::loadDefs(defs_path, order);
        if (normalize->parsed()) {
            std::cout << cotwist::normalizeExpr(def, expr_a) << "\n";
            return 0;
        }
        if (star->parsed()) {
            std::cout << cotwist::starExpr(def, expr_a, expr_b) << "\n";
            return 0;
        }
        if (phi->parsed()) {
            std::cout << cotwist::phiExpr(def, expr_a) << "\n";
            return 0;
        }
        if (cocycle->parsed()) return reportExit(cotwist::runCheckCocycle(def));
        if (moyal->parsed()) return reportExit(cotwist::runMoyalDemo(def));
        return reportExit(cotwist::runSuite(def, suite, {seed, max_degree}));
    } catch (const cotwist::InvariantError& e) {
        std::cout << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    }
}
