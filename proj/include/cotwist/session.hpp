#pragma once

#include "cotwist/defs.hpp"

namespace cotwist {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int max_degree = 3;  // corpus monomial degree bound
};

// Names accepted by runSuite, in documentation order.
const std::vector<std::string>& suiteNames();

// Runs one verification suite against a loaded definition.  UsageError for an
// unknown suite name or a suite whose prerequisites the definition lacks.
Report runSuite(const Definition& def, const std::string& suite, const SuiteOptions& opt);

// Cocycle report for the raw twist tensor (broken candidates welcome).
Report runCheckCocycle(const Definition& def);

// Flat-space demonstration; requires an abelian momentum twist.
Report runMoyalDemo(const Definition& def);

// Expression entry points behind the CLI: each parses against the
// definition's module and prints the canonical normal form.
std::string normalizeExpr(const Definition& def, const std::string& text);
std::string starExpr(const Definition& def, const std::string& a, const std::string& b);
std::string phiExpr(const Definition& def, const std::string& text);

}  // namespace cotwist
