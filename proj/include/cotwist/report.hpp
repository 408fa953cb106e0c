#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace cotwist {

struct CheckItem {
    std::string label;
    bool pass = false;
    std::string detail;  // counterexample or residual, canonical syntax
};

// Outcome of one verification suite.  Transcripts are deterministic for a
// fixed (defs, order, seed, max_degree).
struct Report {
    std::string suite;
    int order = 0;
    std::uint64_t seed = 0;
    int max_degree = 0;
    std::vector<CheckItem> items;

    void add(const std::string& label, bool pass, const std::string& detail = "") {
        items.push_back({label, pass, detail});
    }

    bool ok() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    std::string transcript() const {
        std::ostringstream os;
        os << "suite: " << suite << "\n";
        os << "order: " << order << "  seed: " << seed << "  max-degree: " << max_degree << "\n";
        for (const auto& it : items) {
            os << (it.pass ? "pass" : "FAIL") << "  " << it.label;
            if (!it.pass && !it.detail.empty()) os << "\n      counterexample: " << it.detail;
            os << "\n";
        }
        os << (ok() ? "result: all checks passed" : "result: FAILED") << " (" << items.size()
           << " items)\n";
        return os.str();
    }
};

}  // namespace cotwist
