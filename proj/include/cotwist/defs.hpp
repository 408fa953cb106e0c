#pragma once

#include "cotwist/twist.hpp"

namespace cotwist {

// A fully loaded and validated definition file: deformation parameters,
// Lie presentation, module algebra and the (possibly trivial) twist tensor.
// The twist cocycle itself is validated lazily so check-cocycle can report
// on broken candidates.
struct Definition {
    Definition(ContextPtr c, LiePtr a, HopfPtr h, CoordPtr co, ModulePtr m, TensorElement f)
        : ctx(std::move(c)), alg(std::move(a)), hopf(std::move(h)), coords(std::move(co)),
          mod(std::move(m)), F(std::move(f)) {}

    ContextPtr ctx;
    LiePtr alg;
    HopfPtr hopf;
    CoordPtr coords;
    ModulePtr mod;
    TensorElement F;

    // Abelian-exponential data when the file declared `twist abelian`
    // (used by the flat-space demo); empty otherwise.
    bool abelian = false;
    std::vector<int> twist_generators;
    std::vector<std::vector<Series>> twist_coeff;

    // Validates the cocycle and companions; DomainError on failure.
    TwistPtr twist() const;

private:
    mutable TwistPtr cached_;
};

// Loads a definition file.  order_override replaces the file's `order` line
// when nonnegative.  UsageError on malformed input, DomainError on failed
// structure validation.
Definition loadDefs(const std::string& path, int order_override = -1);

Definition parseDefs(const std::string& text, int order_override = -1);

}  // namespace cotwist
