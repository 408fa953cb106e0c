#pragma once

#include <cstdint>

#include "cotwist/smash.hpp"

namespace cotwist {

// Deterministic seeded corpora for the verification suites.  Identical
// (seed, count, max_degree) always produce identical elements.
std::vector<UeaElement> ueaCorpus(const LiePtr& alg, size_t count, int max_degree,
                                  std::uint64_t seed);
std::vector<Poly> polyCorpus(const CoordPtr& coords, size_t count, int max_degree,
                             std::uint64_t seed);
std::vector<SmashElement> smashCorpus(const ModulePtr& mod, size_t count, int max_degree,
                                      std::uint64_t seed);

}  // namespace cotwist
