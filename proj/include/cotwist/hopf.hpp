#pragma once

#include "cotwist/lie.hpp"

namespace cotwist {

// Coproduct of U(g): primitive on generators, extended as an algebra map.
TensorElement coproduct(const UeaElement& h);

// Iterated coproduct into U(g)^{tensor k}; k = 1 is the identity.
TensorElement coproductIter(const UeaElement& h, int k);

// epsilon(h): coefficient of the unit monomial.
Series counit(const UeaElement& h);

// gamma: reversal with sign, renormalized to PBW form.  Involutive on U(g).
UeaElement antipode(const UeaElement& h);

// Replaces the (1-based) leg by the coproduct of its content (arity + 1).
TensorElement coproductLeg(const TensorElement& a, int leg);

// Applies the counit to the leg and removes it (arity - 1).
TensorElement counitLeg(const TensorElement& a, int leg);

// Applies the antipode to one leg.
TensorElement antipodeLeg(const TensorElement& a, int leg);

// ad(h)a = h^(1) a gamma(h^(2)).
UeaElement adjoint(const UeaElement& h, const UeaElement& a);

// Classical U(g) with a chosen universal R-matrix (1 tensor 1 unless a
// twisted one is installed).  Triangularity is verified on construction.
struct HopfContext {
    LiePtr alg;
    TensorElement R;

    explicit HopfContext(LiePtr algebra);
    HopfContext(LiePtr algebra, TensorElement r);
};

using HopfPtr = std::shared_ptr<const HopfContext>;

HopfPtr makeHopf(LiePtr alg);
HopfPtr makeHopf(LiePtr alg, TensorElement r);

// R with its two legs flipped.
TensorElement flipLegs(const TensorElement& r);

}  // namespace cotwist
