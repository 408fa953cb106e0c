#pragma once

#include <variant>

#include "cotwist/report.hpp"
#include "cotwist/smash.hpp"

namespace cotwist {

// F = exp(sum_{a,b} coeff[a][b] g_{gens[a]} tensor g_{gens[b]}) for pairwise
// commuting generators and an antisymmetric coefficient matrix whose entries
// vanish at deformation order zero.
struct AbelianExpSpec {
    std::vector<int> generators;               // indices into the Lie presentation
    std::vector<std::vector<Series>> coeff;    // square, antisymmetric
};

// F = 1 tensor 1 + sum of per-order contributions (each homogeneous in the
// deformation degree).  The engine verifies the cocycle; nothing is assumed.
struct ExplicitSeriesSpec {
    std::vector<std::pair<int, TensorElement>> contributions;
};

using TwistSpec = std::variant<AbelianExpSpec, ExplicitSeriesSpec>;

// Expanded twist with its companion elements, all verified at construction:
// cocycle identity, counit normalization, F F^{-1} = 1 tensor 1, and the
// antipode relations theta^{-1} = gamma(zeta), zeta^{-1} = gamma(theta).
struct TwistData {
    HopfPtr hopf;
    TensorElement F;
    TensorElement Finv;
    UeaElement theta;     // gamma(F_1) F_2
    UeaElement zeta;      // F^-1_2 gamma(F^-1_1)
    UeaElement thetaInv;
    UeaElement zetaInv;

    TwistData(HopfPtr h, TensorElement f);

    bool isTrivial() const;
};

using TwistPtr = std::shared_ptr<const TwistData>;

TwistPtr expandTwist(const TwistSpec& spec, const HopfPtr& hopf);

// Expands the spec to a raw tensor (spec-level validation only, no cocycle
// check) so a broken candidate can still be fed to checkCocycle.
TensorElement expandTwistTensor(const TwistSpec& spec, const HopfPtr& hopf);

// The trivial twist F = 1 tensor 1.
TwistPtr trivialTwist(const HopfPtr& hopf);

// Exact check of (Delta tensor id)(F) F_12 = (id tensor Delta)(F) F_23 and
// the counit normalization; failures carry the first failing deformation
// order and a witness term.
Report checkCocycle(const TensorElement& f, const HopfPtr& hopf);

// Dtilde(h) = F^{-1} Delta(h) F.
TensorElement twistedCoproduct(const TwistData& t, const UeaElement& h);

// gammatilde(h) = thetaInv gamma(h) theta, cross-checked against the
// zeta-conjugated form gamma(zetaInv h zeta).
UeaElement twistedAntipode(const TwistData& t, const UeaElement& h);

// Rtilde = F_21^{-1} R F; triangularity is verified.
TensorElement twistedR(const TwistData& t);

// Star products a*b = (F_1 act a)(F_2 act b); the module action for
// polynomials, the adjoint action inside U(g) and the smash product.
Poly star(const TwistData& t, const ModulePtr& mod, const Poly& a, const Poly& b);
UeaElement star(const TwistData& t, const UeaElement& a, const UeaElement& b);
SmashElement star(const TwistData& t, const SmashElement& a, const SmashElement& b);

// phi(a) = (ad(F_1)a) F_2 = F^{-1}_1 a gamma(F^{-1}_2) theta; both formulas
// computed and compared.
UeaElement phi(const TwistData& t, const UeaElement& a);
SmashElement phi(const TwistData& t, const SmashElement& a);

// phi^{-1}(a) = F_1 a gamma(F_2 zeta).
UeaElement phiInv(const TwistData& t, const UeaElement& a);
SmashElement phiInv(const TwistData& t, const SmashElement& a);

// F^(k), defined inductively; partition independence is verified for k = 3.
TensorElement iteratedTwist(const TwistData& t, int k);

// Product of the cotwisted smash product A_* x| Htilde (star on the A-parts,
// twisted coproduct in the cross relation).
SmashElement smashMulTwisted(const TwistData& t, const SmashElement& u, const SmashElement& v);

// The smash isomorphism a h -> (F_1 act a) F_2 h from A_* x| Htilde to A x| H.
SmashElement smashIsoImage(const TwistData& t, const SmashElement& x);

// --- verification suites -------------------------------------------------

// phi(a*b) = phi(a) phi(b) on the corpus, plus the proof identity in H^3.
Report verifyTheoremCotwist(const TwistData& t,
                            const std::vector<std::pair<UeaElement, UeaElement>>& pairs);
Report verifyTheoremCotwist(const TwistData& t,
                            const std::vector<std::pair<SmashElement, SmashElement>>& pairs);

// The two antipode-exchange identities relating (Delta tensor id)(F) and
// (id tensor Delta)(F) to F^{-1} and theta.
Report checkAntipodeExchange(const TwistData& t);

// The three-leg identity behind the cotwist theorem's proof.
Report checkProofIdentity(const TwistData& t);

// h^(1~) phi(a) gammatilde(h^(2~)) = phi(h^(1) a gamma(h^(2))).
Report verifyIntertwine(const TwistData& t,
                        const std::vector<std::pair<UeaElement, UeaElement>>& pairs);

// adtilde(h)a computed through (phiInv, Dtilde, gammatilde, star) equals ad(h)a.
Report verifyAdrep(const TwistData& t,
                   const std::vector<std::pair<UeaElement, UeaElement>>& pairs);

// The smash isomorphism is multiplicative on the corpus.
Report verifySmashIso(const TwistData& t,
                      const std::vector<std::pair<SmashElement, SmashElement>>& pairs);

// phiInv(X) * a = X a for operators X acting on polynomials.
Report verifyCompensation(const TwistData& t,
                          const std::vector<std::pair<SmashElement, Poly>>& pairs);

// Hopf-axiom suite for the twisted structure (Dtilde coassociativity and
// algebra-map property, twisted antipode axiom, Rtilde triangularity and
// quasi-cocommutativity) on a corpus of elements.
Report verifyTwistedHopfAxioms(const TwistData& t, const std::vector<UeaElement>& corpus);

}  // namespace cotwist
