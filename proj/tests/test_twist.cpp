#include <doctest.h>

#include <string>

#include "cotwist/corpus.hpp"
#include "cotwist/defs.hpp"
#include "cotwist/expr.hpp"

using namespace cotwist;

namespace {

std::string defsPath(const std::string& name) {
    return std::string(COTWIST_DEFS_DIR) + "/" + name;
}

Definition moyal(int order = 4) { return loadDefs(defsPath("moyal2d.defs"), order); }

GaussianRational imag() { return GaussianRational::imaginaryUnit(); }

template <typename T>
std::vector<std::pair<T, T>> pairUpForTest(std::vector<T> v) {
    std::vector<std::pair<T, T>> out;
    for (size_t k = 0; k + 1 < v.size(); k += 2) out.emplace_back(v[k], v[k + 1]);
    return out;
}

}  // namespace

TEST_CASE("Moyal twist expands to the first-order tensor") {
    Definition def = moyal(1);
    LiePtr alg = def.alg;
    Series c = Series::param(def.ctx, "theta") * GaussianRational(Rational(0), Rational(-1, 2));
    TensorElement expected = TensorElement::unit(alg, 2) +
                             parseTensor("P0@P1", alg, 2) * c - parseTensor("P1@P0", alg, 2) * c;
    CHECK(def.F == expected);
}

TEST_CASE("Moyal companions: vartheta = zeta = 1") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    CHECK(t->theta == UeaElement::one(def.alg));
    CHECK(t->zeta == UeaElement::one(def.alg));
    // antipode relations behind Eq. (2)
    CHECK(t->thetaInv == antipode(t->zeta));
    CHECK(t->zetaInv == antipode(t->theta));
}

TEST_CASE("cocycle check passes for Moyal and fails for a mutilated Jordanian") {
    Definition def = moyal();
    CHECK(checkCocycle(def.F, def.hopf).ok());

    Definition jordan = loadDefs(defsPath("jordanian.defs"));
    CHECK(checkCocycle(jordan.F, jordan.hopf).ok());

    // zero out the order-2 contribution: the cocycle forces it
    TensorElement broken(jordan.alg, 2);
    for (const auto& [k, s] : jordan.F.terms()) {
        Series kept(jordan.ctx);
        for (const auto& [e, c] : s.terms())
            if (totalDegree(e) != 2) kept.addTerm(e, c);
        broken.addTerm(k, kept);
    }
    Report rep = checkCocycle(broken, jordan.hopf);
    CHECK(!rep.ok());
    bool witnessed = false;
    for (const auto& it : rep.items)
        if (!it.pass && it.detail.find("order 2") != std::string::npos) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("twisted coproduct: momenta stay primitive, M matches the hand expansion") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    UeaElement p0 = parseUea("P0", def.alg);
    CHECK(twistedCoproduct(*t, p0) == coproduct(p0));
    // at order 1 the correction (i/2) theta [Delta(M), P0 tensor P1 - P1 tensor P0]
    // cancels, so Dtilde(M) = Delta(M)
    Definition d1 = moyal(1);
    UeaElement m = parseUea("M", d1.alg);
    CHECK(twistedCoproduct(*d1.twist(), m) == coproduct(m));
}

TEST_CASE("twisted antipode for Moyal coincides with gamma and is involutive") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    UeaElement p0 = parseUea("P0", def.alg);
    UeaElement m = parseUea("M", def.alg);
    CHECK(twistedAntipode(*t, p0) == -p0);
    CHECK(twistedAntipode(*t, twistedAntipode(*t, m)) == m);
}

TEST_CASE("twisted R-matrix is F^2 for the Moyal twist") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    CHECK(twistedR(*t) == tensor_mul(t->F, t->F));
    // order-1 part: -i theta (P0 tensor P1 - P1 tensor P0)
    Definition d1 = moyal(1);
    TwistPtr t1 = d1.twist();
    Series c = Series::param(d1.ctx, "theta") * (-imag());
    TensorElement expected = TensorElement::unit(d1.alg, 2) +
                             parseTensor("P0@P1", d1.alg, 2) * c -
                             parseTensor("P1@P0", d1.alg, 2) * c;
    CHECK(twistedR(*t1) == expected);
}

TEST_CASE("star product of coordinates") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    Poly x0 = parsePoly("x0", def.coords), x1 = parsePoly("x1", def.coords);
    Series itheta = Series::param(def.ctx, "theta") * imag();
    CHECK(star(*t, def.mod, x0, x1) - star(*t, def.mod, x1, x0) ==
          Poly::constant(def.coords, itheta));
    CHECK(star(*t, def.mod, x0, x0) == x0 * x0);
}

TEST_CASE("phi on coordinates and momenta") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    SmashElement y0 = phi(*t, parseSmash("x0", def.mod));
    CHECK(y0 == parseSmash("x0 + (1/2)*theta*P1", def.mod));
    CHECK(phi(*t, parseUea("P0", def.alg)) == parseUea("P0", def.alg));
    // round trips
    UeaElement m = parseUea("M", def.alg);
    CHECK(phiInv(*t, phi(*t, m)) == m);
    CHECK(phiInv(*t, y0) == parseSmash("x0", def.mod));
}

TEST_CASE("phi images of coordinates obey the theta commutation relation") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    SmashElement y0 = phi(*t, parseSmash("x0", def.mod));
    SmashElement y1 = phi(*t, parseSmash("x1", def.mod));
    Series itheta = Series::param(def.ctx, "theta") * imag();
    CHECK(smash_mul(y0, y1) - smash_mul(y1, y0) == SmashElement::one(def.mod) * itheta);
}

TEST_CASE("cotwist theorem on a corpus plus the named instances") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    CHECK(verifyTheoremCotwist(*t, pairUpForTest(smashCorpus(def.mod, 12, 2, 5))).ok());
    Definition d3 = moyal(3);
    TwistPtr t3 = d3.twist();
    UeaElement m = parseUea("M", d3.alg);
    UeaElement p0 = parseUea("P0", d3.alg);
    CHECK(verifyIntertwine(*t3, {{m, p0}}).ok());
    CHECK(verifyAdrep(*t3, {{m, parseUea("P0*P1", d3.alg)}}).ok());
    CHECK(verifySmashIso(*t, {{parseSmash("x0", def.mod), parseSmash("P0", def.mod)}}).ok());
    CHECK(checkAntipodeExchange(*t).ok());
    CHECK(checkProofIdentity(*t).ok());
}

TEST_CASE("compensation: phiInv(X) * a = X a") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    CHECK(verifyCompensation(*t, {{parseSmash("P0", def.mod), parsePoly("x0*x1", def.coords)}}).ok());
    Definition d2 = moyal(2);
    CHECK(verifyCompensation(*d2.twist(),
                             {{parseSmash("x0*P1", d2.mod), parsePoly("x1", d2.coords)}}).ok());
}

TEST_CASE("iterated twists") {
    Definition def = moyal(2);
    TwistPtr t = def.twist();
    CHECK(iteratedTwist(*t, 1) == TensorElement::unit(def.alg, 1));
    CHECK(iteratedTwist(*t, 2) == t->F);
    CHECK_NOTHROW(iteratedTwist(*t, 3));  // partition independence is verified internally
}

TEST_CASE("twisted Hopf axioms hold on a corpus") {
    Definition def = moyal();
    CHECK(verifyTwistedHopfAxioms(*def.twist(), ueaCorpus(def.alg, 6, 2, 3)).ok());
}
