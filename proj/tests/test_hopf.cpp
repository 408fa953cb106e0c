#include <doctest.h>

#include "cotwist/corpus.hpp"
#include "cotwist/smash.hpp"

using namespace cotwist;

namespace {

struct Fixture {
    LiePtr alg;
    ModulePtr mod;

    explicit Fixture(int order = 4) {
        ContextPtr ctx = makeContext({"theta"}, order);
        LiePresentation p(ctx, {"M", "P0", "P1"});
        p.setBracket(0, 1, 2, Series::one(ctx));
        p.setBracket(0, 2, 1, Series::one(ctx));
        alg = makeLie(std::move(p));
        CoordPtr coords = makeCoords(ctx, {"x0", "x1"});
        Series i = Series::constant(ctx, GaussianRational::imaginaryUnit());
        auto x = [&](int k) { return Poly::coordinate(coords, k); };
        ActionSpec a;
        a.generator_ops.push_back(DiffOperator::multiplication(-x(1)).compose(DiffOperator::partial(coords, 0)) +
                                  DiffOperator::multiplication(-x(0)).compose(DiffOperator::partial(coords, 1)));
        a.generator_ops.push_back(DiffOperator::partial(coords, 0) * i);
        a.generator_ops.push_back(DiffOperator::partial(coords, 1) * i);
        mod = makeModule(alg, coords, a);
    }

    UeaElement gen(int k) const { return UeaElement::generator(alg, k); }
    Poly x(int k) const { return Poly::coordinate(mod->coords, k); }
    Series i() const { return Series::constant(alg->ctx, GaussianRational::imaginaryUnit()); }
};

}  // namespace

TEST_CASE("coproduct is primitive on generators and multiplicative") {
    Fixture f;
    TensorElement unitLeg = TensorElement::fromLeg(UeaElement::one(f.alg));
    CHECK(coproduct(f.gen(1)) == outer(TensorElement::fromLeg(f.gen(1)), unitLeg) +
                                     outer(unitLeg, TensorElement::fromLeg(f.gen(1))));
    // Delta(P0 P1) = P0P1 tensor 1 + P0 tensor P1 + P1 tensor P0 + 1 tensor P0P1
    UeaElement p0p1 = uea_mul(f.gen(1), f.gen(2));
    TensorElement expected =
        outer(TensorElement::fromLeg(p0p1), unitLeg) +
        outer(TensorElement::fromLeg(f.gen(1)), TensorElement::fromLeg(f.gen(2))) +
        outer(TensorElement::fromLeg(f.gen(2)), TensorElement::fromLeg(f.gen(1))) +
        outer(unitLeg, TensorElement::fromLeg(p0p1));
    CHECK(coproduct(p0p1) == expected);
}

TEST_CASE("counit and antipode") {
    Fixture f;
    CHECK(counit(f.gen(1)).isZero());
    CHECK(counit(UeaElement::one(f.alg)) == Series::one(f.alg->ctx));
    CHECK(antipode(f.gen(1)) == -f.gen(1));
    // gamma(M P0) = P0 M = M P0 - P1
    CHECK(antipode(uea_mul(f.gen(0), f.gen(1))) ==
          uea_mul(f.gen(0), f.gen(1)) - f.gen(2));
    // involutive on a corpus
    for (const auto& a : ueaCorpus(f.alg, 10, 2, 3)) CHECK(antipode(antipode(a)) == a);
}

TEST_CASE("adjoint action reproduces the bracket on generators") {
    Fixture f;
    CHECK(adjoint(f.gen(0), f.gen(1)) == f.gen(2));  // ad(M)P0 = P1
    CHECK(adjoint(f.gen(0), f.gen(2)) == f.gen(1));
    CHECK(adjoint(UeaElement::one(f.alg), f.gen(0)) == f.gen(0));
}

TEST_CASE("module action: momenta act as i d/dx") {
    Fixture f;
    CHECK(f.mod->act(f.gen(1), f.x(0)) == Poly::constant(f.mod->coords, f.i()));
    CHECK(f.mod->act(f.gen(1), f.x(0) * f.x(1)) == f.x(1) * f.i());
    CHECK(f.mod->act(f.gen(0), f.x(0)) == -f.x(1));
}

TEST_CASE("a non-derivation action fails the module algebra check") {
    ContextPtr ctx = makeContext({}, 2);
    LiePtr abelian = makeLie(LiePresentation(ctx, {"P0", "P1"}));
    CoordPtr coords = makeCoords(ctx, {"x0", "x1"});
    Poly x0 = Poly::coordinate(coords, 0);
    ActionSpec bad;
    bad.generator_ops.push_back(DiffOperator::multiplication(x0));  // P0 |> x0 = x0: not a derivation
    bad.generator_ops.push_back(DiffOperator::partial(coords, 1));
    // the representation property still holds (both operators commute), so
    // construction succeeds and the Leibniz check must catch it
    ModulePtr mod = makeModule(abelian, coords, bad);
    ValidationReport rep = moduleAlgebraCheck(mod, {UeaElement::generator(abelian, 0)}, {x0}, {x0});
    CHECK(!rep.ok());
}

TEST_CASE("smash product cross relation") {
    Fixture f;
    SmashElement p0 = SmashElement::fromUea(f.mod, f.gen(1));
    SmashElement x0 = SmashElement::fromPoly(f.mod, f.x(0));
    // P0 x0 = i + x0 P0
    SmashElement expected = SmashElement::one(f.mod) * f.i() + smash_mul(x0, p0);
    CHECK(smash_mul(p0, x0) == expected);
    // (x0 P0)(x0) = i x0 + x0^2 P0
    SmashElement x0p0 = smash_mul(x0, p0);
    CHECK(smash_mul(x0p0, x0) ==
          SmashElement::fromPoly(f.mod, f.x(0) * f.i()) + smash_mul(SmashElement::fromPoly(f.mod, f.x(0) * f.x(0)), p0));
}

TEST_CASE("smash elements act on polynomials") {
    Fixture f;
    SmashElement x0p0 = smash_mul(SmashElement::fromPoly(f.mod, f.x(0)),
                                  SmashElement::fromUea(f.mod, f.gen(1)));
    CHECK(applySmash(x0p0, f.x(0)) == f.x(0) * f.i());
    CHECK(toDiffOperator(x0p0).apply(f.x(0)) == f.x(0) * f.i());
}

TEST_CASE("iterated coproduct is coassociative") {
    Fixture f;
    UeaElement h = uea_mul(f.gen(0), f.gen(1));
    CHECK(coproductLeg(coproduct(h), 1) == coproductLeg(coproduct(h), 2));
    CHECK(coproductIter(h, 3) == coproductLeg(coproduct(h), 1));
    CHECK(counitLeg(coproduct(h), 1) == TensorElement::fromLeg(h));
}
