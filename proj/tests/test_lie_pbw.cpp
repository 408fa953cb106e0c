#include <doctest.h>

#include "cotwist/corpus.hpp"
#include "cotwist/lie.hpp"

using namespace cotwist;

namespace {

LiePtr poincare2d(int order = 4) {
    ContextPtr ctx = makeContext({"theta"}, order);
    LiePresentation p(ctx, {"M", "P0", "P1"});
    p.setBracket(0, 1, 2, Series::one(ctx));  // [M, P0] = P1
    p.setBracket(0, 2, 1, Series::one(ctx));  // [M, P1] = P0
    return makeLie(std::move(p));
}

UeaElement gen(const LiePtr& alg, int i) { return UeaElement::generator(alg, i); }

}  // namespace

TEST_CASE("2D Poincare presentation is valid") {
    CHECK_NOTHROW(poincare2d());
}

TEST_CASE("a sign-flipped sl2-like table fails Jacobi with the triple named") {
    ContextPtr ctx = makeContext({}, 2);
    LiePresentation p(ctx, {"H", "E", "F"});
    p.setBracket(0, 1, 1, Series::constant(ctx, GaussianRational(2)));   // [H,E] = 2E
    p.setBracket(0, 2, 2, Series::constant(ctx, GaussianRational(2)));   // [H,F] = +2F (flipped)
    p.setBracket(1, 2, 0, Series::one(ctx));                             // [E,F] = H
    ValidationReport rep = validatePresentation(p);
    CHECK(!rep.ok());
    CHECK(rep.str().find("H") != std::string::npos);
    CHECK_THROWS_AS(makeLie(std::move(p)), UsageError);
}

TEST_CASE("PBW straightening: P0 M = M P0 - P1") {
    LiePtr alg = poincare2d();
    UeaElement lhs = uea_mul(gen(alg, 1), gen(alg, 0));
    UeaElement rhs = uea_mul(gen(alg, 0), gen(alg, 1)) - gen(alg, 2);
    CHECK(lhs == rhs);
    CHECK((uea_mul(gen(alg, 1), gen(alg, 0)) - uea_mul(gen(alg, 0), gen(alg, 1))).str() == "-P1");
}

TEST_CASE("normal form is independent of the evaluation order") {
    LiePtr alg = poincare2d();
    Series one = Series::one(alg->ctx);
    // M P0 P1 normalized as a single word vs stepwise products
    UeaElement w = normalizeWord(alg, {2, 0, 1}, one);
    UeaElement stepwise = uea_mul(uea_mul(gen(alg, 2), gen(alg, 0)), gen(alg, 1));
    CHECK(w == stepwise);
    UeaElement assoc = uea_mul(gen(alg, 2), uea_mul(gen(alg, 0), gen(alg, 1)));
    CHECK(w == assoc);
}

TEST_CASE("uea_mul is associative on a seeded corpus") {
    LiePtr alg = poincare2d();
    auto corpus = ueaCorpus(alg, 30, 2, 11);
    for (size_t k = 0; k + 2 < corpus.size(); k += 3) {
        const auto &a = corpus[k], &b = corpus[k + 1], &c = corpus[k + 2];
        CHECK(uea_mul(uea_mul(a, b), c) == uea_mul(a, uea_mul(b, c)));
    }
}

TEST_CASE("uea_invert inverts unit-plus-higher-order elements") {
    LiePtr alg = poincare2d();
    UeaElement u = UeaElement::one(alg) +
                   gen(alg, 1) * Series::param(alg->ctx, "theta");
    CHECK(uea_mul(uea_invert(u), u) == UeaElement::one(alg));
    CHECK_THROWS_AS(uea_invert(gen(alg, 1)), DomainError);
}

TEST_CASE("embed_legs places a tensor into chosen legs") {
    LiePtr alg = poincare2d();
    TensorElement r = outer(TensorElement::fromLeg(gen(alg, 1)), TensorElement::fromLeg(gen(alg, 2)));
    TensorElement r13 = embed_legs(r, 3, {1, 3});
    TensorElement expected = outer(outer(TensorElement::fromLeg(gen(alg, 1)),
                                         TensorElement::fromLeg(UeaElement::one(alg))),
                                   TensorElement::fromLeg(gen(alg, 2)));
    CHECK(r13 == expected);
}

TEST_CASE("the PBW degree cap stops runaway words") {
    LiePtr alg = poincare2d();
    UeaElement big = UeaElement::one(alg);
    PbwMonomial m(alg->size(), 0);
    m[0] = 33;
    CHECK_THROWS_AS(uea_mul(UeaElement::monomial(alg, m, Series::one(alg->ctx)), gen(alg, 1)),
                    ResourceError);
}

TEST_CASE("pbw monomial printing") {
    LiePtr alg = poincare2d();
    PbwMonomial m(alg->size(), 0);
    m[1] = 1;
    m[2] = 2;
    CHECK(pbwMonomialString(*alg, m) == "P0*P1^2");
}
