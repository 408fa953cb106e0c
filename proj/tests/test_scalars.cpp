#include <doctest.h>

#include "cotwist/series.hpp"

using namespace cotwist;

namespace {
ContextPtr ctx4() { return makeContext({"theta"}, 4); }
GaussianRational imag() { return GaussianRational::imaginaryUnit(); }
}  // namespace

TEST_CASE("gaussian rational arithmetic and printing") {
    GaussianRational half(Rational(1, 2));
    GaussianRational z = half + imag();
    CHECK(toString(z) == "1/2+i");
    CHECK(toString(GaussianRational(Rational(0), Rational(3, 2))) == "3/2*i");
    CHECK(toString(-imag()) == "-i");
    CHECK(toString(GaussianRational::one()) == "1");
    CHECK((z * z.inverse() == GaussianRational::one()));
    CHECK((imag() * imag() == GaussianRational(-1)));
    CHECK_THROWS_AS(GaussianRational::zero().inverse(), DomainError);
}

TEST_CASE("graded lex order sorts by total degree first") {
    GradedLexLess less;
    CHECK(less({0, 1}, {2, 0}));
    CHECK(less({1, 1}, {0, 3}));
    CHECK(less({0, 1}, {1, 0}));
    CHECK(!less({1, 0}, {0, 1}));
}

TEST_CASE("series exp/invert are exact at the truncation order") {
    ContextPtr ctx = ctx4();
    Series itheta = Series::param(ctx, "theta") * imag();
    CHECK(itheta.exp() * (-itheta).exp() == Series::one(ctx));
    Series u = Series::one(ctx) + itheta;
    CHECK(u.invert() * u == Series::one(ctx));
    CHECK((Series::param(ctx, "theta") * Series::param(ctx, "theta")).minDegree() == 2);
}

TEST_CASE("terms above the truncation order vanish") {
    ContextPtr ctx = makeContext({"theta"}, 2);
    Series t = Series::param(ctx, "theta");
    CHECK((t * t * t).isZero());
    CHECK(!(t * t).isZero());
}

TEST_CASE("order zero is the classical theory") {
    ContextPtr ctx = makeContext({"theta"}, 0);
    Series t = Series::param(ctx, "theta");
    CHECK(t.isZero());
    CHECK(Series::one(ctx) * Series::one(ctx) == Series::one(ctx));
}

TEST_CASE("series printing") {
    ContextPtr ctx = ctx4();
    Series s = Series::param(ctx, "theta") * GaussianRational(Rational(1, 2));
    CHECK(s.str() == "(1/2)*theta");
    CHECK(Series::one(ctx).str() == "1");
}

TEST_CASE("mismatched contexts are rejected") {
    Series a = Series::one(ctx4());
    Series b = Series::one(makeContext({"h"}, 4));
    CHECK_THROWS_AS(requireSameContext(a, b), UsageError);
}
