#include <doctest.h>

#include <string>

#include "cotwist/defs.hpp"
#include "cotwist/derops.hpp"
#include "cotwist/expr.hpp"

using namespace cotwist;

namespace {

std::string defsPath(const std::string& name) {
    return std::string(COTWIST_DEFS_DIR) + "/" + name;
}

struct Fx {
    Definition def;
    TwistPtr t;
    TwistPtr trivial;
    std::vector<std::pair<Poly, Poly>> pairs;

    explicit Fx(int order = 3)
        : def(loadDefs(defsPath("moyal2d.defs"), order)),
          t(def.twist()),
          trivial(trivialTwist(def.hopf)) {
        Poly x0 = parsePoly("x0", def.coords), x1 = parsePoly("x1", def.coords);
        pairs = {{x0, x1}, {x0 * x1, x1}, {x0 * x0, x0 * x1}, {x1 * x1, x0}};
    }

    DiffOperator d(int k) const { return DiffOperator::partial(def.coords, k); }
    DiffOperator xd(int a, int b) const {
        return DiffOperator::multiplication(Poly::coordinate(def.coords, a)).compose(d(b));
    }
};

}  // namespace

TEST_CASE("operator application") {
    Fx f;
    Poly x0 = parsePoly("x0", f.def.coords), x1 = parsePoly("x1", f.def.coords);
    CHECK(f.d(0).apply(x0 * x1) == x1);
    CHECK(f.xd(0, 1).apply(x1) == x0);
    CHECK(f.def.mod->represent(parseUea("P0", f.def.alg)).apply(x0) ==
          Poly::constant(f.def.coords, Series::constant(f.def.ctx, GaussianRational::imaginaryUnit())));
}

TEST_CASE("first-order condition: derivations pass, second-order operators fail") {
    Fx f;
    CHECK(check_first_order(*f.trivial, f.def.mod, f.d(0), f.pairs).ok());
    CHECK(check_first_order(*f.t, f.def.mod, f.d(0), f.pairs).ok());
    Report rep = check_first_order(*f.trivial, f.def.mod, f.d(0).compose(f.d(1)),
                                   {{parsePoly("x0", f.def.coords), parsePoly("x1", f.def.coords)}});
    CHECK(!rep.ok());
    CHECK(!rep.items[0].detail.empty());
    CHECK(!check_first_order(*f.t, f.def.mod, f.d(0).compose(f.d(1)), f.pairs).ok());
}

TEST_CASE("Der is invariant under the dot action") {
    Fx f;
    std::vector<UeaElement> hs = {parseUea("1", f.def.alg), parseUea("M", f.def.alg),
                                  parseUea("P0", f.def.alg)};
    CHECK(verify_der_invariance(*f.trivial, f.def.mod, f.d(1), hs, f.pairs).ok());
    CHECK(verify_der_invariance(*f.t, f.def.mod, f.xd(0, 1), hs, f.pairs).ok());
    // h = 1 leaves the operator unchanged
    CHECK(dotAct(f.def.mod, parseUea("1", f.def.alg), f.xd(0, 1)) == f.xd(0, 1));
    CHECK(dotAct(f.def.mod, parseUea("M", f.def.alg), f.d(1)).isFirstOrderOrLess());
}

TEST_CASE("first-order status is stable under twisting") {
    Fx f;
    std::vector<std::pair<std::string, DiffOperator>> ops = {
        {"d0", f.d(0)}, {"d1", f.d(1)}, {"x0*d1", f.xd(0, 1)},
        {"x1*d0", f.xd(1, 0)}, {"d0*d1", f.d(0).compose(f.d(1))}};
    CHECK(verify_der_stability(*f.t, f.def.mod, ops, f.pairs).ok());
}

TEST_CASE("braided commutators of vector fields") {
    Fx f;
    BraidedContext base = makeBraided(f.def.hopf);
    CHECK(braided_commutator_op(base, f.def.mod, f.d(0), f.xd(0, 1)) == f.d(1));
    CHECK(braided_commutator_op(base, f.def.mod, f.d(0), f.d(1)).isZero());
    CHECK(verify_der_closure(*f.trivial, f.def.mod, f.d(0), f.xd(0, 1), f.pairs).ok());
    Fx f2(2);
    CHECK(verify_der_closure(*f2.t, f2.def.mod, f2.d(0), f2.xd(0, 1), f2.pairs).ok());
    CHECK(verify_der_closure(*f2.t, f2.def.mod, f2.xd(0, 1), f2.xd(1, 0), f2.pairs).ok());
}

TEST_CASE("the cotwisted operator product compensates phi") {
    Fx f;
    // X*a = (F_1.X)(F_2 act a) = phi(X) a for X = rho(P0)
    Poly a = parsePoly("x0*x1", f.def.coords);
    DiffOperator x = f.def.mod->represent(parseUea("P0", f.def.alg));
    CHECK(starAct(*f.t, f.def.mod, x, a) == f.def.mod->act(parseUea("P0", f.def.alg), a));
    // trivial twist: starCompose is plain composition
    CHECK(starCompose(*f.trivial, f.def.mod, f.d(0), f.xd(0, 1)) == f.d(0).compose(f.xd(0, 1)));
}
