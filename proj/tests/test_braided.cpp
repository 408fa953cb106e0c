#include <doctest.h>

#include <string>

#include "cotwist/braided.hpp"
#include "cotwist/defs.hpp"
#include "cotwist/expr.hpp"

using namespace cotwist;

namespace {

std::string defsPath(const std::string& name) {
    return std::string(COTWIST_DEFS_DIR) + "/" + name;
}

Definition moyal(int order = 4) { return loadDefs(defsPath("moyal2d.defs"), order); }

std::vector<PbwMonomial> genBasis(const LiePtr& alg) {
    std::vector<PbwMonomial> basis;
    for (size_t g = 0; g < alg->size(); ++g) {
        PbwMonomial m(alg->size(), 0);
        m[g] = 1;
        basis.push_back(m);
    }
    return basis;
}

}  // namespace

TEST_CASE("coordinates are quasi-commutative for the twisted R inside the smash product") {
    Definition def = moyal(2);
    TwistPtr t = def.twist();
    BraidedContext ctx = makeBraided(def.hopf, twistedR(*t));
    SmashElement y0 = phi(*t, parseSmash("x0", def.mod));
    SmashElement y1 = phi(*t, parseSmash("x1", def.mod));
    CHECK(braided_commutator(ctx, y0, y1).isZero());
}

TEST_CASE("braided Jacobi and skew-symmetry on generator triples") {
    Definition def = moyal();
    BraidedContext base = makeBraided(def.hopf);
    BraidedContext twisted = makeBraided(def.hopf, twistedR(*def.twist()));
    std::vector<std::array<UeaElement, 3>> triples;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                triples.push_back({UeaElement::generator(def.alg, a),
                                   UeaElement::generator(def.alg, b),
                                   UeaElement::generator(def.alg, c)});
    CHECK(check_braided_jacobi(base, triples).ok());
    CHECK(check_braided_jacobi(twisted, triples).ok());
}

TEST_CASE("twisted bracket table passes and a corrupted one is caught") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    BraidedContext twisted = makeBraided(def.hopf, twistedR(*t));
    BracketTable table = twist_bracket(*t, extract_bracket_table(makeBraided(def.hopf),
                                                                 genBasis(def.alg)));
    CHECK(check_table(twisted, table).ok());

    BracketTable corrupted = table;
    corrupted.bracket[0][1][0] += Series::one(def.ctx);
    Report rep = check_table(twisted, corrupted);
    CHECK(!rep.ok());
    bool witnessed = false;
    for (const auto& it : rep.items)
        if (!it.pass && !it.detail.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("twisted bracket agrees with [F1 act xi, F2 act eta]_R") {
    Definition def = moyal(2);
    TwistPtr t = def.twist();
    BracketTable table = twist_bracket(*t, extract_bracket_table(makeBraided(def.hopf),
                                                                 genBasis(def.alg)));
    BraidedContext base = makeBraided(def.hopf);
    UeaElement m = parseUea("M", def.alg), p0 = parseUea("P0", def.alg);
    UeaElement direct = UeaElement::zero(def.alg);
    for (const auto& [k, s] : t->F.terms()) {
        UeaElement f1 = UeaElement::monomial(def.alg, k[0], Series::one(def.ctx));
        UeaElement f2 = UeaElement::monomial(def.alg, k[1], Series::one(def.ctx));
        direct += braided_commutator(base, adjoint(f1, m), adjoint(f2, p0)) * s;
    }
    UeaElement fromTable = UeaElement::zero(def.alg);
    for (size_t k = 0; k < table.basis.size(); ++k)
        fromTable += UeaElement::monomial(def.alg, table.basis[k], table.bracket[0][1][k]);
    CHECK(fromTable == direct);
}

TEST_CASE("smash-Hopf coproduct on vector fields") {
    Definition def = moyal(2);
    TwistPtr t = def.twist();
    BraidedContext twisted = makeBraided(def.hopf, twistedR(*t));
    UeaElement m = parseUea("M", def.alg);
    TensorElement expected = outer(TensorElement::fromLeg(m),
                                   TensorElement::fromLeg(UeaElement::one(def.alg)));
    for (const auto& [k, s] : twisted.R.terms()) {
        UeaElement r1 = UeaElement::monomial(def.alg, k[0], Series::one(def.ctx));
        UeaElement r2 = UeaElement::monomial(def.alg, k[1], Series::one(def.ctx));
        expected += outer(TensorElement::fromLeg(r2),
                          TensorElement::fromLeg(adjoint(r1, m))) * s;
    }
    CHECK(hlie_coproduct(twisted, m) == expected);
}

TEST_CASE("quasi-primitivity membership") {
    Definition def = moyal(3);
    TwistPtr t = def.twist();
    // untwisted: P0 P1 fails with the predicted residual
    LieMembership mem = lie_membership(def.hopf, parseUea("P0*P1", def.alg));
    CHECK(!mem.member);
    CHECK(mem.residual == parseTensor("P0@P1 + P1@P0", def.alg, 2));
    // twisted: the phi image of every generator is quasi-primitive
    for (const char* g : {"M", "P0", "P1"})
        CHECK(lie_membership(*t, phi(*t, parseUea(g, def.alg))).member);
    CHECK(lie_membership(def.hopf, parseUea("M", def.alg)).member);
}

TEST_CASE("U(g_*) relations and the Hopf smash isomorphism") {
    Definition def = moyal();
    TwistPtr t = def.twist();
    std::vector<UeaElement> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(UeaElement::generator(def.alg, g));
    CHECK(verify_uea_cotwist(*t, gens).ok());
    CHECK(verify_hopf_smash_iso(*t, gens).ok());
    // abelian subalgebra: momenta star-commute up to the braiding
    TensorElement rt = twistedR(*t);
    UeaElement p0 = parseUea("P0", def.alg), p1 = parseUea("P1", def.alg);
    UeaElement rhs = UeaElement::zero(def.alg);
    for (const auto& [k, s] : rt.terms()) {
        UeaElement r1 = UeaElement::monomial(def.alg, k[0], Series::one(def.ctx));
        UeaElement r2 = UeaElement::monomial(def.alg, k[1], Series::one(def.ctx));
        rhs += star(*t, adjoint(r2, p1), adjoint(r1, p0)) * s;
    }
    CHECK(star(*t, p0, p1) == rhs);
}

TEST_CASE("current algebra bracket and Jacobi") {
    Definition def = moyal(2);
    BracketTable base = extract_bracket_table(makeBraided(def.hopf), genBasis(def.alg));

    CurrentContext untwisted(def.mod, trivialTwist(def.hopf), base, 1);
    Exponents x0e = {1, 0}, unit = {0, 0};
    CurrentElement a = CurrentElement::basisVector(def.mod, x0e, 0);   // x0 tensor M
    CurrentElement b = CurrentElement::basisVector(def.mod, unit, 1);  // 1 tensor P0
    CHECK(current_bracket(untwisted, a, b) ==
          CurrentElement::basisVector(def.mod, x0e, 2));  // x0 tensor P1
    CHECK(verify_current(untwisted, 1).ok());

    CurrentContext twisted(def.mod, def.twist(), base, 1);
    CHECK(verify_current(twisted, 1).ok());
}
