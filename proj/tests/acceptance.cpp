// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion carries its own wall-clock budget; exceeding it
// counts as a failure even when the mathematics checks out.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cotwist/braided.hpp"
#include "cotwist/corpus.hpp"
#include "cotwist/derops.hpp"
#include "cotwist/expr.hpp"
#include "cotwist/session.hpp"

using namespace cotwist;

namespace {

int failures = 0;

std::string defsPath(const std::string& name) {
    const char* dir = COTWIST_DEFS_DIR;
    return std::string(dir) + "/" + name;
}

void criterion(int number, const std::string& title, double limit_s,
               const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= limit_s) {
        ok = false;
        note += " [over budget of " + std::to_string(limit_s) + "s]";
    }
    if (!ok) ++failures;
    std::printf("criterion %2d %-4s %6.2fs  %s%s\n", number, ok ? "PASS" : "FAIL", secs,
                title.c_str(), note.c_str());
    std::fflush(stdout);
}

template <typename T>
std::vector<std::pair<T, T>> pairUp(std::vector<T> v) {
    std::vector<std::pair<T, T>> out;
    for (size_t k = 0; k + 1 < v.size(); k += 2) out.emplace_back(v[k], v[k + 1]);
    return out;
}

Series itheta(const ContextPtr& ctx) {
    return Series::param(ctx, "theta") * GaussianRational::imaginaryUnit();
}

bool starCommutator(const Definition& def) {
    TwistPtr t = def.twist();
    Poly x0 = parsePoly("x0", def.coords), x1 = parsePoly("x1", def.coords);
    Poly comm = star(*t, def.mod, x0, x1) - star(*t, def.mod, x1, x0);
    return comm == Poly::constant(def.coords, itheta(def.ctx)) &&
           star(*t, def.mod, x0, x0) == x0 * x0;
}

bool phiOracle(const Definition& def, const std::vector<std::string>& images) {
    TwistPtr t = def.twist();
    for (size_t a = 0; a < images.size(); ++a) {
        std::string xa = "x" + std::to_string(a);
        if (!(phi(*t, parseSmash(xa, def.mod)) == parseSmash(images[a], def.mod)))
            return false;
    }
    // the phi images obey [y^a, y^b] = i theta^{ab} in the smash product
    std::vector<SmashElement> ys;
    for (size_t a = 0; a < images.size(); ++a)
        ys.push_back(phi(*t, parseSmash("x" + std::to_string(a), def.mod)));
    for (size_t a = 0; a < ys.size(); ++a)
        for (size_t b = a + 1; b < ys.size(); ++b) {
            Poly sab = star(*def.twist(), def.mod,
                            Poly::coordinate(def.coords, a), Poly::coordinate(def.coords, b));
            Poly sba = star(*def.twist(), def.mod,
                            Poly::coordinate(def.coords, b), Poly::coordinate(def.coords, a));
            SmashElement expected = SmashElement::fromPoly(def.mod, sab - sba);
            if (!(smash_mul(ys[a], ys[b]) - smash_mul(ys[b], ys[a]) == expected)) return false;
        }
    return true;
}

bool twistAxioms(const Definition& def) {
    TwistPtr t = def.twist();
    if (!checkCocycle(def.F, def.hopf).ok()) return false;       // cocycle + counit lines
    if (!(t->thetaInv == antipode(t->zeta))) return false;       // companion relations
    if (!(t->zetaInv == antipode(t->theta))) return false;
    if (!checkAntipodeExchange(*t).ok()) return false;           // antipode exchange
    return verifyTwistedHopfAxioms(*t, ueaCorpus(def.alg, 6, 2, 3)).ok();
}

bool vectorFields(const Definition& def) {
    TwistPtr t = def.twist();
    TwistPtr trivial = trivialTwist(def.hopf);
    auto d = [&](int k) { return DiffOperator::partial(def.coords, k); };
    auto xd = [&](int a, int b) {
        return DiffOperator::multiplication(Poly::coordinate(def.coords, a)).compose(d(b));
    };
    std::vector<std::pair<Poly, Poly>> pairs;
    for (auto& p : pairUp(polyCorpus(def.coords, 12, 2, 17))) pairs.push_back(p);
    std::vector<DiffOperator> good = {d(0), d(1), xd(0, 1), xd(1, 0)};
    for (const auto& x : good) {
        if (!check_first_order(*trivial, def.mod, x, pairs).ok()) return false;
        if (!check_first_order(*t, def.mod, x, pairs).ok()) return false;
    }
    DiffOperator bad = d(0).compose(d(1));
    if (check_first_order(*trivial, def.mod, bad, pairs).ok()) return false;
    if (check_first_order(*t, def.mod, bad, pairs).ok()) return false;
    // braided commutators of the passing operators stay first order
    for (size_t a = 0; a < good.size(); ++a)
        for (size_t b = a + 1; b < good.size(); ++b)
            if (!verify_der_closure(*t, def.mod, good[a], good[b], pairs).ok()) return false;
    return true;
}

std::vector<PbwMonomial> generatorBasis(const LiePtr& alg) {
    std::vector<PbwMonomial> basis;
    for (size_t g = 0; g < alg->size(); ++g) {
        PbwMonomial m(alg->size(), 0);
        m[g] = 1;
        basis.push_back(m);
    }
    return basis;
}

bool trivialDegenerate(const Definition& def) {
    TwistPtr t = def.twist();
    if (!(twistedR(*t) == TensorElement::unit(def.alg, 2))) return false;
    for (const auto& a : ueaCorpus(def.alg, 10, 2, 9)) {
        if (!(twistedCoproduct(*t, a) == coproduct(a))) return false;
        if (!(twistedAntipode(*t, a) == antipode(a))) return false;
    }
    for (const auto& s : smashCorpus(def.mod, 10, 2, 10))
        if (!(phi(*t, s) == s)) return false;
    for (const auto& [a, b] : pairUp(polyCorpus(def.coords, 10, 2, 11)))
        if (!(star(*t, def.mod, a, b) == a * b)) return false;
    SuiteOptions opt{4, 2};
    return runSuite(def, "theorem-cotwist", opt).transcript() ==
           runSuite(def, "theorem-cotwist", opt).transcript();
}

bool infrastructure(const Definition& def) {
    auto corpus = ueaCorpus(def.alg, 156, 2, 29);
    size_t triples = 0;
    for (size_t k = 0; k + 2 < corpus.size(); k += 3, ++triples) {
        const auto &a = corpus[k], &b = corpus[k + 1], &c = corpus[k + 2];
        if (!(uea_mul(uea_mul(a, b), c) == uea_mul(a, uea_mul(b, c)))) return false;
    }
    if (triples < 50) return false;
    // normal form does not depend on the evaluation order
    Series one = Series::one(def.ctx);
    std::vector<std::vector<int>> words = {{2, 0, 1}, {1, 0, 2}, {0, 2, 1, 0}};
    for (const auto& w : words) {
        UeaElement direct = normalizeWord(def.alg, w, one);
        UeaElement stepwise = UeaElement::one(def.alg);
        for (int g : w) stepwise = uea_mul(stepwise, UeaElement::generator(def.alg, g));
        if (!(direct == stepwise)) return false;
    }
    for (const auto& a : ueaCorpus(def.alg, 20, 3, 31))
        if (!(parseUea(a.str(), def.alg) == a)) return false;
    for (const auto& s : smashCorpus(def.mod, 20, 3, 32))
        if (!(parseSmash(s.str(), def.mod) == s)) return false;
    SuiteOptions opt{5, 2};
    return runSuite(def, "intertwine", opt).transcript() ==
           runSuite(def, "intertwine", opt).transcript();
}

}  // namespace

int main() {
    const std::string moyal2d = defsPath("moyal2d.defs");
    const std::string moyal4d = defsPath("moyal4d.defs");
    const std::string jordanian = defsPath("jordanian.defs");
    const std::string trivial = defsPath("trivial.defs");

    criterion(1, "Moyal star commutator x0*x1 - x1*x0 = i theta (N=1 and N=4)", 1.0, [&] {
        return starCommutator(loadDefs(moyal2d, 1)) && starCommutator(loadDefs(moyal2d, 4));
    });

    criterion(2, "phi images of coordinates in 2D and 4D with smash relations", 1.0, [&] {
        Definition d2 = loadDefs(moyal2d);
        Definition d4 = loadDefs(moyal4d);
        return phiOracle(d2, {"x0 + (1/2)*theta*P1", "x1 - (1/2)*theta*P0"}) &&
               phiOracle(d4, {"x0 + (1/2)*theta*P1 + (1/4)*theta*P2",
                              "x1 - (1/2)*theta*P0",
                              "x2 - (1/4)*theta*P0 + (1/2)*theta*P3",
                              "x3 - (1/2)*theta*P2"});
    });

    criterion(3, "cotwist theorem on 50 smash pairs at N=4 plus the proof identity", 60.0, [&] {
        Definition def = loadDefs(moyal2d);
        return runSuite(def, "theorem-cotwist", SuiteOptions{1, 2}).ok() &&
               checkProofIdentity(*def.twist()).ok();
    });

    criterion(4, "cocycle and twisted Hopf axioms for the Moyal and Jordanian twists", 60.0, [&] {
        return twistAxioms(loadDefs(moyal2d)) && twistAxioms(loadDefs(jordanian));
    });

    criterion(5, "intertwining and ad-coincidence suites at N=3", 60.0, [&] {
        Definition def = loadDefs(moyal2d, 3);
        SuiteOptions opt{1, 2};
        return runSuite(def, "intertwine", opt).ok() && runSuite(def, "adrep", opt).ok();
    });

    criterion(6, "braided Jacobi, U(g_*) relations and F^(3) independence at N=4", 30.0, [&] {
        Definition def = loadDefs(moyal2d);
        SuiteOptions opt{1, 2};
        return runSuite(def, "jacobi", opt).ok() && runSuite(def, "uea-cotwist", opt).ok();
    });

    criterion(7, "quasi-primitivity of phi(generators) and the P0 P1 residual at N=3", 10.0, [&] {
        Definition def = loadDefs(moyal2d, 3);
        if (!runSuite(def, "lie-membership", SuiteOptions{1, 2}).ok()) return false;
        LieMembership mem = lie_membership(def.hopf, parseUea("P0*P1", def.alg));
        return !mem.member && mem.residual == parseTensor("P0@P1 + P1@P0", def.alg, 2);
    });

    criterion(8, "vector fields: twisted Leibniz both ways and braided closure", 30.0, [&] {
        return vectorFields(loadDefs(moyal2d, 2));
    });

    criterion(9, "current algebra bracket passes braided Jacobi at N=2, both twists", 60.0, [&] {
        Definition def = loadDefs(moyal2d, 2);
        BracketTable base =
            extract_bracket_table(makeBraided(def.hopf), generatorBasis(def.alg));
        CurrentContext untwisted(def.mod, trivialTwist(def.hopf), base, 1);
        CurrentContext twisted(def.mod, def.twist(), base, 1);
        return verify_current(untwisted, 1).ok() && verify_current(twisted, 1).ok();
    });

    criterion(10, "trivial twist reproduces the classical theory bit-exactly", 5.0, [&] {
        return trivialDegenerate(loadDefs(trivial));
    });

    criterion(11, "infrastructure: associativity, normal forms, round-trips, determinism",
              60.0, [&] { return infrastructure(loadDefs(moyal2d)); });

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
