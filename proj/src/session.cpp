#include "cotwist/session.hpp"

#include <algorithm>

#include "cotwist/corpus.hpp"
#include "cotwist/derops.hpp"
#include "cotwist/errors.hpp"
#include "cotwist/expr.hpp"

namespace cotwist {

namespace {

template <typename T>
std::vector<std::pair<T, T>> pairUp(std::vector<T> v) {
    std::vector<std::pair<T, T>> out;
    for (size_t k = 0; k + 1 < v.size(); k += 2) out.emplace_back(v[k], v[k + 1]);
    return out;
}

void stamp(Report& r, const std::string& suite, const Definition& def, const SuiteOptions& opt) {
    r.suite = suite;
    r.order = def.ctx->max_order;
    r.seed = opt.seed;
    r.max_degree = opt.max_degree;
}

std::vector<UeaElement> generatorCorpus(const Definition& def) {
    std::vector<UeaElement> gens;
    for (size_t g = 0; g < def.alg->size(); ++g)
        gens.push_back(UeaElement::generator(def.alg, static_cast<int>(g)));
    return gens;
}

std::vector<PbwMonomial> generatorBasis(const Definition& def) {
    std::vector<PbwMonomial> basis;
    for (size_t g = 0; g < def.alg->size(); ++g) {
        PbwMonomial m(def.alg->size(), 0);
        m[g] = 1;
        basis.push_back(m);
    }
    return basis;
}

void requireCoords(const Definition& def, const std::string& suite, size_t at_least) {
    if (def.coords->coords.size() < at_least)
        throw UsageError("suite '" + suite + "' needs at least " + std::to_string(at_least) +
                         " coordinate(s); the definition has " +
                         std::to_string(def.coords->coords.size()));
}

Report suiteTheoremCotwist(const Definition& def, const SuiteOptions& opt) {
    TwistPtr t = def.twist();
    if (def.coords->coords.empty())
        return verifyTheoremCotwist(*t, pairUp(ueaCorpus(def.alg, 100, opt.max_degree, opt.seed)));
    return verifyTheoremCotwist(*t, pairUp(smashCorpus(def.mod, 100, opt.max_degree, opt.seed)));
}

Report suiteJacobi(const Definition& def, const SuiteOptions& opt) {
    (void)opt;
    TwistPtr t = def.twist();
    BraidedContext base = makeBraided(def.hopf);
    BracketTable table = twist_bracket(*t, extract_bracket_table(base, generatorBasis(def)));
    BraidedContext twisted = makeBraided(def.hopf, twistedR(*t));
    Report r = check_table(twisted, table);
    try {
        iteratedTwist(*t, 3);
        r.add("F^(3) independent of the defining partition", true);
    } catch (const InvariantError& e) {
        r.add("F^(3) independent of the defining partition", false, e.what());
    }
    return r;
}

Report suiteLieMembership(const Definition& def, const SuiteOptions& opt) {
    (void)opt;
    TwistPtr t = def.twist();
    Report r;
    const auto& names = def.alg->generators;
    for (size_t g = 0; g < def.alg->size(); ++g) {
        UeaElement xi = UeaElement::generator(def.alg, static_cast<int>(g));
        LieMembership m = lie_membership(*t, phi(*t, xi));
        r.add("phi(" + names[g] + ") is quasi-primitive", m.member,
              m.member ? "" : "residual = " + m.residual.str());
    }
    for (size_t a = 0; a < def.alg->size(); ++a)
        for (size_t b = a + 1; b < def.alg->size(); ++b) {
            UeaElement prod = uea_mul(UeaElement::generator(def.alg, static_cast<int>(a)),
                                      UeaElement::generator(def.alg, static_cast<int>(b)));
            LieMembership m = lie_membership(*t, prod);
            r.add(names[a] + "*" + names[b] + " is not quasi-primitive", !m.member,
                  m.member ? "unexpectedly quasi-primitive" : "");
        }
    return r;
}

std::vector<std::pair<std::string, DiffOperator>> standardOperators(const Definition& def) {
    const auto& names = def.coords->coords;
    std::vector<std::pair<std::string, DiffOperator>> ops;
    for (size_t a = 0; a < names.size(); ++a)
        ops.emplace_back("d(" + names[a] + ")", DiffOperator::partial(def.coords, static_cast<int>(a)));
    for (size_t a = 0; a < names.size(); ++a)
        for (size_t b = 0; b < names.size(); ++b) {
            if (a == b) continue;
            ops.emplace_back(names[a] + "*d(" + names[b] + ")",
                             DiffOperator::multiplication(Poly::coordinate(def.coords, static_cast<int>(a)))
                                 .compose(DiffOperator::partial(def.coords, static_cast<int>(b))));
        }
    if (names.size() >= 2)
        ops.emplace_back("d(" + names[0] + ")*d(" + names[1] + ")",
                         DiffOperator::partial(def.coords, 0).compose(DiffOperator::partial(def.coords, 1)));
    return ops;
}

Report suiteDerClosure(const Definition& def, const SuiteOptions& opt) {
    requireCoords(def, "der-closure", 2);
    TwistPtr t = def.twist();
    auto pairs = pairUp(polyCorpus(def.coords, 12, opt.max_degree, opt.seed));
    DiffOperator d0 = DiffOperator::partial(def.coords, 0);
    DiffOperator d1 = DiffOperator::partial(def.coords, 1);
    auto field = [&](int coord, int dir) {
        return DiffOperator::multiplication(Poly::coordinate(def.coords, coord))
            .compose(DiffOperator::partial(def.coords, dir));
    };
    const auto& names = def.coords->coords;
    std::vector<std::tuple<std::string, DiffOperator, DiffOperator>> ops = {
        {"[d(" + names[0] + "), d(" + names[1] + ")]", d0, d1},
        {"[d(" + names[0] + "), " + names[0] + "*d(" + names[1] + ")]", d0, field(0, 1)},
        {"[" + names[0] + "*d(" + names[1] + "), " + names[1] + "*d(" + names[0] + ")]",
         field(0, 1), field(1, 0)},
    };
    Report out;
    for (const auto& [label, x, y] : ops) {
        Report sub = verify_der_closure(*t, def.mod, x, y, pairs);
        for (const auto& item : sub.items) out.add(label + ": " + item.label, item.pass, item.detail);
    }
    return out;
}

Report suiteCurrent(const Definition& def, const SuiteOptions& opt) {
    requireCoords(def, "current", 1);
    TwistPtr t = def.twist();
    BracketTable base = extract_bracket_table(makeBraided(def.hopf), generatorBasis(def));
    int d = std::min(opt.max_degree, 1);
    CurrentContext cc(def.mod, t, base, d);
    return verify_current(cc, d);
}

}  // namespace

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = {
        "theorem-cotwist", "intertwine",      "adrep",        "smash-iso",
        "compensation",    "jacobi",          "uea-cotwist",  "hopf-smash-iso",
        "lie-membership",  "der-stability",   "der-closure",  "current",
    };
    return names;
}

Report runSuite(const Definition& def, const std::string& suite, const SuiteOptions& opt) {
    Report r;
    if (suite == "theorem-cotwist") {
        r = suiteTheoremCotwist(def, opt);
    } else if (suite == "intertwine") {
        r = verifyIntertwine(*def.twist(), pairUp(ueaCorpus(def.alg, 60, opt.max_degree, opt.seed)));
    } else if (suite == "adrep") {
        r = verifyAdrep(*def.twist(), pairUp(ueaCorpus(def.alg, 60, opt.max_degree, opt.seed)));
    } else if (suite == "smash-iso") {
        r = verifySmashIso(*def.twist(), pairUp(smashCorpus(def.mod, 40, opt.max_degree, opt.seed)));
    } else if (suite == "compensation") {
        auto ops = smashCorpus(def.mod, 20, opt.max_degree, opt.seed);
        auto polys = polyCorpus(def.coords, 20, opt.max_degree, opt.seed + 1);
        std::vector<std::pair<SmashElement, Poly>> pairs;
        for (size_t k = 0; k < ops.size(); ++k) pairs.emplace_back(ops[k], polys[k]);
        r = verifyCompensation(*def.twist(), pairs);
    } else if (suite == "jacobi") {
        r = suiteJacobi(def, opt);
    } else if (suite == "uea-cotwist") {
        r = verify_uea_cotwist(*def.twist(), generatorCorpus(def));
    } else if (suite == "hopf-smash-iso") {
        r = verify_hopf_smash_iso(*def.twist(), generatorCorpus(def));
    } else if (suite == "lie-membership") {
        r = suiteLieMembership(def, opt);
    } else if (suite == "der-stability") {
        requireCoords(def, "der-stability", 1);
        auto pairs = pairUp(polyCorpus(def.coords, 12, opt.max_degree, opt.seed));
        r = verify_der_stability(*def.twist(), def.mod, standardOperators(def), pairs);
    } else if (suite == "der-closure") {
        r = suiteDerClosure(def, opt);
    } else if (suite == "current") {
        r = suiteCurrent(def, opt);
    } else {
        std::string known;
        for (const auto& n : suiteNames()) known += (known.empty() ? "" : ", ") + n;
        throw UsageError("unknown suite '" + suite + "' (known: " + known + ")");
    }
    stamp(r, suite, def, opt);
    return r;
}

Report runCheckCocycle(const Definition& def) {
    Report r = checkCocycle(def.F, def.hopf);
    r.suite = "check-cocycle";
    r.order = def.ctx->max_order;
    return r;
}

Report runMoyalDemo(const Definition& def) {
    bool untwisted = def.F == TensorElement::unit(def.alg, 2);
    if (!def.abelian && !untwisted)
        throw UsageError("moyal-demo needs a definition with an abelian twist");
    requireCoords(def, "moyal-demo", 1);
    size_t n = def.coords->coords.size();
    MoyalConfig cfg;
    cfg.twist = def.twist();
    cfg.mod = def.mod;
    Series iconst = Series::constant(def.ctx, GaussianRational::imaginaryUnit());
    for (size_t x = 0; x < n; ++x) {
        int found = -1;
        DiffOperator expected = DiffOperator::partial(def.coords, static_cast<int>(x)) * iconst;
        for (size_t g = 0; g < def.alg->size(); ++g)
            if (def.mod->action.generator_ops[g] == expected) {
                found = static_cast<int>(g);
                break;
            }
        if (found < 0)
            throw UsageError("moyal-demo: no generator acts as i*d(" + def.coords->coords[x] + ")");
        cfg.momentum_of_coord.push_back(found);
    }
    for (int g : def.twist_generators)
        if (std::find(cfg.momentum_of_coord.begin(), cfg.momentum_of_coord.end(), g) ==
            cfg.momentum_of_coord.end())
            throw UsageError("moyal-demo: twist generator '" + def.alg->generators[g] +
                             "' is not a momentum of any coordinate");
    // theta^{ab} = 2i * f_{ab} for F = exp(sum f_{ab} P_a tensor P_b)
    GaussianRational twoI(Rational(0), Rational(2));
    cfg.theta.assign(n, std::vector<Series>(n, Series::zero(def.ctx)));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            auto pos = [&](size_t x) {
                auto it = std::find(def.twist_generators.begin(), def.twist_generators.end(),
                                    cfg.momentum_of_coord[x]);
                return it == def.twist_generators.end()
                           ? -1
                           : static_cast<int>(it - def.twist_generators.begin());
            };
            int pa = pos(a);
            int pb = pos(b);
            if (pa >= 0 && pb >= 0) cfg.theta[a][b] = def.twist_coeff[pa][pb] * twoI;
        }
    Report r = moyal_demo(cfg);
    r.suite = "moyal-demo";
    r.order = def.ctx->max_order;
    return r;
}

std::string normalizeExpr(const Definition& def, const std::string& text) {
    return printCanonical(parse_expr(text, def.mod));
}

std::string starExpr(const Definition& def, const std::string& a, const std::string& b) {
    SmashElement x = parseSmash(a, def.mod);
    SmashElement y = parseSmash(b, def.mod);
    return star(*def.twist(), x, y).str();
}

std::string phiExpr(const Definition& def, const std::string& text) {
    return phi(*def.twist(), parseSmash(text, def.mod)).str();
}

}  // namespace cotwist
