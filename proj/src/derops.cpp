#include "cotwist/derops.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

UeaElement mono(const LiePtr& alg, const PbwMonomial& m) {
    return UeaElement::monomial(alg, m, Series::one(alg->ctx));
}

GaussianRational imagUnit() { return GaussianRational(Rational(0), Rational(1)); }

}  // namespace

DiffOperator dotAct(const ModulePtr& mod, const UeaElement& h, const DiffOperator& x) {
    const LiePtr& alg = mod->lie;
    DiffOperator r = DiffOperator::zero(mod->coords);
    const TensorElement dh = coproduct(h);
    for (const auto& [key, s] : dh.terms())
        r += mod->represent(mono(alg, key[0]))
                 .compose(x)
                 .compose(mod->represent(antipode(mono(alg, key[1])))) * s;
    return r;
}

DiffOperator twistedDotAct(const TwistData& t, const ModulePtr& mod, const UeaElement& h,
                           const DiffOperator& x) {
    const LiePtr& alg = mod->lie;
    DiffOperator r = DiffOperator::zero(mod->coords);
    const TensorElement dh = twistedCoproduct(t, h);
    for (const auto& [key, s] : dh.terms())
        r += mod->represent(mono(alg, key[0]))
                 .compose(x)
                 .compose(mod->represent(twistedAntipode(t, mono(alg, key[1])))) * s;
    return r;
}

DiffOperator starCompose(const TwistData& t, const ModulePtr& mod, const DiffOperator& x,
                         const DiffOperator& y) {
    const LiePtr& alg = mod->lie;
    DiffOperator r = DiffOperator::zero(mod->coords);
    for (const auto& [key, s] : t.F.terms())
        r += dotAct(mod, mono(alg, key[0]), x).compose(dotAct(mod, mono(alg, key[1]), y)) * s;
    return r;
}

Poly starAct(const TwistData& t, const ModulePtr& mod, const DiffOperator& x, const Poly& a) {
    const LiePtr& alg = mod->lie;
    Poly r = Poly::zero(mod->coords);
    for (const auto& [key, s] : t.F.terms())
        r += dotAct(mod, mono(alg, key[0]), x).apply(mod->act(mono(alg, key[1]), a)) * s;
    return r;
}

Report check_first_order(const TwistData& t, const ModulePtr& mod, const DiffOperator& x,
                         const std::vector<std::pair<Poly, Poly>>& pairs) {
    const LiePtr& alg = mod->lie;
    TensorElement rt = twistedR(t);
    Report rep;
    rep.suite = "first-order";
    rep.order = alg->ctx->max_order;
    int idx = 0;
    for (const auto& [a, b] : pairs) {
        Poly lhs = starAct(t, mod, x, star(t, mod, a, b));
        Poly rhs = star(t, mod, starAct(t, mod, x, a), b);
        for (const auto& [rk, rs] : rt.terms())
            rhs += star(t, mod, mod->act(mono(alg, rk[1]), a),
                        starAct(t, mod, twistedDotAct(t, mod, mono(alg, rk[0]), x), b)) * rs;
        bool ok = lhs == rhs;
        rep.add("twisted Leibniz [" + std::to_string(idx++) + "]", ok,
                ok ? "" : "a = " + a.str() + ", b = " + b.str() +
                          ", difference = " + (lhs - rhs).str());
    }
    return rep;
}

Report verify_der_invariance(const TwistData& t, const ModulePtr& mod, const DiffOperator& x,
                             const std::vector<UeaElement>& hs,
                             const std::vector<std::pair<Poly, Poly>>& pairs) {
    Report rep;
    rep.suite = "der-invariance";
    rep.order = mod->lie->ctx->max_order;
    int idx = 0;
    for (const auto& h : hs) {
        Report sub = check_first_order(t, mod, twistedDotAct(t, mod, h, x), pairs);
        bool ok = sub.ok();
        std::string detail;
        if (!ok)
            for (const auto& it : sub.items)
                if (!it.pass) {
                    detail = it.detail;
                    break;
                }
        rep.add("h.X first order [h = " + h.str() + ", " + std::to_string(idx++) + "]", ok, detail);
    }
    return rep;
}

Report verify_der_stability(const TwistData& t, const ModulePtr& mod,
                            const std::vector<std::pair<std::string, DiffOperator>>& ops,
                            const std::vector<std::pair<Poly, Poly>>& pairs) {
    Report rep;
    rep.suite = "der-stability";
    rep.order = mod->lie->ctx->max_order;
    TwistPtr trivial = trivialTwist(t.hopf);
    auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    for (const auto& [name, x] : ops) {
        bool classical = check_first_order(*trivial, mod, x, pairs).ok();
        bool twisted = check_first_order(t, mod, x, pairs).ok();
        rep.add("stability [" + name + "]: classical = " + yn(classical) +
                    ", twisted = " + yn(twisted),
                classical == twisted,
                classical == twisted ? "" : "one-sided failure contradicts the stability property");
    }
    return rep;
}

DiffOperator braided_commutator_op(const BraidedContext& ctx, const ModulePtr& mod,
                                   const DiffOperator& x, const DiffOperator& y) {
    const LiePtr& alg = mod->lie;
    DiffOperator r = x.compose(y);
    for (const auto& [key, s] : ctx.R.terms())
        r -= dotAct(mod, mono(alg, key[1]), y).compose(dotAct(mod, mono(alg, key[0]), x)) * s;
    return r;
}

Report verify_der_closure(const TwistData& t, const ModulePtr& mod, const DiffOperator& x,
                          const DiffOperator& y,
                          const std::vector<std::pair<Poly, Poly>>& pairs) {
    Report rep;
    rep.suite = "der-closure";
    rep.order = mod->lie->ctx->max_order;

    Report px = check_first_order(t, mod, x, pairs);
    Report py = check_first_order(t, mod, y, pairs);
    rep.add("X first order", px.ok());
    rep.add("Y first order", py.ok());

    DiffOperator z = starCompose(t, mod, x, y);
    const TensorElement rt = twistedR(t);
    for (const auto& [rk, rs] : rt.terms())
        z -= starCompose(t, mod, twistedDotAct(t, mod, mono(mod->lie, rk[1]), y),
                         twistedDotAct(t, mod, mono(mod->lie, rk[0]), x)) * rs;
    Report pz = check_first_order(t, mod, z, pairs);
    bool ok = pz.ok();
    std::string detail;
    if (!ok)
        for (const auto& it : pz.items)
            if (!it.pass) {
                detail = it.detail;
                break;
            }
    rep.add("[X,Y]_R first order; [X,Y]_R = " + z.str(), ok, detail);
    return rep;
}

Report moyal_demo(const MoyalConfig& cfg) {
    const ModulePtr& mod = cfg.mod;
    const LiePtr& alg = mod->lie;
    const ContextPtr& ctx = alg->ctx;
    const TwistData& t = *cfg.twist;
    size_t ncoords = mod->coords->coords.size();
    Report rep;
    rep.suite = "moyal-demo";
    rep.order = ctx->max_order;

    auto coord = [&](size_t a) { return Poly::coordinate(mod->coords, static_cast<int>(a)); };
    auto cname = [&](size_t a) { return mod->coords->coords[a]; };

    // (i) [x^a, x^b]_* = i theta^{ab}
    for (size_t a = 0; a < ncoords; ++a)
        for (size_t b = 0; b < ncoords; ++b) {
            Poly comm = star(t, mod, coord(a), coord(b)) - star(t, mod, coord(b), coord(a));
            Poly expected =
                Poly::constant(mod->coords, cfg.theta[a][b] * imagUnit());
            bool ok = comm == expected;
            rep.add("[" + cname(a) + ", " + cname(b) + "]_* = i*theta^{" + cname(a) + cname(b) + "}",
                    ok, ok ? "" : "got " + comm.str() + ", expected " + expected.str());
            bool deg1 = true;
            for (const auto& [e, s] : comm.terms())
                for (const auto& [de, c] : s.terms())
                    if (totalDegree(de) != 1) deg1 = false;
            rep.add("[" + cname(a) + ", " + cname(b) + "]_* exactly first order in theta", deg1,
                    deg1 ? "" : comm.str());
        }

    // (ii) y^a := phi(x^a) = x^a + (1/2) theta^{ab} P_b
    std::vector<SmashElement> ys;
    for (size_t a = 0; a < ncoords; ++a) {
        SmashElement ya = phi(t, SmashElement::fromPoly(mod, coord(a)));
        SmashElement expected = SmashElement::fromPoly(mod, coord(a));
        for (size_t b = 0; b < ncoords; ++b) {
            Series c = cfg.theta[a][b] * GaussianRational(Rational(1, 2));
            if (c.isZero()) continue;
            expected += SmashElement::fromUea(
                            mod, UeaElement::generator(alg, cfg.momentum_of_coord[b])) * c;
        }
        bool ok = ya == expected;
        rep.add("phi(" + cname(a) + ") = " + cname(a) + " + (1/2) theta^{" + cname(a) +
                    "b} P_b",
                ok, ok ? "" : "got " + ya.str() + ", expected " + expected.str());
        ys.push_back(ya);
    }

    // (iii) [y^a, y^b] = i theta^{ab} in A x| H
    for (size_t a = 0; a < ncoords; ++a)
        for (size_t b = 0; b < ncoords; ++b) {
            SmashElement comm = smash_mul(ys[a], ys[b]) - smash_mul(ys[b], ys[a]);
            SmashElement expected =
                SmashElement::one(mod) * (cfg.theta[a][b] * imagUnit());
            bool ok = comm == expected;
            rep.add("[y^" + cname(a) + ", y^" + cname(b) + "] = i*theta^{" + cname(a) + cname(b) +
                        "}",
                    ok, ok ? "" : "got " + comm.str() + ", expected " + expected.str());
        }

    // (iv) cocycle, cotwist theorem, vector-field suites
    for (const auto& it : checkCocycle(t.F, t.hopf).items) rep.items.push_back(it);

    std::vector<std::pair<SmashElement, SmashElement>> pairs;
    for (size_t a = 0; a < ncoords; ++a)
        for (size_t b = 0; b < ncoords; ++b)
            pairs.push_back({SmashElement::fromPoly(mod, coord(a)),
                             SmashElement::fromPoly(mod, coord(b) * coord((b + 1) % ncoords))});
    for (const auto& it : verifyTheoremCotwist(t, pairs).items) rep.items.push_back(it);

    std::vector<std::pair<Poly, Poly>> ppairs;
    for (size_t a = 0; a < ncoords; ++a)
        ppairs.push_back({coord(a), coord((a + 1) % ncoords) * coord(a)});
    std::vector<std::pair<std::string, DiffOperator>> ops;
    for (size_t a = 0; a < ncoords; ++a)
        ops.push_back({"d_" + cname(a), DiffOperator::partial(mod->coords, static_cast<int>(a))});
    ops.push_back({cname(0) + "*d_" + cname(1),
                   DiffOperator::multiplication(coord(0))
                       .compose(DiffOperator::partial(mod->coords, 1))});
    for (const auto& it : verify_der_stability(t, mod, ops, ppairs).items)
        rep.items.push_back(it);

    return rep;
}

}  // namespace cotwist
