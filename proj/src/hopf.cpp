#include "cotwist/hopf.hpp"

#include <algorithm>

#include "cotwist/errors.hpp"

namespace cotwist {

TensorElement coproduct(const UeaElement& h) {
    const auto& alg = h.algebra();
    TensorElement result(alg, 2);
    for (const auto& [m, s] : h.terms()) {
        TensorElement t = TensorElement::unit(alg, 2) * s;
        for (size_t g = 0; g < m.size(); ++g) {
            if (m[g] == 0) continue;
            UeaElement gen = UeaElement::generator(alg, static_cast<int>(g));
            TensorElement primitive = outer(TensorElement::fromLeg(gen), TensorElement::fromLeg(UeaElement::one(alg))) +
                                      outer(TensorElement::fromLeg(UeaElement::one(alg)), TensorElement::fromLeg(gen));
            for (int k = 0; k < m[g]; ++k) t = tensor_mul(t, primitive);
        }
        result += t;
    }
    return result;
}

TensorElement coproductIter(const UeaElement& h, int k) {
    if (k < 1) throw UsageError("iterated coproduct needs arity >= 1");
    TensorElement t = TensorElement::fromLeg(h);
    for (int a = 1; a < k; ++a) t = coproductLeg(t, 1);
    return t;
}

Series counit(const UeaElement& h) { return h.unitCoefficient(); }

UeaElement antipode(const UeaElement& h) {
    const auto& alg = h.algebra();
    UeaElement result(alg);
    for (const auto& [m, s] : h.terms()) {
        std::vector<int> w = wordOf(m);
        std::reverse(w.begin(), w.end());
        Series coeff = (w.size() % 2 == 1) ? -s : s;
        result += normalizeWord(alg, w, coeff);
    }
    return result;
}

TensorElement coproductLeg(const TensorElement& a, int leg) {
    if (leg < 1 || leg > a.arity()) throw UsageError("coproductLeg: leg index out of range");
    const auto& alg = a.algebra();
    TensorElement r(alg, a.arity() + 1);
    for (const auto& [k, s] : a.terms()) {
        TensorElement delta =
            coproduct(UeaElement::monomial(alg, k[leg - 1], Series::one(alg->ctx)));
        for (const auto& [dk, ds] : delta.terms()) {
            TensorElement::Key key;
            key.reserve(k.size() + 1);
            key.insert(key.end(), k.begin(), k.begin() + (leg - 1));
            key.push_back(dk[0]);
            key.push_back(dk[1]);
            key.insert(key.end(), k.begin() + leg, k.end());
            r.addTerm(key, s * ds);
        }
    }
    return r;
}

TensorElement counitLeg(const TensorElement& a, int leg) {
    if (leg < 1 || leg > a.arity()) throw UsageError("counitLeg: leg index out of range");
    if (a.arity() == 1) throw UsageError("counitLeg would produce arity 0");
    const auto& alg = a.algebra();
    TensorElement r(alg, a.arity() - 1);
    for (const auto& [k, s] : a.terms()) {
        if (totalDegree(k[leg - 1]) != 0) continue;  // epsilon kills non-unit monomials
        TensorElement::Key key;
        key.reserve(k.size() - 1);
        key.insert(key.end(), k.begin(), k.begin() + (leg - 1));
        key.insert(key.end(), k.begin() + leg, k.end());
        r.addTerm(key, s);
    }
    return r;
}

TensorElement antipodeLeg(const TensorElement& a, int leg) {
    return apply_leg(a, leg, [](const UeaElement& u) { return antipode(u); });
}

UeaElement adjoint(const UeaElement& h, const UeaElement& a) {
    TensorElement delta = coproduct(h);
    const auto& alg = h.algebra();
    UeaElement result(alg);
    for (const auto& [k, s] : delta.terms()) {
        UeaElement left = UeaElement::monomial(alg, k[0], s);
        UeaElement right = antipode(UeaElement::monomial(alg, k[1], Series::one(alg->ctx)));
        result += uea_mul(uea_mul(left, a), right);
    }
    return result;
}

TensorElement flipLegs(const TensorElement& r) {
    if (r.arity() != 2) throw UsageError("flipLegs expects arity 2");
    return embed_legs(r, 2, {2, 1});
}

HopfContext::HopfContext(LiePtr algebra)
    : alg(algebra), R(TensorElement::unit(algebra, 2)) {}

HopfContext::HopfContext(LiePtr algebra, TensorElement r) : alg(std::move(algebra)), R(std::move(r)) {
    if (R.arity() != 2) throw UsageError("universal R-matrix must have arity 2");
    TensorElement rinv = tensor_invert(R);  // throws if not invertible
    if (!(flipLegs(R) == rinv))
        throw UsageError("R-matrix is not triangular: R_21 != R^{-1} at truncation order");
}

HopfPtr makeHopf(LiePtr alg) { return std::make_shared<const HopfContext>(std::move(alg)); }

HopfPtr makeHopf(LiePtr alg, TensorElement r) {
    return std::make_shared<const HopfContext>(std::move(alg), std::move(r));
}

}  // namespace cotwist
