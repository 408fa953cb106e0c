#include "cotwist/smash.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

bool SmashElement::KeyLess::operator()(const Key& a, const Key& b) const {
    int da = totalDegree(a.poly) + totalDegree(a.pbw);
    int db = totalDegree(b.poly) + totalDegree(b.pbw);
    if (da != db) return da < db;
    GradedLexLess less;
    if (less(a.poly, b.poly)) return true;
    if (less(b.poly, a.poly)) return false;
    return less(a.pbw, b.pbw);
}

SmashElement SmashElement::one(const ModulePtr& m) {
    SmashElement e(m);
    e.addTerm({Exponents(m->coords->coords.size(), 0), PbwMonomial(m->lie->size(), 0)},
              Series::one(m->lie->ctx));
    return e;
}

SmashElement SmashElement::fromPoly(const ModulePtr& m, const Poly& p) {
    SmashElement e(m);
    PbwMonomial unit(m->lie->size(), 0);
    for (const auto& [pe, s] : p.terms()) e.addTerm({pe, unit}, s);
    return e;
}

SmashElement SmashElement::fromUea(const ModulePtr& m, const UeaElement& h) {
    SmashElement e(m);
    Exponents unit(m->coords->coords.size(), 0);
    for (const auto& [pm, s] : h.terms()) e.addTerm({unit, pm}, s);
    return e;
}

void SmashElement::addTerm(const Key& k, const Series& s) {
    if (s.isZero()) return;
    auto [it, inserted] = terms_.emplace(k, s);
    if (!inserted) {
        it->second += s;
        if (it->second.isZero()) terms_.erase(it);
    }
}

SmashElement SmashElement::operator+(const SmashElement& o) const {
    if (mod_ != o.mod_) throw UsageError("smash product context mismatch");
    SmashElement r = *this;
    for (const auto& [k, s] : o.terms_) r.addTerm(k, s);
    return r;
}

SmashElement SmashElement::operator-(const SmashElement& o) const {
    if (mod_ != o.mod_) throw UsageError("smash product context mismatch");
    SmashElement r = *this;
    for (const auto& [k, s] : o.terms_) r.addTerm(k, -s);
    return r;
}

SmashElement SmashElement::operator-() const {
    SmashElement r(mod_);
    for (const auto& [k, s] : terms_) r.terms_.emplace(k, -s);
    return r;
}

SmashElement SmashElement::operator*(const Series& s) const {
    SmashElement r(mod_);
    for (const auto& [k, t] : terms_) r.addTerm(k, t * s);
    return r;
}

bool SmashElement::operator==(const SmashElement& o) const {
    return mod_ == o.mod_ && terms_ == o.terms_;
}

bool SmashElement::isPurePoly() const {
    for (const auto& [k, s] : terms_)
        if (totalDegree(k.pbw) != 0) return false;
    return true;
}

bool SmashElement::isPureUea() const {
    for (const auto& [k, s] : terms_)
        if (totalDegree(k.poly) != 0) return false;
    return true;
}

Poly SmashElement::asPoly() const {
    if (!isPurePoly()) throw UsageError("smash element has a nontrivial H-part");
    Poly p(mod_->coords);
    for (const auto& [k, s] : terms_) p.addTerm(k.poly, s);
    return p;
}

UeaElement SmashElement::asUea() const {
    if (!isPureUea()) throw UsageError("smash element has a nontrivial A-part");
    UeaElement h(mod_->lie);
    for (const auto& [k, s] : terms_) h.addTerm(k.pbw, s);
    return h;
}

SmashElement smash_mul(const SmashElement& u, const SmashElement& v) {
    if (u.module() != v.module()) throw UsageError("smash product context mismatch");
    const auto& mod = u.module();
    SmashElement r(mod);
    for (const auto& [ku, su] : u.terms()) {
        UeaElement h = UeaElement::monomial(mod->lie, ku.pbw, Series::one(mod->lie->ctx));
        TensorElement delta = coproduct(h);
        for (const auto& [kv, sv] : v.terms()) {
            Series s = su * sv;
            if (s.isZero()) continue;
            Poly b = Poly::monomial(mod->coords, kv.poly, Series::one(mod->lie->ctx));
            for (const auto& [dk, ds] : delta.terms()) {
                // (a h)(b k) = a (h1 |> b) h2 k
                Poly acted = mod->act(UeaElement::monomial(mod->lie, dk[0], Series::one(mod->lie->ctx)), b);
                if (acted.isZero()) continue;
                UeaElement tail = uea_mul(UeaElement::monomial(mod->lie, dk[1], Series::one(mod->lie->ctx)),
                                          UeaElement::monomial(mod->lie, kv.pbw, Series::one(mod->lie->ctx)));
                for (const auto& [pe, ps] : acted.terms()) {
                    Exponents poly(pe.size());
                    for (size_t c = 0; c < pe.size(); ++c) poly[c] = ku.poly[c] + pe[c];
                    for (const auto& [tm, ts] : tail.terms())
                        r.addTerm({poly, tm}, s * ds * ps * ts);
                }
            }
        }
    }
    return r;
}

SmashElement adjoint(const UeaElement& h, const SmashElement& x) {
    const auto& mod = x.module();
    TensorElement delta = coproduct(h);
    SmashElement r(mod);
    for (const auto& [k, s] : delta.terms()) {
        SmashElement left = SmashElement::fromUea(mod, UeaElement::monomial(mod->lie, k[0], s));
        SmashElement right = SmashElement::fromUea(
            mod, antipode(UeaElement::monomial(mod->lie, k[1], Series::one(mod->lie->ctx))));
        r += smash_mul(smash_mul(left, x), right);
    }
    return r;
}

Poly applySmash(const SmashElement& x, const Poly& p) {
    const auto& mod = x.module();
    Poly r(mod->coords);
    for (const auto& [k, s] : x.terms()) {
        Poly acted = mod->act(UeaElement::monomial(mod->lie, k.pbw, Series::one(mod->lie->ctx)), p);
        r += Poly::monomial(mod->coords, k.poly, s) * acted;
    }
    return r;
}

DiffOperator toDiffOperator(const SmashElement& x) {
    const auto& mod = x.module();
    DiffOperator r = DiffOperator::zero(mod->coords);
    for (const auto& [k, s] : x.terms()) {
        DiffOperator op = mod->represent(UeaElement::monomial(mod->lie, k.pbw, s));
        DiffOperator mul = DiffOperator::multiplication(
            Poly::monomial(mod->coords, k.poly, Series::one(mod->lie->ctx)));
        r += mul.compose(op);
    }
    return r;
}

ValidationReport moduleAlgebraCheck(const ModulePtr& mod, const std::vector<UeaElement>& hs,
                                    const std::vector<Poly>& as, const std::vector<Poly>& bs) {
    ValidationReport rep;
    for (const auto& h : hs) {
        TensorElement delta = coproduct(h);
        for (const auto& a : as)
            for (const auto& b : bs) {
                Poly lhs = mod->act(h, a * b);
                Poly rhs(mod->coords);
                for (const auto& [k, s] : delta.terms()) {
                    Poly pa = mod->act(UeaElement::monomial(mod->lie, k[0], s), a);
                    Poly pb = mod->act(UeaElement::monomial(mod->lie, k[1], Series::one(mod->lie->ctx)), b);
                    rhs += pa * pb;
                }
                if (!(lhs == rhs))
                    rep.issues.push_back("module algebra axiom fails for h = " + h.str() +
                                         ", a = " + a.str() + ", b = " + b.str());
            }
    }
    return rep;
}

std::string SmashElement::str() const {
    std::vector<std::string> parts;
    for (const auto& [k, s] : terms_) {
        std::string mono = coordMonomialString(*mod_->coords, k.poly);
        std::string hpart = pbwMonomialString(*mod_->lie, k.pbw);
        if (!hpart.empty()) mono = mono.empty() ? hpart : mono + "*" + hpart;
        if (s.terms().size() == 1) {
            const auto& [e, c] = *s.terms().begin();
            Series bare(s.context());
            bare.addTerm(e, GaussianRational::one());
            std::string paramPart = bare.str();
            std::string full =
                paramPart == "1" ? mono : (mono.empty() ? paramPart : paramPart + "*" + mono);
            parts.push_back(termString(c, full));
        } else if (mono.empty()) {
            parts.push_back(s.str());
        } else {
            parts.push_back("(" + s.str() + ")*" + mono);
        }
    }
    return joinTerms(parts);
}

}  // namespace cotwist
