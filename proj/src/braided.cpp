#include "cotwist/braided.hpp"

#include <algorithm>

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

UeaElement mono(const LiePtr& alg, const PbwMonomial& m) {
    return UeaElement::monomial(alg, m, Series::one(alg->ctx));
}

using Vec = std::vector<Series>;

Vec zeroVec(const ContextPtr& ctx, size_t n) { return Vec(n, Series::zero(ctx)); }

Vec expandInBasis(const BracketTable& table, const UeaElement& a) {
    Vec out = zeroVec(table.alg->ctx, table.basis.size());
    for (const auto& [m, s] : a.terms()) {
        auto it = std::find(table.basis.begin(), table.basis.end(), m);
        if (it == table.basis.end())
            throw DomainError("element leaves the bracket basis span: " + a.str());
        out[it - table.basis.begin()] += s;
    }
    return out;
}

UeaElement fromVec(const BracketTable& table, const Vec& v) {
    UeaElement r = UeaElement::zero(table.alg);
    for (size_t i = 0; i < v.size(); ++i) r.addTerm(table.basis[i], v[i]);
    return r;
}

Vec bracketVec(const BracketTable& table, const Vec& x, const Vec& y) {
    Vec out = zeroVec(table.alg->ctx, table.basis.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].isZero()) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            if (y[j].isZero()) continue;
            Series c = x[i] * y[j];
            if (c.isZero()) continue;
            for (size_t k = 0; k < out.size(); ++k) out[k] += table.bracket[i][j][k] * c;
        }
    }
    return out;
}

// Adjoint action of h on a basis combination, re-expanded in the basis.
Vec actVec(const BracketTable& table, const UeaElement& h, const Vec& x) {
    return expandInBasis(table, adjoint(h, fromVec(table, x)));
}

bool vecZero(const Vec& v) {
    for (const auto& s : v)
        if (!s.isZero()) return false;
    return true;
}

bool vecEqual(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

}  // namespace

BraidedContext::BraidedContext(HopfPtr h, TensorElement r) : hopf(std::move(h)), R(std::move(r)) {
    if (R.arity() != 2) throw UsageError("R-matrix must have arity 2");
    if (R.algebra() != hopf->alg) throw UsageError("R-matrix uses a different algebra");
    if (!(tensor_mul(R, flipLegs(R)) == TensorElement::unit(hopf->alg, 2)))
        throw DomainError("effective R-matrix is not triangular");
}

BraidedContext makeBraided(const HopfPtr& hopf) { return BraidedContext(hopf, hopf->R); }

BraidedContext makeBraided(const HopfPtr& hopf, TensorElement r) {
    return BraidedContext(hopf, std::move(r));
}

UeaElement braided_commutator(const BraidedContext& ctx, const UeaElement& a, const UeaElement& b) {
    const LiePtr& alg = ctx.hopf->alg;
    UeaElement r = uea_mul(a, b);
    for (const auto& [key, s] : ctx.R.terms())
        r -= uea_mul(adjoint(mono(alg, key[1]), b), adjoint(mono(alg, key[0]), a)) * s;
    return r;
}

SmashElement braided_commutator(const BraidedContext& ctx, const SmashElement& a,
                                const SmashElement& b) {
    const LiePtr& alg = ctx.hopf->alg;
    SmashElement r = smash_mul(a, b);
    for (const auto& [key, s] : ctx.R.terms())
        r -= smash_mul(adjoint(mono(alg, key[1]), b), adjoint(mono(alg, key[0]), a)) * s;
    return r;
}

Report check_braided_jacobi(const BraidedContext& ctx,
                            const std::vector<std::array<UeaElement, 3>>& triples) {
    const LiePtr& alg = ctx.hopf->alg;
    Report rep;
    rep.suite = "braided-jacobi";
    rep.order = alg->ctx->max_order;
    auto br = [&](const UeaElement& x, const UeaElement& y) {
        return braided_commutator(ctx, x, y);
    };
    int idx = 0;
    for (const auto& [xi, eta, zt] : triples) {
        UeaElement lhs = br(xi, br(eta, zt));
        UeaElement rhs = br(br(xi, eta), zt);
        for (const auto& [key, s] : ctx.R.terms())
            rhs += br(adjoint(mono(alg, key[1]), eta),
                      br(adjoint(mono(alg, key[0]), xi), zt)) * s;
        bool ok = lhs == rhs;
        rep.add("braided Jacobi [" + std::to_string(idx) + "]", ok,
                ok ? "" : "(" + xi.str() + ", " + eta.str() + ", " + zt.str() +
                          "), difference = " + (lhs - rhs).str());

        UeaElement skew = br(eta, xi);
        for (const auto& [key, s] : ctx.R.terms())
            skew += br(adjoint(mono(alg, key[1]), xi), adjoint(mono(alg, key[0]), eta)) * s;
        bool skew_ok = skew.isZero();
        rep.add("braided skew-symmetry [" + std::to_string(idx) + "]", skew_ok,
                skew_ok ? "" : "(" + xi.str() + ", " + eta.str() + "), residual = " + skew.str());
        ++idx;
    }
    return rep;
}

std::string BracketTable::str() const {
    std::string out;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            UeaElement v = UeaElement::zero(alg);
            for (size_t k = 0; k < basis.size(); ++k) v.addTerm(basis[k], bracket[i][j][k]);
            out += "bracket " + pbwMonomialString(*alg, basis[i]) + " " +
                   pbwMonomialString(*alg, basis[j]) + " = " + v.str() + "\n";
        }
    return out;
}

BracketTable extract_bracket_table(const BraidedContext& ctx,
                                   const std::vector<PbwMonomial>& basis) {
    const LiePtr& alg = ctx.hopf->alg;
    BracketTable table{alg, basis, {}};
    table.bracket.resize(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        table.bracket[i].reserve(basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            UeaElement v =
                braided_commutator(ctx, mono(alg, basis[i]), mono(alg, basis[j]));
            table.bracket[i].push_back(expandInBasis(table, v));
        }
    }
    return table;
}

Report check_table(const BraidedContext& ctx, const BracketTable& table) {
    const LiePtr& alg = ctx.hopf->alg;
    Report rep;
    rep.suite = "bracket-table";
    rep.order = alg->ctx->max_order;
    size_t n = table.basis.size();
    auto unit = [&](size_t i) {
        Vec v = zeroVec(alg->ctx, n);
        v[i] = Series::one(alg->ctx);
        return v;
    };
    auto name = [&](size_t i) { return pbwMonomialString(*alg, table.basis[i]); };

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec skew = bracketVec(table, unit(j), unit(i));
            for (const auto& [key, s] : ctx.R.terms()) {
                Vec l = actVec(table, mono(alg, key[1]), unit(i));
                Vec r = actVec(table, mono(alg, key[0]), unit(j));
                Vec b = bracketVec(table, l, r);
                for (size_t k = 0; k < n; ++k) skew[k] += b[k] * s;
            }
            bool ok = vecZero(skew);
            rep.add("skew-symmetry [" + name(i) + ", " + name(j) + "]", ok,
                    ok ? "" : "residual = " + fromVec(table, skew).str());
        }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec lhs = bracketVec(table, unit(i), bracketVec(table, unit(j), unit(k)));
                Vec rhs = bracketVec(table, bracketVec(table, unit(i), unit(j)), unit(k));
                for (const auto& [key, s] : ctx.R.terms()) {
                    Vec l = actVec(table, mono(alg, key[1]), unit(j));
                    Vec r = actVec(table, mono(alg, key[0]), unit(i));
                    Vec b = bracketVec(table, l, bracketVec(table, r, unit(k)));
                    for (size_t m = 0; m < n; ++m) rhs[m] += b[m] * s;
                }
                bool ok = vecEqual(lhs, rhs);
                rep.add("braided Jacobi [" + name(i) + ", " + name(j) + ", " + name(k) + "]", ok,
                        ok ? "" : "difference = " +
                                  (fromVec(table, lhs) - fromVec(table, rhs)).str());
            }
    return rep;
}

BracketTable twist_bracket(const TwistData& t, const BracketTable& table) {
    const LiePtr& alg = t.hopf->alg;
    BraidedContext base(t.hopf, t.hopf->R);
    BracketTable out{alg, table.basis, {}};
    out.bracket.resize(table.basis.size());
    for (size_t i = 0; i < table.basis.size(); ++i) {
        out.bracket[i].reserve(table.basis.size());
        for (size_t j = 0; j < table.basis.size(); ++j) {
            UeaElement v = UeaElement::zero(alg);
            for (const auto& [key, s] : t.F.terms())
                v += braided_commutator(base, adjoint(mono(alg, key[0]), mono(alg, table.basis[i])),
                                        adjoint(mono(alg, key[1]), mono(alg, table.basis[j]))) * s;
            out.bracket[i].push_back(expandInBasis(out, v));
        }
    }
    BraidedContext twisted(t.hopf, twistedR(t));
    Report rep = check_table(twisted, out);
    if (!rep.ok())
        throw InvariantError("twisted bracket fails its guaranteed axioms:\n" + rep.transcript());
    return out;
}

TensorElement hlie_coproduct(const BraidedContext& ctx, const UeaElement& xi) {
    const LiePtr& alg = ctx.hopf->alg;
    TensorElement r = outer(TensorElement::fromLeg(xi),
                            TensorElement::fromLeg(UeaElement::one(alg)));
    for (const auto& [key, s] : ctx.R.terms())
        r += outer(TensorElement::fromLeg(mono(alg, key[1])),
                   TensorElement::fromLeg(adjoint(mono(alg, key[0]), xi))) * s;
    return r;
}

namespace {

LieMembership membershipOf(const LiePtr& alg, const TensorElement& d, const TensorElement& r_eff,
                           const UeaElement& xi) {
    TensorElement rhs = outer(TensorElement::fromLeg(xi),
                              TensorElement::fromLeg(UeaElement::one(alg)));
    for (const auto& [k1, s1] : r_eff.terms())
        for (const auto& [k2, s2] : r_eff.terms()) {
            Series s = s1 * s2;
            if (s.isZero()) continue;
            UeaElement left = uea_mul(mono(alg, k1[1]), mono(alg, k2[0]));
            UeaElement right = uea_mul(mono(alg, k1[0]), uea_mul(xi, mono(alg, k2[1])));
            rhs += outer(TensorElement::fromLeg(left), TensorElement::fromLeg(right)) * s;
        }
    TensorElement residual = d - rhs;
    return {residual.isZero(), residual};
}

}  // namespace

LieMembership lie_membership(const HopfPtr& hopf, const UeaElement& xi) {
    return membershipOf(hopf->alg, coproduct(xi), hopf->R, xi);
}

LieMembership lie_membership(const TwistData& t, const UeaElement& xi) {
    return membershipOf(t.hopf->alg, twistedCoproduct(t, xi), twistedR(t), xi);
}

Report verify_uea_cotwist(const TwistData& t, const std::vector<UeaElement>& gens) {
    const LiePtr& alg = t.hopf->alg;
    BraidedContext base(t.hopf, t.hopf->R);
    TensorElement rt = twistedR(t);
    Report rep;
    rep.suite = "uea-cotwist";
    rep.order = alg->ctx->max_order;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
            const UeaElement& xi = gens[i];
            const UeaElement& eta = gens[j];
            UeaElement lhs = star(t, xi, eta);
            for (const auto& [key, s] : rt.terms())
                lhs -= star(t, adjoint(mono(alg, key[1]), eta),
                            adjoint(mono(alg, key[0]), xi)) * s;
            UeaElement rhs = UeaElement::zero(alg);
            for (const auto& [key, s] : t.F.terms())
                rhs += braided_commutator(base, adjoint(mono(alg, key[0]), xi),
                                          adjoint(mono(alg, key[1]), eta)) * s;
            bool ok = lhs == rhs;
            rep.add("U(g_*) relation [" + xi.str() + ", " + eta.str() + "]", ok,
                    ok ? "" : "difference = " + (lhs - rhs).str());
        }
    return rep;
}

Report verify_hopf_smash_iso(const TwistData& t, const std::vector<UeaElement>& gens) {
    Report rep;
    rep.suite = "hopf-smash-iso";
    rep.order = t.hopf->alg->ctx->max_order;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
            UeaElement lhs = phi(t, star(t, gens[i], gens[j]));
            UeaElement rhs = uea_mul(phi(t, gens[i]), phi(t, gens[j]));
            bool ok = lhs == rhs;
            rep.add("multiplicative [" + gens[i].str() + ", " + gens[j].str() + "]", ok,
                    ok ? "" : "difference = " + (lhs - rhs).str());
        }
    for (const UeaElement& xi : gens) {
        LieMembership m = lie_membership(t, phi(t, xi));
        rep.add("image quasi-primitive [" + xi.str() + "]", m.member,
                m.member ? "" : "residual = " + m.residual.str());
    }
    return rep;
}

bool CurrentElement::Key::operator<(const Key& o) const {
    GradedLexLess less;
    if (less(poly, o.poly)) return true;
    if (less(o.poly, poly)) return false;
    return basis_index < o.basis_index;
}

CurrentElement CurrentElement::basisVector(const ModulePtr& mod, const Exponents& poly, int idx) {
    CurrentElement e(mod);
    e.addTerm({poly, idx}, Series::one(mod->coords->ctx));
    return e;
}

void CurrentElement::addTerm(const Key& k, const Series& s) {
    if (s.isZero()) return;
    auto [it, inserted] = terms_.emplace(k, s);
    if (!inserted) {
        it->second += s;
        if (it->second.isZero()) terms_.erase(it);
    }
}

CurrentElement CurrentElement::operator+(const CurrentElement& o) const {
    CurrentElement r = *this;
    for (const auto& [k, s] : o.terms_) r.addTerm(k, s);
    return r;
}

CurrentElement CurrentElement::operator-(const CurrentElement& o) const {
    CurrentElement r = *this;
    for (const auto& [k, s] : o.terms_) r.addTerm(k, -s);
    return r;
}

CurrentElement CurrentElement::operator*(const Series& s) const {
    CurrentElement r(mod_);
    for (const auto& [k, t] : terms_) r.addTerm(k, t * s);
    return r;
}

bool CurrentElement::operator==(const CurrentElement& o) const {
    return mod_ == o.mod_ && terms_ == o.terms_;
}

namespace {

std::vector<Exponents> monomialsUpTo(size_t ncoords, int max_degree) {
    std::vector<Exponents> out;
    Exponents cur(ncoords, 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (pos == ncoords) {
            out.push_back(cur);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            cur[pos] = d;
            rec(pos + 1, left - d);
        }
        cur[pos] = 0;
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

}  // namespace

CurrentContext::CurrentContext(ModulePtr m, TwistPtr t, BracketTable base_table,
                               int max_poly_degree)
    : mod(std::move(m)),
      twist(std::move(t)),
      braided(twist->hopf, twistedR(*twist)),
      table(twist_bracket(*twist, base_table)) {
    if (mod->lie != twist->hopf->alg)
        throw UsageError("module and twist use different algebras");
    const LiePtr& alg = mod->lie;
    std::vector<Exponents> monos = monomialsUpTo(mod->coords->coords.size(), max_poly_degree);
    for (const auto& ea : monos)
        for (const auto& eb : monos) {
            Poly a = Poly::monomial(mod->coords, ea, Series::one(alg->ctx));
            Poly b = Poly::monomial(mod->coords, eb, Series::one(alg->ctx));
            Poly comm = star(*twist, mod, a, b);
            for (const auto& [key, s] : braided.R.terms())
                comm -= star(*twist, mod, mod->act(mono(alg, key[1]), b),
                             mod->act(mono(alg, key[0]), a)) * s;
            if (!comm.isZero())
                throw DomainError("coordinate algebra is not quasi-commutative: [" + a.str() +
                                  ", " + b.str() + "] = " + comm.str());
        }
}

std::string currentString(const CurrentContext& cc, const CurrentElement& x) {
    std::vector<std::string> parts;
    for (const auto& [k, s] : x.terms()) {
        std::string mstr = coordMonomialString(*cc.mod->coords, k.poly);
        if (mstr.empty()) mstr = "1";
        std::string leg = mstr + " @ " + pbwMonomialString(*cc.mod->lie, cc.table.basis[k.basis_index]);
        if (s == Series::one(cc.mod->coords->ctx))
            parts.push_back(leg);
        else
            parts.push_back("(" + s.str() + ")*" + leg);
    }
    return joinTerms(parts);
}

CurrentElement current_bracket(const CurrentContext& cc, const CurrentElement& x,
                               const CurrentElement& y) {
    const LiePtr& alg = cc.mod->lie;
    size_t n = cc.table.basis.size();
    CurrentElement r(cc.mod);
    for (const auto& [kx, sx] : x.terms()) {
        Poly pa = Poly::monomial(cc.mod->coords, kx.poly, Series::one(alg->ctx));
        for (const auto& [ky, sy] : y.terms()) {
            Poly pb = Poly::monomial(cc.mod->coords, ky.poly, Series::one(alg->ctx));
            for (const auto& [rk, rs] : cc.braided.R.terms()) {
                Series c = sx * sy * rs;
                if (c.isZero()) continue;
                Poly apart = star(*cc.twist, cc.mod, pa, cc.mod->act(mono(alg, rk[1]), pb));
                Vec xi = zeroVec(alg->ctx, n);
                xi[kx.basis_index] = Series::one(alg->ctx);
                Vec eta = zeroVec(alg->ctx, n);
                eta[ky.basis_index] = Series::one(alg->ctx);
                Vec g = bracketVec(cc.table, actVec(cc.table, mono(alg, rk[0]), xi), eta);
                for (const auto& [pe, ps] : apart.terms())
                    for (size_t k = 0; k < n; ++k)
                        r.addTerm({pe, static_cast<int>(k)}, ps * g[k] * c);
            }
        }
    }
    return r;
}

namespace {

// h acting on A |><| g through the effective coproduct.
CurrentElement currentAct(const CurrentContext& cc, const UeaElement& h, const CurrentElement& x) {
    const LiePtr& alg = cc.mod->lie;
    size_t n = cc.table.basis.size();
    CurrentElement r(cc.mod);
    TensorElement d = twistedCoproduct(*cc.twist, h);
    for (const auto& [dk, ds] : d.terms()) {
        for (const auto& [k, s] : x.terms()) {
            Poly pa = cc.mod->act(mono(alg, dk[0]),
                                  Poly::monomial(cc.mod->coords, k.poly, Series::one(alg->ctx)));
            Vec xi = zeroVec(alg->ctx, n);
            xi[k.basis_index] = Series::one(alg->ctx);
            Vec g = actVec(cc.table, mono(alg, dk[1]), xi);
            for (const auto& [pe, ps] : pa.terms())
                for (size_t m = 0; m < n; ++m)
                    r.addTerm({pe, static_cast<int>(m)}, ps * g[m] * ds * s);
        }
    }
    return r;
}

}  // namespace

Report verify_current(const CurrentContext& cc, int max_poly_degree) {
    const LiePtr& alg = cc.mod->lie;
    Report rep;
    rep.suite = "current";
    rep.order = alg->ctx->max_order;

    std::vector<CurrentElement> basis;
    std::vector<std::string> names;
    for (const auto& e : monomialsUpTo(cc.mod->coords->coords.size(), max_poly_degree))
        for (size_t g = 0; g < cc.table.basis.size(); ++g) {
            basis.push_back(CurrentElement::basisVector(cc.mod, e, static_cast<int>(g)));
            std::string mstr = coordMonomialString(*cc.mod->coords, e);
            if (mstr.empty()) mstr = "1";
            names.push_back(mstr + " @ " + pbwMonomialString(*alg, cc.table.basis[g]));
        }

    auto br = [&](const CurrentElement& x, const CurrentElement& y) {
        return current_bracket(cc, x, y);
    };

    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            CurrentElement skew = br(basis[j], basis[i]);
            for (const auto& [rk, rs] : cc.braided.R.terms())
                skew += br(currentAct(cc, mono(alg, rk[1]), basis[i]),
                           currentAct(cc, mono(alg, rk[0]), basis[j])) * rs;
            bool ok = skew.isZero();
            rep.add("skew-symmetry [" + names[i] + ", " + names[j] + "]", ok,
                    ok ? "" : "residual = " + currentString(cc, skew));
        }

    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            for (size_t k = 0; k < basis.size(); ++k) {
                CurrentElement lhs = br(basis[i], br(basis[j], basis[k]));
                CurrentElement rhs = br(br(basis[i], basis[j]), basis[k]);
                for (const auto& [rk, rs] : cc.braided.R.terms())
                    rhs += br(currentAct(cc, mono(alg, rk[1]), basis[j]),
                              br(currentAct(cc, mono(alg, rk[0]), basis[i]), basis[k])) * rs;
                bool ok = lhs == rhs;
                rep.add("braided Jacobi [" + names[i] + ", " + names[j] + ", " + names[k] + "]",
                        ok, ok ? "" : "difference = " + currentString(cc, lhs - rhs));
            }
    return rep;
}

}  // namespace cotwist
