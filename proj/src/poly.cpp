#include "cotwist/poly.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

int CoordinateAlgebra::indexOf(const std::string& name) const {
    for (size_t k = 0; k < coords.size(); ++k)
        if (coords[k] == name) return static_cast<int>(k);
    return -1;
}

CoordPtr makeCoords(ContextPtr ctx, std::vector<std::string> coords) {
    return std::make_shared<const CoordinateAlgebra>(CoordinateAlgebra{std::move(ctx), std::move(coords)});
}

namespace {

void requireSameCoords(const CoordPtr& a, const CoordPtr& b) {
    if (a != b) throw UsageError("coordinate algebra mismatch between operands");
}

}  // namespace

Poly Poly::one(const CoordPtr& c) { return constant(c, Series::one(c->ctx)); }

Poly Poly::constant(const CoordPtr& c, const Series& s) {
    Poly p(c);
    p.addTerm(Exponents(c->coords.size(), 0), s);
    return p;
}

Poly Poly::coordinate(const CoordPtr& c, int idx) {
    if (idx < 0 || idx >= static_cast<int>(c->coords.size()))
        throw UsageError("coordinate index out of range");
    Exponents e(c->coords.size(), 0);
    e[idx] = 1;
    return monomial(c, e, Series::one(c->ctx));
}

Poly Poly::monomial(const CoordPtr& c, const Exponents& e, const Series& s) {
    Poly p(c);
    p.addTerm(e, s);
    return p;
}

void Poly::addTerm(const Exponents& e, const Series& s) {
    if (s.isZero()) return;
    if (e.size() != coords_->coords.size()) throw UsageError("coordinate exponent length mismatch");
    auto [it, inserted] = terms_.emplace(e, s);
    if (!inserted) {
        it->second += s;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    requireSameCoords(coords_, o.coords_);
    Poly r = *this;
    for (const auto& [e, s] : o.terms_) r.addTerm(e, s);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    requireSameCoords(coords_, o.coords_);
    Poly r = *this;
    for (const auto& [e, s] : o.terms_) r.addTerm(e, -s);
    return r;
}

Poly Poly::operator-() const {
    Poly r(coords_);
    for (const auto& [e, s] : terms_) r.terms_.emplace(e, -s);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    requireSameCoords(coords_, o.coords_);
    Poly r(coords_);
    for (const auto& [ea, sa] : terms_)
        for (const auto& [eb, sb] : o.terms_) {
            Series s = sa * sb;
            if (s.isZero()) continue;
            Exponents e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.addTerm(e, s);
        }
    return r;
}

Poly Poly::operator*(const Series& s) const {
    Poly r(coords_);
    for (const auto& [e, t] : terms_) r.addTerm(e, t * s);
    return r;
}

Poly Poly::derivative(int coord) const {
    Poly r(coords_);
    for (const auto& [e, s] : terms_) {
        if (e[coord] == 0) continue;
        Exponents d = e;
        d[coord] -= 1;
        r.addTerm(d, s * GaussianRational(Rational(e[coord])));
    }
    return r;
}

bool Poly::operator==(const Poly& o) const { return coords_ == o.coords_ && terms_ == o.terms_; }

std::string coordMonomialString(const CoordinateAlgebra& ca, const Exponents& e) {
    std::string out;
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += ca.coords[k];
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
    return out;
}

namespace {

std::string seriesFactor(const Series& s, const std::string& monomial) {
    if (monomial.empty()) return s.str();
    if (s.terms().size() == 1) {
        const auto& [e, c] = *s.terms().begin();
        Series bare(s.context());
        bare.addTerm(e, GaussianRational::one());
        std::string paramPart = bare.str();
        std::string full = paramPart == "1" ? monomial : paramPart + "*" + monomial;
        return termString(c, full);
    }
    return "(" + s.str() + ")*" + monomial;
}

}  // namespace

std::string Poly::str() const {
    std::vector<std::string> parts;
    for (const auto& [e, s] : terms_) parts.push_back(seriesFactor(s, coordMonomialString(*coords_, e)));
    return joinTerms(parts);
}

DiffOperator DiffOperator::identity(const CoordPtr& c) {
    DiffOperator d(c);
    d.addTerm(Exponents(c->coords.size(), 0), Poly::one(c));
    return d;
}

DiffOperator DiffOperator::partial(const CoordPtr& c, int coord) {
    if (coord < 0 || coord >= static_cast<int>(c->coords.size()))
        throw UsageError("coordinate index out of range");
    Exponents alpha(c->coords.size(), 0);
    alpha[coord] = 1;
    DiffOperator d(c);
    d.addTerm(alpha, Poly::one(c));
    return d;
}

DiffOperator DiffOperator::multiplication(const Poly& p) {
    DiffOperator d(p.coords());
    d.addTerm(Exponents(p.coords()->coords.size(), 0), p);
    return d;
}

void DiffOperator::addTerm(const Exponents& alpha, const Poly& coeff) {
    if (coeff.isZero()) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, coeff);
    } else {
        it->second += coeff;
        if (it->second.isZero()) terms_.erase(it);
    }
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    requireSameCoords(coords_, o.coords_);
    DiffOperator r = *this;
    for (const auto& [a, p] : o.terms_) r.addTerm(a, p);
    return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
    requireSameCoords(coords_, o.coords_);
    DiffOperator r = *this;
    for (const auto& [a, p] : o.terms_) r.addTerm(a, -p);
    return r;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(coords_);
    for (const auto& [a, p] : terms_) r.terms_.emplace(a, -p);
    return r;
}

DiffOperator DiffOperator::operator*(const Series& s) const {
    DiffOperator r(coords_);
    for (const auto& [a, p] : terms_) r.addTerm(a, p * s);
    return r;
}

namespace {

Poly applyMulti(const Exponents& alpha, const Poly& p) {
    Poly r = p;
    for (size_t c = 0; c < alpha.size(); ++c)
        for (int k = 0; k < alpha[c]; ++k) r = r.derivative(static_cast<int>(c));
    return r;
}

// Iterates gamma <= alpha componentwise, with the multinomial factor
// prod_c binom(alpha_c, gamma_c).
void forEachSubMulti(const Exponents& alpha,
                     const std::function<void(const Exponents&, const Rational&)>& fn) {
    Exponents gamma(alpha.size(), 0);
    std::function<void(size_t, Rational)> rec = [&](size_t c, Rational binom) {
        if (c == alpha.size()) {
            fn(gamma, binom);
            return;
        }
        Rational b(1);
        for (int k = 0; k <= alpha[c]; ++k) {
            gamma[c] = k;
            rec(c + 1, binom * b);
            b = b * (alpha[c] - k) / (k + 1);
        }
        gamma[c] = 0;
    };
    rec(0, Rational(1));
}

}  // namespace

Poly DiffOperator::apply(const Poly& p) const {
    requireSameCoords(coords_, p.coords());
    Poly r(coords_);
    for (const auto& [alpha, coeff] : terms_) r += coeff * applyMulti(alpha, p);
    return r;
}

DiffOperator DiffOperator::compose(const DiffOperator& o) const {
    requireSameCoords(coords_, o.coords_);
    DiffOperator r(coords_);
    // (f d^alpha)(g d^beta) = sum_{gamma<=alpha} binom(alpha,gamma) f d^gamma(g) d^{alpha-gamma+beta}
    for (const auto& [alpha, f] : terms_) {
        for (const auto& [beta, g] : o.terms_) {
            forEachSubMulti(alpha, [&](const Exponents& gamma, const Rational& binom) {
                Poly dg = applyMulti(gamma, g);
                if (dg.isZero()) return;
                Exponents idx(alpha.size());
                for (size_t c = 0; c < idx.size(); ++c) idx[c] = alpha[c] - gamma[c] + beta[c];
                r.addTerm(idx, f * dg * Series::constant(coords_->ctx, GaussianRational(binom)));
            });
        }
    }
    return r;
}

int DiffOperator::order() const {
    int best = -1;
    for (const auto& [alpha, p] : terms_) best = std::max(best, totalDegree(alpha));
    return best;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
    return coords_ == o.coords_ && terms_ == o.terms_;
}

std::string DiffOperator::str() const {
    std::vector<std::string> parts;
    for (const auto& [alpha, p] : terms_) {
        std::string dpart;
        for (size_t c = 0; c < alpha.size(); ++c)
            for (int k = 0; k < alpha[c]; ++k) {
                if (!dpart.empty()) dpart += "*";
                dpart += "d_" + coords_->coords[c];
            }
        std::string cs = p.str();
        if (dpart.empty())
            parts.push_back(cs);
        else if (cs == "1")
            parts.push_back(dpart);
        else if (cs == "-1")
            parts.push_back("-" + dpart);
        else if (p.terms().size() == 1 && p.terms().begin()->second.terms().size() <= 1)
            parts.push_back(cs + "*" + dpart);
        else
            parts.push_back("(" + cs + ")*" + dpart);
    }
    return joinTerms(parts);
}

PolyModuleAlgebra::PolyModuleAlgebra(LiePtr g, CoordPtr c, ActionSpec a)
    : lie(std::move(g)), coords(std::move(c)), action(std::move(a)) {
    if (action.generator_ops.size() != lie->size())
        throw UsageError("action spec must cover every Lie generator");
    auto rep = validateAction(*lie, *coords, action);
    if (!rep.ok()) throw UsageError("invalid action spec:\n" + rep.str());
}

ValidationReport validateAction(const LiePresentation& g, const CoordinateAlgebra& c,
                                const ActionSpec& a) {
    ValidationReport rep;
    size_t n = g.size();
    for (size_t i = 0; i < n; ++i) {
        if (a.generator_ops[i].order() > 1)
            rep.issues.push_back("action of " + g.generators[i] + " is not first order");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            DiffOperator lhs = a.generator_ops[i].compose(a.generator_ops[j]) -
                               a.generator_ops[j].compose(a.generator_ops[i]);
            DiffOperator rhs = DiffOperator::zero(a.generator_ops[i].coords());
            for (size_t k = 0; k < n; ++k) rhs += a.generator_ops[k] * g.c[i][j][k];
            if (!(lhs == rhs))
                rep.issues.push_back("representation property fails on [" + g.generators[i] +
                                     ", " + g.generators[j] + "]");
        }
    return rep;
}

DiffOperator PolyModuleAlgebra::represent(const UeaElement& h) const {
    DiffOperator result = DiffOperator::zero(coords);
    for (const auto& [m, s] : h.terms()) {
        DiffOperator op = DiffOperator::identity(coords) * s;
        for (size_t g = 0; g < m.size(); ++g)
            for (int k = 0; k < m[g]; ++k) op = op.compose(action.generator_ops[g]);
        result += op;
    }
    return result;
}

Poly PolyModuleAlgebra::act(const UeaElement& h, const Poly& p) const {
    return represent(h).apply(p);
}

ModulePtr makeModule(LiePtr g, CoordPtr c, ActionSpec a) {
    return std::make_shared<const PolyModuleAlgebra>(std::move(g), std::move(c), std::move(a));
}

}  // namespace cotwist
