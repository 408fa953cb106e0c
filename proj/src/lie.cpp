#include "cotwist/lie.hpp"

#include <algorithm>
#include <sstream>

#include "cotwist/errors.hpp"

namespace cotwist {

LiePresentation::LiePresentation(ContextPtr context, std::vector<std::string> gens)
    : ctx(std::move(context)), generators(std::move(gens)) {
    size_t n = generators.size();
    c.assign(n, std::vector<std::vector<Series>>(n, std::vector<Series>(n, Series::zero(ctx))));
}

int LiePresentation::indexOf(const std::string& name) const {
    for (size_t k = 0; k < generators.size(); ++k)
        if (generators[k] == name) return static_cast<int>(k);
    return -1;
}

void LiePresentation::setBracket(int i, int j, int k, const Series& coeff) {
    c[i][j][k] = coeff;
    c[j][i][k] = -coeff;
}

std::string ValidationReport::str() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& s : issues) os << s << "\n";
    return os.str();
}

ValidationReport validatePresentation(const LiePresentation& p) {
    ValidationReport rep;
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!(p.c[i][j][k] == -p.c[j][i][k]))
                    rep.issues.push_back("antisymmetry violated: c[" + p.generators[i] + "][" +
                                         p.generators[j] + "][" + p.generators[k] + "]");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    Series sum = Series::zero(p.ctx);
                    for (size_t m = 0; m < n; ++m)
                        sum += p.c[i][j][m] * p.c[m][k][l] + p.c[j][k][m] * p.c[m][i][l] +
                               p.c[k][i][m] * p.c[m][j][l];
                    if (!sum.isZero())
                        rep.issues.push_back("Jacobi violated on (" + p.generators[i] + ", " +
                                             p.generators[j] + ", " + p.generators[k] +
                                             ") in component " + p.generators[l]);
                }
    return rep;
}

LiePtr makeLie(LiePresentation p) {
    auto rep = validatePresentation(p);
    if (!rep.ok()) throw UsageError("invalid Lie presentation:\n" + rep.str());
    return std::make_shared<const LiePresentation>(std::move(p));
}

namespace {

void requireSameAlgebra(const LiePtr& a, const LiePtr& b) {
    if (a != b) throw UsageError("Lie algebra mismatch between operands");
}

}  // namespace

UeaElement UeaElement::one(const LiePtr& alg) {
    UeaElement e(alg);
    e.addTerm(PbwMonomial(alg->size(), 0), Series::one(alg->ctx));
    return e;
}

UeaElement UeaElement::generator(const LiePtr& alg, int idx) {
    if (idx < 0 || idx >= static_cast<int>(alg->size())) throw UsageError("generator index out of range");
    PbwMonomial m(alg->size(), 0);
    m[idx] = 1;
    UeaElement e(alg);
    e.addTerm(m, Series::one(alg->ctx));
    return e;
}

UeaElement UeaElement::monomial(const LiePtr& alg, const PbwMonomial& m, const Series& coeff) {
    UeaElement e(alg);
    e.addTerm(m, coeff);
    return e;
}

void UeaElement::addTerm(const PbwMonomial& m, const Series& coeff) {
    if (coeff.isZero()) return;
    if (m.size() != alg_->size()) throw UsageError("PBW monomial length does not match generator count");
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.isZero()) terms_.erase(it);
    }
}

UeaElement UeaElement::operator+(const UeaElement& o) const {
    requireSameAlgebra(alg_, o.alg_);
    UeaElement r = *this;
    for (const auto& [m, s] : o.terms_) r.addTerm(m, s);
    return r;
}

UeaElement UeaElement::operator-(const UeaElement& o) const {
    requireSameAlgebra(alg_, o.alg_);
    UeaElement r = *this;
    for (const auto& [m, s] : o.terms_) r.addTerm(m, -s);
    return r;
}

UeaElement UeaElement::operator-() const {
    UeaElement r(alg_);
    for (const auto& [m, s] : terms_) r.terms_.emplace(m, -s);
    return r;
}

UeaElement UeaElement::operator*(const Series& s) const {
    UeaElement r(alg_);
    for (const auto& [m, t] : terms_) r.addTerm(m, t * s);
    return r;
}

bool UeaElement::operator==(const UeaElement& o) const {
    return alg_ == o.alg_ && terms_ == o.terms_;
}

Series UeaElement::unitCoefficient() const {
    PbwMonomial unit(alg_->size(), 0);
    auto it = terms_.find(unit);
    return it == terms_.end() ? Series::zero(alg_->ctx) : it->second;
}

std::vector<int> wordOf(const PbwMonomial& m) {
    std::vector<int> w;
    for (size_t g = 0; g < m.size(); ++g)
        for (int k = 0; k < m[g]; ++k) w.push_back(static_cast<int>(g));
    return w;
}

UeaElement normalizeWord(const LiePtr& alg, const std::vector<int>& word, const Series& coeff) {
    UeaElement result(alg);
    if (coeff.isZero()) return result;
    std::vector<std::pair<std::vector<int>, Series>> stack{{word, coeff}};
    while (!stack.empty()) {
        auto [w, s] = std::move(stack.back());
        stack.pop_back();
        if (s.isZero()) continue;
        if (static_cast<int>(w.size()) > alg->degree_cap)
            throw ResourceError("PBW word degree exceeds the cap of " +
                                std::to_string(alg->degree_cap));
        size_t k = 0;
        while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
        if (k + 1 >= w.size()) {
            PbwMonomial m(alg->size(), 0);
            for (int g : w) m[g] += 1;
            result.addTerm(m, s);
            continue;
        }
        int j = w[k], i = w[k + 1];  // j > i: out of order
        std::vector<int> swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        stack.emplace_back(std::move(swapped), s);
        for (size_t m = 0; m < alg->size(); ++m) {
            const Series& cjim = alg->c[j][i][m];
            if (cjim.isZero()) continue;
            std::vector<int> reduced;
            reduced.reserve(w.size() - 1);
            reduced.insert(reduced.end(), w.begin(), w.begin() + k);
            reduced.push_back(static_cast<int>(m));
            reduced.insert(reduced.end(), w.begin() + k + 2, w.end());
            stack.emplace_back(std::move(reduced), s * cjim);
        }
    }
    return result;
}

UeaElement uea_mul(const UeaElement& a, const UeaElement& b) {
    requireSameAlgebra(a.algebra(), b.algebra());
    UeaElement r(a.algebra());
    for (const auto& [ma, sa] : a.terms()) {
        std::vector<int> wa = wordOf(ma);
        for (const auto& [mb, sb] : b.terms()) {
            Series s = sa * sb;
            if (s.isZero()) continue;
            std::vector<int> w = wa;
            std::vector<int> wb = wordOf(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            r += normalizeWord(a.algebra(), w, s);
        }
    }
    return r;
}

UeaElement uea_invert(const UeaElement& a) {
    const auto& alg = a.algebra();
    Series c0 = a.unitCoefficient();
    GaussianRational q0 = c0.constantTerm();
    if (q0.isZero()) throw DomainError("element is not invertible at the unit monomial");
    // a = q0 (1 - d) with d of positive deformation degree.
    UeaElement d = UeaElement::one(alg) - a * Series::constant(alg->ctx, q0.inverse());
    for (const auto& [m, s] : d.terms())
        if (s.minDegree() < 1)
            throw DomainError("inverse supported only for unit + O(deformation) elements");
    UeaElement result = UeaElement::one(alg);
    UeaElement power = UeaElement::one(alg);
    for (int k = 1; k <= alg->ctx->max_order; ++k) {
        power = uea_mul(power, d);
        if (power.isZero()) break;
        result += power;
    }
    return result * Series::constant(alg->ctx, q0.inverse());
}

bool TensorElement::KeyLess::operator()(const Key& a, const Key& b) const {
    int da = 0, db = 0;
    for (const auto& m : a) da += totalDegree(m);
    for (const auto& m : b) db += totalDegree(m);
    if (da != db) return da < db;
    GradedLexLess less;
    for (size_t k = 0; k < a.size() && k < b.size(); ++k) {
        if (less(a[k], b[k])) return true;
        if (less(b[k], a[k])) return false;
    }
    return a.size() < b.size();
}

TensorElement::TensorElement(LiePtr alg, int arity) : alg_(std::move(alg)), arity_(arity) {
    if (arity < 1) throw UsageError("tensor arity must be at least 1");
}

TensorElement TensorElement::unit(const LiePtr& alg, int arity) {
    TensorElement t(alg, arity);
    Key k(arity, PbwMonomial(alg->size(), 0));
    t.addTerm(k, Series::one(alg->ctx));
    return t;
}

TensorElement TensorElement::fromLeg(const UeaElement& a) {
    TensorElement t(a.algebra(), 1);
    for (const auto& [m, s] : a.terms()) t.addTerm({m}, s);
    return t;
}

void TensorElement::addTerm(const Key& k, const Series& coeff) {
    if (coeff.isZero()) return;
    if (static_cast<int>(k.size()) != arity_) throw UsageError("tensor key arity mismatch");
    auto [it, inserted] = terms_.emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.isZero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    requireSameAlgebra(alg_, o.alg_);
    if (arity_ != o.arity_) throw UsageError("tensor arity mismatch");
    TensorElement r = *this;
    for (const auto& [k, s] : o.terms_) r.addTerm(k, s);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    requireSameAlgebra(alg_, o.alg_);
    if (arity_ != o.arity_) throw UsageError("tensor arity mismatch");
    TensorElement r = *this;
    for (const auto& [k, s] : o.terms_) r.addTerm(k, -s);
    return r;
}

TensorElement TensorElement::operator-() const {
    TensorElement r(alg_, arity_);
    for (const auto& [k, s] : terms_) r.terms_.emplace(k, -s);
    return r;
}

TensorElement TensorElement::operator*(const Series& s) const {
    TensorElement r(alg_, arity_);
    for (const auto& [k, t] : terms_) r.addTerm(k, t * s);
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
    return alg_ == o.alg_ && arity_ == o.arity_ && terms_ == o.terms_;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
    requireSameAlgebra(a.algebra(), b.algebra());
    if (a.arity() != b.arity()) throw UsageError("tensor arity mismatch in tensor_mul");
    const auto& alg = a.algebra();
    TensorElement r(alg, a.arity());
    for (const auto& [ka, sa] : a.terms()) {
        for (const auto& [kb, sb] : b.terms()) {
            Series s = sa * sb;
            if (s.isZero()) continue;
            // Legwise products, then distribute across legs.
            std::vector<UeaElement> legs;
            legs.reserve(a.arity());
            bool dead = false;
            for (int leg = 0; leg < a.arity(); ++leg) {
                std::vector<int> w = wordOf(ka[leg]);
                std::vector<int> wb = wordOf(kb[leg]);
                w.insert(w.end(), wb.begin(), wb.end());
                UeaElement prod = normalizeWord(alg, w, Series::one(alg->ctx));
                if (prod.isZero()) {
                    dead = true;
                    break;
                }
                legs.push_back(std::move(prod));
            }
            if (dead) continue;
            // Cartesian product over the legs' terms.
            std::vector<UeaElement::TermMap::const_iterator> its, ends;
            for (const auto& l : legs) {
                its.push_back(l.terms().begin());
                ends.push_back(l.terms().end());
            }
            while (true) {
                TensorElement::Key key;
                Series coeff = s;
                for (size_t leg = 0; leg < legs.size(); ++leg) {
                    key.push_back(its[leg]->first);
                    coeff *= its[leg]->second;
                }
                r.addTerm(key, coeff);
                int leg = static_cast<int>(legs.size()) - 1;
                while (leg >= 0) {
                    if (++its[leg] != ends[leg]) break;
                    its[leg] = legs[leg].terms().begin();
                    --leg;
                }
                if (leg < 0) break;
            }
        }
    }
    return r;
}

TensorElement embed_legs(const TensorElement& a, int target_arity, const std::vector<int>& legs) {
    if (static_cast<int>(legs.size()) != a.arity())
        throw UsageError("embed_legs: leg list length must equal tensor arity");
    std::vector<bool> used(target_arity, false);
    for (int l : legs) {
        if (l < 1 || l > target_arity) throw UsageError("embed_legs: leg index out of range");
        if (used[l - 1]) throw UsageError("embed_legs: repeated leg index");
        used[l - 1] = true;
    }
    const auto& alg = a.algebra();
    TensorElement r(alg, target_arity);
    PbwMonomial unit(alg->size(), 0);
    for (const auto& [k, s] : a.terms()) {
        TensorElement::Key key(target_arity, unit);
        for (size_t p = 0; p < legs.size(); ++p) key[legs[p] - 1] = k[p];
        r.addTerm(key, s);
    }
    return r;
}

TensorElement outer(const TensorElement& a, const TensorElement& b) {
    requireSameAlgebra(a.algebra(), b.algebra());
    TensorElement r(a.algebra(), a.arity() + b.arity());
    for (const auto& [ka, sa] : a.terms())
        for (const auto& [kb, sb] : b.terms()) {
            Series s = sa * sb;
            if (s.isZero()) continue;
            TensorElement::Key key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            r.addTerm(key, s);
        }
    return r;
}

TensorElement apply_leg(const TensorElement& a, int leg,
                        const std::function<UeaElement(const UeaElement&)>& m) {
    if (leg < 1 || leg > a.arity()) throw UsageError("apply_leg: leg index out of range");
    const auto& alg = a.algebra();
    TensorElement r(alg, a.arity());
    for (const auto& [k, s] : a.terms()) {
        UeaElement image = m(UeaElement::monomial(alg, k[leg - 1], Series::one(alg->ctx)));
        for (const auto& [mi, si] : image.terms()) {
            TensorElement::Key key = k;
            key[leg - 1] = mi;
            r.addTerm(key, s * si);
        }
    }
    return r;
}

TensorElement tensor_invert(const TensorElement& a) {
    const auto& alg = a.algebra();
    TensorElement u = TensorElement::unit(alg, a.arity());
    TensorElement d = u - a;
    for (const auto& [k, s] : d.terms())
        if (s.minDegree() < 1)
            throw DomainError("tensor inverse supported only for unit + O(deformation) tensors");
    TensorElement result = u;
    TensorElement power = u;
    for (int k = 1; k <= alg->ctx->max_order; ++k) {
        power = tensor_mul(power, d);
        if (power.isZero()) break;
        result += power;
    }
    return result;
}

std::string pbwMonomialString(const LiePresentation& alg, const PbwMonomial& m) {
    std::string out;
    for (size_t g = 0; g < m.size(); ++g) {
        if (m[g] == 0) continue;
        if (!out.empty()) out += "*";
        out += alg.generators[g];
        if (m[g] > 1) out += "^" + std::to_string(m[g]);
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
        std::string paramPart = bare.str();  // monomial in the parameters, coeff 1
        std::string full = paramPart == "1" ? monomial : paramPart + "*" + monomial;
        return termString(c, full);
    }
    return "(" + s.str() + ")*" + monomial;
}

}  // namespace

std::string UeaElement::str() const {
    std::vector<std::string> parts;
    for (const auto& [m, s] : terms_) parts.push_back(seriesFactor(s, pbwMonomialString(*alg_, m)));
    return joinTerms(parts);
}

std::string TensorElement::str(
    const std::function<std::string(const PbwMonomial&)>& legPrinter) const {
    std::vector<std::string> parts;
    for (const auto& [k, s] : terms_) {
        std::vector<std::string> legs;
        for (const auto& m : k) {
            std::string ls = legPrinter(m);
            legs.push_back(ls.empty() ? "1" : ls);
        }
        std::string mono = legs[0];
        for (size_t p = 1; p < legs.size(); ++p) mono += " @ " + legs[p];
        if (arity_ == 1 && mono == "1") mono.clear();
        parts.push_back(seriesFactor(s, mono));
    }
    return joinTerms(parts);
}

std::string TensorElement::str() const {
    return str([this](const PbwMonomial& m) { return pbwMonomialString(*alg_, m); });
}

}  // namespace cotwist
