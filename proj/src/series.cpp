#include "cotwist/series.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cotwist/errors.hpp"

namespace cotwist {

DeformationContext::DeformationContext(std::vector<std::string> names, int order)
    : params(std::move(names)), max_order(order) {
    if (order < 0) throw UsageError("truncation order must be non-negative");
    std::set<std::string> seen;
    for (const auto& p : params)
        if (!seen.insert(p).second) throw UsageError("duplicate deformation parameter '" + p + "'");
}

int DeformationContext::indexOf(const std::string& name) const {
    for (size_t k = 0; k < params.size(); ++k)
        if (params[k] == name) return static_cast<int>(k);
    return -1;
}

ContextPtr makeContext(std::vector<std::string> params, int max_order) {
    return std::make_shared<const DeformationContext>(std::move(params), max_order);
}

int totalDegree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Series::Series(ContextPtr ctx, const GaussianRational& c) : ctx_(std::move(ctx)) {
    if (!c.isZero()) terms_[Exponents(ctx_->params.size(), 0)] = c;
}

Series Series::param(const ContextPtr& ctx, const std::string& name) {
    int k = ctx->indexOf(name);
    if (k < 0) throw UsageError("unknown deformation parameter '" + name + "'");
    Series s(ctx);
    if (ctx->max_order >= 1) {
        Exponents e(ctx->params.size(), 0);
        e[k] = 1;
        s.terms_[e] = GaussianRational::one();
    }
    return s;
}

GaussianRational Series::constantTerm() const {
    Exponents unit(ctx_->params.size(), 0);
    auto it = terms_.find(unit);
    return it == terms_.end() ? GaussianRational::zero() : it->second;
}

bool Series::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && totalDegree(terms_.begin()->first) == 0);
}

int Series::minDegree() const {
    if (terms_.empty()) return ctx_->max_order + 1;
    return totalDegree(terms_.begin()->first);
}

void Series::addTerm(const Exponents& e, const GaussianRational& c) {
    if (c.isZero()) return;
    if (static_cast<int>(e.size()) != static_cast<int>(ctx_->params.size()))
        throw UsageError("exponent vector length does not match parameter count");
    if (totalDegree(e) > ctx_->max_order) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

void requireSameContext(const Series& a, const Series& b) {
    if (a.context() != b.context() && !(*a.context() == *b.context()))
        throw UsageError("deformation context mismatch");
}

Series Series::operator+(const Series& o) const {
    requireSameContext(*this, o);
    Series r = *this;
    for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
    return r;
}

Series Series::operator-(const Series& o) const {
    requireSameContext(*this, o);
    Series r = *this;
    for (const auto& [e, c] : o.terms_) r.addTerm(e, -c);
    return r;
}

Series Series::operator-() const {
    Series r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Series Series::operator*(const GaussianRational& c) const {
    Series r(ctx_);
    if (c.isZero()) return r;
    for (const auto& [e, q] : terms_) r.terms_[e] = q * c;
    return r;
}

Series Series::operator*(const Series& o) const {
    requireSameContext(*this, o);
    Series r(ctx_);
    const int cap = ctx_->max_order;
    for (const auto& [ea, ca] : terms_) {
        int da = totalDegree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + totalDegree(eb) > cap) continue;
            Exponents e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.addTerm(e, ca * cb);
        }
    }
    return r;
}

Series Series::exp() const {
    if (!constantTerm().isZero())
        throw DomainError("series_exp requires zero constant term");
    Series result = Series::one(ctx_);
    Series power = Series::one(ctx_);
    Rational factorial(1);
    for (int k = 1; k <= ctx_->max_order; ++k) {
        power *= *this;
        if (power.isZero()) break;
        factorial *= k;
        result += power * GaussianRational(Rational(1) / factorial);
    }
    return result;
}

Series Series::invert() const {
    GaussianRational c0 = constantTerm();
    if (c0.isZero()) throw DomainError("series_invert requires invertible constant term");
    // a = c0 (1 - t) with t of positive degree; a^{-1} = c0^{-1} sum t^k.
    GaussianRational c0inv = c0.inverse();
    Series t = Series::one(ctx_) - (*this) * c0inv;
    Series result = Series::one(ctx_);
    Series power = Series::one(ctx_);
    for (int k = 1; k <= ctx_->max_order; ++k) {
        power *= t;
        if (power.isZero()) break;
        result += power;
    }
    return result * c0inv;
}

bool Series::operator==(const Series& o) const {
    return (*ctx_ == *o.ctx_) && terms_ == o.terms_;
}

namespace {

std::string paramMonomial(const DeformationContext& ctx, const Exponents& e) {
    std::string out;
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.params[k];
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
    return out;
}

}  // namespace

std::string termString(const GaussianRational& c, const std::string& monomial) {
    if (monomial.empty()) return toString(c);
    if (c == GaussianRational::one()) return monomial;
    if (c == -GaussianRational::one()) return "-" + monomial;
    if (needsParens(c)) return "(" + toString(c) + ")*" + monomial;
    return toString(c) + "*" + monomial;
}

std::string joinTerms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t k = 1; k < parts.size(); ++k) {
        if (parts[k][0] == '-')
            out += " - " + parts[k].substr(1);
        else
            out += " + " + parts[k];
    }
    return out;
}

std::string Series::str() const {
    std::vector<std::string> parts;
    for (const auto& [e, c] : terms_) parts.push_back(termString(c, paramMonomial(*ctx_, e)));
    return joinTerms(parts);
}

}  // namespace cotwist
