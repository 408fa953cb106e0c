#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cotwist/rational.hpp"

namespace cotwist {

// The set of formal deformation parameters and the truncation order shared
// by every scalar in one computation.  N = 0 is the classical (undeformed)
// theory and must work.
struct DeformationContext {
    std::vector<std::string> params;
    int max_order = 4;

    DeformationContext(std::vector<std::string> names, int order);

    int indexOf(const std::string& name) const;  // -1 when absent
    bool operator==(const DeformationContext& o) const = default;
};

using ContextPtr = std::shared_ptr<const DeformationContext>;

ContextPtr makeContext(std::vector<std::string> params, int max_order);

// Exponent vector, one entry per parameter (or per coordinate / generator in
// the higher layers, which reuse the same ordering).
using Exponents = std::vector<int>;

int totalDegree(const Exponents& e);

// Graded lexicographic order: lower total degree first, then lex.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Truncated polynomial in the deformation parameters over Q(i).  Terms of
// total degree above the context's max_order are discarded on every
// operation; stored coefficients are never zero.
class Series {
public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLexLess>;

    explicit Series(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    Series(ContextPtr ctx, const GaussianRational& c);

    static Series zero(const ContextPtr& ctx) { return Series(ctx); }
    static Series one(const ContextPtr& ctx) { return Series(ctx, GaussianRational::one()); }
    static Series constant(const ContextPtr& ctx, const GaussianRational& c) { return Series(ctx, c); }
    static Series param(const ContextPtr& ctx, const std::string& name);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    GaussianRational constantTerm() const;
    bool isConstant() const;

    // Smallest total degree among stored terms (max_order + 1 for zero).
    int minDegree() const;

    void addTerm(const Exponents& e, const GaussianRational& c);

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;
    Series operator*(const GaussianRational& c) const;
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    // exp(a) for a with zero constant term; Taylor sum to max_order.
    Series exp() const;
    // Multiplicative inverse for unit constant term, exact at max_order.
    Series invert() const;

    bool operator==(const Series& o) const;

    std::string str() const;

private:
    ContextPtr ctx_;
    TermMap terms_;
};

// Both operands of a binary operation must share one context.
void requireSameContext(const Series& a, const Series& b);

// Printing helpers shared by all element printers.
std::string termString(const GaussianRational& c, const std::string& monomial);
std::string joinTerms(const std::vector<std::string>& parts);

}  // namespace cotwist
