#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cotwist/series.hpp"

namespace cotwist {

// Lie algebra given by structure constants over the scalar ring.  The
// generator order is the PBW order; c[i][j][k] is the coefficient of
// generator k in [g_i, g_j].
struct LiePresentation {
    ContextPtr ctx;
    std::vector<std::string> generators;
    std::vector<std::vector<std::vector<Series>>> c;
    int degree_cap = 32;

    LiePresentation(ContextPtr context, std::vector<std::string> gens);

    size_t size() const { return generators.size(); }
    int indexOf(const std::string& name) const;
    void setBracket(int i, int j, int k, const Series& coeff);  // sets c[i][j][k] and -c[j][i][k]
};

using LiePtr = std::shared_ptr<const LiePresentation>;

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

// Checks antisymmetry and the classical Jacobi identity exactly; lists every
// violated triple.
ValidationReport validatePresentation(const LiePresentation& p);

// Validating factory used by everything downstream.
LiePtr makeLie(LiePresentation p);

// PBW monomial g_1^{e_1}...g_n^{e_n} is just its exponent vector; the empty
// (all-zero) vector is the unit.
using PbwMonomial = Exponents;

class UeaElement {
public:
    using TermMap = std::map<PbwMonomial, Series, GradedLexLess>;

    explicit UeaElement(LiePtr alg) : alg_(std::move(alg)) {}

    static UeaElement zero(const LiePtr& alg) { return UeaElement(alg); }
    static UeaElement one(const LiePtr& alg);
    static UeaElement generator(const LiePtr& alg, int idx);
    static UeaElement monomial(const LiePtr& alg, const PbwMonomial& m, const Series& coeff);

    const LiePtr& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void addTerm(const PbwMonomial& m, const Series& coeff);

    UeaElement operator+(const UeaElement& o) const;
    UeaElement operator-(const UeaElement& o) const;
    UeaElement operator-() const;
    UeaElement operator*(const Series& s) const;
    UeaElement& operator+=(const UeaElement& o) { return *this = *this + o; }
    UeaElement& operator-=(const UeaElement& o) { return *this = *this - o; }

    bool operator==(const UeaElement& o) const;

    // Coefficient of the unit monomial.
    Series unitCoefficient() const;

    std::string str() const;

private:
    LiePtr alg_;
    TermMap terms_;
};

// Normal-form product via the PBW straightening rule
// g_j g_i = g_i g_j + sum_k c[j][i][k] g_k  (j > i).
UeaElement uea_mul(const UeaElement& a, const UeaElement& b);

// Normalizes an arbitrary word of generator indices times a coefficient.
UeaElement normalizeWord(const LiePtr& alg, const std::vector<int>& word, const Series& coeff);

std::vector<int> wordOf(const PbwMonomial& m);

// Inverse at truncation order, for elements of the form unit + higher
// deformation degree (times an invertible constant).
UeaElement uea_invert(const UeaElement& a);

// Element of U(g)^{tensor k} in legwise normal form.
class TensorElement {
public:
    using Key = std::vector<PbwMonomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using TermMap = std::map<Key, Series, KeyLess>;

    TensorElement(LiePtr alg, int arity);

    static TensorElement unit(const LiePtr& alg, int arity);
    static TensorElement fromLeg(const UeaElement& a);  // arity 1

    const LiePtr& algebra() const { return alg_; }
    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void addTerm(const Key& k, const Series& coeff);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator-() const;
    TensorElement operator*(const Series& s) const;
    TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }
    TensorElement& operator-=(const TensorElement& o) { return *this = *this - o; }

    bool operator==(const TensorElement& o) const;

    std::string str(const std::function<std::string(const PbwMonomial&)>& legPrinter) const;
    std::string str() const;

private:
    LiePtr alg_;
    int arity_;
    TermMap terms_;
};

// Legwise product in U(g)^{tensor k}.
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

// Places a into the (1-based) legs of an identity tensor of the target
// arity; legs is injective and may be out of order (supports leg flips).
TensorElement embed_legs(const TensorElement& a, int target_arity, const std::vector<int>& legs);

// Kronecker product: legs of a followed by legs of b.
TensorElement outer(const TensorElement& a, const TensorElement& b);

// Applies an arity-preserving linear map (e.g. the antipode) to one 1-based leg.
TensorElement apply_leg(const TensorElement& a, int leg,
                        const std::function<UeaElement(const UeaElement&)>& m);

// Inverse at truncation order for tensors of the form unit + higher
// deformation degree.
TensorElement tensor_invert(const TensorElement& a);

std::string pbwMonomialString(const LiePresentation& alg, const PbwMonomial& m);

}  // namespace cotwist
