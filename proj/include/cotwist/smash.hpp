#pragma once

#include "cotwist/hopf.hpp"
#include "cotwist/poly.hpp"

namespace cotwist {

// Element of the smash product A x| H in normal form: sum of
// (coordinate monomial) * (PBW monomial) with Series coefficients.
// Multiplication pushes H-factors to the right with the cross relation
// h a = (h^(1) |> a) h^(2).
class SmashElement {
public:
    struct Key {
        Exponents poly;     // exponents over coordinates
        PbwMonomial pbw;    // exponents over generators
        bool operator==(const Key& o) const = default;
    };
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using TermMap = std::map<Key, Series, KeyLess>;

    explicit SmashElement(ModulePtr mod) : mod_(std::move(mod)) {}

    static SmashElement zero(const ModulePtr& m) { return SmashElement(m); }
    static SmashElement one(const ModulePtr& m);
    static SmashElement fromPoly(const ModulePtr& m, const Poly& p);
    static SmashElement fromUea(const ModulePtr& m, const UeaElement& h);

    const ModulePtr& module() const { return mod_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void addTerm(const Key& k, const Series& s);

    SmashElement operator+(const SmashElement& o) const;
    SmashElement operator-(const SmashElement& o) const;
    SmashElement operator-() const;
    SmashElement operator*(const Series& s) const;
    SmashElement& operator+=(const SmashElement& o) { return *this = *this + o; }
    SmashElement& operator-=(const SmashElement& o) { return *this = *this - o; }

    bool operator==(const SmashElement& o) const;

    // The A-part when the H-part is trivial; throws otherwise.
    Poly asPoly() const;
    // The H-part when the A-part is trivial; throws otherwise.
    UeaElement asUea() const;
    bool isPurePoly() const;
    bool isPureUea() const;

    std::string str() const;

private:
    ModulePtr mod_;
    TermMap terms_;
};

SmashElement smash_mul(const SmashElement& u, const SmashElement& v);

// ad(h)X = h^(1) X gamma(h^(2)) inside A x| H.
SmashElement adjoint(const UeaElement& h, const SmashElement& x);

// The element acting on A: (a h)(p) = a * (h |> p).
Poly applySmash(const SmashElement& x, const Poly& p);

// Realization in End(A): a h  ->  a * rho(h).
DiffOperator toDiffOperator(const SmashElement& x);

// Verifies h |> (ab) = (h^(1) |> a)(h^(2) |> b) on the given triples; lists
// each violating (h, a, b).
ValidationReport moduleAlgebraCheck(const ModulePtr& mod,
                                    const std::vector<UeaElement>& hs,
                                    const std::vector<Poly>& as,
                                    const std::vector<Poly>& bs);

}  // namespace cotwist
