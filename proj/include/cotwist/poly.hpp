#pragma once

#include "cotwist/lie.hpp"

namespace cotwist {

// Commutative coordinate algebra underlying a module algebra.
struct CoordinateAlgebra {
    ContextPtr ctx;
    std::vector<std::string> coords;

    int indexOf(const std::string& name) const;
};

using CoordPtr = std::shared_ptr<const CoordinateAlgebra>;

CoordPtr makeCoords(ContextPtr ctx, std::vector<std::string> coords);

// Polynomial in the coordinates with Series coefficients.  Coordinate degree
// is not truncated (only the deformation degree inside the coefficients is).
class Poly {
public:
    using TermMap = std::map<Exponents, Series, GradedLexLess>;

    explicit Poly(CoordPtr coords) : coords_(std::move(coords)) {}

    static Poly zero(const CoordPtr& c) { return Poly(c); }
    static Poly one(const CoordPtr& c);
    static Poly constant(const CoordPtr& c, const Series& s);
    static Poly coordinate(const CoordPtr& c, int idx);
    static Poly monomial(const CoordPtr& c, const Exponents& e, const Series& s);

    const CoordPtr& coords() const { return coords_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void addTerm(const Exponents& e, const Series& s);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Series& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Partial derivative in one coordinate.
    Poly derivative(int coord) const;

    bool operator==(const Poly& o) const;

    std::string str() const;

private:
    CoordPtr coords_;
    TermMap terms_;
};

std::string coordMonomialString(const CoordinateAlgebra& ca, const Exponents& e);

// Linear differential operator of any order:
//   sum over multi-indices alpha of  coeff_alpha(x) * d^alpha.
// The empty multi-index is the multiplication part.
class DiffOperator {
public:
    using TermMap = std::map<Exponents, Poly, GradedLexLess>;

    explicit DiffOperator(CoordPtr coords) : coords_(std::move(coords)) {}

    static DiffOperator zero(const CoordPtr& c) { return DiffOperator(c); }
    static DiffOperator identity(const CoordPtr& c);
    static DiffOperator partial(const CoordPtr& c, int coord);
    static DiffOperator multiplication(const Poly& p);

    const CoordPtr& coords() const { return coords_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void addTerm(const Exponents& alpha, const Poly& coeff);

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    DiffOperator operator-() const;
    DiffOperator operator*(const Series& s) const;
    DiffOperator& operator+=(const DiffOperator& o) { return *this = *this + o; }
    DiffOperator& operator-=(const DiffOperator& o) { return *this = *this - o; }

    Poly apply(const Poly& p) const;

    // Operator composition, exact (generalized Leibniz rule).
    DiffOperator compose(const DiffOperator& o) const;

    // Highest |alpha| with a nonzero coefficient; -1 for the zero operator.
    int order() const;
    bool isFirstOrderOrLess() const { return order() <= 1; }

    bool operator==(const DiffOperator& o) const;

    std::string str() const;

private:
    CoordPtr coords_;
    TermMap terms_;
};

// Action of the Lie generators on the coordinate algebra: one first-order
// operator per generator.
struct ActionSpec {
    std::vector<DiffOperator> generator_ops;  // indexed like the generators
};

// Module algebra: coordinates plus a validated action of g.  The
// representation property is checked symbolically at construction and a
// violation is a hard failure.
struct PolyModuleAlgebra {
    LiePtr lie;
    CoordPtr coords;
    ActionSpec action;

    PolyModuleAlgebra(LiePtr g, CoordPtr c, ActionSpec a);

    // rho as an algebra map U(g) -> DiffOperator.
    DiffOperator represent(const UeaElement& h) const;

    // h acting on a polynomial.
    Poly act(const UeaElement& h, const Poly& p) const;
};

using ModulePtr = std::shared_ptr<const PolyModuleAlgebra>;

ModulePtr makeModule(LiePtr g, CoordPtr c, ActionSpec a);

// Verifies the representation property rho([g_i,g_j]) = [rho(g_i), rho(g_j)]
// exactly; lists violations instead of throwing.
ValidationReport validateAction(const LiePresentation& g, const CoordinateAlgebra& c,
                                const ActionSpec& a);

}  // namespace cotwist
