#pragma once

#include <variant>

#include "cotwist/smash.hpp"

namespace cotwist {

// Parsed value: a scalar, a single-leg element of A x| H, or a multi-leg
// tensor over U(g).  Precedence: ^ binds tightest, then unary minus, then *,
// then the tensor separator @, then binary + and -.
using ExprValue = std::variant<Series, SmashElement, TensorElement>;

// General evaluation against a module (coordinates, generators, params and
// the literal i all resolve).  Throws UsageError with position on syntax
// errors and unknown identifiers.
ExprValue parse_expr(const std::string& text, const ModulePtr& mod);

// Convenience wrappers; each throws UsageError when the value has the wrong
// shape.
SmashElement parseSmash(const std::string& text, const ModulePtr& mod);
UeaElement parseUea(const std::string& text, const LiePtr& alg);
TensorElement parseTensor(const std::string& text, const LiePtr& alg, int expected_arity);
Poly parsePoly(const std::string& text, const CoordPtr& coords);
Series parseSeries(const std::string& text, const ContextPtr& ctx);

// Canonical text form; parse of the result reproduces the element.
std::string printCanonical(const ExprValue& v);

// Zero-action module over an empty coordinate set, used to evaluate pure
// U(g) expressions.
ModulePtr scratchModule(const LiePtr& alg);

}  // namespace cotwist
