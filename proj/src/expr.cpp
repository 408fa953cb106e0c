#include "cotwist/expr.hpp"

#include <cctype>

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

// --- lexer ----------------------------------------------------------------

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, At, LParen, RParen, End } kind;
    std::string text;   // Ident
    Rational num;       // Number (rational literal)
    size_t pos = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < s.size()) {
        char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        Token tok;
        tok.pos = k;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            std::string numerator = s.substr(start, k - start);
            std::string denominator = "1";
            if (k < s.size() && s[k] == '/' && k + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[k + 1]))) {
                ++k;
                size_t dstart = k;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                denominator = s.substr(dstart, k - dstart);
            }
            tok.kind = Token::Number;
            tok.num = Rational(boost::multiprecision::cpp_int(numerator),
                               boost::multiprecision::cpp_int(denominator));
            out.push_back(tok);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = k;
            while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_'))
                ++k;
            tok.kind = Token::Ident;
            tok.text = s.substr(start, k - start);
            out.push_back(tok);
            continue;
        }
        switch (c) {
            case '+': tok.kind = Token::Plus; break;
            case '-': tok.kind = Token::Minus; break;
            case '*': tok.kind = Token::Star; break;
            case '^': tok.kind = Token::Caret; break;
            case '@': tok.kind = Token::At; break;
            case '(': tok.kind = Token::LParen; break;
            case ')': tok.kind = Token::RParen; break;
            default:
                throw UsageError("unexpected character '" + std::string(1, c) +
                                 "' at position " + std::to_string(k));
        }
        ++k;
        out.push_back(tok);
    }
    Token end;
    end.kind = Token::End;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

// --- AST ------------------------------------------------------------------

struct Node {
    enum Kind { Number, Ident, Neg, Add, Sub, Mul, Pow, Tensor } kind;
    Rational num;
    std::string ident;
    std::vector<Node> kids;
    long long expo = 0;
    size_t pos = 0;
};

struct Parser {
    const std::vector<Token>& toks;
    size_t k = 0;

    const Token& peek() const { return toks[k]; }
    Token take() { return toks[k++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError(what + " at position " + std::to_string(peek().pos));
    }

    Node parseSum() {
        Node lhs = parseTensor();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool plus = take().kind == Token::Plus;
            Node rhs = parseTensor();
            Node n;
            n.kind = plus ? Node::Add : Node::Sub;
            n.pos = lhs.pos;
            n.kids = {std::move(lhs), std::move(rhs)};
            lhs = std::move(n);
        }
        return lhs;
    }

    Node parseTensor() {
        Node lhs = parseProduct();
        while (peek().kind == Token::At) {
            take();
            Node rhs = parseProduct();
            if (lhs.kind == Node::Tensor) {
                lhs.kids.push_back(std::move(rhs));
            } else {
                Node n;
                n.kind = Node::Tensor;
                n.pos = lhs.pos;
                n.kids = {std::move(lhs), std::move(rhs)};
                lhs = std::move(n);
            }
        }
        return lhs;
    }

    Node parseProduct() {
        Node lhs = parseUnary();
        while (peek().kind == Token::Star) {
            take();
            Node rhs = parseUnary();
            Node n;
            n.kind = Node::Mul;
            n.pos = lhs.pos;
            n.kids = {std::move(lhs), std::move(rhs)};
            lhs = std::move(n);
        }
        return lhs;
    }

    Node parseUnary() {
        if (peek().kind == Token::Minus) {
            size_t pos = take().pos;
            Node n;
            n.kind = Node::Neg;
            n.pos = pos;
            n.kids = {parseUnary()};
            return n;
        }
        return parsePower();
    }

    Node parsePower() {
        Node base = parseAtom();
        if (peek().kind == Token::Caret) {
            take();
            if (peek().kind != Token::Number ||
                boost::multiprecision::denominator(peek().num) != 1)
                fail("exponent must be a nonnegative integer");
            Token e = take();
            Node n;
            n.kind = Node::Pow;
            n.pos = base.pos;
            n.expo = static_cast<long long>(boost::multiprecision::numerator(e.num));
            n.kids = {std::move(base)};
            return n;
        }
        return base;
    }

    Node parseAtom() {
        const Token& t = peek();
        if (t.kind == Token::Number) {
            Token tok = take();
            Node n;
            n.kind = Node::Number;
            n.num = tok.num;
            n.pos = tok.pos;
            return n;
        }
        if (t.kind == Token::Ident) {
            Token tok = take();
            Node n;
            n.kind = Node::Ident;
            n.ident = tok.text;
            n.pos = tok.pos;
            return n;
        }
        if (t.kind == Token::LParen) {
            take();
            Node inner = parseSum();
            if (peek().kind != Token::RParen) fail("expected ')'");
            take();
            return inner;
        }
        fail("expected a value");
    }
};

Node parseText(const std::string& text) {
    std::vector<Token> toks = lex(text);
    Parser p{toks};
    Node n = p.parseSum();
    if (p.peek().kind != Token::End) p.fail("trailing input");
    return n;
}

// --- evaluation over (Series | SmashElement | TensorElement) ---------------

TensorElement toTensor(const ExprValue& v, const ModulePtr& mod, size_t pos) {
    if (const auto* s = std::get_if<Series>(&v)) {
        return TensorElement::unit(mod->lie, 1) * *s;
    }
    if (const auto* e = std::get_if<SmashElement>(&v)) {
        if (!e->isPureUea())
            throw UsageError("tensor legs must be U(g) elements (position " +
                             std::to_string(pos) + ")");
        return TensorElement::fromLeg(e->asUea());
    }
    return std::get<TensorElement>(v);
}

SmashElement toSmash(const ExprValue& v, const ModulePtr& mod, size_t pos) {
    if (const auto* s = std::get_if<Series>(&v)) return SmashElement::one(mod) * *s;
    if (const auto* e = std::get_if<SmashElement>(&v)) return *e;
    throw UsageError("tensor value where a single-leg element is required (position " +
                     std::to_string(pos) + ")");
}

ExprValue addValues(const ExprValue& a, const ExprValue& b, bool subtract, const ModulePtr& mod,
                    size_t pos) {
    if (std::holds_alternative<Series>(a) && std::holds_alternative<Series>(b)) {
        const Series& x = std::get<Series>(a);
        const Series& y = std::get<Series>(b);
        return subtract ? x - y : x + y;
    }
    if (std::holds_alternative<TensorElement>(a) || std::holds_alternative<TensorElement>(b)) {
        TensorElement x = toTensor(a, mod, pos);
        TensorElement y = toTensor(b, mod, pos);
        if (x.arity() != y.arity())
            throw UsageError("leg-count mismatch across '@' terms (position " +
                             std::to_string(pos) + ")");
        return subtract ? x - y : x + y;
    }
    SmashElement x = toSmash(a, mod, pos);
    SmashElement y = toSmash(b, mod, pos);
    return subtract ? x - y : x + y;
}

ExprValue mulValues(const ExprValue& a, const ExprValue& b, const ModulePtr& mod, size_t pos) {
    if (const auto* s = std::get_if<Series>(&a)) {
        if (const auto* t = std::get_if<Series>(&b)) return *s * *t;
        if (const auto* e = std::get_if<SmashElement>(&b)) return *e * *s;
        return std::get<TensorElement>(b) * *s;
    }
    if (const auto* s = std::get_if<Series>(&b)) {
        if (const auto* e = std::get_if<SmashElement>(&a)) return *e * *s;
        return std::get<TensorElement>(a) * *s;
    }
    if (std::holds_alternative<TensorElement>(a) || std::holds_alternative<TensorElement>(b)) {
        TensorElement x = toTensor(a, mod, pos);
        TensorElement y = toTensor(b, mod, pos);
        if (x.arity() != y.arity())
            throw UsageError("leg-count mismatch in tensor product (position " +
                             std::to_string(pos) + ")");
        return tensor_mul(x, y);
    }
    return smash_mul(std::get<SmashElement>(a), std::get<SmashElement>(b));
}

ExprValue negValue(const ExprValue& a) {
    if (const auto* s = std::get_if<Series>(&a)) return -*s;
    if (const auto* e = std::get_if<SmashElement>(&a)) return -*e;
    return -std::get<TensorElement>(a);
}

ExprValue evalNode(const Node& n, const ModulePtr& mod) {
    const ContextPtr& ctx = mod->lie->ctx;
    switch (n.kind) {
        case Node::Number:
            return Series::constant(ctx, GaussianRational(n.num));
        case Node::Ident: {
            if (n.ident == "i")
                return Series::constant(ctx, GaussianRational(Rational(0), Rational(1)));
            if (ctx->indexOf(n.ident) >= 0) return Series::param(ctx, n.ident);
            int g = mod->lie->indexOf(n.ident);
            if (g >= 0) return SmashElement::fromUea(mod, UeaElement::generator(mod->lie, g));
            int c = mod->coords->indexOf(n.ident);
            if (c >= 0) return SmashElement::fromPoly(mod, Poly::coordinate(mod->coords, c));
            throw UsageError("unknown identifier '" + n.ident + "' at position " +
                             std::to_string(n.pos));
        }
        case Node::Neg:
            return negValue(evalNode(n.kids[0], mod));
        case Node::Add:
            return addValues(evalNode(n.kids[0], mod), evalNode(n.kids[1], mod), false, mod, n.pos);
        case Node::Sub:
            return addValues(evalNode(n.kids[0], mod), evalNode(n.kids[1], mod), true, mod, n.pos);
        case Node::Mul:
            return mulValues(evalNode(n.kids[0], mod), evalNode(n.kids[1], mod), mod, n.pos);
        case Node::Pow: {
            if (n.expo < 0)
                throw UsageError("exponent must be a nonnegative integer (position " +
                                 std::to_string(n.pos) + ")");
            ExprValue base = evalNode(n.kids[0], mod);
            ExprValue acc = Series::one(ctx);
            for (long long k = 0; k < n.expo; ++k) acc = mulValues(acc, base, mod, n.pos);
            return acc;
        }
        case Node::Tensor: {
            TensorElement t = toTensor(evalNode(n.kids[0], mod), mod, n.pos);
            for (size_t k = 1; k < n.kids.size(); ++k)
                t = outer(t, toTensor(evalNode(n.kids[k], mod), mod, n.pos));
            return t;
        }
    }
    throw InvariantError("unreachable expression node");
}

}  // namespace

ModulePtr scratchModule(const LiePtr& alg) {
    CoordPtr coords = makeCoords(alg->ctx, {});
    ActionSpec action;
    action.generator_ops.assign(alg->size(), DiffOperator::zero(coords));
    return makeModule(alg, coords, action);
}

ExprValue parse_expr(const std::string& text, const ModulePtr& mod) {
    return evalNode(parseText(text), mod);
}

SmashElement parseSmash(const std::string& text, const ModulePtr& mod) {
    return toSmash(parse_expr(text, mod), mod, 0);
}

UeaElement parseUea(const std::string& text, const LiePtr& alg) {
    ModulePtr mod = scratchModule(alg);
    SmashElement e = parseSmash(text, mod);
    if (!e.isPureUea()) throw UsageError("expected a U(g) element: " + text);
    return e.asUea();
}

TensorElement parseTensor(const std::string& text, const LiePtr& alg, int expected_arity) {
    ModulePtr mod = scratchModule(alg);
    TensorElement t = toTensor(parse_expr(text, mod), mod, 0);
    if (expected_arity > 0 && t.arity() != expected_arity)
        throw UsageError("expected a tensor with " + std::to_string(expected_arity) +
                         " legs: " + text);
    return t;
}

Poly parsePoly(const std::string& text, const CoordPtr& coords) {
    LiePtr empty = makeLie(LiePresentation(coords->ctx, {}));
    ActionSpec action;
    ModulePtr mod = makeModule(empty, coords, action);
    SmashElement e = parseSmash(text, mod);
    if (!e.isPurePoly()) throw UsageError("expected a polynomial: " + text);
    return e.asPoly();
}

Series parseSeries(const std::string& text, const ContextPtr& ctx) {
    CoordPtr coords = makeCoords(ctx, {});
    Poly p = parsePoly(text, coords);
    if (p.isZero()) return Series::zero(ctx);
    return p.terms().begin()->second;
}

std::string printCanonical(const ExprValue& v) {
    if (const auto* s = std::get_if<Series>(&v)) return s->str();
    if (const auto* e = std::get_if<SmashElement>(&v)) return e->str();
    return std::get<TensorElement>(v).str();
}

}  // namespace cotwist
