#include <zfac/parser.hpp>

#include <cctype>
#include <string>

#include <zfac/errors.hpp>

namespace zfac {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Token {
    enum class Type { Number, Ident, Op, LParen, RParen, End };

    Type type = Type::End;
    std::size_t pos = 0;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s, ParseMode mode)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Token::Type::Number, i, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const bool known = ch == 'x' || ch == 'y' ||
                               (mode == ParseMode::NonCommutative && (ch == 'i' || ch == 'j' || ch == 'k'));
            if (!known)
                throw SyntaxError(std::string("unknown identifier '") + ch + "'", i);
            out.push_back({Token::Type::Ident, i, std::string(1, ch)});
            ++i;
            continue;
        }
        switch (ch) {
        case '+':
        case '-':
        case '*':
        case '/':
        case '^':
            out.push_back({Token::Type::Op, i, std::string(1, ch)});
            break;
        case '(':
            out.push_back({Token::Type::LParen, i, "("});
            break;
        case ')':
            out.push_back({Token::Type::RParen, i, ")"});
            break;
        default:
            throw SyntaxError(std::string("unexpected character '") + ch + "'", i);
        }
        ++i;
    }
    out.push_back({Token::Type::End, s.size(), ""});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    PolyExpr parse()
    {
        if (peek().type == Token::Type::End)
            throw SyntaxError("empty input", peek().pos);
        PolyExpr e = expr();
        if (peek().type == Token::Type::RParen)
            throw SyntaxError("unbalanced ')'", peek().pos);
        if (peek().type != Token::Type::End)
            throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token &peek() const { return toks_[at_]; }
    const Token &take() { return toks_[at_++]; }
    bool is_op(const char *op) const { return peek().type == Token::Type::Op && peek().text == op; }

    static PolyExpr binary(PolyExpr::Kind k, std::size_t pos, PolyExpr lhs, PolyExpr rhs)
    {
        PolyExpr e;
        e.kind = k;
        e.pos = pos;
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
    }

    PolyExpr expr()
    {
        PolyExpr lhs = term();
        while (is_op("+") || is_op("-")) {
            const Token &op = take();
            PolyExpr rhs = term();
            lhs = binary(op.text == "+" ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub, op.pos,
                         std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    PolyExpr term()
    {
        PolyExpr lhs = unary();
        for (;;) {
            if (is_op("*") || is_op("/")) {
                const Token &op = take();
                PolyExpr rhs = unary();
                lhs = binary(op.text == "*" ? PolyExpr::Kind::Mul : PolyExpr::Kind::Div, op.pos,
                             std::move(lhs), std::move(rhs));
            } else if (peek().type == Token::Type::Ident || peek().type == Token::Type::LParen) {
                const std::size_t pos = peek().pos;
                PolyExpr rhs = power();
                lhs = binary(PolyExpr::Kind::Mul, pos, std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    PolyExpr unary()
    {
        if (is_op("-") || is_op("+")) {
            const Token &op = take();
            PolyExpr inner = unary();
            if (op.text == "+")
                return inner;
            PolyExpr e;
            e.kind = PolyExpr::Kind::Neg;
            e.pos = op.pos;
            e.children.push_back(std::move(inner));
            return e;
        }
        return power();
    }

    PolyExpr power()
    {
        PolyExpr base = primary();
        if (!is_op("^"))
            return base;
        const Token &caret = take();
        const Token &ex = peek();
        if (ex.type == Token::Type::Op && ex.text == "-")
            throw SyntaxError("negative exponent", ex.pos);
        if (ex.type != Token::Type::Number)
            throw SyntaxError(ex.type == Token::Type::End ? "missing exponent"
                                                          : "expected exponent, got '" + ex.text + "'",
                              ex.pos);
        take();
        if (ex.text.size() > 5 || std::stoul(ex.text) > kMaxExponent)
            throw SyntaxError("exponent too large", ex.pos);
        if (is_op("^"))
            throw SyntaxError("chained exponent; use parentheses", peek().pos);
        PolyExpr e;
        e.kind = PolyExpr::Kind::Pow;
        e.pos = caret.pos;
        e.exponent = static_cast<unsigned>(std::stoul(ex.text));
        e.children.push_back(std::move(base));
        return e;
    }

    PolyExpr primary()
    {
        const Token &t = peek();
        PolyExpr e;
        e.pos = t.pos;
        switch (t.type) {
        case Token::Type::Number:
            take();
            e.kind = PolyExpr::Kind::Number;
            e.value = Rational(mpz_class(t.text));
            return e;
        case Token::Type::Ident:
            take();
            e.kind = (t.text == "x" || t.text == "y") ? PolyExpr::Kind::Variable : PolyExpr::Kind::Unit;
            e.symbol = t.text[0];
            return e;
        case Token::Type::LParen: {
            take();
            if (peek().type == Token::Type::RParen)
                throw SyntaxError("empty parentheses", peek().pos);
            PolyExpr inner = expr();
            if (peek().type != Token::Type::RParen)
                throw SyntaxError("unbalanced '('", t.pos);
            take();
            return inner;
        }
        case Token::Type::End:
            throw SyntaxError("unexpected end of input", t.pos);
        default:
            throw SyntaxError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

template <typename Poly, typename ConstantOf, typename ScalarOf>
Poly lower(const PolyExpr &e, const ConstantOf &constant_of, const ScalarOf &scalar_of,
           Poly (*variable)(char), Poly (*unit)(char))
{
    auto rec = [&](const PolyExpr &c) { return lower<Poly>(c, constant_of, scalar_of, variable, unit); };
    switch (e.kind) {
    case PolyExpr::Kind::Number:
        return constant_of(e.value);
    case PolyExpr::Kind::Variable:
        return variable(e.symbol);
    case PolyExpr::Kind::Unit:
        return unit(e.symbol);
    case PolyExpr::Kind::Add:
        return rec(e.children[0]) + rec(e.children[1]);
    case PolyExpr::Kind::Sub:
        return rec(e.children[0]) - rec(e.children[1]);
    case PolyExpr::Kind::Mul:
        return rec(e.children[0]) * rec(e.children[1]);
    case PolyExpr::Kind::Neg:
        return -rec(e.children[0]);
    case PolyExpr::Kind::Pow:
        return rec(e.children[0]).pow(e.exponent);
    case PolyExpr::Kind::Div: {
        const auto d = scalar_of(rec(e.children[1]));
        if (!d || d->is_zero())
            throw SyntaxError("division is only by nonzero rational constants", e.pos);
        return rec(e.children[0]) * constant_of(d->inverse());
    }
    }
    throw InvariantViolation("unhandled expression kind");
}

BiPoly bi_variable(char c)
{
    return c == 'x' ? BiPoly::x() : BiPoly::y();
}

BiPoly bi_unit(char)
{
    throw InvariantViolation("quaternion unit in commutative mode");
}

NCPoly nc_variable(char c)
{
    return c == 'x' ? NCPoly::x() : NCPoly::y();
}

NCPoly nc_unit(char c)
{
    return NCPoly::constant(c == 'i' ? Quaternion::i() : c == 'j' ? Quaternion::j() : Quaternion::k());
}

} // namespace

PolyExpr parse_poly(std::string_view text, ParseMode mode)
{
    return Parser(tokenize(text, mode)).parse();
}

BiPoly lower_commutative(const PolyExpr &e)
{
    auto constant_of = [](const Rational &r) { return BiPoly::constant(r); };
    auto scalar_of = [](const BiPoly &p) -> std::optional<Rational> {
        if (!p.is_constant())
            return std::nullopt;
        return p.coeff(0, 0);
    };
    return lower<BiPoly>(e, constant_of, scalar_of, &bi_variable, &bi_unit);
}

NCPoly lower_noncommutative(const PolyExpr &e)
{
    auto constant_of = [](const Rational &r) { return NCPoly::constant(Quaternion(r)); };
    auto scalar_of = [](const NCPoly &p) -> std::optional<Rational> {
        if (p.is_zero())
            return Rational(0);
        if (p.degree() != 0 || !p.coeff(NCWord()).is_real())
            return std::nullopt;
        return p.coeff(NCWord()).w;
    };
    return lower<NCPoly>(e, constant_of, scalar_of, &nc_variable, &nc_unit);
}

BiPoly parse_bipoly(std::string_view text)
{
    return lower_commutative(parse_poly(text, ParseMode::Commutative));
}

NCPoly parse_ncpoly(std::string_view text)
{
    return lower_noncommutative(parse_poly(text, ParseMode::NonCommutative));
}

Quaternion parse_quaternion(std::string_view text)
{
    const NCPoly f = parse_ncpoly(text);
    if (f.degree() > 0)
        throw SyntaxError("expected a quaternion constant", 0);
    return f.coeff(NCWord());
}

} // namespace zfac
