#ifndef ZFAC_PARSER_HPP
#define ZFAC_PARSER_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include <zfac/bipoly.hpp>
#include <zfac/ncpoly.hpp>
#include <zfac/quaternion.hpp>
#include <zfac/rational.hpp>

namespace zfac {

enum class ParseMode {
    Commutative,   // x, y commute; lowers to BiPoly
    NonCommutative // word order kept, i j k are quaternion units; lowers to NCPoly
};

struct PolyExpr {
    enum class Kind { Number, Variable, Unit, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind = Kind::Number;
    std::size_t pos = 0; // byte offset in the source text
    Rational value;      // Number
    char symbol = 0;     // Variable: x/y; Unit: i/j/k
    unsigned exponent = 0;
    std::vector<PolyExpr> children;
};

// Grammar, loosest to tightest:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary | juxtaposed power)*
//   unary := ('-' | '+') unary | power
//   power := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
// Juxtaposition (5x^3, 3xy, (x+1)(y+1)) is multiplication. Throws SyntaxError
// with the byte offset of the offending token.
PolyExpr parse_poly(std::string_view text, ParseMode mode);

BiPoly lower_commutative(const PolyExpr &e);
NCPoly lower_noncommutative(const PolyExpr &e);

BiPoly parse_bipoly(std::string_view text);
NCPoly parse_ncpoly(std::string_view text);
// A constant non-commutative expression such as "1 + 2*i - k/3".
Quaternion parse_quaternion(std::string_view text);

} // namespace zfac

#endif
