#ifndef ZFAC_BIPOLY_HPP
#define ZFAC_BIPOLY_HPP

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <zfac/rational.hpp>
#include <zfac/unipoly.hpp>

namespace zfac {

struct Exponent {
    unsigned x = 0;
    unsigned y = 0;

    unsigned total() const noexcept { return x + y; }
    friend auto operator<=>(const Exponent &, const Exponent &) = default;
};

struct Degrees {
    int x = kNegInfinity;
    int y = kNegInfinity;
    int total = kNegInfinity;

    friend bool operator==(const Degrees &, const Degrees &) = default;
};

// Sparse bivariate polynomial over the rationals; no zero coefficient is ever
// stored.
class BiPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    BiPoly() = default;
    explicit BiPoly(TermMap terms);

    static BiPoly constant(const Rational &c);
    static BiPoly monomial(const Rational &c, unsigned i, unsigned j);
    static BiPoly x() { return monomial(Rational(1), 1, 0); }
    static BiPoly y() { return monomial(Rational(1), 0, 1); }
    // Embeds a univariate polynomial in its own variable.
    static BiPoly from_uni(const UniPoly &u);
    // sum_i coeffs[i](y) * x^i
    static BiPoly from_x_coefficients(std::span<const UniPoly> coeffs);

    const TermMap &terms() const noexcept { return terms_; }
    Rational coeff(unsigned i, unsigned j) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;

    Degrees degrees() const;
    int deg_x() const { return degrees().x; }
    int deg_y() const { return degrees().y; }
    int total_degree() const { return degrees().total; }

    // Leading term under graded-lex order, x before y.
    std::pair<Exponent, Rational> leading_term() const;

    Rational eval(const Rational &x0, const Rational &y0) const;
    // p(x, y0) as a polynomial in x.
    UniPoly at_y(const Rational &y0) const;
    // p(x0, y) as a polynomial in y.
    UniPoly at_x(const Rational &x0) const;

    // Coefficients of x^0 .. x^deg_x as polynomials in y.
    std::vector<UniPoly> x_coefficients() const;
    std::vector<UniPoly> y_coefficients() const;

    BiPoly d_dx() const;
    BiPoly d_dy() const;
    BiPoly pow(unsigned e) const;
    BiPoly swap_xy() const;

    BiPoly &operator+=(const BiPoly &o);
    BiPoly &operator-=(const BiPoly &o);
    BiPoly &operator*=(const Rational &c);

    friend BiPoly operator+(BiPoly a, const BiPoly &b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly &b) { return a -= b; }
    friend BiPoly operator-(const BiPoly &a) { return a * Rational(-1); }
    friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
    friend BiPoly operator*(BiPoly a, const Rational &c) { return a *= c; }
    friend BiPoly operator*(const Rational &c, BiPoly a) { return a *= c; }
    friend bool operator==(const BiPoly &, const BiPoly &) = default;

private:
    void add_term(const Exponent &e, const Rational &c);

    TermMap terms_;
};

// Scalar multiple with integer coefficients of gcd 1 and a positive
// graded-lex leading coefficient. Zero stays zero.
BiPoly normalized(const BiPoly &p);
// True when a = c * b for some nonzero rational c.
bool associates(const BiPoly &a, const BiPoly &b);

// Reduced quotient of polynomials in y with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(Var::Y), den_(UniPoly::constant(Var::Y, Rational(1))) {}
    explicit RationalFunction(UniPoly num);
    RationalFunction(UniPoly num, UniPoly den);

    const UniPoly &num() const noexcept { return num_; }
    const UniPoly &den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
    friend bool operator==(const RationalFunction &, const RationalFunction &) = default;

    std::string str() const;

private:
    UniPoly num_;
    UniPoly den_;
};

// Polynomial in x whose coefficients are rational functions of y.
class XPolyOverRatY {
public:
    XPolyOverRatY() = default;
    explicit XPolyOverRatY(std::vector<RationalFunction> coeffs);
    static XPolyOverRatY from_bipoly(const BiPoly &p);

    int degree() const noexcept
    {
        return coeffs_.empty() ? kNegInfinity : static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const RationalFunction> coefficients() const noexcept { return coeffs_; }
    RationalFunction coeff(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : RationalFunction();
    }

    // Monic lcm of all coefficient denominators (1 for the zero polynomial).
    UniPoly denominator_lcm() const;
    // h * this, which must have polynomial coefficients.
    BiPoly scaled_to_bipoly(const UniPoly &h) const;
    // The bivariate polynomial, when every coefficient is polynomial in y.
    std::optional<BiPoly> as_bipoly() const;

    friend XPolyOverRatY operator+(const XPolyOverRatY &a, const XPolyOverRatY &b);
    friend XPolyOverRatY operator-(const XPolyOverRatY &a, const XPolyOverRatY &b);
    friend XPolyOverRatY operator*(const XPolyOverRatY &a, const XPolyOverRatY &b);
    friend bool operator==(const XPolyOverRatY &, const XPolyOverRatY &) = default;

    std::string str() const;

private:
    void trim();

    std::vector<RationalFunction> coeffs_;
};

struct DivisionResult {
    XPolyOverRatY quotient;
    XPolyOverRatY remainder;
    int divisor_deg_x = kNegInfinity;
};

// h * g = q_tilde * p + r_tilde with h monic in y.
struct ClearedDivision {
    UniPoly h{Var::Y};
    BiPoly q_tilde;
    BiPoly r_tilde;
};

// Long division of g by p in x over Q(y). DivisionByZero for p = 0.
DivisionResult divide_in_x(const BiPoly &g, const BiPoly &p);
ClearedDivision clear_denominators(const BiPoly &g, const BiPoly &p, const DivisionResult &d);

// Quotient a / b when b divides a in Q[x, y].
std::optional<BiPoly> divide_exact(const BiPoly &a, const BiPoly &b);

struct ContentSplit {
    UniPoly content{Var::Y};
    BiPoly primitive;
};

// Monic gcd in Q[y] of the x-coefficients, and the cofactor.
ContentSplit content_primitive_x(const BiPoly &p);

BiPoly bipoly_gcd(const BiPoly &p, const BiPoly &g);
BiPoly squarefree_part(const BiPoly &p);

// Direction of a family of parallel lines, as the coprime pair (a, b) of
// u = b x + a y, v = a x - b y. Canonical form has b >= 0, and a > 0 when
// b = 0. Horizontal is (0, 1), vertical (1, 0).
struct Direction {
    long a = 0;
    long b = 1;

    static Direction normalized(long a, long b);
    static Direction horizontal() { return {0, 1}; }
    static Direction vertical() { return {1, 0}; }

    bool is_horizontal() const noexcept { return a == 0; }
    std::string str() const { return std::to_string(a) + "/" + std::to_string(b); }
    friend bool operator==(const Direction &, const Direction &) = default;
};

// p(x, y) evaluated at x = X(u, v), y = Y(u, v).
BiPoly substitute(const BiPoly &p, const BiPoly &x_image, const BiPoly &y_image);

// P(u, v) = p((b u + a v) / (a^2 + b^2), (a u - b v) / (a^2 + b^2)), with u in
// the x slot and v in the y slot of the result.
BiPoly change_of_variables(const BiPoly &p, Direction d);
// Inverse map: p(x, y) = P(b x + a y, a x - b y).
BiPoly inverse_change_of_variables(const BiPoly &transformed, Direction d);

} // namespace zfac

#endif
