#ifndef ZFAC_UNIPOLY_HPP
#define ZFAC_UNIPOLY_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <zfac/rational.hpp>

namespace zfac {

enum class Var { X, Y };

// Degree of the zero polynomial. Smaller than every real degree, so plain
// integer comparisons stay valid.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

// Dense univariate polynomial over the rationals, coefficients in ascending
// power order. The leading stored coefficient is never zero.
class UniPoly {
public:
    explicit UniPoly(Var v = Var::X) : var_(v) {}
    UniPoly(Var v, std::vector<Rational> coeffs);

    static UniPoly constant(Var v, const Rational &c);
    static UniPoly monomial(Var v, const Rational &c, unsigned k);
    // The polynomial `v` itself.
    static UniPoly variable(Var v) { return monomial(v, Rational(1), 1); }

    Var var() const noexcept { return var_; }
    int degree() const noexcept
    {
        return coeffs_.empty() ? kNegInfinity : static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational &leading() const;
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    Rational eval(const Rational &at) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly pow(unsigned e) const;
    UniPoly with_var(Var v) const { return UniPoly(v, coeffs_); }

    UniPoly &operator+=(const UniPoly &o);
    UniPoly &operator-=(const UniPoly &o);
    UniPoly &operator*=(const Rational &c);

    friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
    friend UniPoly operator-(const UniPoly &a) { return a * Rational(-1); }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(UniPoly a, const Rational &c) { return a *= c; }
    friend UniPoly operator*(const Rational &c, UniPoly a) { return a *= c; }

    // Variable tag is part of identity: x - 1 != y - 1.
    friend bool operator==(const UniPoly &a, const UniPoly &b) = default;

    std::string str() const;

private:
    void trim();

    Var var_;
    std::vector<Rational> coeffs_;
};

// Euclidean division; throws DivisionByZero for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b);

// Monic gcd. uni_gcd(f, 0) = monic(f), uni_gcd(0, 0) = 0.
UniPoly uni_gcd(const UniPoly &f, const UniPoly &g);
// Monic lcm of two nonzero polynomials.
UniPoly uni_lcm(const UniPoly &f, const UniPoly &g);
// Monic product of the distinct irreducible factors of f.
UniPoly uni_squarefree_part(const UniPoly &f);
// Quotient when b divides a exactly, nullopt otherwise.
std::optional<UniPoly> divide_exact(const UniPoly &a, const UniPoly &b);

// Missing lower bound means -infinity, missing upper bound +infinity.
using Bound = std::optional<Rational>;

// Canonical Sturm sequence of the squarefree part of a nonzero polynomial.
class SturmChain {
public:
    explicit SturmChain(const UniPoly &f);

    std::span<const UniPoly> polys() const noexcept { return polys_; }

    // Sign variations at a point (zeros dropped); nullopt point is read as
    // -infinity when `at_minus_infinity` is set and +infinity otherwise.
    std::size_t variations(const Bound &at, bool at_minus_infinity) const;

    // Distinct real roots in (lo, hi].
    std::size_t count(const Bound &lo, const Bound &hi) const;

private:
    std::vector<UniPoly> polys_;
};

// Number of distinct real roots of f in (lo, hi]. DomainError for f = 0.
std::size_t sturm_count(const UniPoly &f, const Bound &lo = std::nullopt,
                        const Bound &hi = std::nullopt);

// Half-open isolating interval (lo, hi]. lo == hi marks an exact rational root.
struct RootInterval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    friend bool operator==(const RootInterval &, const RootInterval &) = default;
};

// One interval per distinct real root, ascending. Rational roots come back as
// degenerate intervals; irrational ones with a strict sign change of the
// squarefree part at both endpoints. `budget` is the number of extra
// bisections applied to each irrational interval.
std::vector<RootInterval> isolate_roots(const UniPoly &f, unsigned budget = 0);

} // namespace zfac

#endif
