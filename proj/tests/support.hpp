#ifndef ZFAC_TESTS_SUPPORT_HPP
#define ZFAC_TESTS_SUPPORT_HPP

// Test-side oracles and random instance generators. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <zfac/bipoly.hpp>
#include <zfac/ncpoly.hpp>
#include <zfac/quaternion.hpp>
#include <zfac/rational.hpp>
#include <zfac/unipoly.hpp>

namespace zfac_test {

using namespace zfac;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long lo, long hi, long max_den = 1)
    {
        return Rational(integer(lo, hi), integer(1, max_den));
    }

    Rational nonzero_rational(long lo, long hi, long max_den = 1)
    {
        for (;;) {
            Rational r = rational(lo, hi, max_den);
            if (!r.is_zero())
                return r;
        }
    }

    // Up to `terms` monomials with x-degree <= dx and y-degree <= dy.
    BiPoly bipoly(unsigned dx, unsigned dy, unsigned terms, long c = 5, long max_den = 1)
    {
        BiPoly p;
        for (unsigned t = 0; t < terms; ++t)
            p += BiPoly::monomial(nonzero_rational(-c, c, max_den),
                                  static_cast<unsigned>(integer(0, dx)),
                                  static_cast<unsigned>(integer(0, dy)));
        return p;
    }

    BiPoly nonzero_bipoly(unsigned dx, unsigned dy, unsigned terms, long c = 5, long max_den = 1)
    {
        for (;;) {
            BiPoly p = bipoly(dx, dy, terms, c, max_den);
            if (!p.is_zero())
                return p;
        }
    }

    // Nonzero with deg_x >= 1.
    BiPoly divisor(unsigned dx, unsigned dy, unsigned terms)
    {
        for (;;) {
            BiPoly p = bipoly(dx, dy, terms);
            if (p.deg_x() >= 1)
                return p;
        }
    }

    Quaternion quaternion(long lo, long hi, long max_den = 1)
    {
        return Quaternion(rational(lo, hi, max_den), rational(lo, hi, max_den),
                          rational(lo, hi, max_den), rational(lo, hi, max_den));
    }

    Quaternion nonzero_quaternion(long lo, long hi, long max_den = 1)
    {
        for (;;) {
            Quaternion q = quaternion(lo, hi, max_den);
            if (!q.is_zero())
                return q;
        }
    }

    NCWord word(std::size_t max_len)
    {
        std::vector<Letter> letters(static_cast<std::size_t>(integer(0, static_cast<long>(max_len))));
        for (auto &l : letters)
            l = coin() ? Letter::X : Letter::Y;
        return NCWord(letters);
    }

    NCPoly ncpoly(std::size_t max_len, unsigned terms, bool real_coefficients = false)
    {
        NCPoly f;
        for (unsigned t = 0; t < terms; ++t) {
            Quaternion c = real_coefficients ? Quaternion(nonzero_rational(-4, 4, 3))
                                             : nonzero_quaternion(-3, 3, 2);
            f = f + NCPoly::term(c, word(max_len));
        }
        return f;
    }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Leading exponent under graded-lex, x before y, by scanning every term.
inline std::pair<Exponent, Rational> gl_leading(const BiPoly &p)
{
    auto better = [](const Exponent &a, const Exponent &b) {
        if (a.x + a.y != b.x + b.y)
            return a.x + a.y > b.x + b.y;
        return a.x > b.x;
    };
    auto it = p.terms().begin();
    std::pair<Exponent, Rational> best = *it;
    for (; it != p.terms().end(); ++it)
        if (better(it->first, best.first))
            best = *it;
    return best;
}

// Sparse multivariate division by a single divisor under graded-lex order.
// For one divisor the remainder is zero exactly when the divisor divides.
inline BiPoly gl_remainder(BiPoly a, const BiPoly &b)
{
    const auto [lb, cb] = gl_leading(b);
    BiPoly rem;
    while (!a.is_zero()) {
        const auto [la, ca] = gl_leading(a);
        if (la.x >= lb.x && la.y >= lb.y) {
            BiPoly t = BiPoly::monomial(ca / cb, la.x - lb.x, la.y - lb.y);
            a -= t * b;
        } else {
            BiPoly lt = BiPoly::monomial(ca, la.x, la.y);
            rem += lt;
            a -= lt;
        }
    }
    return rem;
}

inline bool gl_divides(const BiPoly &b, const BiPoly &a)
{
    return gl_remainder(a, b).is_zero();
}

// Horner evaluation straight from the coefficient list.
inline Rational horner(const UniPoly &f, const Rational &t)
{
    Rational acc(0);
    auto cs = f.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

// Distinct real roots by scanning a grid of step 1/den over a root bound.
// Exact only when every root is a grid point or distinct roots are more than
// one step apart, which the callers arrange by construction.
inline std::size_t sign_scan_count(const UniPoly &f, long den = 24)
{
    // Fujiwara: every root has modulus below 2 * max_k |a_{n-k} / a_n|^(1/k).
    const auto cs = f.coefficients();
    const std::size_t n = cs.size() - 1;
    double bound = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational r = (cs[n - k] / cs[n]).abs();
        const double ratio = mpq_class(r.num(), r.den()).get_d();
        bound = std::max(bound, 2 * std::pow(ratio, 1.0 / static_cast<double>(k)));
    }
    const long steps = static_cast<long>(std::ceil(bound * static_cast<double>(den))) + 2;
    std::size_t roots = 0;
    int prev = 0;
    for (long k = -steps; k <= steps; ++k) {
        const int s = horner(f, Rational(k, den)).sign();
        if (s == 0) {
            ++roots;
        } else if (prev != 0 && s != prev) {
            ++roots;
        }
        prev = s;
    }
    return roots;
}

// Quaternion product from the basis multiplication table.
inline Quaternion table_mul(const Quaternion &a, const Quaternion &b)
{
    // basis[i] * basis[j] = sign[i][j] * basis[idx[i][j]] for 1, i, j, k.
    static constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    const auto ac = a.components(), bc = b.components();
    std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out[idx[i][j]] += Rational(sgn[i][j]) * ac[i] * bc[j];
    return Quaternion(out[0], out[1], out[2], out[3]);
}

// Rank by fraction-free (Bareiss-style) elimination on a copy.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero())
                continue;
            const Rational f = m[r][c];
            const Rational p = m[rank][c];
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = m[r][k] * p - m[rank][k] * f;
        }
        ++rank;
    }
    return rank;
}

} // namespace zfac_test

#endif
