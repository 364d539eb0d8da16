#ifndef ZFAC_PRINTER_HPP
#define ZFAC_PRINTER_HPP

#include <string>

#include <zfac/bipoly.hpp>
#include <zfac/ncpoly.hpp>
#include <zfac/unipoly.hpp>

namespace zfac {

// Terms by total degree descending, then x-degree descending; explicit '*';
// rational coefficients as a/b. "0" for zero. Re-parses to the same value.
std::string print_canonical(const BiPoly &p);
// Univariate polynomials print as the bivariate polynomial they embed into.
std::string print_canonical(const UniPoly &p);
// Terms by word length descending, then lexicographic (x < y); runs of a
// letter collapse to powers.
std::string print_canonical(const NCPoly &f);
// Descending powers of x with rational-function coefficients written
// num/den; identical to the BiPoly form when every coefficient is polynomial.
std::string print_canonical(const XPolyOverRatY &q);

} // namespace zfac

#endif
