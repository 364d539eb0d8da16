#ifndef ZFAC_NCPOLY_HPP
#define ZFAC_NCPOLY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <zfac/quaternion.hpp>
#include <zfac/unipoly.hpp>

namespace zfac {

enum class Letter : unsigned char { X, Y };

// Word over {X, Y}; the empty word is the identity.
class NCWord {
public:
    NCWord() = default;
    explicit NCWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    // From "xyx"-style text; UsageError on other characters.
    static NCWord from_string(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Letter> &letters() const noexcept { return letters_; }

    // "xyx"; "1" for the empty word.
    std::string str() const;

    friend NCWord operator*(const NCWord &a, const NCWord &b);

    // Shortlex: shorter first, then X < Y letter by letter.
    friend std::strong_ordering operator<=>(const NCWord &a, const NCWord &b);
    friend bool operator==(const NCWord &, const NCWord &) = default;

private:
    std::vector<Letter> letters_;
};

// All words of length <= max_len in shortlex order.
std::vector<NCWord> words_up_to(std::size_t max_len);

// Polynomial in non-commuting X, Y with quaternion coefficients. Variables
// commute with coefficients; a term is coefficient * word, coefficient on the
// left.
class NCPoly {
public:
    using TermMap = std::map<NCWord, Quaternion>;

    NCPoly() = default;
    explicit NCPoly(TermMap terms);

    static NCPoly term(const Quaternion &c, const NCWord &w);
    static NCPoly constant(const Quaternion &c) { return term(c, NCWord()); }
    static NCPoly x() { return term(Quaternion(1), NCWord({Letter::X})); }
    static NCPoly y() { return term(Quaternion(1), NCWord({Letter::Y})); }

    const TermMap &terms() const noexcept { return terms_; }
    Quaternion coeff(const NCWord &w) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const noexcept;

    NCPoly pow(unsigned e) const;

    NCPoly &operator+=(const NCPoly &o);
    NCPoly &operator-=(const NCPoly &o);

    friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
    friend NCPoly operator-(const NCPoly &a) { return NCPoly() - a; }
    friend NCPoly operator*(const Quaternion &c, const NCPoly &f);
    friend bool operator==(const NCPoly &, const NCPoly &) = default;

private:
    void add_term(const NCWord &w, const Quaternion &c);

    TermMap terms_;
};

// Words concatenate, coefficients multiply in order (f's on the left).
NCPoly nc_mul(const NCPoly &f, const NCPoly &g);
inline NCPoly operator*(const NCPoly &f, const NCPoly &g) { return nc_mul(f, g); }

// Sum over terms of coeff * (word with X -> a, Y -> b multiplied in order).
Quaternion nc_eval(const NCPoly &f, const Quaternion &a, const Quaternion &b);

namespace builtin {
// x y - y x; vanishes exactly on commuting pairs.
NCPoly commutator();
// x^2 y + y^2 x - 2 x y x, as printed in the source.
NCPoly g_printed();
// x^2 y + y x^2 - 2 x y x = [x, [x, y]].
NCPoly g_corrected();
} // namespace builtin

} // namespace zfac

#endif
