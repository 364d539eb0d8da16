#ifndef ZFAC_RATIONAL_HPP
#define ZFAC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zfac {

// Exact rational number, always stored in lowest terms with a positive
// denominator so that equality is plain field comparison.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(unsigned long v) : q_(v) {}
    Rational(unsigned v) : q_(v) {}
    Rational(long long v);
    explicit Rational(const mpz_class &num) : q_(num) {}
    Rational(const mpz_class &num, const mpz_class &den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    explicit Rational(const mpq_class &q);

    // Accepts "n" or "n/d" with optional leading sign.
    static Rational parse(std::string_view text);

    const mpq_class &raw() const noexcept { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;
    Rational pow(unsigned e) const;

    // "n" for integers, "n/d" otherwise.
    std::string str() const;
    // Always "n/d", the JSON wire form.
    std::string wire() const;

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);
    // *this -= a * b without a heap temporary per call.
    Rational &sub_mul(const Rational &a, const Rational &b);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace zfac

#endif
