#include <zfac/rational.hpp>

#include <ostream>

#include <zfac/errors.hpp>

namespace zfac {

Rational::Rational(long long v)
{
    q_ = mpq_class(mpz_class(std::to_string(v)));
}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class &q) : q_(q)
{
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    const auto slash = s.find('/');
    mpz_class n, d(1);
    auto valid = [](const std::string &t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    const std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    if (!valid(ns))
        throw UsageError("malformed rational '" + s + "'");
    n = mpz_class(strip_plus(ns));
    if (slash != std::string::npos) {
        const std::string ds = s.substr(slash + 1);
        if (!valid(ds))
            throw UsageError("malformed rational '" + s + "'");
        d = mpz_class(strip_plus(ds));
    }
    return Rational(n, d);
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(unsigned e) const
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(n, d);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::wire() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

Rational &Rational::sub_mul(const Rational &a, const Rational &b)
{
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
    return *this;
}

} // namespace zfac
