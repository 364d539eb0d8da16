#include <zfac/bipoly.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include <zfac/errors.hpp>

namespace zfac {

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(TermMap terms)
{
    for (auto &[e, c] : terms)
        add_term(e, c);
}

BiPoly BiPoly::constant(const Rational &c)
{
    return monomial(c, 0, 0);
}

BiPoly BiPoly::monomial(const Rational &c, unsigned i, unsigned j)
{
    BiPoly p;
    p.add_term({i, j}, c);
    return p;
}

BiPoly BiPoly::from_uni(const UniPoly &u)
{
    BiPoly p;
    const auto cs = u.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const auto e = static_cast<unsigned>(k);
        p.add_term(u.var() == Var::X ? Exponent{e, 0} : Exponent{0, e}, cs[k]);
    }
    return p;
}

BiPoly BiPoly::from_x_coefficients(std::span<const UniPoly> coeffs)
{
    BiPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto cs = coeffs[i].coefficients();
        for (std::size_t j = 0; j < cs.size(); ++j)
            p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, cs[j]);
    }
    return p;
}

void BiPoly::add_term(const Exponent &e, const Rational &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational BiPoly::coeff(unsigned i, unsigned j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool BiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Degrees BiPoly::degrees() const
{
    if (terms_.empty())
        return {};
    Degrees d{0, 0, 0};
    for (const auto &[e, c] : terms_) {
        d.x = std::max(d.x, static_cast<int>(e.x));
        d.y = std::max(d.y, static_cast<int>(e.y));
        d.total = std::max(d.total, static_cast<int>(e.total()));
    }
    return d;
}

std::pair<Exponent, Rational> BiPoly::leading_term() const
{
    if (terms_.empty())
        throw DomainError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        const auto &e = it->first, &b = best->first;
        if (e.total() > b.total() || (e.total() == b.total() && e.x > b.x))
            best = it;
    }
    return *best;
}

Rational BiPoly::eval(const Rational &x0, const Rational &y0) const
{
    Rational acc;
    for (const auto &[e, c] : terms_)
        acc += c * x0.pow(e.x) * y0.pow(e.y);
    return acc;
}

UniPoly BiPoly::at_y(const Rational &y0) const
{
    std::vector<Rational> cs(static_cast<std::size_t>(std::max(deg_x(), -1) + 1));
    for (const auto &[e, c] : terms_)
        cs[e.x] += c * y0.pow(e.y);
    return UniPoly(Var::X, std::move(cs));
}

UniPoly BiPoly::at_x(const Rational &x0) const
{
    std::vector<Rational> cs(static_cast<std::size_t>(std::max(deg_y(), -1) + 1));
    for (const auto &[e, c] : terms_)
        cs[e.y] += c * x0.pow(e.x);
    return UniPoly(Var::Y, std::move(cs));
}

std::vector<UniPoly> BiPoly::x_coefficients() const
{
    const int dx = deg_x();
    if (dx < 0)
        return {};
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dx) + 1);
    for (const auto &[e, c] : terms_) {
        auto &r = raw[e.x];
        if (r.size() <= e.y)
            r.resize(e.y + 1);
        r[e.y] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto &r : raw)
        out.emplace_back(Var::Y, std::move(r));
    return out;
}

std::vector<UniPoly> BiPoly::y_coefficients() const
{
    auto cs = swap_xy().x_coefficients();
    for (auto &c : cs)
        c = c.with_var(Var::X);
    return cs;
}

BiPoly BiPoly::d_dx() const
{
    BiPoly out;
    for (const auto &[e, c] : terms_)
        if (e.x > 0)
            out.add_term({e.x - 1, e.y}, c * Rational(e.x));
    return out;
}

BiPoly BiPoly::d_dy() const
{
    BiPoly out;
    for (const auto &[e, c] : terms_)
        if (e.y > 0)
            out.add_term({e.x, e.y - 1}, c * Rational(e.y));
    return out;
}

BiPoly BiPoly::pow(unsigned e) const
{
    BiPoly acc = constant(Rational(1)), base = *this;
    while (e) {
        if (e & 1u)
            acc = acc * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return acc;
}

BiPoly BiPoly::swap_xy() const
{
    BiPoly out;
    for (const auto &[e, c] : terms_)
        out.add_term({e.y, e.x}, c);
    return out;
}

BiPoly &BiPoly::operator+=(const BiPoly &o)
{
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

BiPoly &BiPoly::operator-=(const BiPoly &o)
{
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

BiPoly &BiPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_)
        v *= c;
    return *this;
}

BiPoly operator*(const BiPoly &a, const BiPoly &b)
{
    BiPoly out;
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_)
            out.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    return out;
}

BiPoly normalized(const BiPoly &p)
{
    if (p.is_zero())
        return p;
    mpz_class den = 1, num = 0;
    for (const auto &[e, c] : p.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    for (const auto &[e, c] : p.terms())
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), mpz_class(c.num() * (den / c.den())).get_mpz_t());
    Rational scale(den, num);
    if (p.leading_term().second.sign() < 0)
        scale = -scale;
    return p * scale;
}

bool associates(const BiPoly &a, const BiPoly &b)
{
    return normalized(a) == normalized(b);
}

// ------------------------------------------------------ RationalFunction

RationalFunction::RationalFunction(UniPoly num)
    : RationalFunction(std::move(num), UniPoly::constant(Var::Y, Rational(1)))
{
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(num.with_var(Var::Y)), den_(den.with_var(Var::Y))
{
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Var::Y, Rational(1));
        return;
    }
    const UniPoly g = uni_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    num_ *= lead.inverse();
    den_ *= lead.inverse();
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
{
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
{
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
{
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
{
    return a * b.inverse();
}

std::string RationalFunction::str() const
{
    if (is_polynomial())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// -------------------------------------------------------- XPolyOverRatY

XPolyOverRatY::XPolyOverRatY(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void XPolyOverRatY::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

XPolyOverRatY XPolyOverRatY::from_bipoly(const BiPoly &p)
{
    std::vector<RationalFunction> cs;
    for (auto &c : p.x_coefficients())
        cs.emplace_back(std::move(c));
    return XPolyOverRatY(std::move(cs));
}

UniPoly XPolyOverRatY::denominator_lcm() const
{
    UniPoly h = UniPoly::constant(Var::Y, Rational(1));
    for (const auto &c : coeffs_)
        h = uni_lcm(h, c.den());
    return h;
}

BiPoly XPolyOverRatY::scaled_to_bipoly(const UniPoly &h) const
{
    std::vector<UniPoly> cs;
    cs.reserve(coeffs_.size());
    for (const auto &c : coeffs_) {
        auto q = divide_exact(c.num() * h.with_var(Var::Y), c.den());
        if (!q)
            throw InvariantViolation("scaling does not clear a coefficient denominator");
        cs.push_back(std::move(*q));
    }
    return BiPoly::from_x_coefficients(cs);
}

std::optional<BiPoly> XPolyOverRatY::as_bipoly() const
{
    for (const auto &c : coeffs_)
        if (!c.is_polynomial())
            return std::nullopt;
    return scaled_to_bipoly(UniPoly::constant(Var::Y, Rational(1)));
}

XPolyOverRatY operator+(const XPolyOverRatY &a, const XPolyOverRatY &b)
{
    std::vector<RationalFunction> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < cs.size(); ++k)
        cs[k] = a.coeff(k) + b.coeff(k);
    return XPolyOverRatY(std::move(cs));
}

XPolyOverRatY operator-(const XPolyOverRatY &a, const XPolyOverRatY &b)
{
    std::vector<RationalFunction> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < cs.size(); ++k)
        cs[k] = a.coeff(k) - b.coeff(k);
    return XPolyOverRatY(std::move(cs));
}

XPolyOverRatY operator*(const XPolyOverRatY &a, const XPolyOverRatY &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<RationalFunction> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (!a.coeffs_[i].is_zero() && !b.coeffs_[j].is_zero())
                cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return XPolyOverRatY(std::move(cs));
}

std::string XPolyOverRatY::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const auto &c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k > 0)
            os << "*x" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

// ------------------------------------------------------------- division

DivisionResult divide_in_x(const BiPoly &g, const BiPoly &p)
{
    if (p.is_zero())
        throw DivisionByZero("division by the zero polynomial");
    const XPolyOverRatY dividend = XPolyOverRatY::from_bipoly(g);
    const XPolyOverRatY divisor = XPolyOverRatY::from_bipoly(p);
    const std::size_t dp = static_cast<std::size_t>(divisor.degree());
    const RationalFunction inv_lead = divisor.coefficients().back().inverse();

    std::vector<RationalFunction> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    std::vector<RationalFunction> quo(rem.size() > dp ? rem.size() - dp : 0);
    for (std::size_t k = rem.size(); k-- > dp;) {
        if (rem[k].is_zero())
            continue;
        const RationalFunction f = rem[k] * inv_lead;
        quo[k - dp] = f;
        for (std::size_t j = 0; j <= dp; ++j)
            rem[k - dp + j] = rem[k - dp + j] - f * divisor.coefficients()[j];
    }
    if (rem.size() > dp)
        rem.resize(dp);

    DivisionResult out{XPolyOverRatY(std::move(quo)), XPolyOverRatY(std::move(rem)), p.deg_x()};
    ZFAC_ENSURE(out.remainder.degree() < out.divisor_deg_x || out.remainder.is_zero(),
                "remainder degree below divisor degree");
    ZFAC_ENSURE(divisor * out.quotient + out.remainder == dividend,
                "division identity re-expands to the dividend");
    return out;
}

ClearedDivision clear_denominators(const BiPoly &g, const BiPoly &p, const DivisionResult &d)
{
    ClearedDivision out;
    out.h = uni_lcm(d.quotient.denominator_lcm(), d.remainder.denominator_lcm());
    out.q_tilde = d.quotient.scaled_to_bipoly(out.h);
    out.r_tilde = d.remainder.scaled_to_bipoly(out.h);
    ZFAC_ENSURE(BiPoly::from_uni(out.h) * g == out.q_tilde * p + out.r_tilde,
                "cleared identity h*g = q*p + r");
    ZFAC_ENSURE(out.r_tilde.deg_x() <= p.deg_x() - 1 || out.r_tilde.is_zero(),
                "cleared remainder degree");
    return out;
}

std::optional<BiPoly> divide_exact(const BiPoly &a, const BiPoly &b)
{
    const DivisionResult d = divide_in_x(a, b);
    if (!d.remainder.is_zero())
        return std::nullopt;
    return d.quotient.as_bipoly();
}

// ------------------------------------------------------- content & gcd

namespace {

using Recursive = std::vector<UniPoly>; // x-coefficients in Q[y]

int rec_degree(const Recursive &r)
{
    return static_cast<int>(r.size()) - 1;
}

void rec_trim(Recursive &r)
{
    while (!r.empty() && r.back().is_zero())
        r.pop_back();
}

UniPoly rec_content(const Recursive &r)
{
    UniPoly c(Var::Y);
    for (const auto &k : r)
        c = uni_gcd(c, k);
    return c;
}

Recursive rec_primitive(const Recursive &r)
{
    const UniPoly c = rec_content(r);
    Recursive out;
    out.reserve(r.size());
    for (const auto &k : r)
        out.push_back(divmod(k, c).first);
    return out;
}

// lc(b)^e * a reduced modulo b in Q[y][x].
Recursive rec_prem(Recursive a, const Recursive &b)
{
    const int db = rec_degree(b);
    const UniPoly &lb = b.back();
    while (rec_degree(a) >= db) {
        const int shift = rec_degree(a) - db;
        const UniPoly la = a.back();
        for (auto &k : a)
            k = k * lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
        rec_trim(a);
    }
    return a;
}

} // namespace

ContentSplit content_primitive_x(const BiPoly &p)
{
    if (p.is_zero())
        throw DomainError("content of the zero polynomial");
    const auto cs = p.x_coefficients();
    ContentSplit out;
    out.content = rec_content(cs);
    std::vector<UniPoly> prim;
    prim.reserve(cs.size());
    for (const auto &c : cs)
        prim.push_back(divmod(c, out.content).first);
    out.primitive = BiPoly::from_x_coefficients(prim);
    ZFAC_ENSURE(BiPoly::from_uni(out.content) * out.primitive == p, "content * primitive = p");
    return out;
}

BiPoly bipoly_gcd(const BiPoly &p, const BiPoly &g)
{
    if (p.is_zero() && g.is_zero())
        throw DomainError("gcd(0, 0) is undefined");
    if (p.is_zero())
        return normalized(g);
    if (g.is_zero())
        return normalized(p);

    const ContentSplit sp = content_primitive_x(p), sg = content_primitive_x(g);
    const UniPoly content = uni_gcd(sp.content, sg.content);

    Recursive a = sp.primitive.x_coefficients(), b = sg.primitive.x_coefficients();
    if (rec_degree(a) < rec_degree(b))
        std::swap(a, b);
    while (!b.empty()) {
        Recursive r = rec_prem(a, b);
        a = std::move(b);
        b = r.empty() ? std::move(r) : rec_primitive(r);
    }
    a = rec_primitive(a);
    BiPoly prim = rec_degree(a) <= 0 ? BiPoly::constant(Rational(1)) : BiPoly::from_x_coefficients(a);

    BiPoly result = normalized(BiPoly::from_uni(content) * prim);
    ZFAC_ENSURE(divide_exact(p, result).has_value(), "gcd divides the first argument");
    ZFAC_ENSURE(divide_exact(g, result).has_value(), "gcd divides the second argument");
    return result;
}

BiPoly squarefree_part(const BiPoly &p)
{
    if (p.is_constant())
        throw DomainError("squarefree part of a constant");
    const BiPoly d = bipoly_gcd(bipoly_gcd(p, p.d_dx()), p.d_dy());
    auto q = divide_exact(p, d);
    ZFAC_ENSURE(q.has_value(), "gcd with the partials divides p");
    return normalized(*q);
}

// -------------------------------------------------------- linear change

Direction Direction::normalized(long a, long b)
{
    if (a == 0 && b == 0)
        throw UsageError("direction (0, 0) does not define a line family");
    const long g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

BiPoly substitute(const BiPoly &p, const BiPoly &x_image, const BiPoly &y_image)
{
    const Degrees d = p.degrees();
    if (d.total < 0)
        return {};
    std::vector<BiPoly> xp{BiPoly::constant(Rational(1))}, yp{BiPoly::constant(Rational(1))};
    for (int k = 1; k <= d.x; ++k)
        xp.push_back(xp.back() * x_image);
    for (int k = 1; k <= d.y; ++k)
        yp.push_back(yp.back() * y_image);
    BiPoly out;
    for (const auto &[e, c] : p.terms())
        out += c * (xp[e.x] * yp[e.y]);
    return out;
}

BiPoly change_of_variables(const BiPoly &p, Direction d)
{
    d = Direction::normalized(d.a, d.b);
    const Rational a(d.a), b(d.b);
    const Rational inv_norm = (a * a + b * b).inverse();
    const BiPoly u = BiPoly::x(), v = BiPoly::y();
    const BiPoly x_image = (b * u + a * v) * inv_norm;
    const BiPoly y_image = (a * u - b * v) * inv_norm;
    return substitute(p, x_image, y_image);
}

BiPoly inverse_change_of_variables(const BiPoly &transformed, Direction d)
{
    d = Direction::normalized(d.a, d.b);
    const Rational a(d.a), b(d.b);
    const BiPoly x = BiPoly::x(), y = BiPoly::y();
    return substitute(transformed, b * x + a * y, a * x - b * y);
}

} // namespace zfac
