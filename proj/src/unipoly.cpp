#include <zfac/unipoly.hpp>

#include <algorithm>
#include <sstream>

#include <zfac/errors.hpp>

namespace zfac {

UniPoly::UniPoly(Var v, std::vector<Rational> coeffs) : var_(v), coeffs_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::constant(Var v, const Rational &c)
{
    return UniPoly(v, {c});
}

UniPoly UniPoly::monomial(Var v, const Rational &c, unsigned k)
{
    std::vector<Rational> cs(k + 1);
    cs[k] = c;
    return UniPoly(v, std::move(cs));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

const Rational &UniPoly::leading() const
{
    if (coeffs_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational &at) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return UniPoly(var_);
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * Rational(static_cast<unsigned long>(k));
    return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::pow(unsigned e) const
{
    UniPoly acc = constant(var_, Rational(1)), base = *this;
    while (e) {
        if (e & 1u)
            acc = acc * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return acc;
}

UniPoly &UniPoly::operator+=(const UniPoly &o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UniPoly &UniPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto &a : coeffs_)
        a *= c;
    return *this;
}

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
    if (a.is_zero() || b.is_zero())
        return UniPoly(a.var_);
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.var_, std::move(out));
}

std::string UniPoly::str() const
{
    if (is_zero())
        return "0";
    const char v = var_ == Var::X ? 'x' : 'y';
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational &c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        const Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1))
            os << mag << '*';
        os << v;
        if (k > 1)
            os << '^' << k;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b)
{
    if (b.is_zero())
        throw DivisionByZero("univariate division by the zero polynomial");
    if (a.var() != b.var())
        throw UsageError("univariate division with mismatched variables");
    const Var v = a.var();
    if (a.degree() < b.degree())
        return {UniPoly(v), a};
    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const Rational inv_lead = b.leading().inverse();
    std::vector<Rational> quo(rem.size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero())
            continue;
        const Rational f = rem[k] * inv_lead;
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j].sub_mul(f, bc[j]);
    }
    rem.resize(db);
    return {UniPoly(v, std::move(quo)), UniPoly(v, std::move(rem))};
}

UniPoly uni_gcd(const UniPoly &f, const UniPoly &g)
{
    if (f.var() != g.var())
        throw UsageError("gcd of polynomials in different variables");
    UniPoly a = f.monic(), b = g.monic();
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a;
}

UniPoly uni_lcm(const UniPoly &f, const UniPoly &g)
{
    if (f.is_zero() || g.is_zero())
        throw DomainError("lcm with the zero polynomial");
    return divmod(f * g, uni_gcd(f, g)).first.monic();
}

UniPoly uni_squarefree_part(const UniPoly &f)
{
    if (f.is_zero())
        throw DomainError("squarefree part of the zero polynomial");
    const UniPoly d = uni_gcd(f, f.derivative());
    if (d.degree() <= 0)
        return f.monic();
    return divmod(f, d).first.monic();
}

std::optional<UniPoly> divide_exact(const UniPoly &a, const UniPoly &b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        return std::nullopt;
    return q;
}

namespace {

// f, f', then negated remainders until one vanishes.
std::vector<UniPoly> remainder_chain(const UniPoly &f)
{
    std::vector<UniPoly> chain{f, f.derivative()};
    for (;;) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero())
            return chain;
        chain.push_back(-r);
    }
}

} // namespace

SturmChain::SturmChain(const UniPoly &f)
{
    if (f.is_zero())
        throw DomainError("Sturm sequence of the zero polynomial");
    const UniPoly m = f.monic();
    if (m.degree() <= 0) {
        polys_.push_back(m);
        return;
    }
    // The remainder sequence of (f, f') is the Euclidean gcd computation; a
    // constant last element means f is already squarefree.
    polys_ = remainder_chain(m);
    if (polys_.back().degree() > 0)
        polys_ = remainder_chain(divmod(m, polys_.back()).first.monic());
    ZFAC_ENSURE(polys_.back().degree() == 0, "Sturm chain of a squarefree input ends in a constant");
}

std::size_t SturmChain::variations(const Bound &at, bool at_minus_infinity) const
{
    std::size_t changes = 0;
    int prev = 0;
    for (const auto &p : polys_) {
        int s;
        if (at)
            s = p.eval(*at).sign();
        else {
            s = p.leading().sign();
            if (at_minus_infinity && (p.degree() % 2 != 0))
                s = -s;
        }
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

std::size_t SturmChain::count(const Bound &lo, const Bound &hi) const
{
    if (lo && hi && *lo >= *hi)
        return 0;
    const std::size_t vlo = variations(lo, true), vhi = variations(hi, false);
    ZFAC_ENSURE(vlo >= vhi, "Sturm variations are monotone");
    return vlo - vhi;
}

std::size_t sturm_count(const UniPoly &f, const Bound &lo, const Bound &hi)
{
    if (f.is_zero())
        throw DomainError("every point is a root of the zero polynomial");
    return SturmChain(f).count(lo, hi);
}

namespace {

// Narrow (lo, hi] holding exactly one root of s, keeping that invariant.
// Returns true when the midpoint hit the root exactly (lo == hi on return).
bool bisect_once(const UniPoly &s, const SturmChain &chain, Rational &lo, Rational &hi)
{
    Rational mid = (lo + hi) / Rational(2);
    if (s.eval(mid).is_zero() && chain.count(lo, mid) == 1) {
        lo = hi = mid;
        return true;
    }
    if (chain.count(lo, mid) == 1)
        hi = mid;
    else
        lo = mid;
    return false;
}

// Same, for an interval whose endpoints carry opposite signs of s. A
// squarefree s has a simple root, so the sign test suffices.
bool bisect_by_sign(const UniPoly &s, Rational &lo, int slo, Rational &hi)
{
    Rational mid = (lo + hi) / Rational(2);
    const int sm = s.eval(mid).sign();
    if (sm == 0) {
        lo = hi = mid;
        return true;
    }
    if (sm == slo)
        lo = std::move(mid);
    else
        hi = std::move(mid);
    return false;
}

RootInterval finalize(const UniPoly &s, const SturmChain &chain, Rational lo, Rational hi,
                      unsigned budget)
{
    if (s.eval(hi).is_zero())
        return {hi, hi};
    // lo may itself be a neighbouring root (excluded by the half-open
    // convention); move it inward so both endpoints carry a sign.
    while (s.eval(lo).is_zero())
        if (bisect_once(s, chain, lo, hi))
            return {lo, hi};
    const int slo = s.eval(lo).sign();
    ZFAC_ENSURE(slo * s.eval(hi).sign() < 0, "isolating interval has a sign change");

    // A rational root r of s satisfies r * lead in Z, where lead is the
    // leading coefficient of the primitive integer multiple of s. Once the
    // interval is shorter than 1 / lead there is a single candidate to test.
    mpz_class den_lcm = 1;
    for (const auto &c : s.coefficients())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class content = 0;
    for (const auto &c : s.coefficients())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                mpz_class(c.num() * (den_lcm / c.den())).get_mpz_t());
    mpz_class lead = s.leading().num() * (den_lcm / s.leading().den()) / content;
    lead = abs(lead);
    const Rational step(mpz_class(1), lead);
    while (hi - lo >= step) {
        if (bisect_by_sign(s, lo, slo, hi))
            return {lo, hi};
    }
    mpz_class k;
    const Rational scaled = hi * Rational(lead);
    mpz_fdiv_q(k.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
    const Rational candidate(k, lead);
    if (candidate > lo && s.eval(candidate).is_zero())
        return {candidate, candidate};

    for (unsigned b = 0; b < budget; ++b)
        if (bisect_by_sign(s, lo, slo, hi))
            return {lo, hi};
    return {lo, hi};
}

// Power of two exceeding every root modulus: 2 * max_k |a_{n-k} / a_n|^(1/k),
// with each ratio rounded up to a power of two via bit lengths.
Rational root_bound(const UniPoly &s)
{
    const int n = s.degree();
    long e = 0;
    for (int k = 1; k <= n; ++k) {
        const Rational ratio = s.coeff(static_cast<std::size_t>(n - k)) / s.leading();
        if (ratio.is_zero())
            continue;
        // ratio < 2^(bits(num) - bits(den) + 1)
        const long log2_upper = static_cast<long>(mpz_sizeinbase(ratio.raw().get_num_mpz_t(), 2)) -
                                static_cast<long>(mpz_sizeinbase(ratio.raw().get_den_mpz_t(), 2)) + 1;
        e = std::max(e, (log2_upper + k - 1) / k);
    }
    mpz_class b;
    mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(e + 1));
    return Rational(b);
}

} // namespace

std::vector<RootInterval> isolate_roots(const UniPoly &f, unsigned budget)
{
    if (f.is_zero())
        throw DomainError("cannot isolate roots of the zero polynomial");
    const SturmChain chain(f);
    const UniPoly &s = chain.polys().front();
    std::vector<RootInterval> out;
    if (s.degree() <= 0)
        return out;

    const Rational bound = root_bound(s);
    struct Piece {
        Rational lo, hi;
        std::size_t vlo, vhi; // sign variations at the endpoints
    };
    std::vector<Piece> work{{-bound, bound, chain.variations(-bound, true),
                             chain.variations(bound, false)}};
    while (!work.empty()) {
        Piece piece = std::move(work.back());
        work.pop_back();
        ZFAC_ENSURE(piece.vlo >= piece.vhi, "Sturm variations are monotone");
        const std::size_t n = piece.vlo - piece.vhi;
        if (n == 0)
            continue;
        if (n == 1) {
            out.push_back(finalize(s, chain, piece.lo, piece.hi, budget));
            continue;
        }
        const Rational mid = (piece.lo + piece.hi) / Rational(2);
        const std::size_t vmid = chain.variations(mid, false);
        work.push_back({piece.lo, mid, piece.vlo, vmid});
        work.push_back({mid, piece.hi, vmid, piece.vhi});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval &a, const RootInterval &b) {
        return a.hi < b.hi;
    });
    return out;
}

} // namespace zfac
