#include <zfac/ncpoly.hpp>

#include <zfac/errors.hpp>

namespace zfac {

NCWord NCWord::from_string(std::string_view text)
{
    std::vector<Letter> ls;
    if (text == "1")
        return NCWord();
    for (char ch : text) {
        if (ch == 'x')
            ls.push_back(Letter::X);
        else if (ch == 'y')
            ls.push_back(Letter::Y);
        else
            throw UsageError("word letters must be x or y");
    }
    return NCWord(std::move(ls));
}

std::string NCWord::str() const
{
    if (letters_.empty())
        return "1";
    std::string s;
    for (auto l : letters_)
        s += l == Letter::X ? 'x' : 'y';
    return s;
}

NCWord operator*(const NCWord &a, const NCWord &b)
{
    std::vector<Letter> ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return NCWord(std::move(ls));
}

std::strong_ordering operator<=>(const NCWord &a, const NCWord &b)
{
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    return a.letters_ <=> b.letters_;
}

std::vector<NCWord> words_up_to(std::size_t max_len)
{
    std::vector<NCWord> out{NCWord()};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k) {
            out.push_back(out[k] * NCWord({Letter::X}));
            out.push_back(out[k] * NCWord({Letter::Y}));
        }
        begin = end;
    }
    return out;
}

NCPoly::NCPoly(TermMap terms)
{
    for (auto &[w, c] : terms)
        add_term(w, c);
}

NCPoly NCPoly::term(const Quaternion &c, const NCWord &w)
{
    NCPoly f;
    f.add_term(w, c);
    return f;
}

void NCPoly::add_term(const NCWord &w, const Quaternion &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Quaternion NCPoly::coeff(const NCWord &w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Quaternion() : it->second;
}

int NCPoly::degree() const noexcept
{
    // shortlex keeps the longest words last
    return terms_.empty() ? kNegInfinity : static_cast<int>(terms_.rbegin()->first.size());
}

NCPoly NCPoly::pow(unsigned e) const
{
    NCPoly acc = constant(Quaternion(1));
    for (unsigned k = 0; k < e; ++k)
        acc = nc_mul(acc, *this);
    return acc;
}

NCPoly &NCPoly::operator+=(const NCPoly &o)
{
    for (const auto &[w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o)
{
    for (const auto &[w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NCPoly operator*(const Quaternion &c, const NCPoly &f)
{
    NCPoly out;
    for (const auto &[w, v] : f.terms_)
        out.add_term(w, q_mul(c, v));
    return out;
}

NCPoly nc_mul(const NCPoly &f, const NCPoly &g)
{
    NCPoly out;
    for (const auto &[wf, cf] : f.terms())
        for (const auto &[wg, cg] : g.terms())
            out += NCPoly::term(q_mul(cf, cg), wf * wg);
    return out;
}

Quaternion nc_eval(const NCPoly &f, const Quaternion &a, const Quaternion &b)
{
    Quaternion acc;
    for (const auto &[w, c] : f.terms()) {
        Quaternion v = c;
        for (auto l : w.letters())
            v = q_mul(v, l == Letter::X ? a : b);
        acc += v;
    }
    return acc;
}

namespace builtin {

NCPoly commutator()
{
    return NCPoly::term(1, NCWord::from_string("xy")) - NCPoly::term(1, NCWord::from_string("yx"));
}

NCPoly g_printed()
{
    return NCPoly::term(1, NCWord::from_string("xxy")) + NCPoly::term(1, NCWord::from_string("yyx")) -
           NCPoly::term(2, NCWord::from_string("xyx"));
}

NCPoly g_corrected()
{
    return NCPoly::term(1, NCWord::from_string("xxy")) + NCPoly::term(1, NCWord::from_string("yxx")) -
           NCPoly::term(2, NCWord::from_string("xyx"));
}

} // namespace builtin

} // namespace zfac
