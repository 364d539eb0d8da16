#include <zfac/printer.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace zfac {

namespace {

std::string monomial_text(unsigned i, unsigned j)
{
    std::string s;
    auto power = [](char v, unsigned e) {
        std::string t(1, v);
        if (e > 1)
            t += "^" + std::to_string(e);
        return t;
    };
    if (i > 0)
        s += power('x', i);
    if (j > 0)
        s += (s.empty() ? "" : "*") + power('y', j);
    return s;
}

std::string word_text(const NCWord &w)
{
    std::string s;
    const auto &ls = w.letters();
    for (std::size_t k = 0; k < ls.size();) {
        std::size_t run = k;
        while (run < ls.size() && ls[run] == ls[k])
            ++run;
        if (!s.empty())
            s += '*';
        s += ls[k] == Letter::X ? 'x' : 'y';
        if (run - k > 1)
            s += "^" + std::to_string(run - k);
        k = run;
    }
    return s;
}

// Appends one signed term; `body` is the unsigned magnitude text.
void append_term(std::ostringstream &os, bool &first, bool negative, const std::string &body)
{
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    first = false;
    os << body;
}

bool single_term(const std::string &s)
{
    // no top-level + or - after the first character
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(')
            ++depth;
        else if (s[k] == ')')
            --depth;
        else if (depth == 0 && k > 0 && (s[k] == '+' || s[k] == '-'))
            return false;
    }
    return true;
}

} // namespace

std::string print_canonical(const BiPoly &p)
{
    if (p.is_zero())
        return "0";
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        if (a.first.total() != b.first.total())
            return a.first.total() > b.first.total();
        return a.first.x > b.first.x;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms) {
        const Rational mag = c.abs();
        std::string body;
        if (e.total() == 0)
            body = mag.str();
        else if (mag == Rational(1))
            body = monomial_text(e.x, e.y);
        else
            body = mag.str() + "*" + monomial_text(e.x, e.y);
        append_term(os, first, c.sign() < 0, body);
    }
    return os.str();
}

std::string print_canonical(const UniPoly &p)
{
    return print_canonical(BiPoly::from_uni(p));
}

std::string print_canonical(const NCPoly &f)
{
    if (f.is_zero())
        return "0";
    std::vector<std::pair<NCWord, Quaternion>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        if (a.first.size() != b.first.size())
            return a.first.size() > b.first.size();
        return a.first.letters() < b.first.letters();
    });
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, q] : terms) {
        const std::string word = word_text(w);
        const auto comps = q.components();
        const int nonzero = static_cast<int>(std::count_if(
            comps.begin(), comps.end(), [](const Rational &r) { return !r.is_zero(); }));
        if (nonzero == 1) {
            // a single real or imaginary part: signed scalar times unit
            std::size_t k = 0;
            while (comps[k].is_zero())
                ++k;
            const Rational mag = comps[k].abs();
            const char *unit = k == 0 ? "" : k == 1 ? "i" : k == 2 ? "j" : "k";
            std::string coeff;
            if (*unit == '\0')
                coeff = (mag == Rational(1) && !word.empty()) ? "" : mag.str();
            else
                coeff = mag == Rational(1) ? unit : mag.str() + "*" + unit;
            std::string body = coeff;
            if (!word.empty())
                body += (body.empty() ? "" : "*") + word;
            append_term(os, first, comps[k].sign() < 0, body);
        } else {
            std::string body = "(" + q.str() + ")";
            if (!word.empty())
                body += "*" + word;
            append_term(os, first, false, body);
        }
    }
    return os.str();
}

std::string print_canonical(const XPolyOverRatY &q)
{
    if (auto b = q.as_bipoly())
        return print_canonical(*b);
    std::ostringstream os;
    bool first = true;
    for (int k = q.degree(); k >= 0; --k) {
        const RationalFunction c = q.coeff(static_cast<std::size_t>(k));
        if (c.is_zero())
            continue;
        std::string num = print_canonical(c.num());
        bool negative = false;
        if (single_term(num) && num.front() == '-') {
            negative = true;
            num.erase(0, 1);
        }
        std::string body = single_term(num) ? num : "(" + num + ")";
        if (!c.is_polynomial()) {
            const std::string den = print_canonical(c.den());
            body += "/" + (den.find_first_of("*^+- ") == std::string::npos ? den : "(" + den + ")");
        }
        if (k > 0)
            body += "*" + monomial_text(static_cast<unsigned>(k), 0);
        if (body.rfind("1*", 0) == 0 && c.is_polynomial())
            body.erase(0, 2);
        append_term(os, first, negative, body);
    }
    return os.str();
}

} // namespace zfac
