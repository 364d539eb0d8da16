#include <zfac/quaternion.hpp>

#include <sstream>

#include <zfac/errors.hpp>

namespace zfac {

Quaternion q_mul(const Quaternion &a, const Quaternion &b)
{
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion Quaternion::inverse() const
{
    const Rational n = norm2();
    if (n.is_zero())
        throw DivisionByZero("inverse of the zero quaternion");
    const Rational s = n.inverse();
    return {w * s, -x * s, -y * s, -z * s};
}

Quaternion &Quaternion::operator+=(const Quaternion &o)
{
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
}

Quaternion &Quaternion::operator-=(const Quaternion &o)
{
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
}

std::string Quaternion::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const std::array<std::pair<const Rational *, const char *>, 4> parts{
        {{&w, ""}, {&x, "i"}, {&y, "j"}, {&z, "k"}}};
    for (const auto &[c, unit] : parts) {
        if (c->is_zero())
            continue;
        const Rational mag = c->abs();
        if (first)
            os << (c->sign() < 0 ? "-" : "");
        else
            os << (c->sign() < 0 ? " - " : " + ");
        first = false;
        if (*unit == '\0')
            os << mag;
        else if (mag == Rational(1))
            os << unit;
        else
            os << mag << '*' << unit;
    }
    return os.str();
}

} // namespace zfac
