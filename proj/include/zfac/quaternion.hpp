#ifndef ZFAC_QUATERNION_HPP
#define ZFAC_QUATERNION_HPP

#include <array>
#include <string>

#include <zfac/rational.hpp>

namespace zfac {

// w + x i + y j + z k with exact rational parts.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion() = default;
    Quaternion(Rational w_) : w(std::move(w_)) {}
    Quaternion(int w_) : w(w_) {}
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_))
    {
    }

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    std::array<Rational, 4> components() const { return {w, x, y, z}; }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    Rational norm2() const { return w * w + x * x + y * y + z * z; }
    // conjugate / norm^2; DivisionByZero for 0.
    Quaternion inverse() const;

    Quaternion &operator+=(const Quaternion &o);
    Quaternion &operator-=(const Quaternion &o);

    friend Quaternion operator+(Quaternion a, const Quaternion &b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion &b) { return a -= b; }
    friend Quaternion operator-(const Quaternion &a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend bool operator==(const Quaternion &, const Quaternion &) = default;

    // "w + x*i + y*j + z*k" with zero parts dropped; "0" for zero.
    std::string str() const;
};

// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
Quaternion q_mul(const Quaternion &a, const Quaternion &b);
inline Quaternion operator*(const Quaternion &a, const Quaternion &b) { return q_mul(a, b); }

} // namespace zfac

#endif
