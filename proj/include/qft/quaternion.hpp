#pragma once

#include <cmath>
#include <iosfwd>
#include <string>

namespace qft {

/// A quaternion q = q0 + i q1 + j q2 + k q3 over IEEE doubles.
///
/// The basis units satisfy Hamilton's rules ij = -ji = k, jk = -kj = i,
/// ki = -ik = j, i^2 = j^2 = k^2 = -1. Multiplication is associative but
/// not commutative. No implicit normalization is ever performed.
struct Quaternion {
    double q0 = 0.0;  ///< scalar part
    double q1 = 0.0;  ///< i component
    double q2 = 0.0;  ///< j component
    double q3 = 0.0;  ///< k component

    constexpr Quaternion() = default;
    constexpr Quaternion(double s, double i, double j, double k)
        : q0(s), q1(i), q2(j), q3(k) {}
    /// Embeds a real scalar.
    constexpr explicit Quaternion(double s) : q0(s) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double scalar() const { return q0; }
    /// Pure (non-scalar) part i q1 + j q2 + k q3.
    constexpr Quaternion vec() const { return {0.0, q1, q2, q3}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion& operator+=(const Quaternion& r) {
        q0 += r.q0; q1 += r.q1; q2 += r.q2; q3 += r.q3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        q0 -= r.q0; q1 -= r.q1; q2 -= r.q2; q3 -= r.q3;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        q0 *= s; q1 *= s; q2 *= s; q3 *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator-(const Quaternion& a) {
        return {-a.q0, -a.q1, -a.q2, -a.q3};
    }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

    /// Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
                a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
                a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
                a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
    }
};

/// Conjugate q0 - i q1 - j q2 - k q3. Anti-involution: conj(pq) = conj(q) conj(p).
constexpr Quaternion conj(const Quaternion& q) {
    return {q.q0, -q.q1, -q.q2, -q.q3};
}

constexpr double modulus_sq(const Quaternion& q) {
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}

/// |q|_Q = sqrt(q conj(q)). Multiplicative: |pq|_Q = |p|_Q |q|_Q.
inline double modulus(const Quaternion& q) {
    return std::sqrt(modulus_sq(q));
}

/// q^{-1} = conj(q) / |q|_Q^2. Throws std::domain_error on the zero quaternion.
Quaternion inverse(const Quaternion& q);

/// Polar decomposition q = modulus * (cos(angle) + axis * sin(angle)).
///
/// axis is a pure unit quaternion (axis^2 = -1) and angle lies in [0, pi].
/// When vec(q) = 0 the axis is undefined; the convention here fixes it to i
/// with angle 0 (positive reals) or pi (negative reals).
struct PolarForm {
    double modulus;
    Quaternion axis;
    double angle;
};

/// Throws std::domain_error on the zero quaternion.
PolarForm polar(const Quaternion& q);

/// Rebuilds modulus * (cos(angle) + axis * sin(angle)).
Quaternion reconstruct(const PolarForm& p);

/// Formats as "a+bi+cj+dk", omitting zero terms ("0" for the zero quaternion).
std::string to_string(const Quaternion& q);

/// Parses the textual form produced by to_string; accepts omitted zero terms,
/// e.g. "1+k", "-2.5i", "3". Throws std::invalid_argument on malformed input.
Quaternion parse_quaternion(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qft
