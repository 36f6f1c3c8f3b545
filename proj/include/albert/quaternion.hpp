#pragma once

#include <cmath>

namespace albert {

// Quaternion over the basis {1, e1, e2, e3} with e1*e2 = e3.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr double re() const { return w; }
    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
    }
    // Hamilton product; non-commutative.
    friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) {
        return {s * q.w, s * q.x, s * q.y, s * q.z};
    }
    friend constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }
    friend constexpr Quaternion operator/(const Quaternion& q, double s) {
        return {q.w / s, q.x / s, q.y / s, q.z / s};
    }

    Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }
    Quaternion& operator-=(const Quaternion& q) { return *this = *this - q; }
};

} // namespace albert
