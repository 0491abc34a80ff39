#pragma once

#include <cmath>

namespace uquat {

// Real quaternion w + x*i1 + y*i2 + z*i3. A zero scalar part makes it double
// as the 3-vector type, so dot/cross below read only the vector components.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) noexcept
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion identity() noexcept { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion vector(double x_, double y_, double z_) noexcept {
        return {0.0, x_, y_, z_};
    }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) noexcept {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) noexcept {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

constexpr Quaternion operator-(const Quaternion& q) noexcept {
    return {-q.w, -q.x, -q.y, -q.z};
}

constexpr Quaternion operator*(double s, const Quaternion& q) noexcept {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

constexpr Quaternion operator*(const Quaternion& q, double s) noexcept { return s * q; }

constexpr Quaternion operator/(const Quaternion& q, double s) noexcept {
    return {q.w / s, q.x / s, q.y / s, q.z / s};
}

// Hamilton product: p0 q0 - <p,q> + p0 q_vec + q0 p_vec + [p,q].
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion conj(const Quaternion& q) noexcept { return {q.w, -q.x, -q.y, -q.z}; }

// Dot product of the vector parts (scalar parts ignored).
constexpr double dot(const Quaternion& p, const Quaternion& q) noexcept {
    return p.x * q.x + p.y * q.y + p.z * q.z;
}

// Cross product of the vector parts; the result is a pure vector.
constexpr Quaternion cross(const Quaternion& p, const Quaternion& q) noexcept {
    return {0.0, p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
}

constexpr double norm_sq(const Quaternion& q) noexcept {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) noexcept { return std::sqrt(norm_sq(q)); }

constexpr Quaternion scalar_part(const Quaternion& q) noexcept { return {q.w, 0.0, 0.0, 0.0}; }

constexpr Quaternion vector_part(const Quaternion& q) noexcept { return {0.0, q.x, q.y, q.z}; }

}  // namespace uquat
