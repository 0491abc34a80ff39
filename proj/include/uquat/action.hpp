#pragma once

#include <array>

#include "uquat/extquat.hpp"

namespace uquat {

// Element v0 + u*vec of the distinguished copy of R^4 (the fixed set of
// star = bar). The quadratic form restricts to v0^2 + u^2 |vec|^2: Minkowski,
// Galilean, or Euclidean depending on the ring.
struct Minquat {
    Algebra alg;
    double v0;
    Quaternion vec;  // pure vector

    Minquat(Algebra alg_, double v0_, const Quaternion& vec_);
    Minquat(Algebra alg_, double v0_, double v1, double v2, double v3) noexcept
        : alg(alg_), v0(v0_), vec(Quaternion::vector(v1, v2, v3)) {}

    static Minquat basepoint(Algebra alg_) noexcept { return {alg_, 1.0, 0.0, 0.0, 0.0}; }

    std::array<double, 4> coords() const noexcept { return {v0, vec.x, vec.y, vec.z}; }

    bool operator==(const Minquat&) const = default;
};

Minquat operator-(const Minquat& v) noexcept;

ExtQuaternion embed(const Minquat& v);

// Nearest minquat: keeps the real scalar and the u-vector components,
// discarding the complementary (numerically residual) parts.
Minquat minquat_part(const ExtQuaternion& q);

// Q restricted to R^4 is real valued.
double qform(const Minquat& v);

double sup_distance(const Minquat& v, const Minquat& w);

// Row-major 4x4 real matrix on coordinates (v0, v1, v2, v3).
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity() noexcept;
    // diag(1, u^2, u^2, u^2), the Gram matrix of the bilinear form.
    static Mat4 metric(Algebra alg) noexcept;

    double& operator()(int i, int j) noexcept { return m[i][j]; }
    double operator()(int i, int j) const noexcept { return m[i][j]; }

    Mat4 transposed() const noexcept;
    double det() const noexcept;

    bool operator==(const Mat4&) const = default;
};

Mat4 operator*(const Mat4& a, const Mat4& b) noexcept;
std::array<double, 4> operator*(const Mat4& a, const std::array<double, 4>& v) noexcept;

// The sandwich product q * v * bar_star(q) without unit validation or
// projection; the result of a unit q on a minquat lies in R^4 again.
ExtQuaternion sandwich(const ExtQuaternion& q, const ExtQuaternion& v);
Minquat sandwich(const ExtQuaternion& q, const Minquat& v);

// Sandwich action of a unit element on R^4; validates the unit constraint and
// uses q as-is (no renormalization).
Minquat apply(const UnitElement& q, const Minquat& v);

// Group product, checked to stay unit norm.
UnitElement compose(const UnitElement& p, const UnitElement& q);

// Rotation by theta about a (normalized) axis: no u part.
UnitElement make_rotor(Algebra alg, const Quaternion& axis, double theta);

// Translator-type element (bar = star) with parameter phi: Lorentz boost of
// rapidity phi, Galilean shear by phi, or simple rotation by phi.
UnitElement make_translator(Algebra alg, const Quaternion& axis, double phi);

// Matrix of the action in the standard basis {1, u*i1, u*i2, u*i3}.
Mat4 matrix_of(const UnitElement& q);

// Orthonormal basis {1, axis, axis2, axis3} adapted to a translator, plus the
// matrix of its action in that basis (a 2x2 block on the first two
// coordinates, identity elsewhere).
struct AdaptedFrame {
    Mat4 matrix;
    std::array<Minquat, 4> basis;
};

AdaptedFrame adapted_frame(const UnitElement& translator);

inline Minquat operator-(const Minquat& v) noexcept {
    Minquat w = v;
    w.v0 = -w.v0;
    w.vec = -w.vec;
    return w;
}

}  // namespace uquat
