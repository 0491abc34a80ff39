#pragma once

#include <algorithm>
#include <cmath>

#include "uquat/quat.hpp"
#include "uquat/ring.hpp"

namespace uquat {

// Quaternion over one of the three two-component rings, stored as
// q = alpha + u*beta with real-quaternion components. u commutes with the
// quaternionic units i1, i2, i3.
struct ExtQuaternion {
    Algebra alg;
    Quaternion alpha;  // real part
    Quaternion beta;   // u part

    constexpr ExtQuaternion(Algebra alg_, const Quaternion& alpha_,
                            const Quaternion& beta_ = {}) noexcept
        : alg(alg_), alpha(alpha_), beta(beta_) {}

    static constexpr ExtQuaternion one(Algebra alg_) noexcept {
        return {alg_, Quaternion::identity(), {}};
    }

    constexpr bool operator==(const ExtQuaternion&) const = default;
};

ExtQuaternion operator+(const ExtQuaternion& p, const ExtQuaternion& q);
ExtQuaternion operator-(const ExtQuaternion& p, const ExtQuaternion& q);
ExtQuaternion operator*(const ExtQuaternion& p, const ExtQuaternion& q);
ExtQuaternion operator*(const RingScalar& s, const ExtQuaternion& q);

constexpr ExtQuaternion operator-(const ExtQuaternion& q) noexcept {
    return {q.alg, -q.alpha, -q.beta};
}
constexpr ExtQuaternion operator*(double s, const ExtQuaternion& q) noexcept {
    return {q.alg, s * q.alpha, s * q.beta};
}

// The three involutions: u-conjugation, quaternionic conjugation, and their
// composition.
constexpr ExtQuaternion star(const ExtQuaternion& q) noexcept {
    return {q.alg, q.alpha, -q.beta};
}
constexpr ExtQuaternion bar(const ExtQuaternion& q) noexcept {
    return {q.alg, conj(q.alpha), conj(q.beta)};
}
constexpr ExtQuaternion bar_star(const ExtQuaternion& q) noexcept {
    return {q.alg, conj(q.alpha), -conj(q.beta)};
}

constexpr RingScalar scalar_part(const ExtQuaternion& q) noexcept {
    return {q.alg, q.alpha.w, q.beta.w};
}
constexpr ExtQuaternion vector_part(const ExtQuaternion& q) noexcept {
    return {q.alg, vector_part(q.alpha), vector_part(q.beta)};
}

inline double sup_norm(const ExtQuaternion& q) noexcept {
    double m = 0.0;
    for (double c : {q.alpha.w, q.alpha.x, q.alpha.y, q.alpha.z, q.beta.w, q.beta.x, q.beta.y,
                     q.beta.z})
        m = std::max(m, std::abs(c));
    return m;
}

// Symmetric bilinear form Sc(p * bar(q)), valued in the ring.
RingScalar bilinear(const ExtQuaternion& p, const ExtQuaternion& q);

// Quadratic form Q(q) = q * bar(q) = |alpha|^2 + u^2 |beta|^2 + 2u<alpha,beta>.
RingScalar qform(const ExtQuaternion& q);

// Ring-valued cosine of the angle between p and q; same domain restrictions
// as the ring square root of the two quadratic forms.
RingScalar angle_cosine(const ExtQuaternion& p, const ExtQuaternion& q);

// Structural test for a vanishing quadratic form: complex — |alpha| = |beta|
// and <alpha,beta> = 0; dual — |alpha| = 0; split — q = 0.
bool is_null(const ExtQuaternion& q, double tol = kUnitTol);

// q = radius * (cos_angle + axis * sin_angle) with Q(axis) = 1, axis^2 = -1.
struct PolarForm {
    RingScalar radius;
    RingScalar cos_angle;
    RingScalar sin_angle;
    ExtQuaternion axis;
};

// Requires Q(q) invertible in the ring; throws naming the degeneracy class
// otherwise.
PolarForm polar(const ExtQuaternion& q);

// Element of the unit-norm group: Q(q) = 1 as a ring element.
class UnitElement {
public:
    explicit UnitElement(const ExtQuaternion& q);  // validates within kUnitTol

    // For values unit by construction.
    static UnitElement unchecked(const ExtQuaternion& q) noexcept { return UnitElement(q, 0); }

    const ExtQuaternion& value() const noexcept { return q_; }
    Algebra algebra() const noexcept { return q_.alg; }

    friend UnitElement operator-(const UnitElement& u) noexcept {
        return UnitElement(-u.q_, 0);
    }

private:
    UnitElement(const ExtQuaternion& q, int) noexcept : q_(q) {}
    ExtQuaternion q_;
};

// q = rotor * translator with star(rotor) = rotor (a real quaternion) and
// bar(translator) = star(translator). theta >= 0 parametrizes the translator:
// |alpha| = cosh/1/cos of theta depending on the ring.
struct Decomposition {
    UnitElement rotor;
    UnitElement translator;
    double theta;
};

Decomposition decompose(const UnitElement& q);

}  // namespace uquat
