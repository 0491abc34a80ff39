#pragma once

#include "uquat/action.hpp"

namespace uquat {

// Point of the invariant unit level set M = {Q(v) = 1}, restricted to the
// canonical component: the upper hyperboloid sheet (complex), the affine
// plane v0 = 1 (dual), or the unit 3-sphere (split).
class SpaceFormPoint {
public:
    explicit SpaceFormPoint(const Minquat& v);  // validates membership

    static SpaceFormPoint unchecked(const Minquat& v) noexcept {
        return SpaceFormPoint(v, 0);
    }
    static SpaceFormPoint basepoint(Algebra alg) noexcept {
        return SpaceFormPoint(Minquat::basepoint(alg), 0);
    }

    const Minquat& position() const noexcept { return v_; }
    Algebra algebra() const noexcept { return v_.alg; }

private:
    SpaceFormPoint(const Minquat& v, int) noexcept : v_(v) {}
    Minquat v_;
};

// Geodesic polar coordinates about the basepoint: cos(u rho) + axis sin(u rho).
// rho >= 0 (and <= pi for the sphere); the axis may be zero only when rho is.
SpaceFormPoint lift(Algebra alg, double rho, const Quaternion& axis);

// From a 3-vector: radial lift along vec with rho = |vec| (dual: 1 + u*vec).
SpaceFormPoint lift(Algebra alg, const Quaternion& vec);

// Relative position v * bar(w); unit norm, scalar part cos(u*gamma).
ExtQuaternion relative(const SpaceFormPoint& v, const SpaceFormPoint& w);

// Intrinsic distance: hyperbolic, Euclidean, or spherical by ring.
double distance(const SpaceFormPoint& v, const SpaceFormPoint& w);

// Restriction of the sandwich action to the canonical component (complex:
// re-fixes the global sign to stay on the upper sheet).
SpaceFormPoint act(const UnitElement& q, const SpaceFormPoint& v);

// Both sides of the generalized law of cosines for the triangle (a, b, c),
// evaluated over the reals: lhs is the cosine-form of d(a,c), rhs combines
// d(a,b), d(b,c) and the relative-position axes.
struct CosineLaw {
    double lhs;
    double rhs;
};

CosineLaw law_of_cosines(const SpaceFormPoint& a, const SpaceFormPoint& b,
                         const SpaceFormPoint& c);

}  // namespace uquat
