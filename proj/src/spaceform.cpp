#include "uquat/spaceform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace uquat {

namespace {

void require_same_algebra(Algebra a, Algebra b, const char* where) {
    if (a != b) {
        std::ostringstream msg;
        msg << where << ": algebra mismatch: " << algebra_name(a) << " vs " << algebra_name(b);
        throw std::domain_error(msg.str());
    }
}

}  // namespace

SpaceFormPoint::SpaceFormPoint(const Minquat& v) : v_(v) {
    const double Q = qform(v);
    std::ostringstream msg;
    if (std::abs(Q - 1.0) > kUnitTol) {
        msg << "point is off the unit level set: Q = " << Q;
        throw std::domain_error(msg.str());
    }
    if (v.alg != Algebra::split && v.v0 <= 0.0) {
        msg << "point is on the non-canonical component: v0 = " << v.v0;
        throw std::domain_error(msg.str());
    }
}

SpaceFormPoint lift(Algebra alg, double rho, const Quaternion& axis) {
    const Quaternion v = vector_part(axis);
    const double n = norm(v);
    if (rho == 0.0) return SpaceFormPoint::unchecked(Minquat::basepoint(alg));
    if (n == 0.0) throw std::domain_error("lift: zero axis with nonzero radius");
    const Quaternion a = v / n;
    switch (alg) {
    case Algebra::complex:
        return SpaceFormPoint::unchecked({alg, std::cosh(rho), std::sinh(rho) * a});
    case Algebra::dual:
        return SpaceFormPoint::unchecked({alg, 1.0, rho * a});
    case Algebra::split:
        if (rho < -kEdgeSlack || rho > std::numbers::pi + kEdgeSlack)
            throw std::domain_error("lift: spherical radius outside [0, pi]");
        return SpaceFormPoint::unchecked({alg, std::cos(rho), std::sin(rho) * a});
    }
    throw std::logic_error("lift: unreachable");
}

SpaceFormPoint lift(Algebra alg, const Quaternion& vec) {
    return lift(alg, norm(vector_part(vec)), vec);
}

ExtQuaternion relative(const SpaceFormPoint& v, const SpaceFormPoint& w) {
    require_same_algebra(v.algebra(), w.algebra(), "relative");
    return embed(v.position()) * bar(embed(w.position()));
}

double distance(const SpaceFormPoint& v, const SpaceFormPoint& w) {
    const ExtQuaternion rel = relative(v, w);
    return angle_from_cosine(scalar_part(rel), norm(vector_part(rel.beta)));
}

SpaceFormPoint act(const UnitElement& q, const SpaceFormPoint& v) {
    Minquat w = apply(q, v.position());
    if (w.alg == Algebra::complex && w.v0 < 0.0) w = -w;
    return SpaceFormPoint(w);
}

CosineLaw law_of_cosines(const SpaceFormPoint& a, const SpaceFormPoint& b,
                         const SpaceFormPoint& c) {
    const ExtQuaternion rel_ab = relative(a, b);
    const ExtQuaternion rel_bc = relative(b, c);

    // cos(u g3) = cos(u g1) cos(u g2) - <r1, r2> sin(u g1) sin(u g2), with the
    // sine-weighted axes read off as the full vector parts of the relative
    // positions and the dot taken in the ring-bilinear sense. All quantities
    // are real-valued on M.
    const double c1 = scalar_part(rel_ab).a;
    const double c2 = scalar_part(rel_bc).a;
    const double s = unit_square(a.algebra());
    const double vdot = dot(rel_ab.alpha, rel_bc.alpha) + s * dot(rel_ab.beta, rel_bc.beta);

    const double lhs = scalar_part(relative(a, c)).a;
    return {lhs, c1 * c2 - vdot};
}

}  // namespace uquat
