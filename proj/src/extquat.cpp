#include "uquat/extquat.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace uquat {

namespace {

void require_same_algebra(const ExtQuaternion& p, const ExtQuaternion& q) {
    if (p.alg != q.alg) {
        std::ostringstream msg;
        msg << "algebra mismatch: " << algebra_name(p.alg) << " vs " << algebra_name(q.alg);
        throw std::domain_error(msg.str());
    }
}

[[noreturn]] void throw_degenerate(const ExtQuaternion& q) {
    std::ostringstream msg;
    msg << "polar form requires an invertible quadratic form; ";
    switch (q.alg) {
    case Algebra::complex:
        msg << "null biquaternion (|alpha| = |beta|, <alpha,beta> = 0)";
        break;
    case Algebra::dual:
        msg << "dual quaternion with |alpha| = 0 (pure-u element)";
        break;
    case Algebra::split:
        msg << "split zero divisor (beta = +/-alpha)";
        break;
    }
    const RingScalar Q = qform(q);
    msg << ", Q = " << Q.a << " + u*" << Q.b;
    throw std::domain_error(msg.str());
}

bool qform_invertible(const RingScalar& Q) {
    switch (Q.alg) {
    case Algebra::complex: return Q.a != 0.0 || Q.b != 0.0;
    case Algebra::dual: return Q.a != 0.0;
    case Algebra::split: return std::abs(Q.a) != std::abs(Q.b);
    }
    return false;
}

}  // namespace

ExtQuaternion operator+(const ExtQuaternion& p, const ExtQuaternion& q) {
    require_same_algebra(p, q);
    return {p.alg, p.alpha + q.alpha, p.beta + q.beta};
}

ExtQuaternion operator-(const ExtQuaternion& p, const ExtQuaternion& q) {
    require_same_algebra(p, q);
    return {p.alg, p.alpha - q.alpha, p.beta - q.beta};
}

ExtQuaternion operator*(const ExtQuaternion& p, const ExtQuaternion& q) {
    require_same_algebra(p, q);
    Quaternion alpha = p.alpha * q.alpha;
    const Quaternion beta = p.alpha * q.beta + p.beta * q.alpha;
    if (const int s = unit_square(p.alg); s != 0)
        alpha = alpha + static_cast<double>(s) * (p.beta * q.beta);
    return {p.alg, alpha, beta};
}

ExtQuaternion operator*(const RingScalar& s, const ExtQuaternion& q) {
    if (s.alg != q.alg) throw std::domain_error("algebra mismatch in scalar multiple");
    const double u2 = unit_square(q.alg);
    return {q.alg, s.a * q.alpha + (u2 * s.b) * q.beta, s.a * q.beta + s.b * q.alpha};
}

RingScalar bilinear(const ExtQuaternion& p, const ExtQuaternion& q) {
    return scalar_part(p * bar(q));
}

RingScalar qform(const ExtQuaternion& q) {
    const double na = norm_sq(q.alpha);
    const double nb = norm_sq(q.beta);
    const double ab = q.alpha.w * q.beta.w + dot(q.alpha, q.beta);
    return {q.alg, na + unit_square(q.alg) * nb, 2.0 * ab};
}

RingScalar angle_cosine(const ExtQuaternion& p, const ExtQuaternion& q) {
    return bilinear(p, q) / (sqrt(qform(p)) * sqrt(qform(q)));
}

bool is_null(const ExtQuaternion& q, double tol) {
    const double na = norm(q.alpha);
    const double nb = norm(q.beta);
    const double ab = q.alpha.w * q.beta.w + dot(q.alpha, q.beta);
    switch (q.alg) {
    case Algebra::complex: return std::abs(na - nb) <= tol && std::abs(ab) <= tol;
    case Algebra::dual: return na <= tol;
    case Algebra::split: return na <= tol && nb <= tol;
    }
    return false;
}

PolarForm polar(const ExtQuaternion& q) {
    const RingScalar Q = qform(q);
    if (!qform_invertible(Q)) throw_degenerate(q);

    const RingScalar radius = sqrt(Q);
    const RingScalar cos_angle = scalar_part(q) / radius;

    const ExtQuaternion vec = vector_part(q);
    if (sup_norm(vec) <= kTol * std::max(1.0, sup_norm(q))) {
        // Scalar element: angle vanishes, axis is conventional.
        return {radius, cos_angle, RingScalar{q.alg, 0.0},
                ExtQuaternion{q.alg, Quaternion::vector(1.0, 0.0, 0.0)}};
    }

    const RingScalar vec_radius = sqrt(qform(vec));  // throws outside the sqrt domain
    return {radius, cos_angle, vec_radius / radius, inverse(vec_radius) * vec};
}

UnitElement::UnitElement(const ExtQuaternion& q) : q_(q) {
    const RingScalar Q = qform(q);
    if (std::abs(Q.a - 1.0) > kUnitTol || std::abs(Q.b) > kUnitTol) {
        std::ostringstream msg;
        msg << "not a unit-norm element: Q = " << Q.a << " + u*" << Q.b;
        throw std::domain_error(msg.str());
    }
}

Decomposition decompose(const UnitElement& u) {
    const ExtQuaternion& q = u.value();
    const Algebra alg = q.alg;
    const double na = norm(q.alpha);
    const double nb = norm(q.beta);

    if (nb <= 1e-12) {
        return {UnitElement::unchecked({alg, q.alpha}),
                UnitElement::unchecked(ExtQuaternion::one(alg)), 0.0};
    }

    const Quaternion beta_hat = q.beta / nb;
    Quaternion rotor;
    Quaternion axis;  // unit pure vector; translator = |alpha| + u*|beta|*axis
    if (na == 0.0) {
        // Only reachable in the split ring (cos theta = 0). The rotor is free
        // up to right multiplication; pick the one sending the axis to i1.
        rotor = -(beta_hat * Quaternion::vector(1.0, 0.0, 0.0));
        axis = Quaternion::vector(1.0, 0.0, 0.0);
    } else {
        rotor = q.alpha / na;
        axis = conj(rotor) * beta_hat;
        axis.w = 0.0;  // exactly pure: <alpha,beta> = 0 up to rounding
    }

    double theta = 0.0;
    switch (alg) {
    case Algebra::complex: theta = std::asinh(nb); break;
    case Algebra::dual: theta = nb; break;
    case Algebra::split: theta = std::atan2(nb, na); break;
    }

    const ExtQuaternion translator{alg, Quaternion{na, 0.0, 0.0, 0.0}, nb * axis};
    return {UnitElement::unchecked({alg, rotor}), UnitElement::unchecked(translator), theta};
}

}  // namespace uquat
