#include "uquat/action.hpp"

#include <cmath>
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

Quaternion normalized_axis(const Quaternion& axis, const char* where) {
    const Quaternion v = vector_part(axis);
    const double n = norm(v);
    if (n == 0.0) {
        std::ostringstream msg;
        msg << where << ": axis must be a nonzero vector";
        throw std::domain_error(msg.str());
    }
    return v / n;
}

}  // namespace

Minquat::Minquat(Algebra alg_, double v0_, const Quaternion& vec_)
    : alg(alg_), v0(v0_), vec(vector_part(vec_)) {
    if (vec_.w != 0.0) throw std::invalid_argument("minquat vector part must be pure");
}

ExtQuaternion embed(const Minquat& v) {
    return {v.alg, Quaternion{v.v0, 0.0, 0.0, 0.0}, v.vec};
}

Minquat minquat_part(const ExtQuaternion& q) {
    return {q.alg, q.alpha.w, q.beta.x, q.beta.y, q.beta.z};
}

double qform(const Minquat& v) {
    return v.v0 * v.v0 + unit_square(v.alg) * norm_sq(v.vec);
}

double sup_distance(const Minquat& v, const Minquat& w) {
    double m = 0.0;
    const auto a = v.coords();
    const auto b = w.coords();
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

Mat4 Mat4::identity() noexcept {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
    return r;
}

Mat4 Mat4::metric(Algebra alg) noexcept {
    Mat4 g;
    g.m[0][0] = 1.0;
    const double s = unit_square(alg);
    g.m[1][1] = g.m[2][2] = g.m[3][3] = s;
    return g;
}

Mat4 Mat4::transposed() const noexcept {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

double Mat4::det() const noexcept {
    // Laplace expansion along the first row over 3x3 minors.
    auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * minor3(1, 2, 3, 1, 2, 3) - m[0][1] * minor3(1, 2, 3, 0, 2, 3) +
           m[0][2] * minor3(1, 2, 3, 0, 1, 3) - m[0][3] * minor3(1, 2, 3, 0, 1, 2);
}

Mat4 operator*(const Mat4& a, const Mat4& b) noexcept {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += a.m[i][k] * b.m[k][j];
            r.m[i][j] = acc;
        }
    return r;
}

std::array<double, 4> operator*(const Mat4& a, const std::array<double, 4>& v) noexcept {
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        r[i] = a.m[i][0] * v[0] + a.m[i][1] * v[1] + a.m[i][2] * v[2] + a.m[i][3] * v[3];
    return r;
}

ExtQuaternion sandwich(const ExtQuaternion& q, const ExtQuaternion& v) {
    return q * v * bar_star(q);
}

Minquat sandwich(const ExtQuaternion& q, const Minquat& v) {
    return minquat_part(sandwich(q, embed(v)));
}

Minquat apply(const UnitElement& q, const Minquat& v) {
    require_same_algebra(q.algebra(), v.alg, "apply");
    const RingScalar Q = qform(q.value());
    if (std::abs(Q.a - 1.0) > 1e-8 || std::abs(Q.b) > 1e-8)
        throw std::domain_error("apply: transform is not unit norm");
    return sandwich(q.value(), v);
}

UnitElement compose(const UnitElement& p, const UnitElement& q) {
    require_same_algebra(p.algebra(), q.algebra(), "compose");
    return UnitElement(p.value() * q.value());
}

UnitElement make_rotor(Algebra alg, const Quaternion& axis, double theta) {
    const Quaternion a = normalized_axis(axis, "make_rotor");
    const Quaternion r = Quaternion{std::cos(0.5 * theta), 0.0, 0.0, 0.0} +
                         std::sin(0.5 * theta) * a;
    return UnitElement::unchecked({alg, r});
}

UnitElement make_translator(Algebra alg, const Quaternion& axis, double phi) {
    const Quaternion a = normalized_axis(axis, "make_translator");
    double c = 1.0;
    double s = 0.0;
    switch (alg) {
    case Algebra::complex:
        c = std::cosh(0.5 * phi);
        s = std::sinh(0.5 * phi);
        break;
    case Algebra::dual:
        c = 1.0;
        s = 0.5 * phi;
        break;
    case Algebra::split:
        c = std::cos(0.5 * phi);
        s = std::sin(0.5 * phi);
        break;
    }
    return UnitElement::unchecked({alg, Quaternion{c, 0.0, 0.0, 0.0}, s * a});
}

Mat4 matrix_of(const UnitElement& q) {
    Mat4 r;
    const Algebra alg = q.algebra();
    const std::array<Minquat, 4> basis{Minquat{alg, 1.0, 0.0, 0.0, 0.0},
                                       Minquat{alg, 0.0, 1.0, 0.0, 0.0},
                                       Minquat{alg, 0.0, 0.0, 1.0, 0.0},
                                       Minquat{alg, 0.0, 0.0, 0.0, 1.0}};
    for (int j = 0; j < 4; ++j) {
        const auto col = sandwich(q.value(), basis[j]).coords();
        for (int i = 0; i < 4; ++i) r.m[i][j] = col[i];
    }
    return r;
}

AdaptedFrame adapted_frame(const UnitElement& translator) {
    const ExtQuaternion& q = translator.value();
    const double off = std::max({std::abs(q.alpha.x), std::abs(q.alpha.y),
                                 std::abs(q.alpha.z), std::abs(q.beta.w)});
    if (off > kEdgeSlack)
        throw std::domain_error("adapted_frame: element is not translator-type (bar != star)");

    const Algebra alg = q.alg;
    const double c = q.alpha.w;
    const double s = norm(q.beta);

    AdaptedFrame frame{Mat4::identity(),
                       {Minquat{alg, 1.0, 0.0, 0.0, 0.0}, Minquat{alg, 0.0, 1.0, 0.0, 0.0},
                        Minquat{alg, 0.0, 0.0, 1.0, 0.0}, Minquat{alg, 0.0, 0.0, 0.0, 1.0}}};
    if (s <= 1e-12) return frame;  // +/-1: identity action, arbitrary completion

    const Quaternion axis = q.beta / s;
    // Double-angle entries of the 2x2 block, from cos(u t)=c, sin(u t)=u s.
    const double u2 = unit_square(alg);
    const double cos2 = c * c - u2 * s * s;
    const double sin2 = 2.0 * c * s;
    frame.matrix(0, 0) = cos2;
    frame.matrix(0, 1) = -u2 * sin2;
    frame.matrix(1, 0) = sin2;
    frame.matrix(1, 1) = cos2;

    // Complete {axis} to an orthonormal triple by Gram-Schmidt over fixed
    // seeds, skipping near-parallel ones.
    std::array<Quaternion, 3> vecs{axis, Quaternion{}, Quaternion{}};
    int have = 1;
    const std::array<Quaternion, 3> seeds{Quaternion::vector(1.0, 0.0, 0.0),
                                          Quaternion::vector(0.0, 1.0, 0.0),
                                          Quaternion::vector(0.0, 0.0, 1.0)};
    for (const Quaternion& seed : seeds) {
        if (have == 3) break;
        Quaternion w = seed;
        for (int k = 0; k < have; ++k) w = w - dot(w, vecs[k]) * vecs[k];
        const double n = norm(w);
        if (n < 1e-6) continue;
        vecs[have++] = w / n;
    }

    frame.basis = {Minquat{alg, 1.0, 0.0, 0.0, 0.0}, Minquat{alg, 0.0, vecs[0]},
                   Minquat{alg, 0.0, vecs[1]}, Minquat{alg, 0.0, vecs[2]}};
    return frame;
}

}  // namespace uquat
