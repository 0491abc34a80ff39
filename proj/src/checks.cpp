#include "uquat/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "uquat/json_io.hpp"

namespace uquat::checks {

namespace {

double sup3(double a, double b, double c) { return std::max({a, b, c}); }

// Error metrics: |x - y| relative to max(1, |x|, |y|), taken over components.
double err(double x, double y) { return std::abs(x - y) / sup3(1.0, std::abs(x), std::abs(y)); }

double err(const RingScalar& x, const RingScalar& y) {
    const double scale = sup3(1.0, std::max(std::abs(x.a), std::abs(x.b)),
                              std::max(std::abs(y.a), std::abs(y.b)));
    return std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)) / scale;
}

double sup_norm(const Quaternion& q) {
    return std::max({std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
}

double err(const Quaternion& x, const Quaternion& y) {
    return sup_norm(x - y) / sup3(1.0, sup_norm(x), sup_norm(y));
}

double err(const ExtQuaternion& x, const ExtQuaternion& y) {
    return sup_norm(x - y) / sup3(1.0, sup_norm(x), sup_norm(y));
}

double err(const Minquat& x, const Minquat& y) {
    return sup_distance(x, y) / sup3(1.0, sup_distance(x, {x.alg, 0.0, 0.0, 0.0, 0.0}),
                                     sup_distance(y, {y.alg, 0.0, 0.0, 0.0, 0.0}));
}

ExtQuaternion embed_ring(const RingScalar& s) {
    return {s.alg, Quaternion{s.a, 0.0, 0.0, 0.0}, Quaternion{s.b, 0.0, 0.0, 0.0}};
}

// ---- independent closed-form oracles (component arithmetic only) ----

double closed_form_distance(const Minquat& v, const Minquat& w) {
    switch (v.alg) {
    case Algebra::complex:
        return std::acosh(std::max(1.0, v.v0 * w.v0 - dot(v.vec, w.vec)));
    case Algebra::dual:
        return norm(v.vec - w.vec);
    case Algebra::split: {
        const double c = v.v0 * w.v0 + dot(v.vec, w.vec);
        return std::acos(std::clamp(c, -1.0, 1.0));
    }
    }
    return 0.0;
}

// ---- suites ----

using SuiteFn = std::function<double(Rng&, std::size_t, Algebra)>;

struct SuiteSpec {
    const char* name;
    double tolerance;
    SuiteFn fn;
    bool per_algebra = true;
    Algebra only = Algebra::complex;
    bool restricted = false;  // run only for `only`
};

double suite_ring_product_laws(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const RingScalar x = rng.ring(alg, 2.0);
        const RingScalar y = rng.ring(alg, 2.0);
        const RingScalar z = rng.ring(alg, 2.0);
        worst = std::max(worst, err(x * y, y * x));
        worst = std::max(worst, err((x * y) * z, x * (y * z)));
        worst = std::max(worst, err(conj(x * y), conj(x) * conj(y)));
        worst = std::max(worst, err(conj(conj(x)), x));
    }
    return worst;
}

double suite_ring_trig_identity(Rng& rng, std::size_t n, Algebra alg) {
    const RingScalar one{alg, 1.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const RingScalar z = rng.ring(alg, 3.0);
        const RingScalar s = sin(z);
        const RingScalar c = cos(z);
        worst = std::max(worst, err(s * s + c * c, one));
    }
    return worst;
}

double suite_ring_cos_addition(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const RingScalar z = rng.ring(alg, 2.0);
        const RingScalar w = rng.ring(alg, 2.0);
        worst = std::max(worst, err(cos(z + w), cos(z) * cos(w) - sin(z) * sin(w)));
        worst = std::max(worst, err(sin(z + w), sin(z) * cos(w) + cos(z) * sin(w)));
    }
    return worst;
}

double suite_ring_sqrt_square(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        RingScalar x{alg, 0.0};
        switch (alg) {
        case Algebra::complex: x = rng.ring(alg, 2.0); break;
        case Algebra::dual: x = {alg, rng.uniform(0.05, 4.0), rng.uniform(-4.0, 4.0)}; break;
        case Algebra::split: {
            const double b = rng.uniform(-2.0, 2.0);
            x = {alg, std::abs(b) + rng.uniform(0.05, 3.0), b};
            break;
        }
        }
        const RingScalar s = sqrt(x);
        worst = std::max(worst, err(s * s, x));
    }
    return worst;
}

double suite_quat_associativity(Rng& rng, std::size_t n, Algebra) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Quaternion p = rng.box(2.0);
        const Quaternion q = rng.box(2.0);
        const Quaternion r = rng.box(2.0);
        worst = std::max(worst, err((p * q) * r, p * (q * r)));
    }
    return worst;
}

double suite_quat_norm_multiplicative(Rng& rng, std::size_t n, Algebra) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Quaternion p = rng.box(2.0);
        const Quaternion q = rng.box(2.0);
        worst = std::max(worst, err(norm(p * q), norm(p) * norm(q)));
        worst = std::max(worst, err(conj(p * q), conj(q) * conj(p)));
    }
    return worst;
}

double suite_quat_pure_product(Rng& rng, std::size_t n, Algebra) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Quaternion p = vector_part(rng.box(2.0));
        const Quaternion q = vector_part(rng.box(2.0));
        const Quaternion expect = Quaternion{-dot(p, q), 0.0, 0.0, 0.0} + cross(p, q);
        worst = std::max(worst, err(p * q, expect));
    }
    return worst;
}

double suite_involution_star(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ExtQuaternion p = rng.ext(alg, 2.0);
        const ExtQuaternion q = rng.ext(alg, 2.0);
        worst = std::max(worst, err(star(p + q), star(p) + star(q)));
        worst = std::max(worst, err(star(p - q), star(p) - star(q)));
        worst = std::max(worst, err(star(p * q), star(p) * star(q)));
        worst = std::max(worst, err(star(star(q)), q));
        worst = std::max(worst, err(star(star(q) * q), q * star(q)));
        // alpha = (q + q*)/2 and u*beta = (q - q*)/2
        worst = std::max(worst, err(0.5 * (q + star(q)), ExtQuaternion{alg, q.alpha}));
        worst = std::max(
            worst, err(0.5 * (q - star(q)), ExtQuaternion{alg, Quaternion{}, q.beta}));
    }
    return worst;
}

double suite_involution_bar(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ExtQuaternion p = rng.ext(alg, 2.0);
        const ExtQuaternion q = rng.ext(alg, 2.0);
        worst = std::max(worst, err(bar(p + q), bar(p) + bar(q)));
        worst = std::max(worst, err(bar(p - q), bar(p) - bar(q)));
        worst = std::max(worst, err(bar(p * q), bar(q) * bar(p)));
        worst = std::max(worst, err(bar(bar(q)), q));
        worst = std::max(worst, err(q * bar(q), bar(q) * q));
        worst = std::max(worst, err(0.5 * (q + bar(q)), embed_ring(scalar_part(q))));
        worst = std::max(worst, err(0.5 * (q - bar(q)), vector_part(q)));
        worst = std::max(worst, err(scalar_part(bar(q)), scalar_part(q)));
    }
    return worst;
}

double suite_involution_bar_star(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ExtQuaternion p = rng.ext(alg, 2.0);
        const ExtQuaternion q = rng.ext(alg, 2.0);
        worst = std::max(worst, err(bar_star(p + q), bar_star(p) + bar_star(q)));
        worst = std::max(worst, err(bar_star(p * q), bar_star(q) * bar_star(p)));
        worst = std::max(worst, err(bar_star(bar_star(q)), q));
        worst = std::max(worst, err(bar_star(q), bar(star(q))));
        worst = std::max(worst, err(bar_star(q), star(bar(q))));
    }
    return worst;
}

double suite_bilinear_form(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ExtQuaternion p = rng.ext(alg, 2.0);
        const ExtQuaternion q = rng.ext(alg, 2.0);
        const ExtQuaternion r = rng.ext(alg, 2.0);
        const RingScalar lambda = rng.ring(alg, 2.0);
        worst = std::max(worst, err(bilinear(p, q), bilinear(q, p)));
        worst = std::max(worst, err(bilinear(p, q + r), bilinear(p, q) + bilinear(p, r)));
        worst = std::max(worst, err(bilinear(lambda * p, q), lambda * bilinear(p, q)));
        worst = std::max(worst, err(bilinear(p, lambda * q), lambda * bilinear(p, q)));
        worst = std::max(worst, err(bilinear(q, q), qform(q)));
    }
    return worst;
}

double suite_qform_multiplicative(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ExtQuaternion p = rng.ext(alg, 2.0);
        const ExtQuaternion q = rng.ext(alg, 2.0);
        worst = std::max(worst, err(qform(p * q), qform(p) * qform(q)));
        worst = std::max(worst, err(qform(bar(q)), qform(q)));
    }
    return worst;
}

double suite_conjugation_form(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ExtQuaternion q = rng.ext(alg, 2.0);
        const ExtQuaternion expect = embed_ring(qform(q));
        worst = std::max(worst, err(q * bar(q), expect));
        worst = std::max(worst, err(bar(q) * q, expect));
    }
    return worst;
}

double suite_bar_star_products(Rng& rng, std::size_t n, Algebra alg) {
    const double s = unit_square(alg);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ExtQuaternion q = rng.ext(alg, 2.0);
        const double real = norm_sq(q.alpha) - s * norm_sq(q.beta);
        const ExtQuaternion left{alg, Quaternion{real, 0.0, 0.0, 0.0},
                                 2.0 * vector_part(conj(q.alpha) * q.beta)};
        const ExtQuaternion right{alg, Quaternion{real, 0.0, 0.0, 0.0},
                                  -2.0 * vector_part(q.alpha * conj(q.beta))};
        worst = std::max(worst, err(bar_star(q) * q, left));
        worst = std::max(worst, err(q * bar_star(q), right));
    }
    return worst;
}

double suite_polar_reconstruction(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ExtQuaternion q = rng.ext(alg, 2.0);
        if (alg == Algebra::dual) {
            while (norm(q.alpha) < 0.1) q = rng.ext(alg, 2.0);
        }
        const PolarForm p = polar(q);
        const ExtQuaternion rebuilt =
            p.radius * (embed_ring(p.cos_angle) + p.sin_angle * p.axis);
        worst = std::max(worst, err(rebuilt, q));
        worst = std::max(worst, err(qform(p.axis), RingScalar{alg, 1.0}));
        worst = std::max(worst, err(p.axis * p.axis, -ExtQuaternion::one(alg)));
    }
    return worst;
}

double suite_decompose_roundtrip(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const Decomposition d = decompose(q);
        worst = std::max(worst, sup_norm(d.rotor.value() * d.translator.value() - q.value()));
        worst = std::max(worst, sup_norm(star(d.rotor.value()) - d.rotor.value()));
        worst = std::max(worst,
                         sup_norm(bar(d.translator.value()) - star(d.translator.value())));
        worst = std::max(worst, err(qform(d.rotor.value()), RingScalar{alg, 1.0}));
        worst = std::max(worst, err(qform(d.translator.value()), RingScalar{alg, 1.0}));

        // Degenerate branch: no u part means an identity translator.
        const Decomposition dr = decompose(rng.rotor(alg));
        worst = std::max(worst,
                         sup_norm(dr.translator.value() - ExtQuaternion::one(alg)));
        worst = std::max(worst, std::abs(dr.theta));
    }
    return worst;
}

double suite_degeneracy_classifier(Rng& rng, std::size_t n, Algebra alg) {
    double mismatches = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ExtQuaternion q = rng.ext(alg, 2.0);
        if (i % 2 == 0) {
            // Construct a structurally degenerate element.
            switch (alg) {
            case Algebra::complex: {
                const Quaternion a = rng.box(2.0);
                q = {alg, a, a * rng.unit_vector()};
                break;
            }
            case Algebra::dual:
                q = {alg, Quaternion{}, rng.box(2.0)};
                break;
            case Algebra::split:
                q = {alg, Quaternion{}, Quaternion{}};
                break;
            }
        }
        const RingScalar Q = qform(q);
        const bool vanishes = std::abs(Q.a) <= 1e-8 && std::abs(Q.b) <= 1e-8;
        if (vanishes != is_null(q, 1e-8)) mismatches += 1.0;
    }
    return mismatches;
}

double suite_action_closure(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const Minquat v = rng.minquat(alg, 2.0);
        const ExtQuaternion image = sandwich(q.value(), embed(v));
        worst = std::max(worst, err(star(image), bar(image)));
    }
    return worst;
}

double suite_action_morphism(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement p = rng.unit(alg);
        const UnitElement q = rng.unit(alg);
        const Minquat v = rng.minquat(alg, 2.0);
        worst = std::max(worst, err(apply(compose(p, q), v), apply(p, apply(q, v))));
    }
    return worst;
}

double suite_bilinear_preserved(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const Minquat v = rng.minquat(alg, 2.0);
        const Minquat w = rng.minquat(alg, 2.0);
        const RingScalar before = bilinear(embed(v), embed(w));
        const RingScalar after = bilinear(embed(apply(q, v)), embed(apply(q, w)));
        worst = std::max(worst, err(after, before));
    }
    return worst;
}

double suite_qform_preserved(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const Minquat v = rng.minquat(alg, 2.0);
        worst = std::max(worst, err(qform(apply(q, v)), qform(v)));
    }
    return worst;
}

double suite_matrix_consistency(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const Mat4 m = matrix_of(q);
        for (int k = 0; k < 3; ++k) {
            const Minquat v = rng.minquat(alg, 2.0);
            const auto via_matrix = m * v.coords();
            const auto direct = apply(q, v).coords();
            for (int c = 0; c < 4; ++c)
                worst = std::max(worst, err(via_matrix[c], direct[c]));
        }
    }
    return worst;
}

double suite_sign_kernel(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const Minquat v = rng.minquat(alg, 2.0);
        worst = std::max(worst, sup_distance(apply(q, v), apply(-q, v)));
    }
    return worst;
}

double suite_adapted_frame(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement t = rng.translator(alg);
        const AdaptedFrame frame = adapted_frame(t);
        // Basis orthonormality (vector triple).
        for (int a = 1; a < 4; ++a)
            for (int b = 1; b < 4; ++b) {
                const double expect = a == b ? 1.0 : 0.0;
                worst = std::max(
                    worst,
                    std::abs(dot(frame.basis[a].vec, frame.basis[b].vec) - expect));
            }
        // Matrix entries against the action on the basis.
        for (int j = 0; j < 4; ++j) {
            const Minquat image = apply(t, frame.basis[j]);
            Minquat combo{alg, 0.0, 0.0, 0.0, 0.0};
            for (int k = 0; k < 4; ++k) {
                combo.v0 += frame.matrix(k, j) * frame.basis[k].v0;
                combo.vec = combo.vec + frame.matrix(k, j) * frame.basis[k].vec;
            }
            worst = std::max(worst, err(image, combo));
        }
    }
    return worst;
}

double suite_so4_matrices(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const Mat4 m = matrix_of(q);
        const Mat4 gram = m.transposed() * m;
        const Mat4 id = Mat4::identity();
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                worst = std::max(worst, std::abs(gram(r, c) - id(r, c)));
        worst = std::max(worst, std::abs(m.det() - 1.0));
        if (io::to_json(m) != io::to_json(matrix_of(-q))) worst = std::max(worst, 1.0);
    }
    return worst;
}

double suite_lorentz_matrices(Rng& rng, std::size_t n, Algebra alg) {
    const Mat4 g = Mat4::metric(alg);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const Mat4 m = matrix_of(q);
        const Mat4 gram = m.transposed() * g * m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                worst = std::max(worst, std::abs(gram(r, c) - g(r, c)));
        if (!(m(0, 0) > 0.0)) worst = std::max(worst, 1.0);  // orthochronous
    }
    return worst;
}

double suite_metric_symmetry(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const SpaceFormPoint v = rng.point(alg);
        const SpaceFormPoint w = rng.point(alg);
        worst = std::max(worst, std::abs(distance(v, w) - distance(w, v)));
    }
    return worst;
}

double suite_metric_identity(Rng& rng, std::size_t n, Algebra alg) {
    // The arccosh/arccos route resolves nothing below ~sqrt(eps), so "equal
    // within 1e-8" must map to a distance at that conditioning, not at eps.
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = rng.uniform(0.0, 2.5);
        const Quaternion axis = rng.unit_vector();
        const SpaceFormPoint v = lift(alg, rho, axis);
        const SpaceFormPoint near = lift(alg, rho + 1e-9, axis);
        const SpaceFormPoint w = rng.point(alg);
        const double self = distance(v, v);
        if (self < 0.0) worst = std::max(worst, 1.0);
        worst = std::max(worst, self);
        worst = std::max(worst, distance(v, near));
        if (sup_distance(v.position(), w.position()) > 1e-6 && distance(v, w) <= 1e-9)
            worst = std::max(worst, 1.0);
    }
    return worst;
}

double suite_metric_triangle(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const SpaceFormPoint a = rng.point(alg);
        const SpaceFormPoint b = rng.point(alg);
        const SpaceFormPoint c = rng.point(alg);
        const double slack = distance(a, b) + distance(b, c) - distance(a, c);
        worst = std::max(worst, std::max(0.0, -slack));
    }
    return worst;
}

double suite_isometry(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const SpaceFormPoint v = rng.point(alg);
        const SpaceFormPoint w = rng.point(alg);
        worst = std::max(worst,
                         std::abs(distance(act(q, v), act(q, w)) - distance(v, w)));
    }
    return worst;
}

double suite_axis_conjugation(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const SpaceFormPoint v = rng.point(alg);
        const SpaceFormPoint w = rng.point(alg);
        const ExtQuaternion before = relative(v, w);
        const ExtQuaternion after = relative(act(q, v), act(q, w));
        ExtQuaternion expect = q.value() * before * bar(q.value());
        if (alg == Algebra::complex) {
            // act() may flip the sheet sign of each image; the relative
            // position is invariant under the double flip, so adjust for an
            // odd number of flips.
            const Minquat rv = apply(q, v.position());
            const Minquat rw = apply(q, w.position());
            if ((rv.v0 < 0.0) != (rw.v0 < 0.0)) expect = -expect;
        }
        worst = std::max(worst, err(after, expect));
    }
    return worst;
}

double suite_distance_closed_form(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const SpaceFormPoint v = rng.point(alg);
        const SpaceFormPoint w = rng.point(alg);
        worst = std::max(worst, std::abs(distance(v, w) -
                                         closed_form_distance(v.position(), w.position())));
    }
    return worst;
}

double suite_dual_plane_stability(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const UnitElement q = rng.unit(alg);
        const SpaceFormPoint v = rng.point(alg);
        worst = std::max(worst, std::abs(apply(q, v.position()).v0 - 1.0));
    }
    return worst;
}

double suite_law_of_cosines(Rng& rng, std::size_t n, Algebra alg) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const SpaceFormPoint a = rng.point(alg);
        const SpaceFormPoint b = rng.point(alg);
        const SpaceFormPoint c = rng.point(alg);
        const CosineLaw law = law_of_cosines(a, b, c);
        worst = std::max(worst, err(law.lhs, law.rhs));
    }
    return worst;
}

const std::vector<SuiteSpec>& suite_table() {
    static const std::vector<SuiteSpec> table = [] {
        std::vector<SuiteSpec> t;
        auto add = [&t](const char* name, double tol, SuiteFn fn) {
            t.push_back({name, tol, std::move(fn)});
        };
        auto add_only = [&t](const char* name, double tol, SuiteFn fn, Algebra only) {
            t.push_back({name, tol, std::move(fn), true, only, true});
        };

        add("ring-product-laws", 1e-12, suite_ring_product_laws);
        add("ring-trig-identity", 1e-12, suite_ring_trig_identity);
        add("ring-cos-addition", 1e-12, suite_ring_cos_addition);
        add("ring-sqrt-square", 1e-10, suite_ring_sqrt_square);

        t.push_back({"quat-associativity", 1e-12, suite_quat_associativity, false});
        t.push_back({"quat-norm-multiplicative", 1e-12, suite_quat_norm_multiplicative, false});
        t.push_back({"quat-pure-product", 1e-12, suite_quat_pure_product, false});

        add("involution-star", 1e-12, suite_involution_star);
        add("involution-bar", 1e-12, suite_involution_bar);
        add("involution-bar-star", 1e-12, suite_involution_bar_star);
        add("bilinear-form", 1e-12, suite_bilinear_form);
        add("qform-multiplicative", 1e-11, suite_qform_multiplicative);
        add("conjugation-form", 1e-12, suite_conjugation_form);
        add("bar-star-products", 1e-12, suite_bar_star_products);
        add("polar-reconstruction", 1e-10, suite_polar_reconstruction);
        add("decompose-roundtrip", 1e-10, suite_decompose_roundtrip);
        add("degeneracy-classifier", 0.0, suite_degeneracy_classifier);

        add("action-closure", 1e-10, suite_action_closure);
        add("action-morphism", 1e-10, suite_action_morphism);
        add("bilinear-preserved", 1e-10, suite_bilinear_preserved);
        add("qform-preserved", 1e-10, suite_qform_preserved);
        add("matrix-consistency", 1e-12, suite_matrix_consistency);
        add("sign-kernel", 0.0, suite_sign_kernel);
        add("adapted-frame", 1e-10, suite_adapted_frame);
        add_only("so4-matrices", 1e-10, suite_so4_matrices, Algebra::split);
        add_only("lorentz-matrices", 1e-10, suite_lorentz_matrices, Algebra::complex);

        add("metric-symmetry", 1e-12, suite_metric_symmetry);
        add("metric-identity", 1e-6, suite_metric_identity);
        add("metric-triangle", 1e-9, suite_metric_triangle);
        add("isometry", 1e-9, suite_isometry);
        add("axis-conjugation", 1e-10, suite_axis_conjugation);
        add("distance-closed-form", 1e-10, suite_distance_closed_form);
        add_only("dual-plane-stability", 1e-10, suite_dual_plane_stability, Algebra::dual);
        add("law-of-cosines", 1e-10, suite_law_of_cosines);
        return t;
    }();
    return table;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 step so each suite sees an independent stream.
    std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

double Rng::unit_interval() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * unit_interval(); }

Quaternion Rng::box(double scale) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
            uniform(-scale, scale)};
}

Quaternion Rng::unit_vector() {
    for (;;) {
        const Quaternion v = vector_part(box(1.0));
        const double n = norm(v);
        if (n > 0.1 && n <= 1.0) return v / n;
    }
}

Quaternion Rng::unit_quaternion() {
    for (;;) {
        const Quaternion q = box(1.0);
        const double n = norm(q);
        if (n > 0.1 && n <= 1.0) return q / n;
    }
}

RingScalar Rng::ring(Algebra alg, double scale) {
    return {alg, uniform(-scale, scale), uniform(-scale, scale)};
}

ExtQuaternion Rng::ext(Algebra alg, double scale) { return {alg, box(scale), box(scale)}; }

UnitElement Rng::rotor(Algebra alg) {
    return make_rotor(alg, unit_vector(), uniform(-3.141592653589793, 3.141592653589793));
}

UnitElement Rng::translator(Algebra alg) {
    const double phi = alg == Algebra::split ? uniform(-3.141592653589793, 3.141592653589793)
                                             : uniform(-2.0, 2.0);
    return make_translator(alg, unit_vector(), phi);
}

UnitElement Rng::unit(Algebra alg) { return compose(rotor(alg), translator(alg)); }

Minquat Rng::minquat(Algebra alg, double scale) {
    return {alg, uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
            uniform(-scale, scale)};
}

SpaceFormPoint Rng::point(Algebra alg) {
    switch (alg) {
    case Algebra::complex: return lift(alg, uniform(0.0, 2.5), unit_vector());
    case Algebra::dual: return lift(alg, uniform(0.0, 3.0), unit_vector());
    case Algebra::split: return lift(alg, uniform(0.0, 3.141592653589793), unit_vector());
    }
    return SpaceFormPoint::basepoint(alg);
}

bool Report::all_pass() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.pass; });
}

Report run_all(const Options& opt) {
    using Clock = std::chrono::steady_clock;
    Report report;
    std::uint64_t salt = 1;
    auto run_one = [&](const SuiteSpec& spec, std::uint64_t suite_salt, Algebra alg,
                       std::string name) {
        Rng rng(mix_seed(opt.seed, suite_salt));
        const auto t0 = Clock::now();
        const double worst = spec.fn(rng, opt.samples, alg);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const double tol = spec.tolerance * opt.tolerance_scale;
        report.suites.push_back({std::move(name), opt.samples, worst, tol, secs, worst <= tol});
    };
    for (const SuiteSpec& spec : suite_table()) {
        if (!spec.per_algebra) {
            run_one(spec, salt++, Algebra::complex, spec.name);
            continue;
        }
        for (Algebra alg : opt.algebras) {
            ++salt;
            if (spec.restricted && alg != spec.only) continue;
            run_one(spec, salt,
                    alg, std::string(spec.name) + "[" + std::string(algebra_name(alg)) + "]");
        }
    }
    return report;
}

}  // namespace uquat::checks
