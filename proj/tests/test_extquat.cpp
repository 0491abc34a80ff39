#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "uquat/action.hpp"
#include "uquat/checks.hpp"
#include "uquat/extquat.hpp"

#include "helpers.hpp"

using namespace uquat;
using test::sup_diff;

namespace {
const Quaternion i1 = Quaternion::vector(1.0, 0.0, 0.0);
const Quaternion i2 = Quaternion::vector(0.0, 1.0, 0.0);
const Quaternion i3 = Quaternion::vector(0.0, 0.0, 1.0);

ExtQuaternion real_part_only(Algebra alg, const Quaternion& q) { return {alg, q}; }
}  // namespace

TEST_CASE("the extension embeds the real quaternions") {
    for (Algebra alg : all_algebras) {
        const ExtQuaternion p = real_part_only(alg, i1);
        const ExtQuaternion q = real_part_only(alg, i2);
        CHECK(sup_diff(p * q, real_part_only(alg, i3)) == 0.0);
    }
}

TEST_CASE("the central unit squares to its tag") {
    for (Algebra alg : all_algebras) {
        const ExtQuaternion u{alg, Quaternion{}, Quaternion::identity()};
        const double s = unit_square(alg);
        CHECK(sup_diff(u * u, ExtQuaternion{alg, Quaternion{s, 0.0, 0.0, 0.0}}) == 0.0);
    }
}

TEST_CASE("conjugate-pair product (1 + u i1)(1 - u i1) = 1 + u^2") {
    for (Algebra alg : all_algebras) {
        const ExtQuaternion p{alg, Quaternion::identity(), i1};
        const ExtQuaternion q{alg, Quaternion::identity(), -i1};
        const double expect = 1.0 + unit_square(alg);
        CHECK(sup_diff(p * q, ExtQuaternion{alg, Quaternion{expect, 0.0, 0.0, 0.0}}) == 0.0);
    }
}

TEST_CASE("product rejects mismatched algebras") {
    const ExtQuaternion p = ExtQuaternion::one(Algebra::complex);
    const ExtQuaternion q = ExtQuaternion::one(Algebra::split);
    CHECK_THROWS_AS(p * q, std::domain_error);
}

TEST_CASE("involution definitions and reversal laws") {
    for (Algebra alg : all_algebras) {
        const ExtQuaternion q{alg, Quaternion::identity(), i1};
        CHECK(sup_diff(star(q), ExtQuaternion{alg, Quaternion::identity(), -i1}) == 0.0);
    }

    checks::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        for (Algebra alg : all_algebras) {
            const ExtQuaternion p = rng.ext(alg, 2.0);
            const ExtQuaternion q = rng.ext(alg, 2.0);
            CHECK(sup_diff(bar(bar(q)), q) == 0.0);
            CHECK(sup_diff(star(star(q)), q) == 0.0);
            CHECK(sup_diff(bar_star(bar_star(q)), q) == 0.0);
            CHECK(sup_diff(star(p * q), star(p) * star(q)) <= 1e-12);
            CHECK(sup_diff(bar(p * q), bar(q) * bar(p)) <= 1e-12);
            CHECK(sup_diff(bar_star(p * q), bar_star(q) * bar_star(p)) <= 1e-12);
        }
    }
}

TEST_CASE("bilinear form and the quadratic form") {
    for (Algebra alg : all_algebras) {
        const ExtQuaternion one = ExtQuaternion::one(alg);
        CHECK(sup_diff(bilinear(one, one), RingScalar{alg, 1.0}) == 0.0);
        CHECK(sup_diff(qform(one), RingScalar{alg, 1.0}) == 0.0);
    }

    // Null biquaternion: |alpha| = |beta|, <alpha, beta> = 0.
    const ExtQuaternion null_c{Algebra::complex, i1, i2};
    CHECK(sup_diff(bilinear(null_c, null_c), RingScalar{Algebra::complex, 0.0}) == 0.0);

    const ExtQuaternion pure_dual{Algebra::dual, Quaternion{}, i1};
    CHECK(sup_diff(qform(pure_dual), RingScalar{Algebra::dual, 0.0}) == 0.0);

    const double t = 0.37;
    const ExtQuaternion rot{Algebra::split, Quaternion{std::cos(t), 0.0, 0.0, 0.0},
                            std::sin(t) * i1};
    CHECK(sup_diff(qform(rot), RingScalar{Algebra::split, 1.0}) <= 1e-15);

    SUBCASE("symmetry and agreement with the product definition") {
        checks::Rng rng(32);
        for (int i = 0; i < 100; ++i) {
            for (Algebra alg : all_algebras) {
                const ExtQuaternion p = rng.ext(alg, 2.0);
                const ExtQuaternion q = rng.ext(alg, 2.0);
                CHECK(sup_diff(bilinear(p, q), bilinear(q, p)) <= 1e-12);
                CHECK(sup_diff(bilinear(q, q), qform(q)) <= 1e-11);
            }
        }
    }
}

TEST_CASE("angle cosine normalizes to one on the diagonal") {
    checks::Rng rng(33);
    for (int i = 0; i < 50; ++i) {
        for (Algebra alg : all_algebras) {
            ExtQuaternion q = rng.ext(alg, 2.0);
            if (alg == Algebra::dual) q.alpha = q.alpha + Quaternion{3.0, 0.0, 0.0, 0.0};
            if (alg == Algebra::split) q.beta = 0.1 * q.beta;
            CHECK(sup_diff(angle_cosine(q, q), RingScalar{alg, 1.0}) <= 1e-11);
        }
    }
}

TEST_CASE("polar form of a real scalar") {
    for (Algebra alg : all_algebras) {
        const PolarForm p = polar(ExtQuaternion{alg, Quaternion{2.0, 0.0, 0.0, 0.0}});
        CHECK(sup_diff(p.radius, RingScalar{alg, 2.0}) <= 1e-15);
        CHECK(sup_diff(p.cos_angle, RingScalar{alg, 1.0}) <= 1e-15);
        CHECK(sup_diff(p.sin_angle, RingScalar{alg, 0.0}) == 0.0);
    }
}

TEST_CASE("polar form of unit translator-type elements") {
    const ExtQuaternion qc{Algebra::complex, Quaternion{std::cosh(1.0), 0.0, 0.0, 0.0},
                           std::sinh(1.0) * i1};
    const PolarForm pc = polar(qc);
    CHECK(sup_diff(pc.radius, RingScalar{Algebra::complex, 1.0}) <= 1e-14);
    CHECK(sup_diff(pc.cos_angle, RingScalar{Algebra::complex, std::cosh(1.0), 0.0}) <= 1e-14);
    CHECK(sup_diff(pc.sin_angle, RingScalar{Algebra::complex, 0.0, std::sinh(1.0)}) <= 1e-14);
    CHECK(sup_diff(pc.axis, ExtQuaternion{Algebra::complex, i1}) <= 1e-14);

    // In the split ring Q(u*vec) is positive, so the canonical angle comes out
    // real and the axis absorbs the unit: q = cos(0.7) + (j i2) sin(0.7).
    const ExtQuaternion qs{Algebra::split, Quaternion{std::cos(0.7), 0.0, 0.0, 0.0},
                           std::sin(0.7) * i2};
    const PolarForm ps = polar(qs);
    CHECK(sup_diff(ps.radius, RingScalar{Algebra::split, 1.0}) <= 1e-14);
    CHECK(sup_diff(ps.cos_angle, RingScalar{Algebra::split, std::cos(0.7), 0.0}) <= 1e-14);
    CHECK(sup_diff(ps.sin_angle, RingScalar{Algebra::split, std::sin(0.7), 0.0}) <= 1e-14);
    CHECK(sup_diff(ps.axis, ExtQuaternion{Algebra::split, Quaternion{}, i2}) <= 1e-14);
}

TEST_CASE("polar form reconstructs random elements") {
    checks::Rng rng(34);
    for (int i = 0; i < 200; ++i) {
        for (Algebra alg : all_algebras) {
            ExtQuaternion q = rng.ext(alg, 2.0);
            if (alg == Algebra::dual)
                while (norm(q.alpha) < 0.1) q = rng.ext(alg, 2.0);
            const PolarForm p = polar(q);
            const ExtQuaternion rebuilt =
                p.radius * (ExtQuaternion{alg, Quaternion{p.cos_angle.a, 0, 0, 0},
                                          Quaternion{p.cos_angle.b, 0, 0, 0}} +
                            p.sin_angle * p.axis);
            CHECK(sup_diff(rebuilt, q) <= 1e-10 * std::max(1.0, sup_norm(q)));
        }
    }
}

TEST_CASE("polar form rejects each degeneracy class") {
    // complex: |alpha| = |beta| with <alpha, beta> = 0
    CHECK_THROWS_AS(polar(ExtQuaternion{Algebra::complex, i1, i2}), std::domain_error);
    // dual: vanishing real part
    CHECK_THROWS_AS(polar(ExtQuaternion{Algebra::dual, Quaternion{}, i1}), std::domain_error);
    // split: zero divisors beta = +/-alpha
    CHECK_THROWS_AS(polar(ExtQuaternion{Algebra::split, i1, i1}), std::domain_error);
    CHECK_THROWS_AS(polar(ExtQuaternion{Algebra::split, i1, -i1}), std::domain_error);
}

TEST_CASE("unit elements are validated") {
    CHECK_THROWS_AS((UnitElement{ExtQuaternion{Algebra::complex, 2.0 * i1}}),
                    std::domain_error);
    // <alpha, beta> must vanish too.
    CHECK_THROWS_AS((UnitElement{ExtQuaternion{Algebra::dual, Quaternion::identity(),
                                               Quaternion{0.5, 0.0, 0.0, 0.0}}}),
                    std::domain_error);
    CHECK_NOTHROW((UnitElement{ExtQuaternion{Algebra::split, Quaternion{},
                                             Quaternion::identity()}}));
}

TEST_CASE("decomposition of a real rotor is trivial") {
    for (Algebra alg : all_algebras) {
        const UnitElement q = make_rotor(alg, i1 + 2.0 * i3, 1.1);
        const Decomposition d = decompose(q);
        CHECK(sup_diff(d.translator.value(), ExtQuaternion::one(alg)) == 0.0);
        CHECK(d.theta == 0.0);
        CHECK(sup_diff(d.rotor.value(), q.value()) == 0.0);
    }
}

TEST_CASE("decomposition recovers constructed factors") {
    SUBCASE("biquaternion rotor times boost") {
        const UnitElement r = make_rotor(Algebra::complex, i3, test::kPi / 3.0);
        const UnitElement b = make_translator(Algebra::complex, i1, 0.8);
        const Decomposition d = decompose(compose(r, b));
        CHECK(d.theta == doctest::Approx(0.4).epsilon(1e-12));
        const double rotor_gap = std::min(sup_diff(d.rotor.value(), r.value()),
                                          sup_diff(d.rotor.value(), -r.value()));
        const double trans_gap = std::min(sup_diff(d.translator.value(), b.value()),
                                          sup_diff(d.translator.value(), -b.value()));
        CHECK(rotor_gap <= 1e-12);
        CHECK(trans_gap <= 1e-12);
    }

    SUBCASE("dual quaternion rotor times shear") {
        const ExtQuaternion q =
            ExtQuaternion{Algebra::dual, i2} *
            ExtQuaternion{Algebra::dual, Quaternion::identity(), 0.9 * i1};
        const Decomposition d = decompose(UnitElement{q});
        CHECK(d.theta == doctest::Approx(0.9).epsilon(1e-12));
        const double rotor_gap =
            std::min(sup_diff(d.rotor.value(), ExtQuaternion{Algebra::dual, i2}),
                     sup_diff(d.rotor.value(), ExtQuaternion{Algebra::dual, -i2}));
        CHECK(rotor_gap <= 1e-12);
    }

    SUBCASE("split element with no real part") {
        const ExtQuaternion q{Algebra::split, Quaternion{}, Quaternion::identity()};
        const Decomposition d = decompose(UnitElement{q});
        CHECK(d.theta == doctest::Approx(test::kPi / 2).epsilon(1e-12));
        CHECK(sup_diff(d.rotor.value() * d.translator.value(), q) <= 1e-15);
        CHECK(sup_diff(star(d.rotor.value()), d.rotor.value()) == 0.0);
    }
}

TEST_CASE("decomposition round-trips random unit elements") {
    checks::Rng rng(35);
    for (int i = 0; i < 200; ++i) {
        for (Algebra alg : all_algebras) {
            const UnitElement q = rng.unit(alg);
            const Decomposition d = decompose(q);
            CHECK(sup_diff(d.rotor.value() * d.translator.value(), q.value()) <= 1e-10);
            CHECK(sup_diff(star(d.rotor.value()), d.rotor.value()) == 0.0);
            CHECK(sup_diff(bar(d.translator.value()), star(d.translator.value())) == 0.0);
            CHECK(d.theta >= 0.0);
        }
    }
}

TEST_CASE("composing boosts along different axes leaves a rotation behind") {
    const UnitElement bx = make_translator(Algebra::complex, i1, 0.5);
    const UnitElement by = make_translator(Algebra::complex, i2, 0.5);
    const Decomposition d = decompose(compose(bx, by));
    CHECK(norm(vector_part(d.rotor.value().alpha)) > 1e-3);
}
