#include "uquat/ring.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace uquat {

namespace {

void require_same_algebra(const RingScalar& x, const RingScalar& y) {
    if (x.alg != y.alg) {
        std::ostringstream msg;
        msg << "algebra mismatch: " << algebra_name(x.alg) << " vs " << algebra_name(y.alg);
        throw std::domain_error(msg.str());
    }
}

[[noreturn]] void out_of_domain(const char* what, const RingScalar& x) {
    std::ostringstream msg;
    msg << what << " undefined for " << algebra_name(x.alg) << " value " << x.a << " + u*"
        << x.b;
    throw std::domain_error(msg.str());
}

}  // namespace

std::string_view algebra_name(Algebra alg) noexcept {
    switch (alg) {
    case Algebra::complex: return "complex";
    case Algebra::dual: return "dual";
    case Algebra::split: return "split";
    }
    return "?";
}

std::optional<Algebra> algebra_from_name(std::string_view name) noexcept {
    for (Algebra alg : all_algebras)
        if (name == algebra_name(alg)) return alg;
    return std::nullopt;
}

RingScalar operator+(const RingScalar& x, const RingScalar& y) {
    require_same_algebra(x, y);
    return {x.alg, x.a + y.a, x.b + y.b};
}

RingScalar operator-(const RingScalar& x, const RingScalar& y) {
    require_same_algebra(x, y);
    return {x.alg, x.a - y.a, x.b - y.b};
}

RingScalar operator*(const RingScalar& x, const RingScalar& y) {
    require_same_algebra(x, y);
    const double s = unit_square(x.alg);
    return {x.alg, x.a * y.a + s * x.b * y.b, x.a * y.b + x.b * y.a};
}

RingScalar inverse(const RingScalar& x) {
    // (a + ub)^-1 = (a - ub) / (a^2 - u^2 b^2)
    const double s = unit_square(x.alg);
    const double den = x.a * x.a - s * x.b * x.b;
    if (den == 0.0) out_of_domain("inverse", x);
    return {x.alg, x.a / den, -x.b / den};
}

RingScalar operator/(const RingScalar& x, const RingScalar& y) {
    require_same_algebra(x, y);
    return x * inverse(y);
}

RingScalar cos(const RingScalar& z) {
    const double ca = std::cos(z.a);
    const double sa = std::sin(z.a);
    switch (z.alg) {
    case Algebra::complex:
        return {z.alg, ca * std::cosh(z.b), -sa * std::sinh(z.b)};
    case Algebra::dual:
        return {z.alg, ca, -sa * z.b};
    case Algebra::split:
        return {z.alg, ca * std::cos(z.b), -sa * std::sin(z.b)};
    }
    return z;
}

RingScalar sin(const RingScalar& z) {
    const double ca = std::cos(z.a);
    const double sa = std::sin(z.a);
    switch (z.alg) {
    case Algebra::complex:
        return {z.alg, sa * std::cosh(z.b), ca * std::sinh(z.b)};
    case Algebra::dual:
        return {z.alg, sa, ca * z.b};
    case Algebra::split:
        return {z.alg, sa * std::cos(z.b), ca * std::sin(z.b)};
    }
    return z;
}

RingScalar sqrt(const RingScalar& x) {
    switch (x.alg) {
    case Algebra::complex: {
        const auto r = std::sqrt(std::complex<double>(x.a, x.b));
        return {x.alg, r.real(), r.imag()};
    }
    case Algebra::dual: {
        if (!(x.a > 0.0)) out_of_domain("sqrt", x);
        const double r = std::sqrt(x.a);
        return {x.alg, r, x.b / (2.0 * r)};
    }
    case Algebra::split: {
        if (!(x.a > std::abs(x.b))) out_of_domain("sqrt", x);
        const double p = std::sqrt(x.a + x.b);
        const double m = std::sqrt(x.a - x.b);
        return {x.alg, 0.5 * (p + m), 0.5 * (p - m)};
    }
    }
    return x;
}

double angle_from_cosine(const RingScalar& c, double sin_norm) {
    if (sin_norm < 0.0) throw std::invalid_argument("angle_from_cosine: negative sine norm");
    // cos(u*gamma) is real in all three rings; a residual u part means the
    // input was not the scalar of a unit-norm relative position.
    if (std::abs(c.b) > kEdgeSlack * std::max(1.0, std::abs(c.a)))
        out_of_domain("angle_from_cosine (non-real cosine)", c);
    switch (c.alg) {
    case Algebra::complex:
        if (c.a < 1.0 - kEdgeSlack) out_of_domain("angle_from_cosine", c);
        return std::acosh(std::max(c.a, 1.0));
    case Algebra::dual:
        if (std::abs(c.a - 1.0) > kEdgeSlack) out_of_domain("angle_from_cosine", c);
        return sin_norm;
    case Algebra::split:
        if (std::abs(c.a) > 1.0 + kEdgeSlack) out_of_domain("angle_from_cosine", c);
        return std::acos(std::clamp(c.a, -1.0, 1.0));
    }
    return 0.0;
}

}  // namespace uquat
