#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace uquat {

// The three commutative two-component rings over the reals, tagged by the
// square of their non-real unit u: complex (u^2 = -1), dual (u^2 = 0),
// split-complex (u^2 = +1).
enum class Algebra { complex, dual, split };

inline constexpr std::array<Algebra, 3> all_algebras{Algebra::complex, Algebra::dual,
                                                     Algebra::split};

constexpr int unit_square(Algebra alg) noexcept {
    switch (alg) {
    case Algebra::complex: return -1;
    case Algebra::dual: return 0;
    case Algebra::split: return 1;
    }
    return 0;
}

std::string_view algebra_name(Algebra alg) noexcept;
std::optional<Algebra> algebra_from_name(std::string_view name) noexcept;

// Numeric policy. Values of order one throughout; comparisons use
// |x - y| <= tol * max(1, |x|, |y|).
inline constexpr double kTol = 1e-12;
inline constexpr double kUnitTol = 1e-10;   // membership in the unit-norm group
inline constexpr double kEdgeSlack = 1e-9;  // clamp window at acos/acosh domain edges

// Element a + u*b of the ring selected by alg.
struct RingScalar {
    Algebra alg;
    double a;  // real part
    double b;  // u part

    constexpr RingScalar(Algebra alg_, double a_, double b_ = 0.0) noexcept
        : alg(alg_), a(a_), b(b_) {}
};

RingScalar operator+(const RingScalar& x, const RingScalar& y);
RingScalar operator-(const RingScalar& x, const RingScalar& y);
RingScalar operator*(const RingScalar& x, const RingScalar& y);
RingScalar operator/(const RingScalar& x, const RingScalar& y);

constexpr RingScalar operator-(const RingScalar& x) noexcept {
    return {x.alg, -x.a, -x.b};
}
constexpr RingScalar operator*(double s, const RingScalar& x) noexcept {
    return {x.alg, s * x.a, s * x.b};
}

// a + u*b  ->  a - u*b
constexpr RingScalar conj(const RingScalar& x) noexcept {
    return {x.alg, x.a, -x.b};
}

// Multiplicative inverse; zero divisors are rejected.
RingScalar inverse(const RingScalar& x);

RingScalar cos(const RingScalar& z);
RingScalar sin(const RingScalar& z);

// Principal square root: result has nonnegative real part and squares back to
// the input. Domain: complex — anything; dual — a > 0; split — a > |b|.
RingScalar sqrt(const RingScalar& x);

// Recovers gamma >= 0 from c = cos(u*gamma). For the dual ring cos(u*gamma)
// is identically 1, so the caller supplies the norm of the u-vector part.
double angle_from_cosine(const RingScalar& c, double sin_norm = 0.0);

}  // namespace uquat
