#pragma once

#include <algorithm>
#include <cmath>

#include "uquat/action.hpp"
#include "uquat/extquat.hpp"

namespace uquat::test {

inline double sup_diff(const Quaternion& a, const Quaternion& b) {
    const Quaternion d = a - b;
    return std::max({std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)});
}

inline double sup_diff(const RingScalar& a, const RingScalar& b) {
    return std::max(std::abs(a.a - b.a), std::abs(a.b - b.b));
}

inline double sup_diff(const ExtQuaternion& a, const ExtQuaternion& b) {
    return sup_norm(a - b);
}

inline double sup_diff(const Minquat& a, const Minquat& b) { return sup_distance(a, b); }

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace uquat::test
