#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "uquat/action.hpp"
#include "uquat/extquat.hpp"

namespace uquat::io {

// Malformed document, unknown algebra, wrong field shape.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All numeric output uses 17 significant digits so that values round-trip
// through decimal losslessly.
std::string format_double(double x);

std::string to_json(const ExtQuaternion& q);
std::string to_json(const Minquat& v);
std::string to_json(const Mat4& m);

ExtQuaternion parse_extquat(const std::string& text);
Minquat parse_minquat(const std::string& text, std::optional<Algebra> fallback = {});

// {"q": <extquat>, "v": <minquat or bare coordinate array>}
std::pair<ExtQuaternion, Minquat> parse_apply_request(const std::string& text);

// {"v": ..., "w": ..., "algebra": optional} with the same minquat forms.
std::pair<Minquat, Minquat> parse_pair_request(const std::string& text,
                                               std::optional<Algebra> fallback = {});

}  // namespace uquat::io
