#include "uquat/json_io.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace uquat::io {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON document");
    return j;
}

Algebra algebra_field(const json& j) {
    if (!j.contains("algebra") || !j["algebra"].is_string())
        throw ParseError("missing \"algebra\" field");
    const auto name = j["algebra"].get<std::string>();
    const auto alg = algebra_from_name(name);
    if (!alg) throw ParseError("unknown algebra \"" + name + "\"");
    return *alg;
}

std::array<double, 4> number_array4(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError(std::string("field \"") + field + "\" must be an array of 4 numbers");
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        if (!j[i].is_number())
            throw ParseError(std::string("field \"") + field + "\" must contain numbers");
        out[i] = j[i].get<double>();
    }
    return out;
}

ExtQuaternion extquat_from(const json& j) {
    if (!j.is_object()) throw ParseError("expected an object for a quaternion value");
    const Algebra alg = algebra_field(j);
    if (!j.contains("alpha")) throw ParseError("missing \"alpha\" field");
    const auto a = number_array4(j["alpha"], "alpha");
    std::array<double, 4> b{};
    if (j.contains("beta")) b = number_array4(j["beta"], "beta");
    return {alg, Quaternion{a[0], a[1], a[2], a[3]}, Quaternion{b[0], b[1], b[2], b[3]}};
}

Minquat minquat_from(const json& j, std::optional<Algebra> fallback) {
    if (j.is_array()) {
        if (!fallback) throw ParseError("bare coordinate array needs an algebra");
        const auto v = number_array4(j, "v");
        return {*fallback, v[0], v[1], v[2], v[3]};
    }
    if (!j.is_object()) throw ParseError("expected a minquat object or coordinate array");
    const Algebra alg = j.contains("algebra") ? algebra_field(j)
                        : fallback            ? *fallback
                                              : throw ParseError("missing \"algebra\" field");
    if (!j.contains("v")) throw ParseError("missing \"v\" field");
    const auto v = number_array4(j["v"], "v");
    return {alg, v[0], v[1], v[2], v[3]};
}

std::string quad(const Quaternion& q) {
    std::ostringstream out;
    out << '[' << format_double(q.w) << ',' << format_double(q.x) << ',' << format_double(q.y)
        << ',' << format_double(q.z) << ']';
    return out.str();
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string to_json(const ExtQuaternion& q) {
    std::ostringstream out;
    out << "{\"algebra\":\"" << algebra_name(q.alg) << "\",\"alpha\":" << quad(q.alpha)
        << ",\"beta\":" << quad(q.beta) << '}';
    return out.str();
}

std::string to_json(const Minquat& v) {
    std::ostringstream out;
    out << "{\"algebra\":\"" << algebra_name(v.alg) << "\",\"v\":[" << format_double(v.v0)
        << ',' << format_double(v.vec.x) << ',' << format_double(v.vec.y) << ','
        << format_double(v.vec.z) << "]}";
    return out.str();
}

std::string to_json(const Mat4& m) {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < 4; ++i) {
        out << (i ? ",[" : "[");
        for (int j = 0; j < 4; ++j) out << (j ? "," : "") << format_double(m(i, j));
        out << ']';
    }
    out << ']';
    return out.str();
}

ExtQuaternion parse_extquat(const std::string& text) {
    return extquat_from(parse_document(text));
}

Minquat parse_minquat(const std::string& text, std::optional<Algebra> fallback) {
    return minquat_from(parse_document(text), fallback);
}

std::pair<ExtQuaternion, Minquat> parse_apply_request(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object() || !j.contains("q") || !j.contains("v"))
        throw ParseError("apply expects {\"q\": ..., \"v\": ...}");
    ExtQuaternion q = extquat_from(j["q"]);
    Minquat v = minquat_from(j["v"], q.alg);
    return {std::move(q), std::move(v)};
}

std::pair<Minquat, Minquat> parse_pair_request(const std::string& text,
                                               std::optional<Algebra> fallback) {
    const json j = parse_document(text);
    if (!j.is_object() || !j.contains("v") || !j.contains("w"))
        throw ParseError("expected {\"v\": ..., \"w\": ...}");
    if (j.contains("algebra")) fallback = algebra_field(j);
    Minquat v = minquat_from(j["v"], fallback);
    Minquat w = minquat_from(j["w"], fallback);
    return {std::move(v), std::move(w)};
}

}  // namespace uquat::io
