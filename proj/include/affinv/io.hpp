#pragma once

// JSON forms of walks and 3D ideals.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "codes.hpp"
#include "symmetric.hpp"

namespace affinv::io {

using nlohmann::json;

inline json to_json(const Walk& w) {
    json pts = json::array();
    for (Point2 u : w.pts) pts.push_back({u.x, u.y});
    return {{"host", {w.host.a, w.host.b, w.host.c, w.host.d}}, {"walk", pts}};
}

inline Walk walk_from_json(const json& j) {
    const auto& h = j.at("host");
    if (!h.is_array() || h.size() != 4) throw InvalidParams("host must be [a,b,c,d]");
    Walk w(Rect(h[0].get<coord>(), h[1].get<coord>(), h[2].get<coord>(), h[3].get<coord>()));
    for (const auto& u : j.at("walk")) {
        if (!u.is_array() || u.size() != 2) throw InvalidParams("walk points must be [x,y]");
        w.pts.push_back({u[0].get<coord>(), u[1].get<coord>()});
    }
    return w;
}

inline json points_json(const Ideal3& I) {
    json pts = json::array();
    for (Point3 u : I) pts.push_back({u.x, u.y, u.z});
    return pts;
}

inline json record_r3(const Params& P, const std::vector<Profile>& layers, bool with_points) {
    json L = json::array();
    for (const Profile& s : layers) L.push_back(to_json(to_walk(s)));
    json j = {{"p", P.p}, {"m", P.m}, {"r", 3}, {"layers", L}};
    if (with_points) j["points"] = points_json(layer_points(layers));
    return j;
}

inline json record_r1(const Params& P, const std::vector<Profile>& layers, bool with_points) {
    json L = json::array();
    for (const Profile& s : layers) L.push_back(to_json(to_walk(s)));
    json j = {{"p", P.p}, {"m", P.m}, {"r", 1}, {"sym_layers", L}};
    if (with_points) j["points"] = points_json(sym_points(layers));
    return j;
}

struct IdealInput {
    std::optional<coord> p;
    std::optional<int> m, r;
    Ideal3 points;
};

// Accepts {"points": [[x,y,z],...]}, a layer record {"layers": [...]} or a
// symmetric record {"sym_layers": [...]}; "p", "m", "r" are optional.
inline IdealInput ideal_from_json(const json& j, std::optional<coord> p_hint = std::nullopt) {
    if (!j.is_object()) throw InvalidParams("ideal must be a JSON object");
    IdealInput in;
    if (j.contains("p")) in.p = j["p"].get<coord>();
    if (j.contains("m")) in.m = j["m"].get<int>();
    if (j.contains("r")) in.r = j["r"].get<int>();
    coord p = in.p.value_or(p_hint.value_or(2));
    if (j.contains("points")) {
        for (const auto& u : j["points"]) {
            if (!u.is_array() || u.size() != 3) throw InvalidParams("points must be [x,y,z]");
            in.points.insert({u[0].get<coord>(), u[1].get<coord>(), u[2].get<coord>()});
        }
    } else if (j.contains("layers")) {
        std::vector<Profile> layers;
        for (const auto& w : j["layers"]) layers.push_back(checked_profile(walk_from_json(w), p));
        in.points = layer_points(layers);
    } else if (j.contains("sym_layers")) {
        std::vector<Profile> layers;
        for (const auto& w : j["sym_layers"]) layers.push_back(checked_profile(walk_from_json(w), p));
        in.points = sym_points(layers);
    } else {
        throw InvalidParams("ideal needs \"points\", \"layers\" or \"sym_layers\"");
    }
    return in;
}

} // namespace affinv::io
