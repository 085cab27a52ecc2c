// Copyright 2026 The twozero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twozero/serialize.hpp"

#include <charconv>
#include <sstream>

namespace twozero {

std::string field_element_to_string(const FieldTower& tower, FieldElement e) {
    return poly_to_string(tower.coeffs(e));
}

FieldElement field_element_from_string(const FieldTower& tower, const std::string& text) {
    std::string t = text;
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    if (b == std::string::npos)
        throw std::invalid_argument("empty field element");
    t = t.substr(b, e - b + 1);
    if (t == "a") return tower.alpha();
    if (t.rfind("a^", 0) == 0) {
        std::int64_t k = 0;
        const char* first = t.data() + 2;
        const char* last = t.data() + t.size();
        auto res = std::from_chars(first, last, k);
        if (res.ec != std::errc() || res.ptr != last)
            throw std::invalid_argument("bad exponent in '" + t + "'");
        return tower.alpha_pow(k);
    }
    return tower.from_coeffs(poly_from_string(t, tower.p()));
}

Json field_params_json(const FieldTower& tower) {
    Json j;
    j["p"] = tower.p();
    j["s"] = tower.s();
    j["m"] = tower.m();
    j["q"] = tower.q();
    j["r"] = tower.r();
    j["modulus"] = poly_to_string(tower.params().modulus);
    return j;
}

Json cyclotomic_value_json(const CyclotomicIntegerValue& v) {
    Json j;
    j["p"] = v.prime();
    j["coeffs"] = v.coeffs();
    return j;
}

Json weight_distribution_json(const WeightDistribution& wd) {
    Json j;
    j["n"] = wd.n;
    j["k"] = wd.dimension;
    Json counts = Json::object();
    for (const auto& [w, c] : wd.counts) counts[std::to_string(w)] = c;
    j["counts"] = counts;
    return j;
}

std::string weight_distribution_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "weight,frequency\n";
    for (const auto& [w, c] : wd.counts) os << w << ',' << c << '\n';
    return os.str();
}

Json int_map_json(const std::map<std::int64_t, std::int64_t>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

Json point_count_json(const PointCount& pc) {
    Json j;
    j["total"] = pc.total;
    j["affine"] = pc.affine;
    j["infinity"] = pc.at_infinity;
    j["hasse_ok"] = pc.hasse_ok;
    return j;
}

Json weierstrass_json(const FieldTower& tower, const WeierstrassCurve& E) {
    Json j;
    j["model"] = "weierstrass";
    j["a2"] = field_element_to_string(tower, E.a2);
    j["a4"] = field_element_to_string(tower, E.a4);
    j["a6"] = field_element_to_string(tower, E.a6);
    return j;
}

Json quadric_pair_json(const FieldTower& tower, const QuadricPairCurve& C) {
    Json j;
    j["model"] = "quadric_pair";
    j["c1"] = field_element_to_string(tower, C.c1);
    j["c2"] = field_element_to_string(tower, C.c2);
    return j;
}

Json curve_report_json(Json curve, const PointCount& pc) {
    Json j;
    j["curve"] = std::move(curve);
    j["total"] = pc.total;
    j["affine"] = pc.affine;
    j["infinity"] = pc.at_infinity;
    j["hasse_ok"] = pc.hasse_ok;
    return j;
}

namespace {

void render_node(const Json& j, const std::string& indent, std::ostringstream& os) {
    if (j.is_object()) {
        std::size_t width = 0;
        for (auto it = j.begin(); it != j.end(); ++it)
            width = std::max(width, it.key().size());
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (v.is_object() || v.is_array()) {
                os << indent << it.key() << ":\n";
                render_node(v, indent + "  ", os);
            } else {
                os << indent << it.key()
                   << std::string(width - it.key().size(), ' ') << "  "
                   << v.dump() << '\n';
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << indent << "-\n";
                render_node(v, indent + "  ", os);
            } else {
                os << indent << "- " << v.dump() << '\n';
            }
        }
    } else {
        os << indent << j.dump() << '\n';
    }
}

}  // namespace

std::string render_pretty(const Json& j) {
    std::ostringstream os;
    render_node(j, "", os);
    return os.str();
}

}  // namespace twozero
