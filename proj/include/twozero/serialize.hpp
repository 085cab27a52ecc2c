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

#pragma once

#include <string>

#include "json.hpp"
#include "twozero/charsum.hpp"
#include "twozero/codes.hpp"
#include "twozero/curves.hpp"
#include "twozero/ffield.hpp"

namespace twozero {

// Reports use nlohmann::ordered_json so key order is exactly insertion order:
// identical configs produce byte-identical output.  JSON is the canonical
// format; CSV and the pretty renderer are derived from it.
using Json = nlohmann::ordered_json;

/// Coefficient-vector form "c0,c1,..." (constant term first), the same
/// format used for polynomials on the CLI.
std::string field_element_to_string(const FieldTower& tower, FieldElement e);

/// Parses "c0,c1,..." or the shorthands "a^K" / "a" for powers of alpha.
FieldElement field_element_from_string(const FieldTower& tower, const std::string& text);

Json field_params_json(const FieldTower& tower);

/// {"p": p, "coeffs": [c_0, ..., c_{p-1}]} in canonical form.
Json cyclotomic_value_json(const CyclotomicIntegerValue& v);

/// {"n": n, "k": k, "counts": {"0": 1, ...}} with keys ascending by weight.
Json weight_distribution_json(const WeightDistribution& wd);

/// "weight,frequency" lines, ascending.
std::string weight_distribution_csv(const WeightDistribution& wd);

/// Integer-keyed map (class-sum values, possibly negative) with keys in
/// ascending numeric order.
Json int_map_json(const std::map<std::int64_t, std::int64_t>& m);

Json point_count_json(const PointCount& pc);

Json weierstrass_json(const FieldTower& tower, const WeierstrassCurve& E);
Json quadric_pair_json(const FieldTower& tower, const QuadricPairCurve& C);

/// {"curve": ..., "total": t, "affine": a, "infinity": i, "hasse_ok": bool}
Json curve_report_json(Json curve, const PointCount& pc);

/// Plain-text rendering of a JSON report (two-column tables for objects of
/// scalars, recursion for nested objects).  Derived from the JSON only.
std::string render_pretty(const Json& j);

}  // namespace twozero
