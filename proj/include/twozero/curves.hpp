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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "twozero/codes.hpp"
#include "twozero/ffield.hpp"

namespace twozero {

/// Twisted Jacobi intersection a u^2 + v^2 = 1, b u^2 + w^2 = 1 (affine form
/// of the projective curve a U^2 + V^2 = T^2, b U^2 + W^2 = T^2).
/// Requires a b (a - b) != 0.
struct JacobiIntersection {
    FieldElement a;
    FieldElement b;
};

JacobiIntersection make_jacobi_intersection(const FieldTower& tower, FieldElement a,
                                            FieldElement b);

/// Projective intersection of two quadrics
///   U^2 - V^2 = c1 Z^2,  U^2 - W^2 = c2 Z^2
/// with c1, c2, c1 - c2 all nonzero.  This is the common shape of the
/// difference systems obtained by eliminating the scan variable from
/// c + shift_i = unit * x_i^2 (the unit is divided into the right-hand side).
struct QuadricPairCurve {
    FieldElement c1;
    FieldElement c2;
};

QuadricPairCurve make_quadric_pair(const FieldTower& tower, FieldElement c1,
                                   FieldElement c2);

/// The quadric pair for shifts (1, beta, beta^2) and the given unit:
/// c1 = (1 - beta)/unit, c2 = (1 - beta^2)/unit.  unit = 1 is the system
/// whose affine solutions with u v w != 0 count the all-squares shifts;
/// unit = a nonsquare counts the all-nonsquares shifts.
QuadricPairCurve shift_system_curve(const FieldTower& tower, FieldElement beta,
                                    FieldElement unit);

/// y^2 = x^3 + a2 x^2 + a4 x + a6, nonsingular, characteristic != 2.
struct WeierstrassCurve {
    FieldElement a2;
    FieldElement a4;
    FieldElement a6;
};

WeierstrassCurve make_weierstrass(const FieldTower& tower, FieldElement a2,
                                  FieldElement a4, FieldElement a6);

/// y^2 = x (x - a)(x - b), the Weierstrass partner of JacobiIntersection(a, b).
WeierstrassCurve weierstrass_from_roots(const FieldTower& tower, FieldElement a,
                                        FieldElement b);

struct PointCount {
    std::int64_t total = 0;
    std::int64_t affine = 0;
    std::int64_t at_infinity = 0;
    bool hasse_ok = false;  // (total - (r+1))^2 <= 4r
};

/// Exhaustive point count (affine scan with the quadratic-residue test, plus
/// the single point at infinity).
PointCount count_weierstrass(const FieldTower& tower, const WeierstrassCurve& E);

/// Quadratic twist by a nonresidue gamma:
/// y^2 = x^3 + gamma a2 x^2 + gamma^2 a4 x + gamma^3 a6.
/// The two counts sum to 2(r + 1).
WeierstrassCurve quadratic_twist(const FieldTower& tower, const WeierstrassCurve& E,
                                 FieldElement gamma);

/// Exhaustive projective point count: affine scan over u plus the four
/// infinite points (1 : +-1 : +-1 : 0).
PointCount count_quadric_pair(const FieldTower& tower, const QuadricPairCurve& C);

struct AffinePointUVW {
    FieldElement u;
    FieldElement v;
    FieldElement w;
};

struct AffinePointXY {
    FieldElement x;
    FieldElement y;
};

/// Birational map from J_{a,b} to y^2 = x(x-a)(x-b):
///   x = -a(w+1)/(v-1),  y = a u/(v-1) * (x-b).
/// The point must lie on the intersection and have v != 1 (exceptional locus).
AffinePointXY jacobi_to_weierstrass(const FieldTower& tower, const JacobiIntersection& J,
                                    const AffinePointUVW& P);

/// Inverse map:
///   u = -2y/(x^2-ab),  v = (x^2-2ax+ab)/(x^2-ab),  w = (x^2-2bx+ab)/(x^2-ab).
/// The point must lie on the cubic and have x^2 != ab (exceptional locus).
AffinePointUVW weierstrass_to_jacobi(const FieldTower& tower, const JacobiIntersection& J,
                                     const AffinePointXY& P);

/// All affine points of J_{a,b} over GF(r), ascending scan order.
std::vector<AffinePointUVW> jacobi_affine_points(const FieldTower& tower,
                                                 const JacobiIntersection& J);

struct ShiftTripleCounts {
    std::int64_t all_squares = 0;     // c with c+1, c+beta, c+beta^2 all nonzero squares
    std::int64_t all_nonsquares = 0;  // ... all nonsquares
};

/// Exhaustive scan over c in GF(r); requires the e = 3, f = 2 regime.
ShiftTripleCounts count_shift_triples(const CodeParams& params);

/// Number of tuples (x, x_0, ..., x_{e-1}) in GF(r)^{e+1} with
/// x + shifts[i] = units[i] * x_i^f for every i, counted by scanning x and
/// multiplying precomputed f-th-power fiber sizes.  Units must be nonzero.
std::int64_t count_shifted_power_system(const FieldTower& tower, std::int64_t f,
                                        std::span<const FieldElement> shifts,
                                        std::span<const FieldElement> units);

}  // namespace twozero
