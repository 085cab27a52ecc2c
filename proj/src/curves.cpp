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

#include "twozero/curves.hpp"

#include <numeric>
#include <stdexcept>

namespace twozero {

namespace {

void require_odd_characteristic(const FieldTower& tower) {
    if (tower.p() == 2)
        throw std::domain_error("characteristic 2 is not supported for y^2 models");
}

// Right-hand side x^3 + a2 x^2 + a4 x + a6.
FieldElement cubic_at(const FieldTower& T, const WeierstrassCurve& E, FieldElement x) {
    FieldElement acc = E.a6;
    acc = T.add(acc, T.mul(E.a4, x));
    const FieldElement x2 = T.mul(x, x);
    acc = T.add(acc, T.mul(E.a2, x2));
    acc = T.add(acc, T.mul(x2, x));
    return acc;
}

// Number of y in GF(r) with y^2 = v.
std::int64_t square_root_count(const FieldTower& T, FieldElement v) {
    switch (T.residue(v)) {
        case ResidueClass::kZero: return 1;
        case ResidueClass::kSquare: return 2;
        case ResidueClass::kNonSquare: return 0;
    }
    return 0;
}

bool hasse_holds(std::int64_t total, std::int64_t r) {
    const std::int64_t d = total - (r + 1);
    return d * d <= 4 * r;
}

FieldElement scalar(const FieldTower& T, std::int64_t k) { return T.from_int(k); }

}  // namespace

JacobiIntersection make_jacobi_intersection(const FieldTower& tower, FieldElement a,
                                            FieldElement b) {
    require_odd_characteristic(tower);
    if (a.is_zero() || b.is_zero() || tower.sub(a, b).is_zero())
        throw std::invalid_argument("twisted Jacobi intersection requires ab(a-b) != 0");
    return JacobiIntersection{a, b};
}

QuadricPairCurve make_quadric_pair(const FieldTower& tower, FieldElement c1,
                                   FieldElement c2) {
    require_odd_characteristic(tower);
    if (c1.is_zero() || c2.is_zero() || tower.sub(c1, c2).is_zero())
        throw std::invalid_argument("quadric pair requires c1, c2, c1-c2 nonzero");
    return QuadricPairCurve{c1, c2};
}

QuadricPairCurve shift_system_curve(const FieldTower& tower, FieldElement beta,
                                    FieldElement unit) {
    if (unit.is_zero()) throw std::invalid_argument("unit must be nonzero");
    const FieldElement one = tower.one();
    const FieldElement c1 = tower.div(tower.sub(one, beta), unit);
    const FieldElement c2 = tower.div(tower.sub(one, tower.mul(beta, beta)), unit);
    return make_quadric_pair(tower, c1, c2);
}

WeierstrassCurve make_weierstrass(const FieldTower& tower, FieldElement a2,
                                  FieldElement a4, FieldElement a6) {
    require_odd_characteristic(tower);
    // discriminant of the cubic x^3 + a2 x^2 + a4 x + a6:
    // 18*a2*a4*a6 - 4*a2^3*a6 + a2^2*a4^2 - 4*a4^3 - 27*a6^2
    const FieldTower& T = tower;
    const FieldElement t1 = T.mul(scalar(T, 18), T.mul(a2, T.mul(a4, a6)));
    const FieldElement t2 = T.mul(scalar(T, -4), T.mul(T.mul(a2, T.mul(a2, a2)), a6));
    const FieldElement t3 = T.mul(T.mul(a2, a2), T.mul(a4, a4));
    const FieldElement t4 = T.mul(scalar(T, -4), T.mul(a4, T.mul(a4, a4)));
    const FieldElement t5 = T.mul(scalar(T, -27), T.mul(a6, a6));
    const FieldElement disc = T.add(T.add(T.add(t1, t2), T.add(t3, t4)), t5);
    if (disc.is_zero()) throw std::invalid_argument("singular curve");
    return WeierstrassCurve{a2, a4, a6};
}

WeierstrassCurve weierstrass_from_roots(const FieldTower& tower, FieldElement a,
                                        FieldElement b) {
    // x(x-a)(x-b) = x^3 - (a+b) x^2 + ab x
    return make_weierstrass(tower, tower.neg(tower.add(a, b)), tower.mul(a, b),
                            tower.zero());
}

PointCount count_weierstrass(const FieldTower& tower, const WeierstrassCurve& E) {
    const std::int64_t r = tower.r();
    PointCount out;
    for (std::int64_t xp = 0; xp < r; ++xp) {
        const FieldElement x = tower.from_packed(static_cast<std::uint32_t>(xp));
        out.affine += square_root_count(tower, cubic_at(tower, E, x));
    }
    out.at_infinity = 1;
    out.total = out.affine + out.at_infinity;
    out.hasse_ok = hasse_holds(out.total, r);
    return out;
}

WeierstrassCurve quadratic_twist(const FieldTower& tower, const WeierstrassCurve& E,
                                 FieldElement gamma) {
    if (tower.residue(gamma) != ResidueClass::kNonSquare)
        throw std::invalid_argument("gamma must be a quadratic nonresidue");
    const FieldElement g2 = tower.mul(gamma, gamma);
    const FieldElement g3 = tower.mul(g2, gamma);
    return make_weierstrass(tower, tower.mul(gamma, E.a2), tower.mul(g2, E.a4),
                            tower.mul(g3, E.a6));
}

PointCount count_quadric_pair(const FieldTower& tower, const QuadricPairCurve& C) {
    const std::int64_t r = tower.r();
    PointCount out;
    for (std::int64_t up = 0; up < r; ++up) {
        const FieldElement u = tower.from_packed(static_cast<std::uint32_t>(up));
        const FieldElement u2 = tower.mul(u, u);
        const std::int64_t nv = square_root_count(tower, tower.sub(u2, C.c1));
        if (nv == 0) continue;
        const std::int64_t nw = square_root_count(tower, tower.sub(u2, C.c2));
        out.affine += nv * nw;
    }
    // On Z = 0: U^2 = V^2 = W^2 with U != 0; normalize U = 1.
    out.at_infinity = 4;
    out.total = out.affine + out.at_infinity;
    out.hasse_ok = hasse_holds(out.total, r);
    return out;
}

AffinePointXY jacobi_to_weierstrass(const FieldTower& tower, const JacobiIntersection& J,
                                    const AffinePointUVW& P) {
    const FieldTower& T = tower;
    const FieldElement one = T.one();
    const FieldElement u2 = T.mul(P.u, P.u);
    if (!(T.add(T.mul(J.a, u2), T.mul(P.v, P.v)) == one) ||
        !(T.add(T.mul(J.b, u2), T.mul(P.w, P.w)) == one))
        throw std::invalid_argument("point does not lie on the intersection");
    const FieldElement vm1 = T.sub(P.v, one);
    if (vm1.is_zero())
        throw std::domain_error("exceptional point: v = 1");
    const FieldElement x =
        T.neg(T.div(T.mul(J.a, T.add(P.w, one)), vm1));
    const FieldElement y = T.mul(T.div(T.mul(J.a, P.u), vm1), T.sub(x, J.b));
    // image must satisfy y^2 = x(x-a)(x-b)
    const FieldElement rhs = T.mul(x, T.mul(T.sub(x, J.a), T.sub(x, J.b)));
    if (!(T.mul(y, y) == rhs))
        throw std::logic_error("birational image left the cubic");
    return AffinePointXY{x, y};
}

AffinePointUVW weierstrass_to_jacobi(const FieldTower& tower, const JacobiIntersection& J,
                                     const AffinePointXY& P) {
    const FieldTower& T = tower;
    const FieldElement rhs =
        T.mul(P.x, T.mul(T.sub(P.x, J.a), T.sub(P.x, J.b)));
    if (!(T.mul(P.y, P.y) == rhs))
        throw std::invalid_argument("point does not lie on the cubic");
    const FieldElement ab = T.mul(J.a, J.b);
    const FieldElement x2 = T.mul(P.x, P.x);
    const FieldElement den = T.sub(x2, ab);
    if (den.is_zero())
        throw std::domain_error("exceptional point: x^2 = ab");
    const FieldElement u = T.neg(T.div(T.mul(scalar(T, 2), P.y), den));
    const FieldElement two_x = T.mul(scalar(T, 2), P.x);
    const FieldElement v = T.div(T.add(T.sub(x2, T.mul(J.a, two_x)), ab), den);
    const FieldElement w = T.div(T.add(T.sub(x2, T.mul(J.b, two_x)), ab), den);
    const FieldElement one = T.one();
    const FieldElement u2 = T.mul(u, u);
    if (!(T.add(T.mul(J.a, u2), T.mul(v, v)) == one) ||
        !(T.add(T.mul(J.b, u2), T.mul(w, w)) == one))
        throw std::logic_error("birational image left the intersection");
    return AffinePointUVW{u, v, w};
}

std::vector<AffinePointUVW> jacobi_affine_points(const FieldTower& tower,
                                                 const JacobiIntersection& J) {
    const FieldTower& T = tower;
    const std::int64_t r = T.r();
    const FieldElement one = T.one();
    std::vector<AffinePointUVW> pts;
    for (std::int64_t up = 0; up < r; ++up) {
        const FieldElement u = T.from_packed(static_cast<std::uint32_t>(up));
        const FieldElement u2 = T.mul(u, u);
        const FieldElement v2 = T.sub(one, T.mul(J.a, u2));
        const FieldElement w2 = T.sub(one, T.mul(J.b, u2));
        if (T.residue(v2) == ResidueClass::kNonSquare ||
            T.residue(w2) == ResidueClass::kNonSquare)
            continue;
        // collect the square roots by scanning packed order for determinism
        std::vector<FieldElement> vs, ws;
        for (std::int64_t yp = 0; yp < r; ++yp) {
            const FieldElement y = T.from_packed(static_cast<std::uint32_t>(yp));
            if (T.mul(y, y) == v2) vs.push_back(y);
            if (T.mul(y, y) == w2) ws.push_back(y);
        }
        for (const auto& v : vs)
            for (const auto& w : ws) pts.push_back(AffinePointUVW{u, v, w});
    }
    return pts;
}

ShiftTripleCounts count_shift_triples(const CodeParams& params) {
    if (params.e != 3 || params.f != 2)
        throw std::domain_error("shift-triple counts require the e = 3, f = 2 regime");
    const FieldTower& T = *params.tower;
    const FieldElement one = T.one();
    const FieldElement beta = params.beta;
    const FieldElement beta2 = T.mul(beta, beta);
    ShiftTripleCounts out;
    for (std::int64_t cp = 0; cp < T.r(); ++cp) {
        const FieldElement c = T.from_packed(static_cast<std::uint32_t>(cp));
        const ResidueClass s1 = T.residue(T.add(c, one));
        if (s1 == ResidueClass::kZero) continue;
        const ResidueClass s2 = T.residue(T.add(c, beta));
        if (s2 != s1) continue;
        const ResidueClass s3 = T.residue(T.add(c, beta2));
        if (s3 != s1) continue;
        if (s1 == ResidueClass::kSquare)
            ++out.all_squares;
        else
            ++out.all_nonsquares;
    }
    return out;
}

std::int64_t count_shifted_power_system(const FieldTower& tower, std::int64_t f,
                                        std::span<const FieldElement> shifts,
                                        std::span<const FieldElement> units) {
    if (shifts.empty() || shifts.size() != units.size())
        throw std::invalid_argument("shifts and units must have equal nonzero length");
    if (f < 1) throw std::invalid_argument("f must be positive");
    for (const auto& u : units)
        if (u.is_zero()) throw std::invalid_argument("units must be nonzero");

    const FieldTower& T = tower;
    const std::int64_t r = T.r();
    const std::int64_t M = T.order();
    const std::int64_t d = std::gcd(f, M);

    // the count is bounded by r * d^e; keep it inside int64
    unsigned __int128 bound = static_cast<unsigned __int128>(r);
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        bound *= static_cast<unsigned __int128>(d);
        if (bound > static_cast<unsigned __int128>(INT64_MAX))
            throw WorkCapError("solution count may overflow; reduce f or the system size");
    }

    // fiber[y] = #{t : t^f = y}
    std::vector<std::int32_t> fiber(static_cast<std::size_t>(r), 0);
    fiber[0] = 1;
    for (std::int64_t k = 0; k < M; ++k) {
        const FieldElement y = FieldElement::from_exponent(static_cast<std::uint32_t>(k));
        fiber[T.packed(y)] = (k % d == 0) ? static_cast<std::int32_t>(d) : 0;
    }

    std::vector<FieldElement> inv_units;
    inv_units.reserve(units.size());
    for (const auto& u : units) inv_units.push_back(T.inv(u));

    std::int64_t total = 0;
    for (std::int64_t xp = 0; xp < r; ++xp) {
        const FieldElement x = T.from_packed(static_cast<std::uint32_t>(xp));
        std::int64_t prod = 1;
        for (std::size_t i = 0; i < shifts.size() && prod != 0; ++i) {
            const FieldElement y = T.mul(T.add(x, shifts[i]), inv_units[i]);
            prod *= fiber[T.packed(y)];
        }
        total += prod;
    }
    return total;
}

}  // namespace twozero
