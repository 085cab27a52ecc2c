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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twozero/ffield.hpp"

namespace twozero {

// Exact value of a sum of canonical additive characters
//   chi(x) = exp(2*pi*i * Tr_{r/p}(x) / p)
// over a finite multiset of field elements, stored as the histogram of
// prime-trace values: coeffs[t] = number of summands with trace t, i.e. the
// value is sum_t coeffs[t] * zeta^t for zeta a primitive p-th root of unity.
//
// Histograms are kept in canonical form (entry p-1 subtracted from all
// entries, so the last entry is 0); this quotients out the vanishing sum
// 1 + zeta + ... + zeta^{p-1} = 0, making equality of canonical forms exact
// value equality.  Everything stays in integer arithmetic; no floating point
// and no tolerances anywhere downstream.
class CyclotomicIntegerValue {
public:
    CyclotomicIntegerValue(std::int64_t p, std::vector<std::int64_t> coeffs);

    static CyclotomicIntegerValue zero(std::int64_t p);
    static CyclotomicIntegerValue from_integer(std::int64_t p, std::int64_t v);

    std::int64_t prime() const { return p_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// Galois-invariance test: the value is rational iff the histogram is
    /// uniform across entries 1..p-1 (all zero in canonical form).
    bool is_rational() const;
    /// coeffs[0] - coeffs[1]; requires is_rational().
    std::int64_t rational_value() const;

    CyclotomicIntegerValue& operator+=(const CyclotomicIntegerValue& other);
    friend CyclotomicIntegerValue operator+(CyclotomicIntegerValue a,
                                            const CyclotomicIntegerValue& b) {
        a += b;
        return a;
    }
    /// c times this value.
    CyclotomicIntegerValue scaled(std::int64_t c) const;

    friend bool operator==(const CyclotomicIntegerValue&,
                           const CyclotomicIntegerValue&) = default;

private:
    void canonicalize();

    std::int64_t p_;
    std::vector<std::int64_t> coeffs_;  // canonical, size p
};

/// Exact rational with denominator 1 or 2 (denominator 2 only for odd
/// numerators), the value domain of the order-2 Gaussian period closed form.
struct RationalHalfInteger {
    std::int64_t num = 0;
    std::int64_t den = 1;

    RationalHalfInteger() = default;
    RationalHalfInteger(std::int64_t numerator, std::int64_t denominator);

    std::string to_string() const;

    friend bool operator==(const RationalHalfInteger&, const RationalHalfInteger&) = default;
};

/// Exact sum of chi over the given elements (chi(0) = 1; empty set -> 0).
CyclotomicIntegerValue character_sum(const FieldTower& tower,
                                     std::span<const FieldElement> elements);

/// Gaussian period of order N and index i: the character sum over the
/// cyclotomic class alpha^i <alpha^N>.  Requires N | r-1.
CyclotomicIntegerValue gaussian_period(const FieldTower& tower, std::int64_t N,
                                       std::int64_t i);

struct GaussianPairN2 {
    RationalHalfInteger eta0;
    RationalHalfInteger eta1;  // always -1 - eta0
};

/// Closed form for the two Gaussian periods of order 2 over GF(p^{s*m}).
/// Requires p odd.  Returns nullopt when s*m is odd: in that case sqrt(r) is
/// irrational (and for p = 3 mod 4 the expression is not even real), so the
/// value is not a rational half-integer and callers should fall back to the
/// exact character sum.
std::optional<GaussianPairN2> gaussian_period_closed_form_n2(std::int64_t p, int s, int m);

}  // namespace twozero
