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
#include <string>
#include <vector>

#include "twozero/errors.hpp"

namespace twozero {

/// Polynomial over GF(p), stored as its coefficient sequence with the
/// constant term first: {3, 1, 1} is x^2 + x + 3.  The same comma-separated
/// format ("3,1,1") is used on the CLI and in JSON reports.
using Poly = std::vector<int>;

std::string poly_to_string(const Poly& f);
Poly poly_from_string(const std::string& text, std::int64_t p);

bool is_prime(std::int64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Default cap on the field size r: log/antilog tables are O(r) and every
/// algorithm in this library is O(r) or O(r^2), so this keeps runs at desk
/// scale.
inline constexpr std::uint64_t kDefaultFieldSizeCap = std::uint64_t{1} << 22;

/// Smallest monic primitive polynomial of the given degree over GF(p).
/// "Smallest" compares coefficient tuples from the highest non-leading
/// coefficient down to the constant term, so the result is deterministic.
/// A candidate is accepted iff the residue class of x has multiplicative
/// order exactly p^degree - 1, which implies irreducibility.
Poly find_primitive_poly(std::int64_t p, int degree,
                         std::uint64_t size_cap = kDefaultFieldSizeCap);

/// An element of GF(r) in logarithmic representation: either zero or an
/// exponent k meaning alpha^k, with k always reduced modulo r-1.
class FieldElement {
public:
    constexpr FieldElement() = default;

    static constexpr FieldElement zero() { return FieldElement(); }
    static constexpr FieldElement from_exponent(std::uint32_t k) {
        FieldElement e;
        e.exp_ = k;
        return e;
    }

    constexpr bool is_zero() const { return exp_ == kZeroTag; }
    std::uint32_t exponent() const;  // throws std::invalid_argument on zero

    friend constexpr bool operator==(FieldElement a, FieldElement b) = default;

private:
    static constexpr std::uint32_t kZeroTag = 0xffffffffu;
    std::uint32_t exp_ = kZeroTag;
};

enum class ResidueClass { kZero, kSquare, kNonSquare };

struct FieldParams {
    std::int64_t p = 0;
    int s = 0;
    int m = 0;
    Poly modulus;  // monic primitive polynomial of degree s*m over GF(p)
};

// The tower GF(p) < GF(q = p^s) < GF(r = q^m) with a fixed primitive element
// alpha = the residue class of x modulo a primitive polynomial.
//
// Elements live in two coordinates systems:
//   * exponent: FieldElement, zero or k with x = alpha^k (fast multiplication)
//   * packed:   an integer in [0, r) whose base-p digits are the coefficient
//               vector of the element over GF(p) (fast addition)
// The antilog table maps exponent -> packed, the log table packed -> exponent.
// Subfield elements of GF(q) are ordinary GF(r) elements whose exponent is a
// multiple of (r-1)/(q-1); there is no separate small-field type.
//
// A FieldTower is immutable after construction; every member function is a
// pure read and safe to call concurrently.
class FieldTower {
public:
    FieldTower(std::int64_t p, int s, int m,
               std::optional<Poly> modulus = std::nullopt,
               std::uint64_t size_cap = kDefaultFieldSizeCap);

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    const FieldParams& params() const { return params_; }
    std::int64_t p() const { return params_.p; }
    int s() const { return params_.s; }
    int m() const { return params_.m; }
    int sm() const { return sm_; }
    std::int64_t q() const { return q_; }
    std::int64_t r() const { return r_; }
    /// Group order r - 1.
    std::int64_t order() const { return r_ - 1; }
    /// (r-1)/(q-1), the exponent step of the subfield GF(q)*.
    std::int64_t subfield_step() const { return (r_ - 1) / (q_ - 1); }

    FieldElement zero() const { return FieldElement::zero(); }
    FieldElement one() const { return FieldElement::from_exponent(0); }
    FieldElement alpha() const { return alpha_pow(1); }
    /// alpha^k for any integer k (reduced modulo r-1).
    FieldElement alpha_pow(std::int64_t k) const;
    /// Element of the prime field GF(p) with value c mod p.
    FieldElement from_int(std::int64_t c) const;

    FieldElement from_packed(std::uint32_t packed) const;
    std::uint32_t packed(FieldElement e) const;
    FieldElement from_coeffs(const Poly& coeffs) const;
    Poly coeffs(FieldElement e) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;  // throws on zero
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::int64_t k) const;

    /// Exponent of a nonzero element: alpha^result == x.
    std::uint32_t discrete_log(FieldElement x) const;

    bool in_subfield(FieldElement x) const;
    ResidueClass residue(FieldElement x) const;

    /// Tr_{r/q}(x) = sum of x^{q^i}, i = 0..m-1.  Result lies in GF(q).
    FieldElement trace_to_subfield(FieldElement x) const;
    /// Tr_{r/p}(x) as an integer in [0, p).
    std::int64_t trace_to_prime(FieldElement x) const;

    /// Cyclotomic class alpha^i <alpha^N>, ascending by exponent.
    /// Requires N | r-1.
    std::vector<FieldElement> cyclotomic_class(std::int64_t N, std::int64_t i) const;

    /// Packed-domain addition, exposed for table-driven sweeps.
    std::uint32_t add_packed(std::uint32_t a, std::uint32_t b) const;

private:
    void build_tables(std::uint64_t size_cap);

    FieldParams params_;
    int sm_ = 0;
    std::int64_t q_ = 0;
    std::int64_t r_ = 0;
    std::vector<std::uint64_t> pow_p_;      // p^i for packing
    std::vector<std::uint32_t> antilog_;    // exponent -> packed, size r-1
    std::vector<std::uint32_t> log_;        // packed -> exponent, size r
};

}  // namespace twozero
