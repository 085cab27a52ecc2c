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
#include <map>
#include <vector>

#include "twozero/charsum.hpp"
#include "twozero/ffield.hpp"

namespace twozero {

// Parameters of the trace-defined code over GF(q) with q = p^s, r = q^m:
// pick h | q-1 and e | h, set g = alpha^{(q-1)/h}, beta = alpha^{(r-1)/e},
// n = h(r-1)/(q-1), and take the codewords
//   c(a, b) = ( Tr_{r/q}(a g^i + b (beta g)^i) )_{i=0..n-1},  a, b in GF(r).
//
// Every invariant is checked at construction: the divisibility conditions,
// that g has order exactly n, that beta has order exactly e and lies in GF(q)
// and in <g>.  f = gcd(m, e(q-1)/h) is the cyclotomic-class order that the
// zero-count formula sums over; the f Gaussian periods of that order are
// computed once here (exhaustively, exact) and cached.
struct CodeParams {
    const FieldTower* tower = nullptr;  // non-owning; must outlive the params
    std::int64_t h = 0;
    std::int64_t e = 0;
    std::int64_t n = 0;
    std::int64_t f = 0;
    FieldElement g;
    FieldElement beta;
    std::uint32_t g_exp = 0;     // (q-1)/h
    std::uint32_t beta_exp = 0;  // (r-1)/e
    std::vector<CyclotomicIntegerValue> periods_f;  // order-f Gaussian periods
};

CodeParams build_code_params(const FieldTower& tower, std::int64_t h, std::int64_t e);

using Codeword = std::vector<FieldElement>;  // length n, entries in GF(q)

Codeword codeword(const CodeParams& params, FieldElement a, FieldElement b);

std::int64_t hamming_weight(const Codeword& w);

struct WeightDistribution {
    std::int64_t n = 0;
    std::int64_t dimension = 0;  // log_q of the number of distinct codewords
    std::map<std::int64_t, std::int64_t> counts;  // weight -> frequency, ascending

    std::int64_t total() const;
    std::int64_t min_nonzero_weight() const;  // 0 when there is none
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 34;

struct EnumerateOptions {
    std::uint64_t work_cap = kDefaultEnumerationCap;  // bound on r^2 * n
    int jobs = 0;                                     // 0 = hardware concurrency
};

/// Exact weight distribution over all r^2 pairs (a, b).  Deterministic,
/// byte-for-byte identical regardless of the number of worker threads.
/// Throws WorkCapError when r^2 * n exceeds the work cap.
WeightDistribution enumerate_weight_distribution(const CodeParams& params,
                                                 const EnumerateOptions& opts = {});

/// Number of zero coordinates of c(a, b), counted from the definition:
/// #{x in <g> : Tr_{r/q}(a x + beta^{log_g x} b x) = 0}.
std::int64_t zero_count_direct(const CodeParams& params, FieldElement a, FieldElement b);

/// The exact character-sum term of the zero-count formula,
///   sum_{i<e} sum_{z in C^{(f,r)}_{(q-1)i/h}} chi((a + beta^i b) z),
/// evaluated through the cached order-f Gaussian periods (scaling a class by
/// a nonzero t permutes it onto the class of index shifted by log t).
CyclotomicIntegerValue shifted_class_sum(const CodeParams& params, FieldElement a,
                                         FieldElement b);

/// Closed-route zero count: n/q + (h f / (e q)) * shifted_class_sum.
/// Asserts that the exact value is a rational integer and returns it.
std::int64_t zero_count_formula(const CodeParams& params, FieldElement a, FieldElement b);

// Classification of a pair (a, b) by the quadratic-residue pattern of the
// three shifted values a + b, a + beta b, a + beta^2 b.  Defined only in the
// regime e = 3, f = 2 where these six patterns (plus the zero pair) partition
// GF(r)^2; the pattern "one zero, one square, one nonsquare" cannot occur
// there and is reported as an internal error.
enum class PartitionLabel {
    kZeroPair,
    kOneZeroTwoSquares,
    kOneZeroTwoNonSquares,
    kThreeSquares,
    kTwoSquaresOneNonSquare,
    kOneSquareTwoNonSquares,
    kThreeNonSquares,
};

const char* partition_label_name(PartitionLabel label);

PartitionLabel classify_codeword(const CodeParams& params, FieldElement a, FieldElement b);

/// Exhaustive census of classify_codeword over all r^2 pairs.
std::map<PartitionLabel, std::int64_t> partition_census(const CodeParams& params);

/// Closed-form weight distribution for the regime e = 3, 3 | h, f = 2.
/// Rejects out-of-hypothesis parameters with a message naming the failed
/// condition.
WeightDistribution predict_weight_distribution(const CodeParams& params);

/// Closed-form distribution of the shifted-class-sum values (exact integer
/// value -> frequency) in the same regime, built from the order-2 Gaussian
/// period closed form.
std::map<std::int64_t, std::int64_t> predict_class_sum_distribution(const CodeParams& params);

/// Exhaustive census of shifted_class_sum over all r^2 pairs.  Every value in
/// range must be rational (asserted).
std::map<std::int64_t, std::int64_t> class_sum_census(const CodeParams& params);

}  // namespace twozero
