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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "twozero/codes.hpp"

using namespace twozero;

namespace {

const std::map<std::int64_t, std::int64_t> kGolden49 = {
    {0, 1}, {12, 72}, {16, 72}, {18, 264}, {20, 864}, {22, 864}, {24, 264}};

const std::map<std::int64_t, std::int64_t> kGolden169 = {
    {0, 1},      {24, 252},   {28, 252},  {36, 3444},
    {38, 10584}, {40, 10584}, {42, 3444}};

FieldElement by_index(const FieldTower& T, std::int64_t idx) {
    return idx == 0 ? T.zero()
                    : FieldElement::from_exponent(static_cast<std::uint32_t>(idx - 1));
}

// Oracle for the class-sum term: the raw double sum over explicit class
// members, independent of the period cache and coset rotation used by the
// implementation.
CyclotomicIntegerValue oracle_double_sum(const CodeParams& P, FieldElement a,
                                         FieldElement b) {
    const FieldTower& T = *P.tower;
    std::vector<std::int64_t> hist(T.p(), 0);
    for (std::int64_t i = 0; i < P.e; ++i) {
        const FieldElement t = T.add(a, T.mul(T.pow(P.beta, i), b));
        const std::int64_t cls_index = static_cast<std::int64_t>(P.g_exp) * i;
        for (const auto& z : T.cyclotomic_class(P.f, cls_index))
            hist[T.trace_to_prime(T.mul(t, z))] += 1;
    }
    return CyclotomicIntegerValue(T.p(), hist);
}

}  // namespace

TEST_CASE("build_code_params validates and computes the derived quantities") {
    FieldTower T(7, 1, 2);

    const auto P = build_code_params(T, 3, 3);
    CHECK(P.n == 24);
    CHECK(P.f == 2);
    CHECK(P.g == T.alpha_pow(2));
    CHECK(P.beta == T.alpha_pow(16));
    CHECK(T.in_subfield(P.beta));
    CHECK(T.pow(P.beta, 3) == T.one());
    // 1 + beta + beta^2 = 0 for the order-3 beta
    CHECK(T.add(T.one(), T.add(P.beta, T.mul(P.beta, P.beta))).is_zero());

    const auto P6 = build_code_params(T, 6, 3);
    CHECK(P6.n == 48);
    CHECK(P6.f == 1);

    CHECK_THROWS_WITH_AS(build_code_params(T, 4, 3), "e does not divide h",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_code_params(T, 5, 1), "h does not divide q-1",
                         std::invalid_argument);
    CHECK_THROWS_AS(build_code_params(T, 0, 1), std::invalid_argument);
}

TEST_CASE("codeword basics") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);

    const Codeword zero_word = codeword(P, T.zero(), T.zero());
    CHECK(zero_word.size() == 24);
    CHECK(hamming_weight(zero_word) == 0);

    // coordinates lie in the subfield
    const Codeword w = codeword(P, T.alpha_pow(5), T.alpha_pow(11));
    for (const auto& c : w) CHECK(T.in_subfield(c));

    // linearity: c(a,b) + c(a',b') = c(a+a', b+b')
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::int64_t> pick(0, T.r() - 1);
    for (int t = 0; t < 50; ++t) {
        const FieldElement a = by_index(T, pick(rng)), b = by_index(T, pick(rng));
        const FieldElement a2 = by_index(T, pick(rng)), b2 = by_index(T, pick(rng));
        const Codeword w1 = codeword(P, a, b);
        const Codeword w2 = codeword(P, a2, b2);
        const Codeword ws = codeword(P, T.add(a, a2), T.add(b, b2));
        for (std::size_t i = 0; i < ws.size(); ++i)
            CHECK(ws[i] == T.add(w1[i], w2[i]));
    }

    // every nonzero codeword weight is one of the example's six values
    std::set<std::int64_t> weights;
    for (std::int64_t ai = 0; ai < T.r(); ++ai)
        for (std::int64_t bi = 0; bi < T.r(); ++bi) {
            if (ai == 0 && bi == 0) continue;
            weights.insert(hamming_weight(codeword(P, by_index(T, ai), by_index(T, bi))));
        }
    CHECK(weights == std::set<std::int64_t>{12, 16, 18, 20, 22, 24});
}

TEST_CASE("golden weight distribution over GF(49)") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);

    const auto dist = enumerate_weight_distribution(P);
    CHECK(dist.counts == kGolden49);
    CHECK(dist.n == 24);
    CHECK(dist.dimension == 4);  // 2m
    CHECK(dist.min_nonzero_weight() == 12);
    CHECK(dist.total() == 49 * 49);

    const auto predicted = predict_weight_distribution(P);
    CHECK(predicted.counts == kGolden49);
    CHECK(predicted.n == 24);
    CHECK(predicted.dimension == 4);
}

TEST_CASE("enumeration is independent of the thread count") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);
    EnumerateOptions one, four;
    one.jobs = 1;
    four.jobs = 4;
    CHECK(enumerate_weight_distribution(P, one).counts ==
          enumerate_weight_distribution(P, four).counts);
}

TEST_CASE("enumeration respects the work cap") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);
    EnumerateOptions opts;
    opts.work_cap = 100;  // far below 49*49*24
    CHECK_THROWS_AS(enumerate_weight_distribution(P, opts), WorkCapError);
}

TEST_CASE("weight distribution for q = 13 matches the frozen table") {
    FieldTower T(13, 1, 2);
    const auto P = build_code_params(T, 3, 3);
    CHECK(enumerate_weight_distribution(P).counts == kGolden169);
    CHECK(predict_weight_distribution(P).counts == kGolden169);
}

TEST_CASE("zero counts: direct route") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);

    CHECK(zero_count_direct(P, T.zero(), T.zero()) == 24);

    // a + b = 0: the other two shifts are b(beta - 1) and b(beta^2 - 1), and
    // beta - 1, beta^2 - 1 are subfield elements, hence squares.  So b square
    // puts the pair in the one-zero-two-squares class (weight 12 row) and b
    // nonsquare in the one-zero-two-nonsquares class (weight 16 row).
    const FieldElement bsq = T.alpha_pow(2);
    CHECK(classify_codeword(P, T.neg(bsq), bsq) == PartitionLabel::kOneZeroTwoSquares);
    CHECK(zero_count_direct(P, T.neg(bsq), bsq) == 24 - 12);

    const FieldElement bns = T.alpha();
    CHECK(classify_codeword(P, T.neg(bns), bns) ==
          PartitionLabel::kOneZeroTwoNonSquares);
    CHECK(zero_count_direct(P, T.neg(bns), bns) == 24 - 16);

    // direct count always equals n - weight
    for (std::int64_t ai = 0; ai < T.r(); ++ai)
        for (std::int64_t bi = 0; bi < T.r(); ++bi) {
            const FieldElement x = by_index(T, ai), y = by_index(T, bi);
            CHECK(zero_count_direct(P, x, y) ==
                  P.n - hamming_weight(codeword(P, x, y)));
        }
}

TEST_CASE("class sums match the raw double-sum oracle") {
    FieldTower T(7, 1, 2);
    for (std::int64_t h : {3, 6}) {
        const auto P = build_code_params(T, h, 3);
        for (std::int64_t ai = 0; ai < T.r(); ++ai)
            for (std::int64_t bi = 0; bi < T.r(); ++bi) {
                const FieldElement a = by_index(T, ai), b = by_index(T, bi);
                CHECK(shifted_class_sum(P, a, b) == oracle_double_sum(P, a, b));
            }
    }
}

TEST_CASE("class sum frozen values over GF(49)") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);

    // (0,0): e * (r-1)/f summands of chi(0)
    CHECK(shifted_class_sum(P, T.zero(), T.zero()).rational_value() == 72);

    // a pair with all three shifts square: value 3*eta0 = 9, zero count 6
    bool found_uniform = false, found_pair = false;
    for (std::int64_t ai = 0; ai < T.r() && !(found_uniform && found_pair); ++ai) {
        for (std::int64_t bi = 0; bi < T.r(); ++bi) {
            const FieldElement a = by_index(T, ai), b = by_index(T, bi);
            if (ai == 0 && bi == 0) continue;
            const auto label = classify_codeword(P, a, b);
            if (label == PartitionLabel::kThreeSquares && !found_uniform) {
                CHECK(shifted_class_sum(P, a, b).rational_value() == 9);
                CHECK(zero_count_formula(P, a, b) == 6);
                CHECK(hamming_weight(codeword(P, a, b)) == 18);
                found_uniform = true;
            }
            if (label == PartitionLabel::kOneZeroTwoSquares && !found_pair) {
                CHECK(shifted_class_sum(P, a, b).rational_value() == 24 + 2 * 3);
                found_pair = true;
            }
        }
    }
    CHECK(found_uniform);
    CHECK(found_pair);
}

TEST_CASE("zero-count formula equals the direct count") {
    FieldTower T(7, 1, 2);
    // inside the closed-form regime (f = 2) and outside it (h = 6 gives f = 1)
    for (std::int64_t h : {3, 6}) {
        const auto P = build_code_params(T, h, 3);
        CHECK(zero_count_formula(P, T.zero(), T.zero()) == P.n);
        for (std::int64_t ai = 0; ai < T.r(); ++ai)
            for (std::int64_t bi = 0; bi < T.r(); ++bi) {
                const FieldElement a = by_index(T, ai), b = by_index(T, bi);
                CHECK(zero_count_formula(P, a, b) == zero_count_direct(P, a, b));
            }
    }
}

TEST_CASE("zero-count formula with alternating class indices") {
    // h = 4, e = 4 over GF(169): (q-1)/h = 3 is odd, so the class index
    // (q-1)i/h mod f alternates 0,1,0,1 across the four terms instead of
    // collapsing to 0.  The formula must still match the direct count.
    FieldTower T(13, 1, 2);
    const auto P = build_code_params(T, 4, 4);
    CHECK(P.f == 2);
    CHECK(P.n == 56);
    for (std::int64_t ai = 0; ai < T.r(); ++ai)
        for (std::int64_t bi = 0; bi < T.r(); ++bi) {
            const FieldElement a = by_index(T, ai), b = by_index(T, bi);
            REQUIRE(zero_count_formula(P, a, b) == zero_count_direct(P, a, b));
        }
    // and against the raw double-sum oracle on a sample
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::int64_t> pick(0, T.r() - 1);
    for (int t = 0; t < 200; ++t) {
        const FieldElement a = by_index(T, pick(rng)), b = by_index(T, pick(rng));
        CHECK(shifted_class_sum(P, a, b) == oracle_double_sum(P, a, b));
    }
    const auto dist = enumerate_weight_distribution(P);
    CHECK(dist.total() == T.r() * T.r());
}

TEST_CASE("partition census matches the closed-form counts") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);
    CHECK(classify_codeword(P, T.zero(), T.zero()) == PartitionLabel::kZeroPair);

    const auto census = partition_census(P);
    CHECK(census.at(PartitionLabel::kZeroPair) == 1);
    CHECK(census.at(PartitionLabel::kOneZeroTwoSquares) == 72);
    CHECK(census.at(PartitionLabel::kOneZeroTwoNonSquares) == 72);
    CHECK(census.at(PartitionLabel::kThreeSquares) == 264);
    CHECK(census.at(PartitionLabel::kThreeNonSquares) == 264);
    CHECK(census.at(PartitionLabel::kTwoSquaresOneNonSquare) == 864);
    CHECK(census.at(PartitionLabel::kOneSquareTwoNonSquares) == 864);
    std::int64_t total = 0;
    for (const auto& [l, c] : census) total += c;
    CHECK(total == 49 * 49);
}

TEST_CASE("scaling by alpha swaps the partner classes") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);
    const FieldElement alpha = T.alpha();
    auto partner = [](PartitionLabel l) {
        switch (l) {
            case PartitionLabel::kZeroPair: return PartitionLabel::kZeroPair;
            case PartitionLabel::kOneZeroTwoSquares:
                return PartitionLabel::kOneZeroTwoNonSquares;
            case PartitionLabel::kOneZeroTwoNonSquares:
                return PartitionLabel::kOneZeroTwoSquares;
            case PartitionLabel::kThreeSquares: return PartitionLabel::kThreeNonSquares;
            case PartitionLabel::kThreeNonSquares: return PartitionLabel::kThreeSquares;
            case PartitionLabel::kTwoSquaresOneNonSquare:
                return PartitionLabel::kOneSquareTwoNonSquares;
            case PartitionLabel::kOneSquareTwoNonSquares:
                return PartitionLabel::kTwoSquaresOneNonSquare;
        }
        return PartitionLabel::kZeroPair;
    };
    for (std::int64_t ai = 0; ai < T.r(); ++ai)
        for (std::int64_t bi = 0; bi < T.r(); ++bi) {
            const FieldElement a = by_index(T, ai), b = by_index(T, bi);
            CHECK(classify_codeword(P, T.mul(alpha, a), T.mul(alpha, b)) ==
                  partner(classify_codeword(P, a, b)));
        }
}

TEST_CASE("classification is rejected outside the e=3, f=2 regime") {
    FieldTower T(7, 1, 2);
    const auto P6 = build_code_params(T, 6, 3);  // f = 1
    CHECK_THROWS_AS(classify_codeword(P6, T.one(), T.one()), std::domain_error);
}

TEST_CASE("closed-form predictions reject out-of-hypothesis parameters") {
    FieldTower T3(7, 1, 3);  // gcd(3, 6) = 3 != 2
    const auto P = build_code_params(T3, 3, 3);
    CHECK(P.f == 3);
    CHECK_THROWS_WITH_AS(predict_weight_distribution(P),
                         "gcd(m, e(q-1)/h) = 3, closed form requires 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(predict_class_sum_distribution(P), std::invalid_argument);

    FieldTower T(7, 1, 2);
    const auto P1 = build_code_params(T, 1, 1);
    CHECK_THROWS_AS(predict_weight_distribution(P1), std::invalid_argument);
}

TEST_CASE("predicted frequencies always sum to r^2") {
    for (auto [p, h] : {std::tuple<std::int64_t, std::int64_t>{7, 3},
                        {13, 3}, {13, 6}, {19, 3}, {19, 9}, {31, 3}, {31, 15}}) {
        FieldTower T(p, 1, 2);
        const auto P = build_code_params(T, h, 3);
        const auto predicted = predict_weight_distribution(P);
        CHECK(predicted.total() == T.r() * T.r());
    }
}

TEST_CASE("class-sum census equals the closed-form table over GF(49)") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);
    const auto census = class_sum_census(P);
    const auto predicted = predict_class_sum_distribution(P);
    CHECK(census == predicted);
    // spot values: 3(r-1)/2 has frequency 1; 3*eta0 = 9 has frequency 264
    CHECK(predicted.at(72) == 1);
    CHECK(predicted.at(9) == 264);
}

TEST_CASE("weights are divisible by the table gcd") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 3, 3);
    const auto dist = enumerate_weight_distribution(P);
    std::int64_t g = 0;
    for (const auto& [w, c] : predict_weight_distribution(P).counts)
        if (w > 0) g = std::gcd(g, w);
    CHECK(g == 2);
    for (const auto& [w, c] : dist.counts) CHECK(w % g == 0);
}

TEST_CASE("degenerate e = 1 collapses the kernel") {
    FieldTower T(7, 1, 2);
    const auto P = build_code_params(T, 1, 1);  // beta = 1
    CHECK(P.beta == T.one());
    // c(a, b) depends only on a + b, so the zero word appears r times
    const auto dist = enumerate_weight_distribution(P);
    CHECK(dist.counts.at(0) == T.r());
    CHECK(dist.dimension == 2);  // 2m - m
    CHECK(dist.total() == T.r() * T.r());
}

TEST_CASE("weight data does not depend on the primitive element choice") {
    // x^2 + x + 3 (the default) and x^2 + 2x + 3 give different generators of
    // GF(49)*, but the code is the same up to coordinate relabeling
    FieldTower T1(7, 1, 2, Poly{3, 1, 1});
    FieldTower T2(7, 1, 2, Poly{3, 2, 1});
    const auto P1 = build_code_params(T1, 3, 3);
    const auto P2 = build_code_params(T2, 3, 3);
    CHECK(enumerate_weight_distribution(P1).counts ==
          enumerate_weight_distribution(P2).counts);
    CHECK(class_sum_census(P1) == class_sum_census(P2));
    CHECK(partition_census(P1) == partition_census(P2));
}

TEST_CASE("tiny field edge: q = r = 2") {
    FieldTower T(2, 1, 1);
    const auto P = build_code_params(T, 1, 1);
    CHECK(P.n == 1);
    const auto dist = enumerate_weight_distribution(P);
    CHECK(dist.total() == 4);
}
