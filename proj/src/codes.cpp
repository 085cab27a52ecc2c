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

#include "twozero/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace twozero {

namespace {

// Verifies (not assumes) that alpha^exp has multiplicative order `expected`:
// checks x^expected = 1 and x^{expected/ell} != 1 for every prime ell.
void check_order(const FieldTower& tower, std::uint32_t exp, std::int64_t expected,
                 const char* what) {
    const FieldElement x = FieldElement::from_exponent(exp);
    if (!(tower.pow(x, expected) == tower.one()))
        throw std::logic_error(std::string("order check failed for ") + what);
    for (std::int64_t ell : prime_factors(expected)) {
        if (tower.pow(x, expected / ell) == tower.one())
            throw std::logic_error(std::string("order check failed for ") + what);
    }
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Exact division with a sanity check; these quantities are integral by
// construction, so a remainder signals a bug.
std::int64_t exact_div(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0) throw std::logic_error("inexact division");
    return a / b;
}

std::int64_t ipow(std::int64_t base, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

CodeParams build_code_params(const FieldTower& tower, std::int64_t h, std::int64_t e) {
    const std::int64_t q = tower.q();
    const std::int64_t M = tower.order();
    if (h < 1 || e < 1)
        throw std::invalid_argument("h and e must be positive");
    if (h % e != 0)
        throw std::invalid_argument("e does not divide h");
    if ((q - 1) % h != 0)
        throw std::invalid_argument("h does not divide q-1");

    CodeParams P;
    P.tower = &tower;
    P.h = h;
    P.e = e;
    P.g_exp = static_cast<std::uint32_t>(((q - 1) / h) % M);  // reduced: m=1, h=1 gives g=1
    P.beta_exp = static_cast<std::uint32_t>((M / e) % M);     // reduced: e=1 gives beta=1
    P.n = exact_div(h * M, q - 1);
    P.g = tower.alpha_pow(P.g_exp);
    P.beta = tower.alpha_pow(P.beta_exp);
    P.f = gcd64(tower.m(), e * (q - 1) / h);

    check_order(tower, P.g_exp, P.n, "g");
    check_order(tower, P.beta_exp, e, "beta");
    if (!tower.in_subfield(P.beta))
        throw std::logic_error("beta does not lie in GF(q)");
    if (P.g_exp == 0 ? P.beta_exp != 0 : P.beta_exp % P.g_exp != 0)
        throw std::logic_error("beta does not lie in <g>");
    if (P.n * ((q - 1) / h) != M)
        throw std::logic_error("n * (q-1)/h != r-1");
    if (M % P.f != 0)
        throw std::logic_error("f does not divide r-1");

    P.periods_f.reserve(static_cast<std::size_t>(P.f));
    for (std::int64_t i = 0; i < P.f; ++i)
        P.periods_f.push_back(gaussian_period(tower, P.f, i));
    return P;
}

Codeword codeword(const CodeParams& params, FieldElement a, FieldElement b) {
    const FieldTower& T = *params.tower;
    const FieldElement bg = T.mul(params.beta, params.g);
    Codeword out;
    out.reserve(static_cast<std::size_t>(params.n));
    FieldElement gx = T.one();
    FieldElement bgx = T.one();
    for (std::int64_t i = 0; i < params.n; ++i) {
        out.push_back(T.trace_to_subfield(T.add(T.mul(a, gx), T.mul(b, bgx))));
        gx = T.mul(gx, params.g);
        bgx = T.mul(bgx, bg);
    }
    return out;
}

std::int64_t hamming_weight(const Codeword& w) {
    return std::count_if(w.begin(), w.end(),
                         [](FieldElement c) { return !c.is_zero(); });
}

std::int64_t WeightDistribution::total() const {
    std::int64_t t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::int64_t WeightDistribution::min_nonzero_weight() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    return 0;
}

WeightDistribution enumerate_weight_distribution(const CodeParams& params,
                                                 const EnumerateOptions& opts) {
    const FieldTower& T = *params.tower;
    const std::int64_t r = T.r();
    const std::int64_t M = T.order();
    const std::int64_t q = T.q();
    const std::int64_t n = params.n;

    const unsigned __int128 work =
        static_cast<unsigned __int128>(r) * static_cast<unsigned __int128>(r) *
        static_cast<unsigned __int128>(n);
    if (work > opts.work_cap)
        throw WorkCapError(
            "enumeration work cap exceeded (r^2 * n > cap); raise the work cap "
            "or use the closed-form prediction");

    // Coordinate i of c(a,b) is Tr(a g^i) + Tr(b (beta g)^i), a sum inside
    // GF(q).  Precompute the subfield trace of every alpha^k as a dense small
    // id, plus a small negation table; a coordinate is zero iff the two ids
    // are negatives of each other.
    const std::int64_t step = T.subfield_step();
    std::vector<std::uint32_t> small_of_packed(static_cast<std::size_t>(r), 0);
    {
        std::vector<std::uint32_t> subfield_packed;
        subfield_packed.reserve(static_cast<std::size_t>(q));
        subfield_packed.push_back(0);
        for (std::int64_t k = 0; k < q - 1; ++k)
            subfield_packed.push_back(T.packed(T.alpha_pow(k * step)));
        std::sort(subfield_packed.begin(), subfield_packed.end());
        for (std::size_t id = 0; id < subfield_packed.size(); ++id)
            small_of_packed[subfield_packed[id]] = static_cast<std::uint32_t>(id);
    }
    auto small_of = [&](FieldElement x) { return small_of_packed[T.packed(x)]; };

    std::vector<std::uint32_t> neg_small(static_cast<std::size_t>(q), 0);
    {
        neg_small[small_of(T.zero())] = small_of(T.zero());
        for (std::int64_t k = 0; k < q - 1; ++k) {
            const FieldElement x = T.alpha_pow(k * step);
            neg_small[small_of(x)] = small_of(T.neg(x));
        }
    }
    std::vector<std::uint32_t> trq(static_cast<std::size_t>(M), 0);
    for (std::int64_t k = 0; k < M; ++k)
        trq[static_cast<std::size_t>(k)] =
            small_of(T.trace_to_subfield(FieldElement::from_exponent(
                static_cast<std::uint32_t>(k))));

    const std::int64_t wg = params.g_exp;
    const std::int64_t wbg = (params.beta_exp + params.g_exp) % M;

    // a-index 0 means a = 0; index j+1 means a = alpha^j.  Work is split
    // across threads by a-index; merging per-weight counts is associative and
    // commutative, so the result does not depend on the split.
    const int jobs = opts.jobs > 0
                         ? opts.jobs
                         : std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t a_count = M + 1;

    auto sweep_range = [&](std::int64_t lo, std::int64_t hi,
                           std::vector<std::int64_t>& counts) {
        // zero coordinates of the single-summand word with a or b zero
        auto single_zeros = [&](std::int64_t j, std::int64_t w) {
            std::int64_t z = 0;
            std::int64_t t = j;
            for (std::int64_t i = 0; i < n; ++i) {
                if (trq[static_cast<std::size_t>(t)] == 0) ++z;
                t += w;
                if (t >= M) t -= M;
            }
            return z;
        };
        for (std::int64_t ai = lo; ai < hi; ++ai) {
            if (ai == 0) {
                counts[0] += 1;  // (0, 0)
                for (std::int64_t jb = 0; jb < M; ++jb)
                    counts[static_cast<std::size_t>(n - single_zeros(jb, wbg))] += 1;
                continue;
            }
            const std::int64_t ja = ai - 1;
            counts[static_cast<std::size_t>(n - single_zeros(ja, wg))] += 1;  // b = 0
            for (std::int64_t jb = 0; jb < M; ++jb) {
                std::int64_t z = 0;
                std::int64_t ta = ja;
                std::int64_t tb = jb;
                for (std::int64_t i = 0; i < n; ++i) {
                    if (trq[static_cast<std::size_t>(ta)] ==
                        neg_small[trq[static_cast<std::size_t>(tb)]])
                        ++z;
                    ta += wg;
                    if (ta >= M) ta -= M;
                    tb += wbg;
                    if (tb >= M) tb -= M;
                }
                counts[static_cast<std::size_t>(n - z)] += 1;
            }
        }
    };

    std::vector<std::vector<std::int64_t>> partials(
        static_cast<std::size_t>(jobs),
        std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0));
    if (jobs == 1) {
        sweep_range(0, a_count, partials[0]);
    } else {
        std::vector<std::thread> workers;
        const std::int64_t chunk = (a_count + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            const std::int64_t lo = std::min<std::int64_t>(t * chunk, a_count);
            const std::int64_t hi = std::min<std::int64_t>(lo + chunk, a_count);
            workers.emplace_back(sweep_range, lo, hi, std::ref(partials[t]));
        }
        for (auto& w : workers) w.join();
    }

    WeightDistribution dist;
    dist.n = n;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n + 1), 0);
    for (const auto& part : partials)
        for (std::size_t w = 0; w < counts.size(); ++w) counts[w] += part[w];
    for (std::int64_t w = 0; w <= n; ++w)
        if (counts[static_cast<std::size_t>(w)] != 0)
            dist.counts[w] = counts[static_cast<std::size_t>(w)];

    // The map (a,b) -> c(a,b) is GF(q)-linear, so the number of pairs mapping
    // to the zero word is the kernel size, a power of q; the dimension is
    // 2m minus its q-logarithm.
    std::int64_t kernel = dist.counts.at(0);
    std::int64_t kdim = 0;
    while (kernel > 1) {
        if (kernel % q != 0)
            throw std::logic_error("zero-weight frequency is not a power of q");
        kernel /= q;
        ++kdim;
    }
    dist.dimension = 2 * T.m() - kdim;
    return dist;
}

std::int64_t zero_count_direct(const CodeParams& params, FieldElement a,
                               FieldElement b) {
    const FieldTower& T = *params.tower;
    std::int64_t zeros = 0;
    FieldElement x = T.one();           // g^i
    FieldElement bpow = T.one();        // beta^i
    for (std::int64_t i = 0; i < params.n; ++i) {
        const FieldElement val = T.add(T.mul(a, x), T.mul(T.mul(bpow, b), x));
        if (T.trace_to_subfield(val).is_zero()) ++zeros;
        x = T.mul(x, params.g);
        bpow = T.mul(bpow, params.beta);
    }
    return zeros;
}

CyclotomicIntegerValue shifted_class_sum(const CodeParams& params, FieldElement a,
                                         FieldElement b) {
    const FieldTower& T = *params.tower;
    const std::int64_t class_size = T.order() / params.f;
    CyclotomicIntegerValue out = CyclotomicIntegerValue::zero(T.p());
    FieldElement bpow = T.one();  // beta^i
    for (std::int64_t i = 0; i < params.e; ++i) {
        const FieldElement t = T.add(a, T.mul(bpow, b));
        const std::int64_t cls = (static_cast<std::int64_t>(params.g_exp) * i) % params.f;
        if (t.is_zero()) {
            // every summand is chi(0) = 1
            out += CyclotomicIntegerValue::from_integer(T.p(), class_size);
        } else {
            out += params.periods_f[static_cast<std::size_t>(
                (cls + T.discrete_log(t)) % params.f)];
        }
        bpow = T.mul(bpow, params.beta);
    }
    return out;
}

std::int64_t zero_count_formula(const CodeParams& params, FieldElement a,
                                FieldElement b) {
    const CyclotomicIntegerValue Y = shifted_class_sum(params, a, b);
    if (!Y.is_rational())
        throw std::logic_error("zero-count formula produced a non-rational value");
    const std::int64_t y = Y.rational_value();
    const __int128 num = static_cast<__int128>(params.n) * params.e +
                         static_cast<__int128>(params.h) * params.f * y;
    const std::int64_t den = params.e * params.tower->q();
    if (num % den != 0)
        throw std::logic_error("zero-count formula produced a non-integer");
    return static_cast<std::int64_t>(num / den);
}

const char* partition_label_name(PartitionLabel label) {
    switch (label) {
        case PartitionLabel::kZeroPair: return "zero_pair";
        case PartitionLabel::kOneZeroTwoSquares: return "one_zero_two_squares";
        case PartitionLabel::kOneZeroTwoNonSquares: return "one_zero_two_nonsquares";
        case PartitionLabel::kThreeSquares: return "three_squares";
        case PartitionLabel::kTwoSquaresOneNonSquare: return "two_squares_one_nonsquare";
        case PartitionLabel::kOneSquareTwoNonSquares: return "one_square_two_nonsquares";
        case PartitionLabel::kThreeNonSquares: return "three_nonsquares";
    }
    return "?";
}

PartitionLabel classify_codeword(const CodeParams& params, FieldElement a,
                                 FieldElement b) {
    if (params.e != 3 || params.f != 2)
        throw std::domain_error("partition is defined only for e = 3, f = 2");
    const FieldTower& T = *params.tower;
    if (a.is_zero() && b.is_zero()) return PartitionLabel::kZeroPair;

    int zeros = 0, squares = 0, nonsquares = 0;
    FieldElement bpow = T.one();
    for (int i = 0; i < 3; ++i) {
        switch (T.residue(T.add(a, T.mul(bpow, b)))) {
            case ResidueClass::kZero: ++zeros; break;
            case ResidueClass::kSquare: ++squares; break;
            case ResidueClass::kNonSquare: ++nonsquares; break;
        }
        bpow = T.mul(bpow, params.beta);
    }
    if (zeros == 0) {
        if (squares == 3) return PartitionLabel::kThreeSquares;
        if (squares == 2) return PartitionLabel::kTwoSquaresOneNonSquare;
        if (squares == 1) return PartitionLabel::kOneSquareTwoNonSquares;
        return PartitionLabel::kThreeNonSquares;
    }
    if (zeros == 1 && squares == 2) return PartitionLabel::kOneZeroTwoSquares;
    if (zeros == 1 && nonsquares == 2) return PartitionLabel::kOneZeroTwoNonSquares;
    throw std::logic_error(
        "impossible residue pattern (one zero with mixed residues)");
}

std::map<PartitionLabel, std::int64_t> partition_census(const CodeParams& params) {
    const FieldTower& T = *params.tower;
    const std::int64_t M = T.order();
    std::map<PartitionLabel, std::int64_t> census;
    auto elem = [&](std::int64_t idx) {
        return idx == 0 ? T.zero()
                        : FieldElement::from_exponent(static_cast<std::uint32_t>(idx - 1));
    };
    for (std::int64_t ai = 0; ai <= M; ++ai)
        for (std::int64_t bi = 0; bi <= M; ++bi)
            census[classify_codeword(params, elem(ai), elem(bi))] += 1;
    return census;
}

namespace {

void check_table_hypotheses(const CodeParams& params) {
    if (params.e != 3)
        throw std::invalid_argument("closed form requires e = 3 (got e = " +
                                    std::to_string(params.e) + ")");
    if (params.h % 3 != 0)
        throw std::invalid_argument("closed form requires 3 | h (got h = " +
                                    std::to_string(params.h) + ")");
    if (params.f != 2)
        throw std::invalid_argument("gcd(m, e(q-1)/h) = " + std::to_string(params.f) +
                                    ", closed form requires 2");
}

}  // namespace

WeightDistribution predict_weight_distribution(const CodeParams& params) {
    check_table_hypotheses(params);
    const FieldTower& T = *params.tower;
    const std::int64_t q = T.q();
    const std::int64_t r = T.r();
    const std::int64_t m = T.m();
    const std::int64_t h = params.h;
    const std::int64_t A = ipow(q, m - 1);
    const std::int64_t B = ipow(q, (m - 2) / 2);  // f = 2 forces m even

    const std::int64_t freq_pair = exact_div(3 * (r - 1), 2);
    const std::int64_t freq_uniform = exact_div((r - 1) * (r - 5), 8);
    const std::int64_t freq_mixed = exact_div(3 * (r - 1) * (r - 1), 8);

    WeightDistribution out;
    out.n = params.n;
    out.dimension = 2 * m;
    out.counts[0] += 1;
    out.counts[exact_div(2 * h, 3) * (A + B)] += freq_pair;
    out.counts[exact_div(2 * h, 3) * (A - B)] += freq_pair;
    out.counts[h * (A + B)] += freq_uniform;
    out.counts[h * (A - B)] += freq_uniform;
    out.counts[exact_div(h, 3) * (3 * A + B)] += freq_mixed;
    out.counts[exact_div(h, 3) * (3 * A - B)] += freq_mixed;
    return out;
}

std::map<std::int64_t, std::int64_t> predict_class_sum_distribution(
    const CodeParams& params) {
    check_table_hypotheses(params);
    const FieldTower& T = *params.tower;
    const std::int64_t r = T.r();
    const auto cf = gaussian_period_closed_form_n2(T.p(), T.s(), T.m());
    if (!cf)
        throw std::logic_error("order-2 closed form unavailable in-regime");
    if (cf->eta0.den != 1 || cf->eta1.den != 1)
        throw std::logic_error("order-2 periods are not integers in-regime");
    const std::int64_t eta0 = cf->eta0.num;
    const std::int64_t eta1 = cf->eta1.num;

    std::map<std::int64_t, std::int64_t> out;
    out[exact_div(3 * (r - 1), 2)] += 1;
    out[exact_div(r - 1, 2) + 2 * eta0] += exact_div(3 * (r - 1), 2);
    out[exact_div(r - 1, 2) + 2 * eta1] += exact_div(3 * (r - 1), 2);
    out[3 * eta0] += exact_div((r - 1) * (r - 5), 8);
    out[3 * eta1] += exact_div((r - 1) * (r - 5), 8);
    out[-1 + eta0] += exact_div(3 * (r - 1) * (r - 1), 8);
    out[-1 + eta1] += exact_div(3 * (r - 1) * (r - 1), 8);
    return out;
}

std::map<std::int64_t, std::int64_t> class_sum_census(const CodeParams& params) {
    const FieldTower& T = *params.tower;
    const std::int64_t M = T.order();
    std::map<std::int64_t, std::int64_t> census;
    auto elem = [&](std::int64_t idx) {
        return idx == 0 ? T.zero()
                        : FieldElement::from_exponent(static_cast<std::uint32_t>(idx - 1));
    };
    for (std::int64_t ai = 0; ai <= M; ++ai) {
        for (std::int64_t bi = 0; bi <= M; ++bi) {
            const auto v = shifted_class_sum(params, elem(ai), elem(bi));
            if (!v.is_rational())
                throw std::domain_error("class-sum census hit a non-rational value");
            census[v.rational_value()] += 1;
        }
    }
    return census;
}

}  // namespace twozero
