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

#include "twozero/charsum.hpp"

#include <stdexcept>

namespace twozero {

CyclotomicIntegerValue::CyclotomicIntegerValue(std::int64_t p,
                                               std::vector<std::int64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
    if (p_ < 2) throw std::invalid_argument("p must be at least 2");
    if (coeffs_.size() != static_cast<std::size_t>(p_))
        throw std::invalid_argument("histogram must have exactly p entries");
    canonicalize();
}

CyclotomicIntegerValue CyclotomicIntegerValue::zero(std::int64_t p) {
    return CyclotomicIntegerValue(p, std::vector<std::int64_t>(p, 0));
}

CyclotomicIntegerValue CyclotomicIntegerValue::from_integer(std::int64_t p,
                                                            std::int64_t v) {
    std::vector<std::int64_t> c(p, 0);
    c[0] = v;
    return CyclotomicIntegerValue(p, std::move(c));
}

void CyclotomicIntegerValue::canonicalize() {
    const std::int64_t last = coeffs_.back();
    if (last == 0) return;
    for (auto& c : coeffs_) c -= last;
}

bool CyclotomicIntegerValue::is_rational() const {
    for (std::size_t i = 1; i + 1 < coeffs_.size(); ++i)
        if (coeffs_[i] != coeffs_.back()) return false;
    return true;
}

std::int64_t CyclotomicIntegerValue::rational_value() const {
    if (!is_rational())
        throw std::domain_error("cyclotomic value is not rational");
    return coeffs_[0] - coeffs_[1];
}

CyclotomicIntegerValue& CyclotomicIntegerValue::operator+=(
    const CyclotomicIntegerValue& other) {
    if (p_ != other.p_)
        throw std::invalid_argument("cannot add values over different primes");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    canonicalize();
    return *this;
}

CyclotomicIntegerValue CyclotomicIntegerValue::scaled(std::int64_t c) const {
    std::vector<std::int64_t> out(coeffs_);
    for (auto& v : out) v *= c;
    return CyclotomicIntegerValue(p_, std::move(out));
}

RationalHalfInteger::RationalHalfInteger(std::int64_t numerator, std::int64_t denominator) {
    if (denominator != 1 && denominator != 2)
        throw std::invalid_argument("denominator must be 1 or 2");
    if (denominator == 2 && numerator % 2 == 0) {
        num = numerator / 2;
        den = 1;
    } else {
        num = numerator;
        den = denominator;
    }
}

std::string RationalHalfInteger::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/2";
}

CyclotomicIntegerValue character_sum(const FieldTower& tower,
                                     std::span<const FieldElement> elements) {
    std::vector<std::int64_t> hist(tower.p(), 0);
    for (const auto& e : elements) hist[tower.trace_to_prime(e)] += 1;
    return CyclotomicIntegerValue(tower.p(), std::move(hist));
}

CyclotomicIntegerValue gaussian_period(const FieldTower& tower, std::int64_t N,
                                       std::int64_t i) {
    const auto cls = tower.cyclotomic_class(N, i);
    return character_sum(tower, cls);
}

std::optional<GaussianPairN2> gaussian_period_closed_form_n2(std::int64_t p, int s,
                                                             int m) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("closed form requires an odd prime p");
    if (s < 1 || m < 1) throw std::invalid_argument("s and m must be positive");
    const int sm = s * m;
    if (sm % 2 != 0) return std::nullopt;  // sqrt(r) irrational (or non-real)

    std::int64_t rt = 1;  // p^{sm/2} = sqrt(r)
    for (int i = 0; i < sm / 2; ++i) {
        if (rt > (std::int64_t{1} << 31))
            throw std::invalid_argument("field too large for the closed form");
        rt *= p;
    }
    // sm even: (-1)^{sm-1} = -1, and for p = 3 mod 4 the extra factor
    // (sqrt(-1))^{sm} = (-1)^{sm/2}.
    std::int64_t signed_rt;
    if (p % 4 == 1) {
        signed_rt = -rt;
    } else {
        signed_rt = ((sm / 2) % 2 == 0) ? -rt : rt;
    }
    GaussianPairN2 out;
    out.eta0 = RationalHalfInteger(-1 + signed_rt, 2);
    out.eta1 = RationalHalfInteger(-1 - signed_rt, 2);  // -1 - eta0
    return out;
}

}  // namespace twozero
