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

#include "twozero/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace twozero {

namespace {

// p^degree, or throws WorkCapError when the result would exceed cap.
std::uint64_t checked_pow(std::int64_t p, int degree, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < degree; ++i) {
        if (r > cap / static_cast<std::uint64_t>(p))
            throw WorkCapError("field size cap exceeded: p^" + std::to_string(degree) +
                               " > " + std::to_string(cap));
        r *= static_cast<std::uint64_t>(p);
    }
    if (r > cap)
        throw WorkCapError("field size cap exceeded");
    return r;
}

// c = a*b mod f over GF(p); f monic of degree d, operands of degree < d.
Poly polymod_mul(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<std::int64_t> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p;
    }
    for (int k = 2 * d - 2; k >= d; --k) {
        const std::int64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int j = 0; j < d; ++j)
            prod[k - d + j] = ((prod[k - d + j] - c * f[j]) % p + p) % p;
    }
    Poly out(d);
    for (int i = 0; i < d; ++i) out[i] = static_cast<int>(prod[i]);
    return out;
}

// x^e mod f.
Poly polymod_pow_x(std::uint64_t e, const Poly& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    Poly acc(d, 0), base(d, 0);
    acc[0] = 1;
    if (d == 1) {
        // x == -f[0] mod f
        base[0] = static_cast<int>(((-f[0]) % p + p) % p);
    } else {
        base[1] = 1;
    }
    while (e > 0) {
        if (e & 1) acc = polymod_mul(acc, base, f, p);
        base = polymod_mul(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

bool poly_is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](int c) { return c == 0; });
}

// True iff the residue class of x modulo f has multiplicative order exactly
// `order` = p^deg(f) - 1.  That many distinct unit powers force the residue
// ring to be a field, so this also certifies irreducibility.
bool is_primitive_poly(const Poly& f, std::int64_t p, std::uint64_t order,
                       const std::vector<std::int64_t>& order_primes) {
    if (f[0] == 0) return false;  // x divides f
    if (!poly_is_one(polymod_pow_x(order, f, p))) return false;
    for (std::int64_t ell : order_primes) {
        if (poly_is_one(polymod_pow_x(order / static_cast<std::uint64_t>(ell), f, p)))
            return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string poly_to_string(const Poly& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << f[i];
    }
    return os.str();
}

Poly poly_from_string(const std::string& text, std::int64_t p) {
    Poly out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        // trim spaces
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty coefficient in polynomial '" + text + "'");
        tok = tok.substr(b, e - b + 1);
        int v = 0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad coefficient '" + tok + "' in polynomial");
        if (v < 0 || v >= p)
            throw std::invalid_argument("coefficient " + tok + " out of range [0, p)");
        out.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (out.empty())
        throw std::invalid_argument("empty polynomial");
    return out;
}

Poly find_primitive_poly(std::int64_t p, int degree, std::uint64_t size_cap) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    const std::uint64_t r = checked_pow(p, degree, size_cap);
    const std::uint64_t order = r - 1;
    const auto primes = prime_factors(static_cast<std::int64_t>(order));

    // k's base-p digit i is coefficient c_i, so ascending k enumerates the
    // tuples (c_{d-1}, ..., c_0) in lexicographic order.
    for (std::uint64_t k = 0; k < r; ++k) {
        if (k % static_cast<std::uint64_t>(p) == 0) continue;
        Poly f(degree + 1, 0);
        std::uint64_t t = k;
        for (int i = 0; i < degree; ++i) {
            f[i] = static_cast<int>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
        }
        f[degree] = 1;
        if (is_primitive_poly(f, p, order, primes)) return f;
    }
    throw std::logic_error("no primitive polynomial found");  // unreachable
}

std::uint32_t FieldElement::exponent() const {
    if (is_zero()) throw std::invalid_argument("zero has no exponent");
    return exp_;
}

FieldTower::FieldTower(std::int64_t p, int s, int m, std::optional<Poly> modulus,
                       std::uint64_t size_cap) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (s < 1 || m < 1) throw std::invalid_argument("s and m must be positive");
    params_.p = p;
    params_.s = s;
    params_.m = m;
    sm_ = s * m;
    r_ = static_cast<std::int64_t>(checked_pow(p, sm_, size_cap));
    q_ = 1;
    for (int i = 0; i < s; ++i) q_ *= p;

    if (modulus) {
        const Poly& f = *modulus;
        if (static_cast<int>(f.size()) != sm_ + 1)
            throw std::invalid_argument("modulus must have degree s*m");
        if (f.back() != 1)
            throw std::invalid_argument("modulus must be monic");
        for (int c : f)
            if (c < 0 || c >= p)
                throw std::invalid_argument("modulus coefficient out of range [0, p)");
        params_.modulus = f;
    } else {
        params_.modulus = find_primitive_poly(p, sm_, size_cap);
    }
    build_tables(size_cap);
}

void FieldTower::build_tables(std::uint64_t) {
    const std::int64_t p = params_.p;
    pow_p_.assign(sm_ + 1, 1);
    for (int i = 1; i <= sm_; ++i) pow_p_[i] = pow_p_[i - 1] * static_cast<std::uint64_t>(p);

    constexpr std::uint32_t kNoLog = 0xffffffffu;
    antilog_.assign(static_cast<std::size_t>(r_ - 1), 0);
    log_.assign(static_cast<std::size_t>(r_), kNoLog);

    const Poly& f = params_.modulus;
    std::vector<std::int64_t> cur(sm_, 0);
    cur[0] = 1;
    auto pack = [&]() {
        std::uint64_t v = 0;
        for (int i = 0; i < sm_; ++i) v += static_cast<std::uint64_t>(cur[i]) * pow_p_[i];
        return static_cast<std::uint32_t>(v);
    };
    for (std::int64_t k = 0; k < r_ - 1; ++k) {
        const std::uint32_t packed = pack();
        if (packed == 0 || log_[packed] != kNoLog)
            throw std::invalid_argument(
                "modulus is not primitive: alpha does not have order r-1");
        antilog_[static_cast<std::size_t>(k)] = packed;
        log_[packed] = static_cast<std::uint32_t>(k);
        // cur *= x, reduced by the monic modulus
        const std::int64_t carry = cur[sm_ - 1];
        for (int i = sm_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry != 0) {
            for (int i = 0; i < sm_; ++i)
                cur[i] = ((cur[i] - carry * f[i]) % p + p) % p;
        }
    }
    if (pack() != 1)
        throw std::invalid_argument("modulus is not primitive: alpha^(r-1) != 1");
}

FieldElement FieldTower::alpha_pow(std::int64_t k) const {
    const std::int64_t M = r_ - 1;
    return FieldElement::from_exponent(static_cast<std::uint32_t>(((k % M) + M) % M));
}

FieldElement FieldTower::from_int(std::int64_t c) const {
    const std::int64_t v = ((c % params_.p) + params_.p) % params_.p;
    return from_packed(static_cast<std::uint32_t>(v));
}

FieldElement FieldTower::from_packed(std::uint32_t packed) const {
    if (packed >= r_) throw std::invalid_argument("packed value out of range");
    if (packed == 0) return FieldElement::zero();
    return FieldElement::from_exponent(log_[packed]);
}

std::uint32_t FieldTower::packed(FieldElement e) const {
    if (e.is_zero()) return 0;
    const std::uint32_t k = e.exponent();
    if (k >= antilog_.size()) throw std::invalid_argument("exponent out of range");
    return antilog_[k];
}

FieldElement FieldTower::from_coeffs(const Poly& coeffs) const {
    if (static_cast<int>(coeffs.size()) > sm_)
        throw std::invalid_argument("coefficient vector longer than s*m");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= params_.p)
            throw std::invalid_argument("coefficient out of range [0, p)");
        v += static_cast<std::uint64_t>(coeffs[i]) * pow_p_[i];
    }
    return from_packed(static_cast<std::uint32_t>(v));
}

Poly FieldTower::coeffs(FieldElement e) const {
    Poly out(sm_, 0);
    std::uint64_t v = packed(e);
    for (int i = 0; i < sm_; ++i) {
        out[i] = static_cast<int>(v % static_cast<std::uint64_t>(params_.p));
        v /= static_cast<std::uint64_t>(params_.p);
    }
    return out;
}

std::uint32_t FieldTower::add_packed(std::uint32_t a, std::uint32_t b) const {
    const std::int64_t p = params_.p;
    if (p == 2) return a ^ b;
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    while (a != 0 || b != 0) {
        std::uint32_t d = a % p + b % p;
        if (d >= p) d -= static_cast<std::uint32_t>(p);
        out += d * scale;
        a /= static_cast<std::uint32_t>(p);
        b /= static_cast<std::uint32_t>(p);
        scale *= static_cast<std::uint32_t>(p);
    }
    return out;
}

FieldElement FieldTower::add(FieldElement a, FieldElement b) const {
    return from_packed(add_packed(packed(a), packed(b)));
}

FieldElement FieldTower::neg(FieldElement a) const {
    if (a.is_zero() || params_.p == 2) return a;
    // -1 = alpha^((r-1)/2) for odd r
    const std::int64_t M = r_ - 1;
    return FieldElement::from_exponent(
        static_cast<std::uint32_t>((a.exponent() + M / 2) % M));
}

FieldElement FieldTower::sub(FieldElement a, FieldElement b) const {
    return add(a, neg(b));
}

FieldElement FieldTower::mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement::zero();
    const std::int64_t M = r_ - 1;
    return FieldElement::from_exponent(static_cast<std::uint32_t>(
        (static_cast<std::int64_t>(a.exponent()) + b.exponent()) % M));
}

FieldElement FieldTower::inv(FieldElement a) const {
    if (a.is_zero()) throw std::invalid_argument("division by zero");
    const std::int64_t M = r_ - 1;
    return FieldElement::from_exponent(
        static_cast<std::uint32_t>((M - a.exponent()) % M));
}

FieldElement FieldTower::div(FieldElement a, FieldElement b) const {
    return mul(a, inv(b));
}

FieldElement FieldTower::pow(FieldElement a, std::int64_t k) const {
    if (a.is_zero()) {
        if (k > 0) return FieldElement::zero();
        if (k == 0) return one();
        throw std::invalid_argument("zero to a negative power");
    }
    const std::int64_t M = r_ - 1;
    const std::int64_t kr = ((k % M) + M) % M;
    return FieldElement::from_exponent(
        static_cast<std::uint32_t>((kr * a.exponent()) % M));
}

std::uint32_t FieldTower::discrete_log(FieldElement x) const {
    if (x.is_zero()) throw std::invalid_argument("discrete log of zero");
    return x.exponent();
}

bool FieldTower::in_subfield(FieldElement x) const {
    if (x.is_zero()) return true;
    return x.exponent() % subfield_step() == 0;
}

ResidueClass FieldTower::residue(FieldElement x) const {
    if (x.is_zero()) return ResidueClass::kZero;
    if ((r_ - 1) % 2 != 0) return ResidueClass::kSquare;  // char 2: all squares
    return x.exponent() % 2 == 0 ? ResidueClass::kSquare : ResidueClass::kNonSquare;
}

FieldElement FieldTower::trace_to_subfield(FieldElement x) const {
    if (x.is_zero()) return FieldElement::zero();
    const std::int64_t M = r_ - 1;
    const std::int64_t k = x.exponent();
    std::uint32_t acc = 0;
    std::int64_t qfrob = 1;  // q^i mod M
    for (int i = 0; i < params_.m; ++i) {
        acc = add_packed(acc, antilog_[static_cast<std::size_t>((k * qfrob) % M)]);
        qfrob = (qfrob * (q_ % M)) % M;
    }
    const FieldElement out = from_packed(acc);
    if (!in_subfield(out))
        throw std::logic_error("trace value not in the subfield");
    return out;
}

std::int64_t FieldTower::trace_to_prime(FieldElement x) const {
    if (x.is_zero()) return 0;
    const std::int64_t M = r_ - 1;
    const std::int64_t k = x.exponent();
    std::uint32_t acc = 0;
    std::int64_t pfrob = 1;  // p^i mod M
    for (int i = 0; i < sm_; ++i) {
        acc = add_packed(acc, antilog_[static_cast<std::size_t>((k * pfrob) % M)]);
        pfrob = (pfrob * (params_.p % M)) % M;
    }
    if (acc >= params_.p)
        throw std::logic_error("prime trace value not in GF(p)");
    return acc;
}

std::vector<FieldElement> FieldTower::cyclotomic_class(std::int64_t N, std::int64_t i) const {
    const std::int64_t M = r_ - 1;
    if (N < 1 || M % N != 0)
        throw std::invalid_argument("N does not divide r-1");
    const std::int64_t i0 = ((i % N) + N) % N;
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(M / N));
    for (std::int64_t k = i0; k < M; k += N)
        out.push_back(FieldElement::from_exponent(static_cast<std::uint32_t>(k)));
    return out;
}

}  // namespace twozero
