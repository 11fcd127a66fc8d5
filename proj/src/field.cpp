/**************************************************************************
 * Copyright 2026 The skewlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "skewlab/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "skewlab/errors.hpp"

namespace skewlab {

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::uint32_t primitive = 1;
    // exp_[i] = primitive^i for i in [0, 2(q-1)), log_[a] for a != 0.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    // p^i for i in [0, n]
    std::vector<std::uint32_t> place;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p == 2)
            return a ^ b;
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            out += ((a % p + b % p) % p) * place[i];
            a /= p;
            b /= p;
        }
        return out;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (p == 2)
            return a;
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            out += ((p - a % p) % p) * place[i];
            a /= p;
        }
        return out;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }
};

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint64_t v, std::uint32_t p, std::uint32_t n) {
    Digits d(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return d;
}

std::uint32_t from_digits_raw(const Digits& d, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        v = v * p + d[i];
    return static_cast<std::uint32_t>(v);
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a by a nonzero b over F_p.
Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a.back()) * lead_inv % p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>(
                (a[shift + i] + std::uint64_t(p - c) * b[i]) % p);
        trim(a);
    }
    return a;
}

// Schoolbook product of two field elements given as digit vectors, reduced
// mod the modulus. Used only while building the tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, const FieldData& f) {
    const Digits da = to_digits(a, f.p, f.n), db = to_digits(b, f.p, f.n);
    Digits prod(2 * f.n, 0);
    for (std::uint32_t i = 0; i < f.n; ++i)
        for (std::uint32_t j = 0; j < f.n; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % f.p);
    Digits r = poly_mod(prod, f.modulus, f.p);
    r.resize(f.n, 0);
    return from_digits_raw(r, f.p);
}

std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e, const FieldData& f) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1)
            r = slow_mul(r, a, f);
        a = slow_mul(a, a, f);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0)
                v /= d;
        }
    }
    if (v > 1)
        out.push_back(v);
    return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible_over_prime_field(const Digits& poly, std::uint32_t p) {
    const std::uint32_t deg = static_cast<std::uint32_t>(poly.size() - 1);
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = detail::saturating_pow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
            Digits divisor = to_digits(code, p, d);
            divisor.push_back(1);
            if (poly_mod(poly, divisor, p).empty())
                return false;
        }
    }
    return true;
}

std::unique_ptr<FieldData> build(std::uint32_t p, Digits modulus) {
    auto f = std::make_unique<FieldData>();
    f->p = p;
    f->n = static_cast<std::uint32_t>(modulus.size() - 1);
    f->q = static_cast<std::uint32_t>(detail::saturating_pow(p, f->n));
    f->modulus = std::move(modulus);
    f->place.resize(f->n + 1);
    f->place[0] = 1;
    for (std::uint32_t i = 1; i <= f->n; ++i)
        f->place[i] = f->place[i - 1] * p;

    const std::uint32_t group = f->q - 1;
    const auto factors = prime_factors(group);
    for (std::uint32_t g = 1; g < f->q; ++g) {
        bool generator = true;
        for (std::uint64_t r : factors) {
            if (slow_pow(g, group / r, *f) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) {
            f->primitive = g;
            break;
        }
    }

    f->exp_.resize(2 * std::size_t(group));
    f->log_.assign(f->q, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        f->exp_[i] = acc;
        f->exp_[i + group] = acc;
        f->log_[acc] = i;
        acc = slow_mul(acc, f->primitive, *f);
    }
    return f;
}

const FieldData* intern(std::uint32_t p, Digits modulus) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, Digits>, std::unique_ptr<FieldData>> registry;

    std::lock_guard lock(mutex);
    auto key = std::make_pair(p, modulus);
    auto it = registry.find(key);
    if (it != registry.end())
        return it->second.get();
    auto data = build(p, std::move(modulus));
    const FieldData* raw = data.get();
    registry.emplace(std::move(key), std::move(data));
    return raw;
}

} // namespace

} // namespace detail

bool is_prime(std::uint64_t v) {
    if (v < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q) {
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0)
        ++p;
    std::uint32_t n = 0;
    while (q % p == 0) {
        q /= p;
        ++n;
    }
    if (q != 1)
        return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), n);
}

std::vector<std::uint32_t> FiniteField::default_modulus(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p))
        throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (n == 0)
        throw DomainError("extension degree must be at least 1");
    if (detail::saturating_pow(p, n) > kMaxOrder)
        throw DomainError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                          " exceeds the supported maximum " + std::to_string(kMaxOrder));
    const std::uint64_t count = detail::saturating_pow(p, n);
    for (std::uint64_t code = 0; code < count; ++code) {
        auto candidate = detail::to_digits(code, p, n);
        candidate.push_back(1);
        if (detail::is_irreducible_over_prime_field(candidate, p))
            return candidate;
    }
    throw DomainError("no irreducible polynomial found"); // unreachable for prime p
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t n) {
    return make(p, default_modulus(p, n));
}

FiniteField FiniteField::make(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p))
        throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2)
        throw DomainError("modulus must have degree at least 1");
    for (auto c : modulus)
        if (c >= p)
            throw DomainError("modulus digit " + std::to_string(c) + " is not in [0, p)");
    if (modulus.back() != 1)
        throw DomainError("modulus must be monic");
    const auto n = static_cast<std::uint32_t>(modulus.size() - 1);
    if (detail::saturating_pow(p, n) > kMaxOrder)
        throw DomainError("field order exceeds the supported maximum " + std::to_string(kMaxOrder));
    if (!detail::is_irreducible_over_prime_field(modulus, p))
        throw DomainError("modulus is reducible over F_" + std::to_string(p));
    return FiniteField(detail::intern(p, std::move(modulus)));
}

FiniteField FiniteField::of_order(std::uint64_t q) {
    auto pn = split_prime_power(q);
    if (!pn)
        throw DomainError(std::to_string(q) + " is not a prime power");
    return make(pn->first, pn->second);
}

std::uint32_t FiniteField::characteristic() const noexcept { return data_->p; }
std::uint32_t FiniteField::degree() const noexcept { return data_->n; }
std::uint32_t FiniteField::order() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const noexcept { return data_->modulus; }

FieldElement FiniteField::zero() const { return FieldElement(data_, 0); }
FieldElement FiniteField::one() const { return FieldElement(data_, 1); }

FieldElement FiniteField::element(std::uint64_t code) const {
    if (code >= data_->q)
        throw DomainError("element code " + std::to_string(code) + " out of range for " + name());
    return FieldElement(data_, static_cast<std::uint32_t>(code));
}

FieldElement FiniteField::from_digits(std::span<const std::uint32_t> digits) const {
    if (digits.size() > data_->n)
        throw DomainError("too many digits for " + name());
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= data_->p)
            throw DomainError("digit out of range");
        v = v * data_->p + digits[i];
    }
    return FieldElement(data_, static_cast<std::uint32_t>(v));
}

FieldElement FiniteField::primitive() const { return FieldElement(data_, data_->primitive); }

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(data_->q);
    for (std::uint32_t v = 0; v < data_->q; ++v)
        out.push_back(FieldElement(data_, v));
    return out;
}

std::string FiniteField::name() const { return "GF(" + std::to_string(data_->q) + ")"; }

std::string FiniteField::modulus_string() const {
    std::string out;
    for (std::size_t i = data_->modulus.size(); i-- > 0;) {
        const auto c = data_->modulus[i];
        if (c == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0 || c != 1)
            out += std::to_string(c);
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

std::vector<std::uint32_t> FieldElement::digits() const {
    return detail::to_digits(value_, field_->p, field_->n);
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_)
        throw DomainError("field elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs);
    return FieldElement(field_, field_->add(value_, rhs.value_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(rhs);
    return FieldElement(field_, field_->add(value_, field_->neg(rhs.value_)));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(value_)); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs);
    return FieldElement(field_, field_->mul(value_, rhs.value_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return *this * rhs.inverse();
}

FieldElement FieldElement::inverse() const {
    if (value_ == 0)
        throw DomainError("zero has no multiplicative inverse");
    const std::uint32_t group = field_->q - 1;
    return FieldElement(field_, field_->exp_[(group - field_->log_[value_]) % group]);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    if (value_ == 0)
        return FieldElement(field_, e == 0 ? 1 : 0);
    const std::uint64_t group = field_->q - 1;
    const std::uint64_t l = (std::uint64_t(field_->log_[value_]) * (e % group)) % group;
    return FieldElement(field_, field_->exp_[l]);
}

FieldElement FieldElement::frobenius(std::uint32_t k) const {
    std::uint64_t e = 1;
    const std::uint64_t group = field_->q - 1;
    for (std::uint32_t i = 0; i < k; ++i)
        e = e * field_->p % group;
    if (group == 1 || value_ == 0)
        return *this;
    return pow(e);
}

Automorphism::Automorphism(FiniteField field, std::uint32_t frobenius_exponent)
    : field_(field), k_(frobenius_exponent % field.degree()) {}

std::uint32_t Automorphism::order() const noexcept {
    const std::uint32_t n = field_.degree();
    return n / std::gcd(n, k_);
}

FieldElement Automorphism::operator()(const FieldElement& a) const {
    if (!(a.field() == field_))
        throw DomainError("automorphism applied to an element of a different field");
    return k_ == 0 ? a : a.frobenius(k_);
}

Automorphism Automorphism::power(std::uint64_t i) const {
    const std::uint64_t n = field_.degree();
    return Automorphism(field_, static_cast<std::uint32_t>((k_ * (i % n)) % n));
}

Automorphism Automorphism::inverse() const {
    const std::uint32_t n = field_.degree();
    return Automorphism(field_, (n - k_) % n);
}

Derivation Derivation::zero(const Automorphism& sigma) { return Derivation(sigma, std::nullopt); }

Derivation Derivation::inner(const Automorphism& sigma, const FieldElement& beta) {
    if (!(beta.field() == sigma.field()))
        throw DomainError("derivation parameter belongs to a different field");
    if (beta.is_zero())
        return zero(sigma);
    if (sigma.is_identity())
        throw DomainError("an inner derivation requires sigma != id");
    return Derivation(sigma, beta);
}

FieldElement Derivation::operator()(const FieldElement& a) const {
    if (!beta_)
        return a.field().zero();
    return *beta_ * (sigma_(a) - a);
}

std::vector<FieldElement> fixed_field(const Automorphism& sigma) {
    std::vector<FieldElement> out;
    for (const auto& a : sigma.field().elements())
        if (sigma(a) == a)
            out.push_back(a);
    return out;
}

} // namespace skewlab
