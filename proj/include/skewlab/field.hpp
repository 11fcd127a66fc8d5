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

#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^n), Frobenius automorphisms and
 *        sigma-derivations.
 *
 * A field GF(p^n) is presented as F_p[x]/(pi(x)) for a monic irreducible
 * pi of degree n. Elements are stored by their integer encoding
 *
 *     value = sum_i digit_i * p^i,
 *
 * where digit_i is the coefficient of x^i. The same encoding is used for all
 * textual I/O.
 *
 * Field descriptions are interned: two FiniteField handles built from the same
 * (p, modulus) share one immutable table set that lives for the rest of the
 * program. Elements therefore stay valid regardless of handle lifetimes, and
 * mixing elements of different fields is detected by identity comparison.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skewlab {

namespace detail {
struct FieldData;
}

class FieldElement;

class FiniteField {
public:
    /// GF(p^n) with the built-in modulus: the monic irreducible of degree n
    /// with the smallest integer encoding.
    static FiniteField make(std::uint32_t p, std::uint32_t n);

    /// GF(p^n) with an explicit monic irreducible modulus (ascending F_p digits,
    /// length n + 1). Throws DomainError if p is not prime or the modulus is
    /// not monic irreducible.
    static FiniteField make(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// GF(q) for a prime power q, built-in modulus.
    static FiniteField of_order(std::uint64_t q);

    /// Smallest-encoding monic irreducible of degree n over F_p.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n);

    /// Largest supported field order.
    static constexpr std::uint64_t kMaxOrder = 1u << 16;

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;

    FieldElement zero() const;
    FieldElement one() const;
    /// Element with the given integer encoding; throws if out of range.
    FieldElement element(std::uint64_t code) const;
    FieldElement from_digits(std::span<const std::uint32_t> digits) const;
    /// The multiplicative generator with the smallest encoding.
    FieldElement primitive() const;
    /// All q elements in encoding order.
    std::vector<FieldElement> elements() const;

    /// "GF(4)"
    std::string name() const;
    /// "x^2+x+1"
    std::string modulus_string() const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
        return a.data_ == b.data_;
    }

private:
    explicit FiniteField(const detail::FieldData* data) : data_(data) {}
    friend class FieldElement;

    const detail::FieldData* data_;
};

class FieldElement {
public:
    FiniteField field() const noexcept { return FiniteField(field_); }
    std::uint32_t value() const noexcept { return value_; }
    std::vector<std::uint32_t> digits() const;

    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    /// Throws DomainError on zero.
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    /// a^(p^k)
    FieldElement frobenius(std::uint32_t k) const;

    /// Elements compare equal only within the same field.
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    /// Orders by integer encoding (canonical enumeration order).
    friend std::strong_ordering operator<=>(const FieldElement& a,
                                            const FieldElement& b) noexcept {
        return a.value_ <=> b.value_;
    }

private:
    FieldElement(const detail::FieldData* f, std::uint32_t v) : field_(f), value_(v) {}
    friend class FiniteField;
    void require_same_field(const FieldElement& rhs) const;

    const detail::FieldData* field_;
    std::uint32_t value_;
};

/// sigma(a) = a^(p^k), 0 <= k < n.
class Automorphism {
public:
    /// k is reduced mod n.
    Automorphism(FiniteField field, std::uint32_t frobenius_exponent);
    static Automorphism identity(FiniteField field) { return Automorphism(field, 0); }

    const FiniteField& field() const noexcept { return field_; }
    std::uint32_t exponent() const noexcept { return k_; }
    bool is_identity() const noexcept { return k_ == 0; }
    /// n / gcd(n, k)
    std::uint32_t order() const noexcept;

    FieldElement operator()(const FieldElement& a) const;
    /// sigma^i
    Automorphism power(std::uint64_t i) const;
    Automorphism inverse() const;

    friend bool operator==(const Automorphism&, const Automorphism&) = default;

private:
    FiniteField field_;
    std::uint32_t k_;
};

/// A sigma-derivation of GF(q): either zero or inner,
/// delta_beta(a) = beta * (sigma(a) - a).
class Derivation {
public:
    static Derivation zero(const Automorphism& sigma);
    /// Requires sigma != id. beta = 0 yields the zero derivation.
    static Derivation inner(const Automorphism& sigma, const FieldElement& beta);

    bool is_zero() const noexcept { return !beta_.has_value(); }
    const std::optional<FieldElement>& beta() const noexcept { return beta_; }
    const Automorphism& sigma() const noexcept { return sigma_; }

    FieldElement operator()(const FieldElement& a) const;

    friend bool operator==(const Derivation&, const Derivation&) = default;

private:
    Derivation(Automorphism sigma, std::optional<FieldElement> beta)
        : sigma_(sigma), beta_(beta) {}

    Automorphism sigma_;
    std::optional<FieldElement> beta_;
};

/// Fix(sigma), in encoding order. Its size is p^gcd(n, k).
std::vector<FieldElement> fixed_field(const Automorphism& sigma);

bool is_prime(std::uint64_t v);

/// Splits a prime power q into (p, n); nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q);

} // namespace skewlab
