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
 * @file skew_poly.hpp
 * @brief The skew-polynomial ring K[t; sigma, delta] over a finite field.
 *
 * Multiplication follows t*a = sigma(a)*t + delta(a). Polynomials are written
 * with coefficients on the left, f = sum_i a_i t^i, and stored densely in
 * ascending degree. The zero polynomial has an empty coefficient vector and
 * every other polynomial has a nonzero leading coefficient.
 *
 * "Right" division follows the coding-theory convention: for f != 0 there
 * are unique q, r with g = q*f + r and deg r < deg f; r is "g mod_r f".
 */

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewlab/errors.hpp"
#include "skewlab/field.hpp"

namespace skewlab {

/// The coefficient field together with sigma and delta.
class SkewContext {
public:
    /// K[t; sigma^k]
    SkewContext(FiniteField field, std::uint32_t frobenius_exponent);
    SkewContext(Automorphism sigma, Derivation delta);

    const FiniteField& field() const noexcept { return sigma_.field(); }
    const Automorphism& sigma() const noexcept { return sigma_; }
    const Derivation& delta() const noexcept { return delta_; }
    bool is_twisted() const noexcept { return delta_.is_zero(); }
    bool is_commutative() const noexcept { return sigma_.is_identity() && delta_.is_zero(); }

    std::string describe() const;

    friend bool operator==(const SkewContext&, const SkewContext&) = default;

private:
    Automorphism sigma_;
    Derivation delta_;
};

/// Polynomial degree with deg(0) = -infinity.
class Degree {
public:
    constexpr Degree(int d) : value_(d) {}
    static constexpr Degree minus_infinity() { return Degree(kMinusInf); }

    constexpr bool is_finite() const noexcept { return value_ != kMinusInf; }
    /// Throws on -infinity.
    int value() const;

    friend constexpr Degree operator+(Degree a, Degree b) {
        return (a.is_finite() && b.is_finite()) ? Degree(a.value_ + b.value_) : minus_infinity();
    }
    friend constexpr bool operator==(Degree, Degree) = default;
    friend constexpr auto operator<=>(Degree a, Degree b) { return a.value_ <=> b.value_; }

    std::string to_string() const;

private:
    static constexpr int kMinusInf = std::numeric_limits<int>::min();
    int value_;
};

class SkewPoly {
public:
    /// The zero polynomial.
    explicit SkewPoly(SkewContext ctx);
    /// Ascending coefficients; trailing zeros are dropped.
    SkewPoly(SkewContext ctx, std::vector<FieldElement> coeffs);

    static SkewPoly constant(const SkewContext& ctx, const FieldElement& a);
    static SkewPoly one(const SkewContext& ctx);
    /// a t^i
    static SkewPoly monomial(const SkewContext& ctx, const FieldElement& a, std::size_t i);
    /// t^m - d
    static SkewPoly binomial(const SkewContext& ctx, std::size_t m, const FieldElement& d);

    const SkewContext& context() const noexcept { return ctx_; }
    const FiniteField& field() const noexcept { return ctx_.field(); }
    std::span<const FieldElement> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of t^i, zero past the degree.
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;

    Degree degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

    SkewPoly operator+(const SkewPoly& rhs) const;
    SkewPoly operator-(const SkewPoly& rhs) const;
    SkewPoly operator-() const;
    /// Twisted product.
    SkewPoly operator*(const SkewPoly& rhs) const;
    SkewPoly& operator+=(const SkewPoly& rhs) { return *this = *this + rhs; }
    SkewPoly& operator-=(const SkewPoly& rhs) { return *this = *this - rhs; }

    /// a * f (left scalar multiplication, coefficientwise).
    SkewPoly scaled(const FieldElement& a) const;
    /// t * f
    SkewPoly times_t() const;

    /// Symbolic form, e.g. "t^3+2t+1"; "0" for zero.
    std::string to_string() const;
    /// Ascending coefficient list, e.g. "1,2,0,1"; "0" for zero.
    std::string to_list_string() const;

    friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

private:
    void normalize();
    void require_same_context(const SkewPoly& rhs) const;

    SkewContext ctx_;
    std::vector<FieldElement> coeffs_;
};

struct DivMod {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// g = q*f + r with deg r < deg f. f need not be monic.
DivMod right_divmod(const SkewPoly& g, const SkewPoly& f);

/// g mod_r f
SkewPoly right_mod(const SkewPoly& g, const SkewPoly& f);

/// Left-multiplies by the inverse of the leading coefficient.
SkewPoly make_monic(const SkewPoly& f);

/// Monic greatest common right divisor.
SkewPoly right_gcd(const SkewPoly& f, const SkewPoly& g);

/// True iff f = q*g for some q.
bool is_right_divisor(const SkewPoly& g, const SkewPoly& f);

/// All monic right divisors of f with degree k, in lexicographic order on the
/// coefficient tuple (c0, c1, ..., c_{k-1}) under the integer encoding.
std::vector<SkewPoly> right_divisors_of_degree(const SkewPoly& f, int k,
                                               std::uint64_t limit = kDefaultSearchLimit);

/// The monic polynomial of degree k whose lower coefficients are the base-q
/// digits of `index`, c0 most significant. Enumerates monic degree-k
/// polynomials in canonical order for index in [0, q^k).
SkewPoly monic_from_index(const SkewContext& ctx, int k, std::uint64_t index);

/// sigma^{m-1}(z) ... sigma(z) z
FieldElement norm(const FieldElement& z, std::size_t m, const Automorphism& sigma);

/// f = t^m - d, as (m, d).
struct Binomial {
    std::size_t m;
    FieldElement d;
};
std::optional<Binomial> as_binomial(const SkewPoly& f);

/// Rf = fR, decided by checking that f*a and f*t are left multiples of f for
/// the primitive element a of K.
bool is_two_sided(const SkewPoly& f);

/// Cross-validation of two-sidedness: f*h mod_r f = 0 for every monomial
/// h = a t^i with deg h < deg f + 2.
bool is_two_sided_by_monomials(const SkewPoly& f);

struct TwoSidedReport {
    bool two_sided;
    /// Only for f = t^m - d with d != 0 and delta = 0:
    /// "ord(sigma) divides m and d in Fix(sigma)".
    std::optional<bool> order_divides_degree;
    /// Same shape, alternative reading: "m divides ord(sigma) and d in Fix(sigma)".
    std::optional<bool> degree_divides_order;
};
TwoSidedReport two_sided_report(const SkewPoly& f);

/// No proper factorization f = g*h with deg g, deg h < deg f. Scans monic
/// right divisors of every degree in [1, deg f - 1].
bool is_irreducible(const SkewPoly& f, std::uint64_t limit = kDefaultSearchLimit);

/// Number of candidates is_irreducible would examine.
std::uint64_t irreducibility_search_size(const SkewPoly& f);

} // namespace skewlab
