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
 * @file petit_algebra.hpp
 * @brief The nonassociative algebra S_f = (R_m, o) with g o h = g*h mod_r f.
 *
 * R_m is the set of skew polynomials of degree < m = deg f. S_f is unital and
 * left K-linear in its first argument, but in general neither associative nor
 * K-linear in the second argument. It is associative exactly when f is
 * two-sided, and has no zero divisors exactly when f is irreducible.
 *
 * Elements are identified with coordinate vectors (c_0, ..., c_{m-1}) and
 * enumerated in lexicographic order on that tuple, c_0 most significant.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/errors.hpp"
#include "skewlab/linalg.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab {

class AlgElement;

class PetitAlgebra {
public:
    /// f must be monic with deg f >= 2.
    explicit PetitAlgebra(SkewPoly f);

    const SkewPoly& modulus() const noexcept { return state_->f; }
    const SkewContext& context() const noexcept { return state_->f.context(); }
    const FiniteField& field() const noexcept { return state_->f.field(); }
    /// m = deg f
    std::size_t dimension() const noexcept { return state_->m; }
    /// q^m (saturating)
    std::uint64_t size() const noexcept;
    std::optional<Binomial> binomial() const { return as_binomial(state_->f); }

    /// Throws unless deg p < m.
    AlgElement element(SkewPoly p) const;
    AlgElement element(const Vector& coordinates) const;
    /// Canonical enumeration, index in [0, q^m).
    AlgElement element_at(std::uint64_t index) const;
    AlgElement zero() const;
    AlgElement one() const;
    /// a t^i, i < m
    AlgElement monomial(const FieldElement& a, std::size_t i) const;

    /// g*h mod_r f for g, h of degree < m.
    SkewPoly multiply(const SkewPoly& g, const SkewPoly& h) const;

    friend bool operator==(const PetitAlgebra& a, const PetitAlgebra& b) {
        return a.state_ == b.state_ || a.state_->f == b.state_->f;
    }

private:
    struct State {
        SkewPoly f;
        std::size_t m;
    };
    std::shared_ptr<const State> state_;
};

class AlgElement {
public:
    const PetitAlgebra& algebra() const noexcept { return algebra_; }
    const SkewPoly& poly() const noexcept { return poly_; }
    /// (c_0, ..., c_{m-1})
    Vector coordinates() const;
    bool is_zero() const noexcept { return poly_.is_zero(); }

    /// The algebra product g o h.
    AlgElement operator*(const AlgElement& rhs) const;
    AlgElement operator+(const AlgElement& rhs) const;
    AlgElement operator-(const AlgElement& rhs) const;
    /// a o h, which for a constant equals a*h.
    AlgElement scaled(const FieldElement& a) const;

    std::string to_string() const { return poly_.to_string(); }

    friend bool operator==(const AlgElement& a, const AlgElement& b) {
        return a.poly_ == b.poly_;
    }

private:
    AlgElement(PetitAlgebra algebra, SkewPoly poly)
        : algebra_(std::move(algebra)), poly_(std::move(poly)) {}
    friend class PetitAlgebra;
    void require_same_algebra(const AlgElement& rhs) const;

    PetitAlgebra algebra_;
    SkewPoly poly_;
};

/// (a t^i) o (b t^j) for f = t^m - d in K[t; sigma]:
///   a sigma^i(b) t^{i+j}                       if i + j < m
///   a sigma^i(b) t^{i+j-m} d  (= a sigma^i(b) sigma^{i+j-m}(d) t^{i+j-m})  otherwise.
/// Throws unless the algebra's f is a binomial and delta = 0.
AlgElement monomial_product(const PetitAlgebra& algebra, const FieldElement& a, std::size_t i,
                            const FieldElement& b, std::size_t j);

/// F_0 = {a in K : a o h = h o a for all h}. Bilinearity reduces "all h" to
/// the monomials b t^i, which is what is scanned.
std::vector<FieldElement> nucleus_field(const PetitAlgebra& algebra);

struct AssociatorWitness {
    AlgElement x, y, z;
    AlgElement left;  ///< (x o y) o z
    AlgElement right; ///< x o (y o z)
};

/// First triple of monomials a t^i (a != 0) in canonical order with a nonzero
/// associator. The associator is additive in each argument, so monomials
/// suffice.
std::optional<AssociatorWitness> find_associator_witness(const PetitAlgebra& algebra,
                                                         std::uint64_t limit = kDefaultSearchLimit);
bool is_associative(const PetitAlgebra& algebra, std::uint64_t limit = kDefaultSearchLimit);

/// First pair (x, y), both nonzero, with x o y = 0 in canonical pair order.
/// Requires (q^m)^2 <= limit.
std::optional<std::pair<AlgElement, AlgElement>> find_zero_divisor(
    const PetitAlgebra& algebra, std::uint64_t limit = kDefaultSearchLimit);

/// A left ideal of S_f as a K-subspace together with a monic generator g.
/// The zero ideal has generator f and an empty basis.
class LeftIdeal {
public:
    const SkewPoly& generator() const noexcept { return generator_; }
    /// t^i o g for i = 0 .. m - deg g - 1 (or the closure basis if the
    /// generator does not span it).
    const std::vector<AlgElement>& basis() const noexcept { return basis_; }
    const Subspace& subspace() const noexcept { return span_; }
    std::size_t dimension() const noexcept { return span_.dimension(); }
    bool is_zero() const noexcept { return span_.dimension() == 0; }
    bool contains(const AlgElement& h) const { return span_.contains(h.coordinates()); }

    /// Ideals are equal when their subspaces are.
    friend bool operator==(const LeftIdeal& a, const LeftIdeal& b) { return a.span_ == b.span_; }

private:
    LeftIdeal(SkewPoly generator, std::vector<AlgElement> basis, Subspace span)
        : generator_(std::move(generator)), basis_(std::move(basis)), span_(std::move(span)) {}
    friend LeftIdeal left_ideal_span(const PetitAlgebra&, const SkewPoly&);
    friend LeftIdeal zero_ideal(const PetitAlgebra&);
    friend LeftIdeal principal_left_ideal(const PetitAlgebra&, const AlgElement&, std::uint64_t);

    SkewPoly generator_;
    std::vector<AlgElement> basis_;
    Subspace span_;
};

/// The ideal spanned by t^i o g, 0 <= i < m - deg g. g must be a monic right
/// divisor of f with deg g < m.
LeftIdeal left_ideal_span(const PetitAlgebra& algebra, const SkewPoly& g);

LeftIdeal zero_ideal(const PetitAlgebra& algebra);

/// True iff the subspace is closed under left multiplication by every t^i
/// (and hence by all of S_f).
bool is_left_ideal(const PetitAlgebra& algebra, const Subspace& subspace);

/// The left ideal generated by h != 0: the K-span of h closed under left
/// multiplication by all monomials a t^i, iterated to a fixed point. The
/// generator is its minimal-degree monic element.
LeftIdeal principal_left_ideal(const PetitAlgebra& algebra, const AlgElement& h,
                               std::uint64_t limit = kDefaultSearchLimit);

/// One ideal per monic right divisor of f: the unit ideal first, then
/// divisors by increasing degree in canonical order, then the zero ideal.
std::vector<LeftIdeal> all_left_ideals(const PetitAlgebra& algebra,
                                       std::uint64_t limit = kDefaultSearchLimit);

struct CyclicAlgebra {
    PetitAlgebra algebra;
    /// d lies in Fix(sigma): the construction degenerates to the associative case.
    bool associative_case;
};

/// The nonassociative cyclic algebra (K/F, sigma, d): S_f over K[t; sigma^-1]
/// with f = t^m - d, m = ord(sigma), F = Fix(sigma).
CyclicAlgebra nonassoc_cyclic_algebra(const Automorphism& sigma, const FieldElement& d);

/// True iff 1, d, ..., d^{count-1} are linearly dependent over Fix(sigma).
bool powers_linearly_dependent(const FieldElement& d, std::size_t count,
                               const Automorphism& sigma);

} // namespace skewlab
