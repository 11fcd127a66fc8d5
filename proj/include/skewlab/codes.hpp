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
 * @file codes.hpp
 * @brief Linear codes from left ideals of S_f and sigma-constacyclic codes.
 *
 * A codeword (a_0, ..., a_{m-1}) corresponds to a(t) = sum a_i t^i in S_f.
 * For f = t^m - d in K[t; sigma], left multiplication by t acts on codewords
 * as the sigma-constacyclic shift
 *
 *     (a_0, ..., a_{m-1})  ->  (sigma(a_{m-1}) d, sigma(a_0), ..., sigma(a_{m-2})),
 *
 * and a linear code is shift-closed exactly when it is the code of a left
 * ideal generated by a monic right divisor of f.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "skewlab/errors.hpp"
#include "skewlab/linalg.hpp"
#include "skewlab/petit_algebra.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab {

using Codeword = Vector;

class LinearCode {
public:
    /// Rows must be linearly independent vectors of the given length.
    LinearCode(FiniteField field, std::size_t length, std::vector<Vector> generator);
    static LinearCode zero(FiniteField field, std::size_t length);

    const FiniteField& field() const noexcept { return span_.field(); }
    std::size_t length() const noexcept { return span_.length(); }
    std::size_t dimension() const noexcept { return span_.dimension(); }
    /// Rows as supplied (for divisor codes: t^i o g).
    const std::vector<Vector>& generator() const noexcept { return generator_; }
    /// Reduced row echelon form, used for equality.
    const Subspace& subspace() const noexcept { return span_; }
    bool contains(const Codeword& w) const { return span_.contains(w); }

    /// (f, g) for codes built from a divisor.
    const std::optional<std::pair<SkewPoly, SkewPoly>>& provenance() const noexcept {
        return provenance_;
    }
    LinearCode with_provenance(SkewPoly f, SkewPoly g) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.span_ == b.span_; }

private:
    std::vector<Vector> generator_;
    Subspace span_;
    std::optional<std::pair<SkewPoly, SkewPoly>> provenance_;
};

/// Rows are the coefficient vectors of t^i o g, i = 0 .. m - deg g - 1.
/// g = f gives the zero code.
LinearCode code_from_divisor(const PetitAlgebra& algebra, const SkewPoly& g);

/// sum_i msg_i * row_i, the coefficient vector of (sum_i msg_i t^i) o g.
Codeword encode(std::span<const FieldElement> msg, const LinearCode& code);

Codeword constacyclic_shift(const Codeword& w, const Automorphism& sigma, const FieldElement& d);

/// A generator row whose shift leaves the code. The shift is sigma-semilinear,
/// so the rows decide closure of the whole code.
std::optional<Codeword> find_shift_escape(const LinearCode& code, const Automorphism& sigma,
                                          const FieldElement& d);
bool is_sigma_constacyclic(const LinearCode& code, const Automorphism& sigma,
                           const FieldElement& d);
/// The same property checked on every codeword.
bool is_sigma_constacyclic_exhaustive(const LinearCode& code, const Automorphism& sigma,
                                      const FieldElement& d,
                                      std::uint64_t limit = kDefaultSearchLimit);

struct TheoremVerdict {
    bool constacyclic;      ///< closed under the sigma-constacyclic shift with constant d
    bool left_ideal;        ///< C(t) is a left ideal of S_f
    bool divisor_generated; ///< C(t) is spanned by t^i o g for a monic right divisor g
    std::optional<SkewPoly> generator;

    bool consistent() const noexcept {
        return constacyclic == left_ideal && left_ideal == divisor_generated;
    }
};

/// Checks the three characterisations of a length-m code against
/// f = t^m - d in K[t; sigma] (delta = 0).
TheoremVerdict theorem_roundtrip(const LinearCode& code, const SkewPoly& f,
                                 std::uint64_t limit = kDefaultSearchLimit);

struct DistanceReport {
    /// nullopt for the zero code.
    std::optional<std::size_t> min_distance;
    /// weight_distribution[w] = number of codewords of Hamming weight w.
    std::vector<std::uint64_t> weight_distribution;
};

std::size_t hamming_weight(const Codeword& w);

/// Exhaustive scan of all q^k codewords.
DistanceReport min_distance(const LinearCode& code, std::uint64_t limit = kDefaultSearchLimit);

struct CatalogRow {
    SkewPoly g;
    std::size_t length;
    std::size_t dimension;
    std::optional<std::size_t> min_distance;
    bool constacyclic;
    /// g = 1 (full code) or g = f (zero code).
    bool trivial;
};

struct Catalog {
    SkewContext context;
    std::size_t m;
    FieldElement d;
    std::vector<CatalogRow> rows;
};

/// Every monic right divisor g of t^m - d with its code parameters, ordered by
/// degree of g and then canonically.
Catalog catalog(const SkewContext& ctx, std::size_t m, const FieldElement& d,
                std::uint64_t limit = kDefaultSearchLimit);

} // namespace skewlab
