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

// Subspaces of F_q^n kept in reduced row echelon form, so that two subspaces
// are equal exactly when their stored bases are equal.

#include <cstdint>
#include <span>
#include <vector>

#include "skewlab/errors.hpp"
#include "skewlab/field.hpp"

namespace skewlab {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const FiniteField& field, std::size_t length);
bool is_zero_vector(const Vector& v);

class Subspace {
public:
    /// The zero subspace of F_q^length.
    Subspace(FiniteField field, std::size_t length);
    static Subspace span(FiniteField field, std::size_t length, std::span<const Vector> vectors);

    const FiniteField& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    /// RREF basis, ordered by pivot column.
    const std::vector<Vector>& basis() const noexcept { return rows_; }

    bool contains(const Vector& v) const;
    /// Adds v to the span; returns true if the dimension grew.
    bool insert(const Vector& v);

    /// Number of vectors, q^dim (saturating).
    std::uint64_t size() const;
    /// sum_i coeffs[i] * basis[i]
    Vector combination(std::span<const FieldElement> coeffs) const;
    /// The vector with combination coefficients given by the base-q digits of
    /// index (first basis row most significant).
    Vector vector_at(std::uint64_t index) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.length_ == b.length_ && a.rows_ == b.rows_;
    }

private:
    Vector residual(Vector v) const;

    FiniteField field_;
    std::size_t length_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// True iff the vectors are linearly independent over F_q.
bool linearly_independent(const FiniteField& field, std::size_t length,
                          std::span<const Vector> vectors);

/// Every dim-k subspace of F_q^length, each generated once from its RREF form.
std::vector<Subspace> enumerate_subspaces(const FiniteField& field, std::size_t length,
                                          std::size_t k,
                                          std::uint64_t limit = kDefaultSearchLimit);

/// Number of dim-k subspaces of F_q^length (Gaussian binomial, saturating).
std::uint64_t subspace_count(std::uint64_t q, std::size_t length, std::size_t k);

} // namespace skewlab
