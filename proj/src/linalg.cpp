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

#include "skewlab/linalg.hpp"

#include <algorithm>

namespace skewlab {

Vector zero_vector(const FiniteField& field, std::size_t length) {
    return Vector(length, field.zero());
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Subspace::Subspace(FiniteField field, std::size_t length) : field_(field), length_(length) {}

Subspace Subspace::span(FiniteField field, std::size_t length, std::span<const Vector> vectors) {
    Subspace s(field, length);
    for (const auto& v : vectors)
        s.insert(v);
    return s;
}

Vector Subspace::residual(Vector v) const {
    if (v.size() != length_)
        throw DomainError("vector length " + std::to_string(v.size()) +
                          " does not match subspace length " + std::to_string(length_));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElement c = v[pivots_[r]];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < length_; ++j)
            v[j] -= c * rows_[r][j];
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero_vector(residual(v)); }

bool Subspace::insert(const Vector& v) {
    Vector res = residual(v);
    auto it = std::find_if(res.begin(), res.end(), [](const FieldElement& x) { return !x.is_zero(); });
    if (it == res.end())
        return false;
    const auto pivot = static_cast<std::size_t>(it - res.begin());
    const FieldElement inv = it->inverse();
    for (auto& x : res)
        x = inv * x;
    for (auto& row : rows_) {
        const FieldElement c = row[pivot];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < length_; ++j)
            row[j] -= c * res[j];
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(res));
    return true;
}

std::uint64_t Subspace::size() const { return detail::saturating_pow(field_.order(), rows_.size()); }

Vector Subspace::combination(std::span<const FieldElement> coeffs) const {
    if (coeffs.size() != rows_.size())
        throw DomainError("combination needs one coefficient per basis vector");
    Vector out = zero_vector(field_, length_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (coeffs[r].is_zero())
            continue;
        for (std::size_t j = 0; j < length_; ++j)
            out[j] += coeffs[r] * rows_[r][j];
    }
    return out;
}

Vector Subspace::vector_at(std::uint64_t index) const {
    const std::uint32_t q = field_.order();
    std::vector<FieldElement> coeffs(rows_.size(), field_.zero());
    for (std::size_t r = rows_.size(); r-- > 0;) {
        coeffs[r] = field_.element(index % q);
        index /= q;
    }
    return combination(coeffs);
}

bool linearly_independent(const FiniteField& field, std::size_t length,
                          std::span<const Vector> vectors) {
    return Subspace::span(field, length, vectors).dimension() == vectors.size();
}

std::uint64_t subspace_count(std::uint64_t q, std::size_t length, std::size_t k) {
    if (k > length)
        return 0;
    // Gaussian binomial [length choose k]_q via the product formula; exact at
    // desk scale, saturating beyond.
    long double num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= static_cast<long double>(detail::saturating_pow(q, length - i)) - 1;
        den *= static_cast<long double>(detail::saturating_pow(q, i + 1)) - 1;
    }
    const long double v = num / den;
    if (v >= 1.8e19L)
        return UINT64_MAX;
    return static_cast<std::uint64_t>(v + 0.5L);
}

std::vector<Subspace> enumerate_subspaces(const FiniteField& field, std::size_t length,
                                          std::size_t k, std::uint64_t limit) {
    if (k > length)
        throw DomainError("subspace dimension exceeds the ambient length");
    detail::check_guard("subspace enumeration", subspace_count(field.order(), length, k), limit);

    std::vector<Subspace> out;
    const auto elements = field.elements();
    const std::uint32_t q = field.order();

    // Pivot sets in lexicographic order.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i)
        pivots[i] = i;
    while (true) {
        // Free positions: (row r, column c) with c > pivots[r] and c not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = pivots[r] + 1; c < length; ++c)
                if (!std::binary_search(pivots.begin(), pivots.end(), c))
                    free.emplace_back(r, c);
        const std::uint64_t fills = detail::saturating_pow(q, free.size());
        for (std::uint64_t idx = 0; idx < fills; ++idx) {
            std::vector<Vector> rows(k, zero_vector(field, length));
            for (std::size_t r = 0; r < k; ++r)
                rows[r][pivots[r]] = field.one();
            std::uint64_t rest = idx;
            for (std::size_t f = free.size(); f-- > 0;) {
                rows[free[f].first][free[f].second] = elements[rest % q];
                rest /= q;
            }
            out.push_back(Subspace::span(field, length, rows));
        }

        // Next combination.
        std::size_t i = k;
        while (i > 0 && pivots[i - 1] == length - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

} // namespace skewlab
