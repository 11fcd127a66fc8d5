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

#include "skewlab/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewlab {

LinearCode::LinearCode(FiniteField field, std::size_t length, std::vector<Vector> generator)
    : generator_(std::move(generator)), span_(Subspace::span(field, length, generator_)) {
    if (span_.dimension() != generator_.size())
        throw DomainError("generator rows are linearly dependent");
}

LinearCode LinearCode::zero(FiniteField field, std::size_t length) {
    return LinearCode(field, length, {});
}

LinearCode LinearCode::with_provenance(SkewPoly f, SkewPoly g) const {
    LinearCode out = *this;
    out.provenance_ = std::make_pair(std::move(f), std::move(g));
    return out;
}

LinearCode code_from_divisor(const PetitAlgebra& algebra, const SkewPoly& g) {
    const std::size_t m = algebra.dimension();
    if (g == algebra.modulus())
        return LinearCode::zero(algebra.field(), m).with_provenance(algebra.modulus(), g);
    const LeftIdeal ideal = left_ideal_span(algebra, g);
    std::vector<Vector> rows;
    for (const auto& b : ideal.basis())
        rows.push_back(b.coordinates());
    return LinearCode(algebra.field(), m, std::move(rows)).with_provenance(algebra.modulus(), g);
}

Codeword encode(std::span<const FieldElement> msg, const LinearCode& code) {
    if (msg.size() != code.dimension())
        throw DomainError("message length " + std::to_string(msg.size()) +
                          " does not match code dimension " + std::to_string(code.dimension()));
    Codeword out = zero_vector(code.field(), code.length());
    for (std::size_t r = 0; r < msg.size(); ++r)
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += msg[r] * code.generator()[r][j];
    return out;
}

Codeword constacyclic_shift(const Codeword& w, const Automorphism& sigma, const FieldElement& d) {
    if (w.empty())
        return w;
    Codeword out;
    out.reserve(w.size());
    out.push_back(sigma(w.back()) * d);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        out.push_back(sigma(w[i]));
    return out;
}

std::optional<Codeword> find_shift_escape(const LinearCode& code, const Automorphism& sigma,
                                          const FieldElement& d) {
    for (const auto& row : code.subspace().basis())
        if (!code.contains(constacyclic_shift(row, sigma, d)))
            return row;
    return std::nullopt;
}

bool is_sigma_constacyclic(const LinearCode& code, const Automorphism& sigma,
                           const FieldElement& d) {
    return !find_shift_escape(code, sigma, d).has_value();
}

bool is_sigma_constacyclic_exhaustive(const LinearCode& code, const Automorphism& sigma,
                                      const FieldElement& d, std::uint64_t limit) {
    const std::uint64_t n = code.subspace().size();
    detail::check_guard("codeword scan", n, limit);
    for (std::uint64_t i = 0; i < n; ++i)
        if (!code.contains(constacyclic_shift(code.subspace().vector_at(i), sigma, d)))
            return false;
    return true;
}

TheoremVerdict theorem_roundtrip(const LinearCode& code, const SkewPoly& f, std::uint64_t limit) {
    const auto binomial = as_binomial(f);
    if (!binomial)
        throw DomainError("theorem check requires f = t^m - d");
    if (!f.context().is_twisted())
        throw DomainError("theorem check requires delta = 0");
    if (!(code.field() == f.field()))
        throw DomainError("code and polynomial use different fields");
    if (code.length() != binomial->m)
        throw DomainError("code length " + std::to_string(code.length()) +
                          " does not match deg f = " + std::to_string(binomial->m));

    const PetitAlgebra algebra(f);
    TheoremVerdict verdict{};
    verdict.constacyclic = is_sigma_constacyclic(code, f.context().sigma(), binomial->d);
    verdict.left_ideal = is_left_ideal(algebra, code.subspace());

    const std::size_t m = binomial->m;
    const std::size_t k = code.dimension();
    if (k == 0) {
        verdict.divisor_generated = true;
        verdict.generator = f;
    } else if (k == m) {
        verdict.divisor_generated = true;
        verdict.generator = SkewPoly::one(f.context());
    } else {
        verdict.divisor_generated = false;
        for (const auto& g : right_divisors_of_degree(f, static_cast<int>(m - k), limit)) {
            if (left_ideal_span(algebra, g).subspace() == code.subspace()) {
                verdict.divisor_generated = true;
                verdict.generator = g;
                break;
            }
        }
    }
    return verdict;
}

std::size_t hamming_weight(const Codeword& w) {
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [](const FieldElement& x) { return !x.is_zero(); }));
}

DistanceReport min_distance(const LinearCode& code, std::uint64_t limit) {
    const std::uint64_t n = code.subspace().size();
    detail::check_guard("minimum distance scan", n, limit);
    DistanceReport report{std::nullopt, std::vector<std::uint64_t>(code.length() + 1, 0)};
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::size_t w = hamming_weight(code.subspace().vector_at(i));
        ++report.weight_distribution[w];
        if (w > 0 && (!report.min_distance || w < *report.min_distance))
            report.min_distance = w;
    }
    const std::uint64_t total = std::accumulate(report.weight_distribution.begin(),
                                                report.weight_distribution.end(), std::uint64_t{0});
    if (total != n)
        throw std::logic_error("weight distribution does not account for every codeword");
    return report;
}

Catalog catalog(const SkewContext& ctx, std::size_t m, const FieldElement& d, std::uint64_t limit) {
    if (!ctx.is_twisted())
        throw DomainError("code catalogs are defined for delta = 0");
    if (m < 2)
        throw DomainError("code length m must be at least 2");
    if (!(d.field() == ctx.field()))
        throw DomainError("constant d belongs to a different field");

    const SkewPoly f = SkewPoly::binomial(ctx, m, d);
    const PetitAlgebra algebra(f);
    detail::check_guard("right divisor search", irreducibility_search_size(f), limit);

    std::vector<SkewPoly> divisors{SkewPoly::one(ctx)};
    for (int k = 1; k < static_cast<int>(m); ++k)
        for (auto& g : right_divisors_of_degree(f, k, limit))
            divisors.push_back(std::move(g));
    divisors.push_back(f);

    Catalog out{ctx, m, d, {}};
    for (const auto& g : divisors) {
        const LinearCode code = code_from_divisor(algebra, g);
        const DistanceReport dist = min_distance(code, limit);
        out.rows.push_back(CatalogRow{g, m, code.dimension(), dist.min_distance,
                                      is_sigma_constacyclic(code, ctx.sigma(), d),
                                      g.degree() == Degree(0) || g == f});
    }
    return out;
}

} // namespace skewlab
