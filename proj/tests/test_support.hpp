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

// Independent reference implementations used as oracles by the test suites.
// None of these call into the skew multiplication or division code under test.

#include <cstdint>
#include <random>
#include <vector>

#include "skewlab/field.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab::testing {

// Schoolbook multiplication of digit vectors reduced by the field modulus.
inline std::uint32_t schoolbook_mul(const FiniteField& field, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = field.characteristic(), n = field.degree();
    const auto& mod = field.modulus();
    std::vector<std::uint32_t> da(n), db(n), prod(2 * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::uint32_t k = 2 * n - 1; k >= n; --k) {
        const std::uint32_t c = prod[k];
        if (c == 0)
            continue;
        for (std::uint32_t i = 0; i <= n; ++i)
            prod[k - n + i] = (prod[k - n + i] + (p - c) * mod[i] % p) % p;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = n; i-- > 0;)
        out = out * p + prod[i];
    return out;
}

// sigma^i(b) by repeated p-th powers through the schoolbook product.
inline FieldElement frob_oracle(const FieldElement& b, std::uint64_t k) {
    const FiniteField field = b.field();
    std::uint32_t v = b.value();
    for (std::uint64_t s = 0; s < k % field.degree(); ++s) {
        std::uint32_t acc = 1;
        for (std::uint32_t e = 0; e < field.characteristic(); ++e)
            acc = schoolbook_mul(field, acc, v);
        v = acc;
    }
    return field.element(v);
}

// Product in K[t; sigma] from (a t^i)(b t^j) = a sigma^i(b) t^{i+j}.
inline std::vector<FieldElement> twisted_mul(const FiniteField& field, std::uint32_t k,
                                             const std::vector<FieldElement>& f,
                                             const std::vector<FieldElement>& g) {
    if (f.empty() || g.empty())
        return {};
    std::vector<FieldElement> out(f.size() + g.size() - 1, field.zero());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] += f[i] * frob_oracle(g[j], static_cast<std::uint64_t>(k) * i);
    return out;
}

inline void trim(std::vector<FieldElement>& v) {
    while (!v.empty() && v.back().is_zero())
        v.pop_back();
}

inline std::vector<FieldElement> add(std::vector<FieldElement> a, const std::vector<FieldElement>& b) {
    if (a.size() < b.size())
        a.resize(b.size(), b.front().field().zero());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    return a;
}

// Rewrites sum c_i x^i with x = y + shift, computing powers in K[y; sigma].
inline std::vector<FieldElement> substitute(const FiniteField& field, std::uint32_t k,
                                            const std::vector<FieldElement>& c, const FieldElement& shift) {
    std::vector<FieldElement> out;
    std::vector<FieldElement> power{field.one()};
    const std::vector<FieldElement> base{shift, field.one()};
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<FieldElement> term;
        for (const auto& e : power)
            term.push_back(c[i] * e);
        out = out.empty() ? term : add(out, term);
        power = twisted_mul(field, k, power, base);
    }
    trim(out);
    return out;
}

inline std::vector<FieldElement> coeffs_of(const SkewPoly& p) {
    return {p.coefficients().begin(), p.coefficients().end()};
}

// In K[t; sigma, delta_beta] the element s = t + beta satisfies s a = sigma(a) s,
// so the ring is K[s; sigma]. Coefficients of p in powers of s.
inline std::vector<FieldElement> in_s_basis(const SkewPoly& p) {
    const SkewContext& ctx = p.context();
    if (ctx.delta().is_zero())
        return coeffs_of(p);
    return substitute(ctx.field(), ctx.sigma().exponent(), coeffs_of(p), -*ctx.delta().beta());
}

// True iff prod = f * g, checked through the closed-form product in K[s; sigma].
inline bool product_matches_oracle(const SkewPoly& f, const SkewPoly& g, const SkewPoly& prod) {
    auto expected = twisted_mul(f.field(), f.context().sigma().exponent(), in_s_basis(f), in_s_basis(g));
    trim(expected);
    return expected == in_s_basis(prod);
}

inline FieldElement random_element(const FiniteField& field, std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1 : 0, field.order() - 1);
    return field.element(dist(rng));
}

// Random polynomial of exact degree `deg` (zero polynomial for deg < 0).
inline SkewPoly random_poly(const SkewContext& ctx, int deg, std::mt19937_64& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i < deg; ++i)
        c.push_back(random_element(ctx.field(), rng));
    if (deg >= 0)
        c.push_back(random_element(ctx.field(), rng, true));
    return SkewPoly(ctx, std::move(c));
}

// All contexts used by the randomized suites: sigma = Frobenius with delta = 0
// and with three inner derivations; GF(2) has only the commutative ring.
inline std::vector<SkewContext> standard_contexts() {
    std::vector<SkewContext> out;
    for (std::uint32_t q : {2u, 4u, 8u, 9u}) {
        const FiniteField field = FiniteField::of_order(q);
        const Automorphism sigma(field, field.degree() > 1 ? 1 : 0);
        out.emplace_back(sigma, Derivation::zero(sigma));
        if (sigma.is_identity())
            continue;
        for (std::uint32_t beta = 1; beta <= 3; ++beta)
            out.emplace_back(sigma, Derivation::inner(sigma, field.element(beta)));
    }
    return out;
}

} // namespace skewlab::testing
