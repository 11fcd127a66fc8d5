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

#include <gtest/gtest.h>

#include <numeric>

#include "skewlab/errors.hpp"
#include "skewlab/io.hpp"
#include "skewlab/skew_poly.hpp"
#include "test_support.hpp"

namespace skewlab {
namespace {

using testing::product_matches_oracle;
using testing::random_poly;
using testing::standard_contexts;

SkewContext gf4_frob() {
    return SkewContext(FiniteField::of_order(4), 1);
}

SkewPoly P(const SkewContext& ctx, const char* text) {
    return parse_poly(ctx, text);
}

TEST(SkewPoly, ZeroAndDegree) {
    const auto ctx = gf4_frob();
    const SkewPoly z(ctx);
    EXPECT_TRUE(z.is_zero());
    EXPECT_FALSE(z.degree().is_finite());
    EXPECT_EQ(z.degree().to_string(), "-inf");
    EXPECT_THROW((void)z.degree().value(), DomainError);
    EXPECT_EQ(z.to_string(), "0");
    EXPECT_EQ(P(ctx, "0,0,0"), z);
    EXPECT_EQ(P(ctx, "t^2+1").degree(), Degree(2));
    EXPECT_EQ((z * P(ctx, "t")).degree(), Degree::minus_infinity());
}

TEST(SkewPoly, TwistedCommutationRule) {
    for (const auto& ctx : standard_contexts()) {
        const SkewPoly t = SkewPoly::monomial(ctx, ctx.field().one(), 1);
        for (const auto& a : ctx.field().elements()) {
            const SkewPoly expected(ctx, {ctx.delta()(a), ctx.sigma()(a)});
            EXPECT_EQ(t * SkewPoly::constant(ctx, a), expected) << ctx.describe();
        }
    }
}

TEST(SkewPoly, ProductMatchesOracle) {
    std::mt19937_64 rng(7);
    for (const auto& ctx : standard_contexts()) {
        for (int trial = 0; trial < 300; ++trial) {
            const auto f = random_poly(ctx, static_cast<int>(rng() % 7) - 1, rng);
            const auto g = random_poly(ctx, static_cast<int>(rng() % 7) - 1, rng);
            ASSERT_TRUE(product_matches_oracle(f, g, f * g))
                << ctx.describe() << ": " << f.to_string() << " * " << g.to_string();
        }
    }
}

TEST(SkewPoly, CommutativeCaseIsOrdinaryPolynomialProduct) {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
        const SkewContext ctx(FiniteField::of_order(q), 0);
        for (int trial = 0; trial < 200; ++trial) {
            const auto f = random_poly(ctx, static_cast<int>(rng() % 6), rng);
            const auto g = random_poly(ctx, static_cast<int>(rng() % 6), rng);
            std::vector<FieldElement> c(f.coefficients().size() + g.coefficients().size() - 1,
                                        ctx.field().zero());
            for (std::size_t i = 0; i < f.coefficients().size(); ++i)
                for (std::size_t j = 0; j < g.coefficients().size(); ++j)
                    c[i + j] += f.coeff(i) * g.coeff(j);
            EXPECT_EQ(f * g, SkewPoly(ctx, c));
            EXPECT_EQ(f * g, g * f);
        }
    }
}

TEST(SkewPoly, RingLaws) {
    std::mt19937_64 rng(13);
    for (const auto& ctx : standard_contexts()) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_poly(ctx, static_cast<int>(rng() % 5), rng);
            const auto b = random_poly(ctx, static_cast<int>(rng() % 5), rng);
            const auto c = random_poly(ctx, static_cast<int>(rng() % 5), rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a + b) * c, a * c + b * c);
            EXPECT_EQ(SkewPoly::one(ctx) * a, a);
            EXPECT_EQ(a * SkewPoly::one(ctx), a);
            EXPECT_TRUE((a - a).is_zero());
        }
    }
}

TEST(SkewPoly, DegreeLaw) {
    std::mt19937_64 rng(17);
    for (const auto& ctx : standard_contexts())
        for (int trial = 0; trial < 500; ++trial) {
            const int df = static_cast<int>(rng() % 8), dg = static_cast<int>(rng() % 8);
            const auto f = random_poly(ctx, df, rng), g = random_poly(ctx, dg, rng);
            EXPECT_EQ((f * g).degree(), Degree(df + dg));
        }
}

TEST(SkewPoly, DivisionRoundTripAndUniqueness) {
    std::mt19937_64 rng(19);
    for (const auto& ctx : standard_contexts())
        for (int trial = 0; trial < 500; ++trial) {
            const auto f = random_poly(ctx, static_cast<int>(rng() % 5), rng);
            const auto q0 = random_poly(ctx, static_cast<int>(rng() % 6) - 1, rng);
            const int df = f.degree().value();
            const auto r0 = random_poly(ctx, static_cast<int>(rng() % (df + 1)) - 1, rng);
            const auto g = q0 * f + r0;
            const auto [q, r] = right_divmod(g, f);
            EXPECT_EQ(q * f + r, g);
            EXPECT_LT(r.degree(), f.degree());
            // Any representation with deg r0 < deg f is the one returned.
            EXPECT_EQ(q, q0);
            EXPECT_EQ(r, r0);
        }
}

TEST(SkewPoly, DivisionExhaustiveOverGf2) {
    const SkewContext ctx(FiniteField::of_order(2), 0);
    for (std::uint32_t gi = 0; gi < 16; ++gi)
        for (std::uint32_t fi = 1; fi < 16; ++fi) {
            std::vector<FieldElement> gc, fc;
            for (int b = 0; b < 4; ++b) {
                gc.push_back(ctx.field().element((gi >> b) & 1));
                fc.push_back(ctx.field().element((fi >> b) & 1));
            }
            const SkewPoly g(ctx, gc), f(ctx, fc);
            const auto [q, r] = right_divmod(g, f);
            EXPECT_EQ(q * f + r, g);
            EXPECT_LT(r.degree(), f.degree());
        }
}

TEST(SkewPoly, DivisionByNonMonicAndErrors) {
    const auto ctx = gf4_frob();
    const auto f = P(ctx, "2t^2+3t+1");
    const auto g = P(ctx, "t^5+2t+3");
    const auto [q, r] = right_divmod(g, f);
    EXPECT_EQ(q * f + r, g);
    EXPECT_LT(r.degree(), f.degree());
    EXPECT_THROW(right_divmod(g, SkewPoly(ctx)), DomainError);
    EXPECT_THROW(right_divmod(g, P(SkewContext(FiniteField::of_order(4), 0), "t")), DomainError);
}

TEST(SkewPoly, DivmodExamples) {
    const auto ctx = gf4_frob();
    auto qr = right_divmod(P(ctx, "t^3+1"), P(ctx, "t+1"));
    EXPECT_EQ(qr.quotient.to_string(), "t^2+t+1");
    EXPECT_TRUE(qr.remainder.is_zero());
    qr = right_divmod(P(ctx, "t^2+2"), P(ctx, "t+1"));
    EXPECT_EQ(qr.remainder, P(ctx, "3"));
    qr = right_divmod(P(ctx, "t+1"), P(ctx, "t^2"));
    EXPECT_TRUE(qr.quotient.is_zero());
}

TEST(SkewPoly, RightGcd) {
    const auto ctx = gf4_frob();
    EXPECT_EQ(right_gcd(P(ctx, "2t^2+2"), SkewPoly(ctx)), P(ctx, "t^2+1"));
    EXPECT_EQ(right_gcd(P(ctx, "t^3+1"), P(ctx, "t+1")), P(ctx, "t+1"));
    EXPECT_EQ(right_gcd(P(ctx, "t^2+2"), P(ctx, "t+1")), P(ctx, "1"));
    EXPECT_THROW(right_gcd(SkewPoly(ctx), SkewPoly(ctx)), DomainError);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = make_monic(random_poly(ctx, 1 + static_cast<int>(rng() % 2), rng));
        const auto a = random_poly(ctx, static_cast<int>(rng() % 3), rng) * c;
        const auto b = random_poly(ctx, static_cast<int>(rng() % 3), rng) * c;
        const auto h = right_gcd(a, b);
        EXPECT_TRUE(h.is_monic());
        EXPECT_TRUE(is_right_divisor(h, a));
        EXPECT_TRUE(is_right_divisor(h, b));
        EXPECT_TRUE(is_right_divisor(c, h));
    }
}

TEST(SkewPoly, RightDivisorPredicate) {
    const auto ctx = gf4_frob();
    EXPECT_TRUE(is_right_divisor(P(ctx, "t+1"), P(ctx, "t^3+1")));
    for (const auto& z : ctx.field().elements())
        EXPECT_FALSE(is_right_divisor(P(ctx, "t") + SkewPoly::constant(ctx, z), P(ctx, "t^2+2")));
    EXPECT_TRUE(is_right_divisor(P(ctx, "t^2+2"), P(ctx, "t^2+2")));
    EXPECT_THROW(is_right_divisor(SkewPoly(ctx), P(ctx, "t")), DomainError);
}

// Brute force over all monic candidates of degree k, by direct division.
std::vector<SkewPoly> brute_divisors(const SkewPoly& f, int k) {
    std::vector<SkewPoly> out;
    const auto& field = f.field();
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i)
        total *= field.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElement> c(k + 1, field.one());
        std::uint64_t v = idx;
        for (int i = k - 1; i >= 0; --i) {
            c[i] = field.element(v % field.order());
            v /= field.order();
        }
        SkewPoly g(f.context(), c);
        if (right_divmod(f, g).remainder.is_zero())
            out.push_back(g);
    }
    return out;
}

TEST(SkewPoly, DivisorEnumeration) {
    const auto ctx = gf4_frob();
    // N_3(z) = z^{1+2+4} = z for z in GF(4), so only t+1 right-divides t^3+1.
    EXPECT_EQ(right_divisors_of_degree(P(ctx, "t^3+1"), 1), std::vector<SkewPoly>{P(ctx, "t+1")});
    EXPECT_TRUE(right_divisors_of_degree(P(ctx, "t^2+2"), 1).empty());
    const SkewContext gf2(FiniteField::of_order(2), 0);
    EXPECT_EQ(right_divisors_of_degree(P(gf2, "t^2+1"), 1), std::vector<SkewPoly>{P(gf2, "t+1")});

    for (const auto& c : standard_contexts()) {
        if (c.field().order() > 4)
            continue;
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = make_monic(random_poly(c, 4, rng));
            for (int k = 1; k < 4; ++k)
                EXPECT_EQ(right_divisors_of_degree(f, k), brute_divisors(f, k));
        }
    }
    EXPECT_THROW(right_divisors_of_degree(P(ctx, "t^3+1"), 3), DomainError);
    EXPECT_THROW(right_divisors_of_degree(P(ctx, "t^3+1"), 0), DomainError);
    EXPECT_THROW(right_divisors_of_degree(P(ctx, "t^3+1"), 2, 15), GuardExceeded);
}

TEST(SkewPoly, MonicFromIndexIsLexicographic) {
    const auto ctx = gf4_frob();
    EXPECT_EQ(monic_from_index(ctx, 2, 0), P(ctx, "t^2"));
    EXPECT_EQ(monic_from_index(ctx, 2, 1), P(ctx, "t^2+t"));
    EXPECT_EQ(monic_from_index(ctx, 2, 4), P(ctx, "t^2+1"));
    EXPECT_EQ(monic_from_index(ctx, 2, 15), P(ctx, "t^2+3t+3"));
}

TEST(SkewPoly, NormExamples) {
    const auto f4 = FiniteField::of_order(4);
    const Automorphism frob(f4, 1);
    for (std::size_t m = 1; m < 6; ++m)
        EXPECT_EQ(norm(f4.one(), m, frob), f4.one());
    EXPECT_EQ(norm(f4.element(2), 2, frob), f4.one());
    const auto f9 = FiniteField::of_order(9);
    const Automorphism frob9(f9, 1);
    for (const auto& z : f9.elements()) {
        if (z.is_zero())
            continue;
        const auto n = norm(z, 2, frob9);
        EXPECT_EQ(n, z.pow(4));
        EXPECT_TRUE(n == f9.one() || n == -f9.one());
    }
}

TEST(SkewPoly, LinearDivisorNormLink) {
    for (std::uint32_t q : {4u, 8u, 9u}) {
        const auto field = FiniteField::of_order(q);
        const SkewContext ctx(field, 1);
        for (std::size_t m : {2u, 3u})
            for (const auto& d : field.elements())
                for (const auto& z : field.elements()) {
                    const auto f = SkewPoly::binomial(ctx, m, d);
                    const SkewPoly lin(ctx, {-z, field.one()});
                    EXPECT_EQ(is_right_divisor(lin, f), norm(z, m, ctx.sigma()) == d)
                        << q << " m=" << m << " d=" << d.value() << " z=" << z.value();
                }
    }
}

TEST(SkewPoly, TwoSidedExamples) {
    const auto ctx = gf4_frob();
    EXPECT_TRUE(is_two_sided(P(ctx, "t^2+1")));
    EXPECT_FALSE(is_two_sided(P(ctx, "t^2+2")));
    EXPECT_FALSE(is_two_sided(P(ctx, "t^3+1")));
    EXPECT_TRUE(is_two_sided(P(ctx, "t^3")));
    EXPECT_EQ(right_mod(P(ctx, "t^2+2") * P(ctx, "t"), P(ctx, "t^2+2")), P(ctx, "t"));
}

TEST(SkewPoly, TwoSidedGeneratorTestMatchesMonomialScan) {
    std::mt19937_64 rng(31);
    for (const auto& ctx : standard_contexts()) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto f = make_monic(random_poly(ctx, 1 + static_cast<int>(rng() % 4), rng));
            EXPECT_EQ(is_two_sided(f), is_two_sided_by_monomials(f)) << f.to_string();
        }
        for (std::size_t m = 1; m <= 4; ++m)
            for (const auto& d : ctx.field().elements()) {
                const auto f = SkewPoly::binomial(ctx, m, d);
                EXPECT_EQ(is_two_sided(f), is_two_sided_by_monomials(f));
            }
    }
}

TEST(SkewPoly, TwoSidedBinomialOrderCriterion) {
    for (std::uint32_t q : {4u, 8u, 9u, 16u}) {
        const auto field = FiniteField::of_order(q);
        for (std::uint32_t k = 0; k < field.degree(); ++k) {
            const SkewContext ctx(field, k);
            for (std::size_t m = 1; m <= 6; ++m)
                EXPECT_EQ(is_two_sided(SkewPoly::binomial(ctx, m, field.one())),
                          m % ctx.sigma().order() == 0);
        }
    }
}

TEST(SkewPoly, Irreducibility) {
    const auto ctx = gf4_frob();
    EXPECT_TRUE(is_irreducible(P(ctx, "t^2+2")));
    EXPECT_FALSE(is_irreducible(P(ctx, "t^3+1")));
    for (const auto& d : ctx.field().elements())
        EXPECT_TRUE(is_irreducible(P(ctx, "t") + SkewPoly::constant(ctx, d)));
    EXPECT_EQ(irreducibility_search_size(P(ctx, "t^3+1")), 4u + 16u);
    EXPECT_THROW(is_irreducible(P(ctx, "t^3+1"), 19), GuardExceeded);
    EXPECT_THROW(is_irreducible(SkewPoly::one(ctx)), DomainError);
}

TEST(SkewPoly, Printing) {
    const auto ctx = SkewContext(FiniteField::of_order(9), 1);
    const auto f = P(ctx, "2t^3+t+8");
    EXPECT_EQ(f.to_string(), "2t^3+t+8");
    EXPECT_EQ(f.to_list_string(), "8,1,0,2");
    EXPECT_EQ(P(ctx, "t^2-1").to_string(), "t^2+2");
    EXPECT_EQ(ctx.describe(), "GF(9)[t; sigma=frob^1]");
}

TEST(SkewPoly, ContextValidation) {
    const auto f4 = FiniteField::of_order(4);
    const Automorphism s(f4, 1);
    EXPECT_THROW(SkewContext(Automorphism(f4, 0), Derivation::inner(s, f4.one())), DomainError);
    EXPECT_THROW(P(gf4_frob(), "t") + P(SkewContext(f4, 0), "t"), DomainError);
}

} // namespace
} // namespace skewlab
