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

#include "skewlab/skew_poly.hpp"

#include <algorithm>

namespace skewlab {

namespace {

using Coeffs = std::vector<FieldElement>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

// t * (sum c_j t^j) = sum sigma(c_j) t^{j+1} + delta(c_j) t^j
Coeffs shift_by_t(const Coeffs& c, const SkewContext& ctx) {
    if (c.empty())
        return {};
    Coeffs out(c.size() + 1, ctx.field().zero());
    for (std::size_t j = 0; j < c.size(); ++j)
        out[j + 1] = ctx.sigma()(c[j]);
    if (!ctx.delta().is_zero())
        for (std::size_t j = 0; j < c.size(); ++j)
            out[j] += ctx.delta()(c[j]);
    trim(out);
    return out;
}

} // namespace

SkewContext::SkewContext(FiniteField field, std::uint32_t frobenius_exponent)
    : sigma_(field, frobenius_exponent), delta_(Derivation::zero(sigma_)) {}

SkewContext::SkewContext(Automorphism sigma, Derivation delta)
    : sigma_(sigma), delta_(std::move(delta)) {
    if (!(delta_.sigma() == sigma_))
        throw DomainError("derivation is tied to a different automorphism");
}

std::string SkewContext::describe() const {
    std::string out = field().name() + "[t; sigma=frob^" + std::to_string(sigma_.exponent());
    if (!delta_.is_zero())
        out += ", delta=inner(" + std::to_string(delta_.beta()->value()) + ")";
    return out + "]";
}

int Degree::value() const {
    if (!is_finite())
        throw DomainError("degree of the zero polynomial is -infinity");
    return value_;
}

std::string Degree::to_string() const {
    return is_finite() ? std::to_string(value_) : std::string("-inf");
}

SkewPoly::SkewPoly(SkewContext ctx) : ctx_(std::move(ctx)) {}

SkewPoly::SkewPoly(SkewContext ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.field() == ctx_.field()))
            throw DomainError("coefficient belongs to a different field than the ring");
    normalize();
}

SkewPoly SkewPoly::constant(const SkewContext& ctx, const FieldElement& a) {
    return SkewPoly(ctx, {a});
}

SkewPoly SkewPoly::one(const SkewContext& ctx) { return constant(ctx, ctx.field().one()); }

SkewPoly SkewPoly::monomial(const SkewContext& ctx, const FieldElement& a, std::size_t i) {
    std::vector<FieldElement> c(i + 1, ctx.field().zero());
    c[i] = a;
    return SkewPoly(ctx, std::move(c));
}

SkewPoly SkewPoly::binomial(const SkewContext& ctx, std::size_t m, const FieldElement& d) {
    return monomial(ctx, ctx.field().one(), m) - constant(ctx, d);
}

void SkewPoly::normalize() { trim(coeffs_); }

void SkewPoly::require_same_context(const SkewPoly& rhs) const {
    if (!(ctx_ == rhs.ctx_))
        throw DomainError("skew polynomials belong to different rings");
}

FieldElement SkewPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field().zero();
}

FieldElement SkewPoly::leading() const {
    if (coeffs_.empty())
        throw DomainError("the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Degree SkewPoly::degree() const noexcept {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(coeffs_.size()) - 1);
}

SkewPoly SkewPoly::operator+(const SkewPoly& rhs) const {
    require_same_context(rhs);
    const auto& longer = coeffs_.size() >= rhs.coeffs_.size() ? coeffs_ : rhs.coeffs_;
    const auto& shorter = coeffs_.size() >= rhs.coeffs_.size() ? rhs.coeffs_ : coeffs_;
    Coeffs out = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i)
        out[i] += shorter[i];
    return SkewPoly(ctx_, std::move(out));
}

SkewPoly SkewPoly::operator-() const {
    Coeffs out = coeffs_;
    for (auto& c : out)
        c = -c;
    return SkewPoly(ctx_, std::move(out));
}

SkewPoly SkewPoly::operator-(const SkewPoly& rhs) const { return *this + (-rhs); }

SkewPoly SkewPoly::operator*(const SkewPoly& rhs) const {
    require_same_context(rhs);
    if (is_zero() || rhs.is_zero())
        return SkewPoly(ctx_);
    Coeffs out(coeffs_.size() + rhs.coeffs_.size() - 1, field().zero());
    // Accumulate a_i * (t^i * rhs), building t^i * rhs one power at a time.
    Coeffs power = rhs.coeffs_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0)
            power = shift_by_t(power, ctx_);
        const FieldElement& a = coeffs_[i];
        if (a.is_zero())
            continue;
        for (std::size_t j = 0; j < power.size(); ++j)
            out[j] += a * power[j];
    }
    return SkewPoly(ctx_, std::move(out));
}

SkewPoly SkewPoly::scaled(const FieldElement& a) const {
    Coeffs out = coeffs_;
    for (auto& c : out)
        c = a * c;
    return SkewPoly(ctx_, std::move(out));
}

SkewPoly SkewPoly::times_t() const { return SkewPoly(ctx_, shift_by_t(coeffs_, ctx_)); }

std::string SkewPoly::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto& c = coeffs_[i];
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += '+';
        if (i == 0 || !c.is_one())
            out += std::to_string(c.value());
        if (i >= 1)
            out += 't';
        if (i >= 2)
            out += '^' + std::to_string(i);
    }
    return out;
}

std::string SkewPoly::to_list_string() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(coeffs_[i].value());
    }
    return out;
}

DivMod right_divmod(const SkewPoly& g, const SkewPoly& f) {
    if (!(g.context() == f.context()))
        throw DomainError("skew polynomials belong to different rings");
    if (f.is_zero())
        throw DomainError("right division by the zero polynomial");
    const SkewContext& ctx = f.context();
    const int df = f.degree().value();
    if (g.degree() < f.degree())
        return {SkewPoly(ctx), g};

    const int dg = g.degree().value();
    // shifted[s] = t^s * f; its leading coefficient is sigma^s(lead f).
    std::vector<Coeffs> shifted;
    shifted.reserve(dg - df + 1);
    shifted.emplace_back(f.coefficients().begin(), f.coefficients().end());
    for (int s = 1; s <= dg - df; ++s)
        shifted.push_back(shift_by_t(shifted.back(), ctx));

    Coeffs quotient(dg - df + 1, ctx.field().zero());
    Coeffs rem(g.coefficients().begin(), g.coefficients().end());
    while (!rem.empty() && static_cast<int>(rem.size()) - 1 >= df) {
        const int s = static_cast<int>(rem.size()) - 1 - df;
        const Coeffs& sf = shifted[s];
        const FieldElement c = rem.back() / sf.back();
        quotient[s] += c;
        for (std::size_t j = 0; j < sf.size(); ++j)
            rem[j] -= c * sf[j];
        trim(rem);
    }
    return {SkewPoly(ctx, std::move(quotient)), SkewPoly(ctx, std::move(rem))};
}

SkewPoly right_mod(const SkewPoly& g, const SkewPoly& f) { return right_divmod(g, f).remainder; }

SkewPoly make_monic(const SkewPoly& f) {
    if (f.is_zero())
        throw DomainError("the zero polynomial cannot be made monic");
    return f.scaled(f.leading().inverse());
}

SkewPoly right_gcd(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw DomainError("right gcd of two zero polynomials is undefined");
    SkewPoly a = f, b = g;
    while (!b.is_zero()) {
        SkewPoly r = right_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

bool is_right_divisor(const SkewPoly& g, const SkewPoly& f) {
    if (g.is_zero())
        throw DomainError("the zero polynomial is not a divisor candidate");
    return right_mod(f, g).is_zero();
}

SkewPoly monic_from_index(const SkewContext& ctx, int k, std::uint64_t index) {
    const std::uint32_t q = ctx.field().order();
    std::vector<FieldElement> c(k + 1, ctx.field().zero());
    c[k] = ctx.field().one();
    for (int j = k - 1; j >= 0; --j) {
        c[j] = ctx.field().element(index % q);
        index /= q;
    }
    return SkewPoly(ctx, std::move(c));
}

std::vector<SkewPoly> right_divisors_of_degree(const SkewPoly& f, int k, std::uint64_t limit) {
    if (f.is_zero() || k < 1 || Degree(k) >= f.degree())
        throw DomainError("divisor degree must satisfy 1 <= k < deg f");
    const std::uint64_t count = detail::saturating_pow(f.field().order(), k);
    detail::check_guard("right divisor search", count, limit);
    std::vector<SkewPoly> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        SkewPoly g = monic_from_index(f.context(), k, idx);
        if (right_mod(f, g).is_zero())
            out.push_back(std::move(g));
    }
    return out;
}

FieldElement norm(const FieldElement& z, std::size_t m, const Automorphism& sigma) {
    if (m == 0)
        throw DomainError("norm length must be at least 1");
    FieldElement result = z;
    FieldElement image = z;
    for (std::size_t i = 1; i < m; ++i) {
        image = sigma(image);
        result = image * result;
    }
    return result;
}

std::optional<Binomial> as_binomial(const SkewPoly& f) {
    if (!f.is_monic() || f.degree() < Degree(1))
        return std::nullopt;
    const auto c = f.coefficients();
    for (std::size_t i = 1; i + 1 < c.size(); ++i)
        if (!c[i].is_zero())
            return std::nullopt;
    return Binomial{c.size() - 1, -c[0]};
}

bool is_two_sided(const SkewPoly& f) {
    if (f.degree() < Degree(1))
        throw DomainError("two-sidedness is tested for deg f >= 1");
    const auto& ctx = f.context();
    const SkewPoly a = SkewPoly::constant(ctx, ctx.field().primitive());
    const SkewPoly t = SkewPoly::monomial(ctx, ctx.field().one(), 1);
    return right_mod(f * a, f).is_zero() && right_mod(f * t, f).is_zero();
}

bool is_two_sided_by_monomials(const SkewPoly& f) {
    if (f.degree() < Degree(1))
        throw DomainError("two-sidedness is tested for deg f >= 1");
    const auto& ctx = f.context();
    const int top = f.degree().value() + 2;
    for (int i = 0; i < top; ++i)
        for (const auto& a : ctx.field().elements()) {
            if (a.is_zero())
                continue;
            if (!right_mod(f * SkewPoly::monomial(ctx, a, i), f).is_zero())
                return false;
        }
    return true;
}

TwoSidedReport two_sided_report(const SkewPoly& f) {
    TwoSidedReport report{is_two_sided(f), std::nullopt, std::nullopt};
    const auto b = as_binomial(f);
    if (b && !b->d.is_zero() && f.context().is_twisted()) {
        const auto& sigma = f.context().sigma();
        const bool d_fixed = sigma(b->d) == b->d;
        const std::size_t ord = sigma.order();
        report.order_divides_degree = d_fixed && b->m % ord == 0;
        report.degree_divides_order = d_fixed && ord % b->m == 0;
    }
    return report;
}

std::uint64_t irreducibility_search_size(const SkewPoly& f) {
    if (f.degree() < Degree(1))
        return 0;
    std::uint64_t total = 0;
    const int deg = f.degree().value();
    for (int k = 1; k < deg; ++k)
        total = detail::saturating_add(total, detail::saturating_pow(f.field().order(), k));
    return total;
}

bool is_irreducible(const SkewPoly& f, std::uint64_t limit) {
    if (f.degree() < Degree(1))
        throw DomainError("irreducibility is tested for deg f >= 1");
    detail::check_guard("irreducibility search", irreducibility_search_size(f), limit);
    const int deg = f.degree().value();
    for (int k = 1; k < deg; ++k) {
        const std::uint64_t count = detail::saturating_pow(f.field().order(), k);
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (right_mod(f, monic_from_index(f.context(), k, idx)).is_zero())
                return false;
    }
    return true;
}

} // namespace skewlab
