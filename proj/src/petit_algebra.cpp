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

#include "skewlab/petit_algebra.hpp"

#include <stdexcept>

namespace skewlab {

PetitAlgebra::PetitAlgebra(SkewPoly f) {
    if (!f.is_monic())
        throw DomainError("S_f requires a monic f");
    if (f.degree() < Degree(2))
        throw DomainError("S_f requires deg f >= 2");
    const auto m = static_cast<std::size_t>(f.degree().value());
    state_ = std::make_shared<const State>(State{std::move(f), m});
}

std::uint64_t PetitAlgebra::size() const noexcept {
    return detail::saturating_pow(field().order(), state_->m);
}

AlgElement PetitAlgebra::element(SkewPoly p) const {
    if (!(p.context() == context()))
        throw DomainError("polynomial belongs to a different ring than the algebra");
    if (p.degree() >= Degree(static_cast<int>(state_->m)))
        throw DomainError("algebra elements must have degree < " + std::to_string(state_->m));
    return AlgElement(*this, std::move(p));
}

AlgElement PetitAlgebra::element(const Vector& coordinates) const {
    if (coordinates.size() != state_->m)
        throw DomainError("coordinate vector must have length " + std::to_string(state_->m));
    return element(SkewPoly(context(), coordinates));
}

AlgElement PetitAlgebra::element_at(std::uint64_t index) const {
    const std::uint32_t q = field().order();
    Vector c = zero_vector(field(), state_->m);
    for (std::size_t j = state_->m; j-- > 0;) {
        c[j] = field().element(index % q);
        index /= q;
    }
    return element(c);
}

AlgElement PetitAlgebra::zero() const { return AlgElement(*this, SkewPoly(context())); }

AlgElement PetitAlgebra::one() const { return AlgElement(*this, SkewPoly::one(context())); }

AlgElement PetitAlgebra::monomial(const FieldElement& a, std::size_t i) const {
    return element(SkewPoly::monomial(context(), a, i));
}

SkewPoly PetitAlgebra::multiply(const SkewPoly& g, const SkewPoly& h) const {
    return right_mod(g * h, state_->f);
}

Vector AlgElement::coordinates() const {
    Vector v = zero_vector(poly_.field(), algebra_.dimension());
    const auto c = poly_.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        v[i] = c[i];
    return v;
}

void AlgElement::require_same_algebra(const AlgElement& rhs) const {
    if (!(algebra_ == rhs.algebra_))
        throw DomainError("elements belong to different algebras");
}

AlgElement AlgElement::operator*(const AlgElement& rhs) const {
    require_same_algebra(rhs);
    return AlgElement(algebra_, algebra_.multiply(poly_, rhs.poly_));
}

AlgElement AlgElement::operator+(const AlgElement& rhs) const {
    require_same_algebra(rhs);
    return AlgElement(algebra_, poly_ + rhs.poly_);
}

AlgElement AlgElement::operator-(const AlgElement& rhs) const {
    require_same_algebra(rhs);
    return AlgElement(algebra_, poly_ - rhs.poly_);
}

AlgElement AlgElement::scaled(const FieldElement& a) const {
    return AlgElement(algebra_, poly_.scaled(a));
}

AlgElement monomial_product(const PetitAlgebra& algebra, const FieldElement& a, std::size_t i,
                            const FieldElement& b, std::size_t j) {
    const auto binomial = algebra.binomial();
    if (!binomial)
        throw DomainError("the monomial formula requires f = t^m - d");
    if (!algebra.context().is_twisted())
        throw DomainError("the monomial formula requires delta = 0");
    const std::size_t m = binomial->m;
    if (i >= m || j >= m)
        throw DomainError("monomial exponents must be < m");
    const auto& sigma = algebra.context().sigma();
    const FieldElement head = a * sigma.power(i)(b);
    if (i + j < m)
        return algebra.monomial(head, i + j);
    // t^k d = sigma^k(d) t^k
    const std::size_t k = i + j - m;
    return algebra.monomial(head * sigma.power(k)(binomial->d), k);
}

std::vector<FieldElement> nucleus_field(const PetitAlgebra& algebra) {
    std::vector<FieldElement> out;
    const auto elements = algebra.field().elements();
    for (const auto& a : elements) {
        const AlgElement ca = algebra.monomial(a, 0);
        bool commutes = true;
        for (std::size_t i = 0; i < algebra.dimension() && commutes; ++i)
            for (const auto& b : elements) {
                const AlgElement h = algebra.monomial(b, i);
                if (!(ca * h == h * ca)) {
                    commutes = false;
                    break;
                }
            }
        if (commutes)
            out.push_back(a);
    }
    return out;
}

namespace {

// Monomials a t^i with a != 0, ordered by (i, a).
std::vector<AlgElement> nonzero_monomials(const PetitAlgebra& algebra) {
    std::vector<AlgElement> out;
    for (std::size_t i = 0; i < algebra.dimension(); ++i)
        for (const auto& a : algebra.field().elements())
            if (!a.is_zero())
                out.push_back(algebra.monomial(a, i));
    return out;
}

} // namespace

std::optional<AssociatorWitness> find_associator_witness(const PetitAlgebra& algebra,
                                                         std::uint64_t limit) {
    const auto monomials = nonzero_monomials(algebra);
    detail::check_guard("associator scan", detail::saturating_pow(monomials.size(), 3), limit);
    for (const auto& x : monomials)
        for (const auto& y : monomials) {
            const AlgElement xy = x * y;
            for (const auto& z : monomials) {
                AlgElement left = xy * z;
                AlgElement right = x * (y * z);
                if (!(left == right))
                    return AssociatorWitness{x, y, z, std::move(left), std::move(right)};
            }
        }
    return std::nullopt;
}

bool is_associative(const PetitAlgebra& algebra, std::uint64_t limit) {
    return !find_associator_witness(algebra, limit).has_value();
}

std::optional<std::pair<AlgElement, AlgElement>> find_zero_divisor(const PetitAlgebra& algebra,
                                                                   std::uint64_t limit) {
    const std::uint64_t n = algebra.size();
    detail::check_guard("zero divisor scan", detail::saturating_pow(n, 2), limit);
    std::vector<AlgElement> elements;
    elements.reserve(n);
    for (std::uint64_t i = 1; i < n; ++i)
        elements.push_back(algebra.element_at(i));
    for (const auto& x : elements)
        for (const auto& y : elements)
            if ((x * y).is_zero())
                return std::make_pair(x, y);
    return std::nullopt;
}

LeftIdeal zero_ideal(const PetitAlgebra& algebra) {
    return LeftIdeal(algebra.modulus(), {}, Subspace(algebra.field(), algebra.dimension()));
}

bool is_left_ideal(const PetitAlgebra& algebra, const Subspace& subspace) {
    for (const auto& v : subspace.basis()) {
        SkewPoly image = algebra.element(v).poly();
        for (std::size_t i = 1; i < algebra.dimension(); ++i) {
            // t^i o v = t o (t^{i-1} o v), since t * (Q f) stays in Rf.
            image = right_mod(image.times_t(), algebra.modulus());
            if (!subspace.contains(algebra.element(image).coordinates()))
                return false;
        }
    }
    return true;
}

LeftIdeal left_ideal_span(const PetitAlgebra& algebra, const SkewPoly& g) {
    if (!g.is_monic())
        throw DomainError("ideal generator must be monic");
    if (g.degree() >= Degree(static_cast<int>(algebra.dimension())))
        throw DomainError("ideal generator must have degree < m; the zero ideal is separate");
    if (!is_right_divisor(g, algebra.modulus()))
        throw DomainError("ideal generator " + g.to_string() + " is not a right divisor of " +
                          algebra.modulus().to_string());
    const std::size_t dim = algebra.dimension() - static_cast<std::size_t>(g.degree().value());
    std::vector<AlgElement> basis;
    Subspace span(algebra.field(), algebra.dimension());
    SkewPoly current = g;
    for (std::size_t i = 0; i < dim; ++i) {
        if (i > 0)
            current = current.times_t();
        basis.push_back(algebra.element(current));
        span.insert(basis.back().coordinates());
    }
    if (!is_left_ideal(algebra, span))
        throw std::logic_error("span of a right divisor is not closed under left multiplication");
    return LeftIdeal(g, std::move(basis), std::move(span));
}

LeftIdeal principal_left_ideal(const PetitAlgebra& algebra, const AlgElement& h,
                               std::uint64_t limit) {
    if (!(h.algebra() == algebra))
        throw DomainError("element belongs to a different algebra");
    if (h.is_zero())
        throw DomainError("principal_left_ideal requires h != 0");
    detail::check_guard("principal ideal closure", algebra.size(), limit);

    const std::size_t m = algebra.dimension();
    const auto& field = algebra.field();
    const auto monomials = nonzero_monomials(algebra);

    Subspace span(field, m);
    span.insert(h.coordinates());
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = span.basis();
        for (const auto& v : snapshot) {
            const AlgElement s = algebra.element(v);
            for (const auto& x : monomials)
                grew |= span.insert((x * s).coordinates());
        }
    }

    // Echelon form with columns in descending degree: the last row is the
    // unique monic element of minimal degree.
    Subspace reversed(field, m);
    for (const auto& v : span.basis())
        reversed.insert(Vector(v.rbegin(), v.rend()));
    const Vector& last = reversed.basis().back();
    SkewPoly generator(algebra.context(), Vector(last.rbegin(), last.rend()));

    const std::size_t deg_g = static_cast<std::size_t>(generator.degree().value());
    std::vector<AlgElement> basis;
    if (span.dimension() == m - deg_g && is_right_divisor(generator, algebra.modulus())) {
        SkewPoly current = generator;
        for (std::size_t i = 0; i < m - deg_g; ++i) {
            if (i > 0)
                current = current.times_t();
            basis.push_back(algebra.element(current));
        }
    } else {
        for (const auto& v : span.basis())
            basis.push_back(algebra.element(v));
    }
    return LeftIdeal(std::move(generator), std::move(basis), std::move(span));
}

std::vector<LeftIdeal> all_left_ideals(const PetitAlgebra& algebra, std::uint64_t limit) {
    const SkewPoly& f = algebra.modulus();
    detail::check_guard("right divisor search", irreducibility_search_size(f), limit);
    std::vector<LeftIdeal> out;
    out.push_back(left_ideal_span(algebra, SkewPoly::one(algebra.context())));
    for (int k = 1; k < static_cast<int>(algebra.dimension()); ++k)
        for (const auto& g : right_divisors_of_degree(f, k, limit))
            out.push_back(left_ideal_span(algebra, g));
    out.push_back(zero_ideal(algebra));
    return out;
}

CyclicAlgebra nonassoc_cyclic_algebra(const Automorphism& sigma, const FieldElement& d) {
    if (!(d.field() == sigma.field()))
        throw DomainError("d belongs to a different field than sigma");
    const std::size_t m = sigma.order();
    if (m < 2)
        throw DomainError("a cyclic algebra needs sigma != id");
    const Automorphism inv = sigma.inverse();
    const SkewContext ctx(inv, Derivation::zero(inv));
    return CyclicAlgebra{PetitAlgebra(SkewPoly::binomial(ctx, m, d)), sigma(d) == d};
}

bool powers_linearly_dependent(const FieldElement& d, std::size_t count,
                               const Automorphism& sigma) {
    const auto fixed = fixed_field(sigma);
    std::vector<FieldElement> powers;
    for (std::size_t i = 0; i < count; ++i)
        powers.push_back(d.pow(i));
    const std::uint64_t combos = detail::saturating_pow(fixed.size(), count);
    detail::check_guard("linear dependence scan", combos, kDefaultSearchLimit);
    for (std::uint64_t idx = 1; idx < combos; ++idx) {
        std::uint64_t rest = idx;
        FieldElement sum = d.field().zero();
        for (std::size_t i = 0; i < count; ++i) {
            sum += fixed[rest % fixed.size()] * powers[i];
            rest /= fixed.size();
        }
        if (sum.is_zero())
            return true;
    }
    return false;
}

} // namespace skewlab
