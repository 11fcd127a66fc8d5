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

#include "skewlab/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "skewlab/errors.hpp"

namespace skewlab {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    s = strip(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                    : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

// Symbolic form: [+|-] term {(+|-) term}, term = [coef][t[^exp]].
SkewPoly parse_symbolic(const SkewContext& ctx, std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += c;
    if (compact.empty())
        throw DomainError("empty polynomial literal");

    const auto& field = ctx.field();
    std::map<std::size_t, FieldElement> terms;
    std::size_t pos = 0;
    bool negative = false;
    if (compact[0] == '+' || compact[0] == '-') {
        negative = compact[0] == '-';
        ++pos;
    }
    while (true) {
        const std::size_t begin = pos;
        while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos])))
            ++pos;
        const bool has_coef = pos > begin;
        FieldElement coef = has_coef ? parse_element(field, std::string_view(compact).substr(begin, pos - begin))
                                     : field.one();
        std::size_t exponent = 0;
        if (pos < compact.size() && compact[pos] == 't') {
            ++pos;
            exponent = 1;
            if (pos < compact.size() && compact[pos] == '^') {
                ++pos;
                const std::size_t eb = pos;
                while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos])))
                    ++pos;
                exponent = parse_uint(std::string_view(compact).substr(eb, pos - eb), "exponent");
            }
        } else if (!has_coef) {
            throw DomainError("malformed polynomial literal '" + std::string(text) + "'");
        }
        if (negative)
            coef = -coef;
        auto it = terms.find(exponent);
        if (it == terms.end())
            terms.emplace(exponent, coef);
        else
            it->second += coef;

        if (pos == compact.size())
            break;
        if (compact[pos] != '+' && compact[pos] != '-')
            throw DomainError("unexpected character '" + std::string(1, compact[pos]) +
                              "' in polynomial literal '" + std::string(text) + "'");
        negative = compact[pos] == '-';
        ++pos;
        if (pos == compact.size())
            throw DomainError("dangling operator in polynomial literal '" + std::string(text) + "'");
    }

    std::vector<FieldElement> coeffs(terms.rbegin()->first + 1, field.zero());
    for (const auto& [e, c] : terms)
        coeffs[e] = c;
    return SkewPoly(ctx, std::move(coeffs));
}

} // namespace

FiniteField parse_field(std::string_view spec, std::optional<std::string_view> modulus) {
    spec = strip(spec);
    std::uint32_t p = 0, n = 0;
    if (const auto caret = spec.find('^'); caret != std::string_view::npos) {
        p = static_cast<std::uint32_t>(parse_uint(spec.substr(0, caret), "characteristic"));
        n = static_cast<std::uint32_t>(parse_uint(spec.substr(caret + 1), "extension degree"));
        if (!is_prime(p))
            throw DomainError("characteristic " + std::to_string(p) + " is not prime");
        if (n == 0)
            throw DomainError("extension degree must be at least 1");
    } else {
        const auto q = parse_uint(spec, "field order");
        const auto pn = split_prime_power(q);
        if (!pn)
            throw DomainError(std::to_string(q) + " is not a prime power");
        p = pn->first;
        n = pn->second;
    }
    if (!modulus)
        return FiniteField::make(p, n);
    std::vector<std::uint32_t> digits;
    for (auto part : split(*modulus, ','))
        digits.push_back(static_cast<std::uint32_t>(parse_uint(part, "modulus digit")));
    if (digits.size() != n + 1)
        throw DomainError("modulus must have " + std::to_string(n + 1) + " digits for degree " +
                          std::to_string(n));
    return FiniteField::make(p, std::move(digits));
}

FieldElement parse_element(const FiniteField& field, std::string_view text) {
    return field.element(parse_uint(text, "field element"));
}

SkewPoly parse_poly(const SkewContext& ctx, std::string_view text) {
    text = strip(text);
    if (text.find('t') != std::string_view::npos)
        return parse_symbolic(ctx, text);
    return SkewPoly(ctx, parse_vector(ctx.field(), text));
}

Vector parse_vector(const FiniteField& field, std::string_view text) {
    Vector out;
    for (auto part : split(strip(text), ','))
        out.push_back(parse_element(field, part));
    return out;
}

std::string format_vector(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i].value());
    }
    return out;
}

std::vector<Vector> parse_matrix(const FiniteField& field, std::string_view text) {
    std::vector<Vector> rows;
    for (auto part : split(strip(text), ';'))
        rows.push_back(parse_vector(field, part));
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw DomainError("matrix rows have different lengths");
    return rows;
}

std::string format_catalog(const Catalog& catalog) {
    const SkewPoly f = SkewPoly::binomial(catalog.context, catalog.m, catalog.d);
    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"g", "[m,k,dmin]", "constacyclic", "trivial"});
    for (const auto& row : catalog.rows) {
        const std::string dmin = row.min_distance ? std::to_string(*row.min_distance) : "-";
        cells.push_back({row.g.to_string(),
                         "[" + std::to_string(row.length) + "," + std::to_string(row.dimension) +
                             "," + dmin + "]",
                         row.constacyclic ? "yes" : "no", row.trivial ? "yes" : "no"});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& r : cells)
        for (std::size_t c = 0; c < 4; ++c)
            width[c] = std::max(width[c], r[c].size());

    std::ostringstream out;
    out << "catalog " << catalog.context.describe() << " f=" << f.to_string() << " (m=" << catalog.m
        << ", d=" << catalog.d.value() << ")\n";
    for (const auto& r : cells) {
        std::string line;
        for (std::size_t c = 0; c < 4; ++c) {
            line += r[c];
            if (c + 1 < 4)
                line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

nlohmann::ordered_json field_to_json(const FiniteField& field) {
    return {{"p", field.characteristic()}, {"n", field.degree()}, {"modulus", field.modulus()}};
}

FiniteField field_from_json(const nlohmann::ordered_json& j) {
    try {
        return FiniteField::make(j.at("p").get<std::uint32_t>(),
                                 j.at("modulus").get<std::vector<std::uint32_t>>());
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed field description: ") + e.what());
    }
}

nlohmann::ordered_json catalog_to_json(const Catalog& catalog) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : catalog.rows) {
        nlohmann::ordered_json r;
        r["g"] = row.g.to_string();
        r["k"] = row.dimension;
        r["dmin"] = row.min_distance ? nlohmann::ordered_json(*row.min_distance)
                                     : nlohmann::ordered_json(nullptr);
        r["constacyclic"] = row.constacyclic;
        r["trivial"] = row.trivial;
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json j;
    j["field"] = field_to_json(catalog.context.field());
    j["sigma"] = catalog.context.sigma().exponent();
    j["m"] = catalog.m;
    j["d"] = catalog.d.value();
    j["rows"] = std::move(rows);
    return j;
}

Catalog catalog_from_json(const nlohmann::ordered_json& j) {
    try {
        const FiniteField field = field_from_json(j.at("field"));
        const SkewContext ctx(field, j.at("sigma").get<std::uint32_t>());
        Catalog out{ctx, j.at("m").get<std::size_t>(), field.element(j.at("d").get<std::uint64_t>()), {}};
        for (const auto& r : j.at("rows")) {
            std::optional<std::size_t> dmin;
            if (!r.at("dmin").is_null())
                dmin = r.at("dmin").get<std::size_t>();
            out.rows.push_back(CatalogRow{parse_poly(ctx, r.at("g").get<std::string>()), out.m,
                                          r.at("k").get<std::size_t>(), dmin,
                                          r.at("constacyclic").get<bool>(),
                                          r.at("trivial").get<bool>()});
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed catalog document: ") + e.what());
    }
}

} // namespace skewlab
