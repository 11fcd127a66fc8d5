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

#include "skewlab/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewlab/codes.hpp"
#include "skewlab/errors.hpp"
#include "skewlab/field.hpp"
#include "skewlab/io.hpp"
#include "skewlab/petit_algebra.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
    std::string field = "2";
    std::optional<std::string> modulus;
    std::uint32_t sigma = 0;
    std::optional<std::uint32_t> delta;
    std::uint64_t limit = kDefaultSearchLimit;
    bool json = false;
};

struct Env {
    SkewContext ctx;
    std::uint64_t limit;
    bool json;
    std::ostream& out;

    const FiniteField& field() const { return ctx.field(); }
    SkewPoly poly(const std::string& s) const { return parse_poly(ctx, s); }
    void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

SkewContext build_context(const Globals& g) {
    const FiniteField field = parse_field(g.field, g.modulus ? std::optional<std::string_view>(*g.modulus)
                                                             : std::nullopt);
    if (g.sigma >= field.degree())
        throw DomainError("--sigma must be in [0, " + std::to_string(field.degree()) + ") for " +
                          field.name());
    if (g.limit == 0)
        throw DomainError("--limit must be positive");
    const Automorphism sigma(field, g.sigma);
    if (!g.delta)
        return SkewContext(sigma, Derivation::zero(sigma));
    const FieldElement beta = field.element(*g.delta);
    if (!beta.is_zero() && sigma.is_identity())
        throw DomainError("--delta requires a non-identity sigma");
    return SkewContext(sigma, Derivation::inner(sigma, beta));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_elements(const std::vector<FieldElement>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i].value());
    return out;
}

Json elements_json(const std::vector<FieldElement>& v) {
    Json j = Json::array();
    for (const auto& e : v)
        j.push_back(e.value());
    return j;
}

PetitAlgebra algebra_for(const Env& env, const std::string& f) { return PetitAlgebra(env.poly(f)); }

void field_info(const Env& env) {
    const auto& field = env.field();
    const auto& sigma = env.ctx.sigma();
    const auto fixed = fixed_field(sigma);
    if (env.json) {
        Json j;
        j["field"] = field_to_json(field);
        j["order"] = field.order();
        j["primitive"] = field.primitive().value();
        j["sigma"] = {{"exponent", sigma.exponent()}, {"order", sigma.order()}};
        j["fixed_field"] = elements_json(fixed);
        j["delta"] = env.ctx.delta().is_zero() ? Json(nullptr) : Json(env.ctx.delta().beta()->value());
        env.emit(j);
        return;
    }
    env.out << "field: " << field.name() << '\n'
            << "characteristic: " << field.characteristic() << '\n'
            << "degree: " << field.degree() << '\n'
            << "modulus: " << field.modulus_string() << '\n'
            << "primitive element: " << field.primitive().value() << '\n'
            << "sigma: frob^" << sigma.exponent() << " (order " << sigma.order() << ")\n"
            << "fixed field: " << join_elements(fixed) << " (size " << fixed.size() << ")\n"
            << "delta: "
            << (env.ctx.delta().is_zero() ? std::string("0")
                                          : "inner(" + std::to_string(env.ctx.delta().beta()->value()) + ")")
            << '\n';
}

void skew_mul(const Env& env, const std::string& a, const std::string& b) {
    const SkewPoly p = env.poly(a) * env.poly(b);
    if (env.json)
        return env.emit({{"product", p.to_string()}});
    env.out << "product: " << p.to_string() << '\n';
}

void skew_divmod(const Env& env, const std::string& g, const std::string& f) {
    const DivMod qr = right_divmod(env.poly(g), env.poly(f));
    if (env.json)
        return env.emit({{"quotient", qr.quotient.to_string()}, {"remainder", qr.remainder.to_string()}});
    env.out << "quotient: " << qr.quotient.to_string() << '\n'
            << "remainder: " << qr.remainder.to_string() << '\n';
}

void skew_rgcd(const Env& env, const std::string& a, const std::string& b) {
    const SkewPoly g = right_gcd(env.poly(a), env.poly(b));
    if (env.json)
        return env.emit({{"rgcd", g.to_string()}});
    env.out << "rgcd: " << g.to_string() << '\n';
}

void skew_divisors(const Env& env, const std::string& f, int k) {
    const auto divisors = right_divisors_of_degree(env.poly(f), k, env.limit);
    if (env.json) {
        Json list = Json::array();
        for (const auto& g : divisors)
            list.push_back(g.to_string());
        return env.emit({{"degree", k}, {"divisors", list}});
    }
    for (const auto& g : divisors)
        env.out << g.to_string() << '\n';
    env.out << "count: " << divisors.size() << '\n';
}

void skew_two_sided(const Env& env, const std::string& f) {
    const TwoSidedReport r = two_sided_report(env.poly(f));
    if (env.json) {
        Json j{{"two_sided", r.two_sided}};
        j["order_divides_degree"] = r.order_divides_degree ? Json(*r.order_divides_degree) : Json(nullptr);
        j["degree_divides_order"] = r.degree_divides_order ? Json(*r.degree_divides_order) : Json(nullptr);
        return env.emit(j);
    }
    env.out << "two-sided: " << yes_no(r.two_sided) << '\n';
    const auto line = [&](const char* label, const std::optional<bool>& v) {
        if (!v)
            return;
        env.out << label << yes_no(*v);
        if (*v != r.two_sided)
            env.out << " (disagrees with remainder test)";
        env.out << '\n';
    };
    line("criterion ord(sigma) | m and d in Fix(sigma): ", r.order_divides_degree);
    line("criterion m | ord(sigma) and d in Fix(sigma): ", r.degree_divides_order);
}

void skew_irreducible(const Env& env, const std::string& f) {
    const bool irr = is_irreducible(env.poly(f), env.limit);
    if (env.json)
        return env.emit({{"irreducible", irr}});
    env.out << "irreducible: " << yes_no(irr) << '\n';
}

void skew_norm(const Env& env, const std::string& z, std::size_t m) {
    const FieldElement n = norm(parse_element(env.field(), z), m, env.ctx.sigma());
    if (env.json)
        return env.emit({{"norm", n.value()}});
    env.out << "norm: " << n.value() << '\n';
}

void sf_mul(const Env& env, const std::string& f, const std::string& a, const std::string& b) {
    const PetitAlgebra alg = algebra_for(env, f);
    const AlgElement p = alg.element(env.poly(a)) * alg.element(env.poly(b));
    if (env.json)
        return env.emit({{"product", p.to_string()}});
    env.out << "product: " << p.to_string() << '\n';
}

void sf_nucleus(const Env& env, const std::string& f) {
    const auto nucleus = nucleus_field(algebra_for(env, f));
    if (env.json)
        return env.emit({{"nucleus", elements_json(nucleus)}, {"size", nucleus.size()}});
    env.out << "nucleus: " << join_elements(nucleus) << " (size " << nucleus.size() << ")\n";
}

void sf_zero_divisors(const Env& env, const std::string& f) {
    const auto pair = find_zero_divisor(algebra_for(env, f), env.limit);
    if (env.json) {
        if (!pair)
            return env.emit({{"zero_divisor", nullptr}, {"division_algebra", true}});
        return env.emit({{"zero_divisor", {pair->first.to_string(), pair->second.to_string()}},
                         {"division_algebra", false}});
    }
    if (!pair)
        env.out << "none (division algebra / semifield)\n";
    else
        env.out << "zero divisor: (" << pair->first.to_string() << ") o (" << pair->second.to_string()
                << ") = 0\n";
}

void sf_ideals(const Env& env, const std::string& f) {
    const PetitAlgebra alg = algebra_for(env, f);
    const auto ideals = all_left_ideals(alg, env.limit);
    Json list = Json::array();
    for (const auto& I : ideals) {
        std::vector<std::string> basis;
        for (const auto& b : I.basis())
            basis.push_back(b.to_string());
        if (env.json) {
            list.push_back({{"generator", I.generator().to_string()},
                            {"dimension", I.dimension()},
                            {"basis", basis}});
            continue;
        }
        env.out << "g=" << I.generator().to_string() << "  dim=" << I.dimension() << "  basis: ";
        if (basis.empty())
            env.out << "(zero ideal)";
        for (std::size_t i = 0; i < basis.size(); ++i)
            env.out << (i ? "; " : "") << basis[i];
        env.out << '\n';
    }
    if (env.json)
        env.emit({{"ideals", list}});
}

void sf_associative(const Env& env, const std::string& f) {
    const auto w = find_associator_witness(algebra_for(env, f), env.limit);
    if (env.json) {
        Json j{{"associative", !w}};
        if (w)
            j["witness"] = {{"x", w->x.to_string()}, {"y", w->y.to_string()}, {"z", w->z.to_string()},
                            {"left", w->left.to_string()}, {"right", w->right.to_string()}};
        return env.emit(j);
    }
    env.out << "associative: " << yes_no(!w) << '\n';
    if (w)
        env.out << "witness: ((" << w->x.to_string() << ") o (" << w->y.to_string() << ")) o ("
                << w->z.to_string() << ") = " << w->left.to_string() << ", (" << w->x.to_string()
                << ") o ((" << w->y.to_string() << ") o (" << w->z.to_string()
                << ")) = " << w->right.to_string() << '\n';
}

void print_code(const Env& env, const LinearCode& code) {
    const DistanceReport dist = min_distance(code, env.limit);
    const std::string dmin = dist.min_distance ? std::to_string(*dist.min_distance) : "-";
    if (env.json) {
        Json rows = Json::array();
        for (const auto& r : code.generator())
            rows.push_back(format_vector(r));
        return env.emit({{"length", code.length()},
                         {"dimension", code.dimension()},
                         {"dmin", dist.min_distance ? Json(*dist.min_distance) : Json(nullptr)},
                         {"generator", rows},
                         {"weight_distribution", dist.weight_distribution}});
    }
    env.out << "code: [" << code.length() << "," << code.dimension() << "," << dmin << "]\n"
            << "generator:\n";
    for (const auto& r : code.generator())
        env.out << "  " << format_vector(r) << '\n';
    env.out << "weight distribution:";
    for (auto w : dist.weight_distribution)
        env.out << ' ' << w;
    env.out << '\n';
}

void code_from_divisor_cmd(const Env& env, const std::string& f, const std::string& g) {
    const PetitAlgebra alg = algebra_for(env, f);
    print_code(env, code_from_divisor(alg, env.poly(g)));
}

void code_shift(const Env& env, const std::string& word, const std::string& d) {
    const Codeword w = constacyclic_shift(parse_vector(env.field(), word), env.ctx.sigma(),
                                          parse_element(env.field(), d));
    if (env.json)
        return env.emit({{"shifted", format_vector(w)}});
    env.out << format_vector(w) << '\n';
}

void code_check(const Env& env, const std::string& f, const std::string& matrix) {
    const SkewPoly fp = env.poly(f);
    const auto rows = parse_matrix(env.field(), matrix);
    const std::size_t length = rows.empty() ? 0 : rows.front().size();
    const LinearCode code(env.field(), length, rows);
    const TheoremVerdict v = theorem_roundtrip(code, fp, env.limit);
    if (env.json)
        return env.emit({{"constacyclic", v.constacyclic},
                         {"left_ideal", v.left_ideal},
                         {"divisor_generated", v.divisor_generated},
                         {"generator", v.generator ? Json(v.generator->to_string()) : Json(nullptr)},
                         {"consistent", v.consistent()}});
    env.out << "constacyclic: " << yes_no(v.constacyclic) << '\n'
            << "left ideal: " << yes_no(v.left_ideal) << '\n'
            << "divisor generated: " << yes_no(v.divisor_generated);
    if (v.generator)
        env.out << " (g=" << v.generator->to_string() << ")";
    env.out << '\n' << "consistent: " << yes_no(v.consistent()) << '\n';
}

void code_catalog(const Env& env, std::size_t m, const std::string& d) {
    const Catalog c = catalog(env.ctx, m, parse_element(env.field(), d), env.limit);
    if (env.json)
        return env.emit(catalog_to_json(c));
    env.out << format_catalog(c);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skew polynomial rings, Petit algebras and sigma-constacyclic codes over finite fields",
                 "skewlab"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--field", g.field, "Field order q or p^n (e.g. 4, 2^2, 9)")->required();
    app.add_option("--modulus", g.modulus, "Override modulus: ascending F_p digits c0,...,cn");
    app.add_option("--sigma", g.sigma, "Frobenius exponent k, sigma(a) = a^(p^k)");
    app.add_option("--delta", g.delta, "Inner derivation parameter beta (integer encoding)");
    app.add_option("--limit", g.limit, "Search guard (candidates / codewords)")
        ->capture_default_str();
    app.add_flag("--json", g.json, "Machine-readable JSON output");

    std::string a1, a2, a3;
    int deg = 0;
    std::size_t m = 0;
    std::string constant = "1";

    std::vector<std::pair<CLI::App*, std::function<void(const Env&)>>> actions;
    const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                          std::vector<std::pair<std::string, std::string*>> positionals,
                          std::function<void(const Env&)> action) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        for (auto& [pname, target] : positionals)
            sub->add_option(pname, *target)->required();
        actions.emplace_back(sub, std::move(action));
        return sub;
    };

    auto* field_cmd = app.add_subcommand("field", "Field information")->require_subcommand(1);
    leaf(field_cmd, "info", "Modulus, primitive element, sigma and its fixed field", {},
         [&](const Env& e) { field_info(e); });

    auto* skew = app.add_subcommand("skew", "Skew polynomial arithmetic")->require_subcommand(1);
    leaf(skew, "mul", "Product f*g", {{"f", &a1}, {"g", &a2}},
         [&](const Env& e) { skew_mul(e, a1, a2); });
    leaf(skew, "divmod", "Right division g = q*f + r", {{"g", &a1}, {"f", &a2}},
         [&](const Env& e) { skew_divmod(e, a1, a2); });
    leaf(skew, "rgcd", "Monic greatest common right divisor", {{"f", &a1}, {"g", &a2}},
         [&](const Env& e) { skew_rgcd(e, a1, a2); });
    leaf(skew, "divisors", "Monic right divisors of a given degree", {{"f", &a1}},
         [&](const Env& e) { skew_divisors(e, a1, deg); })
        ->add_option("--deg", deg, "Divisor degree k")
        ->required();
    leaf(skew, "two-sided", "Is Rf = fR?", {{"f", &a1}}, [&](const Env& e) { skew_two_sided(e, a1); });
    leaf(skew, "irreducible", "Exhaustive irreducibility test", {{"f", &a1}},
         [&](const Env& e) { skew_irreducible(e, a1); });
    leaf(skew, "norm", "sigma^{m-1}(z)...sigma(z)z", {{"z", &a1}},
         [&](const Env& e) { skew_norm(e, a1, m); })
        ->add_option("--m", m, "Number of factors")
        ->required();

    auto* sf = app.add_subcommand("sf", "The algebra S_f")->require_subcommand(1);
    leaf(sf, "mul", "Product a o b = ab mod_r f", {{"f", &a1}, {"a", &a2}, {"b", &a3}},
         [&](const Env& e) { sf_mul(e, a1, a2, a3); });
    leaf(sf, "nucleus", "The field F_0 of elements commuting with S_f", {{"f", &a1}},
         [&](const Env& e) { sf_nucleus(e, a1); });
    leaf(sf, "zero-divisors", "First zero-divisor pair, or none", {{"f", &a1}},
         [&](const Env& e) { sf_zero_divisors(e, a1); });
    leaf(sf, "ideals", "All left ideals, one per monic right divisor", {{"f", &a1}},
         [&](const Env& e) { sf_ideals(e, a1); });
    leaf(sf, "associative", "Associator scan over monomials", {{"f", &a1}},
         [&](const Env& e) { sf_associative(e, a1); });

    auto* code = app.add_subcommand("code", "Linear codes")->require_subcommand(1);
    leaf(code, "from-divisor", "Code of the left ideal generated by g", {{"f", &a1}, {"g", &a2}},
         [&](const Env& e) { code_from_divisor_cmd(e, a1, a2); });
    leaf(code, "shift", "sigma-constacyclic shift of a word", {{"word", &a1}},
         [&](const Env& e) { code_shift(e, a1, constant); })
        ->add_option("--constant", constant, "Constant d")
        ->required();
    leaf(code, "check", "Constacyclic / left ideal / divisor agreement for a code",
         {{"f", &a1}, {"genmatrix", &a2}}, [&](const Env& e) { code_check(e, a1, a2); });
    auto* cat = leaf(code, "catalog", "All divisor codes of t^m - d", {},
                     [&](const Env& e) { code_catalog(e, m, constant); });
    cat->add_option("--m", m, "Code length m")->required();
    cat->add_option("--constant", constant, "Constant d")->required();

    std::vector<const char*> argv{"skewlab"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code_ = app.exit(e, out, err);
        return code_ == 0 ? kExitOk : kExitDomainError;
    }

    try {
        const Env env{build_context(g), g.limit, g.json, out};
        for (const auto& [sub, action] : actions)
            if (sub->parsed()) {
                action(env);
                break;
            }
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuardExceeded;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

} // namespace skewlab::cli
