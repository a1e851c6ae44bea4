/*
   Copyright 2026 The brauer-residues Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_TOOLS_CLI_APP_HPP
#define BRAUER_TOOLS_CLI_APP_HPP

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/brauer.hpp"
#include "brauer/random_inputs.hpp"

namespace brauer::cli {

using json = nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParseFailure = 2,
    kConstraintViolation = 3,
    kSizeGuard = 4,
    kNonStandard = 5,
};

struct Report {
    explicit Report(std::string name = {}) : command(std::move(name)) {}

    std::string command;
    json params = json::object();
    json results = json::object();
    bool pass = true;
    std::vector<std::string> lines;

    json to_json() const { return json{{"command", command}, {"params", params}, {"results", results}, {"pass", pass}}; }
};

inline json to_json(const ResidueClass& r) { return json{{"value", r.value}, {"n", r.n}, {"zeta", r.zeta.index()}}; }

inline std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

/// Field of order q together with the check that mu_n lies in it.
inline FiniteField kummer_field(u64 q, u64 n) {
    FiniteField F = finite_field_of_order(q);
    require_roots_of_unity(F, n);
    return F;
}

inline Report cmd_residue(u64 q, u64 n, const std::string& symbol, const std::string& place) {
    const FiniteField F = kummer_field(q, n);
    const SymbolClass alpha = parse_symbol(symbol, F, n);
    const Place P = parse_place(place, F);
    const ResidueClass r = tame_residue(alpha, P);
    Report rep{"residue"};
    rep.params = {{"q", q}, {"n", n}, {"symbol", symbol}, {"place", place}};
    rep.results = {{"place", P.to_string()}, {"residue", to_json(r)}};
    rep.lines.push_back(r.is_zero() ? "0" : r.to_string());
    return rep;
}

inline Report cmd_ramification(u64 q, u64 n, const std::string& symbol) {
    const FiniteField F = kummer_field(q, n);
    const RamificationDivisor D = ramification_divisor(parse_symbol(symbol, F, n));
    Report rep{"ramification"};
    rep.params = {{"q", q}, {"n", n}, {"symbol", symbol}};
    json entries = json::array();
    for (const auto& [P, r] : D.entries) entries.push_back({{"place", P.to_string()}, {"residue", to_json(r)}});
    rep.results = {{"divisor", entries}};
    rep.lines.push_back(D.to_string());
    return rep;
}

inline Report cmd_reciprocity(u64 q, u64 n, const std::string& symbol) {
    const FiniteField F = kummer_field(q, n);
    const SymbolClass alpha = parse_symbol(symbol, F, n);
    Report rep{"reciprocity"};
    rep.params = {{"q", q}, {"n", n}, {"symbol", symbol}};
    json places = json::array();
    u64 sum = 0;
    if (!alpha.terms().empty()) {
        for (const auto& e : reciprocity_breakdown(alpha)) {
            places.push_back({{"place", e.place.to_string()}, {"local", to_json(e.local)}, {"corestricted", to_json(e.corestricted)}});
            rep.lines.push_back(e.place.to_string() + ": local=" + std::to_string(e.local.value) +
                                " corestricted=" + std::to_string(e.corestricted.value));
            sum = (sum + e.corestricted.value) % n;
        }
    }
    rep.results = {{"places", places}, {"sum", sum}};
    rep.pass = sum == 0;
    rep.lines.push_back("sum=" + std::to_string(sum));
    return rep;
}

inline std::vector<u64> parse_moduli(const std::string& text) {
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 1) throw ParseError("bad group factor '" + item + "'");
            out.push_back(static_cast<u64>(v));
        } catch (const std::logic_error&) {
            throw ParseError("bad group factor '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError("empty group description");
    return out;
}

inline std::string group_name(const std::vector<u64>& moduli) {
    std::string s;
    for (std::size_t i = 0; i < moduli.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(moduli[i]);
    return s;
}

inline std::string list_string(const std::vector<u64>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

struct CohomologyArgs {
    std::string kind;
    u64 n = 0;
    std::optional<u64> q;
    std::optional<std::string> group;
    std::optional<u64> m;
    unsigned degree = 2;
};

inline Report cmd_cohomology(const CohomologyArgs& a) {
    Report rep{"cohomology"};
    rep.params = {{"kind", a.kind}, {"n", a.n}};
    if (a.n < 1) throw ConstraintError("n must be positive");
    if (a.kind == "edge") {
        const Cochain image = lhs_edge_map(cup_product_boxtimes(a.n));
        const u64 value = image.at({1 % a.n});
        rep.pass = image == identity_homomorphism(a.n);
        rep.results = {{"edge_value", value}, {"is_identity", rep.pass}};
        rep.lines.push_back("1_boxtimes_1 -> " + std::to_string(value) + " : " + pass_word(rep.pass));
    } else if (a.kind == "epsilon") {
        const UnitTable eps = epsilon_cocycle(a.n);
        json table = json::array();
        for (const auto& u : eps.values) table.push_back(u.to_string());
        rep.pass = verify_coboundary_identity(a.n);
        rep.results = {{"epsilon", table}, {"identity_holds", rep.pass}};
        rep.lines.push_back("d(pi^{b/n}) = eps^-1 * beta^b' (n=" + std::to_string(a.n) + ") coboundary identity : " + pass_word(rep.pass));
    } else if (a.kind == "gamma") {
        if (!a.q) throw ParseError("cohomology gamma requires --q");
        rep.params["q"] = *a.q;
        const FactorSet fs = extension_factor_set(a.n, *a.q);
        const bool matches = cocycles_cohomologous(fs.cocycle, twisted_boxtimes(a.n));
        const bool minus_boxtimes = cocycles_cohomologous(fs.cocycle, cup_product_boxtimes(a.n).scaled(-1));
        const bool trivial = cocycles_cohomologous(fs.cocycle, Cochain(torsor_group(a.n), 2, a.n));
        rep.pass = matches && minus_boxtimes && !trivial;
        rep.results = {{"extension_order", fs.extension_order},
                       {"cohomologous_to_twisted", matches},
                       {"cohomologous_to_minus_boxtimes", minus_boxtimes},
                       {"trivial", trivial}};
        rep.lines.push_back("|Gamma| = " + std::to_string(fs.extension_order));
        rep.lines.push_back("factor set ~ -(1x1) : " + pass_word(matches && minus_boxtimes));
        rep.lines.push_back("factor set nontrivial : " + pass_word(!trivial));
    } else if (a.kind == "rank") {
        const std::vector<u64> moduli = a.group ? parse_moduli(*a.group) : std::vector<u64>{a.n, a.n};
        const u64 m = a.m.value_or(a.n);
        const auto ranks = cohomology_rank(FiniteAbelianGroup(moduli), m, a.degree);
        rep.params["group"] = moduli;
        rep.params["m"] = m;
        rep.params["degree"] = a.degree;
        rep.results = {{"invariant_factors", ranks}};
        rep.lines.push_back("H^" + std::to_string(a.degree) + "(" + group_name(moduli) + ", Z/" + std::to_string(m) + ") = " + list_string(ranks));
    } else {
        throw ParseError("unknown cohomology computation '" + a.kind + "' (edge|epsilon|gamma|rank)");
    }
    return rep;
}

inline Report cmd_conic(u64 q, const std::string& a, const std::string& b) {
    const FiniteField F = finite_field_of_order(q);
    if (F.characteristic() == 2) throw ConstraintError("q must be odd for conic bundles");
    const RatFunc fa = parse_ratfunc(a, F), fb = parse_ratfunc(b, F);
    if (fa.is_zero() || fb.is_zero()) throw ConstraintError("conic coefficients must be nonzero");
    const ConicBundle C(fa, fb);
    Report rep{"conic"};
    rep.params = {{"q", q}, {"a", a}, {"b", b}};
    json rows = json::array();
    for (const auto& row : check_artin(C)) {
        rows.push_back({{"place", row.place.to_string()}, {"geometric", to_json(row.geometric)}, {"residue", to_json(row.residue)}, {"agree", row.agree}});
        rep.lines.push_back(row.place.to_string() + " geometric=" + std::to_string(row.geometric.value) +
                            " residue=" + std::to_string(row.residue.value) + " agree=" + (row.agree ? "true" : "false"));
        rep.pass = rep.pass && row.agree;
    }
    if (rows.empty()) rep.lines.push_back("unramified everywhere");
    rep.results = {{"rows", rows}};
    return rep;
}

/// Randomized property battery driven by BRAUER_SEED.
inline Report cmd_selftest() {
    const char* env = std::getenv("BRAUER_SEED");
    u64 seed = 1;
    if (env != nullptr) {
        try {
            seed = std::stoull(env);
        } catch (const std::logic_error&) {
            throw ParseError(std::string("BRAUER_SEED is not an integer: ") + env);
        }
    }
    std::mt19937_64 rng(seed);
    Report rep{"selftest"};
    rep.params = {{"seed", seed}};
    json checks = json::array();
    auto record = [&](const std::string& name, std::size_t cases, std::size_t failures) {
        const bool ok = failures == 0;
        rep.pass = rep.pass && ok;
        checks.push_back({{"name", name}, {"cases", cases}, {"failures", failures}, {"pass", ok}});
        rep.lines.push_back("selftest " + name + ": " + pass_word(ok) + " (" + std::to_string(cases) + " cases)");
    };
    const struct {
        u64 q, n;
    } configs[] = {{5, 2}, {5, 4}, {13, 3}, {13, 4}, {13, 6}};

    std::size_t cases = 0, bad = 0;
    for (const auto& c : configs) {
        const FiniteField F = finite_field_of_order(c.q);
        for (int i = 0; i < 4; ++i, ++cases)
            if (!reciprocity_sum(random::symbol(F, c.n, 3, 3, rng)).is_zero()) ++bad;
    }
    record("reciprocity", cases, bad);

    cases = bad = 0;
    for (const auto& c : configs) {
        const FiniteField F = finite_field_of_order(c.q);
        for (int i = 0; i < 6; ++i) {
            RatFunc a = random::ratfunc(F, 3, 2, rng);
            const RatFunc one_minus = RatFunc::from_int(F, 1) - a;
            if (one_minus.is_zero()) continue;
            const SymbolClass s = SymbolClass::single(a, one_minus, c.n);
            for (const auto& P : candidate_places(s)) {
                ++cases;
                if (!tame_residue(s, P).is_zero()) ++bad;
            }
        }
    }
    record("steinberg", cases, bad);

    cases = bad = 0;
    for (const auto& c : configs) {
        const FiniteField F = finite_field_of_order(c.q);
        for (int i = 0; i < 6; ++i, ++cases) {
            const Place P = random::place(F, 2, rng);
            const RatFunc u = random::unit_at(P, 3, rng);
            const i64 j = std::uniform_int_distribution<i64>(0, static_cast<i64>(c.n) - 1)(rng);
            const ResidueClass via_cocycle = residue_cocycle_route(j, u, P, c.n);
            const ResidueClass via_symbol = tame_residue(SymbolClass::single(P.uniformizer().pow(j), u, c.n), P);
            if (!(via_cocycle == via_symbol)) ++bad;
        }
    }
    record("route-agreement", cases, bad);

    cases = bad = 0;
    for (u64 q : {5, 13}) {
        const FiniteField F = finite_field_of_order(q);
        for (int i = 0; i < 5; ++i) {
            const ConicBundle C = random::conic(F, 3, rng);
            for (const auto& row : check_artin(C)) {
                ++cases;
                const u64 kappa = ResidueField(row.place).order();
                const u64 points = count_fiber_points(C, row.place, 1);
                const bool oracle = row.geometric.is_zero() ? points == 2 * kappa + 1 : points == 1;
                if (!row.agree || !oracle) ++bad;
            }
        }
    }
    record("artin", cases, bad);

    rep.results = {{"checks", checks}};
    return rep;
}

inline void emit(const Report& rep, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << rep.to_json().dump(2) << '\n';
        return;
    }
    for (const auto& line : rep.lines) out << line << '\n';
}

/// Entry point shared by the executable and the tests; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Residues of Brauer classes over F_q(t)"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.fallthrough();

    u64 q = 0, n = 0;
    std::string symbol, place, conic_a, conic_b;

    auto* residue = app.add_subcommand("residue", "Residue of a symbol class at one place");
    residue->add_option("--q", q, "Field order")->required();
    residue->add_option("--n", n, "Torsion order, must divide q-1")->required();
    residue->add_option("--symbol", symbol, "Symbols such as \"(t,2)_2 + (t+1,3)_2\"")->required();
    residue->add_option("--place", place, "Monic irreducible polynomial in t, or inf")->required();

    auto* ramification = app.add_subcommand("ramification", "All places with nonzero residue");
    ramification->add_option("--q", q)->required();
    ramification->add_option("--n", n)->required();
    ramification->add_option("--symbol", symbol)->required();

    auto* reciprocity = app.add_subcommand("reciprocity", "Sum of corestricted residues over all places");
    reciprocity->add_option("--q", q)->required();
    reciprocity->add_option("--n", n)->required();
    reciprocity->add_option("--symbol", symbol)->required();

    CohomologyArgs coh;
    u64 coh_q = 0, coh_m = 0;
    std::string coh_group;
    auto* cohomology = app.add_subcommand("cohomology", "Cocycle computations on mu_n x Z/n");
    cohomology->add_option("kind", coh.kind, "edge | epsilon | gamma | rank")->required();
    cohomology->add_option("--n", coh.n)->required();
    auto* coh_q_opt = cohomology->add_option("--q", coh_q, "Field order for gamma");
    auto* coh_group_opt = cohomology->add_option("--group", coh_group, "Cyclic factor orders for rank, e.g. 2,2");
    auto* coh_m_opt = cohomology->add_option("--m", coh_m, "Coefficient modulus for rank (default n)");
    cohomology->add_option("--degree", coh.degree, "Cohomological degree for rank");

    auto* conic = app.add_subcommand("conic", "Component torsors versus residues for a x^2 + b y^2 = z^2");
    conic->add_option("--q", q)->required();
    conic->add_option("--a", conic_a)->required();
    conic->add_option("--b", conic_b)->required();

    auto* selftest = app.add_subcommand("selftest", "Randomized property checks (seed from BRAUER_SEED)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseFailure;
    }

    try {
        Report rep;
        if (*residue) rep = cmd_residue(q, n, symbol, place);
        else if (*ramification) rep = cmd_ramification(q, n, symbol);
        else if (*reciprocity) rep = cmd_reciprocity(q, n, symbol);
        else if (*cohomology) {
            if (coh_q_opt->count() > 0) coh.q = coh_q;
            if (coh_group_opt->count() > 0) coh.group = coh_group;
            if (coh_m_opt->count() > 0) coh.m = coh_m;
            rep = cmd_cohomology(coh);
        } else if (*conic) rep = cmd_conic(q, conic_a, conic_b);
        else if (*selftest) rep = cmd_selftest();
        emit(rep, format, out);
        return rep.pass ? kOk : kCheckFailed;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const SizeGuardError& e) {
        err << "size guard: " << e.what() << '\n';
        return kSizeGuard;
    } catch (const NonStandardModelError& e) {
        err << "non-standard model: " << e.what() << '\n';
        return kNonStandard;
    } catch (const ConstraintError& e) {
        err << "constraint violated: " << e.what() << '\n';
        return kConstraintViolation;
    } catch (const DomainError& e) {
        err << "constraint violated: " << e.what() << '\n';
        return kConstraintViolation;
    }
}

} // namespace brauer::cli

#endif // BRAUER_TOOLS_CLI_APP_HPP
