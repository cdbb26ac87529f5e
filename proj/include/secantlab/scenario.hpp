/*
   Copyright 2026 The secantlab authors

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

#ifndef SECANTLAB_SCENARIO_HPP
#define SECANTLAB_SCENARIO_HPP

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "secantlab/poly_io.hpp"
#include "secantlab/secant_sheaf.hpp"

namespace secantlab {

inline constexpr const char* kVersion = "0.1.0";

/// Malformed scenario input; the CLI maps it to exit code 2.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

struct GeneratorRequest {
    int ambient_dim = 0;
    int codim = 0;
    std::vector<int> degrees;
    Partition cycle_type;
    std::uint64_t seed = 0;
};

struct SubschemeSpec {
    std::optional<std::vector<std::pair<Rat, int>>> roots;
    std::optional<Partition> parts;
};

struct CheckSpec {
    std::string name;
    json equals;  // null when absent
    bool expect_fail = false;
};

struct Scenario {
    std::string name;
    std::optional<VarietySpec> variety;
    std::optional<GeneratorRequest> generate;
    std::optional<LineSpec> line;
    std::optional<SubschemeSpec> subscheme;
    bool contact = false;
    std::vector<int> twists;
    std::vector<CheckSpec> checks;
    std::optional<std::string> output;
};

namespace detail {

inline void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) throw ScenarioError("unknown key '" + it.key() + "' in " + where);
}

inline Rat rat_from_json(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Rat(v.get<long long>());
        if (v.is_string()) return Rat::parse(v.get<std::string>());
    } catch (const ArithmeticError& e) {
        throw ScenarioError(where + ": " + e.what());
    }
    throw ScenarioError(where + ": expected an integer or a rational string");
}

inline std::vector<Rat> point_from_json(const json& v, const std::string& where) {
    if (!v.is_array()) throw ScenarioError(where + ": expected an array of coordinates");
    std::vector<Rat> out;
    for (const auto& c : v) out.push_back(rat_from_json(c, where));
    return out;
}

inline Partition partition_from_json(const json& v, const std::string& where) {
    if (!v.is_array()) throw ScenarioError(where + ": expected an array of parts");
    std::vector<int> parts;
    for (const auto& p : v) {
        if (!p.is_number_integer() || p.get<long>() < 1) throw ScenarioError(where + ": parts must be positive integers");
        parts.push_back(p.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(where + ": " + e.what());
    }
}

}  // namespace detail

inline Scenario parse_scenario(const json& doc) {
    if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");
    detail::reject_unknown_keys(
        doc, {"name", "meta", "variety", "line", "subscheme", "contact", "twists", "checks", "output"}, "scenario");
    Scenario sc;
    sc.name = doc.value("name", std::string("unnamed"));

    if (!doc.contains("variety")) throw ScenarioError("scenario needs a 'variety'");
    const json& var = doc.at("variety");
    if (!var.is_object()) throw ScenarioError("'variety' must be an object");
    if (var.contains("generate")) {
        detail::reject_unknown_keys(var, {"generate"}, "variety");
        const json& g = var.at("generate");
        detail::reject_unknown_keys(g, {"ambient_dim", "codim", "degrees", "cycle_type", "seed"}, "variety.generate");
        GeneratorRequest req;
        try {
            req.ambient_dim = g.at("ambient_dim").get<int>();
            req.codim = g.at("codim").get<int>();
            for (const auto& d : g.at("degrees")) req.degrees.push_back(d.get<int>());
            req.cycle_type = detail::partition_from_json(g.at("cycle_type"), "variety.generate.cycle_type");
            req.seed = g.at("seed").get<std::uint64_t>();
        } catch (const json::exception& e) {
            throw ScenarioError(std::string("variety.generate: ") + e.what());
        }
        sc.generate = std::move(req);
        if (doc.contains("line")) throw ScenarioError("generated scenarios pin the line; drop 'line'");
    } else {
        detail::reject_unknown_keys(var, {"ambient_dim", "codim", "generators"}, "variety");
        int n, c;
        std::vector<MultiForm> gens;
        try {
            n = var.at("ambient_dim").get<int>();
            c = var.at("codim").get<int>();
            if (!var.at("generators").is_array()) throw ScenarioError("variety.generators must be an array");
            for (const auto& s : var.at("generators")) {
                if (!s.is_string()) throw ScenarioError("variety.generators entries must be strings");
                try {
                    gens.push_back(parse_form(s.get<std::string>(), n + 1));
                } catch (const PolyParseError& e) {
                    throw ScenarioError("generator '" + s.get<std::string>() + "': " + e.what());
                }
            }
        } catch (const json::exception& e) {
            throw ScenarioError(std::string("variety: ") + e.what());
        }
        try {
            sc.variety = VarietySpec::make(n, std::move(gens), c);
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(std::string("variety: ") + e.what());
        }
        if (!doc.contains("line")) throw ScenarioError("scenario with an inline variety needs a 'line'");
        const json& ln = doc.at("line");
        detail::reject_unknown_keys(ln, {"point_a", "point_b"}, "line");
        try {
            sc.line = LineSpec::make(detail::point_from_json(ln.at("point_a"), "line.point_a"),
                                     detail::point_from_json(ln.at("point_b"), "line.point_b"));
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(std::string("line: ") + e.what());
        } catch (const json::exception& e) {
            throw ScenarioError(std::string("line: ") + e.what());
        }
    }

    if (doc.contains("subscheme")) {
        const json& sub = doc.at("subscheme");
        detail::reject_unknown_keys(sub, {"roots", "parts"}, "subscheme");
        SubschemeSpec spec;
        if (sub.contains("roots") == sub.contains("parts"))
            throw ScenarioError("subscheme: give exactly one of 'roots' or 'parts'");
        if (sub.contains("roots")) {
            std::vector<std::pair<Rat, int>> roots;
            for (const auto& r : sub.at("roots")) {
                detail::reject_unknown_keys(r, {"root", "multiplicity"}, "subscheme.roots");
                try {
                    roots.emplace_back(detail::rat_from_json(r.at("root"), "subscheme root"),
                                       r.at("multiplicity").get<int>());
                } catch (const json::exception& e) {
                    throw ScenarioError(std::string("subscheme.roots: ") + e.what());
                }
            }
            spec.roots = std::move(roots);
        } else {
            spec.parts = detail::partition_from_json(sub.at("parts"), "subscheme.parts");
        }
        sc.subscheme = std::move(spec);
    }

    if (doc.contains("contact")) {
        if (!doc.at("contact").is_boolean()) throw ScenarioError("'contact' must be a boolean");
        sc.contact = doc.at("contact").get<bool>();
    }
    if (doc.contains("twists")) {
        if (!doc.at("twists").is_array()) throw ScenarioError("'twists' must be an array of integers");
        for (const auto& t : doc.at("twists")) {
            if (!t.is_number_integer()) throw ScenarioError("'twists' must be an array of integers");
            sc.twists.push_back(t.get<int>());
        }
    }
    if (doc.contains("checks")) {
        if (!doc.at("checks").is_array()) throw ScenarioError("'checks' must be an array");
        for (const auto& c : doc.at("checks")) {
            if (!c.is_object()) throw ScenarioError("each check must be an object");
            detail::reject_unknown_keys(c, {"name", "equals", "expect_fail"}, "check");
            CheckSpec spec;
            try {
                spec.name = c.at("name").get<std::string>();
            } catch (const json::exception&) {
                throw ScenarioError("each check needs a 'name'");
            }
            if (c.contains("equals")) spec.equals = c.at("equals");
            if (c.contains("expect_fail")) {
                if (!c.at("expect_fail").is_boolean()) throw ScenarioError("check.expect_fail must be a boolean");
                spec.expect_fail = c.at("expect_fail").get<bool>();
            }
            sc.checks.push_back(std::move(spec));
        }
    }
    if (doc.contains("output")) {
        if (!doc.at("output").is_string()) throw ScenarioError("'output' must be a string path");
        sc.output = doc.at("output").get<std::string>();
    }
    return sc;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ScenarioError("scenario '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_scenario(doc);
}

inline json checked_value_to_json(const CheckedValue& v) {
    return json{{"computed", v.computed}, {"predicted", v.predicted}, {"match", v.match}, {"rule", v.rule}};
}

inline json sheaf_report_to_json(const SheafReport& r) {
    json h0 = json::object();
    for (const auto& [t, v] : r.h0) h0[std::to_string(t)] = v;
    json out{{"ambient_dim", r.ambient_dim},
             {"codim", r.codim},
             {"length", r.length},
             {"support", r.support},
             {"cycle_type", r.type_z.parts()},
             {"subscheme",
              json{{"degree", r.sub_degree},
                   {"support", r.sub_support},
                   {"cycle_type", r.type_w.parts()},
                   {"full", r.full_subscheme}}},
             {"contact", r.contact},
             {"smooth_certified", r.smooth_certified},
             {"cofactors_coprime", r.cofactors_coprime},
             {"colength", checked_value_to_json(r.colength_check)},
             {"kernel_dim", checked_value_to_json(r.kernel_check)},
             {"h0", h0},
             {"h1", r.h1_image},
             {"h1_from_splitting", h1_from_splitting(r.splitting)},
             {"euler_char", r.euler_char_at_0},
             {"splitting", r.splitting},
             {"filling", r.filling}};
    out["h0_if_unobstructed"] = r.h0_check ? checked_value_to_json(*r.h0_check) : json();
    out["family_dim"] = r.family_dim_check ? checked_value_to_json(*r.family_dim_check) : json();
    return out;
}

struct CheckResult {
    std::string name;
    std::string verdict;  // PASS | FAIL | SKIPPED
    std::string detail;
    bool expect_fail = false;
    bool counts_as_pass = false;
};

struct ScenarioReport {
    std::string scenario;
    std::uint64_t seed = 0;
    bool seeded = false;
    SheafReport sheaf;
    std::vector<CheckResult> checks;
    bool pass = true;
};

inline json scenario_report_to_json(const ScenarioReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"verdict", c.verdict},
                              {"detail", c.detail},
                              {"expect_fail", c.expect_fail},
                              {"ok", c.counts_as_pass}});
    json env{{"version", kVersion}};
    if (r.seeded) env["seed"] = r.seed;
    return json{{"scenario", r.scenario},
                {"environment", env},
                {"report", sheaf_report_to_json(r.sheaf)},
                {"checks", checks},
                {"verdict", r.pass ? "PASS" : "FAIL"}};
}

namespace detail {

struct CheckContext {
    const SheafReport& rep;
    SecantSystem& sys;
    Rng& rng;
};

inline CheckResult eval_check(const CheckSpec& spec, CheckContext ctx) {
    CheckResult res;
    res.name = spec.name;
    res.expect_fail = spec.expect_fail;
    const SheafReport& rep = ctx.rep;

    auto equals_long = [&](long computed, long fallback_expected, bool have_fallback) {
        long expected = fallback_expected;
        bool have = have_fallback;
        if (!spec.equals.is_null()) {
            if (!spec.equals.is_number_integer()) throw ScenarioError("check '" + spec.name + "': equals must be an integer");
            expected = spec.equals.get<long>();
            have = true;
        }
        if (!have) throw ScenarioError("check '" + spec.name + "' needs an 'equals' value");
        res.verdict = computed == expected ? "PASS" : "FAIL";
        res.detail = "computed " + std::to_string(computed) + ", expected " + std::to_string(expected);
    };
    auto equals_bool = [&](bool computed, bool default_expected) {
        bool expected = default_expected;
        if (!spec.equals.is_null()) {
            if (!spec.equals.is_boolean()) throw ScenarioError("check '" + spec.name + "': equals must be a boolean");
            expected = spec.equals.get<bool>();
        }
        res.verdict = computed == expected ? "PASS" : "FAIL";
        res.detail = std::string("computed ") + (computed ? "true" : "false");
    };
    auto matches = [&](const CheckedValue& v) {
        res.verdict = v.match ? "PASS" : "FAIL";
        res.detail = "computed " + std::to_string(v.computed) + ", formula " + v.rule + " gives " +
                     std::to_string(v.predicted);
    };

    if (spec.name == "colength") {
        equals_long(rep.colength, rep.colength_check.predicted, true);
    } else if (spec.name == "colength_matches") {
        matches(rep.colength_check);
    } else if (spec.name == "kernel_dim") {
        equals_long(rep.kernel_dim, rep.kernel_check.predicted, true);
    } else if (spec.name == "kernel_matches") {
        matches(rep.kernel_check);
    } else if (spec.name == "h0") {
        equals_long(rep.h0.at(0), 0, false);
    } else if (spec.name == "h1") {
        equals_long(rep.h1_image, 0, false);
    } else if (spec.name == "h1_vanishes") {
        equals_long(rep.h1_image, 0, true);
    } else if (spec.name == "chi") {
        equals_long(rep.euler_char_at_0, 0, false);
    } else if (spec.name == "euler_identity") {
        long lhs = rep.h0.at(0) - h1_from_splitting(rep.splitting);
        res.verdict = lhs == rep.euler_char_at_0 ? "PASS" : "FAIL";
        res.detail = "h0 - h1(splitting) = " + std::to_string(lhs) + ", 2(N-1) - colength = " +
                     std::to_string(rep.euler_char_at_0);
    } else if (spec.name == "splitting") {
        if (!spec.equals.is_array()) throw ScenarioError("check 'splitting' needs an integer array 'equals'");
        std::vector<int> want;
        for (const auto& a : spec.equals) want.push_back(a.get<int>());
        std::sort(want.begin(), want.end(), std::greater<int>());
        res.verdict = want == rep.splitting ? "PASS" : "FAIL";
        res.detail = "computed splitting has " + std::to_string(rep.splitting.size()) + " summands";
    } else if (spec.name == "filling") {
        equals_bool(rep.filling, true);
    } else if (spec.name == "smooth_certified") {
        equals_bool(rep.smooth_certified, true);
    } else if (spec.name == "cofactors_coprime") {
        equals_bool(rep.cofactors_coprime, true);
    } else if (spec.name == "h0_matches") {
        if (!rep.h0_check) {
            res.verdict = "SKIPPED";
            res.detail = "h1 is nonzero, no unobstructed h0 prediction";
        } else {
            matches(*rep.h0_check);
        }
    } else if (spec.name == "family_dim_matches") {
        if (!rep.family_dim_check) {
            res.verdict = "SKIPPED";
            res.detail = "needs contact conditions and the full subscheme";
        } else {
            matches(*rep.family_dim_check);
        }
    } else if (spec.name == "uniformity") {
        if (!rep.filling) {
            res.verdict = "SKIPPED";
            res.detail = "no surjective evaluation point";
        } else {
            bool ok = rep.h1_image == 0;
            for (int a : rep.splitting) ok = ok && a >= 0;
            int tested = 0;
            for (long tries = 0; tested < 20 && tries < 4000; ++tries) {
                Rat t = Rat(ctx.rng.uniform_int(-1000, 1000), ctx.rng.uniform_int(1, 50));
                auto [cs, ct] = ctx.sys.scheme().chart.inverse().apply(Rat(1), t);
                if (!ctx.sys.marked().is_empty() && ctx.sys.marked().w.eval(cs, ct).is_zero()) continue;
                ++tested;
                ok = ok && ctx.sys.eval_surjective(Rat(1), t);
            }
            ok = ok && tested == 20;
            res.verdict = ok ? "PASS" : "FAIL";
            res.detail = "splitting nonnegative, h1 = 0 and 20 further points surjective";
        }
    } else {
        throw ScenarioError("unknown check '" + spec.name + "'");
    }

    if (res.verdict == "SKIPPED") {
        res.counts_as_pass = true;
    } else if (spec.expect_fail) {
        res.counts_as_pass = res.verdict == "FAIL";
    } else {
        res.counts_as_pass = res.verdict == "PASS";
    }
    return res;
}

}  // namespace detail

/// Runs one scenario end to end. Generator scenarios honor the optional
/// seed override (CLI flag or SECANTLAB_SEED).
inline ScenarioReport run_scenario(const Scenario& sc, std::optional<std::uint64_t> seed_override = std::nullopt) {
    std::optional<VarietySpec> x;
    std::optional<LineSpec> line;
    ScenarioReport out;
    out.scenario = sc.name;

    if (sc.generate) {
        GeneratorRequest req = *sc.generate;
        if (seed_override) req.seed = *seed_override;
        out.seed = req.seed;
        out.seeded = true;
        try {
            GeneratedInstance inst = generate_instance(req.ambient_dim, req.codim, req.degrees, req.cycle_type, req.seed);
            x = std::move(inst.variety);
            line = std::move(inst.line);
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(std::string("generate: ") + e.what());
        }
    } else {
        x = *sc.variety;
        line = *sc.line;
    }

    IntersectionScheme z = intersect(*x, *line);
    if (z.empty()) throw ScenarioError("the line misses the variety; nothing to analyze");
    MarkedSubscheme w;
    if (!sc.subscheme) {
        w = full_subscheme(z);
    } else if (sc.subscheme->roots) {
        w = subscheme_from_roots(z, *sc.subscheme->roots);
    } else {
        try {
            w = subscheme_from_parts(z, *sc.subscheme->parts);
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(std::string("subscheme: ") + e.what());
        }
    }
    if (w.is_empty()) throw ScenarioError("the marked subscheme is empty; nothing to analyze");

    out.sheaf = analyze(*x, *line, z, w, sc.contact, sc.twists);
    SecantSystem sys(*x, *line, z, w, sc.contact);
    Rng rng(out.seeded ? out.seed : 0x5ecab5eedULL);
    for (const CheckSpec& spec : sc.checks) {
        CheckResult res = detail::eval_check(spec, detail::CheckContext{out.sheaf, sys, rng});
        out.pass = out.pass && res.counts_as_pass;
        out.checks.push_back(std::move(res));
    }
    return out;
}

}  // namespace secantlab

#endif
