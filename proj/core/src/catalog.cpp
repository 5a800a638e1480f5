#include "jrel/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "jrel/relations.hpp"

namespace jrel {

RepRecipe RepRecipe::make_trivial(Int n) {
    RepRecipe r;
    r.kind = Kind::trivial;
    r.trivial_n = std::move(n);
    return r;
}

RepRecipe RepRecipe::make_monomials(Character::Map stored) {
    RepRecipe r;
    r.kind = Kind::monomials;
    r.monos = std::move(stored);
    return r;
}

RepRecipe RepRecipe::make_spinor(std::vector<Exp> x, Parity parity) {
    RepRecipe r;
    r.kind = Kind::spinor;
    r.spinor_x = std::move(x);
    r.parity = parity;
    return r;
}

RepRecipe RepRecipe::make_exterior(RepRecipe inner, Exp j) {
    RepRecipe r;
    r.kind = Kind::exterior;
    r.exterior_j = j;
    r.children.push_back(std::move(inner));
    return r;
}

RepRecipe RepRecipe::make_sum(std::vector<RepRecipe> terms) {
    RepRecipe r;
    r.kind = Kind::sum;
    r.children = std::move(terms);
    return r;
}

Character resolve_recipe(const RepRecipe& recipe) {
    switch (recipe.kind) {
        case RepRecipe::Kind::trivial:
            return Character::trivial(recipe.trivial_n);
        case RepRecipe::Kind::monomials:
            return Character(recipe.monos);
        case RepRecipe::Kind::spinor:
            return spinor_character(recipe.spinor_x, recipe.parity);
        case RepRecipe::Kind::exterior:
            return exterior_power(resolve_recipe(recipe.children.at(0)), recipe.exterior_j);
        case RepRecipe::Kind::sum: {
            Character acc;
            for (const auto& term : recipe.children) acc = add(acc, resolve_recipe(term));
            return acc;
        }
    }
    throw Error("resolve_recipe: corrupt recipe kind");
}

Character resolve_character(const CaseSpec& cs, Exp lambda_power) {
    Character c = resolve_recipe(cs.recipe);
    if (!c.nonnegative())
        throw Error("case '" + cs.name + "': recipe resolves to negative coefficients");
    if (lambda_power != 1) c = exterior_power(c, lambda_power);
    const Exp d = cs.exponent_divisor;
    if (d > 1) {
        Character::Map out;
        for (const auto& [e, co] : c.stored()) {
            if (e % (2 * d) != 0)
                throw Error("case '" + cs.name + "': exponent_divisor " + std::to_string(d) +
                            " does not divide exponent g^" + stored_exp_str(e));
            out[e / d] = co;
        }
        c = Character(std::move(out));
    }
    return c;
}

// ---- builtin data -----------------------------------------------------------

namespace {

Character::Map stored_map(std::initializer_list<std::pair<Exp, long>> actual) {
    Character::Map m;
    for (auto [e, c] : actual) m[2 * e] = c;
    return m;
}

std::map<Exp, Int> coeff_map(std::initializer_list<std::pair<Exp, long>> entries) {
    std::map<Exp, Int> m;
    for (auto [e, c] : entries) m[e] = c;
    return m;
}

std::vector<Exp> stored_weights(std::initializer_list<Exp> actual) {
    std::vector<Exp> w;
    for (Exp e : actual) w.push_back(2 * e);
    return w;
}

std::vector<CaseSpec> make_builtins() {
    std::vector<CaseSpec> cases;

    // Sp(4), SU(8), SO(8): the same circle weights realized in SU(2n). The
    // second display is the lambda^2 expansion printed right after Eq (2).
    const auto sp_recipe = RepRecipe::make_monomials(
        stored_map({{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {3, 1}, {-3, 1}, {6, 1}, {-6, 1}}));
    const std::vector<PrintedRelation> sp_printed = {
        {coeff_map({{1, 1}, {2, 1}, {3, 1}, {6, 1}}), 8, 0, "Eq (2)"},
        {coeff_map({{1, 2}, {2, 1}, {3, 2}, {4, 2}, {5, 2}, {7, 1}, {8, 1}, {9, 1}}), 24, 0,
         "lambda^2 display after Eq (2)"},
    };
    for (const char* nm : {"Sp", "SU", "SO"}) {
        CaseSpec cs;
        cs.name = nm;
        cs.circle_weights = nm == std::string("Sp")
                                ? stored_weights({1, 2, 3, -6})
                                : stored_weights({1, -1, 2, -2, 3, -3, -6, 6});
        cs.recipe = sp_recipe;
        cs.lambda_powers = {1, 2};
        cs.primes = {2, 3};
        cs.printed_relations = sp_printed;
        cases.push_back(std::move(cs));
    }

    {
        CaseSpec cs;
        cs.name = "Spin";
        cs.circle_weights = stored_weights({2, -2, 2, -2, 4, -4, 6, -6});
        cs.recipe = RepRecipe::make_monomials(
            stored_map({{2, 2}, {-2, 2}, {4, 1}, {-4, 1}, {6, 1}, {-6, 1}}));
        cs.lambda_powers = {1, 4};
        cs.primes = {2, 3};
        cs.printed_relations = {
            {coeff_map({{2, 2}, {4, 1}, {6, 1}}), 8, 0, "Eq (3)"},
            {coeff_map({{2, 1}, {4, 2}, {6, 5}, {8, 4}, {10, 4}, {14, 1}}), 34, 0,
             "lambda^4 display after Eq (3)"},
        };
        cases.push_back(std::move(cs));
    }

    // F4 restricted to Spin(9): 1 + lambda^1 + the 16-dimensional spin
    // representation of torus weights (2,2,2,4).
    const auto f4_recipe = RepRecipe::make_sum({
        RepRecipe::make_trivial(1),
        RepRecipe::make_monomials(stored_map({{2, 3}, {-2, 3}, {4, 1}, {-4, 1}, {0, 1}})),
        RepRecipe::make_spinor({2, 2, 2, 4}, Parity::full),
    });
    const std::vector<PrintedRelation> f4_printed = {
        {coeff_map({{1, 4}, {2, 3}, {3, 3}, {4, 1}, {5, 1}}), 24, 0, "Eq (4)"},
        {coeff_map({{1, 25}, {2, 24}, {3, 19}, {4, 19}, {5, 13}, {6, 10}, {7, 6}, {8, 3}, {9, 1}}),
         240, 0, "Eq (4')"},
    };
    {
        CaseSpec cs;
        cs.name = "F4";
        cs.circle_weights = stored_weights({2, -2, 2, -2, 2, -2, 4, -4, 0});
        cs.recipe = f4_recipe;
        cs.lambda_powers = {1, 2};
        cs.primes = {2, 3};
        cs.printed_relations = f4_printed;
        cases.push_back(std::move(cs));
    }
    {
        // E6 restricts to F4 as 1 + U and shares the F4 displays.
        CaseSpec cs;
        cs.name = "E6";
        cs.circle_weights = stored_weights({2, -2, 2, -2, 2, -2, 4, -4, 0});
        cs.recipe = RepRecipe::make_sum({RepRecipe::make_trivial(1), f4_recipe});
        cs.lambda_powers = {1, 2};
        cs.primes = {2, 3};
        cs.printed_relations = f4_printed;
        cases.push_back(std::move(cs));
    }

    {
        // E7 through SU(8): lambda^2 + lambda^4 of the standard weights, with
        // every exponent halved afterwards.
        CaseSpec cs;
        cs.name = "E7";
        cs.circle_weights = stored_weights({1, 1, 1, 1, 1, 1, 1, -7});
        const auto std8 = RepRecipe::make_monomials(stored_map({{1, 7}, {-7, 1}}));
        cs.recipe = RepRecipe::make_sum({
            RepRecipe::make_exterior(std8, 2),
            RepRecipe::make_exterior(std8, 4),
        });
        cs.lambda_powers = {1, 3};
        cs.primes = {2, 3};
        cs.exponent_divisor = 2;
        cs.printed_relations = {
            {coeff_map({{1, 21}, {3, 7}}), 52, 0, "Eq (5)"},
            // Verbatim transcription; the duplicated printed terms merge.
            {coeff_map({{1, 9}, {3, 1}, {5, 6}, {7, 1}, {9, 3}}), 0, 8, "Eq (5')"},
        };
        cases.push_back(std::move(cs));
    }

    {
        CaseSpec cs;
        cs.name = "E8";
        cs.circle_weights =
            stored_weights({2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 6, -6, 0, 0});
        cs.recipe = RepRecipe::make_sum({
            RepRecipe::make_exterior(RepRecipe::make_monomials(stored_map(
                                         {{2, 6}, {-2, 6}, {6, 1}, {-6, 1}, {0, 2}})),
                                     2),
            RepRecipe::make_spinor({2, 2, 2, 2, 2, 2, 6, 0}, Parity::plus),
        });
        cs.lambda_powers = {1};
        cs.primes = {2};
        cs.printed_relations = {
            {coeff_map({{1, 21}, {2, 12}, {3, 21}, {4, 21}, {5, 15}, {6, 2}, {7, 6}, {8, 6},
                        {9, 1}}),
             210, 0, "Eq (6)"},
        };
        cases.push_back(std::move(cs));
    }
    {
        CaseSpec cs;
        cs.name = "E8";
        cs.circle_weights =
            stored_weights({2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2, -2, 2});
        cs.recipe = RepRecipe::make_sum({
            RepRecipe::make_exterior(
                RepRecipe::make_monomials(stored_map({{2, 8}, {-2, 8}})), 2),
            RepRecipe::make_spinor({2, 2, 2, 2, 2, 2, 2, -2}, Parity::plus),
        });
        cs.lambda_powers = {1};
        cs.primes = {3};
        cs.exponent_divisor = 2;
        // Eq (7) in the final (halved) variable: its printed exponents 2, 8, 6
        // over shifts 2i become 1, 4, 3 over shifts i.
        cs.printed_relations = {
            {coeff_map({{1, 56}, {4, 28}, {3, 8}}), 184, 0, "Eq (7)"},
        };
        cases.push_back(std::move(cs));
    }

    return cases;
}

}  // namespace

const std::vector<CaseSpec>& builtin_cases() {
    static const std::vector<CaseSpec> cases = make_builtins();
    return cases;
}

std::vector<const CaseSpec*> find_builtins(const std::string& name) {
    std::vector<const CaseSpec*> out;
    for (const auto& cs : builtin_cases())
        if (cs.name == name) out.push_back(&cs);
    return out;
}

// ---- validation -------------------------------------------------------------

std::vector<std::string> validate_case(const CaseSpec& cs) {
    if (cs.name.empty()) throw Error("case name must be nonempty");
    if (cs.circle_weights.empty())
        throw Error("case '" + cs.name + "': circle_weights must be nonempty");
    if (std::find(cs.lambda_powers.begin(), cs.lambda_powers.end(), 1) ==
        cs.lambda_powers.end())
        throw Error("case '" + cs.name + "': lambda_powers must include 1");
    for (Exp l : cs.lambda_powers)
        if (l < 0) throw Error("case '" + cs.name + "': negative lambda power");
    if (cs.primes.empty()) throw Error("case '" + cs.name + "': primes must be nonempty");
    for (int p : cs.primes)
        if (p != 2 && p != 3)
            throw Error("case '" + cs.name + "': prime " + std::to_string(p) +
                        " outside {2, 3}");
    if (cs.exponent_divisor < 1)
        throw Error("case '" + cs.name + "': exponent_divisor must be positive");
    if (cs.i_max < 1) throw Error("case '" + cs.name + "': i_max must be positive");
    if (cs.window < 1) throw Error("case '" + cs.name + "': window must be positive");

    // Resolving every declared power surfaces recipe and divisor errors with
    // the case name attached.
    for (Exp l : cs.lambda_powers) resolve_character(cs, l);

    std::vector<std::string> warnings;

    const Exp unit = 2;  // stored form of weight 1
    bool has_unit = std::find(cs.circle_weights.begin(), cs.circle_weights.end(), unit) !=
                    cs.circle_weights.end();
    if (!has_unit && cs.exponent_divisor > 1) {
        bool quotient_ok = true, quotient_unit = false;
        for (Exp w : cs.circle_weights) {
            if (w % (2 * cs.exponent_divisor) != 0) quotient_ok = false;
            if (w == 2 * cs.exponent_divisor) quotient_unit = true;
        }
        has_unit = quotient_ok && quotient_unit;
    }
    if (!has_unit)
        warnings.push_back("case '" + cs.name +
                           "': no unit circle weight (directly or after exponent division)");

    for (const auto& pr : cs.printed_relations) {
        if (pr.modulus < 0)
            throw Error("case '" + cs.name + "': negative modulus in " + pr.source_tag);
        if (pr.modulus == 0) {
            Int twice = 0;
            for (const auto& [e, c] : pr.positive_coeffs) twice += 2 * c;
            if (twice != pr.rhs_multiplier)
                warnings.push_back("case '" + cs.name + "': " + pr.source_tag +
                                   " is internally inconsistent, rhs " +
                                   dec(pr.rhs_multiplier) + " != twice coefficient sum " +
                                   dec(twice));
        }
    }
    return warnings;
}

// ---- JSON schema ------------------------------------------------------------

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& why) {
    throw Error(path + ": " + why);
}

// A weight or exponent in actual units: integer, or a string "n/2" (halves).
Exp parse_half_units(const json& v, const std::string& path) {
    if (v.is_number_integer()) return 2 * v.get<Exp>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        try {
            std::size_t used = 0;
            long long num = std::stoll(s, &used);
            if (used == s.size()) return 2 * num;
            if (s.substr(used) == "/2") return num;
        } catch (const std::exception&) {
        }
        schema_error(path, "expected an integer or 'n/2', got '" + s + "'");
    }
    schema_error(path, "expected an integer or half-integer string");
}

Exp parse_exp(const json& v, const std::string& path) {
    if (!v.is_number_integer()) schema_error(path, "expected an integer");
    return v.get<Exp>();
}

Int parse_coeff(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) {
        try {
            return int_from_dec(v.get<std::string>());
        } catch (const Error&) {
        }
    }
    schema_error(path, "expected an integer coefficient");
}

Exp parse_exp_key(const std::string& key, const std::string& path) {
    try {
        std::size_t used = 0;
        long long e = std::stoll(key, &used);
        if (used == key.size()) return e;
    } catch (const std::exception&) {
    }
    schema_error(path, "key '" + key + "' is not an integer exponent");
}

RepRecipe parse_recipe(const json& v, const std::string& path) {
    if (!v.is_object() || v.size() != 1)
        schema_error(path, "expected an object with exactly one recipe tag");
    const auto& [tag, body] = *v.items().begin();
    const std::string sub = path + "." + tag;
    if (tag == "trivial") return RepRecipe::make_trivial(parse_coeff(body, sub));
    if (tag == "monomials") {
        if (!body.is_object()) schema_error(sub, "expected an exponent->multiplicity object");
        Character::Map m;
        for (const auto& [k, val] : body.items())
            m[parse_half_units(json(k), sub + "." + k)] = parse_coeff(val, sub + "." + k);
        return RepRecipe::make_monomials(std::move(m));
    }
    if (tag == "spinor") {
        if (!body.is_object() || !body.contains("x") || !body.contains("parity"))
            schema_error(sub, "expected {x: [...], parity: ...}");
        std::vector<Exp> x;
        for (std::size_t i = 0; i < body["x"].size(); ++i)
            x.push_back(parse_exp(body["x"][i], sub + ".x[" + std::to_string(i) + "]"));
        const std::string p = body["parity"].is_string() ? body["parity"].get<std::string>() : "";
        Parity parity;
        if (p == "full")
            parity = Parity::full;
        else if (p == "plus")
            parity = Parity::plus;
        else if (p == "minus")
            parity = Parity::minus;
        else
            schema_error(sub + ".parity", "expected one of full|plus|minus");
        return RepRecipe::make_spinor(std::move(x), parity);
    }
    if (tag == "exterior") {
        if (!body.is_object() || !body.contains("of") || !body.contains("j"))
            schema_error(sub, "expected {of: <recipe>, j: n}");
        return RepRecipe::make_exterior(parse_recipe(body["of"], sub + ".of"),
                                        parse_exp(body["j"], sub + ".j"));
    }
    if (tag == "sum") {
        if (!body.is_array()) schema_error(sub, "expected an array of recipes");
        std::vector<RepRecipe> terms;
        for (std::size_t i = 0; i < body.size(); ++i)
            terms.push_back(parse_recipe(body[i], sub + "[" + std::to_string(i) + "]"));
        return RepRecipe::make_sum(std::move(terms));
    }
    schema_error(path, "unknown recipe tag '" + tag + "'");
}

ordered_json recipe_to_json(const RepRecipe& r) {
    ordered_json out;
    switch (r.kind) {
        case RepRecipe::Kind::trivial:
            if (!r.trivial_n.fits_slong_p()) throw Error("serialize: trivial count too large");
            out["trivial"] = r.trivial_n.get_si();
            break;
        case RepRecipe::Kind::monomials: {
            ordered_json m = ordered_json::object();
            for (const auto& [e, c] : r.monos) {
                const std::string key =
                    e % 2 == 0 ? std::to_string(e / 2) : std::to_string(e) + "/2";
                if (!c.fits_slong_p()) throw Error("serialize: multiplicity too large");
                m[key] = c.get_si();
            }
            out["monomials"] = std::move(m);
            break;
        }
        case RepRecipe::Kind::spinor: {
            ordered_json body;
            body["x"] = r.spinor_x;
            body["parity"] = r.parity == Parity::full   ? "full"
                             : r.parity == Parity::plus ? "plus"
                                                        : "minus";
            out["spinor"] = std::move(body);
            break;
        }
        case RepRecipe::Kind::exterior: {
            ordered_json body;
            body["of"] = recipe_to_json(r.children.at(0));
            body["j"] = r.exterior_j;
            out["exterior"] = std::move(body);
            break;
        }
        case RepRecipe::Kind::sum: {
            ordered_json arr = ordered_json::array();
            for (const auto& t : r.children) arr.push_back(recipe_to_json(t));
            out["sum"] = std::move(arr);
            break;
        }
    }
    return out;
}

}  // namespace

CaseSpec load_case(const nlohmann::json& doc, std::vector<std::string>* warnings) {
    if (!doc.is_object()) schema_error("document", "expected a JSON object");
    for (const char* req : {"name", "circle_weights", "recipe"})
        if (!doc.contains(req)) schema_error(req, "required key missing");

    CaseSpec cs;
    if (!doc["name"].is_string()) schema_error("name", "expected a string");
    cs.name = doc["name"].get<std::string>();

    if (!doc["circle_weights"].is_array()) schema_error("circle_weights", "expected an array");
    for (std::size_t i = 0; i < doc["circle_weights"].size(); ++i)
        cs.circle_weights.push_back(parse_half_units(
            doc["circle_weights"][i], "circle_weights[" + std::to_string(i) + "]"));

    cs.recipe = parse_recipe(doc["recipe"], "recipe");

    if (doc.contains("lambda_powers")) {
        if (!doc["lambda_powers"].is_array()) schema_error("lambda_powers", "expected an array");
        for (std::size_t i = 0; i < doc["lambda_powers"].size(); ++i)
            cs.lambda_powers.push_back(parse_exp(doc["lambda_powers"][i],
                                                 "lambda_powers[" + std::to_string(i) + "]"));
    } else {
        cs.lambda_powers = {1};
    }

    if (doc.contains("primes")) {
        if (!doc["primes"].is_array()) schema_error("primes", "expected an array");
        for (std::size_t i = 0; i < doc["primes"].size(); ++i)
            cs.primes.push_back(static_cast<int>(
                parse_exp(doc["primes"][i], "primes[" + std::to_string(i) + "]")));
    } else {
        cs.primes = {2, 3};
    }

    if (doc.contains("exponent_divisor"))
        cs.exponent_divisor = parse_exp(doc["exponent_divisor"], "exponent_divisor");
    if (doc.contains("i_max")) cs.i_max = parse_exp(doc["i_max"], "i_max");
    if (doc.contains("window")) cs.window = parse_exp(doc["window"], "window");

    if (doc.contains("printed_relations")) {
        if (!doc["printed_relations"].is_array())
            schema_error("printed_relations", "expected an array");
        for (std::size_t i = 0; i < doc["printed_relations"].size(); ++i) {
            const std::string path = "printed_relations[" + std::to_string(i) + "]";
            const auto& pj = doc["printed_relations"][i];
            if (!pj.is_object() || !pj.contains("coeffs") || !pj.contains("rhs") ||
                !pj.contains("source"))
                schema_error(path, "expected {coeffs, rhs, modulus, source}");
            PrintedRelation pr;
            for (const auto& [k, val] : pj["coeffs"].items()) {
                Exp e = parse_exp_key(k, path + ".coeffs");
                pr.positive_coeffs[e] = parse_coeff(val, path + ".coeffs." + k);
            }
            pr.rhs_multiplier = parse_coeff(pj["rhs"], path + ".rhs");
            if (pj.contains("modulus")) pr.modulus = parse_exp(pj["modulus"], path + ".modulus");
            if (!pj["source"].is_string()) schema_error(path + ".source", "expected a string");
            pr.source_tag = pj["source"].get<std::string>();
            cs.printed_relations.push_back(std::move(pr));
        }
    }

    auto warn = validate_case(cs);
    if (warnings) *warnings = std::move(warn);
    return cs;
}

CaseSpec load_case_text(const std::string& text, std::vector<std::string>* warnings) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("case file is not valid JSON: ") + e.what());
    }
    return load_case(doc, warnings);
}

nlohmann::ordered_json serialize_case(const CaseSpec& cs) {
    ordered_json out;
    out["name"] = cs.name;
    ordered_json weights = ordered_json::array();
    for (Exp w : cs.circle_weights) {
        if (w % 2 == 0)
            weights.push_back(w / 2);
        else
            weights.push_back(std::to_string(w) + "/2");
    }
    out["circle_weights"] = std::move(weights);
    out["recipe"] = recipe_to_json(cs.recipe);
    out["lambda_powers"] = cs.lambda_powers;
    out["primes"] = cs.primes;
    out["exponent_divisor"] = cs.exponent_divisor;
    out["i_max"] = cs.i_max;
    out["window"] = cs.window;
    ordered_json printed = ordered_json::array();
    for (const auto& pr : cs.printed_relations) {
        ordered_json pj;
        ordered_json coeffs = ordered_json::object();
        for (const auto& [e, c] : pr.positive_coeffs) {
            if (!c.fits_slong_p()) throw Error("serialize: printed coefficient too large");
            coeffs[std::to_string(e)] = c.get_si();
        }
        pj["coeffs"] = std::move(coeffs);
        if (!pr.rhs_multiplier.fits_slong_p()) throw Error("serialize: rhs too large");
        pj["rhs"] = pr.rhs_multiplier.get_si();
        pj["modulus"] = pr.modulus;
        pj["source"] = pr.source_tag;
        printed.push_back(std::move(pj));
    }
    out["printed_relations"] = std::move(printed);
    return out;
}

// ---- consistency ------------------------------------------------------------

std::string to_string(ConsistencyStatus s) {
    switch (s) {
        case ConsistencyStatus::reproduced: return "REPRODUCED";
        case ConsistencyStatus::discrepant: return "DISCREPANT";
        case ConsistencyStatus::modular_skipped: return "MODULAR_SKIPPED";
    }
    return "?";
}

std::vector<ConsistencyEntry> consistency_check(const CaseSpec& cs) {
    std::vector<ConsistencyEntry> out;
    // The i=0 restriction relation of each declared power, computed once.
    std::vector<std::pair<Exp, std::map<Exp, Int>>> computed;
    for (Exp l : cs.lambda_powers) {
        auto rels = restriction_relations(resolve_character(cs, l), 0, "x");
        computed.emplace_back(l, rels.empty() ? std::map<Exp, Int>{} : rels[0].terms);
    }
    for (const auto& pr : cs.printed_relations) {
        ConsistencyEntry entry;
        entry.source_tag = pr.source_tag;
        if (pr.modulus != 0) {
            entry.status = ConsistencyStatus::modular_skipped;
            out.push_back(std::move(entry));
            continue;
        }
        auto printed = from_printed(pr, 0);
        const std::map<Exp, Int> target =
            printed.empty() ? std::map<Exp, Int>{} : printed[0].terms;

        bool reproduced = false, have_diff = false;
        for (const auto& [l, terms] : computed) {
            if (terms == target) {
                entry.status = ConsistencyStatus::reproduced;
                entry.lambda = l;
                entry.diff.clear();
                reproduced = true;
                break;
            }
            std::map<Exp, Int> diff;
            for (const auto& [e, c] : terms) diff[e] += c;
            for (const auto& [e, c] : target) diff[e] -= c;
            for (auto it = diff.begin(); it != diff.end();)
                it = it->second == 0 ? diff.erase(it) : std::next(it);
            // Smallest symmetric difference wins; earlier (smaller) powers
            // win ties since the comparison is strict.
            if (!have_diff || diff.size() < entry.diff.size()) {
                entry.lambda = l;
                entry.diff = std::move(diff);
                have_diff = true;
            }
        }
        if (!reproduced) entry.status = ConsistencyStatus::discrepant;
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace jrel
