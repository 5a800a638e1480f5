#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jrel/character.hpp"

namespace jrel {

// Declarative description of a restricted representation: a sum of explicit
// weight multisets, trivial summands, spinor constructions, and exterior
// powers of inner recipes.
struct RepRecipe {
    enum class Kind { trivial, monomials, spinor, exterior, sum };

    Kind kind = Kind::sum;
    Int trivial_n = 0;               // trivial
    Character::Map monos;            // monomials (stored half-unit exponents)
    std::vector<Exp> spinor_x;       // spinor weights
    Parity parity = Parity::full;    // spinor
    Exp exterior_j = 0;              // exterior; children[0] is the inner recipe
    std::vector<RepRecipe> children; // exterior: exactly one; sum: any number

    static RepRecipe make_trivial(Int n);
    static RepRecipe make_monomials(Character::Map stored);
    static RepRecipe make_spinor(std::vector<Exp> x, Parity parity);
    static RepRecipe make_exterior(RepRecipe inner, Exp j);
    static RepRecipe make_sum(std::vector<RepRecipe> terms);

    bool operator==(const RepRecipe&) const = default;
};

// One printed relation family, transcribed verbatim from its source display.
// Keys are generator exponents in the case's final t-variable. When every key
// is positive the display is symmetric and the mirror terms are implied;
// otherwise the map is taken literally term-for-term.
struct PrintedRelation {
    std::map<Exp, Int> positive_coeffs;
    Int rhs_multiplier = 0;
    Exp modulus = 0;  // 0 = exact equation
    std::string source_tag;

    bool operator==(const PrintedRelation&) const = default;
};

struct CaseSpec {
    std::string name;
    std::vector<Exp> circle_weights;  // stored half-units, zeros included
    RepRecipe recipe;
    std::vector<Exp> lambda_powers;   // always includes 1
    std::vector<int> primes;          // subset of {2, 3}
    Exp exponent_divisor = 1;
    std::vector<PrintedRelation> printed_relations;
    Exp i_max = 16;
    Exp window = 64;

    bool operator==(const CaseSpec&) const = default;
};

// The eight named cases. "E8" appears twice (one subgroup per prime); every
// other name is unique. Data is immutable after construction.
const std::vector<CaseSpec>& builtin_cases();

// All builtins whose name matches; the caller disambiguates "E8" by prime.
std::vector<const CaseSpec*> find_builtins(const std::string& name);

Character resolve_recipe(const RepRecipe& recipe);

// Recipe -> Character, then exterior power (lambda_power != 1), then exponent
// division by exponent_divisor. Throws when the divisor misses an exponent.
Character resolve_character(const CaseSpec& cs, Exp lambda_power);

// Hard invariant violations throw; soft ones (missing unit weight, printed
// relation whose rhs is not twice its coefficient sum) come back as warnings.
std::vector<std::string> validate_case(const CaseSpec& cs);

CaseSpec load_case(const nlohmann::json& doc, std::vector<std::string>* warnings = nullptr);
CaseSpec load_case_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
nlohmann::ordered_json serialize_case(const CaseSpec& cs);

enum class ConsistencyStatus { reproduced, discrepant, modular_skipped };
std::string to_string(ConsistencyStatus s);

struct ConsistencyEntry {
    std::string source_tag;
    ConsistencyStatus status = ConsistencyStatus::modular_skipped;
    Exp lambda = 0;           // matching (reproduced) or closest (discrepant) power
    std::map<Exp, Int> diff;  // computed minus printed, by generator exponent
};

// Compares each exact printed relation against the i=0 restriction relation
// of every declared lambda power; never aborts.
std::vector<ConsistencyEntry> consistency_check(const CaseSpec& cs);

}  // namespace jrel
