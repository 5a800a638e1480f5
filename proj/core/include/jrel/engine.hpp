#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "jrel/catalog.hpp"
#include "jrel/lattice.hpp"

namespace jrel {

// Which relation families feed the lattice: restrictions computed from the
// resolved characters, the transcribed printed displays, or their union.
// Adams multiplications and the two-torsion relation are always included.
enum class Source { computed, printed, both };

std::string to_string(Source s);
Source source_from_string(const std::string& s);

std::vector<Relation> build_case_relations(const CaseSpec& cs, int p, Source src, Exp i_max,
                                           Exp window);

// Groups provenances for counting: restriction/printed families collapse to
// their display tag, Adams relations to "adams p<p> k<k>".
std::string provenance_kind(const std::string& provenance);

struct CaseRun {
    std::string case_name;
    int prime = 0;
    Source source = Source::both;
    Exp window = 0;
    Exp i_max = 0;
    std::map<std::string, std::size_t> relation_counts;  // kind -> kept rows
    std::size_t rows_kept = 0;
    std::size_t dropped = 0;
    Verdict verdict;
    std::vector<ConsistencyEntry> consistency;
    std::string certificate_path;  // nonempty once a certificate file is written
    double wall_ms = 0.0;
    std::vector<std::string> notes;
    RelationMatrix matrix;
};

CaseRun run_case(const CaseSpec& cs, int p, Source src, std::optional<Exp> window = {},
                 std::optional<Exp> i_max = {});

// All builtin cases at each of their declared primes, catalog order.
std::vector<CaseRun> run_all_builtins(Source src);

// Builtin lookup; prime (when nonzero) disambiguates names that carry one
// spec per prime. Throws with the available choices on failure.
const CaseSpec& find_case(const std::string& name, int prime);

// Self-contained certificate file: claim + serialized rows + combination.
nlohmann::ordered_json certificate_to_json(const Certificate& cert, const RelationMatrix& M);
Certificate certificate_from_json(const nlohmann::json& doc);

// Re-checks a certificate file with no state beyond the document itself.
bool verify_certificate_json(const nlohmann::json& doc, std::string* diagnostic = nullptr);

nlohmann::ordered_json report_json(const std::vector<CaseRun>& runs);
std::string report_markdown(const std::vector<CaseRun>& runs);

// JREL_OUTPUT_DIR, or "." when unset.
std::string default_output_dir();
std::string certificate_filename(const CaseRun& run);

}  // namespace jrel
