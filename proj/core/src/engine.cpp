#include "jrel/engine.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include "jrel/identity.hpp"

namespace jrel {

std::string to_string(Source s) {
    switch (s) {
        case Source::computed: return "computed";
        case Source::printed: return "printed";
        case Source::both: return "both";
    }
    return "?";
}

Source source_from_string(const std::string& s) {
    if (s == "computed") return Source::computed;
    if (s == "printed") return Source::printed;
    if (s == "both") return Source::both;
    throw Error("unknown source '" + s + "' (expected computed, printed or both)");
}

std::vector<Relation> build_case_relations(const CaseSpec& cs, int p, Source src, Exp i_max,
                                           Exp window) {
    std::vector<Relation> rels;
    if (src == Source::computed || src == Source::both) {
        for (Exp l : cs.lambda_powers) {
            auto part = restriction_relations(resolve_character(cs, l), i_max,
                                              "(" + cs.name + " l" + std::to_string(l) + ")");
            rels.insert(rels.end(), part.begin(), part.end());
        }
    }
    if (src == Source::printed || src == Source::both) {
        for (const auto& pr : cs.printed_relations) {
            auto part = from_printed(pr, i_max);
            rels.insert(rels.end(), part.begin(), part.end());
        }
    }
    auto adams = adams_relations(p, window, default_adams_multipliers(p, window));
    rels.insert(rels.end(), adams.begin(), adams.end());
    auto base = base_relations();
    rels.insert(rels.end(), base.begin(), base.end());
    return rels;
}

std::string provenance_kind(const std::string& provenance) {
    if (provenance.rfind("adams ", 0) == 0) {
        // "adams p2 k3 j7" -> "adams p2 k3"
        std::size_t sp = 0;
        int seen = 0;
        for (std::size_t i = 0; i < provenance.size(); ++i)
            if (provenance[i] == ' ' && ++seen == 3) {
                sp = i;
                break;
            }
        return sp ? provenance.substr(0, sp) : provenance;
    }
    // Shift-indexed families: strip one trailing "_<digits>".
    std::size_t us = provenance.rfind('_');
    if (us != std::string::npos && us + 1 < provenance.size()) {
        bool digits = true;
        for (std::size_t i = us + 1; i < provenance.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(provenance[i]))) digits = false;
        if (digits) return provenance.substr(0, us);
    }
    return provenance;
}

CaseRun run_case(const CaseSpec& cs, int p, Source src, std::optional<Exp> window,
                 std::optional<Exp> i_max) {
    const auto t0 = std::chrono::steady_clock::now();
    CaseRun run;
    run.case_name = cs.name;
    run.prime = p;
    run.source = src;
    run.window = window.value_or(cs.window);
    run.i_max = i_max.value_or(cs.i_max);

    auto rels = build_case_relations(cs, p, src, run.i_max, run.window);
    run.matrix = build_matrix(rels, run.window);
    run.rows_kept = run.matrix.relations.size();
    run.dropped = run.matrix.dropped.size();
    for (const auto& r : run.matrix.relations) ++run.relation_counts[provenance_kind(r.provenance)];

    run.verdict = is_zero_p_local(run.matrix, p, 1);
    run.consistency = consistency_check(cs);

    if (!run.verdict.scope_note.empty()) run.notes.push_back(run.verdict.scope_note);
    if (run.dropped > 0 && !run.verdict.zero_at_p)
        run.notes.push_back("window too small: " + std::to_string(run.dropped) +
                            " relations dropped at window " + std::to_string(run.window) +
                            "; verdict is negative and may be an artifact of the truncation");
    const auto t1 = std::chrono::steady_clock::now();
    run.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return run;
}

std::vector<CaseRun> run_all_builtins(Source src) {
    std::vector<CaseRun> runs;
    for (const auto& cs : builtin_cases())
        for (int p : cs.primes) runs.push_back(run_case(cs, p, src));
    return runs;
}

const CaseSpec& find_case(const std::string& name, int prime) {
    auto matches = find_builtins(name);
    if (matches.empty()) {
        std::string known;
        std::string last;
        for (const auto& cs : builtin_cases()) {
            if (cs.name == last) continue;  // single mention per name
            if (!known.empty()) known += ", ";
            known += cs.name;
            last = cs.name;
        }
        throw Error("unknown case '" + name + "' (builtin cases: " + known + ")");
    }
    if (matches.size() == 1) return *matches[0];
    if (prime != 0) {
        for (const auto* cs : matches)
            for (int p : cs->primes)
                if (p == prime) return *cs;
        std::string primes;
        for (const auto* cs : matches)
            for (int p : cs->primes) primes += (primes.empty() ? "" : ", ") + std::to_string(p);
        throw Error("case '" + name + "' has no variant for prime " + std::to_string(prime) +
                    " (available primes: " + primes + ")");
    }
    throw Error("case '" + name + "' has one variant per prime; pass --prime to choose");
}

// ---- certificate files ------------------------------------------------------

nlohmann::ordered_json certificate_to_json(const Certificate& cert, const RelationMatrix& M) {
    nlohmann::ordered_json claim;
    claim["exponent"] = cert.target;
    claim["m"] = dec(cert.m);
    claim["prime"] = cert.prime;
    if (!cert.lhs.empty()) {
        nlohmann::ordered_json lhs = nlohmann::ordered_json::object();
        for (const auto& [e, c] : cert.lhs) lhs[std::to_string(e)] = dec(c);
        claim["lhs"] = std::move(lhs);
        claim["identity"] = cert.identity.empty() ? identity_to_string(cert.lhs) + " = 0"
                                                  : cert.identity;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : M.relations) rows.push_back(relation_line(r));
    nlohmann::ordered_json comb = nlohmann::ordered_json::object();
    for (const auto& [i, c] : cert.combination) comb[std::to_string(i)] = dec(c);

    nlohmann::ordered_json doc;
    doc["claim"] = std::move(claim);
    doc["rows"] = std::move(rows);
    doc["combination"] = std::move(comb);
    return doc;
}

namespace {

Int int_field(const nlohmann::json& v, const std::string& what) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) return int_from_dec(v.get<std::string>());
    throw Error(what + ": expected an integer or decimal string");
}

}  // namespace

Certificate certificate_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("claim") || !doc.contains("combination"))
        throw Error("certificate: expected {claim, rows, combination}");
    const auto& claim = doc["claim"];
    Certificate cert;
    if (claim.contains("exponent")) cert.target = claim["exponent"].get<Exp>();
    cert.m = int_field(claim.at("m"), "claim.m");
    if (claim.contains("prime")) cert.prime = claim["prime"].get<int>();
    if (claim.contains("lhs"))
        for (const auto& [k, v] : claim["lhs"].items())
            cert.lhs[std::stoll(k)] = int_field(v, "claim.lhs");
    if (claim.contains("identity") && claim["identity"].is_string())
        cert.identity = claim["identity"].get<std::string>();
    for (const auto& [k, v] : doc["combination"].items())
        cert.combination[static_cast<std::size_t>(std::stoull(k))] =
            int_field(v, "combination");
    return cert;
}

bool verify_certificate_json(const nlohmann::json& doc, std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    Certificate cert;
    std::vector<Relation> rows;
    try {
        cert = certificate_from_json(doc);
        if (!doc.contains("rows") || !doc["rows"].is_array())
            return fail("certificate: missing rows array");
        for (const auto& line : doc["rows"]) {
            if (!line.is_string()) return fail("certificate: rows must be strings");
            rows.push_back(parse_relation_line(line.get<std::string>()));
        }
    } catch (const Error& e) {
        return fail(e.what());
    }
    if (cert.m < 1) return fail("claim.m = " + dec(cert.m) + " is not positive");

    std::map<Exp, Int> acc;
    for (const auto& [idx, coeff] : cert.combination) {
        if (coeff == 0) continue;
        if (idx >= rows.size())
            return fail("combination references missing row index " + std::to_string(idx) +
                        " (file has " + std::to_string(rows.size()) + " rows)");
        const Relation& r = rows[idx];
        if (r.modulus > 0)
            return fail("combination uses modular row " + std::to_string(idx) + " ('" +
                        r.provenance + "', mod " + std::to_string(r.modulus) +
                        "); modular rows only support conclusions up to their modulus and are "
                        "rejected in exact certificates");
        for (const auto& [e, c] : r.terms) acc[e] += coeff * c;
    }
    std::map<Exp, Int> want;
    if (cert.lhs.empty())
        want[cert.target] = cert.m;
    else
        for (const auto& [e, c] : cert.lhs)
            if (c != 0) want[e] = cert.m * c;
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    if (acc != want) {
        for (const auto& [e, c] : want) acc[e] -= c;  // show the difference
        std::ostringstream os;
        os << "combination does not reproduce the claim; residual:";
        for (const auto& [e, c] : acc)
            if (c != 0) os << " " << dec(c) << "*t^" << e;
        return fail(os.str());
    }
    if (diagnostic) diagnostic->clear();
    return true;
}

// ---- reports ----------------------------------------------------------------

namespace {

nlohmann::ordered_json consistency_to_json(const std::vector<ConsistencyEntry>& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json obj;
        obj["source"] = e.source_tag;
        obj["status"] = to_string(e.status);
        if (e.status == ConsistencyStatus::modular_skipped)
            obj["lambda"] = nullptr;
        else
            obj["lambda"] = e.lambda;
        nlohmann::ordered_json diff = nlohmann::ordered_json::object();
        for (const auto& [exp, c] : e.diff) diff[std::to_string(exp)] = dec(c);
        obj["diff"] = std::move(diff);
        arr.push_back(std::move(obj));
    }
    return arr;
}

}  // namespace

nlohmann::ordered_json report_json(const std::vector<CaseRun>& runs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& run : runs) {
        nlohmann::ordered_json obj;
        obj["case"] = run.case_name;
        obj["prime"] = run.prime;
        obj["source"] = to_string(run.source);
        obj["verdict"] = run.verdict.zero_at_p;
        if (run.verdict.finite)
            obj["m"] = dec(run.verdict.m);
        else
            obj["m"] = nullptr;
        if (run.certificate_path.empty())
            obj["certificate_path"] = nullptr;
        else
            obj["certificate_path"] = run.certificate_path;
        obj["consistency"] = consistency_to_json(run.consistency);
        arr.push_back(std::move(obj));
    }
    return arr;
}

std::string report_markdown(const std::vector<CaseRun>& runs) {
    std::ostringstream os;
    os << "# Verification report\n\n";
    os << "Target: vanishing of t^1 in the localized relation systems.\n\n";
    // One section per case name, in catalog order.
    std::vector<std::string> order;
    for (const auto& run : runs)
        if (std::find(order.begin(), order.end(), run.case_name) == order.end())
            order.push_back(run.case_name);
    for (const auto& name : order) {
        os << "## " << name << "\n\n";
        os << "| prime | source | rows | dropped | minimal multiple | zero locally | time |\n";
        os << "|---|---|---|---|---|---|---|\n";
        for (const auto& run : runs) {
            if (run.case_name != name) continue;
            os << "| " << run.prime << " | " << to_string(run.source) << " | " << run.rows_kept
               << " | " << run.dropped << " | " << run.verdict.m_str() << " | "
               << (run.verdict.zero_at_p ? "yes" : "no") << " | "
               << static_cast<long>(run.wall_ms + 0.5) << " ms |\n";
        }
        os << "\n";
        // Consistency is per case; take it from the first run of the case.
        for (const auto& run : runs) {
            if (run.case_name != name) continue;
            if (!run.consistency.empty()) {
                os << "Printed displays vs computed characters:\n\n";
                for (const auto& e : run.consistency) {
                    os << "- " << e.source_tag << ": " << to_string(e.status);
                    if (e.status == ConsistencyStatus::reproduced)
                        os << " (lambda " << e.lambda << ")";
                    if (e.status == ConsistencyStatus::discrepant && !e.diff.empty()) {
                        os << " (closest lambda " << e.lambda << ", diff";
                        for (const auto& [exp, c] : e.diff)
                            os << " " << dec(c) << "@t^" << exp;
                        os << ")";
                    }
                    os << "\n";
                }
                os << "\n";
            }
            break;
        }
        bool wrote_notes = false;
        for (const auto& run : runs) {
            if (run.case_name != name) continue;
            for (const auto& note : run.notes) {
                if (!wrote_notes) os << "Notes:\n\n";
                wrote_notes = true;
                os << "- p=" << run.prime << ": " << note << "\n";
            }
            if (!run.certificate_path.empty()) {
                if (!wrote_notes) os << "Notes:\n\n";
                wrote_notes = true;
                os << "- p=" << run.prime << ": certificate written to " << run.certificate_path
                   << "\n";
            }
        }
        if (wrote_notes) os << "\n";
    }
    return os.str();
}

std::string default_output_dir() {
    const char* env = std::getenv("JREL_OUTPUT_DIR");
    return env && *env ? env : ".";
}

std::string certificate_filename(const CaseRun& run) {
    return run.case_name + "_p" + std::to_string(run.prime) + ".cert.json";
}

}  // namespace jrel
