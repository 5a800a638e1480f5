#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jrel/int.hpp"
#include "jrel/relations.hpp"

namespace jrel {

// Relations materialized over an ordered generator basis: t^{-N} .. t^{N}
// left to right, then one slack generator per modular relation (in row
// order). Relations with any exponent outside the window are dropped whole,
// never truncated; their provenances are kept for reporting.
struct RelationMatrix {
    Exp window = 0;
    std::vector<Relation> relations;     // kept rows, original order
    std::vector<std::vector<Int>> rows;  // dense images of `relations`
    std::vector<std::string> dropped;    // provenances of dropped relations
    std::size_t slack_count = 0;

    std::size_t t_cols() const { return static_cast<std::size_t>(2 * window + 1); }
    std::size_t ncols() const { return t_cols() + slack_count; }
    std::size_t t_col(Exp e) const { return static_cast<std::size_t>(e + window); }
};

RelationMatrix build_matrix(const std::vector<Relation>& rels, Exp window);

// Row-style Hermite normal form: echelon with positive pivots, entries above
// each pivot reduced into [0, pivot). Returns only the nonzero rows; they
// span the same integer lattice as the input.
std::vector<std::vector<Int>> hermite_form(std::vector<std::vector<Int>> rows);

// A verifiable claim: m * (left side) is an exact integer combination of the
// matrix rows. The left side is t^target unless `lhs` is nonempty.
struct Certificate {
    Int m;
    Exp target = 1;
    int prime = 0;  // 0 = no locality claim attached
    std::map<std::size_t, Int> combination;
    std::map<Exp, Int> lhs;  // empty means single generator t^target
    std::string identity;    // original identity text, when one was parsed
};

struct MultipleResult {
    bool finite = false;
    Int m;                                   // least positive multiple, when finite
    std::map<std::size_t, Int> combination;  // row combination (when requested)
};

// Least positive m with m*e_target in the integer row span; infinite when no
// multiple lies there. With want_certificate, the returned combination
// reconstructs m*e_target exactly (checked before returning).
MultipleResult minimal_multiple(const RelationMatrix& M, Exp target,
                                bool want_certificate = false);

// Least positive x with x*lhs in the row span, with its row combination.
MultipleResult identity_multiple(const RelationMatrix& M, const std::map<Exp, Int>& lhs);

// True iff some m coprime to p has m*lhs in the row span.
bool check_identity(const RelationMatrix& M, const std::map<Exp, Int>& lhs, int p);

Certificate extract_certificate(const RelationMatrix& M, Exp target, const Int& m);

// Recomputes the combination against M with no state from extraction.
bool verify_certificate(const Certificate& cert, const RelationMatrix& M,
                        std::string* diagnostic = nullptr);

struct Verdict {
    Exp target = 1;
    int prime = 0;
    bool finite = false;  // some multiple of the target lies in the span
    Int m;                // minimal such multiple, when finite
    bool zero_at_p = false;
    std::optional<Certificate> certificate;
    std::string scope_note;

    std::string m_str() const { return finite ? dec(m) : "infinity"; }
};

Verdict is_zero_p_local(const RelationMatrix& M, int p, Exp target = 1);

}  // namespace jrel
