#pragma once

#include <map>
#include <string>
#include <vector>

#include "jrel/catalog.hpp"
#include "jrel/character.hpp"

namespace jrel {

// Sparse integer relation among the generators t^j. modulus 0 means the
// combination vanishes exactly; modulus m > 0 means it lies in m times the
// ambient group (encoded downstream through a slack generator).
struct Relation {
    std::map<Exp, Int> terms;  // generator exponent -> coefficient
    Exp modulus = 0;
    std::string provenance;

    bool operator==(const Relation&) const = default;
};

// One relation per shift i = 0..i_max: sum_k a_k t^(k+i) - (sum_k a_k) t^i,
// over the nonzero exponents k of c. Requires integral exponents. Provenance
// lines are "<source>_<i>".
std::vector<Relation> restriction_relations(const Character& c, Exp i_max,
                                            const std::string& source);

// Shifted instances of one printed display. Symmetric displays (all keys
// positive) get their implied mirror terms; anything else is literal.
std::vector<Relation> from_printed(const PrintedRelation& pr, Exp i_max);

// t^j - k*t^(kj) for every k in k_set and every j != 0 with j and kj inside
// the window; exact duplicates (k = -1 at j and -j) are emitted once.
std::vector<Relation> adams_relations(int p, Exp window, const std::vector<Exp>& k_set);

// {-1, 3, 5, 7} at p=2 and {-1, 2, 4, 5} at p=3, intersected with the window.
// Other primes get {-1, 2, 3} filtered to coprimality (out of scope of the
// sources, provided for experimentation).
std::vector<Exp> default_adams_multipliers(int p, Exp window);

// The single relation 2*t^0 = 0.
std::vector<Relation> base_relations();

// Divides every exponent by d; throws (naming the relation) on a miss.
std::vector<Relation> rescale_exponents(const std::vector<Relation>& rels, Exp d);

// "provenance: c1*t^e1 + c2*t^e2 + ... = 0[ mod m]", exponents ascending.
std::string relation_line(const Relation& r);
Relation parse_relation_line(const std::string& line);

}  // namespace jrel
