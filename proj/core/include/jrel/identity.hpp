#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "jrel/int.hpp"

namespace jrel {

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& why, std::size_t pos)
        : Error("identity parse error at position " + std::to_string(pos) + ": " + why),
          position(pos) {}
};

// Parses `c1*t^e1 + c2*t^e2 + ... = ...` into (left - right) as a sparse
// exponent -> coefficient map. Accepted atoms: `t` (= t^1), `t^5`, `t^-3`,
// `t^{16}`; coefficients attach with `*` or by juxtaposition (`16t`); bare
// integers stand for multiples of t^0; either side may be `0`.
std::map<Exp, Int> parse_identity(const std::string& text);

// Canonical rendering of a sparse combination, e.g. "16*t^1" or "t^4 - 2*t^2".
std::string identity_to_string(const std::map<Exp, Int>& terms);

}  // namespace jrel
