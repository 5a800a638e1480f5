#pragma once

#include <map>
#include <string>
#include <vector>

#include "jrel/int.hpp"

namespace jrel {

enum class Parity { full, plus, minus };

// Integer Laurent polynomial in gamma.
//
// Exponents are stored in half-units: the stored key 2e represents gamma^e.
// Spinor weights like (+-2 +-2 +-4)/2 are then exact integers, and ordinary
// integer exponents are simply even keys. All public printing renders the
// exponent as an exact rational with denominator 1 or 2.
class Character {
  public:
    using Map = std::map<Exp, Int>;

    Character() = default;

    // From a stored-exponent map; zero coefficients are dropped.
    explicit Character(Map stored);

    // n copies of gamma^0.
    static Character trivial(const Int& n);

    // Single term coeff * gamma^(stored_exp / 2).
    static Character monomial(Exp stored_exp, const Int& coeff);

    const Map& stored() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Int dim() const;
    bool nonnegative() const;
    bool self_conjugate() const;

    // True when every exponent is an integer (every stored key even).
    bool integral_exponents() const;

    bool operator==(const Character&) const = default;

    // Debug form, exponents ascending: "7*g^1 + 1*g^-7", halves as "g^{3/2}".
    std::string str() const;

  private:
    Map coeffs_;
};

Character add(const Character& a, const Character& b);
Character mul(const Character& a, const Character& b);
Character scale(const Character& a, const Int& k);
Character conjugate(const Character& c);
Int dim(const Character& c);

// j-th elementary symmetric polynomial of the weight multiset, computed by a
// degree-truncated generating product. Rejects negative coefficients; j past
// dim(c) yields the zero character.
Character exterior_power(const Character& c, Exp j);

// Weights x are the integer torus weights as written in the sources; each
// contributes gamma^(x_i/2) with a sign choice, i.e. the stored exponent of a
// sign pattern is simply sum(eps_i * x_i). Parity restricts to even (plus) or
// odd (minus) counts of negative signs.
Character spinor_character(const std::vector<Exp>& x, Parity parity);

// Formats a stored half-unit exponent as "e" or "{n/2}".
std::string stored_exp_str(Exp stored);

}  // namespace jrel
