#include "jrel/character.hpp"

#include <sstream>

namespace jrel {

Character::Character(Map stored) {
    for (auto& [e, c] : stored)
        if (c != 0) coeffs_.emplace(e, std::move(c));
}

Character Character::trivial(const Int& n) {
    Character r;
    if (n != 0) r.coeffs_[0] = n;
    return r;
}

Character Character::monomial(Exp stored_exp, const Int& coeff) {
    Character r;
    if (coeff != 0) r.coeffs_[stored_exp] = coeff;
    return r;
}

Int Character::dim() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

bool Character::nonnegative() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

bool Character::self_conjugate() const {
    for (const auto& [e, c] : coeffs_) {
        auto it = coeffs_.find(-e);
        if (it == coeffs_.end() || it->second != c) return false;
    }
    return true;
}

bool Character::integral_exponents() const {
    for (const auto& [e, c] : coeffs_)
        if (e % 2 != 0) return false;
    return true;
}

std::string stored_exp_str(Exp stored) {
    if (stored % 2 == 0) return std::to_string(stored / 2);
    return "{" + std::to_string(stored) + "/2}";
}

std::string Character::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << dec(c) << "*g^" << stored_exp_str(e);
    }
    return os.str();
}

Character add(const Character& a, const Character& b) {
    Character::Map r = a.stored();
    for (const auto& [e, c] : b.stored()) r[e] += c;
    return Character(std::move(r));
}

Character mul(const Character& a, const Character& b) {
    Character::Map r;
    for (const auto& [e1, c1] : a.stored())
        for (const auto& [e2, c2] : b.stored()) r[e1 + e2] += c1 * c2;
    return Character(std::move(r));
}

Character scale(const Character& a, const Int& k) {
    Character::Map r;
    for (const auto& [e, c] : a.stored()) r[e] = c * k;
    return Character(std::move(r));
}

Character conjugate(const Character& c) {
    Character::Map r;
    for (const auto& [e, co] : c.stored()) r[-e] = co;
    return Character(std::move(r));
}

Int dim(const Character& c) { return c.dim(); }

Character exterior_power(const Character& c, Exp j) {
    for (const auto& [e, co] : c.stored())
        if (co < 0)
            throw Error("exterior_power: not a character, negative coefficient at g^" +
                        stored_exp_str(e));
    if (j < 0) throw Error("exterior_power: negative power");
    if (j == 0) return Character::trivial(1);
    if (c.dim() < j) return Character();

    // Truncated generating product prod_w (1 + s*g^w), keeping s-degrees 0..j.
    std::vector<Character::Map> layer(static_cast<std::size_t>(j) + 1);
    layer[0][0] = 1;
    for (const auto& [w, mult] : c.stored()) {
        if (!mult.fits_ulong_p())
            throw Error("exterior_power: weight multiplicity too large");
        unsigned long m = mult.get_ui();
        for (unsigned long rep = 0; rep < m; ++rep) {
            for (Exp t = j; t >= 1; --t) {
                auto& dst = layer[static_cast<std::size_t>(t)];
                for (const auto& [e, v] : layer[static_cast<std::size_t>(t) - 1]) {
                    auto& slot = dst[e + w];
                    slot += v;
                    if (slot == 0) dst.erase(e + w);
                }
            }
        }
    }
    return Character(std::move(layer[static_cast<std::size_t>(j)]));
}

Character spinor_character(const std::vector<Exp>& x, Parity parity) {
    if (x.empty()) throw Error("spinor_character: empty weight list");
    if (x.size() > 24) throw Error("spinor_character: too many weights");
    const unsigned m = static_cast<unsigned>(x.size());
    Character::Map r;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
        const int minus = __builtin_popcount(bits);
        if (parity == Parity::plus && minus % 2 == 1) continue;
        if (parity == Parity::minus && minus % 2 == 0) continue;
        Exp e = 0;
        for (unsigned i = 0; i < m; ++i) e += (bits >> i) & 1 ? -x[i] : x[i];
        r[e] += 1;
    }
    return Character(std::move(r));
}

}  // namespace jrel
