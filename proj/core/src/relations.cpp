#include "jrel/relations.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace jrel {

namespace {

void drop_zeros(std::map<Exp, Int>& terms) {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
}

}  // namespace

std::vector<Relation> restriction_relations(const Character& c, Exp i_max,
                                            const std::string& source) {
    if (!c.integral_exponents())
        throw Error("restriction_relations: unresolved half-integer exponent in " + c.str());
    std::map<Exp, Int> base;
    Int total = 0;
    for (const auto& [stored, co] : c.stored()) {
        if (stored == 0) continue;  // zero weights cancel against the right side
        base[stored / 2] = co;
        total += co;
    }
    std::vector<Relation> out;
    for (Exp i = 0; i <= i_max; ++i) {
        Relation r;
        r.provenance = source + "_" + std::to_string(i);
        for (const auto& [k, a] : base) r.terms[k + i] += a;
        r.terms[i] -= total;
        drop_zeros(r.terms);
        if (!r.terms.empty()) out.push_back(std::move(r));
    }
    return out;
}

std::vector<Relation> from_printed(const PrintedRelation& pr, Exp i_max) {
    bool mirrored = true;
    for (const auto& [e, c] : pr.positive_coeffs)
        if (e <= 0) mirrored = false;
    std::vector<Relation> out;
    for (Exp i = 0; i <= i_max; ++i) {
        Relation r;
        r.modulus = pr.modulus;
        r.provenance = pr.source_tag + "_" + std::to_string(i);
        for (const auto& [e, c] : pr.positive_coeffs) {
            r.terms[e + i] += c;
            if (mirrored) r.terms[-e + i] += c;
        }
        r.terms[i] -= pr.rhs_multiplier;
        drop_zeros(r.terms);
        if (!r.terms.empty()) out.push_back(std::move(r));
    }
    return out;
}

std::vector<Relation> adams_relations(int p, Exp window, const std::vector<Exp>& k_set) {
    std::vector<Relation> out;
    std::set<std::map<Exp, Int>> seen;
    for (Exp k : k_set) {
        if (k == 0 || std::gcd(static_cast<long long>(k < 0 ? -k : k),
                               static_cast<long long>(p)) != 1)
            throw Error("adams_relations: k = " + std::to_string(k) +
                        " shares factor with p = " + std::to_string(p));
        for (Exp j = -window; j <= window; ++j) {
            if (j == 0) continue;
            Exp kj = k * j;
            if (kj < -window || kj > window) continue;
            std::map<Exp, Int> terms;
            terms[j] += 1;
            terms[kj] -= k;
            drop_zeros(terms);
            if (terms.empty() || seen.count(terms)) continue;
            seen.insert(terms);
            Relation r;
            r.terms = std::move(terms);
            r.provenance = "adams p" + std::to_string(p) + " k" + std::to_string(k) + " j" +
                           std::to_string(j);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<Exp> default_adams_multipliers(int p, Exp window) {
    std::vector<Exp> ks;
    if (p == 2)
        ks = {-1, 3, 5, 7};
    else if (p == 3)
        ks = {-1, 2, 4, 5};
    else {
        for (Exp k : {Exp{-1}, Exp{2}, Exp{3}})
            if (std::gcd(static_cast<long long>(k < 0 ? -k : k), static_cast<long long>(p)) == 1)
                ks.push_back(k);
    }
    std::erase_if(ks, [&](Exp k) { return k > window || k < -window; });
    return ks;
}

std::vector<Relation> base_relations() {
    Relation r;
    r.terms[0] = 2;
    r.provenance = "two-torsion t^0";
    return {r};
}

std::vector<Relation> rescale_exponents(const std::vector<Relation>& rels, Exp d) {
    if (d < 1) throw Error("rescale_exponents: divisor must be positive");
    if (d == 1) return rels;
    std::vector<Relation> out;
    out.reserve(rels.size());
    for (const auto& r : rels) {
        Relation s;
        s.modulus = r.modulus;
        s.provenance = r.provenance;
        for (const auto& [e, c] : r.terms) {
            if (e % d != 0)
                throw Error("rescale_exponents: exponent " + std::to_string(e) +
                            " in relation '" + r.provenance + "' not divisible by " +
                            std::to_string(d));
            s.terms[e / d] = c;
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string relation_line(const Relation& r) {
    std::ostringstream os;
    os << r.provenance << ": ";
    bool first = true;
    for (const auto& [e, c] : r.terms) {
        if (!first) os << " + ";
        first = false;
        os << dec(c) << "*t^" << e;
    }
    if (r.terms.empty()) os << "0";
    os << " = 0";
    if (r.modulus > 0) os << " mod " << r.modulus;
    return os.str();
}

Relation parse_relation_line(const std::string& line) {
    auto fail = [&](const std::string& why) {
        throw Error("parse_relation_line: " + why + " in '" + line + "'");
    };
    auto sep = line.find(": ");
    if (sep == std::string::npos) fail("missing provenance separator");
    Relation r;
    r.provenance = line.substr(0, sep);
    std::string body = line.substr(sep + 2);

    auto eq = body.rfind(" = 0");
    if (eq == std::string::npos) fail("missing ' = 0'");
    std::string tail = body.substr(eq + 4);
    body = body.substr(0, eq);
    if (!tail.empty()) {
        if (tail.rfind(" mod ", 0) != 0) fail("unrecognized trailer '" + tail + "'");
        r.modulus = std::stoll(tail.substr(5));
        if (r.modulus <= 0) fail("modulus must be positive");
    }

    if (body == "0") return r;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto next = body.find(" + ", pos);
        std::string term =
            next == std::string::npos ? body.substr(pos) : body.substr(pos, next - pos);
        auto star = term.find("*t^");
        if (star == std::string::npos) fail("malformed term '" + term + "'");
        Int coeff = int_from_dec(term.substr(0, star));
        Exp e = std::stoll(term.substr(star + 3));
        if (coeff != 0) r.terms[e] += coeff;
        pos = next == std::string::npos ? body.size() : next + 3;
    }
    drop_zeros(r.terms);
    return r;
}

}  // namespace jrel
