#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jrel {

// Arbitrary-precision integer. Elimination constants grow past 2^32 even on
// the built-in cases, and certificate coefficients past 2^62, so everything
// downstream of the character layer is exact bignum arithmetic.
using Int = mpz_class;

// Generator exponents and matrix indices are small; a machine word is ample.
using Exp = std::int64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string dec(const Int& v) { return v.get_str(); }

inline Int int_from_dec(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw Error("not a decimal integer: '" + s + "'");
    }
}

// Floor division (gmpxx operator/ truncates toward zero).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int iabs(const Int& v) { return abs(v); }

inline bool divides(const Int& d, const Int& v) {
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int igcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace jrel
