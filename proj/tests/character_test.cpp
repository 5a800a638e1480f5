#include <doctest.h>

#include "jrel/character.hpp"
#include "oracles.hpp"

using namespace jrel;

namespace {

Character from_actual(std::initializer_list<std::pair<Exp, long>> entries) {
    Character::Map m;
    for (auto [e, c] : entries) m[2 * e] += c;
    return Character(std::move(m));
}

const Character sp_char = from_actual(
    {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {3, 1}, {-3, 1}, {6, 1}, {-6, 1}});

}  // namespace

TEST_CASE("add and mul basics") {
    Character a = from_actual({{1, 1}, {-1, 1}});
    CHECK(add(a, Character()) == a);
    CHECK(add(a, a) == from_actual({{1, 2}, {-1, 2}}));

    Character f4_part = add(from_actual({{2, 3}, {-2, 3}}), from_actual({{4, 1}, {-4, 1}}));
    CHECK(f4_part == from_actual({{2, 3}, {-2, 3}, {4, 1}, {-4, 1}}));

    // (g + g^-1)^3 (g^2 + g^-2)
    Character cube = mul(mul(a, a), a);
    Character prod = mul(cube, from_actual({{2, 1}, {-2, 1}}));
    CHECK(prod ==
          from_actual({{5, 1}, {-5, 1}, {3, 3}, {-3, 3}, {1, 4}, {-1, 4}}));

    CHECK(mul(prod, Character::trivial(1)) == prod);

    // half-unit exponents: g^{1/2} * g^{1/2} = g
    Character half = Character::monomial(1, 1);
    CHECK(mul(half, half) == Character::monomial(2, 1));
}

TEST_CASE("exterior power basics and goldens") {
    CHECK(exterior_power(sp_char, 1) == sp_char);
    CHECK(exterior_power(sp_char, 0) == Character::trivial(1));

    // lambda^2 of the 8 weights +-1,+-2,+-3,+-6
    Character l2 = exterior_power(sp_char, 2);
    CHECK(dim(l2) == 28);
    Character expected = from_actual({{1, 2},  {-1, 2},  {2, 1}, {-2, 1}, {3, 2}, {-3, 2},
                                      {4, 2},  {-4, 2},  {5, 2}, {-5, 2}, {7, 1}, {-7, 1},
                                      {8, 1},  {-8, 1},  {9, 1}, {-9, 1}, {0, 4}});
    CHECK(l2 == expected);

    CHECK(exterior_power(from_actual({{1, 7}, {-7, 1}}), 2) ==
          from_actual({{2, 21}, {-6, 7}}));

    // top power lands on the weight sum; beyond it the character is zero
    Character small = from_actual({{1, 2}, {3, 1}});
    CHECK(exterior_power(small, 3) == from_actual({{5, 1}}));
    CHECK(exterior_power(small, 4).is_zero());

    CHECK_THROWS_AS(exterior_power(from_actual({{1, -1}}), 2), Error);
    CHECK_THROWS_AS(exterior_power(small, -1), Error);
}

TEST_CASE("spinor characters") {
    CHECK(spinor_character({2, 2, 2, 4}, Parity::full) ==
          mul(mul(mul(from_actual({{1, 1}, {-1, 1}}), from_actual({{1, 1}, {-1, 1}})),
                  from_actual({{1, 1}, {-1, 1}})),
              from_actual({{2, 1}, {-2, 1}})));
    CHECK(spinor_character({2}, Parity::plus) == from_actual({{1, 1}}));
    CHECK(spinor_character({2, 2}, Parity::plus) == from_actual({{2, 1}, {-2, 1}}));
    CHECK(spinor_character({2, 2}, Parity::minus) == from_actual({{0, 2}}));

    // half-integer weights stay exact: x = (1) gives g^{1/2} + g^{-1/2}
    Character half = spinor_character({1}, Parity::full);
    CHECK(half == add(Character::monomial(1, 1), Character::monomial(-1, 1)));

    CHECK(dim(spinor_character({2, 2, 2, 4}, Parity::full)) == 16);
    CHECK(dim(spinor_character({2, 2, 2, 4}, Parity::plus)) == 8);
    CHECK_THROWS_AS(spinor_character({}, Parity::full), Error);
}

TEST_CASE("dim and conjugate") {
    CHECK(dim(sp_char) == 8);
    CHECK(conjugate(Character::monomial(6, 1)) == Character::monomial(-6, 1));
    CHECK(dim(exterior_power(from_actual({{0, 26}}), 2)) == 325);
    CHECK(sp_char.self_conjugate());
    CHECK_FALSE(from_actual({{1, 21}, {2, 35}, {-2, 35}, {-3, 7}}).self_conjugate());
}

TEST_CASE("string form") {
    Character c = add(Character::monomial(-3, 1), from_actual({{1, 2}}));
    CHECK(c.str() == "1*g^{-3/2} + 2*g^1");
    CHECK(Character().str() == "0");
}

// ---- property suites (the long loops also run in the acceptance gate) ------

TEST_CASE("property: exterior dim binomial and nonnegativity") {
    oracle::Rng rng(0xC0FFEE01);
    for (int it = 0; it < 200; ++it) {
        Character c = rng.character(10, 6);
        long d = static_cast<long>(dim(c).get_si());
        for (Exp j = 0; j <= d; ++j) {
            Character lj = exterior_power(c, j);
            CHECK(lj.nonnegative());
            // C(d, j)
            Int binom(1);
            for (Exp i = 0; i < j; ++i) binom = binom * (d - i) / (i + 1);
            CHECK(dim(lj) == binom);
        }
    }
}

TEST_CASE("property: exterior agrees with sub-multiset enumeration") {
    oracle::Rng rng(0xC0FFEE02);
    for (int it = 0; it < 200; ++it) {
        Character c = rng.character(10, 6);
        Exp j = rng.pick(0, static_cast<long>(dim(c).get_si()));
        CHECK(exterior_power(c, j) == oracle::exterior_brute(c, j));
    }
}

TEST_CASE("property: exterior extremes") {
    oracle::Rng rng(0xC0FFEE03);
    for (int it = 0; it < 200; ++it) {
        Character c = rng.character(10, 6);
        CHECK(exterior_power(c, 0) == Character::trivial(1));
        Exp weight_sum = 0;
        for (const auto& [e, co] : c.stored()) weight_sum += e * co.get_si();
        Exp d = dim(c).get_si();
        CHECK(exterior_power(c, d) == Character(Character::Map{{weight_sum, Int(1)}}));
        CHECK(exterior_power(c, d + 1).is_zero());
    }
}

TEST_CASE("property: self-conjugacy is preserved by exterior powers") {
    oracle::Rng rng(0xC0FFEE04);
    for (int it = 0; it < 200; ++it) {
        Character c = rng.self_conjugate_character(4, 5);
        CHECK(conjugate(c) == c);
        for (Exp j = 0; j <= dim(c).get_si(); ++j) {
            Character lj = exterior_power(c, j);
            CHECK(conjugate(lj) == lj);
        }
    }
}

TEST_CASE("property: ring laws on random characters") {
    oracle::Rng rng(0xC0FFEE05);
    for (int it = 0; it < 200; ++it) {
        Character a = rng.character(5, 4), b = rng.character(5, 4), c = rng.character(5, 4);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
}

TEST_CASE("property: spinor plus + minus = full") {
    oracle::Rng rng(0xC0FFEE06);
    for (int it = 0; it < 200; ++it) {
        std::vector<Exp> x;
        long m = rng.pick(1, 8);
        for (long i = 0; i < m; ++i) x.push_back(rng.pick(-4, 4));
        Character full = spinor_character(x, Parity::full);
        Character plus = spinor_character(x, Parity::plus);
        Character minus = spinor_character(x, Parity::minus);
        CHECK(add(plus, minus) == full);
        CHECK(full == oracle::spinor_brute(x, Parity::full));
        CHECK(plus == oracle::spinor_brute(x, Parity::plus));
        CHECK(minus == oracle::spinor_brute(x, Parity::minus));
    }
}
