#include <doctest.h>

#include "kissing/finite_field.hpp"
#include "oracles.hpp"

using namespace kissing;

namespace {

void check_axioms(const FiniteField& f) {
  const auto q = f.order();
  for (FiniteField::Element a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (FiniteField::Element b = 0; b < q; ++b) {
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.add(a, b) < q);
      REQUIRE(f.mul(a, b) < q);
      for (FiniteField::Element c = 0; c < q; c += (q > 32 ? 7 : 1)) {
        REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

// Smallest monic irreducible binary polynomial of degree m, by trial
// division (bit i = coefficient of x^i).
std::uint32_t smallest_irreducible(int m) {
  auto mod = [](std::uint32_t a, std::uint32_t b) {
    const int db = 31 - __builtin_clz(b);
    while (a && 31 - __builtin_clz(a) >= db) a ^= b << ((31 - __builtin_clz(a)) - db);
    return a;
  };
  for (std::uint32_t low = 0; low < (1u << m); ++low) {
    const std::uint32_t poly = (1u << m) | low;
    bool irreducible = true;
    for (std::uint32_t g = 2; g < (1u << m) && irreducible; ++g)
      if (31 - __builtin_clz(g) <= m / 2 && mod(poly, g) == 0) irreducible = false;
    if (irreducible) return poly;
  }
  return 0;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("field axioms for GF(79), GF(127), GF(2^7) and small fields") {
    for (std::uint32_t q : {2u, 4u, 8u, 79u, 127u, 128u}) {
      CAPTURE(q);
      check_axioms(FiniteField::of_order(q));
    }
  }

  TEST_CASE("prime fields are arithmetic mod p") {
    for (std::uint32_t p : {2u, 3u, 79u, 127u}) {
      const auto f = FiniteField::of_order(p);
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
          REQUIRE(f.add(a, b) == (a + b) % p);
          REQUIRE(f.mul(a, b) == (a * b) % p);
        }
    }
  }

  TEST_CASE("binary extension fields match carry-less multiplication") {
    for (int m : {2, 3, 7}) {
      const auto f = FiniteField(2, m);
      const std::uint32_t poly = smallest_irreducible(m);
      std::uint32_t encoded = 0;
      for (std::size_t i = 0; i < f.modulus().size(); ++i) encoded |= f.modulus()[i] << i;
      CHECK(encoded == poly);
      for (std::uint32_t a = 0; a < f.order(); ++a)
        for (std::uint32_t b = 0; b < f.order(); ++b) {
          REQUIRE(f.mul(a, b) == oracle::gf2m_mul(a, b, poly, m));
          REQUIRE(f.add(a, b) == (a ^ b));
        }
    }
  }

  TEST_CASE("primitive element is the smallest generator") {
    for (std::uint32_t q : {7u, 8u, 79u, 128u}) {
      const auto f = FiniteField::of_order(q);
      auto order_of = [&](std::uint32_t a) {
        std::uint32_t k = 1;
        for (auto x = a; x != 1; x = f.mul(x, a)) ++k;
        return k;
      };
      CHECK(order_of(f.primitive_element()) == q - 1);
      for (std::uint32_t a = 1; a < f.primitive_element(); ++a) CHECK(order_of(a) < q - 1);
    }
  }

  TEST_CASE("squares and powers") {
    const auto f = FiniteField::of_order(79);
    std::vector<bool> square(79, false);
    for (std::uint32_t a = 0; a < 79; ++a) square[a * a % 79] = true;
    for (std::uint32_t a = 0; a < 79; ++a) CHECK(f.is_square(a) == square[a]);
    CHECK(f.pow(3, 78) == 1);
    CHECK(f.pow(0, 0) == 1);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(FiniteField::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::of_order(1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::of_order(79).inv(0), std::domain_error);
    CHECK(is_prime(127));
    CHECK_FALSE(is_prime(129));
  }

  TEST_CASE("field element wrapper") {
    const auto f = FiniteField::of_order(127);
    const FieldElement a(f, 5), b(f, 100);
    CHECK((a + b).value() == 105 % 127);
    CHECK((a * b).value() == 500 % 127);
    CHECK((a * a.inverse()).value() == 1);
    CHECK((-a + a).value() == 0);
  }
}
