#include <doctest.h>

#include <random>

#include "kissing/codeword.hpp"
#include "oracles.hpp"

using kissing::Codeword;

namespace {

std::string random_bits(std::mt19937_64& rng, std::size_t n) {
  std::string s(n, '0');
  for (auto& c : s) c = (rng() & 1) ? '1' : '0';
  return s;
}

}  // namespace

TEST_SUITE("codeword") {
  TEST_CASE("round trip through strings at limb boundaries") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1, 2, 63, 64, 65, 127, 128, 129, 200, 255, 256}) {
      const auto s = random_bits(rng, n);
      const auto w = Codeword::from_string(s);
      CHECK(w.length() == n);
      CHECK(w.to_string() == s);
      CHECK(w.weight() == static_cast<std::size_t>(oracle::weight(s)));
    }
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Codeword(0), std::invalid_argument);
    CHECK_THROWS_AS(Codeword(257), std::invalid_argument);
    CHECK_THROWS_AS(Codeword::from_string("0120"), std::invalid_argument);
    CHECK_THROWS_AS(Codeword::leading_ones(4, 5), std::invalid_argument);
    Codeword::Limbs limbs{};
    limbs[0] = 1u << 5;
    CHECK_THROWS_AS(Codeword::from_limbs(5, limbs), std::invalid_argument);
    Codeword w(8);
    CHECK_THROWS_AS(w.set(8), std::out_of_range);
    CHECK_THROWS_AS(kissing::hamming_distance(Codeword(8), Codeword(9)), std::invalid_argument);
    CHECK_THROWS_AS(w ^= Codeword(9), std::invalid_argument);
  }

  TEST_CASE("leading ones and complement") {
    CHECK(Codeword::leading_ones(6, 2).to_string() == "110000");
    CHECK(Codeword::from_string("10110").complemented().to_string() == "01001");
    const auto full = Codeword::leading_ones(256, 256);
    CHECK(full.complemented().weight() == 0);
  }

  TEST_CASE("ordering is lexicographic with position 0 most significant") {
    CHECK(Codeword::from_string("0111") < Codeword::from_string("1000"));
    CHECK(Codeword::from_string("0010") < Codeword::from_string("0011"));
    CHECK(Codeword::from_string("111") < Codeword::from_string("0000"));  // shorter first
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
      const auto a = random_bits(rng, 70), b = random_bits(rng, 70);
      CHECK(((Codeword::from_string(a) <=> Codeword::from_string(b)) < 0) == (a < b));
    }
  }

  TEST_CASE("metric axioms of hamming distance (seeded)") {
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 1 + rng() % 256;
      const auto a = random_bits(rng, n), b = random_bits(rng, n), c = random_bits(rng, n);
      const auto u = Codeword::from_string(a), v = Codeword::from_string(b), x = Codeword::from_string(c);
      const auto duv = kissing::hamming_distance(u, v);
      CHECK(duv == static_cast<std::size_t>(oracle::distance(a, b)));
      CHECK(kissing::hamming_distance(u, u) == 0);
      CHECK(duv == kissing::hamming_distance(v, u));
      CHECK((duv == 0) == (u == v));
      CHECK(kissing::hamming_distance(u, x) <= duv + kissing::hamming_distance(v, x));
      CHECK(duv == (u ^ v).weight());
      CHECK(kissing::distance_unchecked(u, v) == duv);
    }
  }

  TEST_CASE("for_each_set visits positions in increasing order") {
    const auto w = Codeword::from_string(std::string(64, '0') + "1" + std::string(100, '0') + "1");
    std::vector<std::size_t> seen;
    w.for_each_set([&](std::size_t p) { seen.push_back(p); });
    CHECK(seen == std::vector<std::size_t>{64, 165});
  }
}
