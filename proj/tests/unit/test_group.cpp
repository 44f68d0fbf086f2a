#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "kissing/orbit.hpp"
#include "kissing/permutation.hpp"
#include "kissing/psl2.hpp"
#include "kissing/text_format.hpp"
#include "oracles.hpp"

using namespace kissing;

namespace {

Codeword random_weight(std::mt19937_64& rng, std::size_t n, std::size_t w) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  Codeword c(n);
  for (std::size_t i = 0; i < w; ++i) c.set(p[i]);
  return c;
}

std::vector<int> as_ints(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("permutation basics") {
    const Permutation a({1, 2, 0}), b({0, 2, 1});
    CHECK((a * b).images() == std::vector<std::uint32_t>{2, 1, 0});  // a first, then b
    CHECK((a * a.inverse()).is_identity());
    CHECK(Permutation({1, 0, 2}).apply(Codeword::from_string("100")).to_string() == "010");
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(a.apply(Codeword(4)), std::invalid_argument);
    CHECK_THROWS_AS(PermutationGroup(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(PermutationGroup(4, {a}), std::invalid_argument);
  }

  TEST_CASE("group order by closure") {
    const PermutationGroup s4(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
    CHECK(s4.order_by_closure() == 24);
    CHECK_FALSE(s4.order_by_closure(10).has_value());
  }

  TEST_CASE("psl2 order formula") {
    CHECK(psl2_order(2) == 6);
    CHECK(psl2_order(7) == 168);
    CHECK(psl2_order(127) == 1'024'128);
    CHECK(psl2_order(128) == 2'097'024);
    CHECK(psl2_order(79) == 246'480);
  }

  TEST_CASE("psl2 over prime fields matches the matrix enumeration") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
      CAPTURE(p);
      const auto g = psl2_action(p);
      const auto elements = oracle::psl2_elements(static_cast<int>(p));
      CHECK(elements.size() == psl2_order(p));
      for (const auto& gen : g.generators()) CHECK(elements.count(as_ints(gen)) == 1);
      CHECK(g.order_by_closure() == psl2_order(p));
    }
  }

  TEST_CASE("psl2 over GF(2^m): generators and order") {
    for (std::uint32_t q : {4u, 8u}) {
      const auto g = psl2_action(q);
      CHECK(g.degree() == q + 1);
      CHECK(g.order_by_closure() == psl2_order(q));
      const auto& shift = g.generators()[0];
      for (std::uint32_t x = 0; x < q; ++x) CHECK(shift(x) == (x ^ 1u));
      CHECK(shift(q) == q);
    }
  }

  TEST_CASE("moebius_image agrees with the generators") {
    const auto f = FiniteField::of_order(7);
    const auto g = psl2_action(7);
    for (std::uint32_t x = 0; x <= 7; ++x) {
      CHECK(moebius_image(f, 1, 1, 0, 1, x) == g.generators()[0](x));
      CHECK(moebius_image(f, 0, f.neg(1), 1, 0, x) == g.generators()[2](x));
      CHECK(moebius_image(f, 1, 1, 0, 1, x) == static_cast<std::uint32_t>(oracle::moebius_mod_p(7, 1, 1, 0, 1, static_cast<int>(x))));
    }
  }

  TEST_CASE("psl2(2) is transitive on three points; psl2(7) on eight") {
    for (std::uint32_t q : {2u, 7u}) {
      const auto g = psl2_action(q);
      for (std::uint32_t pt = 0; pt <= q; ++pt) {
        Codeword seed(q + 1);
        seed.set(pt);
        CHECK(orbit(g, seed).size() == q + 1);
      }
    }
  }

  TEST_CASE("orbit sizes divide the group order (seeded)") {
    std::mt19937_64 rng(127);
    for (std::uint32_t q : {2u, 7u, 127u, 128u}) {
      const auto g = psl2_action(q);
      const auto order = psl2_order(q);
      for (int t = 0; t < (q > 100 ? 4 : 30); ++t) {
        const auto seed = random_weight(rng, q + 1, rng() % (q > 100 ? 9 : q + 2));
        const auto size = orbit(g, seed).size();
        CAPTURE(q);
        CAPTURE(size);
        CHECK(order % size == 0);
      }
    }
  }

  TEST_CASE("product action") {
    const PermutationGroup id2(2, {Permutation::identity(2)}), id3(3, {Permutation::identity(3)});
    const auto prod = product_action(id2, id3);
    CHECK(prod.degree() == 6);
    CHECK(prod.generators()[0].is_identity());
    const PermutationGroup swap(2, {Permutation({1, 0})}), cycle(3, {Permutation({1, 2, 0})});
    const auto g = product_action(swap, cycle);
    CHECK(g.generators()[0](0 * 3 + 0) == 1 * 3 + 1);
    CHECK(g.order_by_closure() == 6);
  }

  TEST_CASE("A6 acting on 36 points through the outer automorphism") {
    const auto natural = read_group_file(KISSING_DATA_DIR "/a6_natural.group");
    const auto outer = read_group_file(KISSING_DATA_DIR "/a6_outer.group");
    CHECK(natural.order_by_closure() == 360);
    CHECK(outer.order_by_closure() == 360);
    const auto g = product_action(natural, outer);
    CHECK(g.degree() == 36);
    CHECK(g.order_by_closure() == 360);
    std::mt19937_64 rng(36);
    std::set<std::size_t> sizes;
    for (int t = 0; t < 40; ++t) {
      const auto size = orbit(g, random_weight(rng, 36, 8)).size();
      CHECK(360 % size == 0);
      sizes.insert(size);
    }
    CHECK(sizes.count(360) == 1);
  }

  TEST_CASE("group file round trip and errors") {
    const auto g = psl2_action(5);
    std::ostringstream out;
    write_group(out, g);
    std::istringstream in(out.str());
    const auto back = read_group(in);
    CHECK(back.generators() == g.generators());
    std::istringstream bad("group degree=3 gens=1\n0 0 1\n");
    CHECK_THROWS(read_group(bad));
    std::istringstream short_line("group degree=3 gens=1\n0 1\n");
    CHECK_THROWS_AS(read_group(short_line), FormatError);
  }
}
