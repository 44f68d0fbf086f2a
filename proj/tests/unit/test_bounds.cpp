#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "kissing/bounds.hpp"
#include "kissing/text_format.hpp"

using namespace kissing;

namespace {

BoundsTable shipped() { return load_table_file(KISSING_DATA_DIR "/records.tbl"); }

BoundsTable parse(const std::string& text) {
  std::istringstream in(text);
  return load_table(in);
}

// Chains by nested loops, independent of enumerate_chains.
std::vector<std::vector<std::size_t>> nested_chains(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 1; a <= n; ++a) {
    out.push_back({a});
    for (std::size_t b = 1; 4 * b <= a; ++b) {
      out.push_back({a, b});
      for (std::size_t c = 1; 4 * c <= b; ++c) {
        out.push_back({a, b, c});
        for (std::size_t d = 1; 4 * d <= c; ++d) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("table lines and floors") {
    const auto t = parse("W 32 8 8 1117 lexicode-complement\n");
    CHECK(t.constant_weight(32, 8, 8).bound == 1117);
    CHECK(t.constant_weight(32, 8, 8).provenance == "lexicode-complement");
    CHECK_FALSE(t.constant_weight(32, 8, 8).floor);
    const auto empty = parse("");
    CHECK(empty.unrestricted(8, 2).bound == 128);
    CHECK(empty.unrestricted(8, 2).floor);
    CHECK(empty.unrestricted(5, 1).bound == 32);
    CHECK(empty.unrestricted(40, 10).bound == 2);
    CHECK(empty.unrestricted(3, 4).bound == 1);
    CHECK(empty.constant_weight(40, 8, 8).bound == 1);
    CHECK(empty.constant_weight(40, 2, 2).bound == 780);
    CHECK(empty.constant_weight(4, 6, 5).bound == 0);
  }

  TEST_CASE("larger bound wins on collision, independent of order") {
    const auto a = parse("W 32 8 8 1000 first\nW 32 8 8 1117 second\n");
    const auto b = parse("W 32 8 8 1117 second\nW 32 8 8 1000 first\n");
    CHECK(a.constant_weight(32, 8, 8).bound == 1117);
    CHECK(a.constant_weight(32, 8, 8).provenance == "second");
    CHECK(a.constant_weight_entries() == b.constant_weight_entries());
    const auto floor_wins = parse("B 8 2 100 weak\n");
    CHECK(floor_wins.unrestricted(8, 2).bound == 128);
    CHECK(floor_wins.unrestricted(8, 2).floor);
  }

  TEST_CASE("complement symmetry in lookups") {
    const auto t = parse("W 32 8 24 1117 lexicode\n");
    CHECK(t.constant_weight(32, 8, 8).bound == 1117);
    CHECK(t.constant_weight(32, 8, 24).bound == 1117);
    std::mt19937_64 rng(2);
    const auto s = shipped();
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + rng() % 130, d = 1 + rng() % n, w = rng() % (n + 1);
      if (w > 40 && n - w > 40) continue;  // keep binomial floors small
      CHECK(s.constant_weight(n, d, w).bound == s.constant_weight(n, d, n - w).bound);
    }
  }

  TEST_CASE("malformed tables report line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
      try {
        parse(text);
      } catch (const FormatError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("# c\nB 8 2 128 ok\nX 1 2 3\n") == 3);
    CHECK(line_of("B 8 2 0 zero\n") == 1);
    CHECK(line_of("\nB 8 2 -5 negative\n") == 2);
    CHECK(line_of("W 8 2 9 5 w>n\n") == 1);
    CHECK(line_of("B 8 9 5 d>n\n") == 1);
    CHECK(line_of("B 8 2\n") == 1);
    CHECK(line_of("B 8 2 12x\n") == 1);
  }

  TEST_CASE("chain totals from the shipped table") {
    const auto t = shipped();
    CHECK(evaluate_chain(32, {32, 8, 2}, t).total == 276'032);
    CHECK(evaluate_chain(36, {32, 8, 2}, t).total == 438'872);
    CHECK(evaluate_chain(40, {40, 8, 2}, t).total == 991'792);
    CHECK(evaluate_chain(44, {44, 8, 2}, t).total == 2'948'552);
    CHECK(evaluate_chain(128, {128, 32, 8, 2}, t).total == Count{8'863'556'495'104ULL});
    CHECK_THROWS_AS(evaluate_chain(32, {32, 9}, t), ChainViolation);
    const auto r = evaluate_chain(36, {32, 8, 2}, t);
    CHECK(r.terms[0].supports.bound == 1);
    CHECK(r.terms[0].supports.floor);
    CHECK_FALSE(r.terms[1].supports.floor);
  }

  TEST_CASE("best chain examples") {
    const auto small = parse("B 8 2 128 x\nW 8 2 2 28 x\nB 2 1 4 x\n");
    auto r = best_chain(8, small);
    CHECK(r.chain == std::vector<std::size_t>{8, 2});
    CHECK(r.total == 240);
    r = best_chain(1, BoundsTable{});
    CHECK(r.chain == std::vector<std::size_t>{1});
    CHECK(r.total == 2);
    CHECK(best_chain(8, BoundsTable{}).total >= 2);
    const auto t = shipped();
    CHECK(best_chain(32, t).chain == std::vector<std::size_t>{32, 8, 2});
    CHECK(best_chain(128, t).chain == std::vector<std::size_t>{128, 32, 8, 2});
    CHECK_THROWS_AS(best_chain(8, t, 0), std::invalid_argument);
  }

  TEST_CASE("ties prefer fewer levels then the smaller chain") {
    // At n = 4, [2], [3] and [4,1] all reach 24.
    const auto t = parse("W 4 3 3 3 tie\n");
    CHECK(evaluate_chain(4, {2}, t).total == 24);
    CHECK(evaluate_chain(4, {3}, t).total == 24);
    CHECK(evaluate_chain(4, {4, 1}, t).total == 24);
    const auto r = best_chain(4, t);
    CHECK(r.total == 24);
    CHECK(r.chain == std::vector<std::size_t>{2});
  }

  TEST_CASE("enumerated chains match the nested-loop enumeration") {
    for (std::size_t n : {1, 5, 16, 40, 64}) {
      auto a = enumerate_chains(n, 4), b = nested_chains(n);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }

  TEST_CASE("best chain dominates every explicit chain up to n = 64") {
    const auto t = shipped();
    for (std::size_t n = 1; n <= 64; ++n) {
      const auto best = best_chain(n, t);
      for (const auto& chain : nested_chains(n)) REQUIRE(evaluate_chain(n, chain, t).total <= best.total);
    }
  }

  TEST_CASE("removing entries never increases the best total (seeded)") {
    const auto full = shipped();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      BoundsTable reduced = full;
      for (const auto& [k, e] : full.unrestricted_entries())
        if (rng() % 3 == 0) reduced.erase_unrestricted(k.first, k.second);
      for (const auto& [k, e] : full.constant_weight_entries())
        if (rng() % 3 == 0) reduced.erase_constant_weight(std::get<0>(k), std::get<1>(k), std::get<2>(k));
      for (std::size_t n : {8, 32, 36, 40, 44, 64, 80, 128}) CHECK(best_chain(n, reduced).total <= best_chain(n, full).total);
    }
  }

  TEST_CASE("permuted load order gives identical reports") {
    std::ifstream in(KISSING_DATA_DIR "/records.tbl");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    std::mt19937_64 rng(6);
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string text;
    for (const auto& l : lines) text += l + "\n";
    const auto shuffled = parse(text);
    const auto original = shipped();
    for (std::size_t n : {32, 128}) {
      std::ostringstream a, b;
      write_chain_report_tsv(a, best_chain(n, original));
      write_chain_report_tsv(b, best_chain(n, shuffled));
      CHECK(a.str() == b.str());
    }
  }

  TEST_CASE("Barnes-Wall formula and record comparison") {
    CHECK(barnes_wall_kissing(3) == 240);
    CHECK(barnes_wall_kissing(5) == 146'880);
    CHECK(barnes_wall_kissing(6) == 9'694'080);
    CHECK(barnes_wall_kissing(7) == 1'260'230'400);
    const auto rows = record_report(shipped(), {32, 64, 128});
    REQUIRE(rows.size() == 3);
    const auto& last = rows[2];
    CHECK(last.best.total == Count{8'863'556'495'104ULL});
    auto mw = std::find_if(last.comparisons.begin(), last.comparisons.end(), [](const auto& c) { return c.name == "MW128"; });
    REQUIRE(mw != last.comparisons.end());
    CHECK(mw->whole_ratio == 40);
    CHECK(mw->exceeded);
    std::ostringstream text, tsv;
    write_record_report(text, rows);
    write_record_report_tsv(tsv, rows);
    CHECK(text.str().find("146,880") != std::string::npos);
    CHECK(text.str().find("9,694,080") != std::string::npos);
    CHECK(text.str().find("1,260,230,400") != std::string::npos);
    CHECK(tsv.str().find("MW128\t218044170240\t40\t") != std::string::npos);
  }

  TEST_CASE("table round trip") {
    const auto t = shipped();
    std::ostringstream out;
    write_table(out, t);
    const auto back = parse(out.str());
    CHECK(back.unrestricted_entries() == t.unrestricted_entries());
    CHECK(back.constant_weight_entries() == t.constant_weight_entries());
  }
}
