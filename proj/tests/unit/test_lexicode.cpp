#include <doctest.h>

#include "kissing/constructors.hpp"
#include "oracles.hpp"

using namespace kissing;

namespace {

const ScanConvention kConventions[] = {
    {ScanOrder::Lex, ScanDirection::Ascending},
    {ScanOrder::Lex, ScanDirection::Descending},
    {ScanOrder::Colex, ScanDirection::Ascending},
    {ScanOrder::Colex, ScanDirection::Descending},
};

std::vector<std::string> strings(const Code& code) {
  std::vector<std::string> out;
  for (const auto& w : code.words()) out.push_back(w.to_string());
  return out;
}

std::vector<std::string> replay(int n, int d, int w, const ScanConvention& c) {
  return oracle::greedy(
      oracle::scan_order(n, w, c.order == ScanOrder::Colex, c.direction == ScanDirection::Descending), d);
}

}  // namespace

TEST_SUITE("lexicode") {
  TEST_CASE("unrestricted lexicodes replay the greedy scan word for word") {
    for (const auto& conv : kConventions)
      for (int n = 1; n <= 11; ++n)
        for (int d = 1; d <= std::min(n, 5); ++d) {
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(to_string(conv));
          CHECK(strings(lexicode(n, d, conv)) == replay(n, d, -1, conv));
        }
  }

  TEST_CASE("constant-weight lexicodes replay the greedy scan word for word") {
    for (const auto& conv : kConventions)
      for (int n = 1; n <= 12; ++n)
        for (int w = 0; w <= n; ++w)
          for (int d = 2; d <= std::min(n, 6); d += 2) {
            CAPTURE(n);
            CAPTURE(w);
            CAPTURE(d);
            CAPTURE(to_string(conv));
            const auto code = cw_lexicode(n, d, w, conv);
            CHECK(code.weight() == static_cast<std::size_t>(w));
            CHECK(strings(code) == replay(n, d, w, conv));
          }
  }

  TEST_CASE("odd distances in constant weight behave like the next even one") {
    CHECK(strings(cw_lexicode(10, 3, 4)) == replay(10, 3, 4, {}));
    CHECK(cw_lexicode(10, 3, 4).size() == cw_lexicode(10, 4, 4).size());
  }

  TEST_CASE("classical sizes") {
    CHECK(lexicode(7, 3).size() == 16);   // Hamming
    CHECK(lexicode(8, 4).size() == 16);   // extended Hamming
    CHECK(lexicode(15, 3).size() == 2048);
    CHECK(lexicode(23, 7).size() == 4096);  // Golay
    CHECK(cw_lexicode(8, 4, 4).size() == 14);
  }

  TEST_CASE("lexicodes certify at their declared distance") {
    for (const auto& conv : kConventions) {
      CHECK(verify(lexicode(14, 4, conv)).ok());
      CHECK(verify(cw_lexicode(16, 6, 7, conv)).ok());
      CHECK(verify(cw_lexicode(16, 6, 11, conv)).ok());
    }
  }
}
