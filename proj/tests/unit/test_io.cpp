#include <doctest.h>

#include <sstream>

#include "kissing/code_io.hpp"
#include "kissing/constructors.hpp"
#include "kissing/count128.hpp"
#include "kissing/text_format.hpp"

using namespace kissing;

TEST_SUITE("io") {
  TEST_CASE("code files round trip") {
    const auto code = cw_lexicode(10, 4, 3);
    std::ostringstream out;
    write_code(out, code, {"made in a test"});
    CHECK(out.str().rfind("# made in a test\ncode n=10 d=4 w=3 size=", 0) == 0);
    std::istringstream in(out.str());
    const Code back = read_code(in);
    CHECK(back == static_cast<const Code&>(code));
  }

  TEST_CASE("code file errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
      std::istringstream in(text);
      try {
        read_code(in);
      } catch (const FormatError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("code n=4 d=2 size=2\n1100\n") > 0);               // too few words
    CHECK(line_of("# x\ncode n=4 d=2 size=1\n11a0\n") == 3);          // bad bit
    CHECK(line_of("code n=4 d=2 size=1\n110\n") == 2);                // wrong length
    CHECK(line_of("words n=4 d=2 size=0\n") == 1);                    // wrong tag
    CHECK(line_of("code n=4 size=0\n") == 1);                         // missing d
    CHECK(line_of("code n=4 d=2 size=2\n1100\n0011\n1111\n") == 4);  // too many words
  }

  TEST_CASE("count formatting") {
    CHECK(with_separators(8'863'556'495'104ULL) == "8,863,556,495,104");
    CHECK(with_separators(0) == "0");
    CHECK(with_separators(999) == "999");
    CHECK(with_separators(1000) == "1,000");
    const Count max = ~Count{0};
    CHECK(to_string(max) == "340282366920938463463374607431768211455");
    CHECK(parse_count("340282366920938463463374607431768211455") == max);
    CHECK_THROWS_AS(parse_count("340282366920938463463374607431768211456"), std::overflow_error);
    CHECK_THROWS_AS(parse_count("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_count(""), std::invalid_argument);
  }

  TEST_CASE("line reader strips comments and blanks") {
    std::istringstream in("# a\n\n  x y  # trailing\n\t\nz\n");
    LineReader reader(in);
    std::string line;
    REQUIRE(reader.next(line));
    CHECK(split_ws(line) == std::vector<std::string>{"x", "y"});
    CHECK(reader.line_number() == 3);
    REQUIRE(reader.next(line));
    CHECK(line == "z");
    CHECK_FALSE(reader.next(line));
  }
}
