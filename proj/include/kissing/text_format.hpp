#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kissing {

/// Parse failure in one of the line-oriented text formats.
class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Yields non-blank, non-comment lines with their 1-based line numbers.
/// Everything after '#' is a comment.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}
  bool next(std::string& line);
  std::size_t line_number() const noexcept { return line_number_; }

private:
  std::istream& in_;
  std::size_t line_number_ = 0;
};

std::vector<std::string> split_ws(std::string_view s);

/// Header of the form `<tag> key=value key=value ...`.
struct Header {
  std::string tag;
  std::map<std::string, std::string> fields;

  bool has(const std::string& key) const { return fields.count(key) != 0; }
  std::uint64_t get_uint(const std::string& key, std::size_t line) const;
  const std::string& get(const std::string& key, std::size_t line) const;
};

Header parse_header(const std::string& line, std::size_t line_number);

std::uint64_t parse_uint(std::string_view token, std::size_t line, const char* what);

}  // namespace kissing
