#include "kissing/text_format.hpp"

#include <charconv>

namespace kissing {

bool LineReader::next(std::string& line) {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_number_;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = raw.find_last_not_of(" \t\r");
    line = raw.substr(first, last - first + 1);
    return true;
  }
  return false;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty())
    throw FormatError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  return value;
}

Header parse_header(const std::string& line, std::size_t line_number) {
  const auto tokens = split_ws(line);
  if (tokens.empty()) throw FormatError(line_number, "empty header");
  Header h;
  h.tag = tokens[0];
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw FormatError(line_number, "expected key=value, got '" + tokens[i] + "'");
    const auto key = tokens[i].substr(0, eq);
    if (h.fields.count(key)) throw FormatError(line_number, "duplicate key '" + key + "'");
    h.fields[key] = tokens[i].substr(eq + 1);
  }
  return h;
}

const std::string& Header::get(const std::string& key, std::size_t line) const {
  auto it = fields.find(key);
  if (it == fields.end()) throw FormatError(line, "missing field '" + key + "' in '" + tag + "' header");
  return it->second;
}

std::uint64_t Header::get_uint(const std::string& key, std::size_t line) const {
  return parse_uint(get(key, line), line, key.c_str());
}

}  // namespace kissing
