#include "kissing/count128.hpp"

#include <algorithm>
#include <stdexcept>

namespace kissing {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string s;
  while (value != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string with_separators(Count value) {
  const std::string raw = to_string(value);
  std::string out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i != 0 && (raw.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(raw[i]);
  }
  return out;
}

Count parse_count(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty number");
  Count value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("invalid digit in '" + std::string(digits) + "'");
    auto scaled = checked_mul(value, 10);
    if (!scaled) throw std::overflow_error("number exceeds 128 bits");
    auto next = checked_add(*scaled, static_cast<Count>(c - '0'));
    if (!next) throw std::overflow_error("number exceeds 128 bits");
    value = *next;
  }
  return value;
}

}  // namespace kissing
