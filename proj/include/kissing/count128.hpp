#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kissing {

/// Exact center counts. Every addition and multiplication on counts goes
/// through the checked helpers; overflow is reported, never wrapped.
using Count = unsigned __int128;

inline std::optional<Count> checked_add(Count a, Count b) {
  const Count r = a + b;
  if (r < a) return std::nullopt;
  return r;
}

inline std::optional<Count> checked_mul(Count a, Count b) {
  if (a == 0 || b == 0) return Count{0};
  const Count r = a * b;
  if (r / a != b) return std::nullopt;
  return r;
}

std::string to_string(Count value);
/// 8863556495104 -> "8,863,556,495,104".
std::string with_separators(Count value);
/// Decimal digits only; throws std::invalid_argument or std::overflow_error.
Count parse_count(std::string_view digits);

}  // namespace kissing
