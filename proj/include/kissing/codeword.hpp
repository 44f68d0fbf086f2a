#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace kissing {

/// Fixed-width binary word of length at most 256.
///
/// Position i lives in limb i / 64 at bit i % 64. Bits at positions >= length
/// are always zero, so limb-wise XOR/AND/popcount give exact answers without
/// masking.
///
/// Ordering is lexicographic on the bit string with position 0 most
/// significant (the string "0111" sorts before "1000"). Words of different
/// lengths order by length first.
class Codeword {
public:
  static constexpr std::size_t kMaxLength = 256;
  static constexpr std::size_t kLimbs = kMaxLength / 64;
  using Limbs = std::array<std::uint64_t, kLimbs>;

  Codeword() = default;
  explicit Codeword(std::size_t length);

  /// Parses a string of '0'/'1' characters, position 0 leftmost.
  static Codeword from_string(std::string_view bits);
  /// 1^ones 0^(length-ones).
  static Codeword leading_ones(std::size_t length, std::size_t ones);
  static Codeword from_limbs(std::size_t length, const Limbs& limbs);

  std::size_t length() const noexcept { return length_; }
  const Limbs& limbs() const noexcept { return limbs_; }

  bool test(std::size_t pos) const noexcept {
    return (limbs_[pos >> 6] >> (pos & 63)) & 1u;
  }
  void set(std::size_t pos, bool value = true);
  void flip(std::size_t pos);

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto limb : limbs_) w += static_cast<std::size_t>(std::popcount(limb));
    return w;
  }

  /// Bitwise complement within [0, length).
  Codeword complemented() const;

  Codeword& operator^=(const Codeword& other);
  Codeword& operator&=(const Codeword& other);
  Codeword& operator|=(const Codeword& other);
  friend Codeword operator^(Codeword a, const Codeword& b) { return a ^= b; }
  friend Codeword operator&(Codeword a, const Codeword& b) { return a &= b; }
  friend Codeword operator|(Codeword a, const Codeword& b) { return a |= b; }

  /// Calls f(pos) for every set position in increasing order.
  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t li = 0; li < kLimbs; ++li) {
      std::uint64_t limb = limbs_[li];
      while (limb != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(limb));
        f(li * 64 + bit);
        limb &= limb - 1;
      }
    }
  }

  std::string to_string() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend std::strong_ordering operator<=>(const Codeword& a, const Codeword& b) noexcept;

private:
  std::size_t length_ = 0;
  Limbs limbs_{};
};

/// Number of positions in which u and v differ. Throws on length mismatch.
std::size_t hamming_distance(const Codeword& u, const Codeword& v);

/// Unchecked popcount of u XOR v.
inline std::size_t distance_unchecked(const Codeword& u, const Codeword& v) noexcept {
  std::size_t d = 0;
  for (std::size_t i = 0; i < Codeword::kLimbs; ++i)
    d += static_cast<std::size_t>(std::popcount(u.limbs()[i] ^ v.limbs()[i]));
  return d;
}

inline std::size_t weight(const Codeword& u) noexcept { return u.weight(); }

struct CodewordHash {
  std::size_t operator()(const Codeword& w) const noexcept;
};

}  // namespace kissing
