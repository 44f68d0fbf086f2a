#include "kissing/codeword.hpp"

#include <stdexcept>

namespace kissing {

namespace {

void check_length(std::size_t length) {
  if (length == 0 || length > Codeword::kMaxLength)
    throw std::invalid_argument("codeword length must be in [1, 256], got " +
                                std::to_string(length));
}

}  // namespace

Codeword::Codeword(std::size_t length) : length_(length) { check_length(length); }

Codeword Codeword::from_string(std::string_view bits) {
  Codeword w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      w.limbs_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else if (bits[i] != '0')
      throw std::invalid_argument("invalid bit character '" + std::string(1, bits[i]) + "'");
  }
  return w;
}

Codeword Codeword::leading_ones(std::size_t length, std::size_t ones) {
  if (ones > length) throw std::invalid_argument("more ones than positions");
  Codeword w(length);
  for (std::size_t i = 0; i < ones; ++i) w.set(i);
  return w;
}

Codeword Codeword::from_limbs(std::size_t length, const Limbs& limbs) {
  Codeword w(length);
  w.limbs_ = limbs;
  for (std::size_t li = 0; li < kLimbs; ++li) {
    const std::size_t lo = li * 64;
    std::uint64_t mask;
    if (length >= lo + 64)
      mask = ~std::uint64_t{0};
    else if (length <= lo)
      mask = 0;
    else
      mask = (std::uint64_t{1} << (length - lo)) - 1;
    if ((w.limbs_[li] & ~mask) != 0) throw std::invalid_argument("bits set beyond codeword length");
  }
  return w;
}

void Codeword::set(std::size_t pos, bool value) {
  if (pos >= length_) throw std::out_of_range("bit position out of range");
  const std::uint64_t bit = std::uint64_t{1} << (pos & 63);
  if (value)
    limbs_[pos >> 6] |= bit;
  else
    limbs_[pos >> 6] &= ~bit;
}

void Codeword::flip(std::size_t pos) {
  if (pos >= length_) throw std::out_of_range("bit position out of range");
  limbs_[pos >> 6] ^= std::uint64_t{1} << (pos & 63);
}

Codeword Codeword::complemented() const {
  Codeword out(*this);
  for (std::size_t i = 0; i < length_; ++i) out.limbs_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  return out;
}

Codeword& Codeword::operator^=(const Codeword& other) {
  if (other.length_ != length_) throw std::invalid_argument("codeword length mismatch");
  for (std::size_t i = 0; i < kLimbs; ++i) limbs_[i] ^= other.limbs_[i];
  return *this;
}

Codeword& Codeword::operator&=(const Codeword& other) {
  if (other.length_ != length_) throw std::invalid_argument("codeword length mismatch");
  for (std::size_t i = 0; i < kLimbs; ++i) limbs_[i] &= other.limbs_[i];
  return *this;
}

Codeword& Codeword::operator|=(const Codeword& other) {
  if (other.length_ != length_) throw std::invalid_argument("codeword length mismatch");
  for (std::size_t i = 0; i < kLimbs; ++i) limbs_[i] |= other.limbs_[i];
  return *this;
}

std::string Codeword::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::strong_ordering operator<=>(const Codeword& a, const Codeword& b) noexcept {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (std::size_t i = 0; i < Codeword::kLimbs; ++i) {
    const std::uint64_t diff = a.limbs_[i] ^ b.limbs_[i];
    if (diff != 0) {
      // Lowest differing position decides; the word holding a 0 there is smaller.
      const std::uint64_t low = diff & (~diff + 1);
      return (a.limbs_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t hamming_distance(const Codeword& u, const Codeword& v) {
  if (u.length() != v.length())
    throw std::invalid_argument("hamming_distance: length mismatch (" + std::to_string(u.length()) +
                                " vs " + std::to_string(v.length()) + ")");
  return distance_unchecked(u, v);
}

std::size_t CodewordHash::operator()(const Codeword& w) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ w.length();
  for (auto limb : w.limbs()) {
    h ^= limb + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace kissing
