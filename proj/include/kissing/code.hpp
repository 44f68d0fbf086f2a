#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kissing/codeword.hpp"

namespace kissing {

/// A binary code of length n with a declared minimum distance.
///
/// Words are kept in construction order. The constructor only enforces word
/// lengths; weight, duplicate and distance invariants are certified by
/// verify() so that bad inputs surface as violation reports.
class Code {
public:
  Code(std::size_t length, std::size_t declared_distance, std::vector<Codeword> words = {},
       std::optional<std::size_t> weight = std::nullopt);

  std::size_t length() const noexcept { return length_; }
  std::size_t declared_distance() const noexcept { return declared_distance_; }
  /// Set for constant-weight codes.
  std::optional<std::size_t> weight() const noexcept { return weight_; }
  const std::vector<Codeword>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  Code with_declared_distance(std::size_t d) const;

  friend bool operator==(const Code&, const Code&) = default;

protected:
  std::size_t length_;
  std::size_t declared_distance_;
  std::optional<std::size_t> weight_;
  std::vector<Codeword> words_;
};

/// A code whose words all carry the same Hamming weight.
class ConstantWeightCode : public Code {
public:
  ConstantWeightCode(std::size_t length, std::size_t declared_distance, std::size_t weight,
                     std::vector<Codeword> words = {});
  /// Throws if `code` has no declared weight.
  explicit ConstantWeightCode(const Code& code);

  std::size_t weight() const noexcept { return *weight_; }
};

/// Minimum pairwise distance; std::nullopt stands for "infinite" (a single
/// word). Throws on an empty code.
std::optional<std::size_t> min_distance(const Code& code, unsigned threads = 1);

struct Violation {
  enum class Kind { WrongLength, WrongWeight, Duplicate, DistanceTooSmall };
  Kind kind;
  std::size_t first;   // index of the offending word (or first of the pair)
  std::size_t second;  // second index of the pair; equals `first` for single-word violations
  std::size_t value;   // offending weight or distance

  std::string describe(const Code& code) const;
};

struct CodeCertificate {
  std::size_t size = 0;
  std::optional<std::size_t> min_distance;  // nullopt when size < 2
};

struct CodeVerification {
  std::optional<CodeCertificate> certificate;
  std::optional<Violation> violation;
  bool ok() const noexcept { return certificate.has_value(); }
};

/// Certifies weights, duplicate-freeness and the declared distance. When
/// several pairs violate, the lexicographically smallest index pair is
/// reported regardless of the thread count.
CodeVerification verify(const Code& code, unsigned threads = 1);

/// Smallest (i, j), i < j, with distance(words[i], words[j]) < bound, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_close_pair(const std::vector<Codeword>& words,
                                                                    std::size_t bound,
                                                                    unsigned threads = 1);

}  // namespace kissing
