#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "kissing/codeword.hpp"

namespace kissing {

/// Bijection on {0, ..., degree-1}; images()[i] is the image of point i.
class Permutation {
public:
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// (a * b)(i) = b(a(i)): apply a first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Moves coordinates: bit i of `word` lands on position images()[i].
  Codeword apply(const Codeword& word) const;

private:
  std::vector<std::uint32_t> images_;
};

class PermutationGroup {
public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Group order by closure over elements; std::nullopt if the order
  /// exceeds `limit`.
  std::optional<std::uint64_t> order_by_closure(std::uint64_t limit = 1'000'000) const;

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
};

/// Generator k of the result maps (i, j) to (g1[k](i), g2[k](j)); the
/// coordinate (i, j) is indexed i * s + j where s is g2's degree.
PermutationGroup product_action(const PermutationGroup& g1, const PermutationGroup& g2);

/// Group file: header `group degree=<n> gens=<k>` then k lines of n images.
PermutationGroup read_group(std::istream& in);
PermutationGroup read_group_file(const std::filesystem::path& path);
void write_group(std::ostream& out, const PermutationGroup& group);

}  // namespace kissing
