#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "kissing/code.hpp"
#include "kissing/permutation.hpp"

namespace kissing {

/// Closure of {seed} under the generators, sorted ascending.
std::vector<Codeword> orbit(const PermutationGroup& group, const Codeword& seed);

enum class UnionStrategy {
  LargestFirst,  // bigger orbits first, ties by representative
  InputOrder,    // discovery order (ascending representatives, or seed order)
  Exact,         // maximum total size over pairwise compatible orbits
};

struct OrbitRecord {
  Codeword representative;  // smallest member
  std::size_t size = 0;
  std::optional<std::size_t> internal_distance;  // nullopt for a single-word orbit
  bool chosen = false;
};

struct OrbitSearchOptions {
  UnionStrategy strategy = UnionStrategy::LargestFirst;
  /// Orbits of these words only; empty means every weight-w word.
  std::vector<Codeword> seeds;
  /// Budget for the seen-set bitmap over ranked weight-w words; above it the
  /// enumeration re-canonicalizes each word instead (slow, constant memory).
  std::uint64_t seen_set_limit_bytes = std::uint64_t{1} << 30;
  /// Exact union refuses more admissible orbits than this.
  std::size_t exact_max_orbits = 64;
};

struct OrbitSearchResult {
  ConstantWeightCode code;
  /// Admissible orbits (internal distance >= d) in discovery order.
  std::vector<OrbitRecord> inventory;
  std::size_t orbits_enumerated = 0;
  bool streamed = false;
};

/// Builds a C(degree, d, w) as a union of group orbits of weight-w words.
OrbitSearchResult orbit_code_search(const PermutationGroup& group, std::size_t d, std::size_t w,
                                    const OrbitSearchOptions& options = {});

/// `orbit rep=<bits> size=<s> chosen=<0|1>` per record.
void write_inventory(std::ostream& out, const std::vector<OrbitRecord>& inventory);

/// Index of `word` among weight-w words of its length in ascending order.
std::uint64_t rank_constant_weight(const Codeword& word);

}  // namespace kissing
