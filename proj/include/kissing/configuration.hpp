#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kissing/code.hpp"
#include "kissing/count128.hpp"

namespace kissing {

/// Thrown by SupportChain::validate; `level()` is the index of the first
/// violated inequality (0 for n >= n0, k for n_{k-1} >= 4 n_k).
class ChainViolation : public std::invalid_argument {
public:
  ChainViolation(std::size_t level, const std::string& what) : std::invalid_argument(what), level_(level) {}
  std::size_t level() const noexcept { return level_; }

private:
  std::size_t level_;
};

/// Ambient dimension n and support sizes n >= n0 >= 4 n1 >= 16 n2 >= ... >= 1.
class SupportChain {
public:
  static SupportChain validate(std::size_t n, std::vector<std::size_t> sizes);
  /// No inequality checks; for deliberately broken inputs that a verifier
  /// has to reject.
  static SupportChain unchecked(std::size_t n, std::vector<std::size_t> sizes);

  std::size_t dimension() const noexcept { return n_; }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::size_t levels() const noexcept { return sizes_.size(); }
  std::size_t top() const noexcept { return sizes_.front(); }

  std::string to_string() const;  // "[32,8,2]"
  friend bool operator==(const SupportChain&, const SupportChain&) = default;

private:
  SupportChain(std::size_t n, std::vector<std::size_t> sizes) : n_(n), sizes_(std::move(sizes)) {}
  std::size_t n_;
  std::vector<std::size_t> sizes_;
};

/// First violated chain inequality, if any.
std::optional<ChainViolation> find_chain_violation(std::size_t n, const std::vector<std::size_t>& sizes);

/// ceil(k / 4): the sign-code distance a level of support size k needs.
constexpr std::size_t sign_distance_for(std::size_t support) noexcept { return (support + 3) / 4; }

struct Rational {
  std::uint64_t num;
  std::uint64_t den;
};

/// One layer of centers: shape +-a^k 0^(n-k) with a^2 = n0 / k.
struct Level {
  std::size_t index;
  std::size_t support_size;
  Rational scale_squared;
  ConstantWeightCode support_code;
  Code sign_code;
};

/// A center. Sign bit j applies to the j-th set position of `support` in
/// increasing coordinate order; 0 means +a, 1 means -a.
struct Center {
  std::size_t level;
  Codeword support;
  Codeword signs;
  friend bool operator==(const Center&, const Center&) = default;
};

struct LevelCodes {
  ConstantWeightCode support;
  Code signs;
};

struct BuildOptions {
  /// Skip distance/duplicate certification of the codes (shapes are always
  /// checked).
  bool skip_code_verification = false;
  unsigned threads = 1;
};

/// Thrown when a level's codes do not fit the chain.
class LevelError : public std::invalid_argument {
public:
  LevelError(std::size_t level, const std::string& what) : std::invalid_argument(what), level_(level) {}
  std::size_t level() const noexcept { return level_; }

private:
  std::size_t level_;
};

class KissingConfiguration {
public:
  KissingConfiguration(SupportChain chain, std::vector<Level> levels);

  const SupportChain& chain() const noexcept { return chain_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::size_t dimension() const noexcept { return chain_.dimension(); }

  /// Number of centers on level k.
  Count level_count(std::size_t k) const;
  /// Index of the first center of each level, plus the total at the end.
  const std::vector<std::uint64_t>& offsets() const noexcept { return offsets_; }

  /// Center with global index `i` (level-major, then support order, then
  /// sign order).
  Center center(std::uint64_t i) const;

private:
  SupportChain chain_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> offsets_;
};

KissingConfiguration build_configuration(const SupportChain& chain, std::vector<LevelCodes> codes,
                                         const BuildOptions& options = {});

/// Sum over levels of |support code| * |sign code|. Throws std::overflow_error.
Count count(const KissingConfiguration& config);

struct TableTerm {
  Count supports;
  Count signs;
};
/// Count from abstract code sizes. Throws std::overflow_error.
Count count(const std::vector<TableTerm>& terms);

/// Agreements minus disagreements of sign over the common support.
std::int64_t signed_overlap(const Center& u, const Center& v);

/// <u, v> <= n0 / 2 in exact integer form: s <= 0 or 4 s^2 <= k_u k_v.
constexpr bool pair_separated(std::int64_t s, std::uint64_t support_u, std::uint64_t support_v) noexcept {
  if (s <= 0) return true;
  const auto ss = static_cast<unsigned __int128>(s) * static_cast<unsigned __int128>(s);
  return 4 * ss <= static_cast<unsigned __int128>(support_u) * support_v;
}

struct PairViolation {
  std::uint64_t first;   // global center indices, first < second
  std::uint64_t second;
  std::int64_t overlap;
  bool duplicate;
  std::string describe(const KissingConfiguration& config) const;
};

struct PairScanResult {
  std::uint64_t pairs_checked = 0;
  std::optional<PairViolation> violation;
  bool certified() const noexcept { return !violation; }
};

/// Every unordered pair of distinct centers. The reported violation is the
/// smallest (first, second) pair regardless of the thread count.
PairScanResult verify_exhaustive(const KissingConfiguration& config, unsigned threads = 1);

/// `pairs` uniformly drawn unordered pairs from a seeded 64-bit Mersenne
/// Twister. A smoke test only.
PairScanResult verify_sampled(const KissingConfiguration& config, std::uint64_t pairs, std::uint64_t seed);

struct StructuralFailure {
  enum class Component { Chain, SupportCode, SignCode };
  Component component;
  std::size_t level;
  std::string message;
};

struct StructuralResult {
  std::optional<StructuralFailure> failure;
  bool certified() const noexcept { return !failure; }
};

/// Chain inequalities plus each level's code requirements: supports form a
/// C(n, k, k) and signs a C(k, ceil(k/4)). Sufficient for the pairwise
/// property without scanning pairs.
StructuralResult verify_structural(const KissingConfiguration& config, unsigned threads = 1);

/// Largest possible cosine s / sqrt(product) between two distinct centers.
struct CosineBound {
  std::int64_t overlap;
  std::uint64_t product;

  double cosine() const;
  double angle_degrees() const;
  /// cosine <= 1/2 exactly.
  bool within_sixty_degrees() const noexcept { return pair_separated(overlap, product, 1); }
  friend bool operator==(const CosineBound&, const CosineBound&) = default;
};

/// Exact comparison of s1/sqrt(p1) and s2/sqrt(p2).
int compare_cosines(const CosineBound& a, const CosineBound& b);

/// Per-level parameters for the angle bound; distances are nullopt when the
/// code has a single word (no pairs of that kind exist).
struct LevelDistances {
  std::size_t support_size;
  std::optional<std::size_t> support_distance;
  std::optional<std::size_t> sign_distance;
  bool empty = false;  // level contributes no centers
};

/// Max over level pairs of the largest overlap the distances permit: same
/// support k - 2 d_sign, other support in the level k - ceil(d_supp / 2),
/// across levels the smaller support size. nullopt when there are no pairs.
std::optional<CosineBound> min_angle(const std::vector<LevelDistances>& levels);
/// Uses the codes' actual minimum distances.
std::optional<CosineBound> min_angle(const KissingConfiguration& config, unsigned threads = 1);

enum class ExportFormat { Exact, Decimal };

/// Exact: `center level=<k> support=<bits> signs=<bits>`. Decimal: n
/// coordinates per line, "%.17g". Throws std::length_error above `cap` rows.
void export_centers(std::ostream& out, const KissingConfiguration& config, ExportFormat format,
                    std::uint64_t cap = 10'000'000);
std::vector<Center> read_centers(std::istream& in);

/// Coordinates of one center in floating point (only for exports and
/// cross-checks).
std::vector<double> coordinates(const KissingConfiguration& config, const Center& c);

/// Configuration manifest:
///     config n=<n> chain=<n0,n1,...>
///     level <k> support_file=<path> sign_file=<path>
/// Relative paths resolve against the manifest's directory.
struct ConfigManifest {
  std::size_t dimension;
  std::vector<std::size_t> chain;
  std::vector<std::filesystem::path> support_files;
  std::vector<std::filesystem::path> sign_files;
};
ConfigManifest read_manifest(std::istream& in, const std::filesystem::path& base_dir);
ConfigManifest read_manifest_file(const std::filesystem::path& path);
void write_manifest(std::ostream& out, const ConfigManifest& manifest);
/// Loads codes; chain checks happen in verification, not here.
KissingConfiguration load_configuration(const ConfigManifest& manifest, const BuildOptions& options = {});

}  // namespace kissing
