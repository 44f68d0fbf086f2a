#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kissing/configuration.hpp"
#include "kissing/count128.hpp"

namespace kissing {

struct BoundEntry {
  Count bound;
  std::string provenance;
  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

/// Result of a lookup. `floor` is set when no table entry beat the
/// built-in trivial bound.
struct BoundLookup {
  Count bound;
  std::string provenance;
  bool floor;
};

/// Lower bounds on A(n,d) and A(n,d,w). Entries are max-merged; the
/// constant-weight key is stored as (n, d, min(w, n-w)).
class BoundsTable {
public:
  using UnrestrictedKey = std::pair<std::size_t, std::size_t>;
  using ConstantWeightKey = std::tuple<std::size_t, std::size_t, std::size_t>;

  void add_unrestricted(std::size_t n, std::size_t d, Count bound, std::string provenance);
  void add_constant_weight(std::size_t n, std::size_t d, std::size_t w, Count bound, std::string provenance);
  /// Max-merge of every entry of `other`.
  void merge(const BoundsTable& other);
  /// Drops an entry; returns false if it was absent.
  bool erase_unrestricted(std::size_t n, std::size_t d);
  bool erase_constant_weight(std::size_t n, std::size_t d, std::size_t w);

  /// A(n,d): max of the table entry and the floors 2^n (d <= 1),
  /// 2^(n-1) (d = 2), 2 (d <= n), 1 (d > n).
  BoundLookup unrestricted(std::size_t n, std::size_t d) const;
  /// A(n,d,w): max of the table entry (either complement key) and the floors
  /// C(n,w) (d <= 2) and 1 (w <= n). Zero for w > n.
  BoundLookup constant_weight(std::size_t n, std::size_t d, std::size_t w) const;

  const std::map<UnrestrictedKey, BoundEntry>& unrestricted_entries() const noexcept { return unrestricted_; }
  const std::map<ConstantWeightKey, BoundEntry>& constant_weight_entries() const noexcept { return constant_weight_; }
  std::size_t size() const noexcept { return unrestricted_.size() + constant_weight_.size(); }

private:
  std::map<UnrestrictedKey, BoundEntry> unrestricted_;
  std::map<ConstantWeightKey, BoundEntry> constant_weight_;
};

/// Lines `B <n> <d> <bound> <provenance...>` and
/// `W <n> <d> <w> <bound> <provenance...>`; `#` comments. Throws FormatError.
BoundsTable load_table(std::istream& in);
BoundsTable load_table_file(const std::filesystem::path& path);
void write_table(std::ostream& out, const BoundsTable& table);

struct ChainTerm {
  std::size_t support_size;
  std::size_t sign_distance;
  BoundLookup supports;  // A(n, k, k)
  BoundLookup signs;     // A(k, ceil(k/4))
  Count product;
};

struct ChainReport {
  std::size_t dimension;
  std::vector<std::size_t> chain;
  std::vector<ChainTerm> terms;
  Count total;
  bool uses_floor() const;
  std::string chain_string() const;
};

/// Throws ChainViolation for a chain that breaks the inequalities and
/// std::overflow_error when the total needs more than 128 bits.
ChainReport evaluate_chain(std::size_t n, const std::vector<std::size_t>& sizes, const BoundsTable& table);

/// Every chain with at most `max_levels` levels.
std::vector<std::vector<std::size_t>> enumerate_chains(std::size_t n, std::size_t max_levels);

/// Maximum total over enumerate_chains; ties go to fewer levels, then to the
/// lexicographically smaller chain.
ChainReport best_chain(std::size_t n, const BoundsTable& table, std::size_t max_levels = 8);

void write_chain_report(std::ostream& out, const ChainReport& report);
/// One term per line, tab-separated, followed by a total line.
void write_chain_report_tsv(std::ostream& out, const ChainReport& report);

/// prod_{i=1}^{m} (2^i + 2), the Barnes-Wall kissing number in dimension 2^m.
Count barnes_wall_kissing(unsigned m);

struct ReferenceValue {
  std::size_t dimension;
  std::string name;
  Count kissing;
  std::string source;
};

/// Kissing numbers of known lattices shipped with the tool.
const std::vector<ReferenceValue>& reference_lattices();

struct Comparison {
  std::string name;
  std::string source;
  Count reference;
  Count whole_ratio;  // floor(total / reference)
  double ratio;
  bool exceeded;  // construction total > reference
};

struct RecordRow {
  ChainReport best;
  std::vector<Comparison> comparisons;
};

/// best_chain per dimension against Barnes-Wall (powers of two) and the
/// reference lattices of that dimension.
std::vector<RecordRow> record_report(const BoundsTable& table, const std::vector<std::size_t>& dimensions,
                                     std::size_t max_levels = 8);
void write_record_report(std::ostream& out, const std::vector<RecordRow>& rows);
void write_record_report_tsv(std::ostream& out, const std::vector<RecordRow>& rows);

}  // namespace kissing
