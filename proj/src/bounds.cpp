#include "kissing/bounds.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "kissing/text_format.hpp"

namespace kissing {

namespace {

Count power_of_two(std::size_t e) {
  if (e >= 128) throw std::overflow_error("2^" + std::to_string(e) + " does not fit in 128 bits");
  return Count{1} << e;
}

Count exact_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const auto m = checked_mul(c, n - i);
    if (!m) throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
    c = *m / (i + 1);
  }
  return c;
}

// Larger bound wins; equal bounds keep the smaller provenance so the result
// does not depend on load order.
template <class Map, class Key>
void max_merge(Map& map, const Key& key, Count bound, std::string provenance) {
  if (bound == 0) throw std::invalid_argument("bounds must be positive");
  auto [it, inserted] = map.try_emplace(key, BoundEntry{bound, provenance});
  if (inserted) return;
  BoundEntry& e = it->second;
  if (bound > e.bound || (bound == e.bound && provenance < e.provenance)) e = BoundEntry{bound, std::move(provenance)};
}

BoundLookup pick(const BoundEntry* entry, Count floor, std::string floor_note) {
  if (entry && entry->bound >= floor) return BoundLookup{entry->bound, entry->provenance, false};
  return BoundLookup{floor, std::move(floor_note), true};
}

}  // namespace

void BoundsTable::add_unrestricted(std::size_t n, std::size_t d, Count bound, std::string provenance) {
  max_merge(unrestricted_, UnrestrictedKey{n, d}, bound, std::move(provenance));
}

void BoundsTable::add_constant_weight(std::size_t n, std::size_t d, std::size_t w, Count bound,
                                      std::string provenance) {
  if (w > n) throw std::invalid_argument("weight exceeds length");
  max_merge(constant_weight_, ConstantWeightKey{n, d, std::min(w, n - w)}, bound, std::move(provenance));
}

void BoundsTable::merge(const BoundsTable& other) {
  for (const auto& [k, e] : other.unrestricted_) max_merge(unrestricted_, k, e.bound, e.provenance);
  for (const auto& [k, e] : other.constant_weight_) max_merge(constant_weight_, k, e.bound, e.provenance);
}

bool BoundsTable::erase_unrestricted(std::size_t n, std::size_t d) { return unrestricted_.erase({n, d}) != 0; }

bool BoundsTable::erase_constant_weight(std::size_t n, std::size_t d, std::size_t w) {
  if (w > n) return false;
  return constant_weight_.erase({n, d, std::min(w, n - w)}) != 0;
}

BoundLookup BoundsTable::unrestricted(std::size_t n, std::size_t d) const {
  const auto it = unrestricted_.find({n, d});
  const BoundEntry* entry = it == unrestricted_.end() ? nullptr : &it->second;
  if (d <= 1) return pick(entry, power_of_two(n), "floor: all words");
  if (d == 2) return pick(entry, power_of_two(n - 1), "floor: even-weight words");
  if (d <= n) return pick(entry, 2, "floor: a word and its complement");
  return pick(entry, 1, "floor: single word");
}

BoundLookup BoundsTable::constant_weight(std::size_t n, std::size_t d, std::size_t w) const {
  if (w > n) return BoundLookup{0, "weight exceeds length", true};
  const auto it = constant_weight_.find({n, d, std::min(w, n - w)});
  const BoundEntry* entry = it == constant_weight_.end() ? nullptr : &it->second;
  if (d <= 2) return pick(entry, exact_binomial(n, w), "floor: all weight-" + std::to_string(w) + " words");
  return pick(entry, 1, "floor: single word");
}

// ---------------------------------------------------------------------------

BoundsTable load_table(std::istream& in) {
  BoundsTable table;
  LineReader reader(in);
  std::string line;
  while (reader.next(line)) {
    const std::size_t ln = reader.line_number();
    const auto tokens = split_ws(line);
    const bool weighted = !tokens.empty() && tokens[0] == "W";
    if (tokens.empty() || (tokens[0] != "B" && !weighted))
      throw FormatError(ln, "expected 'B <n> <d> <bound> <provenance>' or 'W <n> <d> <w> <bound> <provenance>'");
    const std::size_t fields = weighted ? 5 : 4;
    if (tokens.size() < fields) throw FormatError(ln, "too few fields");
    const auto n = parse_uint(tokens[1], ln, "n");
    const auto d = parse_uint(tokens[2], ln, "d");
    if (n == 0 || n > Codeword::kMaxLength) throw FormatError(ln, "n must be in [1, 256]");
    if (d == 0 || d > n) throw FormatError(ln, "d must be in [1, n]");
    const std::string& bound_token = tokens[fields - 1];
    if (bound_token.starts_with('-')) throw FormatError(ln, "bound must be positive");
    Count bound;
    try {
      bound = parse_count(bound_token);
    } catch (const std::exception& e) {
      throw FormatError(ln, std::string("bad bound: ") + e.what());
    }
    if (bound == 0) throw FormatError(ln, "bound must be positive");
    std::string provenance;
    for (std::size_t i = fields; i < tokens.size(); ++i) provenance += (provenance.empty() ? "" : " ") + tokens[i];
    if (provenance.empty()) provenance = "unspecified";
    if (weighted) {
      const auto w = parse_uint(tokens[3], ln, "w");
      if (w > n) throw FormatError(ln, "w must not exceed n");
      table.add_constant_weight(n, d, w, bound, std::move(provenance));
    } else {
      table.add_unrestricted(n, d, bound, std::move(provenance));
    }
  }
  return table;
}

BoundsTable load_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table " + path.string());
  try {
    return load_table(in);
  } catch (const FormatError& e) {
    throw FormatError(e.line(), path.string() + ": " + e.what());
  }
}

void write_table(std::ostream& out, const BoundsTable& table) {
  for (const auto& [k, e] : table.unrestricted_entries())
    out << "B " << k.first << ' ' << k.second << ' ' << to_string(e.bound) << ' ' << e.provenance << '\n';
  for (const auto& [k, e] : table.constant_weight_entries())
    out << "W " << std::get<0>(k) << ' ' << std::get<1>(k) << ' ' << std::get<2>(k) << ' ' << to_string(e.bound)
        << ' ' << e.provenance << '\n';
}

// ---------------------------------------------------------------------------

bool ChainReport::uses_floor() const {
  return std::any_of(terms.begin(), terms.end(), [](const ChainTerm& t) { return t.supports.floor || t.signs.floor; });
}

std::string ChainReport::chain_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "," : "") + std::to_string(chain[i]);
  return s + "]";
}

ChainReport evaluate_chain(std::size_t n, const std::vector<std::size_t>& sizes, const BoundsTable& table) {
  SupportChain::validate(n, sizes);
  ChainReport report{n, sizes, {}, 0};
  for (std::size_t k : sizes) {
    ChainTerm term{k, sign_distance_for(k), table.constant_weight(n, k, k), table.unrestricted(k, sign_distance_for(k)), 0};
    const auto product = checked_mul(term.supports.bound, term.signs.bound);
    if (!product) throw std::overflow_error("chain term overflows 128 bits");
    term.product = *product;
    const auto sum = checked_add(report.total, term.product);
    if (!sum) throw std::overflow_error("chain total overflows 128 bits");
    report.total = *sum;
    report.terms.push_back(std::move(term));
  }
  return report;
}

std::vector<std::vector<std::size_t>> enumerate_chains(std::size_t n, std::size_t max_levels) {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, std::size_t limit) -> void {
    for (std::size_t k = 1; k <= limit; ++k) {
      current.push_back(k);
      chains.push_back(current);
      if (current.size() < max_levels) self(self, k / 4);
      current.pop_back();
    }
  };
  if (max_levels > 0) extend(extend, n);
  return chains;
}

ChainReport best_chain(std::size_t n, const BoundsTable& table, std::size_t max_levels) {
  if (max_levels == 0) throw std::invalid_argument("max_levels must be at least 1");
  std::optional<ChainReport> best;
  for (const auto& chain : enumerate_chains(n, max_levels)) {
    ChainReport r = evaluate_chain(n, chain, table);
    if (!best || r.total > best->total ||
        (r.total == best->total &&
         (r.chain.size() < best->chain.size() || (r.chain.size() == best->chain.size() && r.chain < best->chain))))
      best = std::move(r);
  }
  return *best;
}

void write_chain_report(std::ostream& out, const ChainReport& report) {
  out << "n=" << report.dimension << " chain=" << report.chain_string() << '\n';
  out << std::left << std::setw(6) << "level" << std::setw(6) << "k" << std::right << std::setw(16)
      << "A(n,k,k)" << std::setw(8) << "d_sign" << std::setw(18) << "A(k,d_sign)" << std::setw(24) << "product"
      << "  provenance\n";
  for (std::size_t i = 0; i < report.terms.size(); ++i) {
    const auto& t = report.terms[i];
    out << std::left << std::setw(6) << i << std::setw(6) << t.support_size << std::right << std::setw(16)
        << with_separators(t.supports.bound) << std::setw(8) << t.sign_distance << std::setw(18)
        << with_separators(t.signs.bound) << std::setw(24) << with_separators(t.product) << "  "
        << t.supports.provenance << (t.supports.floor ? " [floor]" : "") << "; " << t.signs.provenance
        << (t.signs.floor ? " [floor]" : "") << '\n';
  }
  out << "total " << with_separators(report.total) << " (" << to_string(report.total) << ")"
      << (report.uses_floor() ? " includes trivial floors" : "") << '\n';
}

void write_chain_report_tsv(std::ostream& out, const ChainReport& report) {
  out << "#n\tchain\tlevel\tk\tsupport_bound\tsupport_floor\tsign_distance\tsign_bound\tsign_floor\tproduct\t"
         "support_provenance\tsign_provenance\n";
  for (std::size_t i = 0; i < report.terms.size(); ++i) {
    const auto& t = report.terms[i];
    out << report.dimension << '\t' << report.chain_string() << '\t' << i << '\t' << t.support_size << '\t'
        << to_string(t.supports.bound) << '\t' << t.supports.floor << '\t' << t.sign_distance << '\t'
        << to_string(t.signs.bound) << '\t' << t.signs.floor << '\t' << to_string(t.product) << '\t'
        << t.supports.provenance << '\t' << t.signs.provenance << '\n';
  }
  out << report.dimension << '\t' << report.chain_string() << "\ttotal\t" << to_string(report.total) << '\n';
}

// ---------------------------------------------------------------------------

Count barnes_wall_kissing(unsigned m) {
  Count product = 1;
  for (unsigned i = 1; i <= m; ++i) {
    const auto next = checked_mul(product, power_of_two(i) + 2);
    if (!next) throw std::overflow_error("Barnes-Wall kissing number overflows 128 bits");
    product = *next;
  }
  return product;
}

const std::vector<ReferenceValue>& reference_lattices() {
  static const std::vector<ReferenceValue> values{
      {32, "Q32", 261'120, "Quebbemann lattice"},
      {44, "MW44", 2'708'112, "Mordell-Weil lattice (Nebe)"},
      {48, "P48", 52'416'000, "extremal unimodular lattices"},
      {64, "Nebe64", 138'458'880, "extremal 3-modular lattice (Nebe)"},
      {80, "BN80", 1'250'172'000, "Bachoc-Nebe lattice"},
      {128, "MW128", 218'044'170'240ULL, "Mordell-Weil lattice (Elkies)"},
  };
  return values;
}

std::vector<RecordRow> record_report(const BoundsTable& table, const std::vector<std::size_t>& dimensions,
                                     std::size_t max_levels) {
  std::vector<RecordRow> rows;
  for (std::size_t n : dimensions) {
    RecordRow row{best_chain(n, table, max_levels), {}};
    auto compare = [&](std::string name, std::string source, Count reference) {
      const Count total = row.best.total;
      row.comparisons.push_back(Comparison{std::move(name), std::move(source), reference, total / reference,
                                           static_cast<double>(total) / static_cast<double>(reference),
                                           total > reference});
    };
    if (n >= 2 && (n & (n - 1)) == 0) {
      const auto m = static_cast<unsigned>(std::countr_zero(n));
      compare("BW" + std::to_string(n), "Barnes-Wall lattice", barnes_wall_kissing(m));
    }
    for (const auto& ref : reference_lattices())
      if (ref.dimension == n) compare(ref.name, ref.source, ref.kissing);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_record_report(std::ostream& out, const std::vector<RecordRow>& rows) {
  out << std::left << std::setw(6) << "n" << std::setw(18) << "chain" << std::right << std::setw(26)
      << "construction" << "  " << std::left << std::setw(10) << "lattice" << std::right << std::setw(26)
      << "kissing" << std::setw(14) << "ratio" << '\n';
  for (const auto& row : rows) {
    auto line = [&](const Comparison* c) {
      out << std::left << std::setw(6) << row.best.dimension << std::setw(18) << row.best.chain_string()
          << std::right << std::setw(26) << with_separators(row.best.total) << "  " << std::left << std::setw(10)
          << (c ? c->name : "-") << std::right << std::setw(26) << (c ? with_separators(c->reference) : "-");
      if (c) {
        std::ostringstream r;
        r << std::fixed << std::setprecision(2) << c->ratio << (c->exceeded ? " *" : "  ");
        out << std::setw(14) << r.str();
      }
      out << '\n';
    };
    if (row.comparisons.empty()) line(nullptr);
    for (const auto& c : row.comparisons) line(&c);
  }
  out << "* construction exceeds the lattice value\n";
}

void write_record_report_tsv(std::ostream& out, const std::vector<RecordRow>& rows) {
  out << "#n\tchain\ttotal\treference\treference_kissing\twhole_ratio\tratio\texceeded\n";
  for (const auto& row : rows) {
    if (row.comparisons.empty())
      out << row.best.dimension << '\t' << row.best.chain_string() << '\t' << to_string(row.best.total)
          << "\t-\t-\t-\t-\t-\n";
    for (const auto& c : row.comparisons) {
      std::ostringstream r;
      r << std::fixed << std::setprecision(6) << c.ratio;
      out << row.best.dimension << '\t' << row.best.chain_string() << '\t' << to_string(row.best.total) << '\t'
          << c.name << '\t' << to_string(c.reference) << '\t' << to_string(c.whole_ratio) << '\t' << r.str() << '\t'
          << c.exceeded << '\n';
    }
  }
}

}  // namespace kissing
