#include "kissing/configuration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "kissing/code_io.hpp"
#include "kissing/parallel.hpp"
#include "kissing/text_format.hpp"

namespace kissing {

// ---------------------------------------------------------------------------
// Chain

std::optional<ChainViolation> find_chain_violation(std::size_t n, const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) return ChainViolation(0, "support chain is empty");
  if (n == 0 || n > Codeword::kMaxLength) return ChainViolation(0, "dimension must be in [1, 256]");
  if (sizes[0] > n)
    return ChainViolation(0, "n0=" + std::to_string(sizes[0]) + " exceeds the dimension n=" + std::to_string(n));
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    if (sizes[k - 1] < 4 * sizes[k])
      return ChainViolation(k, "level " + std::to_string(k) + ": n" + std::to_string(k - 1) + "=" +
                                   std::to_string(sizes[k - 1]) + " < 4*n" + std::to_string(k) + "=" +
                                   std::to_string(4 * sizes[k]));
  }
  if (sizes.back() < 1)
    return ChainViolation(sizes.size() - 1, "level " + std::to_string(sizes.size() - 1) + ": support size must be >= 1");
  return std::nullopt;
}

SupportChain SupportChain::validate(std::size_t n, std::vector<std::size_t> sizes) {
  if (auto v = find_chain_violation(n, sizes)) throw *v;
  return SupportChain(n, std::move(sizes));
}

SupportChain SupportChain::unchecked(std::size_t n, std::vector<std::size_t> sizes) {
  if (sizes.empty()) throw ChainViolation(0, "support chain is empty");
  for (auto k : sizes)
    if (k == 0 || k > n) throw ChainViolation(0, "support sizes must lie in [1, n]");
  return SupportChain(n, std::move(sizes));
}

std::string SupportChain::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < sizes_.size(); ++i) s += (i ? "," : "") + std::to_string(sizes_[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------
// Configuration

KissingConfiguration::KissingConfiguration(SupportChain chain, std::vector<Level> levels)
    : chain_(std::move(chain)), levels_(std::move(levels)) {
  if (levels_.size() != chain_.levels()) throw std::invalid_argument("one level per chain entry is required");
  offsets_.push_back(0);
  for (const auto& level : levels_) {
    const auto product = checked_mul(level.support_code.size(), level.sign_code.size());
    const auto next = product ? checked_add(offsets_.back(), *product) : std::nullopt;
    if (!next || *next > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("materialized configuration exceeds 2^64 centers");
    offsets_.push_back(static_cast<std::uint64_t>(*next));
  }
}

Count KissingConfiguration::level_count(std::size_t k) const { return offsets_[k + 1] - offsets_[k]; }

Center KissingConfiguration::center(std::uint64_t i) const {
  if (i >= offsets_.back()) throw std::out_of_range("center index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
  const std::size_t k = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  const std::uint64_t r = i - offsets_[k];
  const auto& level = levels_[k];
  const std::uint64_t signs = level.sign_code.size();
  return Center{k, level.support_code.words()[r / signs], level.sign_code.words()[r % signs]};
}

KissingConfiguration build_configuration(const SupportChain& chain, std::vector<LevelCodes> codes,
                                         const BuildOptions& options) {
  if (codes.size() != chain.levels())
    throw std::invalid_argument("chain has " + std::to_string(chain.levels()) + " levels but " +
                                std::to_string(codes.size()) + " code pairs were supplied");
  const std::size_t n = chain.dimension();
  const std::size_t n0 = chain.top();
  std::vector<Level> levels;
  for (std::size_t k = 0; k < codes.size(); ++k) {
    const std::size_t support = chain.sizes()[k];
    const std::string where = "level " + std::to_string(k) + ": ";
    auto& lc = codes[k];
    if (lc.support.length() != n)
      throw LevelError(k, where + "support code length " + std::to_string(lc.support.length()) + " != n=" + std::to_string(n));
    if (lc.support.weight() != support)
      throw LevelError(k, where + "support code weight " + std::to_string(lc.support.weight()) + " != " + std::to_string(support));
    if (lc.signs.length() != support)
      throw LevelError(k, where + "sign code length " + std::to_string(lc.signs.length()) + " != " + std::to_string(support));
    for (std::size_t i = 0; i < lc.support.size(); ++i)
      if (lc.support.words()[i].weight() != support)
        throw LevelError(k, where + "support word " + std::to_string(i) + " has weight " +
                                std::to_string(lc.support.words()[i].weight()));
    if (!options.skip_code_verification) {
      if (lc.support.declared_distance() < support)
        throw LevelError(k, where + "support code declares d=" + std::to_string(lc.support.declared_distance()) +
                                " < " + std::to_string(support));
      if (lc.signs.declared_distance() < sign_distance_for(support))
        throw LevelError(k, where + "sign code declares d=" + std::to_string(lc.signs.declared_distance()) + " < " +
                                std::to_string(sign_distance_for(support)));
      if (auto v = verify(lc.support, options.threads); !v.ok())
        throw LevelError(k, where + "support code: " + v.violation->describe(lc.support));
      if (auto v = verify(lc.signs, options.threads); !v.ok())
        throw LevelError(k, where + "sign code: " + v.violation->describe(lc.signs));
    }
    const std::uint64_t g = std::gcd<std::uint64_t>(n0, support);
    levels.push_back(Level{k, support, Rational{n0 / g, support / g}, std::move(lc.support), std::move(lc.signs)});
  }
  return KissingConfiguration(chain, std::move(levels));
}

Count count(const KissingConfiguration& config) {
  std::vector<TableTerm> terms;
  for (const auto& level : config.levels()) terms.push_back({level.support_code.size(), level.sign_code.size()});
  return count(terms);
}

Count count(const std::vector<TableTerm>& terms) {
  Count total = 0;
  for (const auto& t : terms) {
    const auto product = checked_mul(t.supports, t.signs);
    if (!product) throw std::overflow_error("center count overflows 128 bits");
    const auto sum = checked_add(total, *product);
    if (!sum) throw std::overflow_error("center count overflows 128 bits");
    total = *sum;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Pairwise geometry

namespace {

// Support mask plus the mask of support positions carrying a minus sign.
struct PackedCenter {
  Codeword::Limbs support{};
  Codeword::Limbs negative{};
  std::uint32_t size = 0;
};

PackedCenter pack(const Center& c) {
  PackedCenter p;
  p.support = c.support.limbs();
  std::size_t j = 0;
  c.support.for_each_set([&](std::size_t pos) {
    if (c.signs.test(j)) p.negative[pos >> 6] |= std::uint64_t{1} << (pos & 63);
    ++j;
  });
  p.size = static_cast<std::uint32_t>(j);
  return p;
}

inline std::int64_t overlap(const PackedCenter& a, const PackedCenter& b) {
  std::int64_t common = 0, disagree = 0;
  for (std::size_t i = 0; i < Codeword::kLimbs; ++i) {
    const std::uint64_t both = a.support[i] & b.support[i];
    common += std::popcount(both);
    disagree += std::popcount((a.negative[i] ^ b.negative[i]) & both);
  }
  return common - 2 * disagree;
}

inline bool same_center(const PackedCenter& a, const PackedCenter& b) {
  return a.support == b.support && a.negative == b.negative;
}

std::uint64_t pairs_before(std::uint64_t total, std::uint64_t a, std::uint64_t b) {
  // Pairs (i, j), i < j, lexicographically before (a, b), plus (a, b) itself.
  const unsigned __int128 rows = static_cast<unsigned __int128>(a) * total - static_cast<unsigned __int128>(a) * (a + 1) / 2;
  return static_cast<std::uint64_t>(rows + (b - a));
}

}  // namespace

std::int64_t signed_overlap(const Center& u, const Center& v) {
  if (u.support.length() != v.support.length()) throw std::invalid_argument("centers live in different dimensions");
  if (u.signs.length() != u.support.weight() || v.signs.length() != v.support.weight())
    throw std::invalid_argument("sign word length differs from support weight");
  return overlap(pack(u), pack(v));
}

std::string PairViolation::describe(const KissingConfiguration& config) const {
  const Center a = config.center(first), b = config.center(second);
  std::ostringstream out;
  out << (duplicate ? "duplicate centers " : "centers too close: ") << first << " (level " << a.level
      << ", support " << a.support.to_string() << ", signs " << a.signs.to_string() << ") and " << second
      << " (level " << b.level << ", support " << b.support.to_string() << ", signs " << b.signs.to_string()
      << "), signed overlap " << overlap << ", 4s^2=" << 4 * overlap * overlap << " > "
      << config.levels()[a.level].support_size * config.levels()[b.level].support_size;
  return out.str();
}

PairScanResult verify_exhaustive(const KissingConfiguration& config, unsigned threads) {
  const std::uint64_t total = config.offsets().back();
  std::vector<PackedCenter> centers;
  centers.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) centers.push_back(pack(config.center(i)));

  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best_row{kNone};
  std::vector<PairViolation> found;
  std::mutex found_mutex;
  run_workers(std::max(1u, threads), [&](unsigned worker, unsigned workers) {
    for (std::uint64_t i = worker; i + 1 < total; i += workers) {
      if (i > best_row.load(std::memory_order_relaxed)) return;
      const PackedCenter& a = centers[i];
      for (std::uint64_t j = i + 1; j < total; ++j) {
        const PackedCenter& b = centers[j];
        const std::int64_t s = overlap(a, b);
        if (!pair_separated(s, a.size, b.size) || same_center(a, b)) {
          std::lock_guard lock(found_mutex);
          found.push_back(PairViolation{i, j, s, same_center(a, b)});
          std::uint64_t cur = best_row.load();
          while (i < cur && !best_row.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  });

  PairScanResult result;
  if (found.empty()) {
    result.pairs_checked = total < 2 ? 0 : total * (total - 1) / 2;
    return result;
  }
  const auto best = *std::min_element(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  result.violation = best;
  result.pairs_checked = pairs_before(total, best.first, best.second);
  return result;
}

PairScanResult verify_sampled(const KissingConfiguration& config, std::uint64_t pairs, std::uint64_t seed) {
  const std::uint64_t total = config.offsets().back();
  PairScanResult result;
  if (total < 2) return result;
  std::mt19937_64 rng(seed);
  // Unbiased draw in [0, bound) by rejection; portable across standard libraries.
  auto draw = [&](std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
  };
  for (std::uint64_t k = 0; k < pairs; ++k) {
    std::uint64_t a = draw(total), b = draw(total - 1);
    if (b >= a) ++b;
    if (a > b) std::swap(a, b);
    const PackedCenter pa = pack(config.center(a)), pb = pack(config.center(b));
    const std::int64_t s = overlap(pa, pb);
    ++result.pairs_checked;
    if (!pair_separated(s, pa.size, pb.size) || same_center(pa, pb)) {
      result.violation = PairViolation{a, b, s, same_center(pa, pb)};
      return result;
    }
  }
  return result;
}

StructuralResult verify_structural(const KissingConfiguration& config, unsigned threads) {
  using Component = StructuralFailure::Component;
  StructuralResult result;
  const auto& chain = config.chain();
  if (auto v = find_chain_violation(chain.dimension(), chain.sizes())) {
    result.failure = StructuralFailure{Component::Chain, v->level(), v->what()};
    return result;
  }
  for (const auto& level : config.levels()) {
    const std::size_t k = level.support_size;
    const std::string where = "level " + std::to_string(level.index) + " ";
    if (level.support_code.length() != chain.dimension() || level.support_code.weight() != k) {
      result.failure = StructuralFailure{Component::SupportCode, level.index, where + "support code has the wrong shape"};
      return result;
    }
    const Code supports = level.support_code.with_declared_distance(k);
    if (auto v = verify(supports, threads); !v.ok()) {
      result.failure = StructuralFailure{Component::SupportCode, level.index,
                                         where + "support code is not a C(n," + std::to_string(k) + "," +
                                             std::to_string(k) + "): " + v.violation->describe(supports)};
      return result;
    }
    if (level.sign_code.length() != k) {
      result.failure = StructuralFailure{Component::SignCode, level.index, where + "sign code has the wrong length"};
      return result;
    }
    const Code signs = level.sign_code.with_declared_distance(sign_distance_for(k));
    if (auto v = verify(signs, threads); !v.ok()) {
      result.failure = StructuralFailure{Component::SignCode, level.index,
                                         where + "sign code is not a C(" + std::to_string(k) + "," +
                                             std::to_string(sign_distance_for(k)) + "): " + v.violation->describe(signs)};
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Angles

double CosineBound::cosine() const {
  return static_cast<double>(overlap) / std::sqrt(static_cast<double>(product));
}

double CosineBound::angle_degrees() const {
  const double c = std::clamp(cosine(), -1.0, 1.0);
  return std::acos(c) * 180.0 / 3.14159265358979323846;
}

int compare_cosines(const CosineBound& a, const CosineBound& b) {
  const bool pa = a.overlap > 0, pb = b.overlap > 0;
  if (pa != pb) return pa ? 1 : -1;
  using U = unsigned __int128;
  const U sa = static_cast<U>(a.overlap < 0 ? -a.overlap : a.overlap);
  const U sb = static_cast<U>(b.overlap < 0 ? -b.overlap : b.overlap);
  const U lhs = sa * sa * b.product, rhs = sb * sb * a.product;
  if (lhs == rhs) return 0;
  // Positive: larger magnitude wins. Non-positive: smaller magnitude wins.
  if (pa) return lhs > rhs ? 1 : -1;
  return lhs < rhs ? 1 : -1;
}

std::optional<CosineBound> min_angle(const std::vector<LevelDistances>& levels) {
  std::optional<CosineBound> best;
  auto offer = [&](std::int64_t s, std::uint64_t product) {
    const CosineBound c{s, product};
    if (!best || compare_cosines(c, *best) > 0) best = c;
  };
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& a = levels[i];
    if (a.empty) continue;
    const auto k = static_cast<std::int64_t>(a.support_size);
    const auto kk = static_cast<std::uint64_t>(k * k);
    if (a.sign_distance) offer(k - 2 * static_cast<std::int64_t>(*a.sign_distance), kk);
    if (a.support_distance) offer(k - static_cast<std::int64_t>((*a.support_distance + 1) / 2), kk);
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      const auto& b = levels[j];
      if (b.empty) continue;
      offer(static_cast<std::int64_t>(std::min(a.support_size, b.support_size)),
            static_cast<std::uint64_t>(a.support_size) * b.support_size);
    }
  }
  return best;
}

std::optional<CosineBound> min_angle(const KissingConfiguration& config, unsigned threads) {
  std::vector<LevelDistances> params;
  for (const auto& level : config.levels()) {
    LevelDistances p{level.support_size, std::nullopt, std::nullopt, false};
    if (level.support_code.empty() || level.sign_code.empty()) {
      p.empty = true;
    } else {
      p.support_distance = min_distance(level.support_code, threads);
      p.sign_distance = min_distance(level.sign_code, threads);
    }
    params.push_back(p);
  }
  return min_angle(params);
}

// ---------------------------------------------------------------------------
// Export

std::vector<double> coordinates(const KissingConfiguration& config, const Center& c) {
  const auto& level = config.levels().at(c.level);
  const double a = std::sqrt(static_cast<double>(level.scale_squared.num) / static_cast<double>(level.scale_squared.den));
  std::vector<double> x(config.dimension(), 0.0);
  std::size_t j = 0;
  c.support.for_each_set([&](std::size_t pos) {
    x[pos] = c.signs.test(j) ? -a : a;
    ++j;
  });
  return x;
}

void export_centers(std::ostream& out, const KissingConfiguration& config, ExportFormat format, std::uint64_t cap) {
  const std::uint64_t total = config.offsets().back();
  if (total > cap)
    throw std::length_error("export: " + std::to_string(total) + " centers exceed the cap of " + std::to_string(cap));
  char buf[64];
  for (std::uint64_t i = 0; i < total; ++i) {
    const Center c = config.center(i);
    if (format == ExportFormat::Exact) {
      out << "center level=" << c.level << " support=" << c.support.to_string() << " signs=" << c.signs.to_string()
          << '\n';
    } else {
      const auto x = coordinates(config, c);
      for (std::size_t p = 0; p < x.size(); ++p) {
        std::snprintf(buf, sizeof buf, "%.17g", x[p]);
        out << (p ? " " : "") << buf;
      }
      out << '\n';
    }
  }
}

std::vector<Center> read_centers(std::istream& in) {
  LineReader reader(in);
  std::string line;
  std::vector<Center> centers;
  while (reader.next(line)) {
    const Header h = parse_header(line, reader.line_number());
    if (h.tag != "center") throw FormatError(reader.line_number(), "expected a 'center' line");
    try {
      centers.push_back(Center{static_cast<std::size_t>(h.get_uint("level", reader.line_number())),
                               Codeword::from_string(h.get("support", reader.line_number())),
                               Codeword::from_string(h.get("signs", reader.line_number()))});
    } catch (const std::invalid_argument& e) {
      throw FormatError(reader.line_number(), e.what());
    }
  }
  return centers;
}

// ---------------------------------------------------------------------------
// Manifest

ConfigManifest read_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw FormatError(reader.line_number(), "missing config header");
  const std::size_t header_line = reader.line_number();
  const Header header = parse_header(line, header_line);
  if (header.tag != "config") throw FormatError(header_line, "expected 'config' header");
  ConfigManifest m;
  m.dimension = header.get_uint("n", header_line);
  std::stringstream chain(header.get("chain", header_line));
  std::string item;
  while (std::getline(chain, item, ',')) m.chain.push_back(parse_uint(item, header_line, "chain entry"));
  if (m.chain.empty()) throw FormatError(header_line, "empty chain");
  m.support_files.resize(m.chain.size());
  m.sign_files.resize(m.chain.size());
  std::vector<bool> seen(m.chain.size(), false);
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };
  while (reader.next(line)) {
    auto tokens = split_ws(line);
    if (tokens.size() != 4 || tokens[0] != "level")
      throw FormatError(reader.line_number(), "expected 'level <k> support_file=<path> sign_file=<path>'");
    const auto k = parse_uint(tokens[1], reader.line_number(), "level index");
    if (k >= m.chain.size()) throw FormatError(reader.line_number(), "level index beyond the chain");
    if (seen[k]) throw FormatError(reader.line_number(), "level " + std::to_string(k) + " listed twice");
    seen[k] = true;
    const Header fields = parse_header("level " + tokens[2] + " " + tokens[3], reader.line_number());
    m.support_files[k] = resolve(fields.get("support_file", reader.line_number()));
    m.sign_files[k] = resolve(fields.get("sign_file", reader.line_number()));
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) throw FormatError(reader.line_number(), "level " + std::to_string(k) + " has no code files");
  return m;
}

ConfigManifest read_manifest_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path.string());
  try {
    return read_manifest(in, path.parent_path());
  } catch (const FormatError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_manifest(std::ostream& out, const ConfigManifest& m) {
  out << "config n=" << m.dimension << " chain=";
  for (std::size_t i = 0; i < m.chain.size(); ++i) out << (i ? "," : "") << m.chain[i];
  out << '\n';
  for (std::size_t k = 0; k < m.chain.size(); ++k)
    out << "level " << k << " support_file=" << m.support_files[k].generic_string()
        << " sign_file=" << m.sign_files[k].generic_string() << '\n';
}

KissingConfiguration load_configuration(const ConfigManifest& m, const BuildOptions& options) {
  SupportChain chain = options.skip_code_verification ? SupportChain::unchecked(m.dimension, m.chain)
                                                      : SupportChain::validate(m.dimension, m.chain);
  std::vector<LevelCodes> codes;
  for (std::size_t k = 0; k < m.chain.size(); ++k) {
    Code support = read_code_file(m.support_files[k]);
    if (!support.weight())
      throw LevelError(k, "level " + std::to_string(k) + ": support file " + m.support_files[k].string() +
                              " is not a constant-weight code (missing w=)");
    codes.push_back(LevelCodes{ConstantWeightCode(support), read_code_file(m.sign_files[k])});
  }
  return build_configuration(chain, std::move(codes), options);
}

}  // namespace kissing
