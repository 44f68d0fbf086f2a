#include "kissing/constructors.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "kissing/text_format.hpp"

namespace kissing {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

ConstantWeightCode complement(const ConstantWeightCode& code) {
  std::vector<Codeword> words;
  words.reserve(code.size());
  for (const auto& w : code.words()) words.push_back(w.complemented());
  return ConstantWeightCode(code.length(), code.declared_distance(), code.length() - code.weight(), std::move(words));
}

ConstantWeightCode shorten(const ConstantWeightCode& code, std::size_t position) {
  const std::size_t n = code.length();
  if (position >= n)
    throw std::out_of_range("shorten: position " + std::to_string(position) + " outside [0, " + std::to_string(n) + ")");
  if (n < 2) throw std::invalid_argument("shorten: cannot shorten a length-1 code");
  if (code.weight() > n - 1) throw std::invalid_argument("shorten: weight would exceed the new length");
  std::vector<Codeword> words;
  for (const auto& w : code.words()) {
    if (w.test(position)) continue;
    Codeword s(n - 1);
    w.for_each_set([&](std::size_t p) { s.set(p < position ? p : p - 1); });
    words.push_back(s);
  }
  return ConstantWeightCode(n - 1, std::min(code.declared_distance(), n - 1), code.weight(), std::move(words));
}

ConstantWeightCode weight_slice(const Code& code, std::size_t w) {
  std::vector<Codeword> words;
  for (const auto& word : code.words())
    if (word.weight() == w) words.push_back(word);
  return ConstantWeightCode(code.length(), code.declared_distance(), w, std::move(words));
}

namespace {

void check_materializable(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
  if (n > kMaxEnumerationLength)
    throw std::length_error(std::string(what) + ": n=" + std::to_string(n) + " exceeds the enumeration cap of " +
                            std::to_string(kMaxEnumerationLength));
}

// Word whose bit string, read with position 0 most significant, is `value`.
Codeword word_from_value(std::size_t n, std::uint64_t value) {
  Codeword w(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((value >> (n - 1 - i)) & 1u) w.set(i);
  return w;
}

}  // namespace

Code even_weight_code(std::size_t n) {
  check_materializable(n, "even_weight_code");
  std::vector<Codeword> words;
  words.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    if (std::popcount(v) % 2 == 0) words.push_back(word_from_value(n, v));
  return Code(n, std::min<std::size_t>(2, n), std::move(words));
}

Code full_code(std::size_t n) {
  check_materializable(n, "full_code");
  std::vector<Codeword> words;
  words.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) words.push_back(word_from_value(n, v));
  return Code(n, 1, std::move(words));
}

ConstantWeightCode singleton_allones(std::size_t n, std::size_t support) {
  if (support == 0 || support > n) throw std::invalid_argument("singleton_allones requires 1 <= support <= n");
  return ConstantWeightCode(n, support, support, {Codeword::leading_ones(n, support)});
}

std::size_t gf2_rank(std::vector<Codeword> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().length();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

GeneratorMatrix::GeneratorMatrix(std::size_t n, std::vector<Codeword> rows) : n_(n), rows_(std::move(rows)) {
  if (n == 0 || n > Codeword::kMaxLength) throw std::invalid_argument("generator matrix length must be in [1, 256]");
  for (const auto& r : rows_)
    if (r.length() != n) throw std::invalid_argument("generator row length mismatch");
  if (gf2_rank(rows_) != rows_.size())
    throw std::invalid_argument("generator matrix is rank deficient (rank " + std::to_string(gf2_rank(rows_)) +
                                " < k=" + std::to_string(rows_.size()) + ")");
}

Code enumerate_linear(const GeneratorMatrix& g, std::size_t declared_distance) {
  const std::size_t k = g.dimension();
  if (k > kMaxEnumerationLength)
    throw std::length_error("enumerate_linear: k=" + std::to_string(k) + " exceeds the enumeration cap of " +
                            std::to_string(kMaxEnumerationLength));
  std::vector<Codeword> words;
  words.reserve(std::size_t{1} << k);
  Codeword cur(g.length());
  words.push_back(cur);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    cur ^= g.rows()[static_cast<std::size_t>(std::countr_zero(i))];
    words.push_back(cur);
  }
  return Code(g.length(), declared_distance, std::move(words));
}

GeneratorMatrix read_generator_matrix(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw FormatError(reader.line_number(), "missing genmatrix header");
  const Header header = parse_header(line, reader.line_number());
  const std::size_t header_line = reader.line_number();
  if (header.tag != "genmatrix") throw FormatError(header_line, "expected 'genmatrix' header");
  const auto n = header.get_uint("n", header_line);
  const auto k = header.get_uint("k", header_line);
  std::vector<Codeword> rows;
  while (reader.next(line)) {
    if (line.size() != n) throw FormatError(reader.line_number(), "row length differs from n");
    try {
      rows.push_back(Codeword::from_string(line));
    } catch (const std::invalid_argument& e) {
      throw FormatError(reader.line_number(), e.what());
    }
  }
  if (rows.size() != k) throw FormatError(reader.line_number(), "header declares k=" + std::to_string(k) + " rows");
  try {
    return GeneratorMatrix(n, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw FormatError(header_line, e.what());
  }
}

GeneratorMatrix read_generator_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator matrix " + path.string());
  return read_generator_matrix(in);
}

void write_generator_matrix(std::ostream& out, const GeneratorMatrix& g) {
  out << "genmatrix n=" << g.length() << " k=" << g.dimension() << '\n';
  for (const auto& r : g.rows()) out << r.to_string() << '\n';
}

}  // namespace kissing
