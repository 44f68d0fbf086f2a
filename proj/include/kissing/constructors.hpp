#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kissing/code.hpp"

namespace kissing {

// Enumeration caps. Every construction that materializes a word space checks
// these up front and throws std::length_error.
inline constexpr std::size_t kMaxEnumerationLength = 28;           // 2^28 words
inline constexpr std::uint64_t kMaxCombinations = 100'000'000;     // binom(n, w)

/// binom(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Which position is most significant during a greedy scan.
enum class ScanOrder {
  Lex,    // position 0 most significant
  Colex,  // position n-1 most significant
};
enum class ScanDirection { Ascending, Descending };

struct ScanConvention {
  ScanOrder order = ScanOrder::Lex;
  ScanDirection direction = ScanDirection::Ascending;
};

std::string to_string(const ScanConvention& convention);

/// Greedy lexicode: scan all length-n words in the given order and accept a
/// word iff it is at distance >= d from everything accepted so far.
/// Requires n <= kMaxEnumerationLength.
Code lexicode(std::size_t n, std::size_t d, ScanConvention convention = {});

/// Constant-weight lexicode over the weight-w words of length n.
/// Requires binom(n, w) <= kMaxCombinations.
ConstantWeightCode cw_lexicode(std::size_t n, std::size_t d, std::size_t w, ScanConvention convention = {});

/// Replaces every word by its complement: C(n, d, w) -> C(n, d, n - w).
ConstantWeightCode complement(const ConstantWeightCode& code);

/// Keeps the words with a 0 at `position` and deletes that coordinate.
/// The declared distance is clamped to the new length.
ConstantWeightCode shorten(const ConstantWeightCode& code, std::size_t position);

/// Words of weight exactly w, inheriting the parent's declared distance.
ConstantWeightCode weight_slice(const Code& code, std::size_t w);

/// All 2^(n-1) even-weight words, d = 2.
Code even_weight_code(std::size_t n);
/// All 2^n words, d = 1.
Code full_code(std::size_t n);
/// The single word 1^support 0^(n-support) as a C(n, support, support).
ConstantWeightCode singleton_allones(std::size_t n, std::size_t support);

/// k x n generator matrix over GF(2); rows must be linearly independent.
class GeneratorMatrix {
public:
  GeneratorMatrix(std::size_t n, std::vector<Codeword> rows);

  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Codeword>& rows() const noexcept { return rows_; }

private:
  std::size_t n_;
  std::vector<Codeword> rows_;
};

/// GF(2) rank of a set of same-length words.
std::size_t gf2_rank(std::vector<Codeword> rows);

/// All 2^k codewords in Gray-code order (word i differs from word i-1 by the
/// row indexed by the lowest set bit of i). Requires k <= kMaxEnumerationLength.
Code enumerate_linear(const GeneratorMatrix& g, std::size_t declared_distance);

/// Generator matrix file: header `genmatrix n=<n> k=<k>` then k bit rows.
GeneratorMatrix read_generator_matrix(std::istream& in);
GeneratorMatrix read_generator_matrix_file(const std::filesystem::path& path);
void write_generator_matrix(std::ostream& out, const GeneratorMatrix& g);

}  // namespace kissing
