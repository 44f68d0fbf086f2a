#include "kissing/code.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "kissing/parallel.hpp"

namespace kissing {

Code::Code(std::size_t length, std::size_t declared_distance, std::vector<Codeword> words,
           std::optional<std::size_t> weight)
    : length_(length), declared_distance_(declared_distance), weight_(weight), words_(std::move(words)) {
  if (length == 0 || length > Codeword::kMaxLength)
    throw std::invalid_argument("code length must be in [1, 256]");
  if (declared_distance == 0 || declared_distance > length)
    throw std::invalid_argument("declared distance must be in [1, n], got d=" +
                                std::to_string(declared_distance) + " n=" + std::to_string(length));
  if (weight && *weight > length) throw std::invalid_argument("weight exceeds code length");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i].length() != length)
      throw std::invalid_argument("word " + std::to_string(i) + " has length " +
                                  std::to_string(words_[i].length()) + ", expected " + std::to_string(length));
}

Code Code::with_declared_distance(std::size_t d) const { return Code(length_, d, words_, weight_); }

ConstantWeightCode::ConstantWeightCode(std::size_t length, std::size_t declared_distance, std::size_t weight,
                                       std::vector<Codeword> words)
    : Code(length, declared_distance, std::move(words), weight) {}

ConstantWeightCode::ConstantWeightCode(const Code& code) : Code(code) {
  if (!weight_) throw std::invalid_argument("code has no declared constant weight");
}

std::optional<std::pair<std::size_t, std::size_t>> first_close_pair(const std::vector<Codeword>& words,
                                                                    std::size_t bound, unsigned threads) {
  const std::size_t m = words.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  // Rows are dealt round-robin; a worker stops once its row exceeds the best
  // row found so far, so the minimum is found independent of scheduling.
  std::atomic<std::size_t> best_row{kNone};
  std::vector<std::pair<std::size_t, std::size_t>> found;
  std::mutex found_mutex;
  run_workers(std::max(1u, threads), [&](unsigned worker, unsigned count) {
    for (std::size_t i = worker; i + 1 < m; i += count) {
      if (i > best_row.load(std::memory_order_relaxed)) return;
      for (std::size_t j = i + 1; j < m; ++j) {
        if (distance_unchecked(words[i], words[j]) < bound) {
          std::lock_guard lock(found_mutex);
          found.emplace_back(i, j);
          std::size_t cur = best_row.load();
          while (i < cur && !best_row.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  });
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end());
}

std::optional<std::size_t> min_distance(const Code& code, unsigned threads) {
  const auto& words = code.words();
  if (words.empty()) throw std::invalid_argument("min_distance of an empty code");
  if (words.size() == 1) return std::nullopt;
  const std::size_t m = words.size();
  std::vector<std::size_t> local(std::max(1u, threads), std::numeric_limits<std::size_t>::max());
  run_workers(std::max(1u, threads), [&](unsigned worker, unsigned count) {
    std::size_t best = local[worker];
    for (std::size_t i = worker; i + 1 < m; i += count) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::size_t d = distance_unchecked(words[i], words[j]);
        if (d < best) best = d;
      }
      if (best == 0) break;
    }
    local[worker] = best;
  });
  return *std::min_element(local.begin(), local.end());
}

std::string Violation::describe(const Code& code) const {
  std::ostringstream out;
  const auto& words = code.words();
  switch (kind) {
    case Kind::WrongLength:
      out << "word " << first << " has length " << value << ", expected " << code.length();
      break;
    case Kind::WrongWeight:
      out << "word " << first << " (" << words[first].to_string() << ") has weight " << value
          << ", expected " << code.weight().value_or(0);
      break;
    case Kind::Duplicate:
      out << "words " << first << " and " << second << " are duplicates (" << words[first].to_string() << ")";
      break;
    case Kind::DistanceTooSmall:
      out << "words " << first << " (" << words[first].to_string() << ") and " << second << " ("
          << words[second].to_string() << ") are at distance " << value << " < " << code.declared_distance();
      break;
  }
  return out.str();
}

CodeVerification verify(const Code& code, unsigned threads) {
  CodeVerification result;
  const auto& words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].length() != code.length()) {
      result.violation = Violation{Violation::Kind::WrongLength, i, i, words[i].length()};
      return result;
    }
    if (code.weight() && words[i].weight() != *code.weight()) {
      result.violation = Violation{Violation::Kind::WrongWeight, i, i, words[i].weight()};
      return result;
    }
  }
  if (auto pair = first_close_pair(words, code.declared_distance(), threads)) {
    const std::size_t d = distance_unchecked(words[pair->first], words[pair->second]);
    result.violation = Violation{d == 0 ? Violation::Kind::Duplicate : Violation::Kind::DistanceTooSmall,
                                 pair->first, pair->second, d};
    return result;
  }
  CodeCertificate cert;
  cert.size = words.size();
  if (words.size() >= 2) cert.min_distance = min_distance(code, threads);
  result.certificate = cert;
  return result;
}

}  // namespace kissing
