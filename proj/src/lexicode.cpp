#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <stdexcept>

#include "kissing/constructors.hpp"

namespace kissing {

namespace {

// Depth-first walk of the word space in scan order. A subtree is pruned when
// some accepted word lies within distance < d of every completion of the
// current prefix; every word in a pruned subtree would have been rejected by
// the plain greedy scan, so the accepted set is unchanged.
template <std::size_t L>
class GreedyScan {
public:
  using Word = std::array<std::uint64_t, L>;

  GreedyScan(std::size_t n, std::size_t d, std::optional<std::size_t> weight, ScanConvention convention)
      : n_(n), d_(d), weight_(weight) {
    positions_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      positions_[i] = convention.order == ScanOrder::Lex ? i : n - 1 - i;
    one_first_ = convention.direction == ScanDirection::Descending;
    decided_.assign(n + 1, Word{});
    undecided_.assign(n + 1, Word{});
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t p = positions_[j];
        auto& target = j < k ? decided_[k] : undecided_[k];
        target[p >> 6] |= std::uint64_t{1} << (p & 63);
      }
    }
  }

  std::vector<Word> run() {
    Word cur{};
    descend(cur, 0, weight_.value_or(0));
    return std::move(accepted_);
  }

private:
  static std::size_t popcount_and(const Word& a, const Word& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < L; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
  }

  static std::size_t popcount_xor_and(const Word& a, const Word& b, const Word& m) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < L; ++i) c += static_cast<std::size_t>(std::popcount((a[i] ^ b[i]) & m[i]));
    return c;
  }

  // Largest distance any completion of `cur` can reach from v, below d for
  // some accepted v means the whole subtree is rejected.
  bool doomed(const Word& cur, std::size_t depth, std::size_t ones_left) const {
    const Word& dec = decided_[depth];
    const Word& und = undecided_[depth];
    const std::size_t free = n_ - depth;
    for (auto it = accepted_.rbegin(); it != accepted_.rend(); ++it) {
      const std::size_t mism = popcount_xor_and(cur, *it, dec);
      std::size_t reach;
      if (weight_) {
        // Put x of the remaining ones on v's zeros: distance gain a - r + 2x.
        const std::size_t a = popcount_and(*it, und);
        const std::size_t x = std::min(ones_left, free - a);
        reach = mism + a + 2 * x - ones_left;
      } else {
        reach = mism + free;
      }
      if (reach < d_) return true;
    }
    return false;
  }

  void descend(Word& cur, std::size_t depth, std::size_t ones_left) {
    if (doomed(cur, depth, ones_left)) return;
    if (depth == n_) {
      accepted_.push_back(cur);
      return;
    }
    const std::size_t p = positions_[depth];
    const std::uint64_t bit = std::uint64_t{1} << (p & 63);
    const std::size_t free_after = n_ - depth - 1;
    for (int pass = 0; pass < 2; ++pass) {
      const bool one = (pass == 0) == one_first_;
      if (one) {
        if (weight_ && ones_left == 0) continue;
        cur[p >> 6] |= bit;
        descend(cur, depth + 1, weight_ ? ones_left - 1 : 0);
        cur[p >> 6] &= ~bit;
      } else {
        if (weight_ && ones_left > free_after) continue;
        descend(cur, depth + 1, ones_left);
      }
    }
  }

  std::size_t n_;
  std::size_t d_;
  std::optional<std::size_t> weight_;
  std::vector<std::size_t> positions_;
  bool one_first_ = false;
  std::vector<Word> decided_;
  std::vector<Word> undecided_;
  std::vector<Word> accepted_;
};

// Constant-weight scan with incremental bookkeeping. For an accepted word v
// and the current prefix, let `overlap` count v's ones under prefix ones and
// `missed` count v's ones under prefix zeros. Every completion stays within
// distance < d of v iff
//
//     2 * min(w - overlap, zeros_left + missed) < d,
//
// so a node only has to update the accepted words that carry a 1 at the
// position it decides. `close_` counts words meeting the first bound;
// `missed_hist_` buckets words by `missed` for the second.
class ConstantWeightScan {
public:
  ConstantWeightScan(std::size_t n, std::size_t d, std::size_t w, ScanConvention convention)
      : n_(n), d_(d), w_(w), cur_(n), by_position_(n), missed_hist_(w + 1, 0) {
    positions_.resize(n);
    for (std::size_t i = 0; i < n; ++i) positions_[i] = convention.order == ScanOrder::Lex ? i : n - 1 - i;
    one_first_ = convention.direction == ScanDirection::Descending;
    // 2 * (w - overlap) < d  <=>  overlap >= w - (d - 1) / 2
    close_from_ = static_cast<std::uint32_t>(w_ >= (d_ - 1) / 2 ? w_ - (d_ - 1) / 2 : 0);
  }

  std::vector<Codeword> run() {
    descend(0, w_, n_ - w_);
    return std::move(accepted_);
  }

private:
  bool close(std::uint32_t overlap) const { return overlap >= close_from_; }

  bool doomed(std::size_t zeros_left) const {
    if (close_count_ > 0) return true;
    // 2 * (zeros_left + missed) < d  <=>  missed <= (d - 1) / 2 - zeros_left
    const std::size_t reach = (d_ - 1) / 2;
    if (zeros_left > reach) return false;
    for (std::size_t m = 0; m <= reach - zeros_left && m <= w_; ++m)
      if (missed_hist_[m] != 0) return true;
    return false;
  }

  void accept() {
    const auto id = static_cast<std::uint32_t>(accepted_.size());
    accepted_.push_back(cur_);
    cur_.for_each_set([&](std::size_t p) { by_position_[p].push_back(id); });
    overlap_.push_back(static_cast<std::uint32_t>(w_));
    missed_.push_back(0);
    ++missed_hist_[0];
    if (close(static_cast<std::uint32_t>(w_))) ++close_count_;
  }

  void place_one(std::size_t p, int delta) {
    // close(o) <=> o >= close_from_; only the step across the boundary matters.
    const std::uint32_t edge = delta > 0 ? close_from_ - 1 : close_from_;
    std::ptrdiff_t crossed = 0;
    for (auto id : by_position_[p]) {
      crossed += overlap_[id] == edge;
      overlap_[id] = static_cast<std::uint32_t>(static_cast<int>(overlap_[id]) + delta);
    }
    close_count_ = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(close_count_) + delta * crossed);
  }

  void place_zero(std::size_t p, int delta) {
    for (auto id : by_position_[p]) {
      --missed_hist_[missed_[id]];
      missed_[id] = static_cast<std::uint32_t>(static_cast<int>(missed_[id]) + delta);
      ++missed_hist_[missed_[id]];
    }
  }

  // Words accepted below a node carry that node's contributions already, so
  // the undo pass applies to them as well.
  void descend(std::size_t depth, std::size_t ones_left, std::size_t zeros_left) {
    if (doomed(zeros_left)) return;
    if (depth == n_) {
      accept();
      return;
    }
    const std::size_t p = positions_[depth];
    for (int pass = 0; pass < 2; ++pass) {
      const bool one = (pass == 0) == one_first_;
      if (one && ones_left > 0) {
        cur_.set(p);
        place_one(p, +1);
        descend(depth + 1, ones_left - 1, zeros_left);
        place_one(p, -1);
        cur_.set(p, false);
      } else if (!one && zeros_left > 0) {
        place_zero(p, +1);
        descend(depth + 1, ones_left, zeros_left - 1);
        place_zero(p, -1);
      }
    }
  }

  std::size_t n_, d_, w_;
  std::vector<std::size_t> positions_;
  bool one_first_ = false;
  Codeword cur_;
  std::vector<Codeword> accepted_;
  std::vector<std::vector<std::uint32_t>> by_position_;
  std::vector<std::uint32_t> overlap_;
  std::vector<std::uint32_t> missed_;
  std::vector<std::size_t> missed_hist_;
  std::uint32_t close_from_ = 0;
  std::size_t close_count_ = 0;
};

template <std::size_t L>
std::vector<Codeword> scan_with(std::size_t n, std::size_t d, std::optional<std::size_t> w, ScanConvention conv) {
  GreedyScan<L> scan(n, d, w, conv);
  std::vector<Codeword> out;
  for (const auto& word : scan.run()) {
    Codeword::Limbs limbs{};
    std::copy(word.begin(), word.end(), limbs.begin());
    out.push_back(Codeword::from_limbs(n, limbs));
  }
  return out;
}

std::vector<Codeword> greedy_scan(std::size_t n, std::size_t d, std::optional<std::size_t> w, ScanConvention conv) {
  if (n <= 64) return scan_with<1>(n, d, w, conv);
  if (n <= 128) return scan_with<2>(n, d, w, conv);
  return scan_with<4>(n, d, w, conv);
}

}  // namespace

std::string to_string(const ScanConvention& c) {
  std::string s = c.order == ScanOrder::Lex ? "lex" : "colex";
  s += c.direction == ScanDirection::Ascending ? "/asc" : "/desc";
  return s;
}

Code lexicode(std::size_t n, std::size_t d, ScanConvention convention) {
  if (n == 0 || d == 0 || d > n) throw std::invalid_argument("lexicode requires 1 <= d <= n");
  if (n > kMaxEnumerationLength)
    throw std::length_error("lexicode: n=" + std::to_string(n) + " exceeds the enumeration cap of " +
                            std::to_string(kMaxEnumerationLength));
  return Code(n, d, greedy_scan(n, d, std::nullopt, convention));
}

ConstantWeightCode cw_lexicode(std::size_t n, std::size_t d, std::size_t w, ScanConvention convention) {
  if (n == 0 || n > Codeword::kMaxLength) throw std::invalid_argument("cw_lexicode: n must be in [1, 256]");
  if (d == 0 || d > n) throw std::invalid_argument("cw_lexicode requires 1 <= d <= n");
  if (w > n) throw std::invalid_argument("cw_lexicode requires w <= n");
  if (binomial(n, w) > kMaxCombinations)
    throw std::length_error("cw_lexicode: binom(" + std::to_string(n) + "," + std::to_string(w) +
                            ") exceeds the enumeration cap of " + std::to_string(kMaxCombinations));
  // Complementation reverses the scan order and preserves distances, so a
  // heavy-weight scan is run as the light-weight scan in the opposite direction.
  if (2 * w > n) {
    ScanConvention flipped = convention;
    flipped.direction =
        convention.direction == ScanDirection::Ascending ? ScanDirection::Descending : ScanDirection::Ascending;
    std::vector<Codeword> words = ConstantWeightScan(n, d, n - w, flipped).run();
    for (auto& word : words) word = word.complemented();
    return ConstantWeightCode(n, d, w, std::move(words));
  }
  if (w == 0) return ConstantWeightCode(n, d, 0, {Codeword(n)});
  return ConstantWeightCode(n, d, w, ConstantWeightScan(n, d, w, convention).run());
}

}  // namespace kissing
