#include "kissing/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "kissing/constructors.hpp"

namespace kissing {

namespace {

using WordSet = std::unordered_set<Codeword, CodewordHash>;

void check_degree(const PermutationGroup& group, const Codeword& word) {
  if (word.length() != group.degree())
    throw std::invalid_argument("word length " + std::to_string(word.length()) + " differs from group degree " +
                                std::to_string(group.degree()));
}

// Breadth-first closure. When `stop_below` is given, gives up (returns
// false) as soon as a member smaller than it appears.
bool close_orbit(const PermutationGroup& group, const Codeword& seed, std::vector<Codeword>& members,
                 const Codeword* stop_below) {
  WordSet seen{seed};
  members.assign(1, seed);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& g : group.generators()) {
      Codeword image = g.apply(members[head]);
      if (stop_below && image < *stop_below) return false;
      if (seen.insert(image).second) members.push_back(image);
    }
  }
  return true;
}

std::optional<std::size_t> distance_to_members(const Codeword& rep, const std::vector<Codeword>& members) {
  std::optional<std::size_t> best;
  for (const auto& m : members) {
    if (m == rep) continue;
    const std::size_t dist = distance_unchecked(rep, m);
    if (!best || dist < *best) best = dist;
  }
  return best;
}

// Weight-w words of length n in ascending order. Position p carries
// significance n-1-p, so ascending order is colex order on significances.
class ConstantWeightWalk {
public:
  ConstantWeightWalk(std::size_t n, std::size_t w) : n_(n), sig_(w) {
    std::iota(sig_.begin(), sig_.end(), std::size_t{0});
  }
  Codeword word() const {
    Codeword c(n_);
    for (auto s : sig_) c.set(n_ - 1 - s);
    return c;
  }
  bool advance() {
    const std::size_t w = sig_.size();
    for (std::size_t j = 0; j < w; ++j) {
      const std::size_t limit = j + 1 < w ? sig_[j + 1] : n_;
      if (sig_[j] + 1 < limit) {
        ++sig_[j];
        for (std::size_t i = 0; i < j; ++i) sig_[i] = i;
        return true;
      }
    }
    return false;
  }

private:
  std::size_t n_;
  std::vector<std::size_t> sig_;
};

struct Candidate {
  std::vector<Codeword> members;  // sorted
  std::size_t record;             // index into inventory
};

// Orbits A and B (both group-invariant) are compatible iff the
// representative of A is at distance >= d from every member of B.
bool compatible(const Codeword& rep_a, const std::vector<Codeword>& members_b, std::size_t d) {
  for (const auto& m : members_b)
    if (distance_unchecked(rep_a, m) < d) return false;
  return true;
}

std::vector<std::size_t> exact_union(const std::vector<Candidate>& cands, const std::vector<OrbitRecord>& inventory,
                                     std::size_t d) {
  const std::size_t m = cands.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, true));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      ok[i][j] = ok[j][i] = compatible(inventory[cands[i].record].representative, cands[j].members, d);

  std::vector<std::size_t> best, cur;
  std::size_t best_weight = 0;
  // Plain branch and bound; candidates are visited in index order so the
  // first optimum found is the lexicographically smallest index set.
  auto rec = [&](auto&& self, std::vector<std::size_t>& open, std::size_t weight) -> void {
    std::size_t bound = weight;
    for (auto i : open) bound += cands[i].members.size();
    if (bound < best_weight || (bound == best_weight && !best.empty())) return;
    if (open.empty()) {
      if (weight > best_weight || best.empty()) {
        best_weight = weight;
        best = cur;
      }
      return;
    }
    for (std::size_t k = 0; k < open.size(); ++k) {
      const std::size_t v = open[k];
      std::vector<std::size_t> next;
      for (std::size_t t = k + 1; t < open.size(); ++t)
        if (ok[v][open[t]]) next.push_back(open[t]);
      cur.push_back(v);
      self(self, next, weight + cands[v].members.size());
      cur.pop_back();
      std::size_t rest = weight;
      for (std::size_t t = k + 1; t < open.size(); ++t) rest += cands[open[t]].members.size();
      if (rest <= best_weight) break;
    }
  };
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  rec(rec, all, 0);
  return best;
}

}  // namespace

std::vector<Codeword> orbit(const PermutationGroup& group, const Codeword& seed) {
  check_degree(group, seed);
  std::vector<Codeword> members;
  close_orbit(group, seed, members, nullptr);
  std::sort(members.begin(), members.end());
  return members;
}

std::uint64_t rank_constant_weight(const Codeword& word) {
  const std::size_t n = word.length();
  std::vector<std::size_t> sig;
  word.for_each_set([&](std::size_t p) { sig.push_back(n - 1 - p); });
  std::sort(sig.begin(), sig.end());
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sig.size(); ++i) r += binomial(sig[i], i + 1);
  return r;
}

OrbitSearchResult orbit_code_search(const PermutationGroup& group, std::size_t d, std::size_t w,
                                    const OrbitSearchOptions& options) {
  const std::size_t n = group.degree();
  if (n > Codeword::kMaxLength) throw std::invalid_argument("group degree exceeds the 256-position word limit");
  if (d == 0 || d > n) throw std::invalid_argument("orbit_code_search requires 1 <= d <= degree");
  if (w > n) throw std::invalid_argument("orbit_code_search requires w <= degree");

  std::vector<OrbitRecord> inventory;
  std::vector<Candidate> cands;
  std::size_t enumerated = 0;
  bool streamed = false;

  auto record = [&](const Codeword& rep, std::vector<Codeword> members) {
    ++enumerated;
    std::sort(members.begin(), members.end());
    const auto internal = distance_to_members(rep, members);
    if (internal && *internal < d) return;
    inventory.push_back(OrbitRecord{rep, members.size(), internal, false});
    cands.push_back(Candidate{std::move(members), inventory.size() - 1});
  };

  std::vector<Codeword> members;
  if (!options.seeds.empty()) {
    WordSet covered;
    for (const auto& seed : options.seeds) {
      check_degree(group, seed);
      if (seed.weight() != w) throw std::invalid_argument("seed " + seed.to_string() + " does not have weight " + std::to_string(w));
      if (covered.count(seed)) continue;
      close_orbit(group, seed, members, nullptr);
      covered.insert(members.begin(), members.end());
      const Codeword rep = *std::min_element(members.begin(), members.end());
      record(rep, members);
    }
  } else {
    const std::uint64_t total = binomial(n, w);
    if (total > kMaxCombinations)
      throw std::length_error("orbit_code_search: binom(" + std::to_string(n) + "," + std::to_string(w) +
                              ") exceeds the enumeration cap; supply seed words");
    ConstantWeightWalk walk(n, w);
    const std::uint64_t bitmap_bytes = (total + 63) / 64 * 8;
    if (bitmap_bytes <= options.seen_set_limit_bytes) {
      std::vector<std::uint64_t> seen((total + 63) / 64, 0);
      std::uint64_t rank = 0;
      do {
        if (!((seen[rank >> 6] >> (rank & 63)) & 1u)) {
          const Codeword u = walk.word();
          close_orbit(group, u, members, nullptr);
          for (const auto& m : members) {
            const auto r = rank_constant_weight(m);
            seen[r >> 6] |= std::uint64_t{1} << (r & 63);
          }
          record(u, members);
        }
        ++rank;
      } while (walk.advance());
    } else {
      streamed = true;
      do {
        const Codeword u = walk.word();
        if (close_orbit(group, u, members, &u)) record(u, members);
      } while (walk.advance());
    }
  }

  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> chosen;
  if (options.strategy == UnionStrategy::Exact) {
    if (cands.size() > options.exact_max_orbits)
      throw std::length_error("exact orbit union: " + std::to_string(cands.size()) +
                              " admissible orbits exceed the limit of " + std::to_string(options.exact_max_orbits));
    chosen = exact_union(cands, inventory, d);
  } else {
    if (options.strategy == UnionStrategy::LargestFirst) {
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cands[a].members.size() != cands[b].members.size())
          return cands[a].members.size() > cands[b].members.size();
        return inventory[cands[a].record].representative < inventory[cands[b].record].representative;
      });
    }
    for (auto c : order) {
      bool ok = true;
      for (auto a : chosen) {
        if (!compatible(inventory[cands[a].record].representative, cands[c].members, d)) {
          ok = false;
          break;
        }
      }
      if (ok) chosen.push_back(c);
    }
  }

  std::vector<Codeword> words;
  for (auto c : chosen) {
    inventory[cands[c].record].chosen = true;
    words.insert(words.end(), cands[c].members.begin(), cands[c].members.end());
  }
  return OrbitSearchResult{ConstantWeightCode(n, d, w, std::move(words)), std::move(inventory), enumerated, streamed};
}

void write_inventory(std::ostream& out, const std::vector<OrbitRecord>& inventory) {
  for (const auto& r : inventory)
    out << "orbit rep=" << r.representative.to_string() << " size=" << r.size << " chosen=" << (r.chosen ? 1 : 0)
        << '\n';
}

}  // namespace kissing
