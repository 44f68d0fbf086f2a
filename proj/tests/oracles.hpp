#pragma once

// Brute-force reference implementations. They work on plain strings and
// integer vectors and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline int distance(const std::string& a, const std::string& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline int weight(const std::string& a) { return static_cast<int>(std::count(a.begin(), a.end(), '1')); }

inline std::vector<std::string> all_words(int n, int w = -1) {
  std::vector<std::string> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
      if (x >> (n - 1 - i) & 1) s[i] = '1';
    if (w < 0 || weight(s) == w) out.push_back(s);
  }
  return out;  // ascending with position 0 most significant
}

// Scan order by sorting strings: colex compares the reversed strings.
inline std::vector<std::string> scan_order(int n, int w, bool colex, bool descending) {
  auto words = all_words(n, w);
  auto key = [colex](const std::string& s) { return colex ? std::string(s.rbegin(), s.rend()) : s; };
  std::sort(words.begin(), words.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  if (descending) std::reverse(words.begin(), words.end());
  return words;
}

inline std::vector<std::string> greedy(const std::vector<std::string>& candidates, int d) {
  std::vector<std::string> code;
  for (const auto& c : candidates)
    if (std::all_of(code.begin(), code.end(), [&](const std::string& x) { return distance(x, c) >= d; }))
      code.push_back(c);
  return code;
}

inline int min_distance(const std::vector<std::string>& code) {
  int best = 1 << 30;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) best = std::min(best, distance(code[i], code[j]));
  return best;
}

// Maximum clique in the compatibility graph of the weight-w words.
inline int max_constant_weight_code(int n, int d, int w) {
  const auto words = all_words(n, w);
  const std::size_t m = words.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ok[i][j] = distance(words[i], words[j]) >= d;
  int best = 0;
  std::function<void(std::vector<std::size_t>&, int)> grow = [&](std::vector<std::size_t>& cand, int size) {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<int>(cand.size()) <= best) return;
    while (!cand.empty()) {
      if (size + static_cast<int>(cand.size()) <= best) return;
      const std::size_t v = cand.back();
      cand.pop_back();
      std::vector<std::size_t> next;
      for (auto u : cand)
        if (ok[v][u]) next.push_back(u);
      grow(next, size + 1);
    }
  };
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), 0);
  grow(all, 0);
  return best;
}

// Projective line over Z_p: points 0..p-1 and p for infinity.
inline int moebius_mod_p(int p, int a, int b, int c, int d, int x) {
  auto inv = [p](int v) {
    for (int t = 1; t < p; ++t)
      if (v * t % p == 1) return t;
    return -1;
  };
  if (x == p) return c % p == 0 ? p : a * inv(c) % p;
  const int num = (a * x + b) % p, den = (c * x + d) % p;
  if (den == 0) return p;
  return num * inv(den) % p;
}

// PSL(2, p) as a set of permutations, from every determinant-one matrix.
inline std::set<std::vector<int>> psl2_elements(int p) {
  std::set<std::vector<int>> perms;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p != 1) continue;
          std::vector<int> img(p + 1);
          for (int x = 0; x <= p; ++x) img[x] = moebius_mod_p(p, a, b, c, d, x);
          perms.insert(img);
        }
  return perms;
}

// GF(2^m) by carry-less multiplication modulo `poly` (bit i = coefficient
// of x^i, including the leading term).
inline std::uint32_t gf2m_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int m) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m & 1) a ^= poly;
  }
  return r;
}

// Signed overlap straight from the coordinate vectors (entries in
// {-1, 0, +1} per unit of the level's scale).
inline long signed_overlap(const std::vector<int>& u, const std::vector<int>& v) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace oracle
