#pragma once

// Helpers shared by the unit tests. Anything named *_naive is a deliberately
// simple second implementation used as an oracle.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hwcc/clan.hpp"
#include "hwcc/weyl.hpp"

namespace hwcc::test {

inline Clan C(const char* text) { return Clan::parse(text); }
inline SignedPermutation W(const char* text) { return SignedPermutation::parse(text); }

/// Word length by breadth-first search on the Cayley graph of simple
/// reflections. Only for small n.
inline std::map<SignedPermutation, int> word_lengths_naive(int n) {
  std::map<SignedPermutation, int> dist;
  const auto e = SignedPermutation::identity(n);
  dist[e] = 0;
  std::deque<SignedPermutation> queue{e};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (int j = 1; j <= n; ++j) {
      auto y = x.times_simple(j);
      if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

/// Every clan of size n assembled from raw slot words, without from_mask.
inline std::vector<Clan> clans_naive(int n) {
  std::vector<Clan> out;
  std::vector<int> raw(static_cast<std::size_t>(n));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    for (int i = 0; i < n; ++i) raw[static_cast<std::size_t>(i)] = (m >> i) & 1 ? 7 : 0;
    out.push_back(Clan::canonical(raw));
  }
  return out;
}

inline Clan random_clan(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> raw(static_cast<std::size_t>(n));
  for (auto& s : raw) s = coin(rng) ? 1 : 0;
  return Clan::canonical(raw);
}

inline bool tau_contains(const TauSet& t, int j) { return std::binary_search(t.begin(), t.end(), j); }

}  // namespace hwcc::test
