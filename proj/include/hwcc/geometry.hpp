#pragma once

// Moment-map images of conormal bundle closures. The image for a clan is the
// closure of the rank-k stratum O_k of symmetric n x n matrices; k is computed
// by a head/tail recursion and, independently, as the generic rank of the
// matrices supported on the clan's root pattern.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hwcc/clan.hpp"

namespace hwcc {

/// Pairs (i, j), i <= j, marking e_i + e_j in Delta(n cap n^w).
using RootPattern = std::set<std::pair<int, int>>;

/// Index k of the orbit O_k, 0 <= k <= n.
using OrbitIndex = int;

struct OracleConfig {
  /// 2^61 - 1.
  std::uint64_t prime = 2305843009213693951ULL;
  int trials = 5;
  std::uint64_t seed = 20140623;
};

/// Throws std::logic_error if a compact root survives (it never should for
/// members of the highest weight set).
RootPattern root_pattern(const SignedPermutation& w);

OrbitIndex rank_recursive(const Clan& c);

/// Max over trials of the rank, mod prime, of a random symmetric matrix
/// supported on root_pattern(w_from_clan(c)).
OrbitIndex rank_oracle(const Clan& c, const OracleConfig& config = {});

/// Clans whose moment map image is the closure of O_k, built from the
/// rank-(n-1) and rank-(n-2) cells. Sorted.
std::vector<Clan> geometric_cell_members(int n, OrbitIndex k);

namespace ff {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// Rank of a square matrix over Z/p by fraction-free elimination. Entries
/// must already be reduced mod p.
int rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

}  // namespace ff

}  // namespace hwcc
