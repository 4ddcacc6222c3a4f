#pragma once

#include <cstdint>
#include <vector>

#include "hwcc/clan.hpp"
#include "hwcc/geometry.hpp"

namespace hwcc {

struct CellAssignment {
  Clan clan;
  /// Geometric cell.
  OrbitIndex r = 0;
  /// Harish-Chandra cell, also the associated variety index.
  OrbitIndex k = 0;
};

/// r = rank_recursive(c); r when r is even or r = n, r + 1 otherwise.
OrbitIndex hc_cell_index(const Clan& c);

CellAssignment assign_cell(const Clan& c);

/// k with 0 <= k <= n and (k even or k = n).
bool is_legal_hc_index(int n, OrbitIndex k);
std::vector<OrbitIndex> legal_hc_indices(int n);

/// Union of the geometric cells k and k-1 (only k for k = 0 and for odd k = n).
/// Throws std::invalid_argument for an illegal k. Sorted.
std::vector<Clan> hc_cell_members(int n, OrbitIndex k);

std::uint64_t binomial(int n, int k);

/// Dimension of the Springer representation attached to O_k: C(n, floor(k/2)).
std::uint64_t springer_dim(int n, OrbitIndex k);

/// Dimension of the cell representation: sum of the Springer dimensions for
/// k and k-1 when k > 0 is even, the one for k = n when n is odd, 1 for k = 0.
std::uint64_t cell_rep_dim(int n, OrbitIndex k);

}  // namespace hwcc
