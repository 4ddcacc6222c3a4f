#include "hwcc/cells.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hwcc {

namespace {

void require_legal(int n, OrbitIndex k) {
  if (!is_legal_hc_index(n, k)) {
    throw std::invalid_argument("no Harish-Chandra cell with index " + std::to_string(k) +
                                " for n=" + std::to_string(n) + " (k must be even or equal to n)");
  }
}

}  // namespace

OrbitIndex hc_cell_index(const Clan& c) {
  const int r = rank_recursive(c);
  return (r % 2 == 0 || r == c.size()) ? r : r + 1;
}

CellAssignment assign_cell(const Clan& c) { return {c, rank_recursive(c), hc_cell_index(c)}; }

bool is_legal_hc_index(int n, OrbitIndex k) { return k >= 0 && k <= n && (k % 2 == 0 || k == n); }

std::vector<OrbitIndex> legal_hc_indices(int n) {
  std::vector<OrbitIndex> out;
  for (int k = 0; k <= n; ++k) {
    if (is_legal_hc_index(n, k)) out.push_back(k);
  }
  return out;
}

std::vector<Clan> hc_cell_members(int n, OrbitIndex k) {
  require_legal(n, k);
  auto members = geometric_cell_members(n, k);
  if (k > 0 && k % 2 == 0) {
    auto lower = geometric_cell_members(n, k - 1);
    members.insert(members.end(), lower.begin(), lower.end());
    std::sort(members.begin(), members.end());
  }
  return members;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t springer_dim(int n, OrbitIndex k) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  return binomial(n, k / 2);
}

std::uint64_t cell_rep_dim(int n, OrbitIndex k) {
  require_legal(n, k);
  if (k == 0) return 1;
  if (k % 2 == 0) return springer_dim(n, k) + springer_dim(n, k - 1);
  return springer_dim(n, n);
}

}  // namespace hwcc
