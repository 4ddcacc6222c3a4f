#include "hwcc/geometry.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace hwcc {

namespace ff {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1U) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (p % q == 0) return p == q;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const std::uint64_t a = m[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t b = m[i][col];
      if (b == 0) continue;
      // row_i <- a * row_i - b * row_r
      for (std::size_t j = col; j < cols; ++j) {
        m[i][j] = sub_mod(mul_mod(a, m[i][j], p), mul_mod(b, m[r][j], p), p);
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace ff

RootPattern root_pattern(const SignedPermutation& w) {
  if (!in_script_w(w)) {
    throw std::invalid_argument("(" + w.to_string() + ") is not in the highest weight set");
  }
  const int n = w.rank();
  const auto winv = w.inverse();
  RootPattern pattern;
  for (const auto& beta : positive_roots(n)) {
    if (!act(winv, beta).is_positive()) continue;
    if (!beta.is_noncompact()) {
      throw std::logic_error("compact root " + beta.to_string() + " in n cap n^w for (" +
                             w.to_string() + ")");
    }
    const auto c = beta.coefficients();
    int i = 0;
    int j = 0;
    for (int idx = 0; idx < n; ++idx) {
      if (c[static_cast<std::size_t>(idx)] == 0) continue;
      if (i == 0) i = idx + 1;
      j = idx + 1;
    }
    pattern.emplace(i, j);
  }
  return pattern;
}

OrbitIndex rank_recursive(const Clan& c) {
  // Fold from the last slot: r(empty) = 0, r(1 c') = r(c'), r(+ c') = min(r(c') + 2, size).
  const int n = c.size();
  int r = 0;
  for (int slot = n; slot >= 1; --slot) {
    const int size = n - slot + 1;
    if (c.is_plus(slot)) r = std::min(r + 2, size);
  }
  return r;
}

OrbitIndex rank_oracle(const Clan& c, const OracleConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("oracle needs at least one trial");
  if (!ff::is_prime(config.prime) || config.prime >= (1ULL << 63)) {
    throw std::invalid_argument("oracle modulus must be a prime below 2^63");
  }
  const int n = c.size();
  const auto pattern = root_pattern(w_from_clan(c));
  std::uniform_int_distribution<std::uint64_t> nonzero(1, config.prime - 1);
  int best = 0;
  for (int t = 0; t < config.trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32U),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(n),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    for (const auto& [i, j] : pattern) {
      const auto v = nonzero(rng);
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
    }
    best = std::max(best, ff::rank_mod(std::move(m), config.prime));
  }
  return best;
}

std::vector<Clan> geometric_cell_members(int n, OrbitIndex k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  // cells[m][k] for rank m, built bottom up.
  std::vector<std::vector<Clan>> prev(1);
  prev[0].push_back(Clan());
  std::vector<std::vector<std::vector<Clan>>> by_rank{prev};
  for (int m = 1; m <= n; ++m) {
    const auto& lower = by_rank.back();
    const auto lower_at = [&](int idx) -> const std::vector<Clan>& {
      static const std::vector<Clan> kEmpty;
      return idx >= 0 && idx < static_cast<int>(lower.size()) ? lower[static_cast<std::size_t>(idx)] : kEmpty;
    };
    std::vector<std::vector<Clan>> cells(static_cast<std::size_t>(m) + 1);
    for (int kk = 0; kk <= m; ++kk) {
      auto& cell = cells[static_cast<std::size_t>(kk)];
      if (kk == m) {
        for (const auto& t : lower_at(m - 1)) cell.push_back(compose(Head::Plus, t));
        for (const auto& t : lower_at(m - 2)) cell.push_back(compose(Head::Plus, t));
      } else {
        if (kk >= 2) {
          for (const auto& t : lower_at(kk - 2)) cell.push_back(compose(Head::Plus, t));
        }
        for (const auto& t : lower_at(kk)) cell.push_back(compose(Head::One, t));
      }
      std::sort(cell.begin(), cell.end());
    }
    by_rank.push_back(std::move(cells));
  }
  return by_rank.back()[static_cast<std::size_t>(k)];
}

}  // namespace hwcc
