#pragma once

// Characteristic cycles, leading term cycles and associated varieties of the
// irreducible highest weight Harish-Chandra modules, computed from the same
// data one rank lower by recursion on the first slot of the support clan.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "hwcc/cells.hpp"
#include "hwcc/clan.hpp"

namespace hwcc {

/// Formal sum of conormal bundle closures T_c1 with integer multiplicities.
class CharacteristicCycle {
 public:
  CharacteristicCycle() = default;
  CharacteristicCycle(Clan support, std::map<Clan, int> terms)
      : support_(std::move(support)), terms_(std::move(terms)) {}

  const Clan& support() const { return support_; }
  const std::map<Clan, int>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Clan& c) const { return terms_.count(c) != 0; }
  /// 0 when absent.
  int multiplicity(const Clan& c) const;

  /// Terms by decreasing orbit dimension, ties by clan order. The support
  /// comes first since every other term lies in its boundary.
  std::vector<Clan> display_order() const;

  bool operator==(const CharacteristicCycle&) const = default;

 private:
  Clan support_;
  std::map<Clan, int> terms_;
};

/// Memoized recursion. Safe to share between threads: lookups take a shared
/// lock and concurrent inserts of the same key are idempotent.
class CcEngine {
 public:
  CharacteristicCycle cc(const Clan& c);

  /// Terms of cc(c) whose geometric cell equals hc_cell_index(c).
  CharacteristicCycle ltc(const Clan& c);

  /// (+ c') when c = (1 c') sits in the top cell for even n, otherwise absent.
  static std::optional<Clan> annihilator_partner(const Clan& c);

  /// Which branch of the recursion produced cc(c): 0 for n = 1, else 1..3.
  static int recursion_case(const Clan& c);

  std::size_t memo_size() const;
  void clear();

 private:
  using Terms = std::shared_ptr<const std::map<Clan, int>>;
  Terms terms_for(const Clan& c);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Clan, Terms, ClanHash> memo_;
};

/// Process-wide engine used by the free functions below.
CcEngine& default_engine();

CharacteristicCycle cc(const Clan& c);
CharacteristicCycle ltc(const Clan& c);
OrbitIndex av(const Clan& c);
std::optional<Clan> annihilator_partner(const Clan& c);

}  // namespace hwcc
