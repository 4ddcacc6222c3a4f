#pragma once

// Abbreviated clans (left halves containing only '+' and numbers) for the
// closed K-orbits that support highest weight Harish-Chandra modules.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hwcc/weyl.hpp"

namespace hwcc {

/// Raised by Clan::parse and Clan::from_slots. slot() is 1-based, 0 when the
/// problem is not tied to a slot.
class ClanError : public std::invalid_argument {
 public:
  ClanError(const std::string& what, int slot) : std::invalid_argument(what), slot_(slot) {}
  int slot() const { return slot_; }

 private:
  int slot_;
};

/// A clan in canonical labeling: the numbered slots, read left to right,
/// carry 1,2,...,k. Slot value 0 means '+'.
class Clan {
 public:
  static constexpr int kPlus = 0;

  Clan() = default;

  /// Validates canonical labeling, throws ClanError naming the first bad slot.
  static Clan from_slots(std::vector<int> slots);

  /// Relabels: any nonzero entry is a numbered slot, numbered 1..k left to right.
  static Clan canonical(std::span<const int> raw);

  /// Bit j of mask set means slot j+1 is numbered.
  static Clan from_mask(int n, std::uint64_t mask);

  static Clan all_plus(int n);
  static Clan all_numbers(int n);

  /// Accepts the compact form "+12++" and the token form "+,1,2,+,+".
  /// Surrounding parentheses are allowed.
  static Clan parse(std::string_view text);

  int size() const { return static_cast<int>(slots_.size()); }
  bool empty() const { return slots_.empty(); }

  /// 1-based.
  bool is_plus(int slot) const { return slots_.at(static_cast<std::size_t>(slot - 1)) == kPlus; }
  int number(int slot) const { return slots_.at(static_cast<std::size_t>(slot - 1)); }
  int number_count() const;
  int plus_count() const { return size() - number_count(); }

  std::span<const int> slots() const { return slots_; }

  /// Compact when size() <= 9, otherwise token form.
  std::string to_string() const;
  std::string to_token_string() const;
  std::string to_compact_string() const;

  /// Plus < any number, numbers by value, then lexicographic.
  auto operator<=>(const Clan&) const = default;

 private:
  explicit Clan(std::vector<int> slots) : slots_(std::move(slots)) {}
  std::vector<int> slots_;
};

struct ClanHash {
  std::size_t operator()(const Clan& c) const noexcept;
};

/// The 2n-symbol clan of which a Clan is the left half, e.g. "+12++|--21-".
struct FullClan {
  /// 0 is '+', -1 is '-', positive values are numbers.
  std::vector<int> symbols;

  std::string to_string() const;
  auto operator<=>(const FullClan&) const = default;
};

FullClan to_full(const Clan& c);

/// Checks the clan axioms and that the left half has no '-', then returns
/// the canonical abbreviated clan.
Clan from_full(const FullClan& full);

/// All 2^n clans of size n, by increasing mask.
std::vector<Clan> all_clans(int n);

Clan clan_from_w(const SignedPermutation& w);
SignedPermutation w_from_clan(const Clan& c);

TauSet tau_clan(const Clan& c);

/// Prefix counts of '+' slots; equal to a_vector(w_from_clan(c)).
std::vector<int> plus_prefix_counts(const Clan& c);

/// Orbit operation raising dimension by one, if defined for simple index j.
std::optional<Clan> s_op(const Clan& c, int j);

/// Q_{c1} lies in the closure of Q_c.
bool closure_leq(const Clan& c1, const Clan& c);

int dim(const Clan& c);

/// Wall-crossing operator T_{jk}, |j - k| = 1. Absent off its domain; the
/// unequal-length operator T_{n-1,n} may return two clans.
std::optional<std::vector<Clan>> t_op(const Clan& c, int j, int k);

enum class Head { Plus, One };

struct Decomposition {
  Head head;
  Clan tail;
};

/// Splits off slot 1; the tail is relabeled canonically.
Decomposition decompose(const Clan& c);

/// Inverse of decompose.
Clan compose(Head head, const Clan& tail);

/// Embeds w'' of rank n-1 into rank n fixing 1: entries shifted by one in
/// absolute value and prepended with 1.
SignedPermutation embed_fixing_one(const SignedPermutation& tail_w);

/// Builds w from (head, w') with w'(1) = 1: s_{2e_1} w' for head One,
/// sigma w' with sigma = s_{n-1}...s_1 for head Plus.
SignedPermutation lift_w(Head head, const SignedPermutation& w_prime);

std::string to_string(Head head);

}  // namespace hwcc
