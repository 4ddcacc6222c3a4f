#pragma once

// Type C_n Weyl group arithmetic: signed permutations in short and long form,
// root actions, length, tau-invariants and Bruhat order tests.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hwcc {

/// Element of W(C_n) in short form: w(e_j) = e_{w_j} when w_j > 0 and
/// -e_{-w_j} when w_j < 0.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  /// Throws std::invalid_argument unless |w_1|,...,|w_n| is a permutation of 1..n.
  explicit SignedPermutation(std::vector<int> entries);

  static SignedPermutation identity(int n);

  /// Parses "5,-1,-2,4,3" (whitespace around tokens is ignored).
  static SignedPermutation parse(std::string_view text);

  int rank() const { return static_cast<int>(entries_.size()); }

  /// 1-based access, w_j.
  int entry(int j) const { return entries_.at(static_cast<std::size_t>(j - 1)); }

  std::span<const int> entries() const { return entries_; }

  SignedPermutation inverse() const;

  /// Composition (*this) o rhs, i.e. apply rhs first.
  SignedPermutation compose(const SignedPermutation& rhs) const;

  /// Right multiplication by the simple reflection s_j, 1 <= j <= n.
  SignedPermutation times_simple(int j) const;

  std::string to_string() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// Root as a coefficient vector over e_1..e_n.
class Root {
 public:
  Root() = default;

  /// Throws std::invalid_argument if the vector is not a root of C_n.
  explicit Root(std::vector<int> coefficients);

  /// e_i - e_j (i != j).
  static Root difference(int n, int i, int j);
  /// e_i + e_j (i != j).
  static Root sum(int n, int i, int j);
  /// 2 e_i.
  static Root long_root(int n, int i);
  /// alpha_j: e_j - e_{j+1} for j < n, 2 e_n for j = n.
  static Root simple(int n, int j);

  int rank() const { return static_cast<int>(coefficients_.size()); }
  std::span<const int> coefficients() const { return coefficients_; }

  /// Positive iff its first nonzero coefficient is positive.
  bool is_positive() const;
  bool is_noncompact() const;

  Root operator-() const;

  /// e.g. "e1-e2", "-2e3", "e1+e4".
  std::string to_string() const;

  auto operator<=>(const Root&) const = default;

 private:
  std::vector<int> coefficients_;
};

/// The n^2 positive roots, ordered e_i - e_j (i<j) then e_i + e_j (i<=j).
std::vector<Root> positive_roots(int n);

/// Subset of simple-root indices 1..n, kept sorted.
using TauSet = std::vector<int>;

/// Permutation of 1..2n with u_j + u_{2n-j+1} = 2n + 1.
struct LongForm {
  std::vector<int> u;

  int rank() const { return static_cast<int>(u.size()) / 2; }

  /// Space separated with a bar after position n: "8 4 3 7 | 2 6 5 1".
  std::string to_string() const;

  auto operator<=>(const LongForm&) const = default;
};

Root act(const SignedPermutation& w, const Root& beta);

/// Number of positive roots sent to negative roots.
int length(const SignedPermutation& w);

/// Membership in the set of 2^n elements whose clans parametrize highest
/// weight Harish-Chandra modules: negative entries read -1,-2,...,-k and
/// positive entries read n,n-1,...,k+1, left to right.
bool in_script_w(const SignedPermutation& w);

/// All members of the set above, in order of increasing bitmask of negative slots.
std::vector<SignedPermutation> script_w_elements(int n);

/// Every element of W(C_n); 2^n n! of them, meant for small n.
std::vector<SignedPermutation> all_signed_permutations(int n);

TauSet tau(const SignedPermutation& w);

LongForm long_form(const SignedPermutation& w);

/// Inverse of long_form; throws std::invalid_argument if the symmetry fails.
SignedPermutation short_form(const LongForm& u);

/// Tableau criterion on sorted prefixes of the long forms, k = 1..2n.
bool bruhat_leq_longform(const SignedPermutation& y, const SignedPermutation& w);

/// Full 2n x 2n table b_ij = #{l <= i : u_l <= j}, 0-based storage.
std::vector<std::vector<int>> b_table(const SignedPermutation& w);

/// Upper-left n x n block of b_table.
std::vector<std::vector<int>> b_matrix(const SignedPermutation& w);

/// y <= w iff b_matrix(y) >= b_matrix(w) entrywise; valid on the script-W set.
bool bruhat_leq_bmatrix(const SignedPermutation& y, const SignedPermutation& w);

/// Prefix counts of positive entries. Requires in_script_w(w).
std::vector<int> a_vector(const SignedPermutation& w);

/// y <= w iff a_i(y) >= a_i(w) for all i. Both arguments must be in script-W.
bool bruhat_leq_avector(const SignedPermutation& y, const SignedPermutation& w);

std::string to_string(const TauSet& tau);

}  // namespace hwcc
