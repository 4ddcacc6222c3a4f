#pragma once

// Independent verification. Every check is a brute-force or second
// implementation run against the library, collected into a report with
// reproducible counterexamples.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hwcc/cc.hpp"
#include "hwcc/geometry.hpp"

namespace hwcc {

inline constexpr std::string_view kReportSchema = "hwcc.verification/1";

struct CheckResult {
  /// e.g. "bruhat.orders_agree[n=04]".
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool passed = true;
  /// Null when passed.
  nlohmann::json counterexample;
  /// Number of cases examined.
  std::uint64_t cases = 0;
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  OracleConfig oracle;
  int n_min = 1;
  int n_max = 10;
  /// The rank oracle runs with seeds oracle.seed, oracle.seed + 1, ...
  int seed_count = 3;
  /// Run checks on a thread pool. The report is identical either way,
  /// apart from elapsed times.
  bool parallel = true;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(VerifyOptions options) : options_(options) {}

  void add(CheckResult result);
  void add(std::vector<CheckResult> results);
  /// Orders checks by name; throws std::logic_error on a duplicate name.
  void finalize();

  const VerifyOptions& options() const { return options_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failure_count() const;

  nlohmann::json to_json() const;
  /// One line per check plus a totals line.
  std::string summary() const;

 private:
  VerifyOptions options_;
  std::vector<CheckResult> checks_;
};

// Reference implementations used by the checks.

/// The reflection s_beta for a positive root beta.
SignedPermutation reflection(const Root& beta);
/// All x <= w in W(C_n), by downward closure under reflections that lower
/// length. Exponential in n; intended for n <= 5.
std::set<SignedPermutation> bruhat_lower_ideal(const SignedPermutation& w);
/// T operator on the Weyl group side, mapped back to clans. Absent off the
/// domain. Results are sorted.
std::optional<std::vector<Clan>> t_op_weyl(const Clan& c, int j, int k);
/// Bound on the chance that rank_oracle undercounts any of the 2^n clans.
double rank_failure_bound(int n, const OracleConfig& config);

// Check sections; each returns one result per named check.

/// Requires 1 <= n <= 7. The reflection-closure comparison runs for n <= 5.
std::vector<CheckResult> verify_bruhat(int n);
/// Requires 1 <= n <= 12. Counting identities for both kinds of cells.
std::vector<CheckResult> verify_cells(int n);
/// Requires 1 <= n <= 8. One oracle comparison per seed.
std::vector<CheckResult> verify_ranks(int n, const OracleConfig& config, int seed_count = 3);
/// Requires 1 <= n <= 10. Operator checks run for n <= 7, golden tables for n = 2, 3, 4.
std::vector<CheckResult> verify_cc(int n, CcEngine& engine = default_engine());
/// Requires 2 <= n <= 4.
CheckResult verify_golden(int n, CcEngine& engine = default_engine());

/// Every section for n_min..n_max, 1 <= n_min <= n_max <= 10. Bruhat and rank
/// sections stop at n = 7.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace hwcc
