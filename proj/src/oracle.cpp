#include "hwcc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hwcc/golden.hpp"

namespace hwcc {

namespace {

using nlohmann::json;

std::string check_name(std::string_view base, int n, std::string_view extra = {}) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d", n);
  std::string s = std::string(base) + "[n=" + buf;
  if (!extra.empty()) s += "," + std::string(extra);
  return s + "]";
}

// Accumulates cases and keeps the first counterexample.
class Recorder {
 public:
  Recorder(std::string name, json params)
      : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
    result_.params = std::move(params);
  }

  void count(std::uint64_t k = 1) { result_.cases += k; }
  bool failed() const { return !result_.passed; }

  void fail(json counterexample) {
    if (result_.passed) {
      result_.passed = false;
      result_.counterexample = std::move(counterexample);
    }
  }

  // Returns cond; records a counterexample built lazily on failure.
  template <typename F>
  bool expect(bool cond, F&& describe) {
    ++result_.cases;
    if (!cond) fail(describe());
    return cond;
  }

  CheckResult done() {
    result_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

json clans_json(const std::vector<Clan>& clans) {
  auto arr = json::array();
  for (const auto& c : clans) arr.push_back(c.to_string());
  return arr;
}

json terms_json(const CharacteristicCycle& cc) { return clans_json(cc.display_order()); }

std::vector<Clan> term_set(const CharacteristicCycle& cc) {
  std::vector<Clan> out;
  for (const auto& [t, m] : cc.terms()) out.push_back(t);
  return out;
}

bool contains(const TauSet& t, int j) { return std::binary_search(t.begin(), t.end(), j); }

bool includes(const TauSet& big, const TauSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void require_range(std::string_view what, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
  }
}

// Simple-index pairs (j, k) with |j - k| = 1.
std::vector<std::pair<int, int>> operator_pairs(int n, bool equal_length) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n; ++j) {
    const bool equal = j + 1 < n;
    if (equal != equal_length) continue;
    out.emplace_back(j, j + 1);
    out.emplace_back(j + 1, j);
  }
  return out;
}

std::string op_name(int j, int k) { return "T" + std::to_string(j) + "," + std::to_string(k); }

}  // namespace

// ---------------------------------------------------------------- report

void VerificationReport::add(CheckResult result) { checks_.push_back(std::move(result)); }

void VerificationReport::add(std::vector<CheckResult> results) {
  for (auto& r : results) checks_.push_back(std::move(r));
}

void VerificationReport::finalize() {
  std::sort(checks_.begin(), checks_.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  const auto dup = std::adjacent_find(checks_.begin(), checks_.end(),
                                      [](const auto& a, const auto& b) { return a.name == b.name; });
  if (dup != checks_.end()) throw std::logic_error("duplicate check name " + dup->name);
}

bool VerificationReport::passed() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return !c.passed; }));
}

json VerificationReport::to_json() const {
  json doc;
  doc["schema"] = kReportSchema;
  doc["config"] = {{"prime", options_.oracle.prime},
                   {"trials", options_.oracle.trials},
                   {"seed", options_.oracle.seed},
                   {"seed_count", options_.seed_count},
                   {"n_min", options_.n_min},
                   {"n_max", options_.n_max}};
  doc["passed"] = passed();
  doc["failures"] = failure_count();
  auto arr = json::array();
  for (const auto& c : checks_) {
    arr.push_back({{"name", c.name},
                   {"params", c.params},
                   {"passed", c.passed},
                   {"cases", c.cases},
                   {"elapsed_ms", c.elapsed_ms},
                   {"counterexample", c.counterexample}});
  }
  doc["checks"] = std::move(arr);
  return doc;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  double total_ms = 0;
  for (const auto& c : checks_) {
    char line[256];
    std::snprintf(line, sizeof line, "%s %-52s %10llu cases %10.1f ms\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                  static_cast<unsigned long long>(c.cases), c.elapsed_ms);
    os << line;
    if (!c.passed) os << "     counterexample: " << c.counterexample.dump() << '\n';
    total_ms += c.elapsed_ms;
  }
  os << checks_.size() << " checks, " << failure_count() << " failed, " << static_cast<long long>(total_ms)
     << " ms of check time\n";
  return os.str();
}

// ---------------------------------------------------------------- reference implementations

SignedPermutation reflection(const Root& beta) {
  const int n = beta.rank();
  if (!beta.is_positive()) throw std::invalid_argument("reflection needs a positive root");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] = i;
  std::vector<int> support;
  const auto coeff = beta.coefficients();
  for (int i = 0; i < n; ++i) {
    if (coeff[static_cast<std::size_t>(i)] != 0) support.push_back(i);
  }
  if (support.size() == 1) {
    e[static_cast<std::size_t>(support[0])] = -(support[0] + 1);
  } else {
    const int i = support[0], j = support[1];
    const int sign = coeff[static_cast<std::size_t>(j)] < 0 ? 1 : -1;
    e[static_cast<std::size_t>(i)] = sign * (j + 1);
    e[static_cast<std::size_t>(j)] = sign * (i + 1);
  }
  return SignedPermutation(std::move(e));
}

std::set<SignedPermutation> bruhat_lower_ideal(const SignedPermutation& w) {
  const auto roots = positive_roots(w.rank());
  std::vector<SignedPermutation> refl;
  refl.reserve(roots.size());
  for (const auto& r : roots) refl.push_back(reflection(r));
  std::set<SignedPermutation> seen{w};
  std::deque<SignedPermutation> queue{w};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    const int lx = length(x);
    for (const auto& t : refl) {
      auto y = x.compose(t);
      if (length(y) < lx && seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

std::optional<std::vector<Clan>> t_op_weyl(const Clan& c, int j, int k) {
  const int n = c.size();
  if (std::abs(j - k) != 1 || std::min(j, k) < 1 || std::max(j, k) > n) {
    throw std::invalid_argument("T operator needs adjacent simple indices in 1..n");
  }
  const auto w = w_from_clan(c);
  const auto t = tau(w);
  if (contains(t, j) || !contains(t, k)) return std::nullopt;
  const auto ws_a = w.times_simple(j);
  const auto ws_b = w.times_simple(k);
  std::vector<SignedPermutation> picked;
  if (std::max(j, k) < n) {
    const bool first = !contains(tau(ws_a), k);
    const bool second = contains(tau(ws_b), j);
    if (first == second) throw std::logic_error("equal-length T operator is not single valued at " + c.to_string());
    picked.push_back(first ? ws_a : ws_b);
  } else {
    for (const auto& x : {ws_a, ws_b}) {
      const auto tx = tau(x);
      if (contains(tx, j) && !contains(tx, k)) picked.push_back(x);
    }
  }
  std::vector<Clan> out;
  for (const auto& x : picked) {
    if (!in_script_w(x)) {
      throw std::logic_error("T operator leaves the highest weight set: " + c.to_string() + " -> " + x.to_string());
    }
    out.push_back(clan_from_w(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

double rank_failure_bound(int n, const OracleConfig& config) {
  // A nonzero minor of size <= n vanishes at a uniform point with
  // probability <= n / p; trials are independent; union over 2^n clans.
  const double per_trial = static_cast<double>(n) / static_cast<double>(config.prime);
  return std::min(1.0, std::ldexp(std::pow(per_trial, config.trials), n));
}

// ---------------------------------------------------------------- bruhat

std::vector<CheckResult> verify_bruhat(int n) {
  require_range("verify_bruhat", n, 1, 7);
  std::vector<CheckResult> out;
  const auto ws = script_w_elements(n);
  const json params = {{"n", n}, {"elements", ws.size()}};

  {
    Recorder rec(check_name("bruhat.orders_agree", n), params);
    for (const auto& y : ws) {
      for (const auto& w : ws) {
        const bool l = bruhat_leq_longform(y, w);
        const bool b = bruhat_leq_bmatrix(y, w);
        const bool a = bruhat_leq_avector(y, w);
        rec.expect(l == b && b == a, [&] {
          return json{{"y", y.to_string()}, {"w", w.to_string()}, {"longform", l}, {"bmatrix", b}, {"avector", a}};
        });
      }
    }
    out.push_back(rec.done());
  }

  if (n <= 5) {
    Recorder rec(check_name("bruhat.reflection_closure", n), params);
    for (const auto& w : ws) {
      const auto ideal = bruhat_lower_ideal(w);
      for (const auto& y : ws) {
        const bool brute = ideal.count(y) != 0;
        const bool a = bruhat_leq_avector(y, w);
        rec.expect(brute == a, [&] {
          return json{{"y", y.to_string()}, {"w", w.to_string()}, {"reflection_closure", brute}, {"avector", a}};
        });
      }
    }
    out.push_back(rec.done());
  }

  {
    Recorder rec(check_name("bruhat.sop_reachability", n), params);
    const auto clans = all_clans(n);
    std::map<Clan, std::set<Clan>> reach;
    // Clans in decreasing dimension so successors are finished first.
    auto order = clans;
    std::sort(order.begin(), order.end(), [](const Clan& a, const Clan& b) { return dim(a) > dim(b); });
    for (const auto& c : order) {
      std::set<Clan> r{c};
      for (int j = 1; j <= n; ++j) {
        if (const auto s = s_op(c, j)) {
          const auto& sub = reach.at(*s);
          r.insert(sub.begin(), sub.end());
        }
      }
      reach.emplace(c, std::move(r));
    }
    for (const auto& c1 : clans) {
      for (const auto& c : clans) {
        const bool dag = reach.at(c1).count(c) != 0;
        const bool leq = closure_leq(c1, c);
        rec.expect(dag == leq, [&] {
          return json{{"c1", c1.to_string()}, {"c", c.to_string()}, {"sop_reachable", dag}, {"closure_leq", leq}};
        });
      }
    }
    out.push_back(rec.done());
  }

  {
    Recorder rec(check_name("bruhat.simple_chain", n), params);
    for (const auto& y : ws) {
      std::set<SignedPermutation> seen{y};
      std::deque<SignedPermutation> queue{y};
      while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        const int lx = length(x);
        for (int j = 1; j <= n; ++j) {
          auto z = x.times_simple(j);
          if (in_script_w(z) && length(z) == lx + 1 && seen.insert(z).second) queue.push_back(std::move(z));
        }
      }
      for (const auto& w : ws) {
        const bool chain = seen.count(w) != 0;
        const bool leq = bruhat_leq_avector(y, w);
        rec.expect(chain == leq, [&] {
          return json{{"y", y.to_string()}, {"w", w.to_string()}, {"simple_chain", chain}, {"avector", leq}};
        });
      }
    }
    out.push_back(rec.done());
  }

  {
    Recorder rec(check_name("bruhat.reflexive", n), params);
    for (const auto& w : ws) {
      const auto c = clan_from_w(w);
      rec.expect(bruhat_leq_longform(w, w) && bruhat_leq_bmatrix(w, w) && bruhat_leq_avector(w, w) && closure_leq(c, c),
                 [&] { return json{{"w", w.to_string()}}; });
    }
    out.push_back(rec.done());
  }

  {
    Recorder rec(check_name("bruhat.sop_step", n), params);
    for (const auto& c : all_clans(n)) {
      for (int j = 1; j <= n; ++j) {
        const auto s = s_op(c, j);
        if (!s) continue;
        const bool ok = dim(*s) == dim(c) + 1 && closure_leq(c, *s) && w_from_clan(*s) == w_from_clan(c).times_simple(j);
        rec.expect(ok, [&] { return json{{"c", c.to_string()}, {"j", j}, {"s_op", s->to_string()}}; });
      }
    }
    out.push_back(rec.done());
  }
  return out;
}

// ---------------------------------------------------------------- cells

std::vector<CheckResult> verify_cells(int n) {
  require_range("verify_cells", n, 1, 12);
  std::vector<CheckResult> out;
  const auto clans = all_clans(n);
  const json params = {{"n", n}};

  {
    Recorder rec(check_name("cells.geometric", n), params);
    std::map<int, std::vector<Clan>> by_rank;
    for (const auto& c : clans) by_rank[rank_recursive(c)].push_back(c);
    for (int k = 0; k <= n; ++k) {
      const auto members = geometric_cell_members(n, k);
      auto filtered = by_rank[k];
      std::sort(filtered.begin(), filtered.end());
      rec.expect(members == filtered && members.size() == binomial(n, k / 2) && members.size() == springer_dim(n, k),
                 [&] {
                   return json{{"k", k},
                               {"recursion_size", members.size()},
                               {"filter_size", filtered.size()},
                               {"expected", binomial(n, k / 2)}};
                 });
    }
    out.push_back(rec.done());
  }

  {
    Recorder rec(check_name("cells.harish_chandra", n), params);
    std::uint64_t total = 0;
    for (int k : legal_hc_indices(n)) {
      const auto members = hc_cell_members(n, k);
      std::uint64_t expected = 1;
      if (k > 0 && k % 2 == 0) expected = binomial(n + 1, k / 2);
      if (k % 2 == 1) expected = binomial(n, (n - 1) / 2);
      total += members.size();
      rec.expect(members.size() == expected && members.size() == cell_rep_dim(n, k), [&] {
        return json{{"k", k}, {"size", members.size()}, {"expected", expected}, {"cell_rep_dim", cell_rep_dim(n, k)}};
      });
      for (const auto& c : members) {
        rec.expect(hc_cell_index(c) == k && av(c) == k,
                   [&] { return json{{"k", k}, {"clan", c.to_string()}, {"hc_cell_index", hc_cell_index(c)}}; });
      }
    }
    rec.expect(total == (std::uint64_t{1} << n), [&] { return json{{"total", total}}; });
    out.push_back(rec.done());
  }
  return out;
}

// ---------------------------------------------------------------- ranks

std::vector<CheckResult> verify_ranks(int n, const OracleConfig& config, int seed_count) {
  require_range("verify_ranks", n, 1, 8);
  if (seed_count < 1) throw std::invalid_argument("seed_count must be positive");
  std::vector<CheckResult> out;
  const auto clans = all_clans(n);
  std::vector<std::vector<OrbitIndex>> per_seed;

  for (int s = 0; s < seed_count; ++s) {
    auto cfg = config;
    cfg.seed = config.seed + static_cast<std::uint64_t>(s);
    Recorder rec(check_name("ranks.oracle_matches_recursion", n, "seed=" + std::to_string(cfg.seed)),
                 {{"n", n},
                  {"prime", cfg.prime},
                  {"trials", cfg.trials},
                  {"seed", cfg.seed},
                  {"failure_bound", rank_failure_bound(n, cfg)}});
    std::vector<OrbitIndex> ranks;
    for (const auto& c : clans) {
      const int oracle = rank_oracle(c, cfg);
      const int rec_rank = rank_recursive(c);
      ranks.push_back(oracle);
      rec.expect(oracle == rec_rank, [&] {
        return json{{"clan", c.to_string()}, {"oracle", oracle}, {"recursive", rec_rank}, {"seed", cfg.seed}};
      });
    }
    per_seed.push_back(std::move(ranks));
    out.push_back(rec.done());
  }

  {
    Recorder rec(check_name("ranks.seed_invariance", n), {{"n", n}, {"seeds", seed_count}});
    for (std::size_t i = 0; i < clans.size(); ++i) {
      for (std::size_t s = 1; s < per_seed.size(); ++s) {
        rec.expect(per_seed[s][i] == per_seed[0][i], [&] {
          return json{{"clan", clans[i].to_string()},
                      {"seed", config.seed + s},
                      {"rank", per_seed[s][i]},
                      {"first_seed_rank", per_seed[0][i]}};
        });
      }
    }
    out.push_back(rec.done());
  }

  {
    Recorder rec(check_name("ranks.monotone_closure", n), {{"n", n}});
    std::vector<int> r;
    for (const auto& c : clans) r.push_back(rank_recursive(c));
    for (std::size_t a = 0; a < clans.size(); ++a) {
      for (std::size_t b = 0; b < clans.size(); ++b) {
        if (!closure_leq(clans[a], clans[b])) continue;
        rec.expect(r[a] >= r[b], [&] {
          return json{{"c1", clans[a].to_string()}, {"c", clans[b].to_string()}, {"r_c1", r[a]}, {"r_c", r[b]}};
        });
      }
    }
    out.push_back(rec.done());
  }

  {
    Recorder rec(check_name("ranks.root_pattern_noncompact", n), {{"n", n}});
    for (const auto& c : clans) {
      std::string error;
      try {
        (void)root_pattern(w_from_clan(c));
      } catch (const std::logic_error& e) {
        error = e.what();
      }
      rec.expect(error.empty(), [&] { return json{{"clan", c.to_string()}, {"error", error}}; });
    }
    out.push_back(rec.done());
  }
  return out;
}

// ---------------------------------------------------------------- characteristic cycles

CheckResult verify_golden(int n, CcEngine& engine) {
  require_range("verify_golden", n, 2, 4);
  const auto& golden = golden_table(n);
  Recorder rec(check_name("golden.table", n), {{"n", n}, {"rows", golden.size()}});
  rec.expect(golden.size() == (std::size_t{1} << n), [&] { return json{{"golden_rows", golden.size()}}; });
  std::set<Clan> listed;
  for (const auto& g : golden) {
    listed.insert(g.clan);
    const auto cyc = engine.cc(g.clan);
    const auto terms = cyc.display_order();
    json got = {{"dim", dim(g.clan)},
                {"tau", tau_clan(g.clan)},
                {"hc_cell", hc_cell_index(g.clan)},
                {"g_cell", rank_recursive(g.clan)},
                {"cc", clans_json(terms)}};
    json want = {{"dim", g.dim}, {"tau", g.tau}, {"hc_cell", g.hc_cell}, {"g_cell", g.g_cell}, {"cc", clans_json(g.cc)}};
    rec.expect(got == want, [&] { return json{{"row", g.index}, {"clan", g.clan.to_string()}, {"expected", want}, {"computed", got}}; });
    for (const auto& [t, m] : cyc.terms()) {
      rec.expect(m == 1, [&] { return json{{"row", g.index}, {"term", t.to_string()}, {"multiplicity", m}}; });
    }
  }
  rec.expect(listed.size() == (std::size_t{1} << n), [&] { return json{{"distinct_clans", listed.size()}}; });
  return rec.done();
}

std::vector<CheckResult> verify_cc(int n, CcEngine& engine) {
  require_range("verify_cc", n, 1, 10);
  std::vector<CheckResult> out;
  const auto clans = all_clans(n);
  const json params = {{"n", n}, {"clans", clans.size()}};

  std::map<Clan, CharacteristicCycle> cycles;
  for (const auto& c : clans) cycles.emplace(c, engine.cc(c));

  {
    Recorder rec(check_name("cc.multiplicity_one", n), params);
    for (const auto& [c, cyc] : cycles) {
      for (const auto& [t, m] : cyc.terms()) {
        rec.expect(m == 1, [&] { return json{{"clan", c.to_string()}, {"term", t.to_string()}, {"multiplicity", m}}; });
      }
    }
    out.push_back(rec.done());
  }
  {
    Recorder rec(check_name("cc.support_term", n), params);
    for (const auto& [c, cyc] : cycles) {
      rec.expect(cyc.multiplicity(c) == 1 && cyc.support() == c,
                 [&] { return json{{"clan", c.to_string()}, {"cc", terms_json(cyc)}}; });
    }
    out.push_back(rec.done());
  }
  {
    Recorder rec(check_name("cc.closure_containment", n), params);
    for (const auto& [c, cyc] : cycles) {
      for (const auto& [t, m] : cyc.terms()) {
        rec.expect(closure_leq(t, c), [&] { return json{{"clan", c.to_string()}, {"term", t.to_string()}}; });
      }
    }
    out.push_back(rec.done());
  }
  {
    Recorder rec(check_name("cc.tau_inclusion", n), params);
    for (const auto& [c, cyc] : cycles) {
      const auto tc = tau_clan(c);
      for (const auto& [t, m] : cyc.terms()) {
        const auto tt = tau_clan(t);
        rec.expect(includes(tt, tc), [&] {
          return json{{"clan", c.to_string()}, {"term", t.to_string()}, {"tau_clan", tc}, {"tau_term", tt}};
        });
      }
    }
    out.push_back(rec.done());
  }
  {
    Recorder rec(check_name("cc.narrowing", n), params);
    for (const auto& [c, cyc] : cycles) {
      const int r = rank_recursive(c);
      const int k = hc_cell_index(c);
      for (const auto& [t, m] : cyc.terms()) {
        const int rt = rank_recursive(t);
        const bool ok = (r == k) ? rt == k : (rt == k || rt == k - 1);
        rec.expect(ok, [&] {
          return json{{"clan", c.to_string()}, {"g_cell", r}, {"hc_cell", k}, {"term", t.to_string()}, {"term_g_cell", rt}};
        });
      }
    }
    out.push_back(rec.done());
  }
  {
    Recorder rec(check_name("cc.leading_terms", n), params);
    for (const auto& [c, cyc] : cycles) {
      const auto lead = engine.ltc(c);
      const bool should_equal = rank_recursive(c) == hc_cell_index(c);
      rec.expect(lead.size() > 0 && (lead == cyc) == should_equal, [&] {
        return json{{"clan", c.to_string()},
                    {"cc", terms_json(cyc)},
                    {"ltc", terms_json(lead)},
                    {"expected_equal", should_equal}};
      });
    }
    out.push_back(rec.done());
  }
  {
    Recorder rec(check_name("cc.case3", n), params);
    std::map<Clan, Clan> partners;
    for (const auto& [c, cyc] : cycles) {
      const int kase = CcEngine::recursion_case(c);
      const bool top_even = n % 2 == 0 && n >= 2 && c.number(1) == 1 && hc_cell_index(c) == n;
      rec.expect((kase == 3) == top_even,
                 [&] { return json{{"clan", c.to_string()}, {"case", kase}, {"head_one_in_even_top_cell", top_even}}; });
      const auto partner = CcEngine::annihilator_partner(c);
      rec.expect(partner.has_value() == (kase == 3), [&] { return json{{"clan", c.to_string()}, {"case", kase}}; });
      if (kase != 3 || !partner) continue;
      const auto tail = decompose(c).tail;
      std::vector<Clan> head_plus;
      for (const auto& t : term_set(engine.cc(tail))) head_plus.push_back(compose(Head::Plus, t));
      std::sort(head_plus.begin(), head_plus.end());
      const auto lead = term_set(engine.ltc(c));
      rec.expect(lead == head_plus, [&] {
        return json{{"clan", c.to_string()}, {"ltc", clans_json(lead)}, {"head_plus_set", clans_json(head_plus)}};
      });
      const auto partner_terms = term_set(engine.cc(*partner));
      rec.expect(lead == partner_terms && partner->is_plus(1), [&] {
        return json{{"clan", c.to_string()}, {"partner", partner->to_string()}, {"ltc", clans_json(lead)},
                    {"partner_cc", clans_json(partner_terms)}};
      });
      const auto [it, fresh] = partners.emplace(*partner, c);
      rec.expect(fresh, [&] {
        return json{{"partner", partner->to_string()}, {"clan", c.to_string()}, {"other_clan", it->second.to_string()}};
      });
    }
    out.push_back(rec.done());
  }
  {
    Recorder rec(check_name("cc.smooth_singletons", n), params);
    for (int l = 0; l <= n; ++l) {
      std::vector<int> slots(static_cast<std::size_t>(n), Clan::kPlus);
      for (int i = l; i < n; ++i) slots[static_cast<std::size_t>(i)] = i - l + 1;
      const auto c = Clan::from_slots(slots);
      const auto cyc = engine.cc(c);
      rec.expect(cyc.size() == 1 && cyc.contains(c),
                 [&] { return json{{"l", l}, {"clan", c.to_string()}, {"cc", terms_json(cyc)}}; });
    }
    out.push_back(rec.done());
  }

  if (n <= 7) {
    {
      Recorder rec(check_name("clan.bijection", n), params);
      for (const auto& c : clans) {
        const auto w = w_from_clan(c);
        rec.expect(in_script_w(w) && clan_from_w(w) == c && tau_clan(c) == tau(w) &&
                       plus_prefix_counts(c) == a_vector(w) && dim(c) == length(w),
                   [&] { return json{{"clan", c.to_string()}, {"w", w.to_string()}}; });
        if (n >= 2) {
          const auto [head, tail] = decompose(c);
          const auto w_tail = embed_fixing_one(w_from_clan(tail));
          const auto lifted = lift_w(head, w_tail);
          rec.expect(lifted == w && compose(head, tail) == c, [&] {
            return json{{"clan", c.to_string()}, {"w", w.to_string()}, {"lifted", lifted.to_string()}};
          });
        }
      }
      out.push_back(rec.done());
    }
    {
      Recorder rec(check_name("clan.t_op_weyl", n), params);
      for (const auto& c : clans) {
        for (bool equal : {true, false}) {
          for (const auto& [j, k] : operator_pairs(n, equal)) {
            auto clan_side = t_op(c, j, k);
            if (clan_side) std::sort(clan_side->begin(), clan_side->end());
            std::optional<std::vector<Clan>> weyl_side;
            std::string error;
            try {
              weyl_side = t_op_weyl(c, j, k);
            } catch (const std::logic_error& e) {
              error = e.what();
            }
            rec.expect(error.empty() && clan_side == weyl_side, [&] {
              return json{{"clan", c.to_string()},
                          {"op", op_name(j, k)},
                          {"clan_rule", clan_side ? clans_json(*clan_side) : json(nullptr)},
                          {"weyl_rule", weyl_side ? clans_json(*weyl_side) : json(nullptr)},
                          {"error", error}};
            });
            if (!clan_side) continue;
            for (const auto& r : *clan_side) {
              const auto tr = tau_clan(r);
              rec.expect(contains(tr, j) && !contains(tr, k),
                         [&] { return json{{"clan", c.to_string()}, {"op", op_name(j, k)}, {"result", r.to_string()}}; });
            }
            if (equal) {
              const auto back = t_op(clan_side->front(), k, j);
              rec.expect(back && back->size() == 1 && back->front() == c, [&] {
                return json{{"clan", c.to_string()}, {"op", op_name(j, k)}, {"image", clan_side->front().to_string()},
                            {"inverse", back ? clans_json(*back) : json(nullptr)}};
              });
            }
          }
        }
      }
      out.push_back(rec.done());
    }
    {
      Recorder rec(check_name("cc.t_op_propagation_equal_length", n), params);
      for (const auto& [c, cyc] : cycles) {
        for (const auto& [j, k] : operator_pairs(n, true)) {
          const auto tc = t_op(c, j, k);
          if (!tc) continue;
          const auto& target = cycles.at(tc->front());
          for (const auto& [c1, m] : cyc.terms()) {
            const auto tc1 = t_op(c1, j, k);
            if (!tc1) continue;
            const int m2 = target.multiplicity(tc1->front());
            rec.expect(m2 == m, [&] {
              return json{{"clan", c.to_string()}, {"term", c1.to_string()}, {"op", op_name(j, k)},
                          {"image", tc->front().to_string()}, {"term_image", tc1->front().to_string()},
                          {"multiplicity", m}, {"image_multiplicity", m2}};
            });
          }
        }
      }
      out.push_back(rec.done());
    }
    {
      Recorder rec(check_name("cc.t_op_propagation_unequal_length", n), params);
      for (const auto& [c, cyc] : cycles) {
        for (const auto& [j, k] : operator_pairs(n, false)) {
          const auto tc = t_op(c, j, k);
          if (!tc) continue;
          for (const auto& [c1, m] : cyc.terms()) {
            const auto tc1 = t_op(c1, j, k);
            if (!tc1) continue;
            for (const auto& y : *tc1) {
              const bool found = std::any_of(tc->begin(), tc->end(), [&](const Clan& w2) { return cycles.at(w2).contains(y); });
              rec.expect(found, [&] {
                return json{{"clan", c.to_string()}, {"term", c1.to_string()}, {"op", op_name(j, k)},
                            {"term_image", y.to_string()}, {"images", clans_json(*tc)}};
              });
            }
          }
        }
      }
      out.push_back(rec.done());
    }
  }

  if (n >= 2 && n <= 4) out.push_back(verify_golden(n, engine));
  return out;
}

// ---------------------------------------------------------------- driver

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.n_min < 1 || options.n_min > options.n_max || options.n_max > 10) {
    throw std::invalid_argument("verification needs 1 <= n_min <= n_max <= 10");
  }
  if (!ff::is_prime(options.oracle.prime)) throw std::invalid_argument("oracle modulus must be prime");
  if (options.oracle.trials < 1) throw std::invalid_argument("trials must be positive");

  using Task = std::function<std::vector<CheckResult>()>;
  std::vector<Task> tasks;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    if (n <= 7) {
      tasks.emplace_back([n] { return verify_bruhat(n); });
      tasks.emplace_back([n, &options] { return verify_ranks(n, options.oracle, options.seed_count); });
    }
    tasks.emplace_back([n] { return verify_cells(n); });
    tasks.emplace_back([n] { return verify_cc(n); });
  }

  std::vector<std::vector<CheckResult>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = options.parallel ? std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u)) : 1u;
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerificationReport report(options);
  for (auto& r : results) report.add(std::move(r));
  report.finalize();
  return report;
}

}  // namespace hwcc
