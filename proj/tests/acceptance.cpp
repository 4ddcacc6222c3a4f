// End-to-end acceptance run. Prints one PASS/FAIL line per criterion with its
// wall time and limit; exits non-zero if any criterion fails.
//
// usage: hwcc-acceptance <path-to-hwcc-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hwcc/golden.hpp"
#include "hwcc/oracle.hpp"

using namespace hwcc;
using json = nlohmann::json;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string cli_path;

// Runs the CLI and returns stdout; exit status in *status.
std::string run_cli(const std::string& args, int* status) {
  const std::string cmd = "\"" + cli_path + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int rc = pclose(pipe);
  *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

void absorb(Outcome& o, const std::vector<CheckResult>& checks, const std::function<bool(const std::string&)>& keep) {
  for (const auto& c : checks) {
    if (keep(c.name) && !c.passed) o.fail(c.name + " " + c.counterexample.dump());
  }
}

bool all(const std::string&) { return true; }

Outcome golden_tables() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    int status = 0;
    const auto out = run_cli("enumerate --n " + std::to_string(n) + " --format json", &status);
    if (status != 0) {
      o.fail("enumerate --n " + std::to_string(n) + " exited " + std::to_string(status));
      continue;
    }
    const auto doc = json::parse(out);
    std::map<std::string, json> by_clan;
    for (const auto& r : doc["rows"]) by_clan[r["clan"].get<std::string>()] = r;
    const auto& golden = golden_table(n);
    if (by_clan.size() != golden.size() || doc["rows"].size() != golden.size()) {
      o.fail("row count differs for n=" + std::to_string(n));
      continue;
    }
    for (const auto& g : golden) {
      const auto it = by_clan.find(g.clan.to_string());
      if (it == by_clan.end()) {
        o.fail("missing clan " + g.clan.to_string());
        continue;
      }
      const auto& r = it->second;
      std::vector<std::string> want_cc;
      for (const auto& t : g.cc) want_cc.push_back(t.to_string());
      if (r["dim"] != g.dim || r["tau"] != json(g.tau) || r["hc_cell"] != g.hc_cell || r["g_cell"] != g.g_cell ||
          r["cc"] != json(want_cc)) {
        o.fail("row " + std::to_string(g.index) + " of n=" + std::to_string(n) + ": " + r.dump());
      }
    }
  }
  return o;
}

Outcome counting() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) absorb(o, verify_cells(n), all);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  OracleConfig cfg;  // five trials, 2^61 - 1
  for (int n = 1; n <= 7; ++n) {
    absorb(o, verify_ranks(n, cfg, 3),
           [](const std::string& name) { return name.rfind("ranks.oracle", 0) == 0 || name.rfind("ranks.seed", 0) == 0; });
  }
  return o;
}

Outcome order_equivalence() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) absorb(o, verify_bruhat(n), all);
  return o;
}

Outcome cc_suite() {
  Outcome o;
  CcEngine engine;
  for (int n = 1; n <= 10; ++n) {
    absorb(o, verify_cc(n, engine), [](const std::string& name) { return name.rfind("cc.smooth", 0) != 0; });
  }
  return o;
}

Outcome smooth_singletons() {
  Outcome o;
  CcEngine engine;
  for (int n = 1; n <= 10; ++n) {
    for (int l = 0; l <= n; ++l) {
      std::vector<int> raw(static_cast<std::size_t>(n), 0);
      for (int i = l; i < n; ++i) raw[static_cast<std::size_t>(i)] = i - l + 1;
      const auto c = Clan::canonical(raw);
      const auto cyc = engine.cc(c);
      if (cyc.size() != 1 || !cyc.contains(c)) o.fail(c.to_string() + " has " + std::to_string(cyc.size()) + " terms");
    }
  }
  return o;
}

Outcome scale_check() {
  Outcome o;
  std::mt19937_64 rng(60);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> raw(60);
  for (auto& s : raw) s = coin(rng) ? 1 : 0;
  const auto c = Clan::canonical(raw);

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  const auto out = run_cli("clan " + c.to_token_string() + " --format json", &status);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (status != 0) {
    o.fail("clan command exited " + std::to_string(status));
    return o;
  }
  if (secs >= 1.0) o.fail("clan command took " + std::to_string(secs) + " s");

  const auto row = json::parse(out);
  if (row["n"] != 60 || row["clan"] != c.to_string()) o.fail("unexpected record header");
  const auto w = w_from_clan(c);
  const auto tw = tau(w);
  std::size_t terms = 0;
  for (const auto& t : row["cc"]) {
    const auto tc = Clan::parse(t.get<std::string>());
    const auto wt = w_from_clan(tc);
    if (!bruhat_leq_avector(wt, w)) o.fail("term " + tc.to_string() + " not in the closure");
    const auto tt = tau(wt);
    if (!std::includes(tt.begin(), tt.end(), tw.begin(), tw.end())) o.fail("term " + tc.to_string() + " loses tau");
    ++terms;
  }
  if (terms == 0 || row["cc"][0] != c.to_string()) o.fail("support term missing");
  if (o.passed) o.detail = c.to_string() + ", " + std::to_string(terms) + " terms";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: hwcc-acceptance <path-to-hwcc-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0: no limit
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "golden tables n=2,3,4 via enumerate", 1.0, golden_tables},
      {2, "cell counting identities n<=12", 5.0, counting},
      {3, "rank oracle equals recursion n<=7, 3 seeds", 30.0, oracle_equivalence},
      {4, "Bruhat order equivalences n<=5 and s_op reachability n<=7", 30.0, order_equivalence},
      {5, "characteristic cycle invariants n<=10", 60.0, cc_suite},
      {6, "smooth supports give single terms n<=10", 0.0, smooth_singletons},
      {7, "random n=60 clan record under 1 s", 0.0, scale_check},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0 && secs >= cr.limit_s) o.fail("over time limit");
    std::ostringstream line;
    line << (o.passed ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << std::fixed;
    line.precision(3);
    line << secs << " s";
    if (cr.limit_s > 0) line << ", limit " << cr.limit_s << " s";
    line << ")";
    if (!o.detail.empty()) line << " " << o.detail;
    std::cout << line.str() << std::endl;
    failures += o.passed ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
