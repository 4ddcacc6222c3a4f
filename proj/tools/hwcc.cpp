// hwcc: tables, single-clan reports, cell listings and the verification suite.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "hwcc/oracle.hpp"
#include "hwcc/table.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = 0;
  std::string format = "md";
  std::string out;
  std::string clan;
  int n_min = 1;
  int n_max = 10;
  int trials = hwcc::OracleConfig{}.trials;
  std::uint64_t seed = hwcc::OracleConfig{}.seed;
  std::uint64_t prime = hwcc::OracleConfig{}.prime;
  int seeds = 3;
  bool serial = false;
};

// Writes to --out when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md", "markdown"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to FILE instead of stdout");
}

int run_enumerate(const Options& o) {
  const auto rows = hwcc::enumerate_rows(o.n);
  Sink sink(o.out);
  hwcc::write_table(sink.stream(), o.n, rows, hwcc::parse_format(o.format));
  return 0;
}

int run_clan(const Options& o) {
  const auto c = hwcc::Clan::parse(o.clan);
  if (c.empty()) throw std::invalid_argument("empty clan");
  const auto row = hwcc::make_row(c);
  Sink sink(o.out);
  hwcc::write_row(sink.stream(), row, hwcc::parse_format(o.format));
  return 0;
}

int run_cells(const Options& o) {
  Sink sink(o.out);
  hwcc::write_cells(sink.stream(), o.n, hwcc::parse_format(o.format));
  return 0;
}

int run_verify(const Options& o) {
  hwcc::VerifyOptions v;
  v.oracle.prime = o.prime;
  v.oracle.trials = o.trials;
  v.oracle.seed = o.seed;
  v.seed_count = o.seeds;
  v.n_min = o.n_min;
  v.n_max = o.n_max;
  v.parallel = !o.serial;
  const auto report = hwcc::run_verification(v);
  Sink sink(o.out);
  if (hwcc::parse_format(o.format) == hwcc::Format::Json) {
    sink.stream() << report.to_json().dump(2) << '\n';
  } else {
    sink.stream() << report.summary();
  }
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic cycles of highest weight Harish-Chandra modules for Sp(2n,R)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI or TOML file with oracle parameters (trials, seed, prime, seeds)");

  Options o;
  app.add_option("--trials", o.trials, "Rank oracle trials per clan")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", o.seed, "Rank oracle seed")->capture_default_str();
  app.add_option("--prime", o.prime, "Rank oracle prime modulus, below 2^63")->capture_default_str();
  app.add_option("--seeds", o.seeds, "Number of consecutive seeds the rank oracle runs with")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "All 2^n records for rank n, in table order");
  enumerate->add_option("--n", o.n, "Rank, 1..20")->required();
  add_output_options(enumerate, o);

  auto* clan = app.add_subcommand("clan", "Full record for one clan, e.g. 1+2+ or 1,2,+,3,4,+,+");
  clan->add_option("clan", o.clan, "Clan text")->required();
  add_output_options(clan, o);

  auto* cells = app.add_subcommand("cells", "Geometric and Harish-Chandra cells for rank n");
  cells->add_option("--n", o.n, "Rank, 1..20")->required();
  add_output_options(cells, o);

  auto* verify = app.add_subcommand("verify", "Run the oracle suite; exit status 1 if any check fails");
  verify->add_option("--nmax", o.n_max, "Largest rank")->check(CLI::Range(1, 10))->capture_default_str();
  verify->add_option("--nmin", o.n_min, "Smallest rank")->check(CLI::Range(1, 10))->capture_default_str();
  verify->add_flag("--serial", o.serial, "Run checks on one thread");
  add_output_options(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(o);
    if (*clan) return run_clan(o);
    if (*cells) return run_cells(o);
    return run_verify(o);
  } catch (const hwcc::ClanError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
