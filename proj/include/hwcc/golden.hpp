#pragma once

// Reference tables for n = 2, 3, 4, embedded at build time from data/golden.

#include <string_view>
#include <vector>

#include "hwcc/clan.hpp"
#include "hwcc/geometry.hpp"

namespace hwcc {

struct GoldenRow {
  int index = 0;
  Clan clan;
  int dim = 0;
  TauSet tau;
  OrbitIndex hc_cell = 0;
  OrbitIndex g_cell = 0;
  /// CC terms as listed, support first.
  std::vector<Clan> cc;
};

/// Lines "index | clan | dim | tau | hc | g | cc1 ; cc2 ...", '#' starts a
/// comment. Throws std::invalid_argument with the line number on bad input.
std::vector<GoldenRow> parse_golden(std::string_view text);

bool has_golden_table(int n);
/// Throws std::invalid_argument unless has_golden_table(n).
const std::vector<GoldenRow>& golden_table(int n);

}  // namespace hwcc
