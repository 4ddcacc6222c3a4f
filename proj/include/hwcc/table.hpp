#pragma once

// One record per highest weight module, and the three output formats the CLI
// emits. JSON is the format of record; csv and markdown carry the same fields.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hwcc/cc.hpp"

namespace hwcc {

inline constexpr std::string_view kTableSchema = "hwcc.table/1";
inline constexpr std::string_view kRowSchema = "hwcc.row/1";
inline constexpr std::string_view kCellsSchema = "hwcc.cells/1";

struct TableRow {
  Clan clan;
  SignedPermutation w;
  int dim = 0;
  TauSet tau;
  OrbitIndex hc_cell = 0;
  OrbitIndex g_cell = 0;
  OrbitIndex av = 0;
  std::vector<Clan> cc;
  std::vector<Clan> ltc;
  std::optional<Clan> annihilator_partner;
};

TableRow make_row(const Clan& c, CcEngine& engine = default_engine());

/// Orders by Harish-Chandra cell descending, dimension ascending, then clan.
bool table_order(const TableRow& a, const TableRow& b);

/// All 2^n rows in table_order. Throws std::invalid_argument unless 1 <= n <= 20.
std::vector<TableRow> enumerate_rows(int n, CcEngine& engine = default_engine());

inline constexpr int kMaxEnumerateRank = 20;

enum class Format { Json, Csv, Markdown };

/// "json", "csv", "md" or "markdown".
Format parse_format(std::string_view name);

nlohmann::json row_to_json(const TableRow& row);

void write_table(std::ostream& os, int n, const std::vector<TableRow>& rows, Format format);
void write_row(std::ostream& os, const TableRow& row, Format format);

/// Cell structure for rank n: Harish-Chandra cells with their geometric cells.
nlohmann::json cells_to_json(int n);
void write_cells(std::ostream& os, int n, Format format);

}  // namespace hwcc
