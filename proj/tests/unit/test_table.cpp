#include <doctest.h>

#include <sstream>

#include "hwcc/golden.hpp"
#include "hwcc/table.hpp"
#include "support.hpp"

using namespace hwcc;
using hwcc::test::C;

namespace {

// Minimal RFC 4180 reader for the test.
std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows(1);
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      rows.back().push_back(field);
      field.clear();
    } else if (ch == '\n') {
      rows.back().push_back(field);
      field.clear();
      rows.emplace_back();
    } else {
      field += ch;
    }
  }
  if (rows.back().empty()) rows.pop_back();
  return rows;
}

std::string join(const nlohmann::json& arr, const char* sep) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += sep;
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return s;
}

}  // namespace

TEST_CASE("row contents") {
  const auto row = make_row(C("1+2+"));
  CHECK(row.w.to_string() == "-1,4,-2,3");
  CHECK(row.dim == 12);
  CHECK(row.tau == TauSet{1, 3});
  CHECK(row.hc_cell == 4);
  CHECK(row.g_cell == 3);
  CHECK(row.av == 4);
  CHECK(row.cc.size() == 4);
  CHECK(row.ltc.size() == 2);
  CHECK(row.annihilator_partner == C("++1+"));
  const auto j = row_to_json(row);
  CHECK(j["clan"] == "1+2+");
  CHECK(j["cc"][0] == "1+2+");
  CHECK(row_to_json(make_row(C("12")))["annihilator_partner"].is_null());
}

TEST_CASE("enumeration order and size") {
  for (int n = 1; n <= 10; ++n) {
    const auto rows = enumerate_rows(n);
    CHECK(rows.size() == (std::size_t{1} << n));
    CHECK(std::is_sorted(rows.begin(), rows.end(), table_order));
  }
  const auto rows = enumerate_rows(4);
  CHECK(rows.front().clan == C("++++"));
  CHECK(rows.back().clan == C("1234"));
  CHECK_THROWS_AS(enumerate_rows(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_rows(21), std::invalid_argument);
}

TEST_CASE("enumeration reproduces the reference tables") {
  for (int n = 2; n <= 4; ++n) {
    std::map<Clan, TableRow> by_clan;
    for (auto& r : enumerate_rows(n)) by_clan.emplace(r.clan, r);
    const auto& golden = golden_table(n);
    REQUIRE(golden.size() == by_clan.size());
    for (const auto& g : golden) {
      const auto& r = by_clan.at(g.clan);
      CHECK(r.dim == g.dim);
      CHECK(r.tau == g.tau);
      CHECK(r.hc_cell == g.hc_cell);
      CHECK(r.g_cell == g.g_cell);
      CHECK(r.cc == g.cc);
    }
  }
}

TEST_CASE("formats carry identical content") {
  const int n = 4;
  const auto rows = enumerate_rows(n);
  std::ostringstream js, cs, md;
  write_table(js, n, rows, Format::Json);
  write_table(cs, n, rows, Format::Csv);
  write_table(md, n, rows, Format::Markdown);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["schema"] == std::string(kTableSchema));
  CHECK(doc["count"] == rows.size());
  const auto csv = read_csv(cs.str());
  REQUIRE(csv.size() == rows.size() + 1);
  CHECK(csv[0].size() == 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& j = doc["rows"][i];
    const auto& c = csv[i + 1];
    CHECK(c[0] == j["clan"]);
    CHECK(c[1] == j["w"]);
    CHECK(c[2] == std::to_string(j["dim"].get<int>()));
    CHECK(c[3] == join(j["tau"], ","));
    CHECK(c[4] == std::to_string(j["hc_cell"].get<int>()));
    CHECK(c[5] == std::to_string(j["g_cell"].get<int>()));
    CHECK(c[6] == std::to_string(j["av"].get<int>()));
    CHECK(c[7] == join(j["cc"], ";"));
    CHECK(c[8] == join(j["ltc"], ";"));
    CHECK(c[9] == (j["annihilator_partner"].is_null() ? std::string() : j["annihilator_partner"].get<std::string>()));
  }
  // Markdown: one table line per row holding the same fields.
  std::istringstream lines(md.str());
  std::string line;
  std::size_t data_lines = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("| ", 0) != 0 || line.rfind("| #", 0) == 0) continue;
    const auto& j = doc["rows"][data_lines];
    CHECK(line.find(" " + j["clan"].get<std::string>() + " ") != std::string::npos);
    CHECK(line.find("(" + j["w"].get<std::string>() + ")") != std::string::npos);
    ++data_lines;
  }
  CHECK(data_lines == rows.size());
}

TEST_CASE("single row output") {
  std::ostringstream os;
  write_row(os, make_row(C("1,2,+,3,4,+,+")), Format::Json);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["schema"] == std::string(kRowSchema));
  CHECK(j["w"] == "-1,-2,7,-3,-4,6,5");
  CHECK(j["n"] == 7);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("md") == Format::Markdown);
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("cells document") {
  const auto doc = cells_to_json(4);
  CHECK(doc["schema"] == std::string(kCellsSchema));
  CHECK(doc["total"] == 16);
  CHECK(doc["hc_cells"].size() == 3);
  CHECK(doc["hc_cells"][2]["k"] == 4);
  CHECK(doc["hc_cells"][2]["size"] == 10);
  CHECK(doc["geometric_cells"][3]["members"].size() == 4);
  std::ostringstream os;
  write_cells(os, 4, Format::Csv);
  CHECK(read_csv(os.str()).size() == 1 + 5 + 3);
}

TEST_CASE("golden parser") {
  const auto rows = parse_golden("# c\n1 | 1,+ | 3 | 1 | 2 | 1 | 1,+ ; +,+\n\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].cc.size() == 2);
  CHECK_THROWS_AS(parse_golden("1 | 1,+ | 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_golden("1 | 2,+ | 3 | 1 | 2 | 1 | 1,+"), std::invalid_argument);
  CHECK_THROWS_AS(golden_table(5), std::invalid_argument);
}
