#include "hwcc/golden.hpp"

#include <charconv>
#include <map>
#include <stdexcept>
#include <string>

namespace hwcc {

namespace detail {
extern const std::string_view kGoldenSp4;
extern const std::string_view kGoldenSp6;
extern const std::string_view kGoldenSp8;
}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int to_int(std::string_view s, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("golden line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::vector<GoldenRow> parse_golden(std::string_view text) {
  std::vector<GoldenRow> rows;
  int line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto fields = split(line, '|');
    if (fields.size() != 7) {
      throw std::invalid_argument("golden line " + std::to_string(line_no) + ": expected 7 fields");
    }
    GoldenRow row;
    row.index = to_int(fields[0], line_no);
    try {
      row.clan = Clan::parse(fields[1]);
      for (auto term : split(fields[6], ';')) row.cc.push_back(Clan::parse(term));
    } catch (const ClanError& e) {
      throw std::invalid_argument("golden line " + std::to_string(line_no) + ": " + e.what());
    }
    row.dim = to_int(fields[2], line_no);
    for (auto t : split(fields[3], ',')) row.tau.push_back(to_int(t, line_no));
    row.hc_cell = to_int(fields[4], line_no);
    row.g_cell = to_int(fields[5], line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool has_golden_table(int n) { return n >= 2 && n <= 4; }

const std::vector<GoldenRow>& golden_table(int n) {
  static const std::map<int, std::vector<GoldenRow>> tables = {
      {2, parse_golden(detail::kGoldenSp4)},
      {3, parse_golden(detail::kGoldenSp6)},
      {4, parse_golden(detail::kGoldenSp8)},
  };
  const auto it = tables.find(n);
  if (it == tables.end()) throw std::invalid_argument("no golden table for n=" + std::to_string(n));
  return it->second;
}

}  // namespace hwcc
