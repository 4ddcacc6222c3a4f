#include "hwcc/table.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hwcc {

namespace {

std::string join(const std::vector<Clan>& clans, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < clans.size(); ++i) {
    if (i) s += sep;
    s += clans[i].to_string();
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string cycle_text(const std::vector<Clan>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    s += "T(" + terms[i].to_string() + ")";
  }
  return s;
}

const char* kCsvHeader = "clan,w,dim,tau,hc_cell,g_cell,av,cc,ltc,annihilator_partner";

void write_csv_row(std::ostream& os, const TableRow& r) {
  os << csv_field(r.clan.to_string()) << ',' << csv_field(r.w.to_string()) << ',' << r.dim << ','
     << csv_field(to_string(r.tau)) << ',' << r.hc_cell << ',' << r.g_cell << ',' << r.av << ','
     << csv_field(join(r.cc, ";")) << ',' << csv_field(join(r.ltc, ";")) << ','
     << (r.annihilator_partner ? csv_field(r.annihilator_partner->to_string()) : std::string()) << '\n';
}

const char* kMdHeader =
    "| # | clan | w | dim(Q) | tau | C_HC | C_g | AV | CC | LTC | partner |\n"
    "|---|------|---|--------|-----|------|-----|----|----|-----|---------|\n";

void write_md_row(std::ostream& os, std::size_t index, const TableRow& r) {
  os << "| " << index << " | " << r.clan.to_string() << " | (" << r.w.to_string() << ") | " << r.dim
     << " | " << to_string(r.tau) << " | " << r.hc_cell << " | " << r.g_cell << " | " << r.av << " | "
     << cycle_text(r.cc) << " | " << cycle_text(r.ltc) << " | "
     << (r.annihilator_partner ? r.annihilator_partner->to_string() : std::string("-")) << " |\n";
}

nlohmann::json clan_list(const std::vector<Clan>& clans) {
  auto arr = nlohmann::json::array();
  for (const auto& c : clans) arr.push_back(c.to_string());
  return arr;
}

}  // namespace

TableRow make_row(const Clan& c, CcEngine& engine) {
  TableRow r;
  r.clan = c;
  r.w = w_from_clan(c);
  r.dim = length(r.w);
  r.tau = tau_clan(c);
  r.g_cell = rank_recursive(c);
  r.hc_cell = hc_cell_index(c);
  r.av = av(c);
  r.cc = engine.cc(c).display_order();
  r.ltc = engine.ltc(c).display_order();
  r.annihilator_partner = CcEngine::annihilator_partner(c);
  return r;
}

bool table_order(const TableRow& a, const TableRow& b) {
  if (a.hc_cell != b.hc_cell) return a.hc_cell > b.hc_cell;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.clan < b.clan;
}

std::vector<TableRow> enumerate_rows(int n, CcEngine& engine) {
  if (n < 1 || n > kMaxEnumerateRank) {
    throw std::invalid_argument("enumerate supports 1 <= n <= " + std::to_string(kMaxEnumerateRank) +
                                "; use the clan command for single clans of larger rank");
  }
  std::vector<TableRow> rows;
  rows.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    rows.push_back(make_row(Clan::from_mask(n, mask), engine));
  }
  std::sort(rows.begin(), rows.end(), table_order);
  return rows;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md" || name == "markdown") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (json, csv, md)");
}

nlohmann::json row_to_json(const TableRow& r) {
  nlohmann::json j;
  j["clan"] = r.clan.to_string();
  j["w"] = r.w.to_string();
  j["dim"] = r.dim;
  j["tau"] = r.tau;
  j["hc_cell"] = r.hc_cell;
  j["g_cell"] = r.g_cell;
  j["av"] = r.av;
  j["cc"] = clan_list(r.cc);
  j["ltc"] = clan_list(r.ltc);
  j["annihilator_partner"] =
      r.annihilator_partner ? nlohmann::json(r.annihilator_partner->to_string()) : nlohmann::json(nullptr);
  return j;
}

void write_table(std::ostream& os, int n, const std::vector<TableRow>& rows, Format format) {
  switch (format) {
    case Format::Json: {
      nlohmann::json doc;
      doc["schema"] = kTableSchema;
      doc["n"] = n;
      doc["count"] = rows.size();
      auto arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back(row_to_json(r));
      doc["rows"] = std::move(arr);
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << kCsvHeader << '\n';
      for (const auto& r : rows) write_csv_row(os, r);
      break;
    case Format::Markdown: {
      os << "Sp(" << 2 * n << ",R), n=" << n << "\n\n" << kMdHeader;
      std::size_t index = 0;
      for (const auto& r : rows) write_md_row(os, ++index, r);
      break;
    }
  }
}

void write_row(std::ostream& os, const TableRow& row, Format format) {
  switch (format) {
    case Format::Json: {
      auto j = row_to_json(row);
      j["schema"] = kRowSchema;
      j["n"] = row.clan.size();
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << kCsvHeader << '\n';
      write_csv_row(os, row);
      break;
    case Format::Markdown:
      os << kMdHeader;
      write_md_row(os, 1, row);
      break;
  }
}

nlohmann::json cells_to_json(int n) {
  if (n < 1 || n > kMaxEnumerateRank) {
    throw std::invalid_argument("cells supports 1 <= n <= " + std::to_string(kMaxEnumerateRank));
  }
  nlohmann::json doc;
  doc["schema"] = kCellsSchema;
  doc["n"] = n;
  auto geometric = nlohmann::json::array();
  for (int k = 0; k <= n; ++k) {
    const auto members = geometric_cell_members(n, k);
    geometric.push_back({{"k", k},
                         {"size", members.size()},
                         {"springer_dim", springer_dim(n, k)},
                         {"members", clan_list(members)}});
  }
  auto hc = nlohmann::json::array();
  std::size_t total = 0;
  for (int k : legal_hc_indices(n)) {
    const auto members = hc_cell_members(n, k);
    total += members.size();
    auto parts = nlohmann::json::array({k});
    if (k > 0 && k % 2 == 0) parts.push_back(k - 1);
    hc.push_back({{"k", k},
                  {"size", members.size()},
                  {"cell_rep_dim", cell_rep_dim(n, k)},
                  {"geometric_cells", parts},
                  {"members", clan_list(members)}});
  }
  doc["geometric_cells"] = std::move(geometric);
  doc["hc_cells"] = std::move(hc);
  doc["total"] = total;
  return doc;
}

void write_cells(std::ostream& os, int n, Format format) {
  const auto doc = cells_to_json(n);
  const auto members_text = [](const nlohmann::json& arr) {
    std::string s;
    for (const auto& m : arr) {
      if (!s.empty()) s += ' ';
      s += m.get<std::string>();
    }
    return s;
  };
  switch (format) {
    case Format::Json:
      os << doc.dump(2) << '\n';
      break;
    case Format::Csv:
      os << "kind,k,size,dim,members\n";
      for (const auto& g : doc["geometric_cells"]) {
        os << "geometric," << g["k"] << ',' << g["size"] << ',' << g["springer_dim"] << ','
           << csv_field(members_text(g["members"])) << '\n';
      }
      for (const auto& h : doc["hc_cells"]) {
        os << "harish-chandra," << h["k"] << ',' << h["size"] << ',' << h["cell_rep_dim"] << ','
           << csv_field(members_text(h["members"])) << '\n';
      }
      break;
    case Format::Markdown:
      os << "Cells for Sp(" << 2 * n << ",R), n=" << n << "\n\n"
         << "| kind | k | size | dim | members |\n|------|---|------|-----|---------|\n";
      for (const auto& g : doc["geometric_cells"]) {
        os << "| geometric | " << g["k"] << " | " << g["size"] << " | " << g["springer_dim"] << " | "
           << members_text(g["members"]) << " |\n";
      }
      for (const auto& h : doc["hc_cells"]) {
        os << "| Harish-Chandra | " << h["k"] << " | " << h["size"] << " | " << h["cell_rep_dim"] << " | "
           << members_text(h["members"]) << " |\n";
      }
      os << "\ntotal: " << doc["total"] << '\n';
      break;
  }
}

}  // namespace hwcc
