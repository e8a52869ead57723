// Copyright 2026 The commconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commconf/output.hpp"

#include <sstream>

#include "commconf/errors.hpp"

namespace commconf {

Format parse_format(std::string_view s) {
  if (s == "md") return Format::Markdown;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ParseError("unknown format: " + std::string(s));
}

std::string render_markdown(const Grid& g) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << c << " |";
    os << "\n";
  };
  line(g.header);
  os << "|";
  for (std::size_t i = 0; i < g.header.size(); ++i) os << (i == 0 ? " --- |" : " ---: |");
  os << "\n";
  for (const auto& r : g.rows) line(r);
  return os.str();
}

namespace {

std::string csv_cell(const std::string& c) {
  if (c.find_first_of(",\"\n") == std::string::npos) return c;
  std::string q = "\"";
  for (char ch : c) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string render_csv(const Grid& g) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
  };
  line(g.header);
  for (const auto& r : g.rows) line(r);
  return os.str();
}

nlohmann::json table_to_json(const CohomologyTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json row = {{"degree", r.degree}, {"dimension", r.dimension}};
    if (r.decomposition) {
      nlohmann::json d = nlohmann::json::array();
      for (const auto& m : *r.decomposition) d.push_back({{"irrep", m.label}, {"mult", m.mult}});
      row["decomposition"] = std::move(d);
    }
    rows.push_back(std::move(row));
  }
  return {{"group", t.group}, {"k", t.k}, {"convention", to_string(t.convention)}, {"rows", std::move(rows)}};
}

CohomologyTable table_from_json(const nlohmann::json& j) {
  try {
    CohomologyTable t;
    t.group = j.at("group").get<std::string>();
    t.k = j.at("k").get<int>();
    t.convention = parse_convention(j.at("convention").get<std::string>());
    for (const auto& r : j.at("rows")) {
      TableRow row;
      row.degree = r.at("degree").get<int>();
      row.dimension = r.at("dimension").get<long>();
      if (r.contains("decomposition")) {
        Decomposition d;
        for (const auto& m : r["decomposition"]) d.push_back({m.at("irrep").get<std::string>(), m.at("mult").get<long>()});
        row.decomposition = std::move(d);
      }
      t.euler_characteristic += (row.degree % 2 == 0 ? 1 : -1) * row.dimension;
      t.rows.push_back(std::move(row));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed table document: ") + e.what());
  }
}

std::string emit_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

Grid dimension_grid(const std::vector<CohomologyTable>& tables) {
  Grid g;
  g.header.push_back("n");
  std::size_t height = 0;
  for (const auto& t : tables) {
    g.header.push_back(t.group);
    height = std::max(height, t.rows.size());
  }
  for (std::size_t n = 0; n < height; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& t : tables) row.push_back(n < t.rows.size() ? std::to_string(t.rows[n].dimension) : "");
    g.rows.push_back(std::move(row));
  }
  return g;
}

Grid table_grid(const CohomologyTable& t) {
  Grid g{{"n", "dimension", "decomposition"}, {}};
  for (const auto& r : t.rows)
    g.rows.push_back({std::to_string(r.degree), std::to_string(r.dimension),
                      r.decomposition ? render_decomposition(*r.decomposition) : ""});
  return g;
}

VerifyOutput emit_verify_report(const VerifyReport& report, Format format) {
  const std::size_t pass = report.count(CheckStatus::Pass), fail = report.count(CheckStatus::Fail),
                    warn = report.count(CheckStatus::Warn);
  VerifyOutput out;
  out.exit_code = fail > 0 ? 1 : 0;
  if (format == Format::Json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"status", to_string(c.status)}, {"name", c.name}, {"expected", c.expected}, {"got", c.got}});
    out.text = emit_json({{"command", "verify"},
                          {"convention", to_string(report.convention)},
                          {"checks", std::move(checks)},
                          {"summary", {{"checks", report.checks.size()}, {"pass", pass}, {"fail", fail}, {"warn", warn}}}});
    return out;
  }
  if (format == Format::Csv) {
    Grid g{{"status", "name", "expected", "got"}, {}};
    for (const auto& c : report.checks) g.rows.push_back({to_string(c.status), c.name, c.expected, c.got});
    out.text = render_csv(g);
    return out;
  }
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << to_string(c.status) << "  " << c.name;
    if (c.status == CheckStatus::Pass || c.expected.empty())
      os << ": " << c.got;
    else
      os << ": expected " << c.expected << "; got " << c.got;
    os << "\n";
  }
  os << report.checks.size() << " checks [" << to_string(report.convention) << "]: " << pass << " PASS, " << fail
     << " FAIL, " << warn << " WARN\n";
  out.text = os.str();
  return out;
}

}  // namespace commconf
