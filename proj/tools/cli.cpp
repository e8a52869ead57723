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

#include "commconf/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "commconf/conf_characters.hpp"
#include "commconf/errors.hpp"
#include "commconf/graded_ring.hpp"
#include "commconf/output.hpp"

namespace commconf {
namespace {

constexpr int kUsage = 2;

const std::vector<std::string> kTable1Groups = {"U2", "S1xSU2", "SU3", "Sp2"};
const std::vector<std::string> kTable2Groups = {"S1xS1", "U2", "S1xSU2", "SU3", "Sp2"};

struct Globals {
  Format format = Format::Markdown;
  Convention convention = Convention::Derived;
};

std::string emit(const Globals& g, const nlohmann::json& doc, const Grid& grid) {
  switch (g.format) {
    case Format::Json: return emit_json(doc);
    case Format::Csv: return render_csv(grid);
    case Format::Markdown: break;
  }
  return render_markdown(grid);
}

// One table per (group, space), k = 2.
CohomologyTable character_table(const std::string& group, const GradedCharacter& x, const IrreducibleCatalog& cat,
                                Convention c) {
  CohomologyTable t;
  t.group = group;
  t.convention = c;
  const auto dims = x.dimensions();
  const auto dec = decompose(x, cat);
  for (std::size_t n = 0; n < dims.size(); ++n) {
    t.rows.push_back({static_cast<int>(n), dims[n], dec[n]});
    t.euler_characteristic += (n % 2 == 0 ? 1 : -1) * dims[n];
  }
  return t;
}

std::string cmd_table1(const Globals& g) {
  nlohmann::json tables = nlohmann::json::array();
  std::string md;
  Grid csv{{"group", "space", "n", "dimension", "decomposition"}, {}};
  for (const auto& group : kTable1Groups) {
    const WeylDatum d = parse_datum(group);
    const auto conf = character_table(group, conf2_torus(d), *d.catalog(), g.convention);
    const auto flag = character_table(group, flag_character(d, g.convention), *d.catalog(), g.convention);
    for (const auto& [space, t] : {std::pair{"Conf2(T)", &conf}, std::pair{"G/T", &flag}}) {
      auto j = table_to_json(*t);
      j["space"] = space;
      tables.push_back(std::move(j));
      for (const auto& r : t->rows)
        csv.rows.push_back({group, space, std::to_string(r.degree), std::to_string(r.dimension),
                            render_decomposition(*r.decomposition)});
    }
    Grid grid{{"n", "Conf2(T)", "G/T"}, {}};
    for (std::size_t n = 0; n < std::max(conf.rows.size(), flag.rows.size()); ++n)
      grid.rows.push_back({std::to_string(n),
                           n < conf.rows.size() ? render_decomposition(*conf.rows[n].decomposition) : "",
                           n < flag.rows.size() ? render_decomposition(*flag.rows[n].decomposition) : ""});
    md += (md.empty() ? "" : "\n") + std::string("### ") + group + "\n\n" + render_markdown(grid);
  }
  if (g.format == Format::Json)
    return emit_json({{"command", "table1"}, {"convention", to_string(g.convention)}, {"tables", std::move(tables)}});
  return g.format == Format::Csv ? render_csv(csv) : md;
}

std::string cmd_table2(const Globals& g) {
  std::vector<CohomologyTable> tables;
  nlohmann::json docs = nlohmann::json::array();
  for (const auto& group : kTable2Groups) {
    tables.push_back(conf_ab_table(parse_datum(group), 2, g.convention));
    docs.push_back(table_to_json(tables.back()));
  }
  return emit(g, {{"command", "table2"}, {"convention", to_string(g.convention)}, {"tables", std::move(docs)}},
              dimension_grid(tables));
}

std::string cmd_conf3(const Globals& g) {
  const auto t = conf_ab_table(parse_datum("U2"), 3, g.convention);
  return emit(g, table_to_json(t), table_grid(t));
}

std::string to_decimal(const Integer& z) { return z.get_str(); }

std::string cmd_circle(const Globals& g, int k) {
  const auto c = circle_conf(k);
  const nlohmann::json doc = {{"command", "circle"},
                              {"k", k},
                              {"components", c.components.get_ui()},
                              {"orbits", c.orbits.get_ui()},
                              {"free_involution", c.free_involution},
                              {"b0", c.b0.get_ui()},
                              {"b1", c.b1.get_ui()}};
  Grid grid{{"k", "components", "orbits", "free involution", "b0", "b1"},
            {{std::to_string(k), to_decimal(c.components), to_decimal(c.orbits), c.free_involution ? "yes" : "no",
              to_decimal(c.b0), to_decimal(c.b1)}}};
  return emit(g, doc, grid);
}

std::string cmd_su2(const Globals& g, int k) {
  const auto s = su2_conf(k);
  nlohmann::json betti = nlohmann::json::array();
  Grid grid{{"n", "betti"}, {}};
  for (std::size_t i = 0; i < s.betti.size(); ++i) {
    betti.push_back(s.betti[i].get_ui());
    grid.rows.push_back({std::to_string(i), to_decimal(s.betti[i])});
  }
  const nlohmann::json doc = {{"command", "su2"},   {"k", k}, {"shape", to_string(s.shape)},
                              {"copies", s.copies.get_ui()}, {"betti", std::move(betti)}};
  if (g.format == Format::Markdown)
    return "k = " + std::to_string(k) + ": " + to_string(s.shape) + ", " + to_decimal(s.copies) + " cop" +
           (s.copies == 1 ? "y" : "ies") + "\n\n" + render_markdown(grid);
  return emit(g, doc, grid);
}

std::string cmd_ring(const Globals& g, const std::string& group, bool unordered) {
  const bool paper = g.convention == Convention::Paper;
  RingPresentation ring;
  GeneratorAutomorphism swap;
  RingPresentation quotient;
  std::string datum;
  if (group == "u2") {
    ring = u2_ring();
    swap = u2_ring_swap();
    quotient = exterior_ring({{"r1", 1}, {"s3", 3}});
    datum = "U2";
  } else {
    ring = s1xsu2_ring(paper);
    swap = s1xsu2_ring_swap(ring);
    quotient = paper ? exterior_ring({{"a1", 1}, {"u1", 1}, {"v3", 3}}) : exterior_ring({{"u1", 1}, {"v3", 3}});
    datum = "S1xSU2";
  }
  const RingPresentation& shown = unordered ? quotient : ring;
  auto trim = [](std::vector<long> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  const auto series = trim(hilbert_series(shown, shown.default_max_degree()));
  nlohmann::json doc = {{"command", "ring"},
                        {"group", datum},
                        {"convention", to_string(g.convention)},
                        {"unordered", unordered},
                        {"presentation", shown.to_json()},
                        {"hilbert_series", series}};
  Grid grid{{"n", "dimension"}, {}};
  if (unordered) {
    const auto inv = trim(invariant_subring_dims(ring, swap, ring.default_max_degree()));
    const auto model = unordered_conf2_dims(parse_datum(datum), g.convention);
    doc["invariant_subring"] = inv;
    doc["model"] = model;
    grid.header = {"n", "exterior", "invariant subring", "model"};
    const std::size_t h = std::max({series.size(), inv.size(), model.size()});
    auto cell = [](const std::vector<long>& v, std::size_t n) { return n < v.size() ? std::to_string(v[n]) : "0"; };
    for (std::size_t n = 0; n < h; ++n) grid.rows.push_back({std::to_string(n), cell(series, n), cell(inv, n), cell(model, n)});
  } else {
    for (std::size_t n = 0; n < series.size(); ++n) grid.rows.push_back({std::to_string(n), std::to_string(series[n])});
  }
  if (g.format != Format::Markdown) return emit(g, doc, grid);
  std::ostringstream os;
  os << "generators:";
  for (const auto& x : shown.generators()) os << " " << x.label << " (degree " << x.degree << ")";
  os << "\nrelations:";
  if (shown.forbidden().empty()) os << " none";
  for (const auto& [a, b] : shown.forbidden())
    os << " " << shown.generators()[a].label << "·" << shown.generators()[b].label << " = 0";
  os << "\n\n" << render_markdown(grid);
  return os.str();
}

std::string cmd_bound(const Globals& g, const std::string& family, int degree, int k) {
  const long b = stable_bound({parse_family(family), degree, k});
  if (g.format == Format::Markdown) return std::to_string(b) + "\n";
  return emit(g, {{"command", "bound"}, {"family", family}, {"degree", degree}, {"k", k}, {"bound", b}},
              Grid{{"family", "degree", "k", "bound"}, {{family, std::to_string(degree), std::to_string(k), std::to_string(b)}}});
}

// TAG=d1,d2,...
void add_degree_override(DegreeCatalog& catalog, const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("expected TAG=d1,d2,...: " + arg);
  std::vector<int> degrees;
  std::stringstream ss(arg.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size() || v <= 0) throw ParseError("bad degree '" + item + "' in " + arg);
    degrees.push_back(v);
  }
  catalog.overrides[arg.substr(0, eq)] = std::move(degrees);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of spaces of commuting elements in compact Lie groups", "commconf"};
  app.require_subcommand(1);
  std::string format = "md", convention = "derived";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "json", "csv"}));
  app.add_option("--convention", convention, "S1 factor convention for G/T")
      ->check(CLI::IsMember({"paper", "derived"}));

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  sub("table1", "Conf2(T) and G/T decomposition columns");
  sub("table2", "Betti numbers of Conf2^ab(G)");
  sub("conf3-u2", "Betti numbers of Conf3^ab(U2)");
  int k = 0, degree = 0;
  sub("circle", "Components of Conf_k(S1)")->add_option("--k", k)->required()->check(CLI::Range(2, 20));
  sub("su2", "Cohomology of Conf_k^ab(SU2)")->add_option("--k", k)->required()->check(CLI::Range(1, 20));
  std::string group, family;
  bool unordered = false;
  auto* ring = sub("ring", "Ring presentation and Hilbert series");
  ring->add_option("--group", group)->required()->check(CLI::IsMember({"u2", "s1xsu2"}));
  ring->add_flag("--unordered", unordered, "Show the swap-invariant quotient");
  auto* bound = sub("bound", "Homological stability bound");
  bound->add_option("--family", family)->required()->check(CLI::IsMember({"u", "su", "sp"}));
  bound->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  bound->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  std::vector<std::string> overrides;
  sub("verify", "Recompute and check every table")
      ->add_option("--degrees", overrides, "Replace fundamental degrees, TAG=d1,d2,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  Globals g{parse_format(format), parse_convention(convention)};
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "table1") {
      out << cmd_table1(g);
    } else if (cmd == "table2") {
      out << cmd_table2(g);
    } else if (cmd == "conf3-u2") {
      out << cmd_conf3(g);
    } else if (cmd == "circle") {
      out << cmd_circle(g, k);
    } else if (cmd == "su2") {
      out << cmd_su2(g, k);
    } else if (cmd == "ring") {
      out << cmd_ring(g, group, unordered);
    } else if (cmd == "bound") {
      out << cmd_bound(g, family, degree, k);
    } else if (cmd == "verify") {
      DegreeCatalog catalog;
      try {
        for (const auto& o : overrides) add_degree_override(catalog, o);
      } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
      }
      const auto report = emit_verify_report(verify_all(g.convention, catalog), g.format);
      out << report.text;
      return report.exit_code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace commconf
