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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "commconf/conf_ab.hpp"
#include "commconf/verify.hpp"

namespace commconf {

enum class Format { Markdown, Json, Csv };
Format parse_format(std::string_view s);

/// A rectangular table of already-rendered cells.
struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_markdown(const Grid& g);
/// RFC 4180 quoting: cells containing ',', '"' or a newline are quoted.
std::string render_csv(const Grid& g);

/// {"group", "k", "convention", "rows": [{"degree", "dimension",
/// "decomposition": [{"irrep", "mult"}]}]}; "decomposition" is omitted
/// when the table carries none.
nlohmann::json table_to_json(const CohomologyTable& t);
CohomologyTable table_from_json(const nlohmann::json& j);

/// Sorted keys, two-space indent, trailing newline. Parsing the result and
/// emitting again reproduces it byte for byte.
std::string emit_json(const nlohmann::json& doc);

/// Degree rows against one column per table, cells "" past a table's top.
Grid dimension_grid(const std::vector<CohomologyTable>& tables);
/// degree | dimension | decomposition for a single table.
Grid table_grid(const CohomologyTable& t);

struct VerifyOutput {
  std::string text;
  int exit_code = 0;
};

/// One line per check, then "<n> checks: <p> PASS, <f> FAIL, <w> WARN".
/// Exit code 1 if any check failed.
VerifyOutput emit_verify_report(const VerifyReport& report, Format format = Format::Markdown);

}  // namespace commconf
