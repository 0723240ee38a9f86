// Copyright 2026 The knotdensity Authors.
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

#include "kd/census.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "kd/codec.hpp"
#include "kd/errors.hpp"
#include "kd/jones.hpp"
#include "parallel.hpp"

namespace kd {
namespace {

constexpr std::string_view kHeader = "name,crossings,dt,alternating,determinant,volume";

std::vector<std::string> split_fields(std::string_view line, int line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw SchemaError("line " + std::to_string(line_no) + ": unterminated quote");
  return fields;
}

std::string context(int line_no, const std::string& name) {
  return "line " + std::to_string(line_no) + " (" + name + "): ";
}

CensusEntry parse_row(const std::vector<std::string>& f, int line_no) {
  CensusEntry e;
  e.name = f[0];
  if (e.name.empty()) throw SchemaError("line " + std::to_string(line_no) + ": empty name");
  const std::string where = context(line_no, e.name);
  auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), e.crossings);
  if (ec != std::errc() || ptr != f[1].data() + f[1].size() || e.crossings < 0) {
    throw SchemaError(where + "bad crossing count '" + f[1] + "'");
  }
  e.dt = f[2];
  if (f[3] == "true") {
    e.alternating = true;
  } else if (f[3] != "false") {
    throw SchemaError(where + "alternating must be true or false");
  }
  if (!f[4].empty()) {
    try {
      e.determinant = BigInt(f[4]);
    } catch (const std::exception&) {
      throw SchemaError(where + "bad determinant '" + f[4] + "'");
    }
  }
  if (!f[5].empty()) {
    try {
      e.volume = Real::from_string(f[5], Real::kDefaultBits);
    } catch (const Error&) {
      throw SchemaError(where + "bad volume '" + f[5] + "'");
    }
    if (e.volume->sign() < 0) throw SchemaError(where + "negative volume");
  }
  return e;
}

}  // namespace

Diagram CensusEntry::diagram() const { return parse_dt(parse_dt_text(dt)); }

std::vector<CensusEntry> parse_census(std::string_view text, const CensusOptions& options) {
  std::vector<CensusEntry> entries;
  std::vector<int> line_numbers;
  int line_no = 0;
  bool seen_header = false;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != kHeader) throw SchemaError("census header must be '" + std::string(kHeader) + "'");
      seen_header = true;
      continue;
    }
    const auto fields = split_fields(line, line_no);
    if (fields.size() != 6) {
      throw SchemaError("line " + std::to_string(line_no) + ": expected 6 fields, got " +
                        std::to_string(fields.size()));
    }
    entries.push_back(parse_row(fields, line_no));
    line_numbers.push_back(line_no);
  }
  if (!seen_header) throw SchemaError("census is empty");

  // Every DT code must realize a diagram with the stated crossing count, and
  // stated determinants must match the computed ones.
  struct Checked {
    std::string problem;
    bool schema = false;
  };
  const auto checked = detail::parallel_map<Checked>(entries.size(), options.threads, [&](size_t i) {
    const CensusEntry& e = entries[i];
    const std::string where = context(line_numbers[i], e.name);
    Diagram d;
    try {
      d = e.diagram();
    } catch (const Error& err) {
      return Checked{where + "dt code does not parse: " + err.what(), true};
    }
    if (d.crossing_number() != e.crossings) {
      return Checked{where + "dt code has " + std::to_string(d.crossing_number()) +
                         " crossings, row states " + std::to_string(e.crossings),
                     true};
    }
    if (options.check_determinants && e.determinant) {
      const BigInt computed = goeritz_determinant(d);
      if (computed != *e.determinant) {
        return Checked{where + "stated determinant " + to_string(*e.determinant) +
                           " but computed " + to_string(computed),
                       false};
      }
    }
    return Checked{};
  });
  for (const auto& c : checked) {
    if (c.problem.empty()) continue;
    if (c.schema) throw SchemaError(c.problem);
    throw ValidationError(c.problem);
  }
  return entries;
}

std::vector<CensusEntry> load_census(const std::string& path, const CensusOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingDataError("cannot open census file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_census(buf.str(), options);
}

}  // namespace kd
