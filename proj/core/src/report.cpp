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

#include "kd/report.hpp"

#include <map>
#include <sstream>
#include <type_traits>

#include <json.hpp>

namespace kd {
namespace {

using nlohmann::ordered_json;

constexpr int kDigits = 12;

ordered_json real_json(const Real& v) { return std::stod(format_real(v)); }

template <typename T>
std::string optional_cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, Real>) {
    return format_real(*v);
  } else {
    return std::to_string(*v);
  }
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::optional<Real> margin(const std::optional<Real>& density) {
  if (!density) return std::nullopt;
  return voct(density->bits()) - *density;
}

std::optional<Real> last_quantum(const DensityRecord& r) {
  if (r.quantum_densities.empty()) return std::nullopt;
  return r.quantum_densities.back().second;
}

}  // namespace

std::string format_real(const Real& v) { return v.to_string(kDigits); }

std::string density_csv(std::span<const DensityRecord> records) {
  std::ostringstream out;
  out << "id,crossings,det,mu,kh_rank,volume,det_density,jones_density,vol_density,kh_density,"
         "quantum_density,quantum_n,det_margin,jones_margin,flags\n";
  for (const auto& r : records) {
    const auto q = last_quantum(r);
    out << quote(r.id) << ',' << r.crossings << ',' << to_string(r.det) << ','
        << to_string(r.mu) << ',' << optional_cell(r.kh_rank) << ',' << optional_cell(r.volume)
        << ',' << optional_cell(r.det_density) << ',' << optional_cell(r.jones_density) << ','
        << optional_cell(r.vol_density) << ',' << optional_cell(r.kh_density) << ','
        << optional_cell(q) << ','
        << (q ? std::to_string(r.quantum_densities.back().first) : std::string()) << ','
        << optional_cell(margin(r.det_density)) << ',' << optional_cell(margin(r.jones_density))
        << ',' << quote(join(r.flags, "; ")) << '\n';
  }
  return out.str();
}

std::string density_json(const DensityRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["crossings"] = r.crossings;
  j["alternating"] = r.alternating;
  j["det"] = to_string(r.det);
  j["mu"] = to_string(r.mu);
  j["kh_rank"] = r.kh_rank ? ordered_json(*r.kh_rank) : ordered_json();
  j["volume"] = r.volume ? real_json(*r.volume) : ordered_json();
  ordered_json densities;
  auto put = [&](const char* key, const std::optional<Real>& v) {
    densities[key] = v ? real_json(*v) : ordered_json();
  };
  put("det", r.det_density);
  put("jones", r.jones_density);
  put("vol", r.vol_density);
  put("kh", r.kh_density);
  j["densities"] = densities;
  ordered_json kashaev = ordered_json::array();
  for (size_t i = 0; i < r.kashaev.size(); ++i) {
    const KashaevValue& v = r.kashaev[i];
    ordered_json row;
    row["n"] = v.n;
    row["abs"] = real_json(v.abs);
    row["error_bound"] = v.error_bound.to_double();
    for (const auto& [n, density] : r.quantum_densities) {
      if (n == v.n) row["quantum_density"] = real_json(density);
    }
    kashaev.push_back(row);
  }
  j["kashaev"] = kashaev;
  j["flags"] = r.flags;
  return j.dump(2) + "\n";
}

std::string sequence_csv(const SequenceReport& report) {
  std::ostringstream out;
  out << "family,index,crossings,det,density,residual\n";
  for (size_t i = 0; i < report.indices.size(); ++i) {
    out << quote(report.family) << ',' << report.indices[i] << ',' << report.crossings[i] << ','
        << to_string(report.determinants[i]) << ',' << format_real(report.densities[i]) << ','
        << format_real(report.residuals[i]) << '\n';
  }
  return out.str();
}

std::string sequence_json(const SequenceReport& report) {
  ordered_json j;
  j["family"] = report.family;
  j["terms"] = report.indices.size();
  j["first_index"] = report.indices.empty() ? ordered_json() : ordered_json(report.indices.front());
  j["last_index"] = report.indices.empty() ? ordered_json() : ordered_json(report.indices.back());
  j["last_density"] = report.densities.empty() ? ordered_json() : real_json(report.densities.back());
  j["target"] = real_json(report.target);
  j["limit"] = report.limit ? real_json(*report.limit) : ordered_json();
  const auto err = report.limit_error();
  j["limit_error"] = err ? real_json(*err) : ordered_json();
  j["strictly_increasing"] = report.strictly_increasing();
  j["residuals_decreasing"] = report.residuals_decreasing();
  return j.dump(2) + "\n";
}

std::string verification_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "id,crossings,value,bound,margin,pass,note\n";
  for (const auto& k : report.rows) {
    out << quote(k.id) << ',' << k.crossings << ',' << format_real(k.value) << ','
        << format_real(k.bound) << ',' << format_real(k.margin) << ','
        << (k.pass ? "true" : "false") << ',' << quote(k.note) << '\n';
  }
  return out.str();
}

std::string verification_json(const VerificationReport& report) {
  ordered_json j;
  j["check"] = report.check;
  j["checked"] = report.rows.size();
  j["passed"] = report.rows.size() - report.violations();
  j["violations"] = report.violations();
  j["skipped"] = report.skipped.size();
  std::map<std::string, int> reasons;
  for (const auto& s : report.skipped) ++reasons[s.reason];
  ordered_json why = ordered_json::object();
  for (const auto& [reason, count] : reasons) why[reason] = count;
  j["skip_reasons"] = why;
  if (const KnotCheck* m = report.min_margin()) {
    j["min_margin"] = {{"id", m->id}, {"margin", real_json(m->margin)}};
  } else {
    j["min_margin"] = nullptr;
  }
  ordered_json failing = ordered_json::array();
  for (const auto& k : report.rows) {
    if (!k.pass) failing.push_back(k.id);
  }
  j["failing"] = failing;
  ordered_json stats = ordered_json::object();
  for (const auto& [name, value] : report.statistics) stats[name] = real_json(value);
  j["statistics"] = stats;
  j["pass"] = report.pass();
  return j.dump(2) + "\n";
}

std::string kashaev_csv(const std::string& id, std::span<const KashaevValue> values,
                        bool with_header) {
  std::ostringstream out;
  if (with_header) out << "id,n,re,im,abs,error_bound,bits,quantum_density\n";
  for (const auto& v : values) {
    std::string density;
    if (v.abs > v.error_bound) density = format_real(quantum_density(v));
    out << quote(id) << ',' << v.n << ',' << format_real(v.value.re) << ',' << format_real(v.value.im) << ','
        << format_real(v.abs) << ',' << v.error_bound.to_string(3) << ',' << v.bits << ','
        << density << '\n';
  }
  return out.str();
}

std::string kashaev_json(const std::string& id, std::span<const KashaevValue> values) {
  ordered_json j;
  j["id"] = id;
  ordered_json rows = ordered_json::array();
  for (const auto& v : values) {
    ordered_json row;
    row["n"] = v.n;
    row["abs"] = real_json(v.abs);
    row["error_bound"] = v.error_bound.to_double();
    row["bits"] = v.bits;
    row["quantum_density"] = v.abs > v.error_bound ? real_json(quantum_density(v)) : ordered_json();
    rows.push_back(row);
  }
  j["values"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace kd
