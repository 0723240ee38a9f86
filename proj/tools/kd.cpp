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

// kd: command line front end for the knotdensity library.
//
// Exit codes: 0 when every check passes, 1 when a violation is found,
// 2 on bad input or a computation that could not be carried out.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kd/census.hpp"
#include "kd/codec.hpp"
#include "kd/errors.hpp"
#include "kd/families.hpp"
#include "kd/report.hpp"
#include "kd/spectra.hpp"
#include "kd/tangle.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

// An error tagged with the operation and knot it came from.
class CommandError : public kd::Error {
 public:
  using kd::Error::Error;
};

struct Range {
  int first = 0;
  int last = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw kd::SyntaxError("bad range '" + text + "', expected N or A..B");
  }
}

struct DiagramInput {
  std::string pd;
  std::string dt;
  std::string braid;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pd", pd, "PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
    cmd->add_option("--dt", dt, "DT code, e.g. \"4 6 8 2\"");
    cmd->add_option("--braid", braid, "braid word, e.g. \"2: s1 s1 s1\"");
  }
  bool given() const { return !pd.empty() || !dt.empty() || !braid.empty(); }
  kd::Diagram read() const {
    const int count = !pd.empty() + !dt.empty() + !braid.empty();
    if (count != 1) throw kd::SyntaxError("give exactly one of --pd, --dt, --braid");
    if (!pd.empty()) return kd::parse_pd(pd);
    if (!dt.empty()) return kd::parse_dt(kd::parse_dt_text(dt));
    return kd::from_braid(kd::parse_braid(braid));
  }
  std::string label() const {
    if (!pd.empty()) return "pd";
    if (!dt.empty()) return dt;
    return braid;
  }
};

struct Output {
  std::string path;
  std::string format = "csv";

  void attach(CLI::App* cmd, const std::string& default_format) {
    format = default_format;
    cmd->add_option("--out", path, "write the report here instead of stdout");
    cmd->add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json"}));
  }
  bool json() const { return format == "json"; }
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw kd::MissingDataError("cannot write '" + path + "'");
    out << text;
  }
};

kd::Tangle cycle_seed(const std::string& name) {
  const kd::Tangle x = kd::Tangle::crossing();
  if (name == "three-twist") return kd::tangle_product(x, kd::tangle_product(x, x));
  if (name == "twist-sum") return kd::tangle_product(x, kd::tangle_sum(x, x));
  throw kd::SyntaxError("unknown cycle seed '" + name + "'");
}

const kd::Diagram& twist_base() {
  static const kd::Diagram base = kd::from_braid(kd::parse_braid("2: s1 s1"));
  return base;
}

struct FamilyArgs {
  std::string family;
  int p = 3;
  std::string q = "3";
  std::string m;
  std::string n = "3";
  std::string k = "1";
  std::string seed = "three-twist";

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "weaving | celtic | cycle | twist")
        ->required()
        ->check(CLI::IsMember({"weaving", "celtic", "cycle", "twist"}));
    cmd->add_option("--p", p, "weaving strands");
    cmd->add_option("--q", q, "weaving length, N or A..B");
    cmd->add_option("--m", m, "celtic rows (defaults to --n)");
    cmd->add_option("--n", n, "celtic size or cycle length, N or A..B");
    cmd->add_option("--k", k, "twists added to T(2,2), N or A..B");
    cmd->add_option("--seed", seed, "cycle tangle: three-twist | twist-sum");
  }

  Range range() const {
    if (family == "weaving") return parse_range(q);
    if (family == "twist") return parse_range(k);
    return parse_range(n);
  }

  kd::Diagram member(int i) const {
    if (family == "weaving") return kd::weaving_knot(p, i);
    if (family == "celtic") return kd::celtic_grid(m.empty() ? i : parse_range(m).first, i);
    if (family == "twist") return kd::twist_on_two_strands(twist_base(), kd::ArcPair{1, 2}, i);
    return kd::cycle_of_tangles(cycle_seed(seed), i);
  }
};

int run_invariants(const DiagramInput& input, const std::string& id, const std::string& volume,
                   int kashaev_n,
                   int max_crossings, const std::string& field, long bits, const Output& out) {
  const kd::Diagram d = input.read();
  kd::RecordOptions options;
  options.bits = bits;
  options.khovanov.field = kd::parse_field(field);
  options.khovanov.max_crossings = max_crossings;
  options.with_khovanov = d.crossing_number() <= max_crossings;
  options.kashaev_n_max = kashaev_n;
  options.kashaev.precision_bits = bits;
  std::optional<kd::Real> vol;
  if (!volume.empty()) vol = kd::Real::from_string(volume, bits);
  const auto record = kd::density_record(id.empty() ? input.label() : id, d, vol, options);
  out.write(out.json() ? kd::density_json(record) : kd::density_csv(std::span(&record, 1)));
  return kPass;
}

int run_generate(const FamilyArgs& args) {
  const Range r = args.range();
  for (int i = r.first; i <= r.last; ++i) std::cout << kd::format_pd(args.member(i)) << "\n";
  return kPass;
}

int run_sweep(const FamilyArgs& args, long bits, const Output& out) {
  const Range r = args.range();
  kd::SweepOptions options;
  options.bits = bits;
  kd::SequenceReport report;
  if (args.family == "cycle") {
    report = kd::cycle_density_convergence(cycle_seed(args.seed), r.last, options).cycles;
  } else {
    const kd::Real target =
        args.family == "twist" ? kd::Real::from_int(0, bits) : kd::voct(bits);
    report = kd::maximality_sweep(
        args.family, [&](int i) { return args.member(i); }, r.first, r.last, target, options);
  }
  out.write(out.json() ? kd::sequence_json(report) : kd::sequence_csv(report));
  return kPass;
}

int run_verify(const std::string& check, const std::string& table_path, int max_crossings,
               const std::string& field, long bits, const Output& out) {
  const auto table = kd::load_census(table_path);
  kd::VerifyOptions options;
  options.max_crossings = max_crossings > 0 ? max_crossings : (check == "crossing-drop" ? 9 : 12);
  options.bits = bits;
  options.khovanov.field = kd::parse_field(field);
  kd::VerificationReport report;
  if (check == "det-density") {
    report = kd::verify_det_density_bound(table, options);
  } else if (check == "jones-density") {
    report = kd::verify_jones_density_bound(table, options);
  } else if (check == "vol-det") {
    report = kd::verify_vol_det(table, options);
  } else if (check == "kh-vol") {
    report = kd::verify_kh_vol(table, options);
  } else {
    report = kd::verify_crossing_drop(table, options);
  }
  out.write(out.json() ? kd::verification_json(report) : kd::verification_csv(report));
  std::cerr << report.check << ": " << report.rows.size() << " checked, " << report.violations()
            << " violations, " << report.skipped.size() << " skipped";
  if (const auto* m = report.min_margin()) {
    std::cerr << ", min margin " << kd::format_real(m->margin) << " at " << m->id;
  }
  std::cerr << "\n";
  return report.pass() ? kPass : kViolation;
}

int run_kashaev(const DiagramInput& input, const std::string& table_path, int max_crossings,
                int n_max, long bits, const Output& out) {
  kd::KashaevOptions options;
  options.precision_bits = bits;
  options.max_n = std::max(options.max_n, n_max);
  struct Knot {
    std::string id;
    kd::Diagram diagram;
    std::optional<kd::BigInt> det;
  };
  std::vector<Knot> knots;
  if (!table_path.empty()) {
    for (const auto& e : kd::load_census(table_path)) {
      if (e.crossings <= max_crossings) knots.push_back({e.name, e.diagram(), e.determinant});
    }
  } else {
    knots.push_back({input.label(), input.read(), std::nullopt});
  }
  const kd::Real ceiling = kd::voct(bits);
  bool violation = false;
  std::string text;
  std::string json = "[\n";
  for (size_t i = 0; i < knots.size(); ++i) {
    const Knot& k = knots[i];
    std::vector<kd::KashaevValue> values;
    for (int n = 2; n <= n_max; ++n) {
      try {
        values.push_back(kd::kashaev_invariant(k.diagram, n, options));
      } catch (const kd::Error& err) {
        throw CommandError("kashaev " + k.id + " N=" + std::to_string(n) + ": " + err.what());
      }
      const kd::KashaevValue& v = values.back();
      if (n == 2 && k.det && v.abs.round() != *k.det) violation = true;
      if (v.abs > v.error_bound && kd::quantum_density(v) > ceiling) violation = true;
    }
    text += kd::kashaev_csv(k.id, values, i == 0);
    json += kd::kashaev_json(k.id, values) + (i + 1 < knots.size() ? ",\n" : "\n");
  }
  out.write(out.json() ? json + "]\n" : text);
  return violation ? kViolation : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot invariants and density spectra"};
  app.require_subcommand(1);

  DiagramInput input;
  FamilyArgs family;
  Output invariants_out, sweep_out, verify_out, kashaev_out;
  std::string id, volume, table, field = "Q", check;
  int kashaev_n = 0, kh_cap = 14, verify_cap = 0, table_cap = 10, n_max = 8;
  long bits = kd::Real::kDefaultBits;
  auto add_bits = [&](CLI::App* cmd) {
    cmd->add_option("--precision-bits", bits, "MPFR working precision")->check(CLI::Range(64, 4096));
  };

  auto* invariants = app.add_subcommand("invariants", "full density record for one diagram");
  input.attach(invariants);
  invariants->add_option("--id", id, "label for the record");
  invariants->add_option("--volume", volume, "hyperbolic volume, if known");
  invariants->add_option("--kashaev", kashaev_n, "Kashaev sweep N = 2..value");
  invariants->add_option("--max-crossings", kh_cap, "Khovanov crossing cap");
  invariants->add_option("--field", field, "Khovanov coefficients: Q | F2");
  add_bits(invariants);
  invariants_out.attach(invariants, "json");

  auto* generate = app.add_subcommand("generate", "PD code of a family member");
  family.attach(generate);

  auto* sweep = app.add_subcommand("sweep", "determinant density sequence of a family");
  family.attach(sweep);
  add_bits(sweep);
  sweep_out.attach(sweep, "csv");

  auto* verify = app.add_subcommand("verify", "census-wide conjecture checks");
  verify->add_option("check", check, "det-density | jones-density | vol-det | kh-vol | crossing-drop")
      ->required()
      ->check(CLI::IsMember({"det-density", "jones-density", "vol-det", "kh-vol", "crossing-drop"}));
  verify->add_option("--table", table, "census CSV")->required();
  verify->add_option("--max-crossings", verify_cap, "largest crossing number checked");
  verify->add_option("--field", field, "Khovanov coefficients: Q | F2");
  add_bits(verify);
  verify_out.attach(verify, "json");

  auto* kashaev = app.add_subcommand("kashaev", "Kashaev invariant sweep over N");
  input.attach(kashaev);
  kashaev->add_option("--table", table, "census CSV instead of a single diagram");
  kashaev->add_option("--max-crossings", table_cap, "table rows up to this size");
  kashaev->add_option("--n-max", n_max, "largest N")->check(CLI::Range(2, 64));
  add_bits(kashaev);
  kashaev_out.attach(kashaev, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*invariants) {
      return run_invariants(input, id, volume, kashaev_n, kh_cap, field, bits, invariants_out);
    }
    if (*generate) return run_generate(family);
    if (*sweep) return run_sweep(family, bits, sweep_out);
    if (*verify) return run_verify(check, table, verify_cap, field, bits, verify_out);
    if (!input.given() && table.empty()) throw kd::SyntaxError("give a diagram or --table");
    return run_kashaev(input, table, table_cap, n_max, bits, kashaev_out);
  } catch (const CommandError& err) {
    std::cerr << "kd: " << err.what() << "\n";
  } catch (const kd::Error& err) {
    std::cerr << "kd " << app.get_subcommands().front()->get_name() << ": " << err.what() << "\n";
  }
  return kInputError;
}
