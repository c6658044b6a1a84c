// Copyright 2026 The ccpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: build, timecost, classify, fidmap, nogo, verify.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 domain/formula error,
// 3 verification violation.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ccpulse/acceptance.hpp"
#include "ccpulse/analysis.hpp"
#include "ccpulse/catalog.hpp"
#include "ccpulse/error_models.hpp"
#include "ccpulse/errors.hpp"
#include "ccpulse/serialization.hpp"

namespace {

using namespace ccpulse;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitViolation = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  double robust_tol = kRobustTolerance;
  double trivial_tol = 1e-6;
  AxisRange eps_range{};
  AxisRange f_range{};
  std::size_t fidmap_resolution = 101;
  std::size_t nogo_resolution = 32;
  unsigned threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) {
    throw IoError("cannot write '" + path + "'");
  }
}

// Optional JSON config; unknown keys are rejected to catch typos.
void apply_config(const std::string& path, Settings& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter("config '" + path + "': " + e.what());
  }
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "robust_tol") {
        s.robust_tol = value.get<double>();
      } else if (key == "trivial_tol") {
        s.trivial_tol = value.get<double>();
      } else if (key == "threads") {
        s.threads = value.get<unsigned>();
      } else if (key == "nogo_resolution") {
        s.nogo_resolution = value.get<std::size_t>();
      } else if (key == "fidmap") {
        s.eps_range.min = value.value("eps_min", s.eps_range.min);
        s.eps_range.max = value.value("eps_max", s.eps_range.max);
        s.f_range.min = value.value("f_min", s.f_range.min);
        s.f_range.max = value.value("f_max", s.f_range.max);
        s.fidmap_resolution =
            value.value("resolution", s.fidmap_resolution);
      } else {
        throw InvalidParameter("config '" + path + "': unknown key '" + key +
                               "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter("config '" + path + "': " + e.what());
  }
}

void apply_env(Settings& s) {
  if (const char* env = std::getenv("CCPULSE_THREADS")) {
    try {
      s.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw InvalidParameter("CCPULSE_THREADS must be a non-negative integer");
    }
  }
}

// Target selection shared by several verbs.
struct TargetArgs {
  std::string name;
  std::string theta = "pi";
  std::string phi = "0";
  std::string phi_prime;
  bool degrees = false;
  std::string input;

  void add_to(CLI::App* cmd, bool allow_input) {
    cmd->add_option("name", name, "Pulse name (see 'build --help')");
    cmd->add_option("--theta", theta, "Target rotation angle (e.g. pi, pi/2, 1.2)")
        ->capture_default_str();
    cmd->add_option("--phi", phi, "Target axis angle")->capture_default_str();
    cmd->add_option("--phi-prime", phi_prime,
                    "Outer phase of trivial-triple (defaults to --phi)");
    cmd->add_flag("--degrees", degrees, "Read angles in degrees");
    if (allow_input) {
      cmd->add_option("--input", input, "Read a sequence document instead");
    }
  }

  AngleUnit unit() const {
    return degrees ? AngleUnit::Degrees : AngleUnit::Radians;
  }

  RotationParams target() const {
    return {parse_angle(theta, unit()), parse_angle(phi, unit())};
  }

  SequenceDocument resolve() const {
    if (!input.empty()) {
      if (!name.empty()) {
        throw InvalidParameter("give either a pulse name or --input, not both");
      }
      return parse_sequence_document(read_file(input));
    }
    if (name.empty()) throw InvalidParameter("a pulse name or --input is required");
    const RotationParams t = target();
    std::optional<double> pp;
    if (!phi_prime.empty()) pp = parse_angle(phi_prime, unit());
    SequenceDocument doc;
    doc.sequence = build_named(name, t, pp);
    doc.provenance.builder = name;
    doc.provenance.parameters = {{"theta_rad", t.theta}, {"phi_rad", t.phi}};
    if (pp) doc.provenance.parameters["phi_prime_rad"] = *pp;
    return doc;
  }
};

std::string names_help() {
  std::string out = "Pulse names:";
  for (const CatalogEntry& e : catalog_entries()) {
    out += "\n  ";
    out += e.key;
  }
  return out;
}

int run_build(const TargetArgs& args, const std::string& output) {
  if (!args.input.empty()) throw InvalidParameter("build takes a pulse name");
  write_output(output, to_json(args.resolve()));
  return kExitOk;
}

int run_timecost(std::vector<std::string> names, bool all,
                 const std::string& theta_text, bool degrees,
                 const std::string& csv_path) {
  if (all) {
    if (!names.empty()) throw InvalidParameter("give names or --all, not both");
    for (std::string_view k : time_cost_keys()) names.emplace_back(k);
  }
  if (names.empty()) throw InvalidParameter("timecost needs pulse names or --all");
  const double theta = parse_angle(
      theta_text, degrees ? AngleUnit::Degrees : AngleUnit::Radians);
  std::vector<TimeCostRow> rows;
  for (const std::string& n : names) {
    const PulseSequence seq = build_named(n, {theta, 0.0});
    rows.push_back({seq.label, seq.size(), time_cost(seq)});
  }
  write_timecost_text(std::cout, rows, theta_text);
  if (!csv_path.empty()) {
    std::ostringstream csv;
    write_timecost_csv(csv, rows);
    write_output(csv_path, csv.str());
  }
  return kExitOk;
}

int run_classify(const TargetArgs& args, const Settings& s) {
  const SequenceDocument doc = args.resolve();
  const RepClass cls = classify_rep(doc.sequence, s.robust_tol);
  std::string robust;
  if (cls.robust_ple) robust = "PLE";
  if (cls.robust_ore) robust += robust.empty() ? "ORE" : ", ORE";
  if (robust.empty()) robust = "none";
  std::cout << "sequence: " << doc.sequence.label << " (N = "
            << doc.sequence.size() << ")\n"
            << "target: theta = " << format_general(doc.sequence.target.theta, 17)
            << " rad, phi = " << format_general(doc.sequence.target.phi, 17)
            << " rad\n"
            << "REP: " << to_string(cls.rep) << "; robust: " << robust << "\n"
            << "|e_eps|_max = " << format_general(cls.e_eps_norm, 6)
            << ", |e_f|_max = " << format_general(cls.e_f_norm, 6) << "\n";
  return kExitOk;
}

int run_fidmap(const TargetArgs& args, const Settings& s,
               const std::string& output) {
  const SequenceDocument doc = args.resolve();
  const FidelityMap map =
      fidelity_map(doc.sequence, s.eps_range, s.f_range, s.fidmap_resolution,
                   s.fidmap_resolution, s.threads);
  std::ostringstream csv;
  write_fidelity_csv(csv, map);
  write_output(output, csv.str());
  return kExitOk;
}

int run_nogo(const Settings& s) {
  const auto start = std::chrono::steady_clock::now();
  const NoGoReport rep =
      n2_no_go_scan(s.nogo_resolution, s.robust_tol, s.trivial_tol, s.threads);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::cout << "resolution: " << rep.resolution << "\n"
            << "pairs scanned: " << rep.pairs_scanned << "\n"
            << "PLE-robust pairs: " << rep.ple_robust_pairs << "\n"
            << "ORE-robust pairs: " << rep.ore_robust_pairs << "\n"
            << "violations: " << rep.violations << "\n";
  for (const NoGoViolation& v : rep.examples) {
    std::cout << "  violation (" << to_string(v.axis) << "): ("
              << format_general(v.first.theta, 10) << ", "
              << format_general(v.first.phi, 10) << ") then ("
              << format_general(v.second.theta, 10) << ", "
              << format_general(v.second.phi, 10)
              << "), |tr U|/2 = " << format_general(v.trace_fidelity, 10)
              << "\n";
  }
  std::cerr << "wall time: " << format_fixed(secs, 3) << " s\n";
  return rep.violations == 0 ? kExitOk : kExitViolation;
}

int run_verify(const Settings& s) {
  AcceptanceOptions opts;
  opts.threads = s.threads;
  opts.nogo_resolution = s.nogo_resolution;
  bool all = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, opts);
    std::cout << format_result_line(r) << std::endl;
    all = all && r.passed;
  }
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composite and concatenated composite pulse toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with tolerances, grid defaults and thread count");
  std::optional<unsigned> threads_flag;
  app.add_option("--threads", threads_flag, "Worker threads (0 = all cores)");

  TargetArgs build_args;
  std::string build_output;
  auto* build = app.add_subcommand("build", "Write a sequence document");
  build->footer(names_help());
  build_args.add_to(build, false);
  build->add_option("-o,--output", build_output, "Output path (default stdout)");

  std::vector<std::string> tc_names;
  bool tc_all = false;
  std::string tc_theta = "pi";
  bool tc_degrees = false;
  std::string tc_csv;
  auto* timecost = app.add_subcommand("timecost", "Pulse count and operation time cost");
  timecost->add_option("names", tc_names, "Pulse names");
  timecost->add_flag("--all", tc_all, "Every row of the time-cost table");
  timecost->add_option("--theta", tc_theta, "Target rotation angle")->capture_default_str();
  timecost->add_flag("--degrees", tc_degrees, "Read the angle in degrees");
  timecost->add_option("--csv", tc_csv, "Also write CSV to this path ('-' for stdout)");

  TargetArgs classify_args;
  auto* classify = app.add_subcommand("classify", "REP class and first-order robustness");
  classify_args.add_to(classify, true);

  TargetArgs fid_args;
  std::string fid_output;
  std::vector<double> eps_range, f_range;
  std::optional<std::size_t> fid_resolution;
  auto* fidmap = app.add_subcommand("fidmap", "Fidelity grid over (eps, f) as CSV");
  fid_args.add_to(fidmap, true);
  fidmap->add_option("--eps-range", eps_range, "PLE range: min max")->expected(2);
  fidmap->add_option("--f-range", f_range, "ORE range: min max")->expected(2);
  fidmap->add_option("--resolution", fid_resolution, "Samples per axis");
  fidmap->add_option("-o,--output", fid_output, "Output path (default stdout)");

  std::optional<std::size_t> nogo_resolution;
  std::optional<double> robust_tol, trivial_tol;
  auto* nogo = app.add_subcommand("nogo", "Exhaustive two-pulse robustness scan");
  nogo->add_option("--resolution", nogo_resolution, "Grid points per angle");
  nogo->add_option("--robust-tol", robust_tol, "First-order norm threshold");
  nogo->add_option("--trivial-tol", trivial_tol, "Identity tolerance");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--nogo-resolution", nogo_resolution, "Grid for the no-go criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    Settings s;
    if (!config_path.empty()) apply_config(config_path, s);
    apply_env(s);
    if (threads_flag) s.threads = *threads_flag;
    if (nogo_resolution) s.nogo_resolution = *nogo_resolution;
    if (robust_tol) s.robust_tol = *robust_tol;
    if (trivial_tol) s.trivial_tol = *trivial_tol;
    if (eps_range.size() == 2) s.eps_range = {eps_range[0], eps_range[1]};
    if (f_range.size() == 2) s.f_range = {f_range[0], f_range[1]};
    if (fid_resolution) s.fidmap_resolution = *fid_resolution;

    if (*build) return run_build(build_args, build_output);
    if (*timecost) return run_timecost(tc_names, tc_all, tc_theta, tc_degrees, tc_csv);
    if (*classify) return run_classify(classify_args, s);
    if (*fidmap) return run_fidmap(fid_args, s, fid_output);
    if (*nogo) return run_nogo(s);
    if (*verify) return run_verify(s);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const RecipeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InvalidSequence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
