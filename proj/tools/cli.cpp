// Copyright 2026 The blochnorm Authors
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
#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blochnorm/bloch_decomposition.hpp"
#include "blochnorm/bounds.hpp"
#include "blochnorm/error.hpp"
#include "blochnorm/quantum_states.hpp"
#include "blochnorm/state_json.hpp"
#include "blochnorm/su_basis.hpp"
#include "blochnorm/verification.hpp"
#include "report.hpp"

namespace blochnorm::cli {
namespace {

using nlohmann::json;

struct InputOptions {
  std::string state_path;
  std::string builtin;
  int d = 0;
  int parties = 0;
  std::optional<double> x;
};

struct CommonOptions {
  std::string format = "json";
  double tolerance = tol::kCompare;
};

double default_tolerance() {
  if (const char* env = std::getenv(kToleranceEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw Error(ErrorCode::kConfiguration,
                  std::string(kToleranceEnv) + " must be a positive number, got '" + env + "'");
    }
    return v;
  }
  return tol::kCompare;
}

void add_format(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void add_tolerance(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--tolerance", common.tolerance, "Comparison tolerance (default 1e-9 or $" +
                                                       std::string(kToleranceEnv) + ")")
      ->check(CLI::PositiveNumber);
}

void add_input(CLI::App* sub, InputOptions& in) {
  auto* state = sub->add_option("--state", in.state_path, "JSON state file");
  auto* builtin = sub->add_option("--builtin", in.builtin, "Builtin state")
                      ->check(CLI::IsMember({"ghz", "isotropic_ghz4", "product_max_entangled"}));
  state->excludes(builtin);
  sub->add_option("--d", in.d, "Local dimension for --builtin");
  sub->add_option("--parties", in.parties, "Party count for --builtin");
  sub->add_option("--x", in.x, "Mixing parameter for isotropic_ghz4");
}

Format format_of(const CommonOptions& c) { return c.format == "text" ? Format::kText : Format::kJson; }

LoadedState load_input(const InputOptions& in) {
  if (in.state_path.empty() == in.builtin.empty()) {
    throw Error(ErrorCode::kConfiguration, "exactly one of --state or --builtin is required");
  }
  if (!in.builtin.empty()) {
    if (in.d == 0) throw Error(ErrorCode::kConfiguration, "--builtin needs --d");
    int parties = in.parties;
    if (parties == 0) {
      if (in.builtin == "ghz") throw Error(ErrorCode::kConfiguration, "--builtin ghz needs --parties");
      parties = 4;
    }
    json params = json::object();
    if (in.x) params["x"] = *in.x;
    return builtin_state(in.builtin, in.d, parties, params);
  }
  std::ifstream file(in.state_path);
  if (!file) throw Error(ErrorCode::kParse, "cannot open state file '" + in.state_path + "'");
  json j;
  try {
    j = json::parse(file);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, "malformed JSON in '" + in.state_path + "': " + e.what());
  }
  return state_from_json(j);
}

json state_header(const LoadedState& s) {
  return {{"description", s.description},
          {"d", s.rho.local_dim()},
          {"parties", s.rho.num_parties()},
          {"purity", purity(s.rho)}};
}

json thresholds_json(const SeparabilityThresholds& t) {
  json out = json::object();
  for (SeparabilityClass c : kSeparabilityClasses) out[std::string(label(c))] = t[c];
  return out;
}

json et_bound_routes(int d, int n) {
  const double closed = et_upper_bound(d, n);
  const double via_norm = et_upper_bound_from_norm_bound(d, n);
  return {{"d", d},
          {"N", n},
          {"closed_form", closed},
          {"from_norm_bound", via_norm},
          {"difference", closed - via_norm}};
}

// Both evaluations of the tripartite E_T bound at d = 2 and d = 3, and at the
// requested d when different.
json et_bound_audit(std::optional<int> d) {
  json routes = json::array();
  routes.push_back(et_bound_routes(2, 3));
  routes.push_back(et_bound_routes(3, 3));
  if (d && *d > 3) routes.push_back(et_bound_routes(*d, 3));
  const json& d3 = routes[1];
  const bool agree = std::abs(d3["difference"].get<double>()) <= 1e-4;
  return {{"routes", routes},
          {"d3_routes_agree_within_1e-4", agree},
          {"note",
           "closed form sqrt(d^3 (d-1)^2 / 8)(sqrt(d+2) - sqrt(d-1)) versus "
           "(d^3/8) sqrt(tripartite bound) - (d(d-1)/2)^(3/2); the d = 2 row is reported, not asserted"}};
}

int cmd_basis(int d, const CommonOptions& common, std::ostream& out) {
  const GeneratorBasis basis = generate_basis(d);
  json report = basis_to_json(basis);
  json labels = json::array();
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) labels.push_back("S" + std::to_string(j) + std::to_string(k));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) labels.push_back("A" + std::to_string(j) + std::to_string(k));
  for (int l = 1; l < d; ++l) labels.push_back("D" + std::to_string(l));
  report["labels"] = labels;
  report["max_constraint_violation"] = basis.max_constraint_violation();
  write_report(out, report, format_of(common));
  return kExitOk;
}

int cmd_decompose(const InputOptions& in, const std::string& subset_text, const std::string& dump_path,
                  const CommonOptions& common, std::ostream& out) {
  const LoadedState s = load_input(in);
  json report = state_header(s);
  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f) throw Error(ErrorCode::kParse, "cannot write '" + dump_path + "'");
    f << state_to_json(s.rho).dump() << '\n';
  }
  if (!subset_text.empty()) {
    const BlochTensor t = bloch_tensor(s.rho, PartySet::parse(subset_text));
    report["tensors"] = json::array({tensor_to_json(t)});
  } else {
    const BlochDecomposition dec = full_decomposition(s.rho);
    json tensors = json::array();
    for (const BlochTensor* t : dec.tensors()) tensors.push_back(tensor_to_json(*t));
    report["tensors"] = tensors;
    json sums = json::object();
    for (int k = 1; k <= dec.num_parties(); ++k) sums[std::to_string(k)] = dec.norm_sq_sum(k);
    report["norm_sq_sum_by_order"] = sums;
    report["reconstruction_error"] = (reconstruct_matrix(dec) - s.rho.matrix()).norm();
  }
  write_report(out, report, format_of(common));
  return kExitOk;
}

int cmd_bounds(int d, const CommonOptions& common, std::ostream& out) {
  const BoundTable t = bound_table(d);
  json report = {{"d", d},
                 {"bipartite", t.bipartite},
                 {"tripartite", t.tripartite},
                 {"fourpartite", t.fourpartite},
                 {"tradeoff", t.tradeoff},
                 {"ball_inner", t.ball_inner},
                 {"ball_outer", t.ball_outer},
                 {"separability_thresholds", thresholds_json(separability_thresholds(d))},
                 {"et_upper_bound", {{"N3", et_upper_bound(d, 3)}, {"N4", et_upper_bound(d, 4)}}},
                 {"et_bound_audit", et_bound_audit(d)}};
  write_report(out, report, format_of(common));
  return kExitOk;
}

int cmd_classify(const InputOptions& in, const CommonOptions& common, std::ostream& out) {
  const LoadedState s = load_input(in);
  const ClassificationReport r = classify(s.rho, common.tolerance);
  json excluded = json::array();
  json compatible = json::array();
  json margins = json::object();
  for (SeparabilityClass c : kSeparabilityClasses) {
    margins[std::string(label(c))] = r.margin(c);
    (r.is_excluded(c) ? excluded : compatible).push_back(std::string(label(c)));
  }
  json report = state_header(s);
  report["norm_sq_1234"] = r.norm_sq_1234;
  report["tolerance"] = r.tolerance;
  report["thresholds"] = thresholds_json(r.thresholds);
  report["margins"] = margins;
  report["excluded"] = excluded;
  report["not_excluded"] = compatible;
  report["note"] = std::string(r.note);
  write_report(out, report, format_of(common));
  return kExitOk;
}

int cmd_measure(const InputOptions& in, const CommonOptions& common, std::ostream& out) {
  const LoadedState s = load_input(in);
  const int n = s.rho.num_parties();
  const int d = s.rho.local_dim();
  const double value = et_measure(s.rho);
  const double norm_sq = bloch_tensor(s.rho, PartySet::all(n)).norm_sq();
  json report = state_header(s);
  report["norm_sq_full"] = norm_sq;
  report["et"] = value;
  report["et_clamped"] = std::max(value, 0.0);
  if (n == 3 || n == 4) {
    const double bound = et_upper_bound(d, n);
    report["et_upper_bound"] = bound;
    report["et_upper_bound_from_norm_bound"] = et_upper_bound_from_norm_bound(d, n);
    report["within_bound"] = value <= bound + common.tolerance;
  } else {
    report["et_upper_bound"] = nullptr;
  }
  report["et_bound_audit"] = et_bound_audit(d);
  write_report(out, report, format_of(common));
  return kExitOk;
}

int cmd_tradeoff(const InputOptions& in, const CommonOptions& common, std::ostream& out) {
  const LoadedState s = load_input(in);
  const TradeoffResult r = tradeoff_check(s.rho, common.tolerance);
  const char* labels[4] = {"123", "124", "134", "234"};
  json triples = json::object();
  for (std::size_t i = 0; i < 4; ++i) triples[labels[i]] = r.triple_norm_sq[i];
  json report = state_header(s);
  report["triple_norm_sq"] = triples;
  report["sum_sq"] = r.sum_sq;
  report["bound"] = r.bound;
  report["satisfied"] = r.satisfied;
  report["tripartite_bound"] = bound_table(s.rho.local_dim()).tripartite;
  write_report(out, report, format_of(common));
  return kExitOk;
}

struct VerifyOptions {
  int d = 2;
  int parties = 4;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string checks;
  std::string kind = "pure-haar";
  int rank = 0;
  unsigned threads = 0;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const VerifyOptions& v, const CommonOptions& common, std::ostream& out) {
  SampleSpec spec;
  spec.local_dim = v.d;
  spec.num_parties = v.parties;
  spec.kind = parse_sample_kind(v.kind);
  spec.count = v.samples;
  spec.base_seed = v.seed;
  if (v.rank > 0) {
    spec.rank = v.rank;
  } else {
    spec.rank = spec.kind == SampleKind::kPureHaar
                    ? 1
                    : static_cast<int>(ipow(static_cast<std::size_t>(std::max(v.d, 2)), v.parties));
  }
  validate(spec);
  const std::vector<std::string> checks = v.checks.empty() ? applicable_checks(spec) : split_list(v.checks);
  SweepOptions options;
  options.threads = v.threads;
  options.tolerance = common.tolerance;
  const SweepReport r = run_sweep(spec, checks, options);

  json list = json::array();
  for (const CheckResult& c : r.checks) {
    list.push_back({{"name", c.name},
                    {"samples", c.samples},
                    {"max_value", c.max_value},
                    {"bound", c.bound},
                    {"worst_margin", c.worst_margin},
                    {"tolerance", c.tolerance},
                    {"passed", c.passed}});
  }
  json report = {{"spec",
                  {{"d", spec.local_dim},
                   {"parties", spec.num_parties},
                   {"kind", std::string(to_string(spec.kind))},
                   {"rank", spec.rank},
                   {"samples", spec.count},
                   {"seed", spec.base_seed}}},
                 {"checks", list},
                 {"passed", r.passed}};
  write_report(out, report, format_of(common));
  return r.passed ? kExitOk : kExitCheckFailed;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bloch correlation tensors, norm bounds and four-qudit separability classes",
               "blochnorm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  CommonOptions common;
  InputOptions input;
  int d = 0;
  std::string subset_text;
  std::string dump_path;
  VerifyOptions verify;

  try {
    common.tolerance = default_tolerance();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  auto* basis = app.add_subcommand("basis", "Print the ordered SU(d) generators");
  basis->add_option("--d", d, "Local dimension")->required();
  add_format(basis, common);

  auto* decompose = app.add_subcommand("decompose", "Bloch correlation tensors of a state");
  add_input(decompose, input);
  decompose->add_option("--subset", subset_text, "Only this party subset, e.g. 1,2,4");
  decompose->add_option("--dump-state", dump_path, "Also write the ingested state as a matrix JSON file");
  add_format(decompose, common);

  auto* bounds = app.add_subcommand("bounds", "Closed-form norm bounds and separability thresholds");
  bounds->add_option("--d", d, "Local dimension")->required();
  add_format(bounds, common);

  auto* classify_cmd = app.add_subcommand("classify", "Excluded four-party separability classes");
  add_input(classify_cmd, input);
  add_format(classify_cmd, common);
  add_tolerance(classify_cmd, common);

  auto* measure = app.add_subcommand("measure", "E_T entanglement measure of a pure state");
  add_input(measure, input);
  add_format(measure, common);
  add_tolerance(measure, common);

  auto* tradeoff = app.add_subcommand("tradeoff", "Sum of tripartite norms against its bound");
  add_input(tradeoff, input);
  add_format(tradeoff, common);
  add_tolerance(tradeoff, common);

  auto* verify_cmd = app.add_subcommand("verify", "Randomized verification sweep");
  verify_cmd->add_option("--d", verify.d, "Local dimension")->required();
  verify_cmd->add_option("--parties", verify.parties, "Party count")->required();
  verify_cmd->add_option("--samples", verify.samples, "Sample count")->required();
  verify_cmd->add_option("--seed", verify.seed, "Base seed")->required();
  verify_cmd->add_option("--checks", verify.checks, "Comma-separated checks (default: all applicable)");
  verify_cmd->add_option("--kind", verify.kind, "Sample kind")
      ->check(CLI::IsMember({"pure-haar", "mixed-ginibre"}))
      ->capture_default_str();
  verify_cmd->add_option("--rank", verify.rank, "Ginibre rank (default d^n)");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = hardware)");
  add_format(verify_cmd, common);
  add_tolerance(verify_cmd, common);

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "error: unknown subcommand '" << args.front() << "'\n";
    return kExitInputError;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitInputError;
  }

  try {
    if (basis->parsed()) return cmd_basis(d, common, out);
    if (decompose->parsed()) return cmd_decompose(input, subset_text, dump_path, common, out);
    if (bounds->parsed()) return cmd_bounds(d, common, out);
    if (classify_cmd->parsed()) return cmd_classify(input, common, out);
    if (measure->parsed()) return cmd_measure(input, common, out);
    if (tradeoff->parsed()) return cmd_tradeoff(input, common, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, common, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << one_line(e.what()) << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitInputError;
  }
  err << "error: no subcommand\n";
  return kExitInputError;
}

}  // namespace blochnorm::cli
