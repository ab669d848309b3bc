// Copyright 2026 The povmrt Authors
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

// povmrt command line: load POVMs and channels from JSON, compute the
// coherence and entanglement monotones, run conversions and the
// property/theorem verification suites.
//
// Exit codes: 0 success, 1 domain or verification failure, 2 I/O or parse
// failure. POVM_LOG_LEVEL=error|warn|info|debug controls stderr diagnostics.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "povmrt/fixtures.hpp"
#include "povmrt/json_io.hpp"
#include "povmrt/suite.hpp"

namespace {

using namespace povmrt;

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel g_log_level = LogLevel::Info;

void init_log_level() {
  const char* env = std::getenv("POVM_LOG_LEVEL");
  if (env == nullptr) return;
  const std::string v(env);
  if (v == "error" || v == "0") g_log_level = LogLevel::Error;
  else if (v == "warn" || v == "1") g_log_level = LogLevel::Warn;
  else if (v == "info" || v == "2") g_log_level = LogLevel::Info;
  else if (v == "debug" || v == "3") g_log_level = LogLevel::Debug;
}

void log_at(LogLevel level, const std::string& msg) {
  if (level <= g_log_level) std::cerr << "povmrt: " << msg << '\n';
}

struct Options {
  std::string povm_path;
  std::string channel = "cnot";
  std::string output;
  std::uint64_t seed = 0;
  int trials = 100;
  int theorem = 0;
};

void emit_report(const ResourceReport& report, const std::string& output) {
  const json j = report_to_json(report);
  if (output.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(output, j);
    log_at(LogLevel::Info, "report written to " + output);
  }
}

int cmd_validate(const Options& opt) {
  const json j = load_json_file(opt.povm_path);
  const RawPovm raw = raw_povm_from_json(j);
  const auto violations = check_povm(raw.effects, raw.split);
  if (violations.empty()) {
    std::cout << "valid POVM: dim=" << raw.dim << " outcomes=" << raw.outcomes
              << (raw.split ? " bipartite" : "") << '\n';
    return 0;
  }
  for (const auto& v : violations)
    std::cout << "invariant violated: " << v.invariant
              << " (residual " << v.residual << ")\n";
  return 1;
}

int cmd_coherence(const Options& opt) {
  const Povm m = povm_from_json(load_json_file(opt.povm_path));
  ResourceReport report;
  report.command = "coherence";
  report.seed = opt.seed;
  report.trials = opt.trials;
  report.c_m = coherence_monotone(m);
  report.per_effect_coherence = coherence_contributions(m);
  emit_report(report, opt.output);
  return 0;
}

int cmd_entanglement(const Options& opt) {
  const Povm m = povm_from_json(load_json_file(opt.povm_path));
  if (!m.split())
    throw std::invalid_argument("entanglement requires a bipartite POVM "
                                "(dims_split)");
  ResourceReport report;
  report.command = "entanglement";
  report.seed = opt.seed;
  report.trials = opt.trials;
  report.e_m = entanglement_monotone_bracket(m);
  report.separability = to_string(is_separable_effectwise(m).verdict);
  emit_report(report, opt.output);
  return 0;
}

int cmd_convert(const Options& opt, const std::string& out_povm_path) {
  const Povm m = povm_from_json(load_json_file(opt.povm_path));
  const bool use_cnot = opt.channel == "cnot";
  const KrausChannel ch =
      use_cnot ? cnot_adjoint_channel(m.dim())
               : channel_from_json(load_json_file(opt.channel));
  const std::string channel_id = use_cnot ? "cnot_adjoint" : opt.channel;

  ConversionResult result;
  std::optional<Povm> converted;
  try {
    result = describe_conversion(m, ch, channel_id, use_cnot, &converted);
  } catch (const FreeOperationError& e) {
    log_at(LogLevel::Error,
           std::string("channel rejected: ") + e.what());
    return 1;
  }

  const std::string povm_out =
      out_povm_path.empty() ? "converted.json" : out_povm_path;
  write_json_file(povm_out, povm_to_json(*converted));
  log_at(LogLevel::Info, "converted POVM written to " + povm_out);

  ResourceReport report;
  report.command = "convert";
  report.seed = opt.seed;
  report.trials = opt.trials;
  report.c_m = result.input_cm;
  report.e_m = result.output_em;
  report.conversion = result;
  emit_report(report, opt.output);
  return 0;
}

int cmd_verify(const Options& opt) {
  const Povm m = povm_from_json(load_json_file(opt.povm_path));
  ResourceReport report;
  report.command = "verify";
  report.seed = opt.seed;
  report.trials = opt.trials;
  report.theorem = opt.theorem;
  bool verified = false;
  switch (opt.theorem) {
    case 1:
      verified = verify_theorem1(m, opt.trials, opt.seed);
      break;
    case 2:
      try {
        const ConversionResult r = verify_theorem2(m);
        report.conversion = r;
        report.c_m = r.input_cm;
        report.e_m = r.output_em;
        verified = true;
      } catch (const TheoremViolation& e) {
        log_at(LogLevel::Error, e.what());
        verified = false;
      }
      break;
    case 3:
      verified = verify_theorem3(m, std::max(opt.trials / 10, 4), opt.seed);
      break;
    default:
      throw std::invalid_argument("--theorem must be 1, 2 or 3");
  }
  report.verified = verified;
  emit_report(report, opt.output);
  return verified ? 0 : 1;
}

int cmd_suite(const Options& opt) {
  suite::Config config;
  config.seed = opt.seed;
  config.trials = opt.trials;
  const auto results = suite::run_all(config);

  std::printf("%-34s %9s %14s %10s\n", "property", "pass", "max residual",
              "tolerance");
  bool all_ok = true;
  for (const auto& r : results) {
    std::printf("%-34s %4d/%-4d %14.3e %10.1e\n", r.name.c_str(), r.passed,
                r.total, r.max_residual, r.tolerance);
    all_ok &= r.ok();
  }
  for (const auto& r : results)
    if (!r.ok())
      std::printf("FAILED %s: counterexample seed %llu\n", r.name.c_str(),
                  static_cast<unsigned long long>(r.counterexample_seed));

  if (!opt.output.empty()) {
    json j;
    j["command"] = "suite";
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    json props = json::array();
    for (const auto& r : results) {
      json p;
      p["name"] = r.name;
      p["passed"] = r.passed;
      p["total"] = r.total;
      p["max_residual"] = r.max_residual;
      p["tolerance"] = r.tolerance;
      if (!r.ok()) p["counterexample_seed"] = r.counterexample_seed;
      props.push_back(std::move(p));
    }
    j["properties"] = std::move(props);
    j["log_base"] = 2;
    j["tolerances"] = tolerances_json();
    write_json_file(opt.output, j);
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  init_log_level();

  CLI::App app{"resource monotones of quantum measurements"};
  app.require_subcommand(1);
  Options opt;
  std::string out_povm_path;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("povm", opt.povm_path, "POVM JSON file")->required();
    sub->add_option("-o,--output", opt.output, "report output path (default stdout)");
    sub->add_option("--seed", opt.seed, "root random seed");
    sub->add_option("--trials", opt.trials, "sample count for randomized checks")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* validate = app.add_subcommand("validate", "check POVM invariants");
  add_common(validate, true);
  CLI::App* coherence =
      app.add_subcommand("coherence", "coherence monotone C_m");
  add_common(coherence, true);
  CLI::App* entanglement =
      app.add_subcommand("entanglement", "entanglement bracket E_m");
  add_common(entanglement, true);
  CLI::App* convert = app.add_subcommand(
      "convert", "build a bipartite measurement from M and the canonical ancilla");
  add_common(convert, true);
  convert->add_option("--channel", opt.channel,
                      "'cnot' or a Kraus channel JSON file");
  convert->add_option("--out-povm", out_povm_path,
                      "path for the converted POVM (default converted.json)");
  CLI::App* verify = app.add_subcommand("verify", "verify a theorem instance");
  add_common(verify, true);
  verify->add_option("--theorem", opt.theorem, "1, 2 or 3")->required();
  CLI::App* suite_cmd = app.add_subcommand("suite", "run all property suites");
  add_common(suite_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (coherence->parsed()) return cmd_coherence(opt);
    if (entanglement->parsed()) return cmd_entanglement(opt);
    if (convert->parsed()) return cmd_convert(opt, out_povm_path);
    if (verify->parsed()) return cmd_verify(opt);
    if (suite_cmd->parsed()) return cmd_suite(opt);
  } catch (const json::parse_error& e) {
    log_at(LogLevel::Error, std::string("JSON parse failure: ") + e.what());
    return 2;
  } catch (const SchemaError& e) {
    log_at(LogLevel::Error, std::string("input schema: ") + e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    log_at(LogLevel::Error, e.what());
    return 1;
  } catch (const std::domain_error& e) {
    log_at(LogLevel::Error, e.what());
    return 1;
  } catch (const std::exception& e) {
    log_at(LogLevel::Error, std::string("unexpected: ") + e.what());
    return 1;
  }
  return 0;
}
