// Copyright 2026 The meander Authors.
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

// Command-line front end. Every subcommand prints one JSON document
//
//   {"manifest": {...}, "result": {...}}
//
// where the manifest records the parameters needed to recompute `result`
// byte for byte (`meander replay FILE` does exactly that).
//
// Exit codes: 0 success, 2 statistical gate failed, 3 invariant or exact
// check failed, 4 usage error.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meander/meander.hpp"

namespace {

using meander::Json;

constexpr int kExitOk = 0;
constexpr int kExitStatistical = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitUsage = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json result;
  int exit_code = kExitOk;
};

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

/// Named reference shapes, or an explicit encoding.
meander::Shape resolve_shape(const std::string& text) {
  if (text == "simple") return meander::simple_loop();
  if (text == "four-face") return meander::four_face_loop();
  if (text == "interleaving") return meander::interleaving_loop();
  return meander::Shape::parse(text);
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each takes its parameter object (exactly what goes into
// the manifest) so that replay can call them directly.

Outcome run_shapes(const Json& p) {
  Outcome out;
  if (p.contains("parse")) {
    const meander::Shape s = resolve_shape(p["parse"].get<std::string>());
    const meander::ShapeConstants c = meander::shape_constants(s);
    out.result = {{"valid", true}, {"shape", s.to_string()}, {"halfLength", s.half_length()},
                  {"supportSize", s.support().size()}, {"strong", c.strong}};
    return out;
  }
  const int ell = p.at("halfLength").get<int>();
  const int cap = p.at("halfLengthCap").get<int>();
  Json list = Json::array();
  int index = 0;
  for (const meander::Shape& s : meander::enumerate_shapes(ell, cap)) {
    const meander::ShapeConstants c = meander::shape_constants(s);
    list.push_back({{"id", "L" + std::to_string(ell) + "-" + std::to_string(index++)},
                    {"shape", s.to_string()},
                    {"strong", c.strong},
                    {"K", c.k.str()},
                    {"cPlus", c.c_plus},
                    {"cMinus", c.c_minus}});
  }
  out.result = {{"halfLength", ell}, {"count", list.size()}, {"shapes", list}};
  return out;
}

Outcome run_constants(const Json& p) {
  const meander::ShapeConstants c = meander::shape_constants(resolve_shape(p.at("shape").get<std::string>()));
  return {meander::constants_json(c), kExitOk};
}

// Exact rationals for the closed form are only materialized up to this n;
// beyond it the formula is reported through its logarithm alone.
constexpr std::int64_t kExactFormulaMaxN = 20000;

Outcome run_moments(const Json& p) {
  const meander::Shape shape = resolve_shape(p.at("shape").get<std::string>());
  const meander::ShapeConstants c = meander::shape_constants(shape);
  const auto n = p.at("n").get<std::int64_t>();
  const auto r = p.at("r").get<std::int64_t>();
  if (n < 1) throw UsageError("moments: n must be >= 1");
  if (r < 0) throw UsageError("moments: r must be >= 0");
  const std::set<std::string> modes = p.at("modes").get<std::set<std::string>>();
  const int workers = p.at("workers").get<int>();
  const int oracle_cap = p.at("oracleCap").get<int>();

  Outcome out;
  Json result{{"shape", shape.to_string()}, {"n", n}, {"r", r}, {"strong", c.strong}};
  std::optional<meander::Rational> exact, formula;
  std::optional<double> formula_log, asymptotic_log;

  if (modes.count("formula")) {
    if (!c.strong && r >= 2)
      throw UsageError(
          "moments: formula mode needs a strong shape when r >= 2; copies of this shape can overlap, so the "
          "closed form for non-overlapping tuples is only a lower bound (use --mode exact)");
    if (n <= kExactFormulaMaxN) {
      formula = c.strong ? meander::strong_factorial_moment(n, r, c)
                         : (r == 0 ? meander::Rational(1) : meander::non_overlapping_term(n, 1, c));
      formula_log = *formula > 0 ? std::optional<double>(meander::log_of(*formula)) : std::nullopt;
      result["formula"] = meander::to_json(*formula);
    } else {
      formula_log = c.strong ? meander::log_strong_factorial_moment(n, r, c)
                             : meander::log_of(meander::non_overlapping_term(n, r, c));
      result["formula"] = nullptr;
    }
    result["formulaLog"] = formula_log ? Json(*formula_log) : Json(nullptr);
  }
  if (modes.count("exact")) {
    const meander::OracleOptions opts{oracle_cap, workers};
    // Checked here so an oversized n is reported before any work starts.
    meander::detail::check_oracle_size(static_cast<int>(std::min<std::int64_t>(n, 1 << 20)), opts);
    const meander::MomentReport m = meander::moment_report(static_cast<int>(n), static_cast<int>(r), shape, opts);
    exact = m.exact;
    result["exact"] = meander::to_json(m.exact);
    result["lowerBoundRFr"] = meander::to_json(m.lower_bound);
    result["lowerBoundHolds"] = m.lower_bound <= m.exact;
    if (!(m.lower_bound <= m.exact)) out.exit_code = kExitInvariant;
  }
  if (modes.count("asymptotic")) {
    asymptotic_log = meander::asymptotic_log_moment(n, r, c);
    result["asymptoticLog"] = *asymptotic_log;
  }

  Json deltas = Json::object();
  if (exact && formula) {
    deltas["exactMinusFormula"] = meander::to_json(*exact - *formula);
    deltas["exactEqualsFormula"] = *exact == *formula;
    if (*exact != *formula) out.exit_code = kExitInvariant;
  }
  if (formula_log && asymptotic_log) deltas["formulaMinusAsymptoticLog"] = *formula_log - *asymptotic_log;
  if (exact && *exact > 0 && asymptotic_log)
    deltas["exactMinusAsymptoticLog"] = meander::log_of(*exact) - *asymptotic_log;
  result["deltas"] = deltas;
  out.result = result;
  return out;
}

Outcome run_sample(const Json& p) {
  meander::ExperimentConfig cfg;
  cfg.n = p.at("n").get<int>();
  cfg.samples = p.at("samples").get<std::uint64_t>();
  cfg.shape = resolve_shape(p.at("shape").get<std::string>());
  cfg.seed = p.at("seed").get<std::uint64_t>();
  cfg.workers = p.at("workers").get<int>();
  const std::string csv = p.at("csv").get<std::string>();
  cfg.keep_samples = !csv.empty();
  try {
    meander::validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const meander::SampleSummary s = meander::run_experiment(cfg);
  Outcome out;
  out.result = meander::sample_summary_json(s);
  if (!csv.empty()) {
    std::ofstream file(csv);
    if (!file) throw UsageError("sample: cannot write " + csv);
    file << "position,x\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) file << i << ',' << s.values[i] << '\n';
  }
  const std::string gate = p.at("gate").get<std::string>();
  if (gate != "none") {
    meander::StatisticalGates gates;
    gates.check_shape = gate == "full";
    const auto outcomes = meander::evaluate_gates(s, gates);
    out.result["gates"] = meander::gates_json(outcomes);
    out.result["gatesPassed"] = meander::all_passed(outcomes);
    if (!meander::all_passed(outcomes)) out.exit_code = kExitStatistical;
  }
  return out;
}

Outcome run_verify(const Json& p) {
  const std::string suite_name = p.at("suite").get<std::string>();
  meander::Suite suite;
  if (suite_name == "small") suite = meander::Suite::small;
  else if (suite_name == "full") suite = meander::Suite::full;
  else throw UsageError("verify: unknown suite '" + suite_name + "' (expected small or full)");
  meander::VerifyOptions opts;
  opts.workers = p.at("workers").get<int>();
  opts.seed = p.at("seed").get<std::uint64_t>();
  Outcome out;
  Json criteria = Json::array();
  bool exact_failure = false, statistical_failure = false;
  for (const auto& r : meander::run_suite(suite, opts)) {
    criteria.push_back(meander::criterion_json(r));
    if (!r.passed) (r.statistical ? statistical_failure : exact_failure) = true;
    std::cerr << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " | " << r.detail
              << '\n';
  }
  out.result = {{"suite", suite_name}, {"criteria", criteria}, {"passed", !exact_failure && !statistical_failure}};
  out.exit_code = exact_failure ? kExitInvariant : statistical_failure ? kExitStatistical : kExitOk;
  return out;
}

Outcome dispatch(const std::string& subcommand, const Json& params) {
  if (subcommand == "shapes") return run_shapes(params);
  if (subcommand == "constants") return run_constants(params);
  if (subcommand == "moments") return run_moments(params);
  if (subcommand == "sample") return run_sample(params);
  if (subcommand == "verify") return run_verify(params);
  throw UsageError("unknown subcommand '" + subcommand + "'");
}

Json manifest_for(const std::string& subcommand, const Json& params, const Json& result) {
  Json m{{"subcommand", subcommand},
         {"parameters", params},
         {"engineVersion", meander::kEngineVersion},
         {"timestamp", utc_timestamp()},
         {"outputDigests", {{"result", hex64(fnv1a64(result.dump()))}}}};
  m["seed"] = params.contains("seed") ? params["seed"] : Json(nullptr);
  return m;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void emit_error(const std::string& subcommand, const std::string& kind, const std::string& message,
                const std::string& invariant = {}) {
  Json err{{"kind", kind}, {"message", message}};
  if (!invariant.empty()) err["invariant"] = invariant;
  emit(Json{{"subcommand", subcommand}, {"error", err}});
  std::cerr << "error: " << message << '\n';
}

/// Runs a subcommand and maps every failure mode onto an exit code.
int execute(const std::string& subcommand, const Json& params, Json* manifest_out = nullptr, Json* result_out = nullptr) {
  try {
    Outcome o = dispatch(subcommand, params);
    Json manifest = manifest_for(subcommand, params, o.result);
    if (manifest_out) *manifest_out = manifest;
    if (result_out) *result_out = o.result;
    if (!manifest_out) emit(Json{{"manifest", manifest}, {"result", o.result}});
    return o.exit_code;
  } catch (const meander::ShapeError& e) {
    const bool grammar = e.invariant() == meander::ShapeInvariant::grammar;
    emit_error(subcommand, grammar ? "usage" : "invariant", e.what(), meander::invariant_name(e.invariant()));
    return grammar ? kExitUsage : kExitInvariant;
  } catch (const UsageError& e) {
    emit_error(subcommand, "usage", e.what());
    return kExitUsage;
  } catch (const meander::OracleCapExceeded& e) {
    emit_error(subcommand, "usage", e.what());
    return kExitUsage;
  } catch (const meander::WeakShapeError& e) {
    emit_error(subcommand, "usage", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    emit_error(subcommand, "usage", e.what());
    return kExitUsage;
  } catch (const Json::exception& e) {
    emit_error(subcommand, "usage", std::string("bad parameters: ") + e.what());
    return kExitUsage;
  }
}

int replay(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    emit_error("replay", "usage", "cannot read " + path);
    return kExitUsage;
  }
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::exception& e) {
    emit_error("replay", "usage", std::string("not JSON: ") + e.what());
    return kExitUsage;
  }
  const Json& manifest = doc.contains("manifest") ? doc["manifest"] : doc;
  if (!manifest.contains("subcommand") || !manifest.contains("parameters") || !manifest.contains("outputDigests")) {
    emit_error("replay", "usage", "document has no run manifest");
    return kExitUsage;
  }
  const std::string sub = manifest["subcommand"].get<std::string>();
  Json fresh_manifest, fresh_result;
  const int code = execute(sub, manifest["parameters"], &fresh_manifest, &fresh_result);
  if (fresh_result.is_null()) return code;
  const std::string expected = manifest["outputDigests"]["result"].get<std::string>();
  const std::string actual = fresh_manifest["outputDigests"]["result"].get<std::string>();
  const bool identical = expected == actual;
  emit(Json{{"manifest", manifest_for("replay", Json{{"source", path}}, Json{{"digest", actual}})},
            {"result",
             {{"replayedSubcommand", sub},
              {"expectedDigest", expected},
              {"actualDigest", actual},
              {"identical", identical},
              {"replayedResult", fresh_result}}}});
  return identical ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meander: exact and Monte Carlo analysis of loop shapes in random meandric systems"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read option defaults from a key = value file; [section] names a subcommand");
  app.allow_config_extras(false);

  int workers = 1;
  app.add_option("--workers", workers, "Worker threads for oracles and sampling")
      ->envname("MEANDER_WORKERS")
      ->check(CLI::Range(1, 256));

  std::string shape = "simple";

  auto* shapes = app.add_subcommand("shapes", "List shapes of one half-length, or validate an encoding");
  int half_length = 0;
  int half_length_cap = meander::kDefaultShapeHalfLengthCap;
  std::string parse_text;
  auto* hl = shapes->add_option("--half-length,-L", half_length, "Half-length to enumerate")->check(CLI::PositiveNumber);
  auto* parse_opt = shapes->add_option("--parse", parse_text, "Shape encoding supp=..;up=..;lo=..");
  shapes->add_option("--half-length-cap", half_length_cap, "Largest half-length enumeration will accept");
  hl->excludes(parse_opt);
  shapes->require_option(1, 2);

  auto* constants = app.add_subcommand("constants", "K, c+, c-, overlap offsets and Gaussian parameters");
  constants->add_option("--shape", shape, "Shape encoding or one of simple, four-face, interleaving");

  auto* moments = app.add_subcommand("moments", "Factorial moments: exact enumeration, closed form, asymptotics");
  std::vector<std::string> modes{"exact", "formula"};
  std::int64_t moment_n = 0, moment_r = 0;
  int oracle_cap = meander::kOracleDefaultCap;
  moments->add_option("--mode", modes, "exact, formula and/or asymptotic (repeatable)")
      ->check(CLI::IsMember({"exact", "formula", "asymptotic"}))
      ->delimiter(',');
  moments->add_option("--n", moment_n, "System size")->required();
  moments->add_option("--r", moment_r, "Moment order")->required();
  moments->add_option("--shape", shape, "Shape encoding or reference name");
  moments->add_option("--oracle-cap", oracle_cap, "Largest n the enumeration oracle accepts (max 9)")
      ->check(CLI::Range(1, meander::kOracleHardCap));

  auto* sample = app.add_subcommand("sample", "Monte Carlo experiment over uniform meandric systems");
  int sample_n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = meander::kVerificationSeed;
  bool gate = false;
  std::string gate_set = "full";
  std::string csv;
  sample->add_option("--n", sample_n, "System size")->required();
  sample->add_option("--samples", samples, "Number of systems")->required();
  sample->add_option("--shape", shape, "Shape encoding or reference name");
  sample->add_option("--seed", seed, "Seed of the counter-based generator");
  sample->add_flag("--gate", gate, "Apply the statistical gates; exit 2 if any fails");
  sample->add_option("--gate-set", gate_set, "full (mean, variance, skewness, Anderson-Darling) or moments")
      ->check(CLI::IsMember({"full", "moments"}));
  sample->add_option("--csv", csv, "Write per-sample counts (position,x) to this file");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string suite = "small";
  verify->add_option("--suite", suite, "small or full");
  verify->add_option("--seed", seed, "Seed for the statistical checks");

  auto* replay_cmd = app.add_subcommand("replay", "Recompute an earlier output from its manifest and compare digests");
  std::string replay_path;
  replay_cmd->add_option("file", replay_path, "JSON output of an earlier run")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*replay_cmd) return replay(replay_path);

  Json params;
  std::string sub;
  if (*shapes) {
    sub = "shapes";
    params = *parse_opt ? Json{{"parse", parse_text}}
                        : Json{{"halfLength", half_length}, {"halfLengthCap", half_length_cap}};
  } else if (*constants) {
    sub = "constants";
    params = {{"shape", shape}};
  } else if (*moments) {
    sub = "moments";
    std::set<std::string> unique(modes.begin(), modes.end());
    params = {{"shape", shape}, {"n", moment_n},       {"r", moment_r},
              {"modes", unique}, {"workers", workers}, {"oracleCap", oracle_cap}};
  } else if (*sample) {
    sub = "sample";
    params = {{"n", sample_n},   {"samples", samples},                {"shape", shape}, {"seed", seed},
              {"workers", workers}, {"gate", gate ? gate_set : "none"}, {"csv", csv}};
  } else if (*verify) {
    sub = "verify";
    params = {{"suite", suite}, {"workers", workers}, {"seed", seed}};
  }
  return execute(sub, params);
}
