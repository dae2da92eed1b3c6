// Copyright 2026 The Authors.
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

// The nashcore command-line front end. Run() takes the arguments after the
// program name and returns the process exit code:
//   0  success, or the checked property holds
//   1  the checked property fails (the report carries a witness)
//   2  usage, input or resource error

#ifndef NASHCORE_TOOLS_CLI_H_
#define NASHCORE_TOOLS_CLI_H_

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nashcore/nashcore.h"

namespace nashcore::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

// key=value pairs from --params.
inline std::map<std::string, std::string> ParseParams(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw FormatError("parameter '" + item + "' is not key=value");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

inline long ParamInt(const std::map<std::string, std::string>& p, const std::string& key,
                     std::optional<long> fallback = std::nullopt) {
  auto it = p.find(key);
  if (it == p.end()) {
    if (fallback) return *fallback;
    throw FormatError("missing parameter '" + key + "'");
  }
  Rational q = ParseRational(it->second);
  if (!IsInteger(q) || !q.get_num().fits_slong_p()) throw FormatError("parameter '" + key + "' must be an integer");
  return q.get_num().get_si();
}

inline std::optional<Rational> ParamRational(const std::map<std::string, std::string>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) return std::nullopt;
  return ParseRational(it->second);
}

inline std::vector<int> ParseIndexList(const std::string& text, int limit, const char* what) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    Rational q = ParseRational(cur);
    if (!IsInteger(q) || q < 0 || q >= limit) throw FormatError(std::string("bad ") + what + " index '" + cur + "'");
    out.push_back(static_cast<int>(q.get_num().get_si()));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else if (c != ' ') cur += c;
  }
  flush();
  return out;
}

inline void Emit(const Streams& io, const std::string& path, Json body) {
  std::string text = DumpJson(body);
  if (path.empty()) io.out << text;
  else WriteFile(path, text);
}

struct Context {
  std::string command;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool record_timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

inline Json Finish(const Context& ctx, Manifest& manifest, int exit_status) {
  if (ctx.record_timing) {
    manifest.WallClock(std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.start).count());
  }
  return manifest.ToJson(exit_status);
}

inline Instance LoadInput(Manifest& manifest, const std::string& path, AxiomPolicy policy = AxiomPolicy::kCheck) {
  if (path.empty()) throw FormatError("--in is required");
  std::string text = ReadFile(path);
  manifest.Input(path, text);
  return InstanceFromJson(ParseJsonText(text), policy);
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string name;
  std::vector<std::string> params;
  std::string out;
};

inline int RunGen(const Streams& io, const Context& ctx, const GenArgs& a) {
  Manifest manifest("gen", ctx.seed);
  manifest.Flag("name", a.name);
  manifest.Flag("params", a.params);
  auto p = ParseParams(a.params);
  Json layout = Json::object();
  std::optional<Instance> inst;
  if (a.name == "xos") {
    inst = GenXosExample(static_cast<int>(ParamInt(p, "k")));
  } else if (a.name == "rest1") {
    inst = GenRest1(static_cast<int>(ParamInt(p, "q")), static_cast<int>(ParamInt(p, "vpg", 1)));
  } else if (a.name == "lb16-15") {
    long r = ParamInt(p, "r");
    Lb1615Params lp = Lb1615Standard(static_cast<int>(r));
    lp.pool = static_cast<int>(ParamInt(p, "pool", lp.pool));
    lp.cap = static_cast<int>(ParamInt(p, "cap", lp.cap));
    lp.k = static_cast<int>(ParamInt(p, "k", lp.k));
    lp.dummies = static_cast<int>(ParamInt(p, "dummies", lp.dummies));
    inst = GenLb1615(lp);
  } else if (a.name == "lb00") {
    inst = GenLb00(static_cast<int>(ParamInt(p, "beta")), static_cast<int>(ParamInt(p, "r")));
  } else if (a.name == "tight2a") {
    auto alpha = ParamRational(p, "alpha");
    auto eps = ParamRational(p, "eps");
    if (!alpha || !eps) throw FormatError("tight2a needs alpha=p/q and eps=p/q");
    std::optional<long> n, y;
    if (p.count("n")) n = ParamInt(p, "n");
    if (p.count("y")) y = ParamInt(p, "y");
    auto [instance, L] = GenTight2Alpha(*alpha, *eps, n, y);
    layout = Json{{"n", L.n}, {"y", L.y}, {"k", L.k}, {"overridden", L.overridden},
                  {"v1", L.v1}, {"v2", L.v2}, {"local_optimum", CommitteeToJson(instance, L.w)},
                  {"deviation", CommitteeToJson(instance, L.deviation)}};
    inst = std::move(instance);
  } else {
    throw FormatError("unknown generator '" + a.name + "'");
  }
  Json body = InstanceToJson(*inst);
  if (!layout.empty()) body["layout"] = layout;
  body["manifest"] = Finish(ctx, manifest, kExitOk);
  Emit(io, a.out, body);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string rule = "snw";
  std::string method = "global";
  std::string epsilon;
  std::string start;
  std::string in;
  std::string out;
};

inline int RunSolve(const Streams& io, const Context& ctx, const SolveArgs& a) {
  Manifest manifest("solve", ctx.seed);
  manifest.Flag("rule", a.rule);
  manifest.Flag("method", a.method);
  if (!a.epsilon.empty()) manifest.Flag("epsilon", a.epsilon);
  if (!a.start.empty()) manifest.Flag("start", a.start);
  Instance inst = LoadInput(manifest, a.in);
  SolverConfig cfg;
  cfg.rule = ParseRule(a.rule);
  if (a.method == "global") cfg.method = Method::kGlobal;
  else if (a.method == "local") cfg.method = Method::kLocal;
  else throw FormatError("unknown method '" + a.method + "'");
  if (!a.epsilon.empty()) cfg.epsilon = ParseRational(a.epsilon);
  if (!a.start.empty()) cfg.start = ParseCommitteeIds(inst, a.start);
  cfg.seed = ctx.seed;
  SolveResult res = Solve(inst, cfg);
  Json body{{"committee", CommitteeToJson(inst, res.committee)},
            {"score", ScoreToJson(res.score)},
            {"iterations", res.iterations}};
  body["manifest"] = Finish(ctx, manifest, kExitOk);
  Emit(io, a.out, body);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string notion = "core";
  std::string gamma = "1";
  std::string mode = "subsetW";
  std::string committee;
  std::string in;
  std::string report;
  int min_coalition = 1;
  bool feasible_deviations = false;
  bool weak = false;
  bool lift = false;
};

inline int RunVerify(const Streams& io, const Context& ctx, const VerifyArgs& a) {
  Manifest manifest("verify", ctx.seed);
  manifest.Flag("notion", a.notion);
  manifest.Flag("gamma", a.gamma);
  manifest.Flag("mode", a.mode);
  manifest.Flag("committee", a.committee);
  if (a.min_coalition != 1) manifest.Flag("min_coalition", a.min_coalition);
  if (a.feasible_deviations) manifest.Flag("feasible_deviations", true);
  if (a.weak) manifest.Flag("weak", true);
  if (a.lift) manifest.Flag("lift", true);
  Notion notion = ParseNotion(a.notion);
  GammaValue gamma = ParseGamma(a.gamma);
  Instance inst = LoadInput(manifest, a.in);
  Committee w = ParseCommitteeIds(inst, a.committee);
  VerifyOptions vo;
  vo.jobs = ctx.jobs;
  vo.mode = ParseRestrainedMode(a.mode);
  vo.min_coalition_size = a.min_coalition;
  vo.deviation_must_be_feasible = a.feasible_deviations;
  vo.weak_endowment = a.weak;
  vo.auto_lift = a.lift;
  VerificationReport rep = Verify(notion, inst, w, gamma.value, vo);
  Json body = VerificationReportToJson(inst, rep);
  if (gamma.over_approximation) {
    body["warnings"] = Json::array({"gamma " + gamma.source + " was replaced by the rational upper bound " +
                                    ToString(gamma.value) + "; a pass verdict is sound, a fail verdict is not"});
  }
  int code = rep.pass ? kExitOk : kExitFail;
  body["manifest"] = Finish(ctx, manifest, code);
  Emit(io, a.report, body);
  return code;
}

// ---------------------------------------------------------------------------

struct CheckUtilityArgs {
  std::string in;
  std::string report;
  int exhaustive_limit = 20;
  long samples = 0;
};

inline Json WitnessToJson(const Instance& inst, const std::optional<SetElementWitness>& w) {
  if (!w) return nullptr;
  return Json{{"set", CommitteeToJson(inst, w->t)}, {"element", inst.candidate_id(w->j)}};
}

inline int RunCheckUtility(const Streams& io, const Context& ctx, const CheckUtilityArgs& a) {
  Manifest manifest("check-utility", ctx.seed);
  manifest.Flag("exhaustive_limit", a.exhaustive_limit);
  if (a.samples > 0) manifest.Flag("samples", a.samples);
  Instance inst = LoadInput(manifest, a.in, AxiomPolicy::kTrust);
  AxiomOptions opts;
  opts.exhaustive_limit = a.exhaustive_limit;
  opts.sample_budget = static_cast<std::uint64_t>(a.samples);
  opts.seed = ctx.seed;
  Json voters = Json::array();
  bool ok = true;
  for (int i = 0; i < inst.n(); ++i) {
    const Utility& u = inst.utility(i);
    Committee support = Range(inst.m());
    AxiomReport rep = CheckAxioms(u, support, opts);
    Json v{{"voter", i},
           {"monotone", rep.monotone},
           {"lipschitz", rep.lipschitz},
           {"exhaustive", rep.exhaustive},
           {"pairs_checked", rep.pairs_checked}};
    if (!rep.monotone) v["monotone_witness"] = WitnessToJson(inst, rep.monotone_witness);
    if (!rep.lipschitz) v["lipschitz_witness"] = WitnessToJson(inst, rep.lipschitz_witness);
    if (rep.exhaustive) v["self_bounding_constant"] = SelfBoundingConstant(u, support, opts).ToString();
    ok = ok && rep.monotone && rep.lipschitz;
    voters.push_back(v);
  }
  int code = ok ? kExitOk : kExitFail;
  Json body{{"verdict", ok ? "pass" : "fail"}, {"voters", voters}};
  body["manifest"] = Finish(ctx, manifest, code);
  Emit(io, a.report, body);
  return code;
}

// ---------------------------------------------------------------------------

struct ExperimentArgs {
  std::string kind;
  std::string alpha = "1/2";
  std::string delta = "1/2";
  int beta = 1;
  long trials = 100000;
  int voter = 0;
  std::string set;        // candidate ids; default all
  std::string committee;  // endow2: the committee under attack
  std::string coalition;  // endow2: voter indices
  std::string kappa = "1.454";
  std::string eta = "11.63";
  std::string phi = "1";
  std::string q;
  long gamma = 0;
  std::string in;
  std::string report;
};

inline int RunExperiment(const Streams& io, const Context& ctx, const ExperimentArgs& a) {
  Manifest manifest("experiment", ctx.seed);
  manifest.Flag("kind", a.kind);
  Instance inst = LoadInput(manifest, a.in, AxiomPolicy::kTrust);
  Committee t = a.set.empty() ? Range(inst.m()) : ParseCommitteeIds(inst, a.set);
  if (!a.set.empty()) manifest.Flag("set", a.set);
  if (a.voter < 0 || a.voter >= inst.n()) throw FormatError("--voter is out of range");
  Json body;
  int code = kExitOk;
  if (a.kind == "sampling-bound") {
    manifest.Flag("alpha", a.alpha);
    manifest.Flag("beta", a.beta);
    manifest.Flag("voter", a.voter);
    Rational alpha = ParseRational(a.alpha);
    SamplingBoundReport rep = VerifySamplingBound(inst.utility(a.voter), t, alpha, a.beta);
    body = Json{{"expectation", rep.expectation.ToString()},
                {"bound", rep.bound.ToString()},
                {"self_bounding_constant", rep.self_bounding_constant.ToString()},
                {"premise", rep.premise},
                {"verdict", !rep.premise ? "premise-unmet" : (rep.holds ? "pass" : "fail")}};
    code = rep.premise ? (rep.holds ? kExitOk : kExitFail) : kExitUsage;
  } else if (a.kind == "lower-tail") {
    manifest.Flag("alpha", a.alpha);
    manifest.Flag("delta", a.delta);
    manifest.Flag("beta", a.beta);
    manifest.Flag("trials", a.trials);
    manifest.Flag("voter", a.voter);
    LowerTailReport rep = McLowerTail(inst.utility(a.voter), t, ParseRational(a.alpha), ParseRational(a.delta),
                                      a.beta, a.trials, ctx.seed, ctx.jobs);
    body = Json{{"mu0", rep.mu0.ToString()},
                {"mu0_exact", rep.mu0_exact},
                {"threshold", rep.threshold.ToString()},
                {"trials", rep.trials},
                {"hits", rep.hits},
                {"frequency", ToString(rep.frequency)},
                {"bound", rep.bound.ToString()},
                {"allowance", rep.allowance.ToString()},
                {"method", "monte-carlo"},
                {"verdict", TailVerdictName(rep.verdict)}};
    if (!rep.mu0_exact) body["mu0_stderr"] = rep.mu0_stderr;
    code = rep.verdict == TailVerdict::kPass ? kExitOk : (rep.verdict == TailVerdict::kFail ? kExitFail : kExitUsage);
  } else if (a.kind == "endow2") {
    if (a.q.empty() || a.coalition.empty()) throw FormatError("endow2 needs --q and --coalition");
    Endow2Params p;
    p.kappa = ParseRational(a.kappa);
    p.eta = ParseRational(a.eta);
    p.phi = ParseRational(a.phi);
    p.q = ParseRational(a.q);
    p.beta = a.beta;
    if (a.gamma > 0) p.gamma = a.gamma;
    p.trials = a.trials;
    p.seed = ctx.seed;
    manifest.Flag("kappa", a.kappa);
    manifest.Flag("eta", a.eta);
    manifest.Flag("phi", a.phi);
    manifest.Flag("q", a.q);
    manifest.Flag("beta", a.beta);
    manifest.Flag("trials", a.trials);
    manifest.Flag("coalition", a.coalition);
    manifest.Flag("committee", a.committee);
    if (a.gamma > 0) manifest.Flag("gamma", a.gamma);
    Committee w = a.committee.empty() ? Committee{} : ParseCommitteeIds(inst, a.committee);
    std::vector<int> s = ParseIndexList(a.coalition, inst.n(), "voter");
    Endow2Report rep = Endow2Experiment(inst, w, s, t, p);
    body = Json{{"premises", rep.premises},
                {"unmet", rep.unmet},
                {"gamma", rep.gamma},
                {"reduced", CommitteeToJson(inst, rep.reduced)},
                {"small_size", ToString(rep.small_size)},
                {"cost_cap", ToString(rep.cost_cap)},
                {"trials", rep.trials},
                {"coalition_event", rep.coalition_hits},
                {"cost_event", rep.cost_hits},
                {"joint_event", rep.joint_hits},
                {"witness_blocks_at_32", rep.witness_blocks}};
    if (rep.witness) {
      body["witness"] = Json{{"deviation", CommitteeToJson(inst, *rep.witness)}, {"voters", *rep.witness_voters}};
    }
    code = !rep.premises ? kExitUsage : (rep.witness_blocks ? kExitOk : kExitFail);
  } else {
    throw FormatError("unknown experiment kind '" + a.kind + "'");
  }
  body["seed"] = ctx.seed;
  body["manifest"] = Finish(ctx, manifest, code);
  Emit(io, a.report, body);
  return code;
}

// ---------------------------------------------------------------------------

struct SuiteArgs {
  std::string name;
  long seeds = 0;
  std::string report;
};

inline int RunTheoremSuite(const Streams& io, const Context& ctx, const SuiteArgs& a) {
  Manifest manifest("theorem-suite", ctx.seed);
  manifest.Flag("name", a.name);
  if (a.seeds > 0) manifest.Flag("seeds", a.seeds);
  std::vector<std::string> names = a.name == "all" ? SuiteNames() : std::vector<std::string>{a.name};
  Json results = Json::array();
  bool ok = true;
  for (const auto& name : names) {
    SuiteOptions o;
    o.count = a.seeds;
    o.seed = ctx.seed;
    o.jobs = ctx.jobs;
    SuiteResult r = RunSuite(name, o);
    ok = ok && r.pass;
    results.push_back(SuiteResultToJson(r));
  }
  int code = ok ? kExitOk : kExitFail;
  Json body = names.size() == 1 ? results[0] : Json{{"suites", results}, {"pass", ok}};
  body["manifest"] = Finish(ctx, manifest, code);
  Emit(io, a.report, body);
  return code;
}

}  // namespace detail

inline int Run(const std::vector<std::string>& args, const Streams& io = {std::cout, std::cerr}) {
  using namespace detail;
  CLI::App app{"Committee selection rules and brute-force stability verifiers", "nashcore"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Context ctx;
  app.add_option("--jobs", ctx.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--seed", ctx.seed, "Seed for every random choice");
  app.add_flag("--record-timing", ctx.record_timing, "Include wall-clock time in the manifest");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Build a named instance");
  g->add_option("--name", gen.name)->required()->check(CLI::IsMember({"xos", "rest1", "lb16-15", "lb00", "tight2a"}));
  g->add_option("--params", gen.params, "key=value pairs");
  g->add_option("--out", gen.out);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run a scoring rule");
  s->add_option("--rule", solve.rule)->check(CLI::IsMember({"pav", "snw", "gpav"}));
  s->add_option("--method", solve.method)->check(CLI::IsMember({"global", "local"}));
  s->add_option("--epsilon", solve.epsilon);
  s->add_option("--start", solve.start, "Starting basis as comma-separated ids");
  s->add_option("--in", solve.in)->required();
  s->add_option("--out", solve.out);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Decide a stability notion for a committee");
  v->add_option("--notion", verify.notion)
      ->check(CLI::IsMember({"core", "restrained-core", "ejr", "endowment", "pb-core"}));
  v->add_option("--gamma", verify.gamma, "p/q, decimal or e^B");
  v->add_option("--mode", verify.mode)->check(CLI::IsMember({"subsetW", "anyW"}));
  v->add_option("--committee", verify.committee)->required();
  v->add_option("--in", verify.in)->required();
  v->add_option("--report", verify.report);
  v->add_option("--min-coalition", verify.min_coalition)->check(CLI::PositiveNumber);
  v->add_flag("--feasible-deviations", verify.feasible_deviations);
  v->add_flag("--weak", verify.weak);
  v->add_flag("--lift", verify.lift);

  CheckUtilityArgs check;
  auto* c = app.add_subcommand("check-utility", "Check monotonicity, 1-Lipschitz and self-bounding");
  c->add_option("--in", check.in)->required();
  c->add_option("--report", check.report);
  c->add_option("--exhaustive-limit", check.exhaustive_limit);
  c->add_option("--samples", check.samples);

  ExperimentArgs exp;
  auto* e = app.add_subcommand("experiment", "Sampling experiments");
  e->add_option("--kind", exp.kind)->required()->check(CLI::IsMember({"sampling-bound", "lower-tail", "endow2"}));
  e->add_option("--alpha", exp.alpha);
  e->add_option("--delta", exp.delta);
  e->add_option("--beta", exp.beta)->check(CLI::PositiveNumber);
  e->add_option("--trials", exp.trials)->check(CLI::PositiveNumber);
  e->add_option("--voter", exp.voter);
  e->add_option("--set", exp.set);
  e->add_option("--committee", exp.committee);
  e->add_option("--coalition", exp.coalition);
  e->add_option("--kappa", exp.kappa);
  e->add_option("--eta", exp.eta);
  e->add_option("--phi", exp.phi);
  e->add_option("--q", exp.q);
  e->add_option("--gamma", exp.gamma);
  e->add_option("--in", exp.in)->required();
  e->add_option("--report", exp.report);

  SuiteArgs suite;
  auto* t = app.add_subcommand("theorem-suite", "Run a property suite");
  std::vector<std::string> suite_names = SuiteNames();
  suite_names.push_back("all");
  t->add_option("--name", suite.name)->required()->check(CLI::IsMember(suite_names));
  t->add_option("--seeds", suite.seeds, "Instances, points or trials (suite default when omitted)");
  t->add_option("--report", suite.report);

  // Global options are accepted before or after the subcommand.
  for (auto* sub : {g, s, v, c, e, t}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    io.out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    io.err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*g) return RunGen(io, ctx, gen);
    if (*s) return RunSolve(io, ctx, solve);
    if (*v) return RunVerify(io, ctx, verify);
    if (*c) return RunCheckUtility(io, ctx, check);
    if (*e) return RunExperiment(io, ctx, exp);
    if (*t) return RunTheoremSuite(io, ctx, suite);
  } catch (const EnumerationLimitError& ex) {
    io.err << "error: " << ex.what() << "\nadvisory: reduce the instance or raise the enumeration cap\n";
    return kExitUsage;
  } catch (const Error& ex) {
    io.err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nashcore::cli

#endif  // NASHCORE_TOOLS_CLI_H_
