// covplan: exact solvers and instance tooling for connected cooperative
// coverage planning on topologic graphs.
//
// Exit codes: 0 solvable/pass, 1 unsolvable/fail, 2 timeout, 3 usage or I/O
// error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covplan/bench.hpp"
#include "covplan/exporters.hpp"
#include "covplan/generate.hpp"
#include "covplan/graph.hpp"
#include "covplan/reductions.hpp"
#include "covplan/search.hpp"
#include "covplan/tiling.hpp"

namespace fs = std::filesystem;
using namespace covplan;

namespace {

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// An instance file is either a plain graph object or an envelope
// {"graph": ..., "problem": ...}.
struct LoadedInstance {
  TopologicGraph graph;
  std::optional<ReductionOutput> envelope;
};

LoadedInstance load_instance(const std::string& path) {
  auto j = nlohmann::json::parse(read_file(path));
  LoadedInstance li;
  if (j.is_object() && j.contains("graph")) {
    li.envelope = reduction_from_json(j);
    li.graph = li.envelope->graph;
  } else {
    li.graph = graph_from_json(j);
  }
  return li;
}

Configuration parse_target_list(const TopologicGraph& g, const std::string& csv) {
  std::vector<RegionIndex> raw;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    auto idx = g.index_of(item);
    if (!idx) throw std::runtime_error("unknown region \"" + item + "\" in target");
    raw.push_back(*idx);
  }
  return make_configuration(g, std::move(raw));
}

double default_timeout() {
  if (const char* env = std::getenv("COVPLAN_TIMEOUT")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw std::runtime_error("COVPLAN_TIMEOUT is not a number");
    }
  }
  return 300.0;  // the experiment protocol's budget
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::solvable: return kExitSolvable;
    case Verdict::unsolvable: return kExitUnsolvable;
    case Verdict::timeout: return kExitTimeout;
  }
  return kExitError;
}

nlohmann::ordered_json problem_json(const TopologicGraph& g, const std::string& kind,
                                    std::size_t n, const std::optional<Configuration>& target,
                                    std::optional<unsigned> bound) {
  nlohmann::ordered_json p;
  p["kind"] = kind;
  p["n"] = n;
  if (target) p["target"] = configuration_to_json(g, *target);
  if (bound) p["bound"] = *bound;
  return p;
}

// --- solve -------------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string problem;
  int n = -1;
  std::string target_csv;
  int bound = -1;
  double timeout = -1;
  std::string plan_out;
  bool no_return = false;
};

int run_solve(const SolveArgs& args) {
  auto li = load_instance(args.instance);
  const auto& env = li.envelope;

  std::string problem = args.problem;
  if (problem.empty() && env) {
    switch (env->kind) {
      case ProblemKind::reachability:
      case ProblemKind::breachability: problem = "reachability"; break;
      case ProblemKind::coverage:
      case ProblemKind::bcoverage: problem = "coverage"; break;
    }
  }
  if (problem.empty()) throw std::runtime_error("--problem is required for plain graph files");

  std::size_t n;
  if (args.n > 0)
    n = static_cast<std::size_t>(args.n);
  else if (env)
    n = env->n;
  else
    throw std::runtime_error("--n is required for plain graph files");

  std::optional<Configuration> target;
  if (!args.target_csv.empty())
    target = parse_target_list(li.graph, args.target_csv);
  else if (env && env->target)
    target = env->target;

  std::optional<unsigned> bound;
  if (args.bound >= 0)
    bound = static_cast<unsigned>(args.bound);
  else if (env && env->bound)
    bound = env->bound;

  Budget budget;
  budget.wall_seconds = args.timeout >= 0 ? args.timeout : default_timeout();

  SolveOutcome out;
  if (problem == "reachability") {
    if (!target) throw std::runtime_error("reachability needs --target");
    out = solve_reachability(li.graph, n, *target, bound, budget);
  } else if (problem == "coverage") {
    CoverageOptions opts;
    opts.return_to_base = !args.no_return;
    out = solve_coverage(li.graph, n, bound, budget, opts);
  } else {
    throw std::runtime_error("unknown problem \"" + problem + "\"");
  }

  nlohmann::ordered_json report;
  report["instance"] = li.graph.name.empty() ? args.instance : li.graph.name;
  report["problem"] = problem_json(li.graph, problem, n, target, bound);
  report["verdict"] = to_string(out.verdict);
  if (out.plan) report["plan_length"] = out.plan->length();
  report["stats"] = {{"expanded", out.stats.expanded},
                     {"frontier_peak", out.stats.frontier_peak},
                     {"millis", out.stats.millis}};
  std::cout << report.dump(2) << "\n";

  if (!args.plan_out.empty() && out.plan) {
    // Timing is excluded here so identical runs write identical bytes.
    nlohmann::ordered_json pj;
    pj["problem"] = problem_json(li.graph, problem, n, target, bound);
    pj["verdict"] = to_string(out.verdict);
    pj["plan"] = plan_to_json(li.graph, *out.plan);
    pj["stats"] = {{"expanded", out.stats.expanded},
                   {"frontier_peak", out.stats.frontier_peak}};
    write_file(args.plan_out, pj.dump(2) + "\n");
  }
  return verdict_exit(out.verdict);
}

// --- tile ---------------------------------------------------------------------

int run_tile(const std::string& instance, const std::string& kind,
             const std::string& solution_out) {
  auto text = read_file(instance);
  nlohmann::ordered_json report;
  std::optional<TilingSolution> sol;
  if (kind == "square") {
    auto inst = parse_square_instance(text);
    sol = solve_square_tiling(inst);
    if (sol && check_square_tiling(inst, *sol))
      throw std::runtime_error("internal error: solution failed the checker");
  } else if (kind == "corridor") {
    auto inst = parse_corridor_instance(text);
    sol = solve_corridor_tiling(inst);
    if (sol && check_corridor_tiling(inst, *sol))
      throw std::runtime_error("internal error: solution failed the checker");
  } else {
    throw std::runtime_error("unknown kind \"" + kind + "\"");
  }
  report["kind"] = kind;
  report["verdict"] = sol ? "solvable" : "unsolvable";
  if (sol) report["tiling"] = tiling_solution_to_json(*sol);
  std::cout << report.dump(2) << "\n";
  if (!solution_out.empty() && sol)
    write_file(solution_out, tiling_solution_to_json(*sol).dump(2) + "\n");
  return sol ? kExitSolvable : kExitUnsolvable;
}

// --- reduce -------------------------------------------------------------------

int run_reduce(const std::string& instance, const std::string& kind, bool nc,
               const std::string& target_csv, const std::string& out_path) {
  ReductionOutput red;
  if (kind == "corridor-reach") {
    auto inst = parse_corridor_instance(read_file(instance));
    red = nc ? corridor_to_reachability_nc(inst).out : corridor_to_reachability(inst).out;
  } else if (kind == "square-breach") {
    auto inst = parse_square_instance(read_file(instance));
    red = nc ? square_to_breachability_nc(inst) : square_to_breachability(inst);
  } else if (kind == "reach-cover") {
    auto li = load_instance(instance);
    std::optional<Configuration> target;
    if (!target_csv.empty())
      target = parse_target_list(li.graph, target_csv);
    else if (li.envelope && li.envelope->target)
      target = li.envelope->target;
    if (!target) throw std::runtime_error("reach-cover needs --target or an envelope target");
    red = nc ? reachability_to_coverage_nc(li.graph, *target)
             : reachability_to_coverage(li.graph, *target);
  } else if (kind == "breach-bcover") {
    auto li = load_instance(instance);
    if (!li.envelope) throw std::runtime_error("breach-bcover needs an instance envelope");
    red = nc ? breachability_to_bcoverage_nc(*li.envelope)
             : breachability_to_bcoverage(*li.envelope);
  } else {
    throw std::runtime_error("unknown kind \"" + kind + "\"");
  }
  auto text = serialize_reduction(red);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitSolvable;
}

// --- gen ----------------------------------------------------------------------

int run_gen(const std::string& family, const std::string& uavs, std::vector<std::size_t> sizes,
            std::size_t count, std::uint64_t seed, const std::string& out_dir, double prob_move,
            double prob_comm) {
  SuiteFamily fam;
  if (family == "nc-undirected")
    fam.graph_class = GraphClass::nc_undirected;
  else if (family == "arbitrary")
    fam.graph_class = GraphClass::arbitrary;
  else
    throw std::runtime_error("unknown family \"" + family + "\"");
  if (uavs == "full")
    fam.uav_count = UavCount::full;
  else if (uavs == "half")
    fam.uav_count = UavCount::half;
  else
    throw std::runtime_error("--uavs must be full or half");
  if (sizes.empty()) sizes = {5, 10, 15, 20};

  auto suite = experiment_suite(fam, sizes, count, seed, prob_move, prob_comm);
  fs::create_directories(out_dir);

  nlohmann::ordered_json manifest;
  manifest["family"] = family;
  manifest["uavs"] = uavs;
  manifest["sizes"] = sizes;
  manifest["count_per_size"] = count;
  manifest["seed"] = seed;
  manifest["edge_prob_move"] = prob_move;
  manifest["edge_prob_comm"] = prob_comm;
  auto files = nlohmann::ordered_json::array();
  for (const auto& e : suite) {
    ReductionOutput env;
    env.graph = e.graph;
    env.n = e.n;
    env.kind = ProblemKind::coverage;
    env.node_key.assign(e.graph.region_count(), "");
    std::string fname = e.graph.name + ".json";
    write_file((fs::path(out_dir) / fname).string(), serialize_reduction(env));
    files.push_back(fname);
  }
  manifest["instances"] = std::move(files);
  write_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  std::cout << "wrote " << suite.size() << " instances to " << out_dir << "\n";
  return kExitSolvable;
}

// --- export -------------------------------------------------------------------

int run_export(const std::string& instance, const std::string& format,
               const std::string& plan_path, const std::string& problem, int n_flag,
               const std::string& target_csv, const std::string& out_stem) {
  auto li = load_instance(instance);

  std::size_t n = 0;
  if (n_flag > 0)
    n = static_cast<std::size_t>(n_flag);
  else if (li.envelope)
    n = li.envelope->n;

  ExportGoal goal = ExportGoal::cover();
  std::string kind = problem;
  if (kind.empty() && li.envelope &&
      (li.envelope->kind == ProblemKind::reachability ||
       li.envelope->kind == ProblemKind::breachability))
    kind = "reachability";
  if (kind == "reachability") {
    Configuration target;
    if (!target_csv.empty())
      target = parse_target_list(li.graph, target_csv);
    else if (li.envelope && li.envelope->target)
      target = *li.envelope->target;
    else
      throw std::runtime_error("reachability export needs a target");
    if (n == 0) n = target.size();
    goal = ExportGoal::reach(std::move(target));
  }
  if (n == 0 && format != "dot") throw std::runtime_error("--n is required");

  if (format == "pddl") {
    auto out = to_pddl(li.graph, n, goal);
    if (out_stem.empty()) {
      std::cout << out.domain_text << "\n" << out.problem_text;
    } else {
      write_file(out_stem + "-domain.pddl", out.domain_text);
      write_file(out_stem + "-problem.pddl", out.problem_text);
      std::cout << out_stem << "-domain.pddl\n" << out_stem << "-problem.pddl\n";
    }
  } else if (format == "smv") {
    auto text = to_smv(li.graph, n, goal);
    if (out_stem.empty())
      std::cout << text;
    else {
      write_file(out_stem + ".smv", text);
      std::cout << out_stem << ".smv\n";
    }
  } else if (format == "dot") {
    std::optional<Plan> plan;
    if (!plan_path.empty()) {
      auto pj = nlohmann::json::parse(read_file(plan_path));
      plan = plan_from_json(li.graph, pj.is_object() ? pj.at("plan") : pj);
    }
    auto text = to_dot(li.graph, plan);
    if (out_stem.empty())
      std::cout << text;
    else {
      write_file(out_stem + ".dot", text);
      std::cout << out_stem << ".dot\n";
    }
  } else {
    throw std::runtime_error("unknown format \"" + format + "\"");
  }
  return kExitSolvable;
}

// --- validate -----------------------------------------------------------------

int run_validate(const std::string& instance, const std::string& plan_path,
                 const std::string& goal_kind, const std::string& target_csv, int bound,
                 bool no_return) {
  auto li = load_instance(instance);
  auto pj = nlohmann::json::parse(read_file(plan_path));
  auto plan = plan_from_json(li.graph, pj.is_object() ? pj.at("plan") : pj);

  PlanGoal goal;
  if (goal_kind == "cover") {
    goal = PlanGoal::cover(!no_return);
  } else if (goal_kind == "reach") {
    std::optional<Configuration> target;
    if (!target_csv.empty())
      target = parse_target_list(li.graph, target_csv);
    else if (li.envelope && li.envelope->target)
      target = li.envelope->target;
    if (!target) throw std::runtime_error("reach validation needs a target");
    goal = PlanGoal::reach(*target);
  } else if (goal_kind == "execution") {
    goal = PlanGoal::execution();
  } else {
    throw std::runtime_error("unknown goal \"" + goal_kind + "\"");
  }

  std::optional<unsigned> b;
  if (bound >= 0)
    b = static_cast<unsigned>(bound);
  else if (li.envelope && li.envelope->bound)
    b = li.envelope->bound;

  auto res = validate_plan(li.graph, plan, goal, b);
  nlohmann::ordered_json report;
  report["valid"] = res.ok;
  if (!res.ok) {
    report["frame"] = res.frame;
    report["violation"] = res.message;
  }
  std::cout << report.dump(2) << "\n";
  return res.ok ? kExitSolvable : kExitUnsolvable;
}

// --- bench --------------------------------------------------------------------

int run_bench(const std::string& suite_dir, double timeout, const std::string& json_out) {
  auto manifest =
      nlohmann::json::parse(read_file((fs::path(suite_dir) / "manifest.json").string()));
  std::vector<SuiteEntry> entries;
  for (const auto& f : manifest.at("instances")) {
    auto li = load_instance((fs::path(suite_dir) / f.get<std::string>()).string());
    if (!li.envelope) throw std::runtime_error("suite instances must be envelopes");
    SuiteEntry e;
    e.graph = li.graph;
    e.n = li.envelope->n;
    e.size = li.graph.region_count();
    entries.push_back(std::move(e));
  }
  auto results = run_suite(entries, timeout >= 0 ? timeout : default_timeout());
  for (const auto& r : results)
    if (r.verdict == Verdict::solvable && !r.plan_valid)
      throw std::runtime_error("internal error: a returned plan failed validation");
  auto rows = aggregate(results);
  std::cout << format_table(rows);
  if (!json_out.empty()) write_file(json_out, bench_report_json(results, rows).dump(2) + "\n");
  return kExitSolvable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and instance tooling for connected cooperative coverage planning"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Decide coverage or reachability and emit a plan");
  solve->add_option("--instance", solve_args.instance, "Instance JSON (graph or envelope)")
      ->required();
  solve->add_option("--problem", solve_args.problem, "coverage|reachability");
  solve->add_option("--n", solve_args.n, "Number of UAVs");
  solve->add_option("--target", solve_args.target_csv, "Comma-separated region labels");
  solve->add_option("--bound", solve_args.bound, "Step bound (bounded variants)");
  solve->add_option("--timeout", solve_args.timeout, "Wall-clock budget in seconds");
  solve->add_option("--plan-out", solve_args.plan_out, "Write the plan JSON here");
  solve->add_flag("--no-return", solve_args.no_return, "Coverage without returning to base");

  std::string tile_instance, tile_kind, tile_solution_out;
  auto* tile = app.add_subcommand("tile", "Decide a square or corridor tiling instance");
  tile->add_option("--instance", tile_instance)->required();
  tile->add_option("--kind", tile_kind, "square|corridor")->required();
  tile->add_option("--solution-out", tile_solution_out);

  std::string red_instance, red_kind, red_target, red_out;
  bool red_nc = false;
  auto* reduce = app.add_subcommand("reduce", "Construct a reduction gadget instance");
  reduce->add_option("--instance", red_instance)->required();
  reduce
      ->add_option("--kind", red_kind, "corridor-reach|square-breach|reach-cover|breach-bcover")
      ->required();
  reduce->add_flag("--nc", red_nc, "Neighbor-communicable variant");
  reduce->add_option("--target", red_target, "Target for reach-cover on plain graphs");
  reduce->add_option("--out", red_out, "Output file (stdout if omitted)");

  std::string gen_family = "nc-undirected", gen_uavs = "full", gen_out = "suite";
  std::vector<std::size_t> gen_sizes;
  std::size_t gen_count = 100;
  std::uint64_t gen_seed = 0;
  double gen_pm = 0.3, gen_pc = 0.3;
  auto* gen = app.add_subcommand("gen", "Generate a random instance suite");
  gen->add_option("--family", gen_family, "nc-undirected|arbitrary");
  gen->add_option("--uavs", gen_uavs, "full|half");
  gen->add_option("--size", gen_sizes, "Region counts (repeatable; default 5 10 15 20)");
  gen->add_option("--count", gen_count, "Instances per size");
  gen->add_option("--seed", gen_seed, "Suite seed")->required();
  gen->add_option("--out", gen_out, "Output directory");
  gen->add_option("--prob-move", gen_pm, "Move edge probability");
  gen->add_option("--prob-comm", gen_pc, "Comm edge probability");

  std::string exp_instance, exp_format, exp_plan, exp_problem, exp_target, exp_out;
  int exp_n = -1;
  auto* exp = app.add_subcommand("export", "Emit PDDL, SMV or DOT");
  exp->add_option("--instance", exp_instance)->required();
  exp->add_option("--format", exp_format, "pddl|smv|dot")->required();
  exp->add_option("--plan", exp_plan, "Plan JSON for DOT frames");
  exp->add_option("--problem", exp_problem, "coverage|reachability");
  exp->add_option("--n", exp_n, "Number of UAVs");
  exp->add_option("--target", exp_target, "Comma-separated region labels");
  exp->add_option("--out", exp_out, "Output stem (stdout if omitted)");

  std::string val_instance, val_plan, val_goal = "cover", val_target;
  int val_bound = -1;
  bool val_no_return = false;
  auto* val = app.add_subcommand("validate", "Check a plan against an instance and goal");
  val->add_option("--instance", val_instance)->required();
  val->add_option("--plan", val_plan)->required();
  val->add_option("--goal", val_goal, "cover|reach|execution");
  val->add_option("--target", val_target);
  val->add_option("--bound", val_bound);
  val->add_flag("--no-return", val_no_return);

  std::string bench_suite, bench_json;
  double bench_timeout = -1;
  auto* bench = app.add_subcommand("bench", "Run coverage over a generated suite");
  bench->add_option("--suite", bench_suite, "Suite directory with manifest.json")->required();
  bench->add_option("--timeout", bench_timeout, "Per-instance budget in seconds");
  bench->add_option("--json", bench_json, "Write the machine-readable report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (tile->parsed()) return run_tile(tile_instance, tile_kind, tile_solution_out);
    if (reduce->parsed()) return run_reduce(red_instance, red_kind, red_nc, red_target, red_out);
    if (gen->parsed())
      return run_gen(gen_family, gen_uavs, gen_sizes, gen_count, gen_seed, gen_out, gen_pm,
                     gen_pc);
    if (exp->parsed())
      return run_export(exp_instance, exp_format, exp_plan, exp_problem, exp_n, exp_target,
                        exp_out);
    if (val->parsed())
      return run_validate(val_instance, val_plan, val_goal, val_target, val_bound, val_no_return);
    if (bench->parsed()) return run_bench(bench_suite, bench_timeout, bench_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
