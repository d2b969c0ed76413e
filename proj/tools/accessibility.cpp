// accessibility analyze|fold|verify <instance.json> [options]
//
// Exit codes: 0 pass, 1 a check or claim failed, 2 parse error,
// 3 acylindricity inconclusive, 4 step budget exhausted, 5 engine invariant.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <accessibility/accessibility.hpp>

namespace {

enum Exit { pass = 0, failed = 1, parse = 2, inconclusive = 3, budget = 4, engine = 5 };

struct Options {
  std::string                file;
  std::optional<std::size_t> k;
  std::optional<std::size_t> C;
  std::optional<std::size_t> depth_cap;
  std::optional<std::size_t> step_budget;
  std::optional<std::size_t> path_check_len;
  std::optional<std::size_t> inject_fault;
  std::string                dot_dir;
  std::string                trace_out;
  std::uint64_t              seed = 1;
  bool                       force = false;
};

void write_file(std::filesystem::path const& p, std::string const& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) {
    throw std::runtime_error("cannot write " + p.string());
  }
}

void write_dots(Options const& o, acc::PipelineRun const& run) {
  if (o.dot_dir.empty()) {
    return;
  }
  std::filesystem::path dir(o.dot_dir);
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < run.states.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "step_%04zu.dot", i);
    write_file(dir / name, acc::to_dot(run.states[i], "step " + std::to_string(i)));
  }
  if (run.final_state) {
    write_file(dir / "final.dot", acc::to_dot(*run.final_state, "final"));
  }
}

struct Loaded {
  acc::Instance instance;
  acc::Analysis analysis;
};

Loaded load(Options const& o) {
  Loaded l{acc::load_instance(o.file), {}};
  auto&  in = l.instance;
  in.k                 = o.k.value_or(in.k);
  in.C                 = o.C.value_or(in.C);
  in.depth_cap         = o.depth_cap.value_or(in.depth_cap);
  in.path_check_length = o.path_check_len.value_or(in.path_check_length);
  if (o.step_budget) {
    in.step_budget = o.step_budget;
  }
  if (in.C == 0) {
    throw acc::ParseError("C must be positive");
  }
  l.analysis = acc::analyze(*in.graph, in.C, in.depth_cap, in.measure);
  return l;
}

bool checks_pass(Loaded const& l) {
  auto const& an = l.analysis;
  return an.weakly_reduced.holds && an.minimal.holds && an.acylindricity.conclusive
         && an.acylindricity.k <= l.instance.k;
}

acc::json header(Loaded const& l, std::string const& command) {
  auto const& in = l.instance;
  acc::json   j{{"command", command},
              {"instance", in.name},
              {"k", in.k},
              {"C", in.C},
              {"checks", acc::to_json(*in.graph, l.analysis)}};
  j["checks"]["k_within"] = l.analysis.acylindricity.conclusive && l.analysis.acylindricity.k <= in.k;
  return j;
}

void emit(acc::json const& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(Options const& o) {
  auto l = load(o);
  auto j = header(l, "analyze");
  j["n"] = l.instance.tuple.size();
  if (auto g = acc::grushko_holds(l.analysis, l.instance.tuple.size())) {
    j["grushko"] = *g;
  }
  emit(j);
  if (!l.analysis.acylindricity.conclusive) {
    return inconclusive;
  }
  return checks_pass(l) ? pass : failed;
}

int run_command(Options const& o, bool verify) {
  auto l = load(o);
  auto j = header(l, verify ? "verify" : "fold");
  if (!checks_pass(l) && !o.force) {
    j["error"] = "structural checks fail; pass --force to run anyway";
    emit(j);
    return l.analysis.acylindricity.conclusive ? failed : inconclusive;
  }
  auto const&          in = l.instance;
  acc::PipelineOptions po;
  po.k                 = in.k;
  po.C                 = in.C;
  po.step_budget       = in.step_budget;
  po.path_check_length = in.path_check_length;
  po.inject_fault_at   = o.inject_fault;
  po.keep_states       = !o.dot_dir.empty();

  acc::PipelineRun run;
  int              code = pass;
  try {
    acc::run_pipeline(in.graph, in.base, in.tuple, po, run);
  } catch (acc::BudgetExhausted const& e) {
    j["error"] = e.what();
    code       = budget;
  } catch (acc::EngineError const& e) {
    j["error"] = e.what();
    if (!run.steps.empty()) {
      j["failed_step"] = acc::to_json(run.steps.back());
    }
    code = engine;
  }
  if (!o.trace_out.empty()) {
    write_file(o.trace_out, acc::trace_lines(run));
  }
  write_dots(o, run);
  j["steps"] = run.steps.size();
  if (code != pass) {
    emit(j);
    return code;
  }
  j["c_initial"]   = acc::to_json(run.initial);
  j["c_final"]     = acc::to_json(run.final);
  j["final"]       = {{"vertices", run.final_state->agraph.num_vertices()},
                      {"edge_pairs", run.final_state->agraph.num_pairs()},
                      {"folded", run.certificate.folded},
                      {"states_checked", run.certificate.states_checked},
                      {"isomorphic", run.isomorphic},
                      {"tuple_preserved", run.tuple_preserved}};
  if (!verify) {
    emit(j);
    return run.certificate.folded && run.isomorphic ? pass : failed;
  }
  auto v       = acc::make_verdict(l.analysis, run, in.k, in.C);
  j["verdict"] = acc::to_json(v);
  emit(j);
  return v.pass ? pass : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decorated folding of graphs of groups with finite vertex groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "instance file")->required();
    sub->add_option("--k", o.k, "acylindricity constant k (overrides the file)");
    sub->add_option("--C", o.C, "acylindricity constant C (overrides the file)");
    sub->add_option("--depth-cap", o.depth_cap, "tree-ball depth for the acylindricity search");
    sub->add_option("--step-budget", o.step_budget, "maximum number of pipeline steps");
    sub->add_option("--path-check-len", o.path_check_len, "path length for the foldedness certificate");
    sub->add_option("--dot-dir", o.dot_dir, "write one DOT file per state here");
    sub->add_option("--trace-out", o.trace_out, "write the line-delimited trace here");
    sub->add_option("--seed", o.seed, "seed (the pipeline itself is deterministic)");
    sub->add_flag("--force", o.force, "run even when the structural checks fail");
    sub->add_option("--inject-fault", o.inject_fault, "report step N as raising c")->group("");
  };
  auto* analyze = app.add_subcommand("analyze", "structural and acylindricity checks");
  auto* fold    = app.add_subcommand("fold", "run the decorated folding sequence");
  auto* verify  = app.add_subcommand("verify", "run the sequence and check the bound");
  for (auto* s : {analyze, fold, verify}) {
    add_common(s);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : parse;
  }

  auto start = std::chrono::steady_clock::now();
  int  code  = pass;
  try {
    if (*analyze) {
      code = cmd_analyze(o);
    } else {
      code = run_command(o, static_cast<bool>(*verify));
    }
  } catch (acc::ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    code = parse;
  } catch (acc::PreconditionError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    code = parse;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    code = engine;
  }
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "wall time " << ms << " ms, exit " << code << "\n";
  return code;
}
