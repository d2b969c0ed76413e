#ifndef ACCESSIBILITY_PIPELINE_HPP
#define ACCESSIBILITY_PIPELINE_HPP

// Structural checks and the decorated folding sequence from the S-wedge to a
// folded surjective A-graph, with the complexity recorded at every step.

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "acylindricity.hpp"
#include "decoration.hpp"

namespace acc {

struct Analysis {
  PredicateResult     weakly_reduced;
  PredicateResult     minimal;
  AcylindricityResult acylindricity;
  std::size_t         C = 1;
  std::size_t         depth_cap = 8;
  LengthMeasure       measure = LengthMeasure::edges;
  std::size_t         reduced_complexity = 0;
  std::size_t         edge_pairs = 0;
  long                betti = 0;
  std::size_t         nontrivial_vertices = 0;
  bool                trivial_edge_groups = false;
};

inline Analysis analyze(GraphOfGroups const& a, std::size_t c, std::size_t depth_cap = 8,
                        LengthMeasure m = LengthMeasure::edges) {
  Analysis r;
  r.weakly_reduced     = is_weakly_reduced(a);
  r.minimal            = is_minimal(a);
  r.acylindricity      = acylindricity(a, c, depth_cap, m);
  r.C                  = c;
  r.depth_cap          = depth_cap;
  r.measure            = m;
  r.reduced_complexity = reduced_complexity_cr(a);
  r.edge_pairs         = a.num_pairs();
  r.betti              = betti_number(a.graph());
  r.trivial_edge_groups = true;
  for (PairId p = 0; p < a.num_pairs(); ++p) {
    r.trivial_edge_groups = r.trivial_edge_groups && a.edge_group(2 * p)->order() == 1;
  }
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    r.nontrivial_vertices += a.vertex_group(v)->order() > 1;
  }
  return r;
}

// b(A) + #{v : A_v != 1} <= n, meaningful for trivial edge groups only.
inline std::optional<bool> grushko_holds(Analysis const& an, std::size_t n) {
  if (!an.trivial_edge_groups) {
    return std::nullopt;
  }
  return an.betti + static_cast<long>(an.nontrivial_vertices) <= static_cast<long>(n);
}

struct PipelineOptions {
  std::size_t                k = 1;
  std::size_t                C = 1;
  std::optional<std::size_t> step_budget;
  std::size_t                path_check_length = 6;
  std::optional<std::size_t> inject_fault_at;  // test hook: step reported as raising c
  bool                       keep_states = true;
};

struct StepRecord {
  std::size_t      index = 0;
  std::string      phase;  // tame, amalgamate, fold
  std::string      move;   // IA, IIA, IIIA
  std::string      tag;    // transport case
  EdgeId           f1 = kNoEdge;
  EdgeId           f2 = kNoEdge;
  Element          g = 0;
  long             pair = -1;  // amalgamated pair
  ComplexityReport before;
  ComplexityReport after;
  std::size_t      vertices = 0;
  std::size_t      pairs = 0;
  bool             sound = true;
};

struct PipelineRun {
  std::size_t                  n = 0;
  std::size_t                  circles = 0;
  std::size_t                  stems = 0;
  std::size_t                  base_entries = 0;
  std::size_t                  budget = 0;
  std::vector<StepRecord>      steps;
  std::vector<DecoratedAGraph> states;  // initial, then one per step
  std::optional<DecoratedAGraph> final_state;
  ComplexityReport             initial;
  ComplexityReport             final;
  FoldednessReport             certificate;
  bool                         isomorphic = false;
  bool                         tuple_preserved = false;
  bool                         monotone = true;
  bool                         sound = true;
  bool                         complete = false;
};

inline std::size_t default_step_budget(AGraph const& wedge) {
  std::size_t width = 1;
  auto const& a     = *wedge.target;
  for (PairId p = 0; p < a.num_pairs(); ++p) {
    width = std::max<std::size_t>(width, std::bit_width(a.edge_group(2 * p)->order()));
  }
  return wedge.num_pairs() * (width + 2) + 16;
}

// The nu-images of a loop generating set keep their normal forms through m.
inline bool fold_is_sound(AGraph const& b, FoldMove const& m) {
  Paths gens = loop_generating_set(b);
  std::vector<APath> before;
  for (auto const& p : gens) {
    before.push_back(normal_form(*b.target, nu_translate(b, p)));
  }
  auto r = apply_fold(b, m, &gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (normal_form(*b.target, nu_translate(r.agraph, gens[i])) != before[i]) {
      return false;
    }
  }
  return true;
}

// Runs the sequence, filling `run` as it goes so that a failure leaves the
// steps taken so far. Throws BudgetExhausted, EngineError and
// PreconditionError (bad tuple).
inline void run_pipeline(GraphOfGroupsPtr const& a, VertexId base, std::vector<APath> const& tuple,
                         PipelineOptions const& opt, PipelineRun& run) {
  run = PipelineRun{};
  Wedge w          = build_wedge(a, base, tuple);
  run.n            = tuple.size();
  run.circles      = w.circles.size();
  run.stems        = w.stems.size();
  run.base_entries = w.base_entries;
  run.budget       = opt.step_budget.value_or(default_step_budget(w.agraph));

  DecoratedAGraph d = initial_wedge_decoration(w, opt.k, opt.C);
  detail::require_valid(d, "the initial wedge decoration");
  run.initial = complexity_c(d);
  if (opt.keep_states) {
    run.states.push_back(d);
  }
  if (run.budget == 0) {
    throw BudgetExhausted("step budget 0");
  }
  Paths loops = w.loops;

  auto record = [&](StepRecord s, DecoratedAGraph const& after) {
    if (run.steps.size() >= run.budget) {
      throw BudgetExhausted("step budget " + std::to_string(run.budget) + " exhausted");
    }
    s.index    = run.steps.size() + 1;
    s.after    = complexity_c(after);
    s.vertices = after.agraph.num_vertices();
    s.pairs    = after.agraph.num_pairs();
    if (opt.inject_fault_at == s.index) {
      s.after.c = s.before.c + 1;
    }
    run.steps.push_back(s);
    if (opt.keep_states) {
      run.states.push_back(after);
    }
    if (auto rep = validate_agraph(after.agraph); !rep) {
      throw EngineError("step " + std::to_string(s.index) + ": A-graph condition " + rep.condition
                        + " fails: " + rep.detail);
    }
    if (!s.sound) {
      run.sound = false;
      throw EngineError("step " + std::to_string(s.index) + ": fold changed the represented subgroup");
    }
    if (s.after.c > s.before.c) {
      run.monotone = false;
      throw EngineError("step " + std::to_string(s.index) + " (" + s.phase + " " + s.tag
                        + "): complexity rose from " + std::to_string(s.before.c) + " to "
                        + std::to_string(s.after.c));
    }
  };
  auto fold_record = [&](std::string phase, DecoratedAGraph const& before, FoldMove const& m) {
    StepRecord s;
    s.phase  = std::move(phase);
    s.move   = to_string(m.kind);
    s.f1     = m.f1;
    s.f2     = m.kind == FoldKind::IIA ? kNoEdge : m.f2;
    s.g      = m.g;
    s.before = complexity_c(before);
    s.sound  = fold_is_sound(before.agraph, m);
    return s;
  };
  auto observer = [&](DecoratedAGraph const& before, FoldResult const& r, DecoratedAGraph const& after) {
    auto s = fold_record("tame", before, r.move);
    s.tag  = "tame";
    record(s, after);
  };

  d = tame(std::move(d), &loops, observer);
  for (;;) {
    for (;;) {
      auto const& e = d.decoration.script_e;
      auto it = std::find_if(e.begin(), e.end(),
                             [&](PairId p) { return d.agraph.edge_groups[p].order() > d.C; });
      if (it == e.end()) {
        break;
      }
      StepRecord s;
      s.phase  = "amalgamate";
      s.tag    = "B(e)";
      s.pair   = static_cast<long>(*it);
      s.before = complexity_c(d);
      auto next = amalgamate_edge(d, *it);
      record(s, next);
      d = tame(std::move(next), &loops, observer);
    }
    auto m = find_fold(d.agraph);
    if (!m) {
      break;
    }
    auto s = fold_record("fold", d, *m);
    auto r = apply_fold(d.agraph, *m, &loops);
    auto t = transport_decoration(d, r);
    s.tag  = t.tag;
    record(s, t.decorated);
    d = tame(std::move(t.decorated), &loops, observer);
  }

  run.final       = complexity_c(d);
  run.certificate = foldedness_certificate(d.agraph, opt.path_check_length);
  run.isomorphic  = is_isomorphic_to_target(d.agraph);
  run.tuple_preserved = true;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    run.tuple_preserved = run.tuple_preserved
                          && normal_form(*a, nu_translate(d.agraph, loops[i])) == normal_form(*a, tuple[i]);
  }
  run.final_state = std::move(d);
  run.complete    = true;
}

inline PipelineRun run_pipeline(GraphOfGroupsPtr const& a, VertexId base,
                                std::vector<APath> const& tuple, PipelineOptions const& opt) {
  PipelineRun run;
  run_pipeline(a, base, tuple, opt, run);
  return run;
}

struct Verdict {
  std::size_t k = 1;
  std::size_t C = 1;
  std::size_t n = 0;
  std::size_t n_h = 0;  // circles plus stems of the wedge
  std::size_t edge_pairs = 0;
  std::size_t bound = 0;          // (2k+1) C (n-1)
  std::size_t initial_bound = 0;  // (2k+1) C n_h
  std::size_t c_initial = 0;
  std::size_t c_final = 0;
  std::size_t steps = 0;
  std::vector<std::size_t> chain;

  bool hypotheses = false;
  bool nielsen_deviation = false;
  bool bound_holds = false;
  bool initial_bound_holds = false;
  bool final_dominates = false;  // #EA <= c(final)
  bool monotone = false;
  bool sound = false;
  bool folded = false;
  bool isomorphic = false;
  bool tuple_preserved = false;
  bool pass = false;
};

inline std::size_t edge_bound(std::size_t k, std::size_t c, std::size_t n) {
  return (2 * k + 1) * c * (n == 0 ? 0 : n - 1);
}

inline Verdict make_verdict(Analysis const& an, PipelineRun const& run, std::size_t k, std::size_t c) {
  Verdict v;
  v.k          = k;
  v.C          = c;
  v.n          = run.n;
  v.n_h        = run.circles + run.stems;
  v.edge_pairs = an.edge_pairs;
  v.bound      = edge_bound(k, c, v.n);
  v.initial_bound = (2 * k + 1) * c * v.n_h;
  v.c_initial  = run.initial.c;
  v.c_final    = run.final.c;
  v.steps      = run.steps.size();
  v.chain.push_back(run.initial.c);
  for (auto const& s : run.steps) {
    v.chain.push_back(s.after.c);
  }
  v.hypotheses = an.weakly_reduced.holds && an.minimal.holds && an.acylindricity.conclusive
                 && an.acylindricity.k <= k && k >= 1 && an.C == c;
  v.nielsen_deviation   = v.n_h + 1 > v.n;
  v.bound_holds         = v.edge_pairs <= v.bound;
  v.initial_bound_holds = v.c_initial <= v.initial_bound;
  v.final_dominates     = v.edge_pairs <= v.c_final;
  v.monotone            = run.monotone;
  v.sound               = run.sound;
  v.folded              = run.certificate.folded;
  v.isomorphic          = run.isomorphic;
  v.tuple_preserved     = run.tuple_preserved;
  v.pass = run.complete && v.hypotheses && v.bound_holds && v.initial_bound_holds && v.final_dominates
           && v.monotone && v.sound && v.folded && v.isomorphic && v.tuple_preserved;
  return v;
}

}  // namespace acc

#endif  // ACCESSIBILITY_PIPELINE_HPP
