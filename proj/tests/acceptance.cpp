// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <accessibility/accessibility.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "oracles.hpp"

using namespace acc;

namespace {

std::string corpus(std::string const& name) { return std::string(ACC_CORPUS_DIR) + "/" + name + ".json"; }

std::vector<std::string> const all_instances{"c2_c2", "theta",      "s3_c4",      "chain",
                                             "wedge3", "c2_free_z", "subdivided", "c2_times_z"};

struct Outcome {
  Instance    in;
  Analysis    an;
  PipelineRun run;
  Verdict     v;
  std::string error;
  double      seconds = 0;
};

Outcome verify(std::string const& name, std::optional<std::size_t> k = std::nullopt) {
  auto    start = std::chrono::steady_clock::now();
  Outcome o{load_instance(corpus(name)), {}, {}, {}, {}, 0};
  if (k) {
    o.in.k = *k;
  }
  o.an = analyze(*o.in.graph, o.in.C, o.in.depth_cap, o.in.measure);
  PipelineOptions opt;
  opt.k                 = o.in.k;
  opt.C                 = o.in.C;
  opt.step_budget       = o.in.step_budget;
  opt.path_check_length = 6;
  try {
    run_pipeline(o.in.graph, o.in.base, o.in.tuple, opt, o.run);
    o.v = make_verdict(o.an, o.run, o.in.k, o.in.C);
  } catch (std::exception const& e) {
    o.error = e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

std::map<std::string, Outcome> const& runs() {
  static std::map<std::string, Outcome> const r = [] {
    std::map<std::string, Outcome> m;
    for (auto const& n : all_instances) {
      m.emplace(n, verify(n));
    }
    return m;
  }();
  return r;
}

using Check = std::function<bool(std::ostringstream&)>;

bool criterion1(std::ostringstream& os) {
  bool ok = true;
  for (std::string n : {"c2_c2", "theta", "s3_c4", "chain", "wedge3"}) {
    auto const& o     = runs().at(n);
    std::size_t bound = (2 * o.in.k + 1) * o.in.C * (o.in.tuple.size() - 1);
    bool        pass  = o.error.empty() && o.v.pass && o.in.graph->num_pairs() <= bound && o.seconds < 10;
    os << n << " " << o.in.graph->num_pairs() << "<=" << bound << (pass ? "" : " (fail)") << "; ";
    ok = ok && pass;
  }
  auto const& t = runs().at("theta");
  bool tight    = t.in.graph->num_pairs() == 3 && t.v.bound == 3;
  os << "theta tight " << (tight ? "3=3" : "no");
  return ok && tight;
}

bool criterion2(std::ostringstream& os) {
  auto k0 = verify("theta", 0);
  auto k1 = verify("theta", 1);
  std::size_t ea = k0.in.graph->num_pairs();
  os << "k=0: #EA " << ea << " vs bound " << k0.v.bound << "; k=1: bound " << k1.v.bound;
  return k0.error.empty() && k0.v.bound == 1 && ea > 1 && !k0.v.bound_holds && k1.v.bound_holds && k1.v.pass;
}

bool criterion3(std::ostringstream& os) {
  std::size_t steps = 0, violations = 0;
  for (auto const& [n, o] : runs()) {
    for (auto const& s : o.run.steps) {
      ++steps;
      violations += s.after.c > s.before.c;
    }
    violations += !o.error.empty();
  }
  os << steps << " steps over " << runs().size() << " runs, " << violations << " violations";
  return violations == 0;
}

bool criterion4(std::ostringstream& os) {
  bool ok = true;
  for (auto const& [n, o] : runs()) {
    bool good = o.run.complete && o.run.steps.size() <= o.run.budget && o.run.certificate.folded && o.run.isomorphic;
    if (!good) {
      os << n << " failed; ";
    }
    ok = ok && good;
  }
  os << runs().size() << " runs folded and isomorphic";
  return ok;
}

bool criterion5(std::ostringstream& os) {
  constexpr std::size_t depth = 6;
  auto                  start = std::chrono::steady_clock::now();
  bool                  ok    = true;
  for (auto const& n : all_instances) {
    auto in = load_instance(corpus(n));
    auto a  = acylindricity(*in.graph, in.C, depth, LengthMeasure::edges);
    auto o  = oracle::tree_ball_acylindricity(*in.graph, in.C, depth);
    bool agree = a.conclusive ? (!o.saturated && a.k == o.edges) : o.saturated;
    if (!agree) {
      os << n << " disagrees; ";
    }
    ok = ok && agree;
  }
  auto s3 = load_instance(corpus("s3_c4"));
  auto k1 = acylindricity(*s3.graph, 1, depth).k;
  auto k2 = acylindricity(*s3.graph, 2, depth).k;
  auto o1 = oracle::tree_ball_acylindricity(*s3.graph, 1, depth).edges;
  auto o2 = oracle::tree_ball_acylindricity(*s3.graph, 2, depth).edges;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  os << all_instances.size() << " instances agree; S3*C4 k=" << k1 << " at C=1, k=" << k2 << " at C=2";
  return ok && k1 == 2 && k2 == 0 && o1 == 2 && o2 == 0 && secs < 30;
}

bool criterion6(std::ostringstream& os) {
  std::vector<GroupPtr> groups;
  for (auto const& n : all_instances) {
    auto in = load_instance(corpus(n));
    for (VertexId v = 0; v < in.graph->num_vertices(); ++v) {
      groups.push_back(in.graph->vertex_group(v));
    }
    for (PairId p = 0; p < in.graph->num_pairs(); ++p) {
      groups.push_back(in.graph->edge_group(2 * p));
    }
  }
  std::size_t checked = 0, bad = 0;
  for (auto const& g : groups) {
    auto lattice = all_subgroups(g);
    for (std::size_t c : {1, 2, 4, 8}) {
      for (auto const& h : lattice) {
        ++checked;
        auto p = p_value(h, c);
        if (2 * h.order() > c) {
          bad += p != 1;
          continue;
        }
        bad += p * h.order() > c;
        for (auto const& k : lattice) {
          if (k.order() > h.order() && h.is_subgroup_of(k)) {
            bad += 2 * p_value(k, c) > p;
          }
        }
      }
    }
  }
  os << checked << " (subgroup, C) pairs, " << bad << " counterexamples";
  return bad == 0;
}

bool criterion7(std::ostringstream& os) {
  std::size_t folds = 0, bad = 0;
  for (auto const& [n, o] : runs()) {
    for (auto const& s : o.run.steps) {
      if (!s.move.empty()) {
        ++folds;
        bad += !s.sound;
      }
    }
    bad += !o.run.sound || !o.run.certificate.folded || !o.run.tuple_preserved;
  }
  os << folds << " folds checked, certificates to length 6, " << bad << " violations";
  return bad == 0;
}

bool criterion8(std::ostringstream& os) {
  bool ok = true;
  for (auto const& n : all_instances) {
    auto in = load_instance(corpus(n));
    auto const& a = *in.graph;
    bool trivial = true;
    for (PairId p = 0; p < a.num_pairs(); ++p) {
      trivial = trivial && a.edge_group(2 * p)->order() == 1;
    }
    if (!trivial || !in.default_tuple) {
      continue;
    }
    long betti = static_cast<long>(a.num_pairs()) - static_cast<long>(a.num_vertices()) + 1;
    long nontrivial = 0;
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
      nontrivial += a.vertex_group(v)->order() > 1;
    }
    long n_gen = static_cast<long>(in.tuple.size());
    bool holds = betti + nontrivial <= n_gen;
    auto lib   = grushko_holds(analyze(a, in.C), in.tuple.size());
    os << n << " " << betti << "+" << nontrivial << "<=" << n_gen << "; ";
    ok = ok && holds && lib == holds;
  }
  return ok;
}

bool criterion9(std::ostringstream& os) {
  bool ok = true;
  for (std::string n : {"theta", "s3_c4", "chain"}) {
    auto a = verify(n);
    auto b = verify(n);
    bool same = trace_lines(a.run) == trace_lines(b.run)
                && to_json(a.v).dump() == to_json(b.v).dump();
    ok = ok && same;
  }
  os << "traces and verdicts byte-identical on rerun";
  return ok;
}

}  // namespace

int main() {
  std::vector<Check> checks{criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::ostringstream os;
    bool               ok = false;
    try {
      ok = checks[i](os);
    } catch (std::exception const& e) {
      os << "exception: " << e.what();
    }
    std::printf("criterion %zu: %s  %s\n", i + 1, ok ? "PASS" : "FAIL", os.str().c_str());
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
