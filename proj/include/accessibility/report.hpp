#ifndef ACCESSIBILITY_REPORT_HPP
#define ACCESSIBILITY_REPORT_HPP

// JSON views of analyses, pipeline steps and verdicts, the line-delimited
// trace, and DOT snapshots of decorated A-graphs.

#include <sstream>
#include <string>

#include <json.hpp>

#include "pipeline.hpp"

namespace acc {

inline std::string path_string(GraphOfGroups const& a, APath const& p) {
  std::string out;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    VertexId v = path_vertex(a, p, i);
    out += a.vertex_group(v)->name(p.elements[i]);
    if (i < p.edges.size()) {
      out += " " + a.edge_name(p.edges[i]) + " ";
    }
  }
  return out;
}

inline nlohmann::json to_json(ComplexityReport const& c) {
  return {{"gamma_image_edges", c.gamma_image_edges}, {"sum_term", c.sum_term}, {"c", c.c},
          {"oversized", c.oversized}};
}

inline nlohmann::json to_json(GraphOfGroups const& a, Analysis const& an) {
  nlohmann::json j;
  j["weakly_reduced"] = an.weakly_reduced.holds;
  if (an.weakly_reduced.witness) {
    j["weakly_reduced_witness"] = a.vertex_name(*an.weakly_reduced.witness);
  }
  j["minimal"] = an.minimal.holds;
  if (an.minimal.witness) {
    j["minimal_witness"] = a.vertex_name(*an.minimal.witness);
  }
  auto const& ac = an.acylindricity;
  nlohmann::json acy{{"C", an.C}, {"depth_cap", an.depth_cap}, {"measure", to_string(an.measure)},
                     {"conclusive", ac.conclusive}, {"states", ac.states_explored}};
  if (ac.conclusive) {
    acy["k"] = ac.k;
  }
  if (ac.witness) {
    acy["witness"] = {{"path", path_string(a, ac.witness->path)},
                      {"stabilizer_order", ac.witness->stabilizer_order},
                      {"length", ac.witness->projective_length}};
  }
  j["acylindricity"]      = acy;
  j["edge_pairs"]         = an.edge_pairs;
  j["vertices"]           = a.num_vertices();
  j["reduced_complexity"] = an.reduced_complexity;
  j["betti"]              = an.betti;
  return j;
}

inline nlohmann::json to_json(StepRecord const& s) {
  nlohmann::json j{{"step", s.index},         {"phase", s.phase},
                   {"tag", s.tag},            {"before", to_json(s.before)},
                   {"after", to_json(s.after)}, {"vertices", s.vertices},
                   {"pairs", s.pairs},        {"sound", s.sound}};
  if (!s.move.empty()) {
    j["move"] = s.move;
    j["f1"]   = s.f1;
    if (s.f2 != kNoEdge) {
      j["f2"] = s.f2;
    }
    if (s.move == "IIA") {
      j["g"] = s.g;
    }
  }
  if (s.pair >= 0) {
    j["pair"] = s.pair;
  }
  return j;
}

// One JSON object per line: the initial state, then every step.
inline std::string trace_lines(PipelineRun const& run) {
  std::string out = nlohmann::json{{"step", 0},
                                   {"phase", "initial"},
                                   {"after", to_json(run.initial)},
                                   {"circles", run.circles},
                                   {"stems", run.stems},
                                   {"base_entries", run.base_entries},
                                   {"budget", run.budget}}
                        .dump()
                    + "\n";
  for (auto const& s : run.steps) {
    out += to_json(s).dump() + "\n";
  }
  return out;
}

inline nlohmann::json to_json(Verdict const& v) {
  return {{"k", v.k},
          {"C", v.C},
          {"n", v.n},
          {"n_h", v.n_h},
          {"edge_pairs", v.edge_pairs},
          {"bound", v.bound},
          {"initial_bound", v.initial_bound},
          {"c_initial", v.c_initial},
          {"c_final", v.c_final},
          {"steps", v.steps},
          {"chain", v.chain},
          {"claims",
           {{"hypotheses", v.hypotheses},
            {"bound", v.bound_holds},
            {"initial_bound", v.initial_bound_holds},
            {"final_dominates_edges", v.final_dominates},
            {"monotone", v.monotone},
            {"sound", v.sound},
            {"folded", v.folded},
            {"isomorphic", v.isomorphic},
            {"tuple_preserved", v.tuple_preserved}}},
          {"nielsen_deviation", v.nielsen_deviation},
          {"pass", v.pass}};
}

// Vertices read "|B_u| @ [u]"; Gamma is bold, E dotted, tree edges point
// away from their anchor.
inline std::string to_dot(DecoratedAGraph const& d, std::string const& title) {
  auto const&        b = d.agraph;
  auto const&        a = *b.target;
  Forest             f;
  bool               valid = static_cast<bool>(validate_decoration(b, d.decoration, &f));
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  for (VertexId u = 0; u < b.num_vertices(); ++u) {
    os << "  v" << u << " [label=\"" << b.vertex_groups[u].order() << " @ "
       << a.vertex_name(b.vertex_image[u]) << "\"";
    if (d.decoration.gamma_vertices.count(u)) {
      os << ", style=bold, penwidth=3";
    }
    if (u == b.base) {
      os << ", shape=doublecircle";
    }
    os << "];\n";
  }
  for (PairId p = 0; p < b.num_pairs(); ++p) {
    EdgeId e    = 2 * p;
    auto   role = acc::role(d.decoration, p);
    if (role == PairRole::tree && valid && f.last_edge[b.graph.omega(e)] != e) {
      e = reverse(e);
    }
    os << "  v" << b.graph.alpha(e) << " -> v" << b.graph.omega(e) << " [label=\""
       << a.edge_name(b.edge_image[e]) << " " << b.edge_groups[p].order() << "\"";
    if (role == PairRole::gamma) {
      os << ", style=bold, penwidth=3, dir=none";
    } else if (role == PairRole::script_e) {
      os << ", style=dotted, dir=none";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace acc

#endif  // ACCESSIBILITY_REPORT_HPP
