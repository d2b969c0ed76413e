#ifndef ACCESSIBILITY_AGRAPH_HPP
#define ACCESSIBILITY_AGRAPH_HPP

// A-graphs over a fixed graph of groups A, their associated graphs of groups,
// the path translation nu, and the S-wedge.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph_of_groups.hpp"

namespace acc {

struct AGraph {
  GraphOfGroupsPtr      target;
  Graph                 graph;
  std::vector<VertexId> vertex_image;   // [u]
  std::vector<EdgeId>   edge_image;     // [f], per directed edge
  std::vector<Subgroup> vertex_groups;  // B_u <= A_[u]
  std::vector<Subgroup> edge_groups;    // B_f <= A_[f], per pair
  std::vector<Element>  labels;         // f_alpha, per directed edge
  VertexId              base = 0;

  std::size_t num_vertices() const noexcept { return graph.num_vertices(); }
  std::size_t num_edges() const noexcept { return graph.num_edges(); }
  std::size_t num_pairs() const noexcept { return graph.num_pairs(); }

  Subgroup const& edge_group(EdgeId f) const { return edge_groups[pair_of(f)]; }
  Subgroup&       edge_group(EdgeId f) { return edge_groups[pair_of(f)]; }

  GroupTable const& group_at(VertexId u) const { return *target->vertex_group(vertex_image[u]); }

  Element alpha_label(EdgeId f) const { return labels[f]; }
  // f_omega = ((f^-1)_alpha)^-1
  Element omega_label(EdgeId f) const {
    return group_at(graph.omega(f)).inv(labels[reverse(f)]);
  }

  // f_alpha alpha_[f](B_f) f_alpha^-1 inside A_[alpha(f)]
  Subgroup conjugated_edge_image(EdgeId f) const {
    Subgroup img = map_subgroup(target->boundary(edge_image[f]), edge_group(f));
    return conjugate_subgroup(img, labels[f]);
  }

  VertexId add_vertex(VertexId image, Subgroup group) {
    vertex_image.push_back(image);
    vertex_groups.push_back(std::move(group));
    return graph.add_vertex();
  }

  // Edge u -> w over the A-edge e with the given labels and trivial B_f.
  EdgeId add_edge(VertexId u, VertexId w, EdgeId e, Element alpha, Element omega) {
    EdgeId f = graph.add_edge(u, w);
    edge_image.push_back(e);
    edge_image.push_back(reverse(e));
    edge_groups.emplace_back(target->edge_group(e));
    labels.push_back(alpha);
    labels.push_back(group_at(w).inv(omega));
    return f;
  }
};

// Graph map pi: B -> B' between A-graphs.
struct GraphMap {
  std::vector<VertexId> vertex;
  std::vector<EdgeId>   edge;
};

inline GraphMap identity_map(AGraph const& b) {
  GraphMap m;
  m.vertex.resize(b.num_vertices());
  m.edge.resize(b.num_edges());
  std::iota(m.vertex.begin(), m.vertex.end(), VertexId{0});
  std::iota(m.edge.begin(), m.edge.end(), EdgeId{0});
  return m;
}

inline GraphMap compose(GraphMap const& first, GraphMap const& second) {
  GraphMap m;
  for (VertexId v : first.vertex) {
    m.vertex.push_back(second.vertex[v]);
  }
  for (EdgeId e : first.edge) {
    m.edge.push_back(second.edge[e]);
  }
  return m;
}

// First violated A-graph condition (1-5), with the offending vertex or edge.
inline ValidationReport validate_agraph(AGraph const& b) {
  if (!b.target) {
    return ValidationReport::failure("1", "no target graph of groups");
  }
  auto const& a = *b.target;
  auto const& g = b.graph;
  if (b.vertex_image.size() != g.num_vertices() || b.edge_image.size() != g.num_edges()
      || b.vertex_groups.size() != g.num_vertices() || b.edge_groups.size() != g.num_pairs()
      || b.labels.size() != g.num_edges() || b.base >= g.num_vertices()) {
    return ValidationReport::failure("1", "data sizes do not match the graph");
  }
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (b.vertex_image[u] >= a.num_vertices()) {
      return ValidationReport::failure("1", "vertex image out of range", u);
    }
  }
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    EdgeId e = b.edge_image[f];
    if (e >= a.graph().num_edges() || b.edge_image[reverse(f)] != reverse(e)) {
      return ValidationReport::failure("1", "edge map does not commute with inversion", f);
    }
    if (a.graph().alpha(e) != b.vertex_image[g.alpha(f)]) {
      return ValidationReport::failure("1", "edge map does not commute with alpha", f);
    }
  }
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (b.vertex_groups[u].ambient() != a.vertex_group(b.vertex_image[u])) {
      return ValidationReport::failure("2", "B_u is not a subgroup of A_[u]", u);
    }
  }
  for (EdgeId f = 0; f < g.num_edges(); f += 2) {
    if (b.edge_group(f).ambient() != a.edge_group(b.edge_image[f])) {
      return ValidationReport::failure("3", "B_f is not a subgroup of A_[f]", f);
    }
  }
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (b.labels[f] >= b.group_at(g.alpha(f)).order()) {
      return ValidationReport::failure("4", "label outside A_[alpha(f)]", f);
    }
  }
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (!b.conjugated_edge_image(f).is_subgroup_of(b.vertex_groups[g.alpha(f)])) {
      return ValidationReport::failure(
          "5", "f_alpha alpha(B_f) f_alpha^-1 is not contained in B_alpha(f)", f);
    }
  }
  return ValidationReport::success();
}

// [.] the identity, B_v = A_v, B_e = A_e, trivial labels.
inline AGraph trivial_agraph(GraphOfGroupsPtr const& a, VertexId base = 0) {
  AGraph b;
  b.target = a;
  b.base   = base;
  for (VertexId v = 0; v < a->num_vertices(); ++v) {
    b.add_vertex(v, Subgroup::whole(a->vertex_group(v)));
  }
  for (PairId p = 0; p < a->num_pairs(); ++p) {
    EdgeId e = 2 * p;
    b.add_edge(a->graph().alpha(e), a->graph().omega(e), e, kIdentity, kIdentity);
    b.edge_groups.back() = Subgroup::whole(a->edge_group(e));
  }
  return b;
}

// Greedy generating set of a subgroup.
inline std::vector<Element> subgroup_generators(Subgroup const& h) {
  std::vector<Element> gens;
  Subgroup             span(h.ambient());
  for (Element x : h.elements()) {
    if (!span.contains(x)) {
      gens.push_back(x);
      span = join(span, x);
    }
  }
  return gens;
}

// The associated graph of groups: vertex and edge groups B_u, B_f as
// standalone tables, alpha_f(g) = f_alpha alpha_[f](g) f_alpha^-1.
inline GraphOfGroupsPtr associated_graph_of_groups(AGraph const& b) {
  auto const& a   = *b.target;
  auto        out = std::make_shared<GraphOfGroups>();
  std::vector<SubgroupTable> vt, et;
  for (VertexId u = 0; u < b.num_vertices(); ++u) {
    vt.push_back(subgroup_table(b.vertex_groups[u]));
    out->add_vertex(vt.back().group, "u" + std::to_string(u));
  }
  for (PairId p = 0; p < b.num_pairs(); ++p) {
    et.push_back(subgroup_table(b.edge_groups[p]));
  }
  auto boundary = [&](EdgeId f) {
    auto const& src  = et[pair_of(f)];
    auto const& dst  = vt[b.graph.alpha(f)];
    auto const& ag   = b.group_at(b.graph.alpha(f));
    auto const& amap = a.boundary(b.edge_image[f]);
    std::vector<Element> im;
    auto const& into = dst.inclusion.images();
    for (Element x : src.inclusion.images()) {
      Element y   = ag.conj(b.labels[f], amap(x));
      auto    pos = std::find(into.begin(), into.end(), y);
      if (pos == into.end()) {
        throw EngineError("associated boundary map leaves B_alpha(f) at edge "
                          + std::to_string(f));
      }
      im.push_back(static_cast<Element>(pos - into.begin()));
    }
    return GroupMap(src.group, dst.group, std::move(im));
  };
  for (PairId p = 0; p < b.num_pairs(); ++p) {
    EdgeId f = 2 * p;
    try {
      out->add_edge(b.graph.alpha(f), b.graph.omega(f), et[p].group, boundary(f),
                    boundary(reverse(f)), "f" + std::to_string(p));
    } catch (ParseError const& e) {
      throw EngineError(e.what());
    }
  }
  return out;
}

// B-paths reuse APath: elements are stored as elements of A_[u] and must lie
// in B_u; edges are edges of B.
inline VertexId bpath_vertex(AGraph const& b, APath const& p, std::size_t i) {
  return i == 0 ? p.start : b.graph.omega(p.edges[i - 1]);
}
inline VertexId bpath_end(AGraph const& b, APath const& p) {
  return bpath_vertex(b, p, p.edges.size());
}

inline void check_bpath(AGraph const& b, APath const& p) {
  if (p.start >= b.num_vertices() || p.elements.size() != p.edges.size() + 1) {
    throw PreconditionError("malformed B-path: element/edge count mismatch");
  }
  VertexId at = p.start;
  for (std::size_t i = 0; i <= p.edges.size(); ++i) {
    if (!b.vertex_groups[at].contains(p.elements[i])) {
      throw PreconditionError("malformed B-path: element outside B_u");
    }
    if (i < p.edges.size()) {
      EdgeId f = p.edges[i];
      if (f >= b.num_edges() || b.graph.alpha(f) != at) {
        throw PreconditionError("malformed B-path: edges do not connect");
      }
      at = b.graph.omega(f);
    }
  }
}

// [b_0, f_1, ..., f_s, b_s] -> [b_0 g_1, e_1, k_1 b_1 g_2, ..., e_s, k_s b_s]
// with g_i = (f_i)_alpha, k_i = (f_i)_omega and e_i = [f_i].
inline APath nu_translate(AGraph const& b, APath const& p) {
  check_bpath(b, p);
  APath out;
  out.start = b.vertex_image[p.start];
  out.elements.clear();
  std::size_t const s = p.edges.size();
  for (std::size_t i = 0; i <= s; ++i) {
    auto const& g = b.group_at(bpath_vertex(b, p, i));
    Element     x = p.elements[i];
    if (i > 0) {
      x = g.mul(b.omega_label(p.edges[i - 1]), x);
    }
    if (i < s) {
      x = g.mul(x, b.alpha_label(p.edges[i]));
      out.edges.push_back(b.edge_image[p.edges[i]]);
    }
    out.elements.push_back(x);
  }
  return out;
}

// f, b, f^-1 with b in omega_f(B_f) = f_omega^-1 omega_[f](B_f) f_omega.
inline bool is_bpath_reduced(AGraph const& b, APath const& p) {
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
    EdgeId f = p.edges[i];
    if (p.edges[i + 1] != reverse(f)) {
      continue;
    }
    if (b.conjugated_edge_image(reverse(f)).contains(p.elements[i + 1])) {
      return false;
    }
  }
  return true;
}

struct Wedge {
  AGraph                           agraph;
  std::vector<std::vector<EdgeId>> circles;  // one per hyperbolic entry
  std::vector<std::vector<EdgeId>> stems;    // one per elliptic entry away from the base group
  std::vector<std::size_t>         circle_entry;
  std::vector<std::size_t>         stem_entry;
  std::vector<APath>               loops;    // B-loop at the base realizing each entry
  std::size_t                      base_entries = 0;
};

// S-wedge for loops at `base`. Entries reducing into A_base generate the base
// vertex group; hyperbolic entries become circles spelling their reduced
// form; other elliptic entries Q y Q^-1 become stems along Q carrying <y> at
// the tip.
inline Wedge build_wedge(GraphOfGroupsPtr const& a, VertexId base,
                         std::vector<APath> const& entries) {
  Wedge w;
  AGraph& b = w.agraph;
  b.target  = a;
  b.base    = b.add_vertex(base, Subgroup(a->vertex_group(base)));
  std::vector<Element> base_gens;
  w.loops.resize(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    APath const& s = entries[i];
    check_path(*a, s);
    if (s.start != base || path_end(*a, s) != base) {
      throw PreconditionError("tuple entry " + std::to_string(i) + " is not a loop at the base");
    }
    APath r = reduce_apath(*a, s);
    if (r.edges.empty()) {
      base_gens.push_back(r.elements[0]);
      w.loops[i] = trivial_path(b.base, r.elements[0]);
      ++w.base_entries;
      continue;
    }
    std::size_t const n = r.edges.size();
    if (!is_elliptic(*a, r)) {
      std::vector<EdgeId> circle;
      VertexId            at = b.base;
      for (std::size_t j = 0; j < n; ++j) {
        EdgeId   e    = r.edges[j];
        bool     last = j + 1 == n;
        VertexId next = last ? b.base : b.add_vertex(a->graph().omega(e),
                                                     Subgroup(a->vertex_group(a->graph().omega(e))));
        circle.push_back(b.add_edge(at, next, e, r.elements[j], last ? r.elements[n] : kIdentity));
        at = next;
      }
      w.loops[i] = APath{b.base, std::vector<Element>(n + 1, kIdentity), circle};
      w.circles.push_back(std::move(circle));
      w.circle_entry.push_back(i);
      continue;
    }
    if (n % 2 != 0) {
      throw PreconditionError("elliptic tuple entry " + std::to_string(i)
                              + " has odd reduced length");
    }
    std::size_t const m = n / 2;
    APath q{base, {}, {}};
    for (std::size_t j = 0; j < m; ++j) {
      q.elements.push_back(r.elements[j]);
      q.edges.push_back(r.edges[j]);
    }
    q.elements.push_back(kIdentity);
    APath mid = reduce_apath(*a, concat(*a, concat(*a, inverse_path(*a, q), r), q));
    if (!mid.edges.empty()) {
      throw PreconditionError("elliptic tuple entry " + std::to_string(i)
                              + " is not conjugate into a vertex group along its prefix");
    }
    std::vector<EdgeId> stem;
    VertexId            at = b.base;
    for (std::size_t j = 0; j < m; ++j) {
      EdgeId   e    = q.edges[j];
      VertexId next = b.add_vertex(a->graph().omega(e), Subgroup(a->vertex_group(a->graph().omega(e))));
      stem.push_back(b.add_edge(at, next, e, q.elements[j], kIdentity));
      at = next;
    }
    b.vertex_groups[at] = subgroup_closure(a->vertex_group(b.vertex_image[at]), {mid.elements[0]});
    APath loop{b.base, std::vector<Element>(2 * m + 1, kIdentity), stem};
    loop.elements[m] = mid.elements[0];
    for (std::size_t j = m; j-- > 0;) {
      loop.edges.push_back(reverse(stem[j]));
    }
    w.loops[i] = std::move(loop);
    w.stems.push_back(std::move(stem));
    w.stem_entry.push_back(i);
  }
  b.vertex_groups[b.base] = subgroup_closure(a->vertex_group(base), base_gens);
  return w;
}

}  // namespace acc

#endif  // ACCESSIBILITY_AGRAPH_HPP
