#ifndef ACCESSIBILITY_GRAPH_OF_GROUPS_HPP
#define ACCESSIBILITY_GRAPH_OF_GROUPS_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"

namespace acc {

class GraphOfGroups {
 public:
  VertexId add_vertex(GroupPtr group, std::string name = "") {
    VertexId v = graph_.add_vertex();
    if (name.empty()) {
      name = "v" + std::to_string(v);
    }
    vertex_groups_.push_back(std::move(group));
    vertex_names_.push_back(std::move(name));
    return v;
  }

  // `into_from` is the boundary monomorphism of the returned edge e into the
  // group at `from`; `into_to` is that of e^-1 into the group at `to`.
  EdgeId add_edge(VertexId from, VertexId to, GroupPtr edge_group, GroupMap into_from,
                  GroupMap into_to, std::string name = "") {
    EdgeId e = graph_.add_edge(from, to);
    if (name.empty()) {
      name = "e" + std::to_string(pair_of(e));
    }
    check_boundary(into_from, edge_group, vertex_groups_[from], name);
    check_boundary(into_to, edge_group, vertex_groups_[to], name);
    edge_groups_.push_back(std::move(edge_group));
    images_.push_back(image(into_from));
    images_.push_back(image(into_to));
    boundary_.push_back(std::move(into_from));
    boundary_.push_back(std::move(into_to));
    edge_names_.push_back(std::move(name));
    return e;
  }

  Graph const& graph() const noexcept { return graph_; }
  std::size_t  num_vertices() const noexcept { return graph_.num_vertices(); }
  std::size_t  num_pairs() const noexcept { return graph_.num_pairs(); }

  GroupPtr const& vertex_group(VertexId v) const { return vertex_groups_[v]; }
  GroupPtr const& edge_group(EdgeId e) const { return edge_groups_[pair_of(e)]; }
  // alpha_e : A_e -> A_alpha(e); omega_e is boundary(reverse(e)).
  GroupMap const& boundary(EdgeId e) const { return boundary_[e]; }
  GroupMap const& omega_map(EdgeId e) const { return boundary_[reverse(e)]; }
  // alpha_e(A_e) as a subgroup of A_alpha(e).
  Subgroup const& boundary_image(EdgeId e) const { return images_[e]; }

  std::string const& vertex_name(VertexId v) const { return vertex_names_[v]; }
  std::string const& pair_name(PairId p) const { return edge_names_[p]; }
  std::string edge_name(EdgeId e) const {
    return (e & 1u) ? "-" + edge_names_[pair_of(e)] : edge_names_[pair_of(e)];
  }

  std::optional<VertexId> find_vertex(std::string const& name) const {
    for (VertexId v = 0; v < vertex_names_.size(); ++v) {
      if (vertex_names_[v] == name) {
        return v;
      }
    }
    return std::nullopt;
  }
  // Accepts "name" for the stored orientation and "-name" for its inverse.
  std::optional<EdgeId> find_edge(std::string const& ref) const {
    bool        inverse = !ref.empty() && ref[0] == '-';
    std::string name    = inverse ? ref.substr(1) : ref;
    for (PairId p = 0; p < edge_names_.size(); ++p) {
      if (edge_names_[p] == name) {
        return inverse ? 2 * p + 1 : 2 * p;
      }
    }
    return std::nullopt;
  }

  bool boundary_is_onto(EdgeId e) const {
    return edge_group(e)->order() == vertex_group(graph_.alpha(e))->order();
  }

 private:
  static void check_boundary(GroupMap const& m, GroupPtr const& edge_group,
                             GroupPtr const& vertex_group, std::string const& name) {
    if (m.source() != edge_group || m.target() != vertex_group) {
      throw PreconditionError("boundary map of " + name + " has wrong domain or codomain");
    }
    if (!m.is_homomorphism() || !m.is_monomorphism()) {
      throw ParseError("boundary map of " + name + " is not a monomorphism");
    }
  }

  Graph                    graph_;
  std::vector<GroupPtr>    vertex_groups_;
  std::vector<GroupPtr>    edge_groups_;
  std::vector<GroupMap>    boundary_;
  std::vector<Subgroup>    images_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
};

using GraphOfGroupsPtr = std::shared_ptr<GraphOfGroups const>;

// a_0, e_1, a_1, ..., e_s, a_s with a_i in the group at the i-th vertex.
struct APath {
  VertexId             start = 0;
  std::vector<Element> elements{kIdentity};
  std::vector<EdgeId>  edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(APath const&, APath const&) = default;
};

inline VertexId path_vertex(GraphOfGroups const& a, APath const& p, std::size_t i) {
  return i == 0 ? p.start : a.graph().omega(p.edges[i - 1]);
}
inline VertexId path_end(GraphOfGroups const& a, APath const& p) {
  return path_vertex(a, p, p.edges.size());
}

inline void check_path(GraphOfGroups const& a, APath const& p) {
  if (p.start >= a.num_vertices() || p.elements.size() != p.edges.size() + 1) {
    throw PreconditionError("malformed path: element/edge count mismatch");
  }
  VertexId at = p.start;
  for (std::size_t i = 0; i <= p.edges.size(); ++i) {
    if (p.elements[i] >= a.vertex_group(at)->order()) {
      throw PreconditionError("malformed path: element outside vertex group");
    }
    if (i < p.edges.size()) {
      EdgeId e = p.edges[i];
      if (e >= a.graph().num_edges() || a.graph().alpha(e) != at) {
        throw PreconditionError("malformed path: edges do not connect");
      }
      at = a.graph().omega(e);
    }
  }
}

inline APath trivial_path(VertexId v, Element g = kIdentity) { return APath{v, {g}, {}}; }

inline APath concat(GraphOfGroups const& a, APath const& p, APath const& q) {
  if (path_end(a, p) != q.start) {
    throw PreconditionError("concatenation of non-adjacent paths");
  }
  APath r = p;
  auto const& g = *a.vertex_group(q.start);
  r.elements.back() = g.mul(r.elements.back(), q.elements.front());
  r.elements.insert(r.elements.end(), q.elements.begin() + 1, q.elements.end());
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  return r;
}

inline APath inverse_path(GraphOfGroups const& a, APath const& p) {
  APath r;
  r.start = path_end(a, p);
  r.elements.clear();
  std::size_t const s = p.edges.size();
  for (std::size_t i = 0; i <= s; ++i) {
    VertexId v = path_vertex(a, p, s - i);
    r.elements.push_back(a.vertex_group(v)->inv(p.elements[s - i]));
  }
  for (std::size_t i = 0; i < s; ++i) {
    r.edges.push_back(reverse(p.edges[s - 1 - i]));
  }
  return r;
}

// Position i such that e_i, a_i, e_{i+1} is a pinch, if any, scanning from `from`.
inline std::optional<std::size_t> find_pinch(GraphOfGroups const& a, APath const& p,
                                             std::size_t from = 0) {
  for (std::size_t i = from; i + 1 < p.edges.size(); ++i) {
    EdgeId e = p.edges[i];
    if (p.edges[i + 1] == reverse(e)
        && a.boundary_image(reverse(e)).contains(p.elements[i + 1])) {
      return i;
    }
  }
  return std::nullopt;
}

// Replaces e, omega_e(c), e^-1 by alpha_e(c) at pinch position i.
inline void apply_pinch(GraphOfGroups const& a, APath& p, std::size_t i) {
  EdgeId   e  = p.edges[i];
  Element  c  = *a.omega_map(e).preimage(p.elements[i + 1]);
  auto const& g = *a.vertex_group(a.graph().alpha(e));
  p.elements[i] = g.mul(g.mul(p.elements[i], a.boundary(e)(c)), p.elements[i + 2]);
  p.elements.erase(p.elements.begin() + static_cast<long>(i) + 1,
                   p.elements.begin() + static_cast<long>(i) + 3);
  p.edges.erase(p.edges.begin() + static_cast<long>(i),
                p.edges.begin() + static_cast<long>(i) + 2);
}

// Britton reduction, always pinching the leftmost reducible position.
inline APath reduce_apath(GraphOfGroups const& a, APath p) {
  check_path(a, p);
  std::size_t from = 0;
  while (auto i = find_pinch(a, p, from)) {
    apply_pinch(a, p, *i);
    from = *i == 0 ? 0 : *i - 1;
  }
  return p;
}

inline bool is_reduced(GraphOfGroups const& a, APath const& p) {
  return !find_pinch(a, p).has_value();
}

// Reduced form with every a_i (i < s) replaced by the minimal representative
// of its coset a_i alpha_{e_{i+1}}(A_e). Two paths represent the same element
// of the fundamental groupoid iff their normal forms are equal.
inline APath normal_form(GraphOfGroups const& a, APath const& p) {
  APath r = reduce_apath(a, p);
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    EdgeId      e   = r.edges[i];
    auto const& g   = *a.vertex_group(a.graph().alpha(e));
    Element     x   = r.elements[i];
    Element     rep = left_coset_min(g, x, a.boundary_image(e));
    Element     c   = *a.boundary(e).preimage(g.mul(g.inv(rep), x));
    auto const& h   = *a.vertex_group(a.graph().omega(e));
    r.elements[i]     = rep;
    r.elements[i + 1] = h.mul(a.omega_map(e)(c), r.elements[i + 1]);
  }
  return r;
}

// A loop is elliptic iff its cyclic reduction has no edges.
inline bool is_elliptic(GraphOfGroups const& a, APath const& loop) {
  check_path(a, loop);
  if (path_end(a, loop) != loop.start) {
    throw PreconditionError("is_elliptic expects a loop");
  }
  APath p = reduce_apath(a, loop);
  while (p.edges.size() >= 2 && p.edges.back() == reverse(p.edges.front())) {
    // Conjugate by the first syllable and reduce again.
    APath prefix{p.start, {p.elements[0], kIdentity}, {p.edges[0]}};
    APath q = reduce_apath(a, concat(a, concat(a, inverse_path(a, prefix), p), prefix));
    if (q.edges.size() >= p.edges.size()) {
      break;
    }
    p = std::move(q);
  }
  return p.edges.empty();
}

struct PredicateResult {
  bool                    holds = true;
  std::optional<VertexId> witness;
};

// A valence-2 vertex is a weak-reduction witness when both incident boundary
// maps are onto; the single vertex of a one-edge circle is exempt since it
// cannot be removed.
inline PredicateResult is_weakly_reduced(GraphOfGroups const& a) {
  auto const& g = a.graph();
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    auto star = g.star(v);
    if (star.size() != 2 || star[0] == reverse(star[1])) {
      continue;
    }
    if (a.boundary_is_onto(star[0]) && a.boundary_is_onto(star[1])) {
      return {false, v};
    }
  }
  return {true, std::nullopt};
}

// No valence-1 vertex whose incident boundary map is onto.
inline PredicateResult is_minimal(GraphOfGroups const& a) {
  auto const& g = a.graph();
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    auto star = g.star(v);
    if (star.size() == 1 && a.boundary_is_onto(star[0])) {
      return {false, v};
    }
  }
  return {true, std::nullopt};
}

// Edge pairs left after repeatedly undoing subdivisions at valence-2
// vertices whose two boundary maps are onto. Only group orders matter.
inline std::size_t reduced_complexity_cr(GraphOfGroups const& a) {
  struct Pair {
    VertexId    ends[2];
    std::size_t order;
    bool        alive;
  };
  std::vector<Pair> pairs;
  for (PairId p = 0; p < a.num_pairs(); ++p) {
    pairs.push_back({{a.graph().alpha(2 * p), a.graph().omega(2 * p)},
                     a.edge_group(2 * p)->order(), true});
  }
  std::vector<bool> vertex_alive(a.num_vertices(), true);
  bool              changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < a.num_vertices() && !changed; ++v) {
      if (!vertex_alive[v]) {
        continue;
      }
      // (pair index, side) for every edge end at v
      std::vector<std::pair<std::size_t, int>> ends;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!pairs[i].alive) {
          continue;
        }
        for (int s = 0; s < 2; ++s) {
          if (pairs[i].ends[s] == v) {
            ends.emplace_back(i, s);
          }
        }
      }
      if (ends.size() != 2 || ends[0].first == ends[1].first) {
        continue;
      }
      std::size_t const vo = a.vertex_group(v)->order();
      Pair&             p1 = pairs[ends[0].first];
      Pair&             p2 = pairs[ends[1].first];
      if (p1.order != vo || p2.order != vo) {
        continue;
      }
      // Splice: p1's far end joined to p2's far end.
      p1.ends[ends[0].second] = p2.ends[1 - ends[1].second];
      p2.alive                = false;
      vertex_alive[v]         = false;
      changed                 = true;
    }
  }
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](Pair const& p) { return p.alive; }));
}

struct TupleEntry {
  APath path;
  bool  elliptic = false;
};

// Loops at `base`: each vertex-group generator carried along a BFS maximal
// subtree, then one loop per edge pair outside the subtree.
inline std::vector<TupleEntry> default_generating_tuple(GraphOfGroups const& a,
                                                         VertexId             base = 0) {
  auto const& g   = a.graph();
  auto        via = bfs_tree(g, base);
  std::vector<APath> to(a.num_vertices());
  std::vector<VertexId> order{base};
  to[base] = trivial_path(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (EdgeId e : g.star(order[i])) {
      VertexId w = g.omega(e);
      if (via[w] == e) {
        to[w] = concat(a, to[order[i]], APath{order[i], {kIdentity, kIdentity}, {e}});
        order.push_back(w);
      }
    }
  }
  if (order.size() != a.num_vertices()) {
    throw PreconditionError("graph of groups is not connected");
  }
  std::vector<TupleEntry> out;
  for (VertexId v : order) {
    for (Element x : a.vertex_group(v)->generators()) {
      APath loop = concat(a, concat(a, to[v], trivial_path(v, x)), inverse_path(a, to[v]));
      out.push_back({loop, true});
    }
  }
  std::vector<bool> tree_pair(a.num_pairs(), false);
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    if (via[v] != kNoEdge) {
      tree_pair[pair_of(via[v])] = true;
    }
  }
  for (PairId p = 0; p < a.num_pairs(); ++p) {
    if (tree_pair[p]) {
      continue;
    }
    EdgeId e    = 2 * p;
    APath  loop = concat(a, concat(a, to[g.alpha(e)], APath{g.alpha(e), {kIdentity, kIdentity}, {e}}),
                         inverse_path(a, to[g.omega(e)]));
    out.push_back({loop, is_elliptic(a, loop)});
  }
  return out;
}

}  // namespace acc

#endif  // ACCESSIBILITY_GRAPH_OF_GROUPS_HPP
