#ifndef ACCESSIBILITY_FOLD_HPP
#define ACCESSIBILITY_FOLD_HPP

// Folds IA, IIA, IIIA with the auxiliary moves that normalize labels before
// an identification. Every routine also rewrites a list of B-paths so that
// their nu-images stay the same elements of pi_1(A).

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agraph.hpp"

namespace acc {

enum class FoldKind { IA, IIA, IIIA };

inline char const* to_string(FoldKind k) {
  switch (k) {
    case FoldKind::IA: return "IA";
    case FoldKind::IIA: return "IIA";
    case FoldKind::IIIA: return "IIIA";
  }
  return "?";
}

struct FoldMove {
  FoldKind kind = FoldKind::IA;
  EdgeId   f1 = kNoEdge;  // the edge kept (IA/IIIA), the edge enlarged (IIA)
  EdgeId   f2 = kNoEdge;  // the edge identified with f1
  Element  b = kIdentity;  // (f2)_alpha = b (f1)_alpha alpha_e(c), b in B_alpha(f1)
  Element  c = kIdentity;  // c in A_e
  Element  g = kIdentity;  // IIA: the element added to B_f1
};

using Paths = std::vector<APath>;

// f_alpha <- f_alpha alpha_[f](c), f_omega <- omega_[f](c)^-1 f_omega and
// B_f <- c^-1 B_f c. nu-images are unchanged through the Bass-Serre relation,
// so paths are left alone.
inline void apply_aux_move(AGraph& b, EdgeId f, Element c) {
  auto const& a  = *b.target;
  auto const& ae = *a.edge_group(b.edge_image[f]);
  if (c >= ae.order()) {
    throw PreconditionError("aux move element outside A_[f]");
  }
  auto const& gx = b.group_at(b.graph.alpha(f));
  auto const& gy = b.group_at(b.graph.omega(f));
  b.labels[f]          = gx.mul(b.labels[f], a.boundary(b.edge_image[f])(c));
  b.labels[reverse(f)] = gy.mul(b.labels[reverse(f)], a.omega_map(b.edge_image[f])(c));
  b.edge_group(f)      = conjugate_subgroup(b.edge_group(f), ae.inv(c));
}

// f_alpha <- b0 f_alpha for b0 in B_alpha(f).
inline void apply_label_adjust(AGraph& b, EdgeId f, Element b0, Paths* paths = nullptr) {
  VertexId x = b.graph.alpha(f);
  if (!b.vertex_groups[x].contains(b0)) {
    throw PreconditionError("label adjuster outside B_alpha(f)");
  }
  auto const& g = b.group_at(x);
  b.labels[f]   = g.mul(b0, b.labels[f]);
  if (!paths) {
    return;
  }
  for (auto& p : *paths) {
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (p.edges[i] == f) {
        p.elements[i] = g.mul(p.elements[i], g.inv(b0));
      }
      if (p.edges[i] == reverse(f)) {
        p.elements[i + 1] = g.mul(b0, p.elements[i + 1]);
      }
    }
  }
}

// B_u <- h B_u h^-1 and every label at u multiplied on the left by h.
inline void apply_vertex_conjugation(AGraph& b, VertexId u, Element h, Paths* paths = nullptr) {
  auto const& g = b.group_at(u);
  if (h >= g.order()) {
    throw PreconditionError("conjugator outside A_[u]");
  }
  b.vertex_groups[u] = conjugate_subgroup(b.vertex_groups[u], h);
  for (EdgeId f : b.graph.star(u)) {
    b.labels[f] = g.mul(h, b.labels[f]);
  }
  if (!paths) {
    return;
  }
  for (auto& p : *paths) {
    if (p.start == u || bpath_end(b, p) == u) {
      throw EngineError("vertex conjugation at an endpoint of a tracked path");
    }
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
      if (bpath_vertex(b, p, i) == u) {
        p.elements[i] = g.conj(h, p.elements[i]);
      }
    }
  }
}

namespace detail {

// Copy of b with vertex `gone` merged into `keep` and pair `drop` removed,
// the latter identified with pair `into`. Returns the induced map.
inline GraphMap merge_quotient(AGraph const& b, VertexId gone, VertexId keep, EdgeId drop,
                               EdgeId into, AGraph& out) {
  GraphMap pi;
  pi.vertex.assign(b.num_vertices(), 0);
  out = AGraph{};
  out.target = b.target;
  for (VertexId u = 0; u < b.num_vertices(); ++u) {
    if (u == gone && gone != keep) {
      continue;
    }
    pi.vertex[u] = out.add_vertex(b.vertex_image[u], b.vertex_groups[u]);
  }
  if (gone != keep) {
    pi.vertex[gone] = pi.vertex[keep];
  }
  pi.edge.assign(b.num_edges(), kNoEdge);
  for (PairId p = 0; p < b.num_pairs(); ++p) {
    EdgeId f = 2 * p;
    if (p == pair_of(drop)) {
      continue;
    }
    EdgeId nf = out.graph.add_edge(pi.vertex[b.graph.alpha(f)], pi.vertex[b.graph.omega(f)]);
    out.edge_image.push_back(b.edge_image[f]);
    out.edge_image.push_back(b.edge_image[reverse(f)]);
    out.edge_groups.push_back(b.edge_groups[p]);
    out.labels.push_back(b.labels[f]);
    out.labels.push_back(b.labels[reverse(f)]);
    pi.edge[f]          = nf;
    pi.edge[reverse(f)] = reverse(nf);
  }
  pi.edge[drop]          = pi.edge[into];
  pi.edge[reverse(drop)] = pi.edge[reverse(into)];
  out.base               = pi.vertex[b.base];
  return pi;
}

inline void map_paths(GraphMap const& pi, Paths* paths) {
  if (!paths) {
    return;
  }
  for (auto& p : *paths) {
    p.start = pi.vertex[p.start];
    for (auto& e : p.edges) {
      e = pi.edge[e];
    }
  }
}

// b with (f2)_alpha = b (f1)_alpha alpha_e(c), if such b in B_x exists.
inline std::optional<std::pair<Element, Element>> coset_witness(AGraph const& b, EdgeId f1,
                                                                EdgeId f2) {
  auto const& a  = *b.target;
  auto const& g  = b.group_at(b.graph.alpha(f1));
  EdgeId      e  = b.edge_image[f1];
  Element     l1 = b.labels[f1], l2 = b.labels[f2];
  for (Element x : b.vertex_groups[b.graph.alpha(f1)].elements()) {
    // alpha_e(c) = l1^-1 x^-1 l2
    Element y = g.mul(g.mul(g.inv(l1), g.inv(x)), l2);
    if (auto c = a.boundary(e).preimage(y)) {
      return std::make_pair(x, *c);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// g in A_[f] \ B_f with f_alpha alpha(g) f_alpha^-1 in B_alpha(f), smallest first.
inline std::optional<Element> type_two_element(AGraph const& b, EdgeId f) {
  auto const& a  = *b.target;
  auto const& ae = *a.edge_group(b.edge_image[f]);
  auto const& g  = b.group_at(b.graph.alpha(f));
  auto const& bx = b.vertex_groups[b.graph.alpha(f)];
  for (Element x = 1; x < ae.order(); ++x) {
    if (b.edge_group(f).contains(x)) {
      continue;
    }
    if (bx.contains(g.conj(b.labels[f], a.boundary(b.edge_image[f])(x)))) {
      return x;
    }
  }
  return std::nullopt;
}

// Next fold: type II first (ascending edge, then element), then type I/III by
// lowest (f1, f2). `allowed` restricts the edge pairs that may take part.
// Returns nullopt when no fold applies.
inline std::optional<FoldMove> find_fold(AGraph const& b,
                                         std::function<bool(PairId)> const& allowed = {}) {
  auto ok = [&](EdgeId f) { return !allowed || allowed(pair_of(f)); };
  for (EdgeId f = 0; f < b.num_edges(); ++f) {
    if (!ok(f)) {
      continue;
    }
    if (auto g = type_two_element(b, f)) {
      FoldMove m;
      m.kind = FoldKind::IIA;
      m.f1   = f;
      m.g    = *g;
      return m;
    }
  }
  for (EdgeId f1 = 0; f1 < b.num_edges(); ++f1) {
    if (!ok(f1)) {
      continue;
    }
    for (EdgeId f2 = f1 + 1; f2 < b.num_edges(); ++f2) {
      if (f2 == reverse(f1) || !ok(f2) || b.graph.alpha(f1) != b.graph.alpha(f2)
          || b.edge_image[f1] != b.edge_image[f2]) {
        continue;
      }
      auto w = detail::coset_witness(b, f1, f2);
      if (!w) {
        continue;
      }
      FoldMove m;
      m.kind = b.graph.omega(f1) == b.graph.omega(f2) ? FoldKind::IIIA : FoldKind::IA;
      m.f1   = f1;
      m.f2   = f2;
      m.b    = w->first;
      m.c    = w->second;
      return m;
    }
  }
  return std::nullopt;
}

struct FoldResult {
  AGraph   agraph;
  GraphMap pi;
  FoldMove move;
  VertexId merged_from = 0;  // IA: the vertex that disappeared (old index)
  VertexId merged_into = 0;  // IA: the vertex it was merged into (old index)
  EdgeId   removed = kNoEdge;  // IA/IIIA: old edge that was identified away
  EdgeId   kept = kNoEdge;     // IA/IIIA: old edge it was identified with
};

// Applies m; `paths` are B-paths of b rewritten to paths of the result with
// the same nu-images.
inline FoldResult apply_fold(AGraph const& b, FoldMove const& m, Paths* paths = nullptr) {
  FoldResult r;
  r.move = m;
  auto const& a = *b.target;
  if (m.kind == FoldKind::IIA) {
    if (m.f1 >= b.num_edges() || b.edge_group(m.f1).contains(m.g)) {
      throw PreconditionError("IIA: element already in B_f");
    }
    auto const& g = b.group_at(b.graph.alpha(m.f1));
    if (!b.vertex_groups[b.graph.alpha(m.f1)].contains(
            g.conj(b.labels[m.f1], a.boundary(b.edge_image[m.f1])(m.g)))) {
      throw PreconditionError("IIA: conjugated image not in B_alpha(f)");
    }
    r.agraph           = b;
    EdgeId   f         = m.f1;
    VertexId y         = b.graph.omega(f);
    auto const& gy     = b.group_at(y);
    Element  k         = b.omega_label(f);
    r.agraph.edge_group(f) = join(b.edge_group(f), m.g);
    Element added = gy.mul(gy.mul(gy.inv(k), a.omega_map(b.edge_image[f])(m.g)), k);
    r.agraph.vertex_groups[y] = join(b.vertex_groups[y], added);
    r.pi = identity_map(b);
    return r;
  }
  if (m.f1 >= b.num_edges() || m.f2 >= b.num_edges() || m.f1 == m.f2
      || m.f2 == reverse(m.f1) || b.graph.alpha(m.f1) != b.graph.alpha(m.f2)
      || b.edge_image[m.f1] != b.edge_image[m.f2]) {
    throw PreconditionError("fold edges are not parallel over the same A-edge");
  }
  AGraph      w = b;
  auto const& g = w.group_at(w.graph.alpha(m.f1));
  // Normalize (f2)_alpha to (f1)_alpha.
  apply_aux_move(w, m.f2, a.edge_group(w.edge_image[m.f2])->inv(m.c));
  apply_label_adjust(w, m.f2, g.inv(m.b), paths);
  if (w.labels[m.f2] != w.labels[m.f1]) {
    throw PreconditionError("fold normalization does not equalize the labels");
  }
  VertexId y = w.graph.omega(m.f1), z = w.graph.omega(m.f2);
  if (m.kind == FoldKind::IA) {
    if (y == z) {
      throw PreconditionError("IA fold with equal endpoints");
    }
    // Keep the base vertex if it takes part.
    bool     keep_y = z != w.base;
    VertexId keep   = keep_y ? y : z;
    VertexId gone   = keep_y ? z : y;
    EdgeId   fk     = keep_y ? m.f1 : m.f2;
    EdgeId   fg     = keep_y ? m.f2 : m.f1;
    auto const& gg  = w.group_at(gone);
    Element  h      = gg.mul(w.labels[reverse(fk)], gg.inv(w.labels[reverse(fg)]));
    apply_vertex_conjugation(w, gone, h, paths);
    Subgroup vg = join(w.vertex_groups[keep], w.vertex_groups[gone]);
    Subgroup eg = join(w.edge_group(fk), w.edge_group(fg));
    w.vertex_groups[keep] = vg;
    w.edge_group(fk)      = eg;
    r.pi          = detail::merge_quotient(w, gone, keep, fg, fk, r.agraph);
    r.merged_from = gone;
    r.merged_into = keep;
    r.removed     = fg;
    r.kept        = fk;
    detail::map_paths(r.pi, paths);
    return r;
  }
  // IIIA
  auto const& gy   = w.group_at(y);
  Element     bo   = w.omega_label(m.f1);
  Element     bo2  = w.omega_label(m.f2);
  Element     d    = gy.mul(gy.inv(bo), bo2);  // b^-1 b'
  w.vertex_groups[y] = join(w.vertex_groups[y], d);
  w.edge_group(m.f1) = join(w.edge_group(m.f1), w.edge_group(m.f2));
  if (paths) {
    for (auto& p : *paths) {
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (p.edges[i] == m.f2) {
          p.elements[i + 1] = gy.mul(d, p.elements[i + 1]);
        }
        if (p.edges[i] == reverse(m.f2)) {
          p.elements[i] = gy.mul(p.elements[i], gy.inv(d));
        }
      }
    }
  }
  r.pi      = detail::merge_quotient(w, y, y, m.f2, m.f1, r.agraph);
  r.removed = m.f2;
  r.kept    = m.f1;
  detail::map_paths(r.pi, paths);
  return r;
}

// Loops at the base generating pi_1 of the associated graph of groups:
// vertex-group generators carried along a maximal subtree, then one loop per
// edge pair outside it.
inline Paths loop_generating_set(AGraph const& b) {
  auto        via = bfs_tree(b.graph, b.base);
  std::vector<APath>    to(b.num_vertices());
  std::vector<VertexId> order{b.base};
  to[b.base] = trivial_path(b.base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (EdgeId f : b.graph.star(order[i])) {
      VertexId u = b.graph.omega(f);
      if (via[u] == f) {
        APath p = to[order[i]];
        p.edges.push_back(f);
        p.elements.push_back(kIdentity);
        to[u] = std::move(p);
        order.push_back(u);
      }
    }
  }
  if (order.size() != b.num_vertices()) {
    throw PreconditionError("A-graph is not connected");
  }
  auto invert = [&](APath const& p) {
    APath r{bpath_end(b, p), {}, {}};
    for (std::size_t i = p.elements.size(); i-- > 0;) {
      r.elements.push_back(b.group_at(bpath_vertex(b, p, i)).inv(p.elements[i]));
    }
    for (std::size_t i = p.edges.size(); i-- > 0;) {
      r.edges.push_back(reverse(p.edges[i]));
    }
    return r;
  };
  auto join_paths = [&](APath p, APath const& q) {
    auto const& g = b.group_at(q.start);
    p.elements.back() = g.mul(p.elements.back(), q.elements.front());
    p.elements.insert(p.elements.end(), q.elements.begin() + 1, q.elements.end());
    p.edges.insert(p.edges.end(), q.edges.begin(), q.edges.end());
    return p;
  };
  Paths out;
  for (VertexId u : order) {
    for (Element x : subgroup_generators(b.vertex_groups[u])) {
      out.push_back(join_paths(join_paths(to[u], trivial_path(u, x)), invert(to[u])));
    }
  }
  std::vector<bool> tree(b.num_pairs(), false);
  for (EdgeId f : via) {
    if (f != kNoEdge) {
      tree[pair_of(f)] = true;
    }
  }
  for (PairId p = 0; p < b.num_pairs(); ++p) {
    if (tree[p]) {
      continue;
    }
    EdgeId f = 2 * p;
    APath  step{b.graph.alpha(f), {kIdentity, kIdentity}, {f}};
    out.push_back(join_paths(join_paths(to[b.graph.alpha(f)], step), invert(to[b.graph.omega(f)])));
  }
  return out;
}

struct FoldednessReport {
  bool                 folded = true;
  std::size_t          states_checked = 0;
  std::optional<APath> witness;  // reduced B-path with non-reduced nu-image
};

// Every reduced B-path of length <= max_len has a reduced nu-image. Whether a
// path extends depends only on its last edge, so states are (last edge, depth).
inline FoldednessReport foldedness_certificate(AGraph const& b, std::size_t max_len = 6) {
  FoldednessReport rep;
  auto const&      a = *b.target;
  std::set<std::pair<EdgeId, std::size_t>> seen;
  std::function<void(APath&)> walk = [&](APath& p) {
    ++rep.states_checked;
    if (!rep.folded || p.edges.size() == max_len) {
      return;
    }
    if (!p.edges.empty() && !seen.insert({p.edges.back(), p.edges.size()}).second) {
      return;
    }
    VertexId u = bpath_end(b, p);
    for (EdgeId f : b.graph.star(u)) {
      for (Element x : b.vertex_groups[u].elements()) {
        p.elements.back() = x;
        p.edges.push_back(f);
        p.elements.push_back(kIdentity);
        if (is_bpath_reduced(b, p)) {
          if (!is_reduced(a, nu_translate(b, p))) {
            rep.folded  = false;
            rep.witness = p;
          } else if (x == b.vertex_groups[u].elements().back()) {
            // the continuation does not depend on x
            walk(p);
          }
        }
        p.edges.pop_back();
        p.elements.pop_back();
        if (!rep.folded) {
          return;
        }
      }
      p.elements.back() = kIdentity;
    }
  };
  for (VertexId u = 0; u < b.num_vertices() && rep.folded; ++u) {
    APath p = trivial_path(u);
    walk(p);
  }
  return rep;
}

// The graph morphism is bijective and every B_u, B_f is all of A_[u], A_[f].
inline bool is_isomorphic_to_target(AGraph const& b) {
  auto const& a = *b.target;
  if (b.num_vertices() != a.num_vertices() || b.num_pairs() != a.num_pairs()) {
    return false;
  }
  std::vector<bool> hit_v(a.num_vertices(), false), hit_e(a.graph().num_edges(), false);
  for (VertexId u = 0; u < b.num_vertices(); ++u) {
    if (hit_v[b.vertex_image[u]] || !b.vertex_groups[u].is_whole()) {
      return false;
    }
    hit_v[b.vertex_image[u]] = true;
  }
  for (EdgeId f = 0; f < b.num_edges(); ++f) {
    if (hit_e[b.edge_image[f]] || !b.edge_group(f).is_whole()) {
      return false;
    }
    hit_e[b.edge_image[f]] = true;
  }
  return true;
}

}  // namespace acc

#endif  // ACCESSIBILITY_FOLD_HPP
