#ifndef ACCESSIBILITY_DECORATION_HPP
#define ACCESSIBILITY_DECORATION_HPP

// Decorated A-graphs (B, Gamma, E), the complexity c, taming, the
// amalgamation move and transport of decorations through folds.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fold.hpp"

namespace acc {

struct Decoration {
  std::set<VertexId> gamma_vertices;
  std::set<PairId>   gamma_edges;
  std::set<PairId>   script_e;

  bool operator==(Decoration const&) const = default;
};

struct DecoratedAGraph {
  AGraph      agraph;
  Decoration  decoration;
  std::size_t k = 1;
  std::size_t C = 1;
};

// r = floor(log2(C / |H|)) for |H| <= C, else 0.
inline std::size_t r_value(std::size_t order, std::size_t c) {
  std::size_t r = 0;
  if (order == 0 || order > c) {
    return 0;
  }
  while (order * (std::size_t{2} << r) <= c) {
    ++r;
  }
  return r;
}

inline std::size_t r_value(Subgroup const& h, std::size_t c) { return r_value(h.order(), c); }
inline std::size_t p_value(std::size_t order, std::size_t c) { return std::size_t{1} << r_value(order, c); }
inline std::size_t p_value(Subgroup const& h, std::size_t c) { return p_value(h.order(), c); }

enum class PairRole { gamma, script_e, tree };

inline PairRole role(Decoration const& d, PairId p) {
  if (d.gamma_edges.count(p)) {
    return PairRole::gamma;
  }
  return d.script_e.count(p) ? PairRole::script_e : PairRole::tree;
}

// The trees of the complement of Gamma and E, each rooted at its anchor v_T.
struct Forest {
  std::vector<VertexId> anchor;     // v_T; the vertex itself on Gamma
  std::vector<EdgeId>   last_edge;  // e_v, pointing at v; kNoEdge on Gamma
};

// First violated decoration condition: "structure", then "1" (forest), "2"
// (vertex outside Gamma and every tree), "3" (tree meets Gamma once), "4"
// (surjectivity along gamma_v).
inline ValidationReport validate_decoration(AGraph const& b, Decoration const& d,
                                            Forest* out = nullptr) {
  auto const& g = b.graph;
  for (VertexId v : d.gamma_vertices) {
    if (v >= g.num_vertices()) {
      return ValidationReport::failure("structure", "Gamma vertex out of range", static_cast<long>(v));
    }
  }
  for (PairId p : d.gamma_edges) {
    if (p >= g.num_pairs() || !d.gamma_vertices.count(g.alpha(2 * p))
        || !d.gamma_vertices.count(g.omega(2 * p))) {
      return ValidationReport::failure("structure", "Gamma edge with an endpoint outside Gamma",
                                       static_cast<long>(p));
    }
    if (d.script_e.count(p)) {
      return ValidationReport::failure("structure", "edge in both Gamma and E", static_cast<long>(p));
    }
  }
  for (PairId p : d.script_e) {
    if (p >= g.num_pairs()) {
      return ValidationReport::failure("structure", "E edge out of range", static_cast<long>(p));
    }
  }
  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::vector<bool> touched(g.num_vertices(), false);
  for (PairId p = 0; p < g.num_pairs(); ++p) {
    if (role(d, p) != PairRole::tree) {
      continue;
    }
    VertexId u = find(g.alpha(2 * p)), w = find(g.omega(2 * p));
    if (u == w) {
      return ValidationReport::failure("1", "tree edges contain a cycle", static_cast<long>(p));
    }
    parent[u] = w;
    touched[g.alpha(2 * p)] = touched[g.omega(2 * p)] = true;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!d.gamma_vertices.count(v) && !touched[v]) {
      return ValidationReport::failure("2", "vertex lies neither in Gamma nor in a tree",
                                       static_cast<long>(v));
    }
  }
  std::vector<std::size_t> hits(g.num_vertices(), 0);
  for (VertexId v : d.gamma_vertices) {
    ++hits[find(v)];
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (touched[v] && hits[find(v)] != 1) {
      return ValidationReport::failure("3", "tree meets Gamma in " + std::to_string(hits[find(v)])
                                                + " vertices", static_cast<long>(v));
    }
  }
  Forest f;
  f.anchor.assign(g.num_vertices(), 0);
  f.last_edge.assign(g.num_vertices(), kNoEdge);
  std::vector<VertexId> queue(d.gamma_vertices.begin(), d.gamma_vertices.end());
  std::vector<bool>     seen(g.num_vertices(), false);
  for (VertexId v : queue) {
    seen[v]     = true;
    f.anchor[v] = v;
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId u = queue[i];
    for (EdgeId e : g.star(u)) {
      VertexId w = g.omega(e);
      if (role(d, pair_of(e)) != PairRole::tree || seen[w]) {
        continue;
      }
      seen[w]        = true;
      f.anchor[w]    = f.anchor[u];
      f.last_edge[w] = e;
      queue.push_back(w);
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    EdgeId e = f.last_edge[v];
    if (e != kNoEdge && b.edge_group(e).order() != b.vertex_groups[v].order()) {
      return ValidationReport::failure("4", "omega of e_v is not onto B_v", static_cast<long>(v));
    }
  }
  if (out) {
    *out = std::move(f);
  }
  return ValidationReport::success();
}

inline ValidationReport validate_decoration(DecoratedAGraph const& d) {
  return validate_decoration(d.agraph, d.decoration);
}

inline Forest forest_of(AGraph const& b, Decoration const& d) {
  Forest f;
  auto   rep = validate_decoration(b, d, &f);
  if (!rep) {
    throw PreconditionError("invalid decoration: condition " + rep.condition + ", " + rep.detail);
  }
  return f;
}

// gamma_v from v_T to v.
inline std::vector<EdgeId> gamma_path(AGraph const& b, Forest const& f, VertexId v) {
  std::vector<EdgeId> p;
  for (EdgeId e = f.last_edge[v]; e != kNoEdge; e = f.last_edge[b.graph.alpha(e)]) {
    p.push_back(e);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

struct ComplexityReport {
  std::size_t gamma_image_edges = 0;  // #[E Gamma]
  std::size_t sum_term = 0;           // sum of p(B_e) over E
  std::size_t c = 0;
  bool        oversized = false;      // some E edge group exceeds C

  bool operator==(ComplexityReport const&) const = default;
};

inline ComplexityReport complexity_c(DecoratedAGraph const& d) {
  ComplexityReport r;
  std::set<PairId> image;
  for (PairId p : d.decoration.gamma_edges) {
    image.insert(pair_of(d.agraph.edge_image[2 * p]));
  }
  r.gamma_image_edges = image.size();
  for (PairId p : d.decoration.script_e) {
    auto order = d.agraph.edge_groups[p].order();
    r.sum_term += p_value(order, d.C);
    r.oversized = r.oversized || order > d.C;
  }
  r.c = r.gamma_image_edges + (2 * d.k + 1) * r.sum_term;
  return r;
}

// Gamma is the base together with the stem tips; E holds the last edge of
// every circle and every stem.
inline DecoratedAGraph initial_wedge_decoration(Wedge const& w, std::size_t k, std::size_t c) {
  DecoratedAGraph d{w.agraph, {}, k, c};
  d.decoration.gamma_vertices.insert(w.agraph.base);
  for (auto const& circle : w.circles) {
    d.decoration.script_e.insert(pair_of(circle.back()));
  }
  for (auto const& stem : w.stems) {
    d.decoration.gamma_vertices.insert(w.agraph.graph.omega(stem.back()));
    d.decoration.script_e.insert(pair_of(stem.back()));
  }
  return d;
}

inline Decoration push_forward(Decoration const& d, GraphMap const& pi) {
  Decoration out;
  for (VertexId v : d.gamma_vertices) {
    out.gamma_vertices.insert(pi.vertex[v]);
  }
  for (PairId p : d.gamma_edges) {
    out.gamma_edges.insert(pair_of(pi.edge[2 * p]));
  }
  for (PairId p : d.script_e) {
    out.script_e.insert(pair_of(pi.edge[2 * p]));
  }
  return out;
}

namespace detail {

inline void require_valid(DecoratedAGraph const& d, std::string const& what) {
  auto rep = validate_decoration(d);
  if (!rep) {
    throw EngineError(what + " produced an invalid decoration: condition " + rep.condition + ", "
                      + rep.detail + " (" + std::to_string(rep.witness) + ")");
  }
}

inline void require_monotone(ComplexityReport const& before, ComplexityReport const& after,
                             std::string const& what) {
  if (after.c > before.c) {
    throw EngineError(what + " increased the complexity from " + std::to_string(before.c) + " to "
                      + std::to_string(after.c));
  }
}

inline void add_gamma_path(Decoration& d, AGraph const& b, Forest const& f, VertexId v) {
  d.gamma_vertices.insert(v);
  for (EdgeId e : gamma_path(b, f, v)) {
    d.gamma_vertices.insert(b.graph.alpha(e));
    d.gamma_edges.insert(pair_of(e));
  }
}

}  // namespace detail

using FoldObserver =
    std::function<void(DecoratedAGraph const& before, FoldResult const&, DecoratedAGraph const& after)>;

// Folds inside the complement of E until none applies there.
inline DecoratedAGraph tame(DecoratedAGraph d, Paths* paths = nullptr,
                            FoldObserver const& on_fold = {}) {
  for (;;) {
    auto const& e = d.decoration.script_e;
    auto        m = find_fold(d.agraph, [&](PairId p) { return !e.count(p); });
    if (!m) {
      return d;
    }
    auto            before = complexity_c(d);
    auto            r      = apply_fold(d.agraph, *m, paths);
    DecoratedAGraph next{r.agraph, push_forward(d.decoration, r.pi), d.k, d.C};
    for (PairId p : e) {
      if (next.agraph.edge_groups[pair_of(r.pi.edge[2 * p])].order() != d.agraph.edge_groups[p].order()) {
        throw EngineError("taming changed the group of an E edge");
      }
    }
    detail::require_valid(next, "taming");
    detail::require_monotone(before, complexity_c(next), "taming");
    if (on_fold) {
      on_fold(d, r, next);
    }
    d = std::move(next);
  }
}

// B(e): Gamma grows by e and the gamma paths of its endpoints, E loses e.
inline DecoratedAGraph amalgamate_edge(DecoratedAGraph const& d, PairId p) {
  auto const& b = d.agraph;
  if (!d.decoration.script_e.count(p)) {
    throw PreconditionError("amalgamation needs an edge of E");
  }
  if (b.edge_groups[p].order() <= d.C) {
    throw PreconditionError("amalgamation needs |B_e| > C");
  }
  Forest          f    = forest_of(b, d.decoration);
  DecoratedAGraph next = d;
  auto&           dec  = next.decoration;
  dec.script_e.erase(p);
  dec.gamma_edges.insert(p);
  detail::add_gamma_path(dec, b, f, b.graph.alpha(2 * p));
  detail::add_gamma_path(dec, b, f, b.graph.omega(2 * p));
  detail::require_valid(next, "amalgamation");
  detail::require_monotone(complexity_c(d), complexity_c(next), "amalgamation");
  return next;
}

struct Transported {
  DecoratedAGraph decorated;
  std::string     tag;  // e.g. "IA-1C"
};

namespace detail {

struct Candidate {
  std::string tag;
  Decoration  dec;  // in the indexing of the graph before the fold
};

class TransportCases {
 public:
  TransportCases(DecoratedAGraph const& d, FoldMove const& m)
      : d_(d), b_(d.agraph), f_(forest_of(d.agraph, d.decoration)), m_(m) {}

  std::vector<Candidate> candidates() const {
    auto const& dec = d_.decoration;
    if (m_.kind == FoldKind::IIA) {
      return type_two();
    }
    bool in1 = dec.script_e.count(pair_of(m_.f1)) > 0;
    bool in2 = dec.script_e.count(pair_of(m_.f2)) > 0;
    if (!in1 && !in2) {
      return {{"tame", dec}};
    }
    EdgeId e1 = in1 ? m_.f1 : m_.f2;
    EdgeId e2 = in1 ? m_.f2 : m_.f1;
    if (m_.kind == FoldKind::IIIA) {
      return type_three(e1, e2, in1 && in2);
    }
    return type_one(e1, e2, in1 && in2);
  }

 private:
  bool in_gamma(VertexId v) const { return d_.decoration.gamma_vertices.count(v) > 0; }
  VertexId omega(EdgeId e) const { return b_.graph.omega(e); }
  EdgeId   last(VertexId v) const { return f_.last_edge[v]; }
  bool     onto(EdgeId e) const { return b_.edge_group(e).order() == b_.vertex_groups[omega(e)].order(); }
  bool     above_half(EdgeId e) const { return 2 * b_.edge_group(e).order() > d_.C; }

  Decoration with(std::initializer_list<VertexId> gv, std::initializer_list<EdgeId> add,
                  std::initializer_list<EdgeId> drop) const {
    Decoration out = d_.decoration;
    for (VertexId v : gv) {
      out.gamma_vertices.insert(v);
    }
    for (EdgeId e : add) {
      out.script_e.insert(pair_of(e));
    }
    for (EdgeId e : drop) {
      out.script_e.erase(pair_of(e));
    }
    return out;
  }

  std::vector<Candidate> type_two() const {
    EdgeId   e = m_.f1;
    VertexId y = omega(e);
    if (!d_.decoration.script_e.count(pair_of(e))) {
      return {{"IIA-tame", d_.decoration}};
    }
    if (in_gamma(y)) {
      return {{"IIA-1", d_.decoration}};
    }
    if (onto(e)) {
      return {{"IIA-2", with({}, {last(y)}, {e})}};
    }
    if (above_half(e)) {
      Decoration out = with({}, {}, {e});
      out.gamma_edges.insert(pair_of(e));
      add_gamma_path(out, b_, f_, b_.graph.alpha(e));
      add_gamma_path(out, b_, f_, y);
      return {{"IIA-3", out}};
    }
    return {{"IIA-3", with({y}, {last(y)}, {})}};
  }

  // Both e1 and e2 in E, or the case-3 shape which reuses this list.
  std::vector<Candidate> type_one_both(EdgeId e1, EdgeId e2) const {
    if (!in_gamma(omega(e1)) && in_gamma(omega(e2))) {
      std::swap(e1, e2);
    }
    VertexId y = omega(e1), z = omega(e2);
    if (in_gamma(y) && in_gamma(z)) {
      return {{"1A", d_.decoration}};
    }
    if (in_gamma(y)) {
      return {{"1B", with({}, {last(z)}, {})}};
    }
    std::vector<Candidate> out;
    if (onto(e1)) {
      out.push_back({"1C", with({}, {last(y)}, {})});
    }
    if (onto(e2)) {
      out.push_back({"1C", with({}, {last(z)}, {})});
    }
    if (!out.empty()) {
      return out;
    }
    if (!above_half(e1)) {
      return {{"1D", with({y}, {last(y), last(z)}, {})}};
    }
    Decoration g = d_.decoration;
    add_gamma_path(g, b_, f_, y);
    add_gamma_path(g, b_, f_, z);
    return {{"1E", g}};
  }

  std::vector<Candidate> type_one(EdgeId e1, EdgeId e2, bool both) const {
    std::vector<Candidate> out;
    auto                   tag = [](std::string const& s) { return "IA-" + s; };
    VertexId               x = b_.graph.alpha(e1), y = omega(e1);
    if (both) {
      for (auto& c : type_one_both(e1, e2)) {
        out.push_back({tag(c.tag), c.dec});
      }
      return out;
    }
    switch (role(d_.decoration, pair_of(e2))) {
      case PairRole::gamma:
        if (in_gamma(y)) {
          return {{tag("2A"), with({}, {}, {e1})}};
        }
        return {{tag("2B"), with({}, {last(y)}, {e1})}};
      case PairRole::tree:
        if (last(x) == reverse(e2)) {
          for (auto& c : type_one_both(e1, e2)) {
            c.dec.script_e.erase(pair_of(e1));
            out.push_back({tag("3-" + c.tag), c.dec});
          }
          return out;
        }
        if (in_gamma(y)) {
          return {{tag("4A"), d_.decoration}};
        }
        return {{tag("4B"), with({}, {last(y)}, {e1})}};
      case PairRole::script_e:
        break;
    }
    return out;
  }

  std::vector<Candidate> type_three(EdgeId e1, EdgeId e2, bool both) const {
    VertexId x = b_.graph.alpha(e1), y = omega(e1);
    if (both) {
      if (in_gamma(y)) {
        return {{"IIIA-1A", d_.decoration}};
      }
      return {{"IIIA-1B", with({y}, {last(y)}, {})}};
    }
    if (role(d_.decoration, pair_of(e2)) == PairRole::gamma) {
      return {{"IIIA-2A", with({}, {}, {e1})}};
    }
    if (last(x) == reverse(e2)) {
      if (in_gamma(y)) {
        return {{"IIIA-2B", with({}, {}, {e1})}};
      }
      return {{"IIIA-2C", with({y}, {last(y)}, {e1})}};
    }
    return {{"IIIA-2D", with({y}, {}, {})}};
  }

  DecoratedAGraph const& d_;
  AGraph const&          b_;
  Forest                 f_;
  FoldMove               m_;
};

}  // namespace detail

// Decoration for the result of a fold whose moves touch E. Candidates follow
// the case analysis; the first valid one that does not raise c is taken.
inline Transported transport_decoration(DecoratedAGraph const& d, FoldResult const& r) {
  for (PairId p : d.decoration.script_e) {
    if (d.agraph.edge_groups[p].order() > d.C) {
      throw PreconditionError("transport needs every E edge group of order at most C");
    }
  }
  auto        before = complexity_c(d);
  auto        cands  = detail::TransportCases(d, r.move).candidates();
  std::string last_failure;
  for (auto const& c : cands) {
    Transported t{{r.agraph, push_forward(c.dec, r.pi), d.k, d.C}, c.tag};
    auto        rep = validate_decoration(t.decorated);
    if (!rep) {
      last_failure = c.tag + ": condition " + rep.condition + ", " + rep.detail;
      continue;
    }
    auto after = complexity_c(t.decorated);
    if (after.c > before.c) {
      last_failure = c.tag + ": complexity " + std::to_string(before.c) + " -> "
                     + std::to_string(after.c);
      continue;
    }
    return t;
  }
  throw EngineError("no transport case applies to the " + std::string(to_string(r.move.kind))
                    + " fold" + (last_failure.empty() ? "" : " (" + last_failure + ")"));
}

}  // namespace acc

#endif  // ACCESSIBILITY_DECORATION_HPP
