#ifndef ACCESSIBILITY_GRAPH_HPP
#define ACCESSIBILITY_GRAPH_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace acc {

using VertexId = std::uint32_t;
using EdgeId   = std::uint32_t;  // directed edge; pair p owns edges 2p and 2p+1
using PairId   = std::uint32_t;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

constexpr EdgeId reverse(EdgeId e) noexcept { return e ^ 1u; }
constexpr PairId pair_of(EdgeId e) noexcept { return e >> 1; }

// Graph in Serre's sense: every edge comes with its inverse, and only the
// initial vertex of each directed edge is stored (omega(e) = alpha(e^-1)).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertices) : num_vertices_(vertices) {}

  VertexId add_vertex() { return static_cast<VertexId>(num_vertices_++); }

  // Adds the pair {e, e^-1} and returns e, directed from -> to.
  EdgeId add_edge(VertexId from, VertexId to) {
    if (from >= num_vertices_ || to >= num_vertices_) {
      throw PreconditionError("edge endpoint out of range");
    }
    origin_.push_back(from);
    origin_.push_back(to);
    return static_cast<EdgeId>(origin_.size() - 2);
  }

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return origin_.size(); }
  std::size_t num_pairs() const noexcept { return origin_.size() / 2; }

  VertexId alpha(EdgeId e) const { return origin_[e]; }
  VertexId omega(EdgeId e) const { return origin_[reverse(e)]; }
  bool     is_loop(EdgeId e) const { return alpha(e) == omega(e); }

  // Directed edges starting at v, ascending.
  std::vector<EdgeId> star(VertexId v) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < origin_.size(); ++e) {
      if (origin_[e] == v) {
        out.push_back(e);
      }
    }
    return out;
  }

  // Number of directed edges starting at v; a loop counts twice.
  std::size_t valence(VertexId v) const {
    std::size_t k = 0;
    for (VertexId o : origin_) {
      k += (o == v);
    }
    return k;
  }

  std::size_t num_components() const {
    std::vector<VertexId> parent(num_vertices_);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::size_t comps = num_vertices_;
    for (PairId p = 0; p < num_pairs(); ++p) {
      VertexId a = find(alpha(2 * p));
      VertexId b = find(omega(2 * p));
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps;
  }

  bool is_connected() const { return num_vertices_ > 0 && num_components() == 1; }

 private:
  std::size_t           num_vertices_ = 0;
  std::vector<VertexId> origin_;
};

// Edge pairs outside a maximal forest.
inline long betti_number(Graph const& g) {
  return static_cast<long>(g.num_pairs()) - static_cast<long>(g.num_vertices())
         + static_cast<long>(g.num_components());
}

// Breadth-first maximal subtree from `root`: for each vertex the directed
// edge through which it was reached (kNoEdge for the root and for vertices
// in other components).
inline std::vector<EdgeId> bfs_tree(Graph const& g, VertexId root) {
  std::vector<EdgeId> via(g.num_vertices(), kNoEdge);
  std::vector<bool>   seen(g.num_vertices(), false);
  std::vector<VertexId> queue{root};
  seen[root] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (EdgeId e : g.star(queue[i])) {
      VertexId w = g.omega(e);
      if (!seen[w]) {
        seen[w] = true;
        via[w]  = e;
        queue.push_back(w);
      }
    }
  }
  return via;
}

}  // namespace acc

#endif  // ACCESSIBILITY_GRAPH_HPP
