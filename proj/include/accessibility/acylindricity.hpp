#ifndef ACCESSIBILITY_ACYLINDRICITY_HPP
#define ACCESSIBILITY_ACYLINDRICITY_HPP

// Search over Bass-Serre tree segments for the smallest k such that every
// segment longer than k (in the chosen measure) has stabilizer of order at
// most C.
//
// A segment starting at the tree vertex fixed by A_v is encoded by the path
// e_1, a_1, e_2, ..., a_{s-1}, e_s with a_i a left coset representative of
// alpha_{e_{i+1}}(A_e) in the group at the i-th vertex. Its stabilizer is
// tracked in the frame of the current end vertex:
//
//   K_0 = A_v,   K_{i+1} = omega_e( alpha_e^-1( a_i^-1 K_i a_i  ∩  alpha_e(A_e) ) )
//
// which has the same order as the stabilizer in the frame of the start.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "graph_of_groups.hpp"

namespace acc {

enum class LengthMeasure {
  edges,  // number of edges of the segment
  pairs,  // number of distinct quotient edge pairs met
};

inline char const* to_string(LengthMeasure m) {
  return m == LengthMeasure::edges ? "edges" : "pairs";
}

struct SegmentDescriptor {
  APath       path;  // a_0 = 1, then e_1, a_1, ..., e_s, a_s = 1
  std::size_t stabilizer_order = 0;
  std::size_t projective_length = 0;
};

struct AcylindricityResult {
  bool        conclusive = true;
  std::size_t k = 0;                // minimal k, meaningful when conclusive
  std::size_t states_explored = 0;
  std::optional<SegmentDescriptor> witness;  // longest segment with |stab| > C
};

namespace detail {

inline std::size_t measure_of(LengthMeasure m, std::size_t length, std::uint64_t used) {
  return m == LengthMeasure::edges ? length : static_cast<std::size_t>(std::popcount(used));
}

// One step of the stabilizer recursion. Returns K_{i+1}.
inline Subgroup extend_stabilizer(GraphOfGroups const& a, Subgroup const& k, Element rep,
                                  EdgeId e) {
  auto const& g = *a.vertex_group(a.graph().alpha(e));
  Subgroup    moved = conjugate_subgroup(k, g.inv(rep));
  Subgroup    fix   = subgroup_intersection(moved, a.boundary_image(e));
  Subgroup    pre   = preimage_subgroup(a.boundary(e), fix);
  return map_subgroup(a.omega_map(e), pre);
}

class SegmentSearch {
 public:
  SegmentSearch(GraphOfGroups const& a, std::size_t c, std::size_t cap, LengthMeasure m)
      : a_(a), c_(c), cap_(cap), measure_(m) {
    if (a.num_pairs() > 64) {
      throw PreconditionError("acylindricity search supports at most 64 edge pairs");
    }
    for (EdgeId e = 0; e < a.graph().num_edges(); ++e) {
      reps_.push_back(left_coset_representatives(a.boundary_image(e)));
    }
  }

  AcylindricityResult run() {
    for (VertexId v = 0; v < a_.num_vertices() && result_.conclusive; ++v) {
      Subgroup whole = Subgroup::whole(a_.vertex_group(v));
      if (whole.order() <= c_) {
        continue;
      }
      stack_ = SegmentDescriptor{trivial_path(v), whole.order(), 0};
      if (measure_ == LengthMeasure::edges) {
        dfs_edges(v, kNoEdge, whole, 0);
      } else {
        dfs_pairs(v, kNoEdge, whole, 0);
      }
    }
    return result_;
  }

 private:
  using Key = std::tuple<VertexId, EdgeId, std::vector<Element>, std::uint64_t>;

  void record(std::size_t measure, Subgroup const& k) {
    if (measure > result_.k || !result_.witness) {
      result_.k = std::max(result_.k, measure);
      result_.witness = stack_;
      result_.witness->stabilizer_order  = k.order();
      result_.witness->projective_length = measure;
    }
    if (measure > cap_) {
      result_.conclusive = false;
    }
  }

  template <typename F>
  void for_each_extension(VertexId v, EdgeId last, Subgroup const& k, F&& f) {
    for (EdgeId e : a_.graph().star(v)) {
      for (Element rep : reps_[e]) {
        // The identity coset after e_i^-1 would backtrack.
        if (last != kNoEdge && e == reverse(last) && rep == kIdentity) {
          continue;
        }
        Subgroup next = extend_stabilizer(a_, k, rep, e);
        if (next.order() > k.order()) {
          throw EngineError("segment stabilizer grew under extension");
        }
        if (next.order() <= c_) {
          continue;  // extensions cannot raise the order again
        }
        f(e, rep, next);
      }
    }
  }

  void push(EdgeId e, Element rep) {
    stack_.path.elements.back() = rep;
    stack_.path.edges.push_back(e);
    stack_.path.elements.push_back(kIdentity);
  }
  void pop() {
    stack_.path.edges.pop_back();
    stack_.path.elements.pop_back();
    stack_.path.elements.back() = kIdentity;
  }

  // Depth-bounded search; states repeat only at equal depth, so memoizing on
  // (state, depth) keeps the search polynomial in the cap.
  void dfs_edges(VertexId v, EdgeId last, Subgroup const& k, std::size_t depth) {
    ++result_.states_explored;
    record(depth, k);
    if (depth > cap_ || !result_.conclusive) {
      return;
    }
    Key key{v, last, k.elements(), depth};
    if (!visited_.insert(key).second) {
      return;
    }
    for_each_extension(v, last, k, [&](EdgeId e, Element rep, Subgroup const& next) {
      push(e, rep);
      dfs_edges(a_.graph().omega(e), e, next, depth + 1);
      pop();
    });
  }

  // The state space (vertex, last edge, stabilizer, pairs used) is finite;
  // revisiting a state cannot raise the measure.
  void dfs_pairs(VertexId v, EdgeId last, Subgroup const& k, std::uint64_t used) {
    ++result_.states_explored;
    record(measure_of(measure_, 0, used), k);
    if (!result_.conclusive) {
      return;
    }
    Key key{v, last, k.elements(), used};
    if (!visited_.insert(key).second) {
      return;
    }
    for_each_extension(v, last, k, [&](EdgeId e, Element rep, Subgroup const& next) {
      push(e, rep);
      dfs_pairs(a_.graph().omega(e), e, next, used | (std::uint64_t{1} << pair_of(e)));
      pop();
    });
  }

  GraphOfGroups const&              a_;
  std::size_t                       c_;
  std::size_t                       cap_;
  LengthMeasure                     measure_;
  std::vector<std::vector<Element>> reps_;
  std::set<Key>                     visited_;
  SegmentDescriptor                 stack_;
  AcylindricityResult               result_;
};

}  // namespace detail

// Smallest k such that A is (k, C)-acylindrical, exploring segments whose
// measure is at most depth_cap. Finding a segment of measure > depth_cap with
// stabilizer order > C yields an inconclusive result.
inline AcylindricityResult acylindricity(GraphOfGroups const& a, std::size_t c,
                                         std::size_t   depth_cap = 8,
                                         LengthMeasure measure   = LengthMeasure::edges) {
  if (depth_cap < 1) {
    throw PreconditionError("depth_cap must be at least 1");
  }
  return detail::SegmentSearch(a, c, depth_cap, measure).run();
}

}  // namespace acc

#endif  // ACCESSIBILITY_ACYLINDRICITY_HPP
