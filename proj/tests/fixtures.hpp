#ifndef ACC_TESTS_FIXTURES_HPP
#define ACC_TESTS_FIXTURES_HPP

// Small graphs of groups built directly in code.

#include <accessibility/graph_of_groups.hpp>

namespace fx {

using namespace acc;

inline GroupPtr cyclic(std::size_t n) { return make_group(GroupTable::cyclic(n)); }

// S3 on {0,1,2}; names are 1-based cycles such as "(1,2)".
inline GroupPtr s3() {
  return make_group(GroupTable::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "S3"));
}

inline Element named(GroupPtr const& g, std::string const& s) { return g->find_name(s).value(); }

// Edge with group C_m given by a generator image on each side.
inline EdgeId cyclic_edge(GraphOfGroups& a, VertexId from, VertexId to, std::size_t m,
                          Element into_from, Element into_to, std::string name = "") {
  GroupPtr c = cyclic(m);
  std::vector<Element> gens = m > 1 ? std::vector<Element>{1} : std::vector<Element>{};
  auto imgs = [&](Element x) { return m > 1 ? std::vector<Element>{x} : std::vector<Element>{}; };
  return a.add_edge(from, to, c,
                    GroupMap::from_generator_images(c, a.vertex_group(from), gens, imgs(into_from)),
                    GroupMap::from_generator_images(c, a.vertex_group(to), gens, imgs(into_to)),
                    name);
}

// C2 *_1 C2
inline GraphOfGroupsPtr c2_c2() {
  auto a = std::make_shared<GraphOfGroups>();
  a->add_vertex(cyclic(2), "u");
  a->add_vertex(cyclic(2), "v");
  cyclic_edge(*a, 0, 1, 1, 0, 0, "e");
  return a;
}

// S3 *_{C2} C4 with the edge generator sent to (1,2) and to c^2.
inline GraphOfGroupsPtr s3_c4() {
  auto a = std::make_shared<GraphOfGroups>();
  auto s = s3();
  a->add_vertex(s, "u");
  a->add_vertex(cyclic(4), "v");
  cyclic_edge(*a, 0, 1, 2, named(s, "(1,2)"), 2, "e");
  return a;
}

// Two vertices with trivial groups joined by three edges.
inline GraphOfGroupsPtr theta() {
  auto a = std::make_shared<GraphOfGroups>();
  a->add_vertex(cyclic(1), "u");
  a->add_vertex(cyclic(1), "v");
  for (char const* n : {"e", "f", "g"}) {
    cyclic_edge(*a, 0, 1, 1, 0, 0, n);
  }
  return a;
}

// One vertex with trivial group and `loops` loops: a free group.
inline GraphOfGroupsPtr rose(std::size_t loops) {
  auto a = std::make_shared<GraphOfGroups>();
  a->add_vertex(cyclic(1), "u");
  for (std::size_t i = 0; i < loops; ++i) {
    cyclic_edge(*a, 0, 0, 1, 0, 0, "t" + std::to_string(i));
  }
  return a;
}

// C2 * Z as an HNN extension of C2 along the trivial group.
inline GraphOfGroupsPtr c2_hnn() {
  auto a = std::make_shared<GraphOfGroups>();
  a->add_vertex(cyclic(2), "u");
  cyclic_edge(*a, 0, 0, 1, 0, 0, "t");
  return a;
}

// S3 - C2 - S3 - C2 - S3 where the middle S3 sees (1,2) on the left edge and
// (1,3) on the right edge.
inline GraphOfGroupsPtr chain() {
  auto a = std::make_shared<GraphOfGroups>();
  auto s = s3();
  a->add_vertex(s, "l");
  a->add_vertex(s, "m");
  a->add_vertex(s, "r");
  cyclic_edge(*a, 0, 1, 2, named(s, "(1,2)"), named(s, "(1,2)"), "L");
  cyclic_edge(*a, 1, 2, 2, named(s, "(1,3)"), named(s, "(1,2)"), "R");
  return a;
}

// C2 *_1 C2 with the edge subdivided by a vertex carrying the trivial group.
inline GraphOfGroupsPtr subdivided_c2_c2() {
  auto a = std::make_shared<GraphOfGroups>();
  a->add_vertex(cyclic(2), "u");
  a->add_vertex(cyclic(1), "m");
  a->add_vertex(cyclic(2), "v");
  cyclic_edge(*a, 0, 1, 1, 0, 0, "e");
  cyclic_edge(*a, 1, 2, 1, 0, 0, "f");
  return a;
}

inline APath path(VertexId start, std::vector<Element> elems, std::vector<EdgeId> edges) {
  return APath{start, std::move(elems), std::move(edges)};
}

}  // namespace fx

#endif  // ACC_TESTS_FIXTURES_HPP
