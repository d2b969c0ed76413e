#include <catch_amalgamated.hpp>

#include <accessibility/agraph.hpp>

#include <random>

#include "fixtures.hpp"

using namespace acc;

namespace {

std::vector<APath> entries_of(std::vector<TupleEntry> const& t) {
  std::vector<APath> out;
  for (auto const& e : t) {
    out.push_back(e.path);
  }
  return out;
}

APath random_apath(GraphOfGroups const& a, VertexId start, std::size_t len, std::mt19937& rng) {
  APath p = trivial_path(start, static_cast<Element>(rng() % a.vertex_group(start)->order()));
  for (std::size_t i = 0; i < len; ++i) {
    auto star = a.graph().star(path_end(a, p));
    if (star.empty()) {
      break;
    }
    EdgeId e = star[rng() % star.size()];
    p.edges.push_back(e);
    p.elements.push_back(static_cast<Element>(rng() % a.vertex_group(a.graph().omega(e))->order()));
  }
  return p;
}

}  // namespace

TEST_CASE("trivial A-graphs are valid and translate paths identically") {
  std::mt19937 rng(11);
  for (auto const& a : {fx::c2_c2(), fx::s3_c4(), fx::theta(), fx::chain(), fx::c2_hnn()}) {
    AGraph b = trivial_agraph(a);
    REQUIRE(validate_agraph(b));
    for (int i = 0; i < 30; ++i) {
      APath p = random_apath(*a, 0, rng() % 6, rng);
      CHECK(nu_translate(b, p) == p);
    }
    auto assoc = associated_graph_of_groups(b);
    REQUIRE(assoc->num_vertices() == a->num_vertices());
    REQUIRE(assoc->num_pairs() == a->num_pairs());
    for (VertexId v = 0; v < a->num_vertices(); ++v) {
      CHECK(assoc->vertex_group(v)->order() == a->vertex_group(v)->order());
    }
    for (EdgeId e = 0; e < a->graph().num_edges(); ++e) {
      CHECK(assoc->boundary_image(e).order() == a->boundary_image(e).order());
    }
  }
}

TEST_CASE("validation names the violated condition") {
  auto   a = fx::s3_c4();
  AGraph b = trivial_agraph(a);
  SECTION("condition 5") {
    b.vertex_groups[1] = Subgroup(a->vertex_group(1));
    auto r = validate_agraph(b);
    CHECK_FALSE(r.ok);
    CHECK(r.condition == "5");
    CHECK(r.witness == 1);
  }
  SECTION("condition 1") {
    b.edge_image[1] = 0;
    auto r = validate_agraph(b);
    CHECK(r.condition == "1");
  }
  SECTION("condition 2") {
    b.vertex_groups[0] = Subgroup::whole(a->vertex_group(1));
    CHECK(validate_agraph(b).condition == "2");
  }
  SECTION("condition 4") {
    b.labels[1] = 17;
    CHECK(validate_agraph(b).condition == "4");
  }
}

TEST_CASE("wedge for an elliptic and a hyperbolic entry") {
  auto a = fx::c2_hnn();
  auto t = default_generating_tuple(*a, 0);
  REQUIRE(t.size() == 2);
  auto w = build_wedge(a, 0, entries_of(t));
  REQUIRE(validate_agraph(w.agraph));
  CHECK(w.agraph.num_vertices() == 1);
  CHECK(w.agraph.num_pairs() == 1);
  CHECK(w.circles.size() == 1);
  CHECK(w.agraph.vertex_groups[0].order() == 2);
  auto assoc = associated_graph_of_groups(w.agraph);
  CHECK(assoc->edge_group(0)->order() == 1);
}

TEST_CASE("all-elliptic tuples give a single vertex") {
  auto a = fx::s3_c4();
  auto s = a->vertex_group(0);
  auto w = build_wedge(a, 0, {trivial_path(0, fx::named(s, "(1,2)")),
                              trivial_path(0, fx::named(s, "(1,2,3)"))});
  CHECK(w.agraph.num_vertices() == 1);
  CHECK(w.agraph.num_pairs() == 0);
  CHECK(w.agraph.vertex_groups[0].is_whole());
}

TEST_CASE("wedge circles translate to their entries") {
  auto a = fx::theta();
  auto t = default_generating_tuple(*a, 0);
  auto w = build_wedge(a, 0, entries_of(t));
  REQUIRE(validate_agraph(w.agraph));
  REQUIRE(w.circles.size() == 2);
  auto assoc = associated_graph_of_groups(w.agraph);
  std::size_t nontrivial = 0;
  for (VertexId u = 0; u < assoc->num_vertices(); ++u) {
    nontrivial += assoc->vertex_group(u)->order() > 1;
  }
  CHECK(nontrivial <= 1);
  for (PairId p = 0; p < assoc->num_pairs(); ++p) {
    CHECK(assoc->edge_group(2 * p)->order() == 1);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(reduce_apath(*a, nu_translate(w.agraph, w.loops[i])) == reduce_apath(*a, t[i].path));
  }
}

TEST_CASE("elliptic entries away from the base become stems") {
  auto a = fx::chain();
  auto s = a->vertex_group(1);
  Element r3 = fx::named(s, "(1,2,3)");
  // L^-1 (1,2,3) L seen from the middle vertex
  APath left = fx::path(1, {0, r3, 0}, {1, 0});
  APath right = fx::path(1, {0, r3, 0}, {2, 3});
  auto w = build_wedge(a, 1, {trivial_path(1, fx::named(s, "(1,2)")), trivial_path(1, r3), left, right});
  REQUIRE(validate_agraph(w.agraph));
  CHECK(w.stems.size() == 2);
  CHECK(w.circles.empty());
  CHECK(w.agraph.vertex_groups[w.agraph.base].is_whole());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(normal_form(*a, nu_translate(w.agraph, w.loops[i]))
          == normal_form(*a, i == 0 ? trivial_path(1, fx::named(s, "(1,2)"))
                                    : i == 1 ? trivial_path(1, r3) : i == 2 ? left : right));
  }
}

TEST_CASE("wedge rejects entries that are not loops at the base") {
  auto a = fx::c2_c2();
  CHECK_THROWS_AS(build_wedge(a, 0, {fx::path(0, {0, 0}, {0})}), PreconditionError);
}

TEST_CASE("B-path reduction uses the conjugated edge image") {
  auto   a = fx::s3_c4();
  AGraph b = trivial_agraph(a);
  auto   s = a->vertex_group(0);
  // e c^2 e^-1 pinches in A, and B = A here
  CHECK_FALSE(is_bpath_reduced(b, fx::path(1, {0, fx::named(s, "(1,2)"), 0}, {1, 0})));
  CHECK(is_bpath_reduced(b, fx::path(1, {0, fx::named(s, "(1,3)"), 0}, {1, 0})));
}
