#include <catch_amalgamated.hpp>

#include <accessibility/instance.hpp>

#include "fixtures.hpp"

using namespace acc;

namespace {

std::string corpus(std::string const& name) { return std::string(ACC_CORPUS_DIR) + "/" + name + ".json"; }

// Same vertex names and group orders, same edges, and boundary maps that
// agree on element names.
void require_same(GraphOfGroups const& x, GraphOfGroups const& y) {
  REQUIRE(x.num_vertices() == y.num_vertices());
  REQUIRE(x.num_pairs() == y.num_pairs());
  for (VertexId v = 0; v < x.num_vertices(); ++v) {
    CHECK(x.vertex_name(v) == y.vertex_name(v));
    CHECK(x.vertex_group(v)->order() == y.vertex_group(v)->order());
  }
  for (EdgeId e = 0; e < 2 * x.num_pairs(); ++e) {
    CHECK(x.edge_name(e) == y.edge_name(e));
    CHECK(x.graph().alpha(e) == y.graph().alpha(e));
    REQUIRE(x.edge_group(e)->order() == y.edge_group(e)->order());
    auto const& gx = *x.vertex_group(x.graph().alpha(e));
    auto const& gy = *y.vertex_group(y.graph().alpha(e));
    for (Element c = 0; c < x.edge_group(e)->order(); ++c) {
      CHECK(gx.name(x.boundary(e)(c)) == gy.name(y.boundary(e)(c)));
    }
  }
}

json base_instance() {
  return json::parse(R"j({
    "groups": {"C1": {"cyclic": 1}, "C2": {"cyclic": 2}},
    "vertices": [{"name": "u", "group": "C2"}, {"name": "v", "group": "C2"}],
    "edges": [{"name": "e", "from": "u", "to": "v", "group": "C1", "alpha": [], "omega": []}]
  })j");
}

}  // namespace

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("()", 3) == Permutation{0, 1, 2});
  CHECK(parse_cycles("", 3) == Permutation{0, 1, 2});
  CHECK(parse_cycles("(1,2,3)", 3) == Permutation{1, 2, 0});
  CHECK(parse_cycles("(1 2)", 3) == Permutation{1, 0, 2});
  // left to right: first (1,2), then (2,3)
  CHECK(parse_cycles("(1,2)(2,3)", 3) == Permutation{2, 0, 1});
  CHECK(parse_cycles("(1,3)", 4) == Permutation{2, 1, 0, 3});
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(a)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 3), ParseError);
}

TEST_CASE("corpus files match the in-code fixtures") {
  require_same(*load_instance(corpus("c2_c2")).graph, *fx::c2_c2());
  require_same(*load_instance(corpus("theta")).graph, *fx::theta());
  require_same(*load_instance(corpus("s3_c4")).graph, *fx::s3_c4());
  require_same(*load_instance(corpus("chain")).graph, *fx::chain());
  require_same(*load_instance(corpus("c2_free_z")).graph, *fx::c2_hnn());
  require_same(*load_instance(corpus("subdivided")).graph, *fx::subdivided_c2_c2());
  auto w = load_instance(corpus("wedge3"));
  CHECK(w.graph->num_pairs() == 3);
  CHECK(w.graph->num_vertices() == 1);
}

TEST_CASE("tuples and constants") {
  auto s = load_instance(corpus("s3_c4"));
  CHECK(s.k == 1);
  CHECK(s.C == 2);
  CHECK_FALSE(s.default_tuple);
  auto g = s.graph->vertex_group(0);
  REQUIRE(s.tuple.size() == 2);
  CHECK(s.tuple[0] == fx::path(0, {fx::named(g, "(1,2,3)")}, {}));
  CHECK(s.tuple[1] == fx::path(0, {0, 1, 0}, {0, 1}));

  auto c = load_instance(corpus("chain"));
  CHECK(c.base == 1);
  REQUIRE(c.tuple.size() == 4);
  CHECK(c.tuple[2].edges == std::vector<EdgeId>{1, 0});
  CHECK(c.tuple[3].edges == std::vector<EdgeId>{2, 3});

  auto t = load_instance(corpus("theta"));
  CHECK(t.default_tuple);
  CHECK(t.tuple.size() == 2);

  auto z = load_instance(corpus("c2_times_z"));
  CHECK(z.depth_cap == 4);
  CHECK(z.measure == LengthMeasure::edges);
}

TEST_CASE("group encodings") {
  auto j = json::parse(R"j({
    "groups": {
      "K": {"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]], "names": ["1","a","b","ab"]},
      "P": {"permutations": {"degree": 4, "generators": [[2,1,3,4], "(1,2,3,4)"]}},
      "C2": {"cyclic": 2}
    },
    "vertices": [{"name": "x", "group": "K"}, {"name": "y", "group": "P"}],
    "edges": [{"name": "e", "from": "x", "to": "y", "group": "C2", "alpha": ["a"], "omega": ["(1,2)(3,4)"]}]
  })j");
  auto in = parse_instance(j);
  CHECK(in.graph->vertex_group(0)->order() == 4);
  CHECK(in.graph->vertex_group(1)->order() == 24);
  auto const& p = *in.graph->vertex_group(1);
  CHECK(p.name(in.graph->boundary(1)(1)) == p.name(*p.permutation_index(parse_cycles("(1,2)(3,4)", 4))));
}

TEST_CASE("malformed instances") {
  auto expect_error = [](auto&& edit) {
    auto j = base_instance();
    edit(j);
    CHECK_THROWS_AS(parse_instance(j), ParseError);
  };
  expect_error([](json& j) { j.erase("groups"); });
  expect_error([](json& j) { j["vertices"][0]["group"] = "C9"; });
  expect_error([](json& j) { j["edges"][0]["to"] = "w"; });
  expect_error([](json& j) { j["vertices"][1]["name"] = "u"; });
  expect_error([](json& j) { j["groups"]["C2"] = {{"cyclic", 0}}; });
  expect_error([](json& j) { j["groups"]["C2"] = {{"table", {{0, 1}, {0, 1}}}}; });
  expect_error([](json& j) { j["groups"]["C2"] = {{"order", 2}}; });
  expect_error([](json& j) { j["edges"][0]["group"] = "C2"; });
  expect_error([](json& j) {
    j["edges"][0] = {{"name", "e"}, {"from", "u"}, {"to", "v"}, {"group", "C2"}, {"alpha", {0}}, {"omega", {1}}};
  });
  expect_error([](json& j) {
    j["edges"][0] = {{"name", "e"}, {"from", "u"}, {"to", "v"}, {"group", "C2"}, {"alpha", {5}}, {"omega", {1}}};
  });
  expect_error([](json& j) { j["edges"] = json::array(); });
  expect_error([](json& j) { j["edges"][0]["name"] = "-e"; });
  expect_error([](json& j) { j["base"] = "w"; });
  expect_error([](json& j) { j["tuple"] = {{0, "-e", 0}}; });
  expect_error([](json& j) { j["tuple"] = {{0, "e"}}; });
  expect_error([](json& j) { j["tuple"] = {{0, "x", 0}}; });
  expect_error([](json& j) { j["tuple"] = {{7}}; });
  expect_error([](json& j) { j["measure"] = "miles"; });
  expect_error([](json& j) { j["C"] = 0; });
  expect_error([](json& j) { j["k"] = "one"; });
  CHECK_NOTHROW(parse_instance(base_instance()));
  CHECK_THROWS_AS(load_instance(corpus("does_not_exist")), ParseError);
}
