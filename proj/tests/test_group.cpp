#include <catch_amalgamated.hpp>

#include <accessibility/group.hpp>

#include "fixtures.hpp"

using namespace acc;

namespace {

Permutation compose_oracle(Permutation const& p, Permutation const& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] = q[p[i]];
  }
  return r;
}

// All subsets closed under multiplication, by bitmask enumeration.
std::size_t count_subgroups_oracle(GroupTable const& g) {
  std::size_t n = g.order(), count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) {
      continue;
    }
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a) {
      for (Element b = 0; b < n && closed; ++b) {
        if ((mask >> a & 1u) && (mask >> b & 1u)) {
          closed = (mask >> g.mul(a, b)) & 1u;
        }
      }
    }
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("cyclic table matches modular addition") {
  auto g = GroupTable::cyclic(7);
  REQUIRE(verify_group_axioms(g));
  for (Element a = 0; a < 7; ++a) {
    for (Element b = 0; b < 7; ++b) {
      CHECK(g.mul(a, b) == (a + b) % 7);
    }
    CHECK(g.mul(a, g.inv(a)) == kIdentity);
  }
}

TEST_CASE("permutation table agrees with direct composition") {
  auto g = GroupTable::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  REQUIRE(g.order() == 24);
  REQUIRE(verify_group_axioms(g));
  Permutation id{0, 1, 2, 3};
  REQUIRE(g.permutation_index(id) == kIdentity);
  Permutation s{1, 0, 2, 3}, t{1, 2, 3, 0};
  Element     es = *g.permutation_index(s), et = *g.permutation_index(t);
  CHECK(g.mul(es, et) == *g.permutation_index(compose_oracle(s, t)));
  CHECK(g.mul(et, es) == *g.permutation_index(compose_oracle(t, s)));
  // every product of words in s, t
  std::vector<Permutation> words{s, t, compose_oracle(s, t), compose_oracle(t, t)};
  for (auto const& p : words) {
    for (auto const& q : words) {
      CHECK(g.mul(*g.permutation_index(p), *g.permutation_index(q))
            == *g.permutation_index(compose_oracle(p, q)));
    }
  }
  CHECK(g.name(es) == "(1,2)");
  CHECK(g.name(et) == "(1,2,3,4)");
}

TEST_CASE("S3 subgroup lattice") {
  auto g = fx::s3();
  auto subs = all_subgroups(g);
  CHECK(subs.size() == count_subgroups_oracle(*g));
  CHECK(subs.size() == 6);
  for (auto const& h : subs) {
    CHECK(g->order() % h.order() == 0);
    CHECK(left_coset_representatives(h).size() * h.order() == g->order());
  }
  auto c4 = fx::cyclic(4);
  CHECK(all_subgroups(c4).size() == count_subgroups_oracle(*c4));
}

TEST_CASE("identity is moved to index 0 and names follow") {
  std::vector<std::vector<Element>> rows{{1, 0}, {0, 1}};
  auto g = GroupTable::from_rows(rows, {"a", "e"});
  CHECK(verify_group_axioms(g));
  CHECK(g.name(kIdentity) == "e");
  CHECK(g.mul(1, 1) == kIdentity);
}

TEST_CASE("axiom check rejects a non-associative loop") {
  std::vector<std::vector<Element>> rows{{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}};
  auto r = verify_group_axioms(GroupTable::from_rows(rows));
  CHECK_FALSE(r.ok);
  CHECK(r.condition == "associativity");
}

TEST_CASE("axiom check rejects a table without inverses") {
  std::vector<std::vector<Element>> rows{{0, 1}, {1, 1}};
  auto r = verify_group_axioms(GroupTable::from_rows(rows));
  CHECK_FALSE(r.ok);
}

TEST_CASE("ragged tables are parse errors") {
  CHECK_THROWS_AS(GroupTable::from_rows({{0, 1}, {1}}), ParseError);
  CHECK_THROWS_AS(GroupTable::from_rows({{0, 5}, {1, 0}}), ParseError);
}

TEST_CASE("homomorphisms from generator images") {
  auto c2 = fx::cyclic(2), c4 = fx::cyclic(4);
  auto m  = GroupMap::from_generator_images(c2, c4, {1}, {2});
  CHECK(m.is_monomorphism());
  CHECK(image(m).order() == 2);
  CHECK_THROWS_AS(GroupMap::from_generator_images(c2, c4, {1}, {1}), ParseError);
  auto onto = GroupMap::from_generator_images(c4, c2, {1}, {1});
  CHECK(onto.is_homomorphism());
  CHECK_FALSE(onto.is_monomorphism());
  CHECK(preimage_subgroup(onto, Subgroup(c2)).order() == 2);
}

TEST_CASE("subgroup operations") {
  auto g  = fx::s3();
  auto a  = subgroup_closure(g, {fx::named(g, "(1,2)")});
  auto b  = subgroup_closure(g, {fx::named(g, "(1,3)")});
  CHECK(a.order() == 2);
  CHECK(join(a, b).is_whole());
  CHECK(subgroup_intersection(a, b).is_trivial());
  auto c = conjugate_subgroup(a, fx::named(g, "(1,2,3)"));
  CHECK(c.order() == 2);
  CHECK_FALSE(c == a);
  // conj(x, h) = x h x^-1 on elements
  Element x = fx::named(g, "(1,2,3)"), h = fx::named(g, "(1,2)");
  CHECK(c.contains(g->conj(x, h)));
}

TEST_CASE("coset minima are canonical") {
  auto g = fx::s3();
  auto h = subgroup_closure(g, {fx::named(g, "(1,2)")});
  for (Element x = 0; x < g->order(); ++x) {
    for (Element y : h.elements()) {
      CHECK(left_coset_min(*g, x, h) == left_coset_min(*g, g->mul(x, y), h));
    }
  }
}
