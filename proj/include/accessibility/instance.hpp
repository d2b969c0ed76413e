#ifndef ACCESSIBILITY_INSTANCE_HPP
#define ACCESSIBILITY_INSTANCE_HPP

// Instance files: a graph of groups, a base vertex, an optional generating
// tuple and the constants, as one JSON document. The schema is described in
// the README.

#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acylindricity.hpp"
#include "graph_of_groups.hpp"

namespace acc {

using json = nlohmann::json;

struct Instance {
  std::string                name;
  GraphOfGroupsPtr           graph;
  VertexId                   base = 0;
  std::vector<APath>         tuple;
  bool                       default_tuple = false;
  std::size_t                k = 1;
  std::size_t                C = 1;
  std::size_t                depth_cap = 8;
  std::size_t                path_check_length = 6;
  std::optional<std::size_t> step_budget;
  LengthMeasure              measure = LengthMeasure::edges;
};

// "(1,2)(3,4)" on {1..degree}, as a 0-based image list.
inline Permutation parse_cycles(std::string const& s, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::size_t i = 0;
  auto        skip = [&] {
    while (i < s.size() && s[i] == ' ') {
      ++i;
    }
  };
  skip();
  while (i < s.size()) {
    if (s[i] != '(') {
      throw ParseError("bad cycle notation: " + s);
    }
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip();
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      if (j == i) {
        throw ParseError("bad cycle notation: " + s);
      }
      std::size_t x = std::stoul(s.substr(i, j - i));
      if (x == 0 || x > degree) {
        throw ParseError("point " + std::to_string(x) + " outside degree in " + s);
      }
      cycle.push_back(static_cast<std::uint32_t>(x - 1));
      i = j;
      skip();
      if (i < s.size() && s[i] == ',') {
        ++i;
      }
    }
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0u);
    std::vector<bool> seen(degree);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (seen[cycle[k]]) {
        throw ParseError("repeated point in cycle " + s);
      }
      seen[cycle[k]] = true;
      c[cycle[k]]    = cycle[(k + 1) % cycle.size()];
    }
    Permutation r(degree);
    for (std::size_t k = 0; k < degree; ++k) {
      r[k] = c[p[k]];
    }
    p = std::move(r);
    skip();
  }
  return p;
}

namespace detail {

inline GroupPtr parse_group(std::string const& name, json const& j) {
  if (j.contains("cyclic")) {
    return make_group(GroupTable::cyclic(j.at("cyclic").get<std::size_t>(), name));
  }
  if (j.contains("permutations")) {
    auto const&              p      = j.at("permutations");
    auto                     degree = p.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (auto const& g : p.at("generators")) {
      if (g.is_string()) {
        gens.push_back(parse_cycles(g.get<std::string>(), degree));
        continue;
      }
      Permutation perm;
      for (auto x : g.get<std::vector<std::size_t>>()) {
        if (x == 0) {
          throw ParseError("permutation images are 1-based");
        }
        perm.push_back(static_cast<std::uint32_t>(x - 1));
      }
      gens.push_back(std::move(perm));
    }
    return make_group(GroupTable::from_permutations(degree, gens, name));
  }
  if (j.contains("table")) {
    auto rows  = j.at("table").get<std::vector<std::vector<Element>>>();
    auto names = j.value("names", std::vector<std::string>{});
    auto t     = GroupTable::from_rows(std::move(rows), std::move(names), name);
    if (auto rep = verify_group_axioms(t); !rep) {
      throw ParseError("group " + name + " fails axiom " + rep.condition + ": " + rep.detail);
    }
    if (j.contains("generators")) {
      t.set_generators(j.at("generators").get<std::vector<Element>>());
    }
    return make_group(std::move(t));
  }
  throw ParseError("group " + name + " needs one of cyclic, permutations, table");
}

inline Element parse_element(GroupTable const& g, json const& j) {
  if (j.is_number_unsigned()) {
    auto x = j.get<std::size_t>();
    if (x >= g.order()) {
      throw ParseError("element " + std::to_string(x) + " outside " + g.label());
    }
    return static_cast<Element>(x);
  }
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (auto e = g.find_name(s)) {
      return *e;
    }
    if (g.has_permutations()) {
      auto degree = g.permutation_degree();
      if (auto e = g.permutation_index(parse_cycles(s, degree))) {
        return *e;
      }
    }
    throw ParseError("no element " + s + " in " + g.label());
  }
  throw ParseError("element reference must be an index or a name");
}

inline std::size_t positive(json const& j, char const* key, std::size_t fallback) {
  if (!j.contains(key) || j.at(key).is_null()) {
    return fallback;
  }
  return j.at(key).get<std::size_t>();
}

}  // namespace detail

// An entry is [g_0, "e_1", g_1, ..., "e_s", g_s] starting at the base.
inline APath parse_tuple_entry(GraphOfGroups const& a, VertexId base, json const& j) {
  if (!j.is_array() || j.size() % 2 == 0) {
    throw ParseError("tuple entry must be an odd-length array");
  }
  APath    p{base, {}, {}};
  VertexId at = base;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i % 2 == 0) {
      p.elements.push_back(detail::parse_element(*a.vertex_group(at), j[i]));
      continue;
    }
    auto e = a.find_edge(j[i].get<std::string>());
    if (!e) {
      throw ParseError("unknown edge " + j[i].get<std::string>());
    }
    if (a.graph().alpha(*e) != at) {
      throw ParseError("tuple entry edge " + j[i].get<std::string>() + " does not start at "
                       + a.vertex_name(at));
    }
    p.edges.push_back(*e);
    at = a.graph().omega(*e);
  }
  return p;
}

inline Instance parse_instance(json const& j) {
  try {
    Instance in;
    in.name = j.value("name", std::string{});
    std::map<std::string, GroupPtr> groups;
    for (auto const& [name, g] : j.at("groups").items()) {
      groups[name] = detail::parse_group(name, g);
    }
    auto group = [&](json const& ref) {
      auto it = groups.find(ref.get<std::string>());
      if (it == groups.end()) {
        throw ParseError("unknown group " + ref.get<std::string>());
      }
      return it->second;
    };
    auto a = std::make_shared<GraphOfGroups>();
    for (auto const& v : j.at("vertices")) {
      auto name = v.at("name").get<std::string>();
      if (a->find_vertex(name)) {
        throw ParseError("duplicate vertex " + name);
      }
      a->add_vertex(group(v.at("group")), name);
    }
    auto vertex = [&](json const& ref) {
      auto v = a->find_vertex(ref.get<std::string>());
      if (!v) {
        throw ParseError("unknown vertex " + ref.get<std::string>());
      }
      return *v;
    };
    for (auto const& e : j.at("edges")) {
      auto     name = e.at("name").get<std::string>();
      VertexId from = vertex(e.at("from")), to = vertex(e.at("to"));
      auto     eg   = group(e.at("group"));
      auto     gens = eg->generators();
      auto images = [&](json const& list, VertexId v) {
        std::vector<Element> out;
        for (auto const& x : list) {
          out.push_back(detail::parse_element(*a->vertex_group(v), x));
        }
        if (out.size() != gens.size()) {
          throw ParseError("edge " + name + " lists " + std::to_string(out.size())
                           + " generator images, its group has " + std::to_string(gens.size())
                           + " generators");
        }
        return GroupMap::from_generator_images(eg, a->vertex_group(v), gens, out);
      };
      if (a->find_edge(name) || name.starts_with("-")) {
        throw ParseError("bad or duplicate edge name " + name);
      }
      a->add_edge(from, to, eg, images(e.at("alpha"), from), images(e.at("omega"), to), name);
    }
    if (a->num_vertices() == 0 || !a->graph().is_connected()) {
      throw ParseError("the graph must be non-empty and connected");
    }
    in.graph = a;
    in.base  = j.contains("base") ? vertex(j.at("base")) : 0;
    if (j.contains("tuple") && !j.at("tuple").is_null()) {
      for (auto const& entry : j.at("tuple")) {
        in.tuple.push_back(parse_tuple_entry(*a, in.base, entry));
      }
    } else {
      in.default_tuple = true;
      for (auto const& t : default_generating_tuple(*a, in.base)) {
        in.tuple.push_back(t.path);
      }
    }
    in.k                 = detail::positive(j, "k", 1);
    in.C                 = detail::positive(j, "C", 1);
    in.depth_cap         = detail::positive(j, "depth_cap", 8);
    in.path_check_length = detail::positive(j, "path_check_length", 6);
    if (j.contains("step_budget") && !j.at("step_budget").is_null()) {
      in.step_budget = j.at("step_budget").get<std::size_t>();
    }
    auto m = j.value("measure", std::string("edges"));
    if (m != "edges" && m != "pairs") {
      throw ParseError("measure must be edges or pairs");
    }
    in.measure = m == "edges" ? LengthMeasure::edges : LengthMeasure::pairs;
    if (in.C == 0) {
      throw ParseError("C must be positive");
    }
    return in;
  } catch (json::exception const& e) {
    throw ParseError(std::string("instance: ") + e.what());
  } catch (PreconditionError const& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

inline Instance load_instance(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (json::exception const& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_instance(j);
}

}  // namespace acc

#endif  // ACCESSIBILITY_INSTANCE_HPP
