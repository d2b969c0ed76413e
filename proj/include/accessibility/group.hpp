#ifndef ACCESSIBILITY_GROUP_HPP
#define ACCESSIBILITY_GROUP_HPP

// Finite groups as closed multiplication tables, with subgroups stored as
// explicit element sets and homomorphisms stored as image tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace acc {

using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;
inline constexpr Element kNoElement = static_cast<Element>(-1);

using Permutation = std::vector<std::uint32_t>;

// Cycle notation with 1-based points, "()" for the identity.
inline std::string cycle_notation(Permutation const& p) {
  std::string        out;
  std::vector<bool>  seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) {
      continue;
    }
    out += "(";
    std::size_t j = i;
    bool        first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) {
        out += ",";
      }
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

class GroupTable {
 public:
  // Builds from raw rows. Only the shape is checked here; call
  // verify_group_axioms() for the algebra. If some element acts as a
  // two-sided identity it is moved to index 0.
  static GroupTable from_rows(std::vector<std::vector<Element>> rows,
                              std::vector<std::string>           names = {},
                              std::string                        label = "") {
    std::size_t const n = rows.size();
    if (n == 0) {
      throw ParseError("group table is empty");
    }
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw ParseError("group table row length " + std::to_string(row.size())
                         + " does not match order " + std::to_string(n));
      }
      for (Element x : row) {
        if (x >= n) {
          throw ParseError("group table entry " + std::to_string(x)
                           + " out of range");
        }
      }
    }
    if (!names.empty() && names.size() != n) {
      throw ParseError("element_names has wrong length");
    }
    // Locate a two-sided identity and swap it to index 0.
    std::optional<Element> id;
    for (Element e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = rows[e][x] == x && rows[x][e] == x;
      }
      if (ok) {
        id = e;
      }
    }
    if (id && *id != 0) {
      std::vector<Element> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[0], perm[*id]);
      std::vector<std::vector<Element>> swapped(n, std::vector<Element>(n));
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          swapped[perm[a]][perm[b]] = perm[rows[a][b]];
        }
      }
      rows = std::move(swapped);
      if (!names.empty()) {
        std::swap(names[0], names[*id]);
      }
    }
    GroupTable t;
    t.order_ = n;
    t.label_ = std::move(label);
    t.product_.reserve(n * n);
    for (auto const& row : rows) {
      t.product_.insert(t.product_.end(), row.begin(), row.end());
    }
    t.inverse_.assign(n, kNoElement);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (t.product_[x * n + y] == kIdentity) {
          t.inverse_[x] = y;
          break;
        }
      }
    }
    if (names.empty()) {
      names.resize(n);
      for (Element x = 0; x < n; ++x) {
        names[x] = std::to_string(x);
      }
    }
    t.names_ = std::move(names);
    return t;
  }

  // Z/n with element k standing for the k-th power of the generator.
  static GroupTable cyclic(std::size_t n, std::string label = "") {
    if (n == 0) {
      throw ParseError("cyclic group of order 0");
    }
    std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        rows[a][b] = static_cast<Element>((a + b) % n);
      }
    }
    GroupTable t = from_rows(std::move(rows), {}, label.empty() ? "C" + std::to_string(n) : label);
    if (n > 1) {
      t.generators_ = {1};
    }
    return t;
  }

  // Closure of permutation generators on {0..degree-1}. Products compose
  // left to right: (p*q)(i) = q(p(i)).
  static GroupTable from_permutations(std::size_t                     degree,
                                      std::vector<Permutation> const& gens,
                                      std::string                     label = "") {
    for (auto const& g : gens) {
      if (g.size() != degree) {
        throw ParseError("permutation generator has wrong degree");
      }
      std::vector<bool> hit(degree, false);
      for (auto x : g) {
        if (x >= degree || hit[x]) {
          throw ParseError("generator is not a permutation");
        }
        hit[x] = true;
      }
    }
    auto compose = [degree](Permutation const& p, Permutation const& q) {
      Permutation r(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        r[i] = q[p[i]];
      }
      return r;
    };
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Permutation>         elems{id};
    std::map<Permutation, Element>   index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : gens) {
        Permutation next = compose(elems[i], g);
        if (index.emplace(next, static_cast<Element>(elems.size())).second) {
          elems.push_back(std::move(next));
        }
      }
    }
    std::size_t const                 n = elems.size();
    std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
    std::vector<std::string>          names(n);
    for (Element a = 0; a < n; ++a) {
      names[a] = cycle_notation(elems[a]);
      for (Element b = 0; b < n; ++b) {
        rows[a][b] = index.at(compose(elems[a], elems[b]));
      }
    }
    GroupTable t = from_rows(std::move(rows), std::move(names), std::move(label));
    t.permutations_ = std::move(elems);
    for (auto const& g : gens) {
      Element e = t.permutation_index(g).value();
      if (e != kIdentity) {
        t.generators_.push_back(e);
      }
    }
    return t;
  }

  std::size_t order() const noexcept { return order_; }
  std::string const& label() const noexcept { return label_; }

  Element mul(Element a, Element b) const { return product_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  // a b a^-1
  Element conj(Element a, Element b) const { return mul(mul(a, b), inv(a)); }

  std::string const& name(Element e) const { return names_.at(e); }
  std::vector<std::string> const& names() const noexcept { return names_; }

  std::optional<Element> find_name(std::string const& s) const {
    for (Element e = 0; e < order_; ++e) {
      if (names_[e] == s) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool has_permutations() const noexcept { return !permutations_.empty(); }
  std::size_t permutation_degree() const noexcept {
    return permutations_.empty() ? 0 : permutations_[0].size();
  }
  std::optional<Element> permutation_index(Permutation const& p) const {
    for (Element e = 0; e < permutations_.size(); ++e) {
      if (permutations_[e] == p) {
        return e;
      }
    }
    return std::nullopt;
  }

  // Generators recorded at construction, or a greedy generating set.
  std::vector<Element> generators() const {
    return generators_.empty() ? greedy_generators() : generators_;
  }
  void set_generators(std::vector<Element> gens) { generators_ = std::move(gens); }

  // Scan elements in index order, keeping each one not already generated.
  std::vector<Element> greedy_generators() const;

  std::size_t element_order(Element e) const {
    std::size_t k = 1;
    for (Element x = e; x != kIdentity; x = mul(x, e)) {
      ++k;
    }
    return k;
  }

 private:
  std::size_t              order_ = 0;
  std::string              label_;
  std::vector<Element>     product_;
  std::vector<Element>     inverse_;
  std::vector<std::string> names_;
  std::vector<Element>     generators_;
  std::vector<Permutation> permutations_;
};

using GroupPtr = std::shared_ptr<GroupTable const>;

inline GroupPtr make_group(GroupTable t) {
  return std::make_shared<GroupTable const>(std::move(t));
}

// Exhaustive check of the group axioms. Associativity is O(n^3).
inline ValidationReport verify_group_axioms(GroupTable const& t) {
  std::size_t const n = t.order();
  for (Element x = 0; x < n; ++x) {
    if (t.mul(kIdentity, x) != x || t.mul(x, kIdentity) != x) {
      return ValidationReport::failure(
          "identity", "element 0 is not a two-sided identity at " + std::to_string(x),
          x);
    }
  }
  for (Element x = 0; x < n; ++x) {
    Element y = t.inv(x);
    if (y == kNoElement || t.mul(y, x) != kIdentity) {
      return ValidationReport::failure("inverse",
                                       "no two-sided inverse for " + std::to_string(x), x);
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element ab = t.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (t.mul(ab, c) != t.mul(a, t.mul(b, c))) {
          return ValidationReport::failure(
              "associativity",
              "(" + std::to_string(a) + "," + std::to_string(b) + ","
                  + std::to_string(c) + ")",
              static_cast<long>(a));
        }
      }
    }
  }
  return ValidationReport::success();
}

class Subgroup {
 public:
  Subgroup() = default;

  // Trivial subgroup of `ambient`.
  explicit Subgroup(GroupPtr ambient) : ambient_(std::move(ambient)), elements_{kIdentity} {}

  static Subgroup whole(GroupPtr ambient) {
    Subgroup h;
    h.elements_.resize(ambient->order());
    std::iota(h.elements_.begin(), h.elements_.end(), Element{0});
    h.ambient_ = std::move(ambient);
    return h;
  }

  // Trusts that `sorted_elements` is closed; used internally by closure().
  static Subgroup from_closed_set(GroupPtr ambient, std::vector<Element> sorted_elements) {
    Subgroup h;
    h.ambient_  = std::move(ambient);
    h.elements_ = std::move(sorted_elements);
    return h;
  }

  GroupPtr const&             ambient() const noexcept { return ambient_; }
  std::vector<Element> const& elements() const noexcept { return elements_; }
  std::size_t                 order() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return ambient_ && elements_.size() == ambient_->order(); }

  bool contains(Element e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
  }
  bool is_subgroup_of(Subgroup const& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(),
                         elements_.begin(), elements_.end());
  }

  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.ambient_ == b.ambient_ && a.elements_ == b.elements_;
  }
  friend bool operator<(Subgroup const& a, Subgroup const& b) {
    return a.elements_ < b.elements_;
  }

 private:
  GroupPtr             ambient_;
  std::vector<Element> elements_;
};

// Smallest subgroup containing `seed` and `gens`.
inline Subgroup subgroup_closure(GroupPtr const& ambient, std::vector<Element> const& gens,
                                 Subgroup const* seed = nullptr) {
  std::size_t const n = ambient->order();
  for (Element g : gens) {
    if (g >= n) {
      throw PreconditionError("generator outside ambient group");
    }
  }
  std::vector<bool>    in(n, false);
  std::vector<Element> members;
  auto                 add = [&](Element x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  add(kIdentity);
  std::vector<Element> all_gens = gens;
  if (seed != nullptr) {
    for (Element x : seed->elements()) {
      add(x);
    }
    all_gens.insert(all_gens.end(), seed->elements().begin(), seed->elements().end());
  }
  for (Element g : gens) {
    add(g);
  }
  // In a finite group closure under products with generators suffices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : all_gens) {
      add(ambient->mul(members[i], g));
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup::from_closed_set(ambient, std::move(members));
}

inline Subgroup join(Subgroup const& a, Subgroup const& b) {
  if (a.ambient() != b.ambient()) {
    throw PreconditionError("join of subgroups with different ambient groups");
  }
  return subgroup_closure(a.ambient(), b.elements(), &a);
}

inline Subgroup join(Subgroup const& a, Element g) {
  return subgroup_closure(a.ambient(), {g}, &a);
}

inline Subgroup subgroup_intersection(Subgroup const& a, Subgroup const& b) {
  if (a.ambient() != b.ambient()) {
    throw PreconditionError("intersection of subgroups with different ambient groups");
  }
  std::vector<Element> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup::from_closed_set(a.ambient(), std::move(out));
}

// g H g^-1
inline Subgroup conjugate_subgroup(Subgroup const& h, Element g) {
  auto const& t = *h.ambient();
  if (g >= t.order()) {
    throw PreconditionError("conjugating element outside ambient group");
  }
  std::vector<Element> out;
  out.reserve(h.order());
  for (Element x : h.elements()) {
    out.push_back(t.conj(g, x));
  }
  std::sort(out.begin(), out.end());
  return Subgroup::from_closed_set(h.ambient(), std::move(out));
}

// Every subgroup of `g`, sorted by (order, elements). Joins cyclic subgroups
// until no new subgroup appears.
inline std::vector<Subgroup> all_subgroups(GroupPtr const& g) {
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup>          cyclic;
  for (Element x = 0; x < g->order(); ++x) {
    Subgroup c = subgroup_closure(g, {x});
    if (seen.insert(c.elements()).second) {
      cyclic.push_back(c);
    }
  }
  std::vector<Subgroup> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const& c : cyclic) {
      Subgroup j = join(all[i], c);
      if (seen.insert(j.elements()).second) {
        all.push_back(j);
      }
    }
  }
  std::sort(all.begin(), all.end(), [](Subgroup const& a, Subgroup const& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements() < b.elements();
  });
  return all;
}

inline std::vector<Element> GroupTable::greedy_generators() const {
  std::vector<Element> gens;
  std::vector<bool>    have(order_, false);
  have[kIdentity] = true;
  std::vector<Element> members{kIdentity};
  for (Element x = 1; x < order_; ++x) {
    if (have[x]) {
      continue;
    }
    gens.push_back(x);
    members.clear();
    std::fill(have.begin(), have.end(), false);
    have[kIdentity] = true;
    members.push_back(kIdentity);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element g : gens) {
        Element y = mul(members[i], g);
        if (!have[y]) {
          have[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

class GroupMap {
 public:
  GroupMap() = default;
  GroupMap(GroupPtr source, GroupPtr target, std::vector<Element> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->order()) {
      throw PreconditionError("group map image table has wrong size");
    }
    for (Element y : images_) {
      if (y >= target_->order()) {
        throw PreconditionError("group map image outside target");
      }
    }
  }

  static GroupMap identity(GroupPtr g) {
    std::vector<Element> im(g->order());
    std::iota(im.begin(), im.end(), Element{0});
    return GroupMap(g, g, std::move(im));
  }

  // Extends generator images to the whole source. Throws ParseError when the
  // assignment is not consistent, i.e. does not define a homomorphism.
  static GroupMap from_generator_images(GroupPtr source, GroupPtr target,
                                        std::vector<Element> const& gens,
                                        std::vector<Element> const& gen_images) {
    if (gens.size() != gen_images.size()) {
      throw ParseError("generator image list has wrong length");
    }
    std::size_t const    n = source->order();
    std::vector<Element> im(n, kNoElement);
    im[kIdentity] = kIdentity;
    std::vector<Element> queue{kIdentity};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Element x = queue[i];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gen_images[j] >= target->order()) {
          throw ParseError("generator image outside target group");
        }
        Element y  = source->mul(x, gens[j]);
        Element iy = target->mul(im[x], gen_images[j]);
        if (im[y] == kNoElement) {
          im[y] = iy;
          queue.push_back(y);
        } else if (im[y] != iy) {
          throw ParseError("generator images do not define a homomorphism");
        }
      }
    }
    if (queue.size() != n) {
      throw ParseError("listed generators do not generate the source group");
    }
    GroupMap m(std::move(source), std::move(target), std::move(im));
    if (!m.is_homomorphism()) {
      throw ParseError("generator images do not define a homomorphism");
    }
    return m;
  }

  GroupPtr const& source() const noexcept { return source_; }
  GroupPtr const& target() const noexcept { return target_; }
  std::vector<Element> const& images() const noexcept { return images_; }
  Element operator()(Element x) const { return images_[x]; }

  bool is_homomorphism() const {
    if (images_[kIdentity] != kIdentity) {
      return false;
    }
    for (Element x = 0; x < source_->order(); ++x) {
      for (Element y = 0; y < source_->order(); ++y) {
        if (images_[source_->mul(x, y)] != target_->mul(images_[x], images_[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_monomorphism() const {
    std::vector<Element> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  // Preimage of `y`, for injective maps; nullopt if y is not in the image.
  std::optional<Element> preimage(Element y) const {
    for (Element x = 0; x < images_.size(); ++x) {
      if (images_[x] == y) {
        return x;
      }
    }
    return std::nullopt;
  }

 private:
  GroupPtr             source_;
  GroupPtr             target_;
  std::vector<Element> images_;
};

inline Subgroup map_subgroup(GroupMap const& m, Subgroup const& h) {
  if (h.ambient() != m.source()) {
    throw PreconditionError("subgroup is not in the domain of the map");
  }
  std::vector<Element> out;
  for (Element x : h.elements()) {
    out.push_back(m(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Subgroup::from_closed_set(m.target(), std::move(out));
}

inline Subgroup image(GroupMap const& m) { return map_subgroup(m, Subgroup::whole(m.source())); }

// {x in source : m(x) in h}
inline Subgroup preimage_subgroup(GroupMap const& m, Subgroup const& h) {
  if (h.ambient() != m.target()) {
    throw PreconditionError("subgroup is not in the codomain of the map");
  }
  std::vector<Element> out;
  for (Element x = 0; x < m.source()->order(); ++x) {
    if (h.contains(m(x))) {
      out.push_back(x);
    }
  }
  return Subgroup::from_closed_set(m.source(), std::move(out));
}

// x -> second(first(x))
inline GroupMap compose(GroupMap const& first, GroupMap const& second) {
  if (first.target() != second.source()) {
    throw PreconditionError("composition of maps with mismatched domain");
  }
  std::vector<Element> im(first.source()->order());
  for (Element x = 0; x < im.size(); ++x) {
    im[x] = second(first(x));
  }
  return GroupMap(first.source(), second.target(), std::move(im));
}

// A subgroup materialized as its own table, with the inclusion map.
struct SubgroupTable {
  GroupPtr group;
  GroupMap inclusion;
};

inline SubgroupTable subgroup_table(Subgroup const& h) {
  auto const&          amb = *h.ambient();
  auto const&          el  = h.elements();
  std::size_t const    n   = el.size();
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  auto index_of = [&](Element x) {
    return static_cast<Element>(std::lower_bound(el.begin(), el.end(), x) - el.begin());
  };
  std::vector<std::string> names(n);
  for (Element a = 0; a < n; ++a) {
    names[a] = amb.name(el[a]);
    for (Element b = 0; b < n; ++b) {
      rows[a][b] = index_of(amb.mul(el[a], el[b]));
    }
  }
  GroupPtr g = make_group(GroupTable::from_rows(std::move(rows), std::move(names)));
  return {g, GroupMap(g, h.ambient(), el)};
}

// Smallest element of the left coset x H.
inline Element left_coset_min(GroupTable const& t, Element x, Subgroup const& h) {
  Element best = kNoElement;
  for (Element y : h.elements()) {
    best = std::min(best, t.mul(x, y));
  }
  return best;
}

// Representatives (coset minima) of the left cosets of h, in ascending order.
inline std::vector<Element> left_coset_representatives(Subgroup const& h) {
  auto const&    t = *h.ambient();
  std::set<Element> reps;
  for (Element x = 0; x < t.order(); ++x) {
    reps.insert(left_coset_min(t, x, h));
  }
  return {reps.begin(), reps.end()};
}

}  // namespace acc

#endif  // ACCESSIBILITY_GROUP_HPP
