#pragma once

// Finite germs: a family with a partial product, the category it presents,
// recognition of Garside germs, and germs derived from finite groups with a
// length function.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gk/category.hpp"

namespace gk {

struct GermElement {
  std::string name;
  ObjectId source{};
  ObjectId target{};
};

class Germ {
 public:
  std::vector<std::string> objects;
  std::vector<GermElement> elements;
  std::vector<int> identities;  ///< element index of the identity at each object
  /// Length function when the germ was derived from one.
  std::optional<std::vector<int>> length;

  std::size_t size() const { return elements.size(); }
  /// Resizes the product table to size()^2 undefined entries.
  void reset_product();
  int product(int r, int s) const { return table_[static_cast<std::size_t>(r) * size() + static_cast<std::size_t>(s)]; }
  void set_product(int r, int s, int t) { table_[static_cast<std::size_t>(r) * size() + static_cast<std::size_t>(s)] = t; }
  bool defined(int r, int s) const { return product(r, s) >= 0; }
  bool is_identity(int s) const;
  std::optional<int> find(std::string_view name) const;

 private:
  std::vector<int> table_;
};

struct GermValid {};
struct GermViolation {
  int r = -1, s = -1, t = -1;  ///< offending elements (unused slots are -1)
  std::string reason;
};
using GermCheck = std::variant<GermValid, GermViolation>;

/// Identity and associativity-where-defined axioms, checked over all triples:
/// if r.s and (r.s).t are defined then s.t and r.(s.t) are defined and equal,
/// and symmetrically from the right.
GermCheck validate_germ(const Germ& g);

/// Presentation with one generator per non-identity element and the relation
/// r.s = (r*s) for every defined product of non-identity elements.
Presentation germ_category(const Germ& g);

struct GermWitness {
  bool garside = false;
  std::string reason;  ///< why the germ is not Garside (empty when it is)
  std::size_t n = 0;
  /// For composable (s1, s2): greatest element s1*t of the family
  /// { s1*t : t left-divides s2 in the germ, s1*t defined }, or -1.
  std::vector<int> head;
  /// The t realizing `head`.
  std::vector<int> head_tail;

  int head_at(int s1, int s2) const { return head[static_cast<std::size_t>(s1) * n + static_cast<std::size_t>(s2)]; }
  int tail_at(int s1, int s2) const { return head_tail[static_cast<std::size_t>(s1) * n + static_cast<std::size_t>(s2)]; }
};

GermWitness is_garside_germ(const Germ& g);

/// Finite group given by its multiplication table.
struct FiniteGroup {
  std::size_t order = 0;
  int identity = 0;
  std::vector<int> table;  ///< order*order, table[a*order+b] = a.b

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + static_cast<std::size_t>(b)]; }
  int inv(int a) const;

  /// Permutations of {0..n-1} closed under composition; a.b applies a first, then b.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& perms);
};

/// Germ whose product f*g = fg is defined iff length(fg) = length(f) + length(g).
/// With a bound d, elements are restricted to { x : length(x) + length(x^-1 d) = length(d) }
/// and products must stay inside that interval. Names default to "1", "g1", "g2", ...
Germ germ_from_groupoid(const FiniteGroup& group, const std::vector<int>& length,
                        std::optional<int> bound = std::nullopt,
                        const std::vector<std::string>& names = {});

}  // namespace gk
