#pragma once

// Bounded Garside families: the Garside map Delta, its complement and the
// associated functor phi, Delta-normal forms, and gcd/lcm of positive words.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gk/garside.hpp"

namespace gk {

struct Unbounded {
  std::string reason;
  std::size_t explored = 0;  ///< elements enumerated before giving up
};

class GarsideMap {
 public:
  /// Delta(x) is the element of the family that every family element with
  /// source x left-divides; the complement must be a bijection.
  static std::variant<GarsideMap, Unbounded> build(std::shared_ptr<const GarsideTables> tables);

  const GarsideTables& tables() const { return *tables_; }
  const std::shared_ptr<const GarsideTables>& tables_ptr() const { return tables_; }

  int delta(ObjectId x) const { return delta_[idx(x)]; }
  bool is_delta(int g) const { return g == delta(tables_->source(g)); }
  /// Elements with source x, i.e. the left-divisors of Delta(x).
  std::vector<int> divisors(ObjectId x) const;

  /// g . complement(g) = Delta(source g).
  int complement(int g) const;
  int phi(int g) const { return phi_[static_cast<std::size_t>(g)]; }
  int phi_inverse(int g) const { return phi_inv_[static_cast<std::size_t>(g)]; }
  ObjectId phi(ObjectId x) const { return tables_->target(delta(x)); }
  /// phi^power applied factorwise (power may be negative).
  NormalDecomposition phi(const NormalDecomposition& nd, int power) const;
  int phi_power(int g, int power) const;

 private:
  GarsideMap() = default;
  std::shared_ptr<const GarsideTables> tables_;
  std::vector<int> delta_;
  std::vector<int> complement_;
  std::vector<int> phi_;
  std::vector<int> phi_inv_;
};

/// Delta^inf . x1 ... xk with proper nontrivial normal factors.
struct DeltaNormal {
  int inf = 0;
  std::vector<int> factors;

  int sup() const { return inf + static_cast<int>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }
  friend bool operator==(const DeltaNormal&, const DeltaNormal&) = default;
  friend auto operator<=>(const DeltaNormal&, const DeltaNormal&) = default;
};

/// Family closure of the atoms (generators in non-Noetherian contexts) under
/// right-lcm and right-divisor; Unbounded once `budget` elements are exceeded.
std::variant<std::vector<Word>, Unbounded> closure_family(const CategoryContext& ctx,
                                                          std::size_t budget);

/// Presentation-level entry point: closes the atoms into a family and, when it
/// is finite and has a common multiple, builds the map.
std::variant<GarsideMap, Unbounded> build_garside_map(const CategoryContext& ctx,
                                                      std::size_t budget = 1000);

/// Germ of a finite family given by words: one identity per object, and r*s
/// defined when r.s equals a family element in `ctx`.
Germ germ_from_family(const CategoryContext& ctx, const std::vector<Word>& family,
                      std::vector<int>* generator_element);

// Delta-normal forms. One-object structures only.
DeltaNormal delta_normal(const GarsideMap& gm, const NormalDecomposition& positive);
DeltaNormal delta_normalize(const GarsideMap& gm, const Word& w);
DeltaNormal delta_normalize(const GarsideMap& gm, const SignedWord& w);
DeltaNormal multiply(const GarsideMap& gm, const DeltaNormal& a, const DeltaNormal& b);
DeltaNormal inverse(const GarsideMap& gm, const DeltaNormal& a);
DeltaNormal simple_element(const GarsideMap& gm, int s);
/// `D^1 . b`; `D^0` is omitted when factors are present.
std::string display(const GarsideMap& gm, const DeltaNormal& d);
SignedWord to_signed_word(const GarsideMap& gm, const DeltaNormal& d);

Word gcd(const GarsideMap& gm, const Word& u, const Word& v);
Word right_gcd(const GarsideMap& gm, const Word& u, const Word& v);
Word right_lcm(const GarsideMap& gm, const Word& u, const Word& v);
Word left_lcm(const GarsideMap& gm, const Word& u, const Word& v);

}  // namespace gk
