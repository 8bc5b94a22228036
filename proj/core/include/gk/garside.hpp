#pragma once

// Garside families: greediness, heads, greedy normal decompositions and the
// word problem. Two independent engines share the NormalDecomposition type:
//
//  - FamilyContext works on words over a CategoryContext and finds heads by
//    exhaustive search over a finite family.
//  - GarsideTables works on a Garside germ: heads come from the germ witness
//    and normalization is a sweep of local renormalizations.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gk/category.hpp"
#include "gk/germ.hpp"

namespace gk {

/// Factors s1|...|sk as indices into a family; empty means an identity.
struct NormalDecomposition {
  std::vector<int> factors;
  ObjectId source{};
  ObjectId target{};

  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }
  friend bool operator==(const NormalDecomposition&, const NormalDecomposition&) = default;
  friend auto operator<=>(const NormalDecomposition&, const NormalDecomposition&) = default;
};

/// Left fraction t^-1 s with both halves normal and (t1, s1) left-disjoint.
struct SymmetricNormal {
  NormalDecomposition negative;
  NormalDecomposition positive;
  friend bool operator==(const SymmetricNormal&, const SymmetricNormal&) = default;
};

class FamilyContext {
 public:
  /// `family` lists family elements as words; identities and duplicates are dropped.
  FamilyContext(const CategoryContext& ctx, std::vector<Word> family);

  const CategoryContext& context() const { return *ctx_; }
  const std::vector<Word>& elements() const { return elements_; }
  /// Index of the family element equal to w, if any.
  std::optional<std::size_t> find(const Word& w) const;

  /// Every family element left-dividing s1 s2 already left-divides s1.
  bool is_greedy(const Word& s1, const Word& s2) const;
  /// Greatest family element left-dividing g (g nontrivial).
  std::size_t head(const Word& g) const;
  NormalDecomposition normalize(const Word& w) const;
  bool word_problem(const Word& u, const Word& v) const;
  Word to_word(const NormalDecomposition& nd) const;

 private:
  const CategoryContext* ctx_;
  std::vector<Word> elements_;
  std::vector<std::vector<GenId>> keys_;
  std::vector<char> divides_;  // family-internal left-divisibility
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<GenId>, std::size_t> head_cache_;
};

struct FamilyVerdict {
  bool yes = false;
  std::string failing_condition;  ///< empty when yes
  std::optional<Word> witness;    ///< offending element when no
};

/// Decidable case: Noetherian context with unique right-lcms. A family is
/// Garside iff it contains the atoms and is closed under right-lcm and
/// right-divisor.
FamilyVerdict is_garside_family(const CategoryContext& ctx, const std::vector<Word>& family);

/// Table-backed finite Garside family built from a Garside germ.
class GarsideTables {
 public:
  /// `generator_element[g]` is the germ element named by presentation generator g.
  /// Throws ValidationError when the germ is not a Garside germ.
  static std::shared_ptr<const GarsideTables> from_germ(Germ germ, Presentation pres,
                                                        std::vector<int> generator_element);
  /// Uses germ_category(germ) as the presentation.
  static std::shared_ptr<const GarsideTables> from_germ(Germ germ);

  const Germ& germ() const { return germ_; }
  const GermWitness& witness() const { return witness_; }
  const Presentation& presentation() const { return pres_; }

  std::size_t size() const { return germ_.size(); }
  std::size_t object_count() const { return germ_.objects.size(); }
  int identity(ObjectId o) const { return germ_.identities[idx(o)]; }
  bool is_identity(int s) const { return is_identity_[static_cast<std::size_t>(s)] != 0; }
  ObjectId source(int s) const { return germ_.elements[static_cast<std::size_t>(s)].source; }
  ObjectId target(int s) const { return germ_.elements[static_cast<std::size_t>(s)].target; }
  int product(int r, int s) const { return germ_.product(r, s); }
  bool divides(int s, int t) const { return quot_[at(s, t)] >= 0; }
  /// r with s*r = t, or -1 when s does not left-divide t.
  int quotient(int s, int t) const { return quot_[at(s, t)]; }
  const std::vector<int>& divisors(int s) const { return divisors_[static_cast<std::size_t>(s)]; }
  int element_of(GenId g) const { return gen_element_[idx(g)]; }

  /// Renormalizes s1|s2 into head|rest.
  std::pair<int, int> renormalize(int s1, int s2) const;
  bool is_greedy(int s1, int s2) const { return renormalize(s1, s2).first == s1; }

  /// Greatest common left-divisor of two family elements inside the family, or -1.
  int meet(int s, int t) const;
  /// Least common right-multiple inside the family, or -1.
  int join(int s, int t) const;

  const Word& word(int s) const { return words_[static_cast<std::size_t>(s)]; }
  std::string name(int s) const;

  NormalDecomposition identity_nd(ObjectId o) const { return {{}, o, o}; }
  NormalDecomposition normalize(const Word& w) const;
  NormalDecomposition normalize_elements(const std::vector<int>& elems, ObjectId source) const;
  NormalDecomposition left_multiply(int s, const NormalDecomposition& nd) const;
  NormalDecomposition right_multiply(const NormalDecomposition& nd, int s) const;
  NormalDecomposition multiply(const NormalDecomposition& a, const NormalDecomposition& b) const;
  int head(const Word& g) const;
  bool word_problem(const Word& u, const Word& v) const;
  bool is_normal(const NormalDecomposition& nd) const;
  Word to_word(const NormalDecomposition& nd) const;
  /// `aba.b`; `1` for the identity.
  std::string display(const NormalDecomposition& nd) const;

  /// s\nd for a family element s left-dividing nd.
  NormalDecomposition left_divide(int s, const NormalDecomposition& nd) const;
  bool left_divides(const NormalDecomposition& u, const NormalDecomposition& v) const;
  NormalDecomposition gcd(const NormalDecomposition& u, const NormalDecomposition& v) const;
  /// (u\v, v\u) by reversing over family elements; nullopt when some pair has no lcm.
  std::optional<std::pair<NormalDecomposition, NormalDecomposition>> complements(
      const NormalDecomposition& u, const NormalDecomposition& v) const;
  std::optional<NormalDecomposition> right_lcm(const NormalDecomposition& u,
                                               const NormalDecomposition& v) const;

  /// Opposite family (products reversed); nullptr when it is not a Garside germ.
  std::shared_ptr<const GarsideTables> opposite() const;
  /// Factor-reversed element re-normalized in the opposite family.
  NormalDecomposition to_opposite(const NormalDecomposition& nd) const;

  std::optional<NormalDecomposition> left_lcm(const NormalDecomposition& u,
                                              const NormalDecomposition& v) const;
  NormalDecomposition right_gcd(const NormalDecomposition& u, const NormalDecomposition& v) const;

  /// Left fraction with left-disjoint halves, built by left-lcms letter by letter.
  SymmetricNormal symmetric_normalize(const SignedWord& w) const;
  SymmetricNormal symmetric_normalize(const NormalDecomposition& negative,
                                      const NormalDecomposition& positive) const;

 private:
  GarsideTables() = default;
  std::size_t at(int s, int t) const {
    return static_cast<std::size_t>(s) * size() + static_cast<std::size_t>(t);
  }
  void build();

  Germ germ_;
  GermWitness witness_;
  Presentation pres_;
  std::vector<int> gen_element_;
  std::vector<char> is_identity_;
  std::vector<int> quot_;
  std::vector<std::vector<int>> divisors_;
  std::vector<std::vector<int>> multiples_;
  std::vector<Word> words_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, int> meet_cache_;
  mutable std::unordered_map<std::uint64_t, int> join_cache_;
  mutable std::shared_ptr<const GarsideTables> opposite_;
  mutable bool opposite_tried_ = false;
};

}  // namespace gk
