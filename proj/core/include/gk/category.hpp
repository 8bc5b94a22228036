#pragma once

// Foundational data model: objects, generators, positive and signed paths,
// presentations, and the CategoryContext that answers equality and
// divisibility queries for a presented category.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gk/errors.hpp"

namespace gk {

enum class ObjectId : std::uint32_t {};
enum class GenId : std::uint32_t {};

constexpr std::size_t idx(ObjectId o) { return static_cast<std::size_t>(o); }
constexpr std::size_t idx(GenId g) { return static_cast<std::size_t>(g); }
constexpr ObjectId object_id(std::size_t i) { return static_cast<ObjectId>(i); }
constexpr GenId gen_id(std::size_t i) { return static_cast<GenId>(i); }

/// A path in the free category: letters are generator ids.
struct Word {
  std::vector<GenId> letters;
  ObjectId source{};
  ObjectId target{};

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

struct SignedLetter {
  GenId gen{};
  bool inverse = false;
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
  friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

/// A path in the free groupoid; a negative letter is traversed backwards.
struct SignedWord {
  std::vector<SignedLetter> letters;
  ObjectId source{};
  ObjectId target{};

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

struct GeneratorInfo {
  std::string name;
  ObjectId source{};
  ObjectId target{};
};

struct Relation {
  Word lhs;
  Word rhs;
};

/// Generators with endpoints plus positive relations lhs = rhs.
class Presentation {
 public:
  Presentation() = default;

  /// Convenience for monoids: one object named "*", generators in order.
  static Presentation monoid(const std::vector<std::string>& generator_names);

  ObjectId add_object(std::string name);
  GenId add_generator(std::string name, ObjectId source, ObjectId target);
  GenId add_generator(std::string name);  // one-object case
  void add_relation(Word lhs, Word rhs);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<GeneratorInfo>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const GeneratorInfo& generator(GenId g) const { return generators_.at(idx(g)); }

  std::optional<GenId> find_generator(std::string_view name) const;
  std::optional<ObjectId> find_object(std::string_view name) const;
  bool single_char_names() const;

  Word identity(ObjectId o) const { return Word{{}, o, o}; }
  Word letter(GenId g) const;
  /// Builds a word from generator names, checking composability.
  Word word(const std::vector<std::string>& names) const;
  SignedWord signed_letter(GenId g, bool inverse) const;

  /// Every relation has equal-length sides.
  bool homogeneous() const;

  /// Optional positive weights (one per generator) preserved by every relation.
  const std::optional<std::vector<int>>& weights() const { return weights_; }
  void set_weights(std::vector<int> w);

  /// Mirror presentation: every relation word reversed, generators reversed in direction.
  Presentation mirrored() const;

 private:
  std::vector<std::string> objects_;
  std::vector<GeneratorInfo> generators_;
  std::vector<Relation> relations_;
  std::optional<std::vector<int>> weights_;
};

bool valid_token(std::string_view name);

/// Free-category composition; throws CompositionError on endpoint mismatch.
Word concat(const Word& u, const Word& v);
SignedWord concat(const SignedWord& u, const SignedWord& v);
SignedWord to_signed(const Word& w);
SignedWord inverse(const SignedWord& w);
SignedWord inverse(const Word& w);
Word reversed(const Word& w);

/// Set of words reachable from a word by applying relations in either direction.
struct Closure {
  std::set<std::vector<GenId>> words;
  bool complete = false;  ///< false when the step or node budget cut the search
};

Closure rewriting_closure(const Presentation& p, const Word& w, std::size_t max_steps,
                          std::size_t max_nodes = 200000);

struct ContextOptions {
  /// Extra relation applications allowed beyond the word length in closure search.
  std::size_t closure_extra_steps = 8;
  /// Reversing fuel: fuel_factor * L^2 cells for an input of length L.
  std::size_t fuel_factor = 16;
  /// Depth of the cube-condition check run at construction.
  int cube_depth = 1;
  std::size_t max_closure_nodes = 200000;
};

struct Complement;

/// Immutable presented category with equality and divisibility oracles.
///
/// Queries go through subword reversing when the presentation is complemented
/// and passes the cube condition, and through bounded rewriting closure
/// otherwise. A closure that hits its bound raises Inconclusive.
class CategoryContext {
 public:
  explicit CategoryContext(Presentation p, ContextOptions opts = {});
  ~CategoryContext();
  CategoryContext(const CategoryContext&);
  CategoryContext& operator=(const CategoryContext&);
  CategoryContext(CategoryContext&&) noexcept;
  CategoryContext& operator=(CategoryContext&&) noexcept;

  const Presentation& presentation() const { return pres_; }
  const ContextOptions& options() const { return opts_; }

  /// Complement extracted from the presentation, if it is complemented.
  const Complement* complement() const { return complement_.get(); }
  /// Complemented and the cube condition held at the configured depth.
  bool complete() const { return complete_; }
  /// Homogeneous or positively weighted relations.
  bool noetherian() const { return noetherian_; }

  std::size_t fuel_for(std::size_t length) const;

  bool equal(const Word& u, const Word& v) const;
  bool left_divides(const Word& u, const Word& v) const;
  /// Lexicographically least word of the closure class when it is finite.
  std::optional<std::vector<GenId>> canonical_key(const Word& w) const;

  std::vector<Word> atoms() const;
  int height(const Word& g) const;

 private:
  Closure closure(const Word& w) const;

  Presentation pres_;
  ContextOptions opts_;
  std::unique_ptr<Complement> complement_;
  bool complete_ = false;
  bool noetherian_ = false;
};

}  // namespace gk
