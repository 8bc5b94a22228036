#pragma once

// Text formats for presentations and germs, word syntax, and assembly of the
// Garside data a structure file asks for.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/bounded.hpp"
#include "gk/catalog.hpp"

namespace gk {

struct GarsideDirective {
  enum class Kind { None, Family, Delta, Auto };
  Kind kind = Kind::None;
  std::vector<Word> family;
  std::optional<Word> delta;
};

struct StructureFile {
  Presentation presentation;
  GarsideDirective garside;
};

/// Tokens separated by spaces; `1` is the empty word; `a^-1` is an inverse
/// letter. A token that is not a generator is split into characters when
/// every generator name is a single character.
Word parse_word(const Presentation& p, std::string_view text, ObjectId empty_at = object_id(0));
SignedWord parse_signed_word(const Presentation& p, std::string_view text,
                             ObjectId empty_at = object_id(0));
/// Space-separated tokens, `1` for an empty word.
std::string format_word(const Presentation& p, const Word& w);
std::string format_signed_word(const Presentation& p, const SignedWord& w);

StructureFile parse_structure(std::string_view text);
std::string emit_structure(const StructureFile& s);
Germ parse_germ(std::string_view text);
std::string emit_germ(const Germ& g);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);
/// True when the text has a germ `[elements]` section.
bool looks_like_germ(std::string_view text);

/// A context together with whatever Garside data could be built for it.
struct Realized {
  std::shared_ptr<const CategoryContext> context;
  std::shared_ptr<const GarsideTables> tables;
  std::optional<GarsideMap> map;
  /// The family in use, or the rejected candidate when tables are missing.
  std::vector<Word> family;
  std::optional<Germ> germ;
  /// Why tables or map are missing.
  std::string note;
};

Realized realize(const StructureFile& s, const ContextOptions& opts = {},
                 std::size_t family_budget = 1000);
Realized realize(const Germ& g, const ContextOptions& opts = {});
Realized realize(const CatalogEntry& e);

/// Structure file of a catalog entry; the family is emitted as `delta:` when bounded.
StructureFile to_structure_file(const CatalogEntry& e);

}  // namespace gk
