#pragma once

// Subword reversing for complemented presentations.

#include <optional>
#include <variant>
#include <vector>

#include "gk/category.hpp"

namespace gk {

/// Syntactic right-complement: entry (s,t) is the word s\t, so that
/// s.(s\t) = t.(t\s) is a relation of the presentation.
struct Complement {
  std::size_t n = 0;
  std::vector<ObjectId> source;
  std::vector<ObjectId> target;
  std::vector<std::optional<std::vector<GenId>>> table;  // n*n, row s, column t

  const std::optional<std::vector<GenId>>& at(GenId s, GenId t) const {
    return table[idx(s) * n + idx(t)];
  }
  std::optional<std::vector<GenId>>& at(GenId s, GenId t) { return table[idx(s) * n + idx(t)]; }
};

struct ReversingCell {
  GenId left;   // the negative letter s in s^-1 t
  GenId right;  // the positive letter t
  std::vector<GenId> top;     // s\t
  std::vector<GenId> bottom;  // t\s
};

struct ReversingGrid {
  SignedWord boundary;
  std::vector<ReversingCell> cells;
  std::size_t cell_count() const { return cells.size(); }
};

/// The input was reversed to pos . neg^-1 with no negative-positive factor left.
struct Reversed {
  Word pos;
  Word neg;
  ReversingGrid grid;
};

/// A complement entry needed by the grid is undefined.
struct Stuck {
  GenId left;
  GenId right;
};

/// The fuel budget ran out.
struct Diverged {
  std::size_t cells = 0;
};

using ReverseResult = std::variant<Reversed, Stuck, Diverged>;

std::variant<Complement, std::string> extract_complement(const Presentation& p);

ReverseResult reverse(const Complement& comp, const SignedWord& w, std::size_t fuel);

struct CubeComplete {};
struct CubeCounterExample {
  std::vector<GenId> a, b, c;  // the failing triple (single letters at depth 1)
};
using CubeVerdict = std::variant<CubeComplete, CubeCounterExample>;

CubeVerdict check_cube_condition(const Complement& comp, int depth);

/// Least common right-multiple via reversing; nullopt when no common multiple exists.
/// Throws Inconclusive when reversing exhausts its fuel.
std::optional<Word> right_lcm(const CategoryContext& ctx, const Word& u, const Word& v);

/// Least common left-multiple via right-reversing on the mirrored presentation.
std::optional<Word> left_lcm(const CategoryContext& ctx, const Word& u, const Word& v);

/// u == v iff reversing u^-1 v ends with two empty words.
bool word_equal_via_reversing(const CategoryContext& ctx, const Word& u, const Word& v);

/// Equality of two signed words in the groupoid of fractions: reverse w1^-1 w2 to
/// pos . neg^-1, then compare pos and neg. Requires a complete complement.
bool groupoid_equal(const CategoryContext& ctx, const SignedWord& w1, const SignedWord& w2);

}  // namespace gk
