#pragma once

// Built-in example structures: free Abelian monoids, classical and dual braid
// monoids, Artin-Tits monoids from Coxeter matrices, and the Klein bottle monoid.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gk/bounded.hpp"

namespace gk {

/// Coxeter matrix entry for m = infinity.
constexpr int kCoxeterInfinity = 0;
/// Coxeter groups larger than this are treated as presentation-only.
constexpr std::size_t kCoxeterGroupCap = 2000;

struct CatalogEntry {
  std::string key;
  std::string description;
  std::shared_ptr<const CategoryContext> context;
  /// Source germ; absent for presentation-only entries.
  std::optional<Germ> germ;
  std::shared_ptr<const GarsideTables> tables;
  std::optional<GarsideMap> map;
  /// Non-identity family elements as words.
  std::vector<Word> family;

  bool bounded() const { return map.has_value(); }
};

CatalogEntry free_abelian(int n);
CatalogEntry braid_classical(int n);
CatalogEntry braid_dual(int n);
/// Symmetric matrix, 1 on the diagonal, off-diagonal in {2,3,4,6} or kCoxeterInfinity.
CatalogEntry artin_tits(const std::vector<std::vector<int>>& coxeter_matrix,
                        const std::string& key = "artin");
/// A<n>, B<n>, D<n>, G2, I2_<m>, Atilde1.
CatalogEntry artin_tits(const std::string& type);
CatalogEntry klein_bottle();

/// Keys: free_abelian-N, braid-N, dual-N, artin-TYPE, klein.
CatalogEntry catalog(const std::string& key);
std::vector<std::string> catalog_examples();

std::vector<std::vector<int>> coxeter_matrix(const std::string& type);

}  // namespace gk
