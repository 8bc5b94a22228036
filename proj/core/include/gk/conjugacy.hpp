#pragma once

// Conjugacy in a bounded one-object Garside structure: cycling, decycling,
// cyclic sliding, sliding circuit sets and the conjugacy decision procedure.
// Conjugation is on the right: conj(x, c) = c^-1 x c.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gk/bounded.hpp"

namespace gk {

struct ConjugacyOrbitNode {
  DeltaNormal element;
  DeltaNormal conjugator;  ///< conj(root, conjugator) == element
  int inf = 0;
  int sup = 0;
};

struct SlidingCircuitSet {
  DeltaNormal root;
  std::vector<ConjugacyOrbitNode> nodes;  ///< sorted by Delta-normal display
  /// (from, to) node indices; `to` is the cyclic sliding of `from`.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::optional<std::size_t> find(const DeltaNormal& d) const;
};

DeltaNormal conj(const GarsideMap& gm, const DeltaNormal& x, const DeltaNormal& c);
SignedWord conj(const GarsideMap& gm, const SignedWord& g, const SignedWord& c);

/// phi^-inf applied to the first factor; identity when there are no factors.
int initial_factor(const GarsideMap& gm, const DeltaNormal& d);
DeltaNormal cycling(const GarsideMap& gm, const DeltaNormal& d);
DeltaNormal decycling(const GarsideMap& gm, const DeltaNormal& d);
/// gcd of the initial factor and the complement of the final factor.
int preferred_prefix(const GarsideMap& gm, const DeltaNormal& d);
DeltaNormal cyclic_sliding(const GarsideMap& gm, const DeltaNormal& d);
/// Some iterate of cyclic sliding returns to d.
bool on_sliding_circuit(const GarsideMap& gm, const DeltaNormal& d);
/// Slides until the first repeated element; returns it with the accumulated conjugator.
std::pair<DeltaNormal, DeltaNormal> slide_to_circuit(const GarsideMap& gm, const DeltaNormal& d);

constexpr std::size_t kDefaultNodeBudget = 100000;

/// Throws ExplosionGuard when more than `budget` nodes are reached.
SlidingCircuitSet sliding_circuit_set(const GarsideMap& gm, const DeltaNormal& g,
                                      std::size_t budget = kDefaultNodeBudget);

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<Word> witness;  ///< positive c with conj(g, c) == h
};

ConjugacyResult are_conjugate(const GarsideMap& gm, const DeltaNormal& g, const DeltaNormal& h,
                              std::size_t budget = kDefaultNodeBudget);
ConjugacyResult are_conjugate(const GarsideMap& gm, const SignedWord& g, const SignedWord& h,
                              std::size_t budget = kDefaultNodeBudget);

/// Smallest e > 0 with phi^e = id, so that Delta^e is central.
int phi_order(const GarsideMap& gm);
/// A positive word equal to d times a central power of Delta, and that power.
std::pair<Word, int> positive_representative(const GarsideMap& gm, const DeltaNormal& d);

}  // namespace gk
