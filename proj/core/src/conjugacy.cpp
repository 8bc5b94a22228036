#include "gk/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gk {

std::optional<std::size_t> SlidingCircuitSet::find(const DeltaNormal& d) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].element == d) return i;
  return std::nullopt;
}

DeltaNormal conj(const GarsideMap& gm, const DeltaNormal& x, const DeltaNormal& c) {
  return multiply(gm, inverse(gm, c), multiply(gm, x, c));
}

SignedWord conj(const GarsideMap& gm, const SignedWord& g, const SignedWord& c) {
  return to_signed_word(gm, conj(gm, delta_normalize(gm, g), delta_normalize(gm, c)));
}

int initial_factor(const GarsideMap& gm, const DeltaNormal& d) {
  if (d.factors.empty()) return gm.tables().identity(object_id(0));
  return gm.phi_power(d.factors.front(), -d.inf);
}

DeltaNormal cycling(const GarsideMap& gm, const DeltaNormal& d) {
  if (d.factors.empty()) return d;
  return conj(gm, d, simple_element(gm, initial_factor(gm, d)));
}

DeltaNormal decycling(const GarsideMap& gm, const DeltaNormal& d) {
  if (d.factors.empty()) return d;
  return conj(gm, d, inverse(gm, simple_element(gm, d.factors.back())));
}

int preferred_prefix(const GarsideMap& gm, const DeltaNormal& d) {
  if (d.factors.empty()) return gm.tables().identity(object_id(0));
  return gm.tables().meet(initial_factor(gm, d), gm.complement(d.factors.back()));
}

DeltaNormal cyclic_sliding(const GarsideMap& gm, const DeltaNormal& d) {
  return conj(gm, d, simple_element(gm, preferred_prefix(gm, d)));
}

bool on_sliding_circuit(const GarsideMap& gm, const DeltaNormal& d) {
  std::set<DeltaNormal> seen;
  DeltaNormal y = cyclic_sliding(gm, d);
  while (y != d) {
    if (!seen.insert(y).second) return false;
    y = cyclic_sliding(gm, y);
  }
  return true;
}

std::pair<DeltaNormal, DeltaNormal> slide_to_circuit(const GarsideMap& gm, const DeltaNormal& d) {
  std::map<DeltaNormal, DeltaNormal> first_reached;
  DeltaNormal x = d;
  DeltaNormal c;
  while (first_reached.emplace(x, c).second) {
    auto p = simple_element(gm, preferred_prefix(gm, x));
    x = conj(gm, x, p);
    c = multiply(gm, c, p);
  }
  return {x, first_reached.at(x)};
}

SlidingCircuitSet sliding_circuit_set(const GarsideMap& gm, const DeltaNormal& g,
                                      std::size_t budget) {
  auto [root, c0] = slide_to_circuit(gm, g);
  std::vector<ConjugacyOrbitNode> nodes;
  std::map<DeltaNormal, std::size_t> index;
  auto add = [&](const DeltaNormal& e, const DeltaNormal& c) {
    index.emplace(e, nodes.size());
    nodes.push_back({e, c, e.inf, e.sup()});
    if (nodes.size() > budget)
      throw ExplosionGuard("sliding circuit set exceeds " + std::to_string(budget) + " nodes");
  };
  add(root, c0);
  std::map<DeltaNormal, bool> circuit_cache;
  const auto simples = gm.divisors(object_id(0));
  for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
    const DeltaNormal y = nodes[qi].element;
    const DeltaNormal cy = nodes[qi].conjugator;
    for (int s : simples) {
      if (gm.tables().is_identity(s)) continue;
      auto se = simple_element(gm, s);
      DeltaNormal z = conj(gm, y, se);
      if (z.inf != root.inf || z.sup() != root.sup() || index.count(z)) continue;
      auto it = circuit_cache.find(z);
      bool on = it != circuit_cache.end() ? it->second
                                          : (circuit_cache[z] = on_sliding_circuit(gm, z));
      if (on) add(z, multiply(gm, cy, se));
    }
  }

  std::vector<std::string> names;
  for (const auto& n : nodes) names.push_back(display(gm, n.element));
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return names[a] != names[b] ? names[a] < names[b] : nodes[a].element < nodes[b].element;
  });
  std::vector<std::size_t> rank(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  SlidingCircuitSet out;
  out.root = g;
  for (std::size_t i : order) out.nodes.push_back(nodes[i]);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto it = index.find(cyclic_sliding(gm, nodes[i].element));
    if (it != index.end()) out.edges.emplace_back(rank[i], rank[it->second]);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

int phi_order(const GarsideMap& gm) {
  int e = 1;
  for (int s = 0; s < static_cast<int>(gm.tables().size()); ++s) {
    int len = 1;
    for (int t = gm.phi(s); t != s; t = gm.phi(t)) ++len;
    e = std::lcm(e, len);
  }
  return e;
}

std::pair<Word, int> positive_representative(const GarsideMap& gm, const DeltaNormal& d) {
  int k = 0;
  if (d.inf < 0) {
    const int e = phi_order(gm);
    k = (-d.inf + e - 1) / e * e;
  }
  auto sw = to_signed_word(gm, multiply(gm, d, DeltaNormal{k, {}}));
  Word w{{}, sw.source, sw.target};
  for (const auto& l : sw.letters) w.letters.push_back(l.gen);
  return {w, k};
}

ConjugacyResult are_conjugate(const GarsideMap& gm, const DeltaNormal& g, const DeltaNormal& h,
                              std::size_t budget) {
  ConjugacyResult r;
  auto sc = sliding_circuit_set(gm, g, budget);
  auto [hc, ch] = slide_to_circuit(gm, h);
  auto i = sc.find(hc);
  if (!i) return r;
  DeltaNormal c = multiply(gm, sc.nodes[*i].conjugator, inverse(gm, ch));
  auto [w, k] = positive_representative(gm, c);
  if (conj(gm, g, delta_normalize(gm, w)) != h)
    throw Error("conjugating element failed verification");
  r.conjugate = true;
  r.witness = std::move(w);
  return r;
}

ConjugacyResult are_conjugate(const GarsideMap& gm, const SignedWord& g, const SignedWord& h,
                              std::size_t budget) {
  return are_conjugate(gm, delta_normalize(gm, g), delta_normalize(gm, h), budget);
}

}  // namespace gk
