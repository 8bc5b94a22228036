#include "gk/germ.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gk {

void Germ::reset_product() { table_.assign(size() * size(), -1); }

bool Germ::is_identity(int s) const {
  return std::find(identities.begin(), identities.end(), s) != identities.end();
}

std::optional<int> Germ::find(std::string_view name) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

GermCheck validate_germ(const Germ& g) {
  const int n = static_cast<int>(g.size());
  if (g.identities.size() != g.objects.size())
    return GermViolation{-1, -1, -1, "one identity per object required"};
  for (std::size_t o = 0; o < g.objects.size(); ++o) {
    int e = g.identities[o];
    if (e < 0 || e >= n) return GermViolation{-1, -1, -1, "identity index out of range"};
    const auto& el = g.elements[e];
    if (idx(el.source) != o || idx(el.target) != o)
      return GermViolation{e, -1, -1, "identity has wrong endpoints"};
  }
  for (int s = 0; s < n; ++s) {
    const auto& el = g.elements[s];
    int left = g.identities[idx(el.source)];
    int right = g.identities[idx(el.target)];
    if (g.product(left, s) != s) return GermViolation{left, s, -1, "left identity law fails"};
    if (g.product(s, right) != s) return GermViolation{s, right, -1, "right identity law fails"};
  }
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      int rs = g.product(r, s);
      if (rs < 0) continue;
      const auto& er = g.elements[r];
      const auto& es = g.elements[s];
      const auto& ers = g.elements[rs];
      if (er.target != es.source || ers.source != er.source || ers.target != es.target)
        return GermViolation{r, s, -1, "product does not respect endpoints"};
    }
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      int rs = g.product(r, s);
      int sr = g.product(s, r);
      for (int t = 0; t < n; ++t) {
        // (r*s)*t defined forces s*t and r*(s*t)
        if (rs >= 0) {
          int rs_t = g.product(rs, t);
          int st = g.product(s, t);
          if (rs_t >= 0 && (st < 0 || g.product(r, st) != rs_t))
            return GermViolation{r, s, t, "(r*s)*t defined but r*(s*t) undefined or different"};
        }
        // t*(s*r) defined forces t*s and (t*s)*r
        if (sr >= 0) {
          int t_sr = g.product(t, sr);
          int ts = g.product(t, s);
          if (t_sr >= 0 && (ts < 0 || g.product(ts, r) != t_sr))
            return GermViolation{t, s, r, "r*(s*t) defined but (r*s)*t undefined or different"};
        }
      }
    }
  return GermValid{};
}

namespace {

// Longest decomposition length of each element inside the germ; nullopt on a cycle.
std::optional<std::vector<int>> germ_heights(const Germ& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> h(g.size(), -1);
  std::vector<char> state(g.size(), 0);
  bool cyclic = false;
  std::function<int(int)> visit = [&](int x) -> int {
    auto ux = static_cast<std::size_t>(x);
    if (state[ux] == 2) return h[ux];
    if (state[ux] == 1) {
      cyclic = true;
      return 0;
    }
    state[ux] = 1;
    int best = g.is_identity(x) ? 0 : 1;
    for (int r = 0; r < n && !cyclic; ++r) {
      if (g.is_identity(r) || r == x) continue;
      for (int s = 0; s < n; ++s) {
        if (g.is_identity(s) || s == x || g.product(r, s) != x) continue;
        best = std::max(best, visit(r) + visit(s));
      }
    }
    state[ux] = 2;
    h[ux] = best;
    return best;
  };
  for (int x = 0; x < n; ++x) visit(x);
  if (cyclic) return std::nullopt;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      int t = g.product(r, s);
      if (t >= 0 && h[t] != h[r] + h[s])
        return std::nullopt;
    }
  return h;
}

}  // namespace

Presentation germ_category(const Germ& g) {
  Presentation p;
  for (const auto& o : g.objects) p.add_object(o);
  std::vector<int> gen_of(g.size(), -1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.is_identity(static_cast<int>(i))) continue;
    const auto& e = g.elements[i];
    gen_of[i] = static_cast<int>(idx(p.add_generator(e.name, e.source, e.target)));
  }
  const int n = static_cast<int>(g.size());
  for (int r = 0; r < n; ++r) {
    if (gen_of[r] < 0) continue;
    for (int s = 0; s < n; ++s) {
      int t = g.product(r, s);
      if (t < 0 || gen_of[s] < 0) continue;
      Word lhs = concat(p.letter(gen_id(static_cast<std::size_t>(gen_of[r]))),
                        p.letter(gen_id(static_cast<std::size_t>(gen_of[s]))));
      Word rhs = gen_of[t] >= 0
                     ? p.letter(gen_id(static_cast<std::size_t>(gen_of[t])))
                     : p.identity(lhs.source);
      p.add_relation(std::move(lhs), std::move(rhs));
    }
  }
  std::optional<std::vector<int>> lambda = g.length;
  if (!lambda) lambda = germ_heights(g);
  if (lambda) {
    std::vector<int> w;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (gen_of[i] >= 0) w.push_back((*lambda)[i]);
    try {
      p.set_weights(std::move(w));
    } catch (const ValidationError&) {
      // not weight-preserving: leave the presentation unweighted
    }
  }
  return p;
}

GermWitness is_garside_germ(const Germ& g) {
  GermWitness w;
  const int n = static_cast<int>(g.size());
  w.n = g.size();
  w.head.assign(w.n * w.n, -1);
  w.head_tail.assign(w.n * w.n, -1);
  auto fail = [&](std::string why) {
    w.garside = false;
    w.reason = std::move(why);
    return w;
  };
  auto check = validate_germ(g);
  if (auto* v = std::get_if<GermViolation>(&check))
    return fail("not a germ: " + v->reason);

  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      int t = g.product(r, s);
      if (t < 0) continue;
      if (g.is_identity(t) && !g.is_identity(r))
        return fail("nontrivial invertible element '" + g.elements[r].name + "'");
      if (t == r && !g.is_identity(s))
        return fail("not Noetherian: " + g.elements[r].name + " absorbs " +
                    g.elements[s].name);
    }
  if (g.length) {
    for (int s = 0; s < n; ++s)
      if (!g.is_identity(s) && (*g.length)[s] <= 0)
        return fail("not Noetherian: non-positive length on '" + g.elements[s].name + "'");
  }
  std::vector<int> seen(g.size(), -1);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int s = 0; s < n; ++s) {
      int a = g.product(r, s);
      if (a < 0) continue;
      if (seen[a] >= 0)
        return fail("not left-cancellative: " + g.elements[r].name + "*" + g.elements[seen[a]].name +
                    " = " + g.elements[r].name + "*" + g.elements[s].name);
      seen[a] = s;
    }
  }

  // Left-divisors of every element inside the germ.
  std::vector<std::vector<int>> divisors(g.size());
  std::vector<char> divides(g.size() * g.size(), 0);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      int t = g.product(r, s);
      if (t < 0) continue;
      auto cell = static_cast<std::size_t>(r) * w.n + static_cast<std::size_t>(t);
      if (!divides[cell]) {
        divides[cell] = 1;
        divisors[t].push_back(r);
      }
    }

  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = 0; s2 < n; ++s2) {
      if (g.elements[s1].target != g.elements[s2].source) continue;
      // The family {s1*t : t <= s2}; its greatest element must have the most divisors.
      int best = -1, best_t = -1;
      std::size_t best_size = 0;
      for (int t : divisors[s2]) {
        int x = g.product(s1, t);
        if (x < 0) continue;
        if (best < 0 || divisors[x].size() > best_size) {
          best = x;
          best_t = t;
          best_size = divisors[x].size();
        }
      }
      for (int t : divisors[s2]) {
        int x = g.product(s1, t);
        if (x < 0) continue;
        if (!divides[static_cast<std::size_t>(x) * w.n + best])
          return fail("no greatest element for the pair (" + g.elements[s1].name + ", " +
                      g.elements[s2].name + "): " + g.elements[x].name +
                      " and " + g.elements[best].name + " are incomparable");
      }
      w.head[static_cast<std::size_t>(s1) * w.n + s2] = best;
      w.head_tail[static_cast<std::size_t>(s1) * w.n + s2] = best_t;
    }
  w.garside = true;
  return w;
}

int FiniteGroup::inv(int a) const {
  for (std::size_t b = 0; b < order; ++b)
    if (mul(a, static_cast<int>(b)) == identity) return static_cast<int>(b);
  throw ValidationError("element without inverse in group table");
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& perms) {
  FiniteGroup g;
  g.order = perms.size();
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  if (index.size() != perms.size()) throw ValidationError("duplicate permutation");
  g.table.assign(g.order * g.order, -1);
  g.identity = -1;
  for (std::size_t a = 0; a < g.order; ++a) {
    const auto& pa = perms[a];
    bool is_id = true;
    for (std::size_t i = 0; i < pa.size(); ++i) is_id = is_id && pa[i] == static_cast<int>(i);
    if (is_id) g.identity = static_cast<int>(a);
    for (std::size_t b = 0; b < g.order; ++b) {
      const auto& pb = perms[b];
      std::vector<int> c(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i) c[i] = pb[static_cast<std::size_t>(pa[i])];
      auto it = index.find(c);
      if (it == index.end()) throw ValidationError("permutation set is not closed under composition");
      g.table[a * g.order + b] = it->second;
    }
  }
  if (g.identity < 0) throw ValidationError("permutation set lacks the identity");
  return g;
}

Germ germ_from_groupoid(const FiniteGroup& group, const std::vector<int>& length,
                        std::optional<int> bound, const std::vector<std::string>& names) {
  const int n = static_cast<int>(group.order);
  if (length.size() != group.order) throw ValidationError("length function has the wrong size");
  if (length[static_cast<std::size_t>(group.identity)] != 0)
    throw ValidationError("length of the identity must be 0");
  for (int a = 0; a < n; ++a) {
    if (a != group.identity && length[a] <= 0)
      throw ValidationError("length must be positive off the identity");
    for (int b = 0; b < n; ++b)
      if (length[static_cast<std::size_t>(group.mul(a, b))] > length[a] + length[b])
        throw ValidationError("length function is not subadditive");
  }
  auto len = [&](int a) { return length[a]; };
  std::vector<char> keep(group.order, 1);
  if (bound) {
    int d = *bound;
    for (int x = 0; x < n; ++x) keep[x] = len(x) + len(group.mul(group.inv(x), d)) == len(d);
  }
  Germ g;
  g.objects = {"*"};
  std::vector<int> local(group.order, -1);
  std::vector<int> lam;
  for (int x = 0; x < n; ++x) {
    if (!keep[x]) continue;
    local[x] = static_cast<int>(g.elements.size());
    std::string name = !names.empty() ? names[x]
                       : x == group.identity ? std::string("1")
                                             : "g" + std::to_string(x);
    g.elements.push_back({std::move(name), object_id(0), object_id(0)});
    lam.push_back(len(x));
  }
  g.identities = {local[static_cast<std::size_t>(group.identity)]};
  g.length = lam;
  g.reset_product();
  for (int a = 0; a < n; ++a) {
    if (local[a] < 0) continue;
    for (int b = 0; b < n; ++b) {
      if (local[b] < 0) continue;
      int c = group.mul(a, b);
      if (local[c] < 0 || len(c) != len(a) + len(b)) continue;
      g.set_product(local[a], local[b], local[c]);
    }
  }
  return g;
}

}  // namespace gk
