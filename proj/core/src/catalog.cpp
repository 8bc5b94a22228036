#include "gk/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace gk {

namespace {

struct GroupData {
  FiniteGroup group;
  std::vector<int> length;
  std::vector<int> atoms;  ///< group elements, in generator order
};

std::string join_names(const std::vector<std::string>& names, const std::vector<int>& letters,
                       bool single) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0 && !single) out += '_';
    out += names[static_cast<std::size_t>(letters[i])];
  }
  return out;
}

bool single_chars(const std::vector<std::string>& names) {
  return std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
}

// Lexicographically least reduced word over the atoms for every element of the
// interval below `bound` (all elements when there is no bound).
std::vector<std::optional<std::vector<int>>> canonical_words(const GroupData& d,
                                                             std::optional<int> bound) {
  const auto& G = d.group;
  auto len = [&](int x) { return d.length[static_cast<std::size_t>(x)]; };
  auto inside = [&](int x) {
    return !bound || len(x) + len(G.mul(G.inv(x), *bound)) == len(*bound);
  };
  std::vector<std::optional<std::vector<int>>> words(G.order);
  words[static_cast<std::size_t>(G.identity)] = std::vector<int>{};
  std::vector<int> level{G.identity};
  while (!level.empty()) {
    std::vector<int> next;
    for (int x : level)
      for (std::size_t i = 0; i < d.atoms.size(); ++i) {
        int a = d.atoms[i];
        int y = G.mul(x, a);
        if (words[static_cast<std::size_t>(y)] || len(y) != len(x) + len(a) || !inside(y)) continue;
        auto w = *words[static_cast<std::size_t>(x)];
        w.push_back(static_cast<int>(i));
        words[static_cast<std::size_t>(y)] = std::move(w);
        next.push_back(y);
      }
    level = std::move(next);
  }
  return words;
}

std::vector<std::string> element_names(const GroupData& d, const std::vector<std::string>& atom_names,
                                       const std::vector<std::optional<std::vector<int>>>& words) {
  const bool single = single_chars(atom_names);
  std::vector<std::string> names(d.group.order);
  for (std::size_t x = 0; x < d.group.order; ++x) {
    if (static_cast<int>(x) == d.group.identity)
      names[x] = "1";
    else if (words[x])
      names[x] = join_names(atom_names, *words[x], single);
    else
      names[x] = "g" + std::to_string(x);
  }
  return names;
}

Word to_word(const Presentation& p, const std::vector<int>& letters) {
  Word w = p.identity(object_id(0));
  for (int l : letters) w.letters.push_back(gen_id(static_cast<std::size_t>(l)));
  return w;
}

// Relations s.(s\t) = t.(t\s) for every pair of atoms with a common multiple in the germ.
void add_lcm_relations(Presentation& pres, const Germ& germ, const std::vector<int>& atom_el,
                       const std::map<int, std::vector<int>>& word_of) {
  const int n = static_cast<int>(germ.size());
  auto quotient = [&](int s, int x) {
    for (int q = 0; q < n; ++q)
      if (germ.product(s, q) == x) return q;
    return -1;
  };
  const auto& lam = *germ.length;
  for (std::size_t i = 0; i < atom_el.size(); ++i)
    for (std::size_t j = i + 1; j < atom_el.size(); ++j) {
      int best = -1;
      for (int x = 0; x < n; ++x) {
        if (quotient(atom_el[i], x) < 0 || quotient(atom_el[j], x) < 0) continue;
        if (best < 0 || lam[static_cast<std::size_t>(x)] < lam[static_cast<std::size_t>(best)]) best = x;
      }
      if (best < 0) continue;
      auto lhs = to_word(pres, {static_cast<int>(i)});
      auto rhs = to_word(pres, {static_cast<int>(j)});
      for (int l : word_of.at(quotient(atom_el[i], best))) lhs.letters.push_back(gen_id(static_cast<std::size_t>(l)));
      for (int l : word_of.at(quotient(atom_el[j], best))) rhs.letters.push_back(gen_id(static_cast<std::size_t>(l)));
      pres.add_relation(lhs, rhs);
    }
}

CatalogEntry assemble(std::string key, std::string description, const GroupData& d,
                      std::optional<int> bound, const std::vector<std::string>& atom_names,
                      std::optional<Presentation> pres) {
  auto words = canonical_words(d, bound);
  auto names = element_names(d, atom_names, words);
  Germ germ = germ_from_groupoid(d.group, d.length, bound, names);

  std::vector<int> atom_el;
  std::map<int, std::vector<int>> word_of;
  for (std::size_t x = 0; x < d.group.order; ++x) {
    if (!words[x]) continue;
    if (auto e = germ.find(names[x])) word_of[*e] = *words[x];
  }
  for (int a : d.atoms) atom_el.push_back(*germ.find(names[static_cast<std::size_t>(a)]));
  if (!pres) {
    pres = Presentation::monoid(atom_names);
    add_lcm_relations(*pres, germ, atom_el, word_of);
  }

  CatalogEntry e;
  e.key = std::move(key);
  e.description = std::move(description);
  e.context = std::make_shared<CategoryContext>(*pres);
  e.tables = GarsideTables::from_germ(germ, *pres, atom_el);
  for (const auto& r : pres->relations())
    if (!e.tables->word_problem(r.lhs, r.rhs))
      throw ValidationError("catalog entry '" + e.key + "': relation does not hold in the germ");
  auto gm = GarsideMap::build(e.tables);
  if (auto* u = std::get_if<Unbounded>(&gm))
    throw ValidationError("catalog entry '" + e.key + "': " + u->reason);
  e.map = std::get<GarsideMap>(std::move(gm));
  e.germ = std::move(germ);
  for (int s = 0; s < static_cast<int>(e.tables->size()); ++s)
    if (!e.tables->is_identity(s)) e.family.push_back(e.tables->word(s));
  return e;
}

void check_range(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw ValidationError(std::string(what) + ": n must lie in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got " + std::to_string(n));
}

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int transposition(const std::vector<std::vector<int>>& perms, int i, int j) {
  for (std::size_t k = 0; k < perms.size(); ++k) {
    const auto& p = perms[k];
    bool ok = p[static_cast<std::size_t>(i)] == j && p[static_cast<std::size_t>(j)] == i;
    for (std::size_t m = 0; ok && m < p.size(); ++m)
      if (static_cast<int>(m) != i && static_cast<int>(m) != j) ok = p[m] == static_cast<int>(m);
    if (ok) return static_cast<int>(k);
  }
  return -1;
}

Word alternating(const Presentation& p, GenId s, GenId t, int m) {
  Word w = p.identity(object_id(0));
  for (int k = 0; k < m; ++k) w.letters.push_back(k % 2 == 0 ? s : t);
  return w;
}

}  // namespace

CatalogEntry free_abelian(int n) {
  check_range("free_abelian", n, 1, 8);
  static const char* kNames[] = {"x", "y", "z", "t", "u", "v", "w", "s"};
  std::vector<std::string> names(kNames, kNames + n);
  GroupData d;
  const std::size_t order = std::size_t{1} << n;
  d.group.order = order;
  d.group.identity = 0;
  d.group.table.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) d.group.table[a * order + b] = static_cast<int>(a ^ b);
  for (std::size_t a = 0; a < order; ++a) d.length.push_back(__builtin_popcountll(a));
  for (int i = 0; i < n; ++i) d.atoms.push_back(1 << i);
  auto pres = Presentation::monoid(names);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pres.add_relation(alternating(pres, gen_id(i), gen_id(j), 2),
                        alternating(pres, gen_id(j), gen_id(i), 2));
  return assemble("free_abelian-" + std::to_string(n), "free Abelian monoid N^" + std::to_string(n),
                  d, static_cast<int>(order - 1), names, pres);
}

CatalogEntry braid_classical(int n) {
  check_range("braid_classical", n, 2, 6);
  auto perms = all_permutations(n);
  GroupData d;
  d.group = FiniteGroup::from_permutations(perms);
  for (const auto& p : perms) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    d.length.push_back(inv);
  }
  for (int i = 0; i + 1 < n; ++i) d.atoms.push_back(transposition(perms, i, i + 1));
  auto names = letters(n - 1);
  auto pres = Presentation::monoid(names);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j + 1 < n; ++j) {
      int m = j == i + 1 ? 3 : 2;
      pres.add_relation(alternating(pres, gen_id(i), gen_id(j), m),
                        alternating(pres, gen_id(j), gen_id(i), m));
    }
  return assemble("braid-" + std::to_string(n),
                  "classical braid monoid B" + std::to_string(n) + "+ from the length germ of S" +
                      std::to_string(n),
                  d, std::nullopt, names, pres);
}

CatalogEntry braid_dual(int n) {
  check_range("braid_dual", n, 2, 6);
  auto perms = all_permutations(n);
  GroupData d;
  d.group = FiniteGroup::from_permutations(perms);
  for (const auto& p : perms) {
    std::vector<char> seen(p.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = 1;
    }
    d.length.push_back(n - cycles);
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      d.atoms.push_back(transposition(perms, i, j));
      names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  int bound = static_cast<int>(std::find(perms.begin(), perms.end(), cycle) - perms.begin());
  return assemble("dual-" + std::to_string(n),
                  "dual braid monoid of B" + std::to_string(n) + " (noncrossing partitions)", d,
                  bound, names, std::nullopt);
}

std::vector<std::vector<int>> coxeter_matrix(const std::string& type) {
  auto path = [](int n, int m_first) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i + 1 < n; ++i) {
      int v = i == 0 ? m_first : 3;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = v;
      m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = v;
    }
    return m;
  };
  auto rank = [&](std::size_t pos) -> int {
    try {
      std::size_t used = 0;
      int r = std::stoi(type.substr(pos), &used);
      if (used + pos != type.size()) return -1;
      return r;
    } catch (const std::exception&) {
      return -1;
    }
  };
  if (type == "G2") return {{1, 6}, {6, 1}};
  if (type == "Atilde1") return {{1, kCoxeterInfinity}, {kCoxeterInfinity, 1}};
  if (type.rfind("I2_", 0) == 0) {
    int m = rank(3);
    if (m >= 2) return {{1, m}, {m, 1}};
  } else if (!type.empty()) {
    int r = rank(1);
    if (type[0] == 'A' && r >= 1 && r <= 26) return path(r, 3);
    if (type[0] == 'B' && r >= 2 && r <= 26) return path(r, 4);
    if (type[0] == 'D' && r >= 4 && r <= 26) {
      auto m = path(r - 1, 3);
      for (auto& row : m) row.push_back(2);
      m.push_back(std::vector<int>(static_cast<std::size_t>(r), 2));
      auto last = static_cast<std::size_t>(r - 1), branch = static_cast<std::size_t>(r - 3);
      m[last][last] = 1;
      m[last][branch] = m[branch][last] = 3;
      return m;
    }
  }
  throw ValidationError("unknown Coxeter type '" + type + "'");
}

CatalogEntry artin_tits(const std::vector<std::vector<int>>& m, const std::string& key) {
  const std::size_t r = m.size();
  if (r == 0 || r > 26) throw ValidationError("Coxeter matrix must have rank 1..26");
  std::vector<std::vector<int>> cartan(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    if (m[i].size() != r) throw ValidationError("Coxeter matrix must be square");
    if (m[i][i] != 1) throw ValidationError("Coxeter matrix must have 1 on the diagonal");
    cartan[i][i] = 2;
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) throw ValidationError("Coxeter matrix must be symmetric");
      int a = 0, b = 0;
      switch (m[i][j]) {
        case 2: break;
        case 3: a = b = -1; break;
        case 4: a = -1; b = -2; break;
        case 6: a = -1; b = -3; break;
        case kCoxeterInfinity: a = b = -2; break;
        default:
          throw ValidationError("Coxeter matrix entries must be 2, 3, 4, 6 or infinity (0), got " +
                                std::to_string(m[i][j]));
      }
      cartan[i][j] = i < j ? a : b;
    }
  }
  auto names = letters(static_cast<int>(r));
  auto pres = Presentation::monoid(names);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (m[i][j] != kCoxeterInfinity)
        pres.add_relation(alternating(pres, gen_id(i), gen_id(j), m[i][j]),
                          alternating(pres, gen_id(j), gen_id(i), m[i][j]));

  // Elements of W as matrices whose column j is w(alpha_j); s_i(alpha_j) = alpha_j - a_ij alpha_i.
  using Mat = std::vector<int>;
  Mat id(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) id[i * r + i] = 1;
  std::map<Mat, int> index{{id, 0}};
  std::vector<Mat> elems{id};
  std::vector<int> parent{-1}, via{-1}, depth{0};
  std::vector<std::vector<int>> right;
  bool finite = true;
  for (std::size_t x = 0; x < elems.size() && finite; ++x) {
    right.emplace_back(r, -1);
    for (std::size_t i = 0; i < r; ++i) {
      Mat y = elems[x];
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t row = 0; row < r; ++row)
          y[row * r + j] = elems[x][row * r + j] - cartan[i][j] * elems[x][row * r + i];
      auto [it, fresh] = index.emplace(y, static_cast<int>(elems.size()));
      if (fresh) {
        elems.push_back(y);
        parent.push_back(static_cast<int>(x));
        via.push_back(static_cast<int>(i));
        depth.push_back(depth[x] + 1);
        if (elems.size() > kCoxeterGroupCap) {
          finite = false;
          break;
        }
      }
      right[x][i] = it->second;
    }
  }
  if (!finite) {
    CatalogEntry e;
    e.key = key;
    e.description = "Artin-Tits monoid (presentation only: Coxeter group infinite or above " +
                    std::to_string(kCoxeterGroupCap) + " elements)";
    e.context = std::make_shared<CategoryContext>(pres);
    return e;
  }
  GroupData d;
  const std::size_t order = elems.size();
  d.group.order = order;
  d.group.identity = 0;
  d.group.table.assign(order * order, -1);
  for (std::size_t a = 0; a < order; ++a) {
    d.group.table[a * order] = static_cast<int>(a);
    for (std::size_t b = 1; b < order; ++b) {
      int p = d.group.table[a * order + static_cast<std::size_t>(parent[b])];
      d.group.table[a * order + b] = right[static_cast<std::size_t>(p)][static_cast<std::size_t>(via[b])];
    }
  }
  d.length = depth;
  for (std::size_t i = 0; i < r; ++i) d.atoms.push_back(right[0][i]);
  return assemble(key, "Artin-Tits monoid, Coxeter group of order " + std::to_string(order), d,
                  std::nullopt, names, pres);
}

CatalogEntry artin_tits(const std::string& type) {
  return artin_tits(coxeter_matrix(type), "artin-" + type);
}

CatalogEntry klein_bottle() {
  auto pres = Presentation::monoid({"a", "b"});
  pres.add_relation(pres.word({"a"}), pres.word({"b", "a", "b"}));
  CatalogEntry e;
  e.key = "klein";
  e.description = "Klein bottle monoid <a, b | a = bab> (not Noetherian, presentation only)";
  e.context = std::make_shared<CategoryContext>(pres);
  return e;
}

CatalogEntry catalog(const std::string& key) {
  auto dash = key.find('-');
  std::string head = key.substr(0, dash);
  std::string arg = dash == std::string::npos ? "" : key.substr(dash + 1);
  auto number = [&]() {
    try {
      std::size_t used = 0;
      int n = std::stoi(arg, &used);
      if (used == arg.size()) return n;
    } catch (const std::exception&) {
    }
    throw ValidationError("catalog key '" + key + "' needs a numeric parameter");
  };
  if (key == "klein") return klein_bottle();
  if (head == "free_abelian") return free_abelian(number());
  if (head == "braid") return braid_classical(number());
  if (head == "dual") return braid_dual(number());
  if (head == "artin" && !arg.empty()) return artin_tits(arg);
  throw ValidationError("unknown catalog key '" + key + "'");
}

std::vector<std::string> catalog_examples() {
  return {"free_abelian-N (1..8)", "braid-N (2..6)", "dual-N (2..6)",
          "artin-A<n> | B<n> | D<n> | G2 | I2_<m> | Atilde1", "klein"};
}

}  // namespace gk
