// One PASS/FAIL line per acceptance criterion. Ground truth comes from the
// brute-force oracles in oracles.hpp; the golden CLI corpus is replayed for the
// last criterion. Usage: gk_acceptance GK_BINARY GOLDEN_DIR

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gk/catalog.hpp"
#include "gk/conjugacy.hpp"
#include "gk/io.hpp"
#include "gk/reversing.hpp"
#include "golden.hpp"
#include "helpers.hpp"

using namespace gk;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Memoized oracle left-divisibility on words of a homogeneous presentation.
class DivOracle {
 public:
  explicit DivOracle(std::vector<oracle::Rule> rules) : rules_(std::move(rules)) {}
  const std::set<oracle::Letters>& cls(const oracle::Letters& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    auto c = oracle::closure(rules_, w);
    for (const auto& x : c) cache_[x] = c;
    return cache_[w];
  }
  bool equal(const oracle::Letters& u, const oracle::Letters& v) { return cls(u).count(v) > 0; }
  bool divides(const oracle::Letters& u, const oracle::Letters& v) {
    if (u.size() > v.size()) return false;
    const auto& cu = cls(u);
    for (const auto& w : cls(v))
      if (cu.count(oracle::Letters(w.begin(), w.begin() + static_cast<long>(u.size())))) return true;
    return false;
  }

 private:
  std::vector<oracle::Rule> rules_;
  std::map<oracle::Letters, std::set<oracle::Letters>> cache_;
};

struct Corpus {
  CatalogEntry entry;
  std::vector<oracle::Rule> rules;
  int gens;
  int max_len;
};

std::vector<Corpus> nf_corpus() {
  return {{braid_classical(3), oracle::braid_rules(3), 2, 6},
          {braid_classical(4), oracle::braid_rules(4), 3, 5},
          {free_abelian(3), oracle::commutation_rules(3), 3, 5}};
}

Outcome criterion1() {
  Outcome o;
  for (auto& c : nf_corpus()) {
    const auto& t = *c.entry.tables;
    const auto& p = c.entry.context->presentation();
    DivOracle div(c.rules);
    std::map<oracle::Letters, NormalDecomposition> by_class;
    std::map<NormalDecomposition, oracle::Letters> by_nf;
    std::set<std::pair<int, int>> greedy_checked;
    for (const auto& u : oracle::all_words(c.gens, c.max_len)) {
      auto nf = t.normalize(testutil::to_word(p, u));
      auto key = *div.cls(u).begin();
      if (!div.equal(testutil::letters(t.to_word(nf)), u)) o.fail(c.entry.key + ": normal form changes the element");
      auto [it, fresh] = by_class.emplace(key, nf);
      if (!fresh && it->second != nf) o.fail(c.entry.key + ": equal words with different normal forms");
      auto [jt, fresh2] = by_nf.emplace(nf, key);
      if (!fresh2 && jt->second != key) o.fail(c.entry.key + ": distinct elements share a normal form");
      for (std::size_t k = 0; k + 1 < nf.size(); ++k) {
        int s1 = nf.factors[k], s2 = nf.factors[k + 1];
        if (!greedy_checked.insert({s1, s2}).second) continue;
        // Brute force: every simple dividing s1 s2 divides s1.
        auto w1 = testutil::letters(t.word(s1));
        auto w12 = w1;
        auto w2 = testutil::letters(t.word(s2));
        w12.insert(w12.end(), w2.begin(), w2.end());
        for (int s = 0; s < static_cast<int>(t.size()); ++s) {
          auto ws = testutil::letters(t.word(s));
          if (div.divides(ws, w12) && !div.divides(ws, w1)) o.fail(c.entry.key + ": non-greedy pair");
        }
      }
    }
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::vector<std::pair<Presentation, std::vector<oracle::Rule>>> cases{
      {testutil::braid_presentation(3), oracle::braid_rules(3)},
      {testutil::braid_presentation(4), oracle::braid_rules(4)},
      {testutil::free_abelian_presentation(3), oracle::commutation_rules(3)}};
  const int lens[] = {6, 5, 5};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [p, rules] = cases[i];
    auto comp = extract_complement(p);
    if (!std::holds_alternative<Complement>(comp) ||
        !std::holds_alternative<CubeComplete>(check_cube_condition(std::get<Complement>(comp), 1))) {
      o.fail("cube condition not complete at depth 1");
      continue;
    }
    CategoryContext ctx(p);
    DivOracle div(rules);
    auto words = oracle::all_words(static_cast<int>(p.generator_count()), lens[i]);
    for (const auto& u : words)
      for (const auto& v : words) {
        bool expected = u.size() == v.size() && div.equal(u, v);
        try {
          if (word_equal_via_reversing(ctx, testutil::to_word(p, u), testutil::to_word(p, v)) != expected)
            o.fail("reversing disagrees with the closure oracle");
        } catch (const Inconclusive&) {
          o.fail("Inconclusive at default fuel");
        }
      }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto e = braid_classical(3);
  const auto& gm = *e.map;
  const auto& ctx = *e.context;
  const auto& p = ctx.presentation();
  DivOracle div(oracle::braid_rules(3));
  auto L = [](const Word& w) { return testutil::letters(w); };
  if (format_word(p, right_lcm(gm, testutil::w(p, "a"), testutil::w(p, "b"))) != "a b a")
    o.fail("lcm(a, b) is not a b a");
  auto words = oracle::all_words(2, 5);
  for (const auto& lu : words) {
    Word u = testutil::to_word(p, lu);
    if (!ctx.equal(right_lcm(gm, u, u), u) || !ctx.equal(gcd(gm, u, u), u)) o.fail("idempotence");
    for (const auto& lv : words) {
      Word v = testutil::to_word(p, lv);
      Word l = right_lcm(gm, u, v), g = gcd(gm, u, v);
      if (!ctx.equal(l, right_lcm(gm, v, u)) || !ctx.equal(g, gcd(gm, v, u))) o.fail("commutativity");
      if (!div.divides(lu, L(l)) || !div.divides(lv, L(l))) o.fail("lcm is not a common multiple");
      if (!div.divides(L(g), lu) || !div.divides(L(g), lv)) o.fail("gcd is not a common divisor");
      if (!ctx.equal(right_lcm(gm, u, g), u) || !ctx.equal(gcd(gm, u, l), u)) o.fail("absorption");
      auto via_reversing = gk::right_lcm(ctx, u, v);
      if (!via_reversing || !ctx.equal(*via_reversing, l)) o.fail("table lcm differs from reversing lcm");
    }
  }
  // Minimality against brute force over a smaller range: every common multiple
  // of length <= 6 is a multiple of the lcm, every common divisor divides the gcd.
  auto small = oracle::all_words(2, 3);
  auto big = oracle::all_words(2, 6);
  for (const auto& lu : small)
    for (const auto& lv : small) {
      auto l = L(right_lcm(gm, testutil::to_word(p, lu), testutil::to_word(p, lv)));
      auto g = L(gcd(gm, testutil::to_word(p, lu), testutil::to_word(p, lv)));
      for (const auto& m : big) {
        if (div.divides(lu, m) && div.divides(lv, m) && !div.divides(l, m)) o.fail("lcm not least");
        if (m.size() <= 3 && div.divides(m, lu) && div.divides(m, lv) && !div.divides(m, g))
          o.fail("gcd not greatest");
      }
    }
  return o;
}

Outcome criterion4() {
  Outcome o;
  long long fact = 2;
  for (int n : {3, 4}) {
    fact *= n;
    auto e = braid_classical(n);
    const auto& gm = *e.map;
    const auto& t = gm.tables();
    // The braid relations are palindromic, so right-divisibility is left-divisibility of mirrors.
    DivOracle div(oracle::braid_rules(n));
    auto divs = gm.divisors(object_id(0));
    if (static_cast<long long>(divs.size()) != fact) o.fail("|Div(Delta)| != n!");
    auto delta = testutil::letters(t.word(gm.delta(object_id(0))));
    for (int g : divs) {
      auto lhs = delta, rhs = testutil::letters(t.word(g));
      auto pg = testutil::letters(t.word(gm.phi(g)));
      lhs.insert(lhs.end(), pg.begin(), pg.end());
      rhs.insert(rhs.end(), delta.begin(), delta.end());
      if (!div.equal(lhs, rhs)) o.fail("Delta phi(g) != g Delta");
      for (int h : divs) {
        bool gh = div.divides(testutil::letters(t.word(g)), testutil::letters(t.word(h)));
        // g left-divides h iff the complement of h right-divides that of g.
        auto rev = [&](int s) {
          auto l = testutil::letters(t.word(gm.complement(s)));
          return oracle::Letters(l.rbegin(), l.rend());
        };
        if (gh != div.divides(rev(h), rev(g))) o.fail("complement is not order-reversing");
      }
    }
  }
  if (braid_dual(3).tables->size() != 5 || braid_dual(4).tables->size() != 14) o.fail("dual simple counts");
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int n : {3, 4}) {
    auto germ_route = braid_classical(n);
    auto p = testutil::braid_presentation(n);
    CategoryContext ctx(p);
    auto built = build_garside_map(ctx);
    if (!std::holds_alternative<GarsideMap>(built)) {
      o.fail("presentation route found no Garside map");
      continue;
    }
    const auto& pres_tables = std::get<GarsideMap>(built).tables();
    const auto& germ_tables = *germ_route.tables;
    const auto& gp = germ_route.context->presentation();
    auto words = oracle::all_words(n - 1, 5);
    std::vector<NormalDecomposition> nf_germ, nf_pres;
    for (const auto& u : words) {
      nf_germ.push_back(germ_tables.normalize(testutil::to_word(gp, u)));
      nf_pres.push_back(pres_tables.normalize(testutil::to_word(p, u)));
    }
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j) {
        bool a = nf_germ[i] == nf_germ[j];
        bool b = nf_pres[i] == nf_pres[j];
        bool c = ctx.equal(testutil::to_word(p, words[i]), testutil::to_word(p, words[j]));
        if (a != b || b != c) o.fail("germ and presentation routes disagree");
      }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto e = braid_classical(3);
  const auto& gm = *e.map;
  const auto& p = e.context->presentation();
  oracle::ConjugatorSearch3 search(6);
  auto words = oracle::all_words(2, 4);
  int yes_pairs = 0;
  for (const auto& g : words) {
    auto orbit = search.orbit(oracle::positive(g));
    for (const auto& h : words) {
      bool expected = oracle::exponent_sum(oracle::positive(g)) == oracle::exponent_sum(oracle::positive(h)) &&
                      orbit.count(oracle::burau3(oracle::positive(h))) > 0;
      auto r = are_conjugate(gm, testutil::to_signed(p, oracle::positive(g)),
                             testutil::to_signed(p, oracle::positive(h)));
      yes_pairs += expected;
      if (r.conjugate != expected) o.fail("disagrees with the brute-force conjugator search");
      if (r.conjugate) {
        auto c = oracle::positive(testutil::letters(*r.witness));
        auto lhs = oracle::mat_mul(oracle::mat_mul(oracle::burau3(oracle::inverse(c)), oracle::burau3(oracle::positive(g))),
                                   oracle::burau3(c));
        if (lhs != oracle::burau3(oracle::positive(h))) o.fail("witness fails to verify");
      }
    }
  }

  if (yes_pairs == 0) o.fail("no conjugate pairs in the corpus");
  // Monotonicity, stabilization and sliding bounds on B3 and B4 orbits.
  std::vector<std::pair<CatalogEntry, std::vector<oracle::SignedLetters>>> orbits;
  orbits.push_back({braid_classical(3), oracle::reduced_signed_words(2, 5)});
  std::vector<oracle::SignedLetters> b4;
  for (const auto& w : oracle::all_words(3, 4)) b4.push_back(oracle::positive(w));
  for (const auto& w : oracle::reduced_signed_words(3, 3)) b4.push_back(w);
  orbits.push_back({braid_classical(4), b4});
  for (const auto& [entry, corpus] : orbits) {
    const auto& g = *entry.map;
    const auto& pp = entry.context->presentation();
    const int div = static_cast<int>(g.divisors(object_id(0)).size());
    for (const auto& sl : corpus) {
      auto x = delta_normalize(g, testutil::to_signed(pp, sl));
      const int bound = div * (x.sup() - x.inf + 1);
      auto c = x, d = x;
      for (int i = 0; i < bound; ++i) {
        auto c2 = cycling(g, c), d2 = decycling(g, d);
        if (c2.inf < c.inf) o.fail("inf decreased under cycling");
        if (d2.sup() > d.sup()) o.fail("sup increased under decycling");
        c = c2;
        d = d2;
      }
      auto c_more = c, d_more = d;
      for (int i = 0; i < bound; ++i) {
        c_more = cycling(g, c_more);
        d_more = decycling(g, d_more);
      }
      if (c_more.inf != c.inf || d_more.sup() != d.sup()) o.fail("no stabilization within the bound");
      std::set<DeltaNormal> seen;
      auto s = x;
      int steps = 0;
      while (seen.insert(s).second) {
        s = cyclic_sliding(g, s);
        ++steps;
      }
      if (steps > bound + 1) o.fail("sliding exceeded the step bound");
      if (!on_sliding_circuit(g, s)) o.fail("sliding did not reach a circuit");
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto n2 = testutil::free_abelian_presentation(2);
  CategoryContext c2(n2);
  auto fam = [&](const Presentation& p, std::vector<std::string> ws) {
    std::vector<Word> out;
    for (const auto& s : ws) out.push_back(testutil::w(p, s));
    return out;
  };
  if (!is_garside_family(c2, fam(n2, {"x", "y", "x y"})).yes) o.fail("{x, y, xy} rejected");
  auto no = is_garside_family(c2, fam(n2, {"x", "y"}));
  if (no.yes) o.fail("{x, y} accepted");
  if (no.failing_condition.find("lcm") == std::string::npos || !no.witness || !c2.equal(*no.witness, testutil::w(n2, "x y")))
    o.fail("{x, y}: lcm counterexample xy not reported");
  auto b3 = testutil::braid_presentation(3);
  CategoryContext c3(b3);
  if (!is_garside_family(c3, fam(b3, {"a", "b", "a b", "b a", "a b a"})).yes) o.fail("B3 simples rejected");
  return o;
}

Outcome criterion8(const std::string& gk_binary, const std::string& golden_dir) {
  Outcome o;
  auto results = golden::run_all(gk_binary, golden_dir);
  if (results.empty()) o.fail("no golden cases found");
  for (const auto& r : results)
    if (!r.ok) o.fail(r.name + ": " + r.detail);
  for (const char* key : {"free_abelian-2", "free_abelian-3", "braid-3", "braid-4", "dual-4", "artin-B2", "klein"}) {
    auto e = catalog(key);
    auto text = emit_structure(to_structure_file(e));
    if (emit_structure(parse_structure(text)) != text) o.fail(std::string(key) + ": structure round trip");
    if (e.germ) {
      auto gtext = emit_germ(*e.germ);
      if (emit_germ(parse_germ(gtext)) != gtext) o.fail(std::string(key) + ": germ round trip");
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gk_acceptance GK_BINARY GOLDEN_DIR\n";
    return 2;
  }
  struct Item {
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Item> items{
      {"normal forms are unique and greedy (B3 <= 6, B4 <= 5, N3 <= 5)", criterion1},
      {"reversing agrees with rewriting closure; cube condition complete", criterion2},
      {"lcm/gcd lattice laws on B3 words of length <= 5", criterion3},
      {"bounded structure of B3, B4 and dual counts", criterion4},
      {"germ and presentation routes agree on B3, B4", criterion5},
      {"conjugacy agrees with brute-force search; cycling and sliding bounds", criterion6},
      {"Garside family recognition", criterion7},
      {"CLI golden corpus and file round trips", [&] { return criterion8(argv[1], argv[2]); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = items[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::printf("%s criterion %zu: %s [%.2fs]%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, items[i].title, secs,
                o.ok ? "" : " -- ", o.detail.c_str());
  }
  return all ? 0 : 1;
}
