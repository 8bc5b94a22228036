#include "gk/bounded.hpp"

#include <algorithm>
#include <map>

#include "gk/reversing.hpp"

namespace gk {

std::variant<GarsideMap, Unbounded> GarsideMap::build(std::shared_ptr<const GarsideTables> tables) {
  const auto& t = *tables;
  const int n = static_cast<int>(t.size());
  GarsideMap gm;
  gm.tables_ = tables;
  for (std::size_t o = 0; o < t.object_count(); ++o) {
    int best = -1;
    for (int s = 0; s < n; ++s) {
      if (idx(t.source(s)) != o) continue;
      if (best < 0 || t.divisors(s).size() > t.divisors(best).size()) best = s;
    }
    for (int s = 0; s < n && best >= 0; ++s)
      if (idx(t.source(s)) == o && !t.divides(s, best)) best = -1;
    if (best < 0)
      return Unbounded{"no family element is a common multiple of the family at object '" +
                           t.germ().objects[o] + "'",
                       t.size()};
    gm.delta_.push_back(best);
  }
  gm.complement_.resize(t.size());
  std::vector<char> hit(t.size(), 0);
  for (int s = 0; s < n; ++s) {
    int c = t.quotient(s, gm.delta(t.source(s)));
    if (hit[static_cast<std::size_t>(c)])
      return Unbounded{"complement is not injective: not a Garside map", t.size()};
    hit[static_cast<std::size_t>(c)] = 1;
    gm.complement_[static_cast<std::size_t>(s)] = c;
  }
  gm.phi_.resize(t.size());
  gm.phi_inv_.assign(t.size(), -1);
  for (int s = 0; s < n; ++s) {
    int c = gm.complement_[static_cast<std::size_t>(s)];
    int p = gm.complement_[static_cast<std::size_t>(c)];
    gm.phi_[static_cast<std::size_t>(s)] = p;
    if (gm.phi_inv_[static_cast<std::size_t>(p)] >= 0)
      return Unbounded{"phi is not a bijection: not a Garside map", t.size()};
    gm.phi_inv_[static_cast<std::size_t>(p)] = s;
  }
  return gm;
}

std::vector<int> GarsideMap::divisors(ObjectId x) const {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(tables_->size()); ++s)
    if (tables_->source(s) == x) out.push_back(s);
  return out;
}

int GarsideMap::complement(int g) const {
  if (g < 0 || static_cast<std::size_t>(g) >= complement_.size())
    throw NotADivisor("not a divisor of Delta");
  return complement_[static_cast<std::size_t>(g)];
}

int GarsideMap::phi_power(int g, int power) const {
  for (; power > 0; --power) g = phi(g);
  for (; power < 0; ++power) g = phi_inverse(g);
  return g;
}

NormalDecomposition GarsideMap::phi(const NormalDecomposition& nd, int power) const {
  if (power == 0) return nd;
  NormalDecomposition out;
  out.source = tables_->source(phi_power(tables_->identity(nd.source), power));
  out.target = tables_->source(phi_power(tables_->identity(nd.target), power));
  for (int f : nd.factors) out.factors.push_back(phi_power(f, power));
  return out;
}

Germ germ_from_family(const CategoryContext& ctx, const std::vector<Word>& family,
                      std::vector<int>* generator_element) {
  const auto& pres = ctx.presentation();
  Germ g;
  g.objects = pres.objects();
  for (std::size_t o = 0; o < pres.object_count(); ++o) {
    g.identities.push_back(static_cast<int>(g.elements.size()));
    g.elements.push_back({pres.object_count() == 1 ? std::string("1") : "1_" + pres.objects()[o],
                          object_id(o), object_id(o)});
  }
  FamilyContext fc(ctx, family);
  const auto& el = fc.elements();
  const bool single = pres.single_char_names();
  const int base = static_cast<int>(g.elements.size());
  for (const auto& w : el) {
    std::string name;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && !single) name += '_';
      name += pres.generator(w.letters[i]).name;
    }
    g.elements.push_back({name, w.source, w.target});
  }
  g.reset_product();
  const int n = static_cast<int>(g.size());
  for (int s = 0; s < n; ++s) {
    g.set_product(g.identities[idx(g.elements[static_cast<std::size_t>(s)].source)], s, s);
    g.set_product(s, g.identities[idx(g.elements[static_cast<std::size_t>(s)].target)], s);
  }
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (el[i].target != el[j].source) continue;
      if (auto k = fc.find(concat(el[i], el[j])))
        g.set_product(base + static_cast<int>(i), base + static_cast<int>(j), base + static_cast<int>(*k));
    }
  if (generator_element) {
    generator_element->clear();
    for (std::size_t gi = 0; gi < pres.generator_count(); ++gi) {
      auto k = fc.find(pres.letter(gen_id(gi)));
      if (!k)
        throw ValidationError("generator '" + pres.generators()[gi].name + "' is not in the family");
      generator_element->push_back(base + static_cast<int>(*k));
    }
  }
  return g;
}

std::variant<std::vector<Word>, Unbounded> closure_family(const CategoryContext& ctx,
                                                          std::size_t budget) {
  std::vector<Word> fam;
  std::vector<std::size_t> queue;
  auto add = [&](const Word& w) -> bool {
    if (w.empty()) return true;
    for (const auto& f : fam)
      if (f.source == w.source && f.target == w.target && ctx.equal(f, w)) return true;
    fam.push_back(w);
    queue.push_back(fam.size() - 1);
    return fam.size() <= budget;
  };
  std::vector<Word> seeds;
  if (ctx.noetherian()) {
    seeds = ctx.atoms();
  } else {
    for (std::size_t g = 0; g < ctx.presentation().generator_count(); ++g)
      seeds.push_back(ctx.presentation().letter(gen_id(g)));
  }
  auto overflow = [&] {
    return Unbounded{"family closure exceeded " + std::to_string(budget) + " elements", fam.size()};
  };
  for (const auto& s : seeds)
    if (!add(s)) return overflow();
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Word e = fam[queue[qi]];
    const std::size_t known = fam.size();
    for (std::size_t j = 0; j < known; ++j) {
      if (fam[j].source != e.source) continue;
      auto l = right_lcm(ctx, e, fam[j]);
      if (l && !add(*l)) return overflow();
    }
    auto c = rewriting_closure(ctx.presentation(), e, e.size() + ctx.options().closure_extra_steps,
                               ctx.options().max_closure_nodes);
    for (const auto& w : c.words)
      for (std::size_t pos = 1; pos < w.size(); ++pos) {
        Word suffix{{w.begin() + static_cast<long>(pos), w.end()},
                    ctx.presentation().generator(w[pos]).source, e.target};
        if (!add(suffix)) return overflow();
      }
  }
  return fam;
}

std::variant<GarsideMap, Unbounded> build_garside_map(const CategoryContext& ctx,
                                                      std::size_t budget) {
  auto fam = closure_family(ctx, budget);
  if (auto* u = std::get_if<Unbounded>(&fam)) return *u;
  auto& words = std::get<std::vector<Word>>(fam);
  std::vector<int> gens;
  try {
    auto germ = germ_from_family(ctx, words, &gens);
    auto tables = GarsideTables::from_germ(std::move(germ), ctx.presentation(), gens);
    return GarsideMap::build(tables);
  } catch (const ValidationError& e) {
    return Unbounded{e.what(), words.size()};
  }
}

namespace {

void require_monoid(const GarsideMap& gm) {
  if (gm.tables().object_count() != 1)
    throw Unsupported("Delta-normal forms are implemented for one-object structures");
}

NormalDecomposition as_nd(const std::vector<int>& factors) {
  return NormalDecomposition{factors, object_id(0), object_id(0)};
}

DeltaNormal inverse_simple(const GarsideMap& gm, int s) {
  const auto& t = gm.tables();
  if (t.is_identity(s)) return {};
  if (gm.is_delta(s)) return {-1, {}};
  return {-1, {gm.phi_inverse(gm.complement(s))}};
}

}  // namespace

DeltaNormal delta_normal(const GarsideMap& gm, const NormalDecomposition& positive) {
  require_monoid(gm);
  DeltaNormal d;
  std::size_t k = 0;
  while (k < positive.size() && gm.is_delta(positive.factors[k])) ++k;
  d.inf = static_cast<int>(k);
  d.factors.assign(positive.factors.begin() + static_cast<long>(k), positive.factors.end());
  return d;
}

DeltaNormal delta_normalize(const GarsideMap& gm, const Word& w) {
  return delta_normal(gm, gm.tables().normalize(w));
}

DeltaNormal simple_element(const GarsideMap& gm, int s) {
  if (gm.tables().is_identity(s)) return {};
  if (gm.is_delta(s)) return {1, {}};
  return {0, {s}};
}

DeltaNormal multiply(const GarsideMap& gm, const DeltaNormal& a, const DeltaNormal& b) {
  require_monoid(gm);
  auto p = gm.phi(as_nd(a.factors), b.inf);
  auto prod = gm.tables().multiply(p, as_nd(b.factors));
  auto d = delta_normal(gm, prod);
  d.inf += a.inf + b.inf;
  return d;
}

DeltaNormal inverse(const GarsideMap& gm, const DeltaNormal& a) {
  DeltaNormal r;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it)
    r = multiply(gm, r, inverse_simple(gm, *it));
  return multiply(gm, r, DeltaNormal{-a.inf, {}});
}

DeltaNormal delta_normalize(const GarsideMap& gm, const SignedWord& w) {
  require_monoid(gm);
  DeltaNormal r;
  for (const auto& l : w.letters) {
    int s = gm.tables().element_of(l.gen);
    r = multiply(gm, r, l.inverse ? inverse_simple(gm, s) : simple_element(gm, s));
  }
  return r;
}

std::string display(const GarsideMap& gm, const DeltaNormal& d) {
  std::string out;
  if (d.inf != 0 || d.factors.empty()) out = "D^" + std::to_string(d.inf);
  for (int f : d.factors) {
    if (!out.empty()) out += " . ";
    out += gm.tables().name(f);
  }
  return out;
}

SignedWord to_signed_word(const GarsideMap& gm, const DeltaNormal& d) {
  const auto& t = gm.tables();
  SignedWord out{{}, object_id(0), object_id(0)};
  const Word& delta = t.word(gm.delta(object_id(0)));
  for (int i = 0; i < d.inf; ++i)
    for (auto g : delta.letters) out.letters.push_back({g, false});
  for (int i = 0; i < -d.inf; ++i)
    for (auto it = delta.letters.rbegin(); it != delta.letters.rend(); ++it)
      out.letters.push_back({*it, true});
  for (int f : d.factors)
    for (auto g : t.word(f).letters) out.letters.push_back({g, false});
  return out;
}

Word gcd(const GarsideMap& gm, const Word& u, const Word& v) {
  const auto& t = gm.tables();
  return t.to_word(t.gcd(t.normalize(u), t.normalize(v)));
}

Word right_gcd(const GarsideMap& gm, const Word& u, const Word& v) {
  const auto& t = gm.tables();
  return t.to_word(t.right_gcd(t.normalize(u), t.normalize(v)));
}

Word right_lcm(const GarsideMap& gm, const Word& u, const Word& v) {
  const auto& t = gm.tables();
  auto l = t.right_lcm(t.normalize(u), t.normalize(v));
  if (!l) throw Unsupported("no common right-multiple in a bounded context");
  return t.to_word(*l);
}

Word left_lcm(const GarsideMap& gm, const Word& u, const Word& v) {
  const auto& t = gm.tables();
  auto l = t.left_lcm(t.normalize(u), t.normalize(v));
  if (!l) throw Unsupported("no common left-multiple in a bounded context");
  return t.to_word(*l);
}

}  // namespace gk
