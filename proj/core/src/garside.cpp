#include "gk/garside.hpp"

#include <algorithm>
#include <functional>

#include "gk/reversing.hpp"

namespace gk {

// ---------------------------------------------------------------------------
// FamilyContext

FamilyContext::FamilyContext(const CategoryContext& ctx, std::vector<Word> family) : ctx_(&ctx) {
  for (auto& w : family) {
    if (w.empty()) continue;
    if (find(w)) continue;
    auto key = ctx.canonical_key(w);
    keys_.push_back(key ? *key : std::vector<GenId>{});
    elements_.push_back(std::move(w));
  }
  const std::size_t k = elements_.size();
  divides_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (elements_[i].source == elements_[j].source)
        divides_[i * k + j] = ctx.left_divides(elements_[i], elements_[j]) ? 1 : 0;
}

std::optional<std::size_t> FamilyContext::find(const Word& w) const {
  if (w.empty()) return std::nullopt;
  auto key = keys_.empty() ? std::nullopt : ctx_->canonical_key(w);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].source != w.source || elements_[i].target != w.target) continue;
    if (key && !keys_[i].empty()) {
      if (keys_[i] == *key) return i;
    } else if (ctx_->equal(elements_[i], w)) {
      return i;
    }
  }
  return std::nullopt;
}

bool FamilyContext::is_greedy(const Word& s1, const Word& s2) const {
  Word s = concat(s1, s2);
  for (const auto& e : elements_) {
    if (e.source != s.source) continue;
    if (ctx_->left_divides(e, s) && !ctx_->left_divides(e, s1)) return false;
  }
  return true;
}

std::size_t FamilyContext::head(const Word& g) const {
  auto key = ctx_->canonical_key(g);
  std::vector<GenId> cache_key = key ? *key : g.letters;
  {
    std::lock_guard lock(cache_mutex_);
    auto it = head_cache_.find(cache_key);
    if (it != head_cache_.end()) return it->second;
  }
  const std::size_t k = elements_.size();
  std::vector<std::size_t> cands;
  for (std::size_t i = 0; i < k; ++i)
    if (elements_[i].source == g.source && ctx_->left_divides(elements_[i], g)) cands.push_back(i);
  if (cands.empty()) throw HeadUndefined("no family element divides the input");
  for (auto m : cands) {
    bool greatest = std::all_of(cands.begin(), cands.end(),
                                [&](std::size_t c) { return divides_[c * k + m] != 0; });
    if (greatest) {
      std::lock_guard lock(cache_mutex_);
      head_cache_.emplace(cache_key, m);
      return m;
    }
  }
  throw HeadUndefined("family divisors of the input have no greatest element");
}

NormalDecomposition FamilyContext::normalize(const Word& w) const {
  if (!ctx_->complete()) throw Unsupported("normalization needs a complete complement");
  NormalDecomposition nd{{}, w.source, w.target};
  Word g = w;
  std::size_t guard = 0;
  while (!g.empty()) {
    if (++guard > 100000) throw Inconclusive("head extraction did not terminate");
    auto h = head(g);
    nd.factors.push_back(static_cast<int>(h));
    auto r = reverse(*ctx_->complement(), concat(inverse(elements_[h]), to_signed(g)),
                     ctx_->fuel_for(g.size() + elements_[h].size()));
    auto* ok = std::get_if<Reversed>(&r);
    if (!ok || !ok->neg.empty()) throw Inconclusive("right division by the head failed");
    g = ok->pos;
  }
  return nd;
}

bool FamilyContext::word_problem(const Word& u, const Word& v) const {
  if (u.source != v.source || u.target != v.target) return false;
  return normalize(u).factors == normalize(v).factors;
}

Word FamilyContext::to_word(const NormalDecomposition& nd) const {
  Word w{{}, nd.source, nd.source};
  for (int f : nd.factors) w = concat(w, elements_[static_cast<std::size_t>(f)]);
  return w;
}

FamilyVerdict is_garside_family(const CategoryContext& ctx, const std::vector<Word>& family) {
  if (!ctx.noetherian() || !ctx.complete())
    throw Unsupported("Garside-family recognition needs a Noetherian context with a complete complement");
  FamilyContext fc(ctx, family);
  const auto& el = fc.elements();
  for (const auto& a : ctx.atoms())
    if (!fc.find(a)) return {false, "does not generate: an atom is missing", a};
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (el[i].source != el[j].source) continue;
      auto l = right_lcm(ctx, el[i], el[j]);
      if (l && !fc.find(*l)) return {false, "not closed under right-lcm", *l};
    }
  for (const auto& e : el) {
    auto c = rewriting_closure(ctx.presentation(), e, e.size() + ctx.options().closure_extra_steps,
                               ctx.options().max_closure_nodes);
    if (!c.complete) throw Inconclusive("closure of a family element did not terminate");
    for (const auto& w : c.words)
      for (std::size_t pos = 1; pos < w.size(); ++pos) {
        Word suffix{{w.begin() + static_cast<long>(pos), w.end()},
                    ctx.presentation().generator(w[pos]).source, e.target};
        if (!fc.find(suffix)) return {false, "not closed under right-divisor", suffix};
      }
  }
  return {true, "", std::nullopt};
}

// ---------------------------------------------------------------------------
// GarsideTables

std::shared_ptr<const GarsideTables> GarsideTables::from_germ(Germ germ, Presentation pres,
                                                              std::vector<int> generator_element) {
  std::shared_ptr<GarsideTables> t(new GarsideTables());
  t->witness_ = is_garside_germ(germ);
  if (!t->witness_.garside) throw ValidationError("not a Garside germ: " + t->witness_.reason);
  if (generator_element.size() != pres.generator_count())
    throw ValidationError("one germ element per generator required");
  for (std::size_t g = 0; g < generator_element.size(); ++g) {
    int e = generator_element[g];
    if (e < 0 || static_cast<std::size_t>(e) >= germ.size() || germ.is_identity(e))
      throw ValidationError("generator mapped to an invalid germ element");
    const auto& info = pres.generators()[g];
    if (idx(info.source) != idx(germ.elements[static_cast<std::size_t>(e)].source) ||
        idx(info.target) != idx(germ.elements[static_cast<std::size_t>(e)].target))
      throw ValidationError("generator '" + info.name + "' and its germ element have different endpoints");
  }
  t->germ_ = std::move(germ);
  t->pres_ = std::move(pres);
  t->gen_element_ = std::move(generator_element);
  t->build();
  return t;
}

std::shared_ptr<const GarsideTables> GarsideTables::from_germ(Germ germ) {
  auto pres = germ_category(germ);
  std::vector<int> gens;
  for (std::size_t i = 0; i < germ.size(); ++i)
    if (!germ.is_identity(static_cast<int>(i))) gens.push_back(static_cast<int>(i));
  return from_germ(std::move(germ), std::move(pres), std::move(gens));
}

void GarsideTables::build() {
  const int n = static_cast<int>(size());
  is_identity_.assign(size(), 0);
  for (int e : germ_.identities) is_identity_[static_cast<std::size_t>(e)] = 1;
  quot_.assign(size() * size(), -1);
  divisors_.assign(size(), {});
  multiples_.assign(size(), {});
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) {
      int t = germ_.product(s, r);
      if (t < 0) continue;
      quot_[at(s, t)] = r;
      divisors_[static_cast<std::size_t>(t)].push_back(s);
      multiples_[static_cast<std::size_t>(s)].push_back(t);
    }

  words_.assign(size(), Word{});
  std::vector<char> state(size(), 0);
  std::function<void(int)> visit = [&](int s) {
    auto us = static_cast<std::size_t>(s);
    if (state[us] == 2) return;
    if (state[us] == 1) throw ValidationError("cyclic decomposition of '" + germ_.elements[us].name + "'");
    state[us] = 1;
    if (is_identity(s)) {
      words_[us] = pres_.identity(source(s));
    } else {
      int exact = -1, first = -1;
      for (std::size_t g = 0; g < gen_element_.size(); ++g) {
        int e = gen_element_[g];
        if (e == s && exact < 0) exact = static_cast<int>(g);
        if (first < 0 && e != s && divides(e, s)) first = static_cast<int>(g);
      }
      if (exact >= 0) {
        words_[us] = pres_.letter(gen_id(static_cast<std::size_t>(exact)));
      } else if (first >= 0) {
        int e = gen_element_[static_cast<std::size_t>(first)];
        int rest = quotient(e, s);
        visit(rest);
        words_[us] = concat(pres_.letter(gen_id(static_cast<std::size_t>(first))),
                            words_[static_cast<std::size_t>(rest)]);
      } else {
        throw ValidationError("germ element '" + germ_.elements[us].name +
                              "' is not generated by the presentation");
      }
    }
    state[us] = 2;
  };
  for (int s = 0; s < n; ++s) visit(s);
}

std::pair<int, int> GarsideTables::renormalize(int s1, int s2) const {
  int h = witness_.head_at(s1, s2);
  if (h < 0) throw CompositionError("renormalize: factors do not compose");
  int t = witness_.tail_at(s1, s2);
  return {h, quotient(t, s2)};
}

int GarsideTables::meet(int s, int t) const {
  std::uint64_t key = static_cast<std::uint64_t>(s) * size() + static_cast<std::uint64_t>(t);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = meet_cache_.find(key); it != meet_cache_.end()) return it->second;
  }
  int best = -1;
  std::vector<int> common;
  for (int x : divisors(s))
    if (divides(x, t)) common.push_back(x);
  for (int x : common)
    if (best < 0 || divisors(x).size() > divisors(best).size()) best = x;
  for (int x : common)
    if (!divides(x, best)) best = -1;
  std::lock_guard lock(cache_mutex_);
  meet_cache_.emplace(key, best);
  return best;
}

int GarsideTables::join(int s, int t) const {
  std::uint64_t key = static_cast<std::uint64_t>(s) * size() + static_cast<std::uint64_t>(t);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = join_cache_.find(key); it != join_cache_.end()) return it->second;
  }
  int best = -1;
  std::vector<int> common;
  for (int x : multiples_[static_cast<std::size_t>(s)])
    if (divides(t, x)) common.push_back(x);
  for (int x : common)
    if (best < 0 || divisors(x).size() < divisors(best).size()) best = x;
  for (int x : common)
    if (best >= 0 && !divides(best, x)) best = -1;
  std::lock_guard lock(cache_mutex_);
  join_cache_.emplace(key, best);
  return best;
}

std::string GarsideTables::name(int s) const {
  const auto& w = word(s);
  if (w.empty()) return "1";
  bool single = pres_.single_char_names();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single) out += '_';
    out += pres_.generator(w.letters[i]).name;
  }
  return out;
}

NormalDecomposition GarsideTables::left_multiply(int s, const NormalDecomposition& nd) const {
  if (target(s) != nd.source) throw CompositionError("left_multiply: element does not compose");
  if (is_identity(s)) return nd;
  std::vector<int> f;
  f.reserve(nd.size() + 1);
  f.push_back(s);
  f.insert(f.end(), nd.factors.begin(), nd.factors.end());
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    auto [h, r] = renormalize(f[i], f[i + 1]);
    f[i] = h;
    f[i + 1] = r;
  }
  NormalDecomposition out{{}, source(s), nd.target};
  for (int x : f)
    if (!is_identity(x)) out.factors.push_back(x);
  return out;
}

NormalDecomposition GarsideTables::right_multiply(const NormalDecomposition& nd, int s) const {
  if (source(s) != nd.target) throw CompositionError("right_multiply: element does not compose");
  if (is_identity(s)) return nd;
  std::vector<int> f = nd.factors;
  f.push_back(s);
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    auto [h, r] = renormalize(f[i], f[i + 1]);
    if (h == f[i]) break;
    f[i] = h;
    f[i + 1] = r;
  }
  NormalDecomposition out{{}, nd.source, target(s)};
  for (int x : f)
    if (!is_identity(x)) out.factors.push_back(x);
  if (!is_normal(out)) return normalize_elements(out.factors, out.source);
  return out;
}

NormalDecomposition GarsideTables::normalize_elements(const std::vector<int>& elems,
                                                      ObjectId src) const {
  if (elems.empty()) return identity_nd(src);
  NormalDecomposition nd = identity_nd(target(elems.back()));
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) nd = left_multiply(*it, nd);
  if (nd.source != src) throw CompositionError("normalize: elements do not start at the given object");
  return nd;
}

NormalDecomposition GarsideTables::normalize(const Word& w) const {
  NormalDecomposition nd = identity_nd(w.target);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    nd = left_multiply(element_of(*it), nd);
  nd.source = w.source;
  return nd;
}

NormalDecomposition GarsideTables::multiply(const NormalDecomposition& a,
                                            const NormalDecomposition& b) const {
  if (a.target != b.source) throw CompositionError("multiply: elements do not compose");
  NormalDecomposition out = b;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) out = left_multiply(*it, out);
  out.source = a.source;
  return out;
}

int GarsideTables::head(const Word& g) const {
  auto nd = normalize(g);
  return nd.empty() ? identity(g.source) : nd.factors.front();
}

bool GarsideTables::word_problem(const Word& u, const Word& v) const {
  if (u.source != v.source || u.target != v.target) return false;
  return normalize(u) == normalize(v);
}

bool GarsideTables::is_normal(const NormalDecomposition& nd) const {
  for (int f : nd.factors)
    if (is_identity(f)) return false;
  for (std::size_t i = 0; i + 1 < nd.size(); ++i)
    if (!is_greedy(nd.factors[i], nd.factors[i + 1])) return false;
  return true;
}

Word GarsideTables::to_word(const NormalDecomposition& nd) const {
  Word w = pres_.identity(nd.source);
  for (int f : nd.factors) w = concat(w, word(f));
  return w;
}

std::string GarsideTables::display(const NormalDecomposition& nd) const {
  if (nd.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < nd.size(); ++i) {
    if (i > 0) out += '.';
    out += name(nd.factors[i]);
  }
  return out;
}

NormalDecomposition GarsideTables::left_divide(int s, const NormalDecomposition& nd) const {
  if (is_identity(s)) return nd;
  if (nd.empty()) throw NotADivisor("a nontrivial element does not divide the identity");
  int r = quotient(s, nd.factors.front());
  if (r < 0) throw NotADivisor("element does not left-divide the head");
  NormalDecomposition tail{{nd.factors.begin() + 1, nd.factors.end()}, target(nd.factors.front()),
                           nd.target};
  return left_multiply(r, tail);
}

bool GarsideTables::left_divides(const NormalDecomposition& u, const NormalDecomposition& v) const {
  if (u.source != v.source) return false;
  NormalDecomposition rest = v;
  for (int f : u.factors) {
    if (rest.empty() || quotient(f, rest.factors.front()) < 0) return false;
    rest = left_divide(f, rest);
  }
  return true;
}

NormalDecomposition GarsideTables::gcd(const NormalDecomposition& u,
                                       const NormalDecomposition& v) const {
  if (u.source != v.source) throw CompositionError("gcd: elements have different sources");
  NormalDecomposition acc = identity_nd(u.source);
  NormalDecomposition a = u, b = v;
  while (!a.empty() && !b.empty()) {
    int g = meet(a.factors.front(), b.factors.front());
    if (g < 0) throw Unsupported("family elements without a greatest common divisor");
    if (is_identity(g)) break;
    acc = right_multiply(acc, g);
    a = left_divide(g, a);
    b = left_divide(g, b);
  }
  return acc;
}

std::optional<std::pair<NormalDecomposition, NormalDecomposition>> GarsideTables::complements(
    const NormalDecomposition& u, const NormalDecomposition& v) const {
  if (u.source != v.source) throw CompositionError("complements: elements have different sources");
  struct L {
    int s;
    bool inv;
  };
  std::vector<L> cur;
  for (auto it = u.factors.rbegin(); it != u.factors.rend(); ++it) cur.push_back({*it, true});
  for (int f : v.factors) cur.push_back({f, false});
  std::size_t i = 0;
  while (i + 1 < cur.size()) {
    if (!(cur[i].inv && !cur[i + 1].inv)) {
      ++i;
      continue;
    }
    int s = cur[i].s, t = cur[i + 1].s;
    int j = join(s, t);
    if (j < 0) return std::nullopt;
    int st = quotient(s, j), ts = quotient(t, j);
    std::vector<L> repl;
    if (!is_identity(st)) repl.push_back({st, false});
    if (!is_identity(ts)) repl.push_back({ts, true});
    cur.erase(cur.begin() + static_cast<long>(i), cur.begin() + static_cast<long>(i + 2));
    cur.insert(cur.begin() + static_cast<long>(i), repl.begin(), repl.end());
    i = i > 0 ? i - 1 : 0;
  }
  std::vector<int> pos, neg;
  std::size_t k = 0;
  for (; k < cur.size() && !cur[k].inv; ++k) pos.push_back(cur[k].s);
  for (std::size_t j = cur.size(); j > k; --j) neg.push_back(cur[j - 1].s);
  return std::make_pair(normalize_elements(pos, u.target), normalize_elements(neg, v.target));
}

std::optional<NormalDecomposition> GarsideTables::right_lcm(const NormalDecomposition& u,
                                                            const NormalDecomposition& v) const {
  auto c = complements(u, v);
  if (!c) return std::nullopt;
  return multiply(u, c->first);
}

std::shared_ptr<const GarsideTables> GarsideTables::opposite() const {
  std::lock_guard lock(cache_mutex_);
  if (opposite_tried_) return opposite_;
  opposite_tried_ = true;
  Germ op = germ_;
  for (auto& e : op.elements) std::swap(e.source, e.target);
  op.reset_product();
  const int n = static_cast<int>(size());
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      if (int t = germ_.product(r, s); t >= 0) op.set_product(s, r, t);
  try {
    opposite_ = from_germ(std::move(op), pres_.mirrored(), gen_element_);
  } catch (const ValidationError&) {
    opposite_.reset();
  }
  return opposite_;
}

NormalDecomposition GarsideTables::to_opposite(const NormalDecomposition& nd) const {
  auto op = opposite();
  if (!op) throw Unsupported("the opposite family is not Garside");
  std::vector<int> rev(nd.factors.rbegin(), nd.factors.rend());
  return op->normalize_elements(rev, nd.target);
}

namespace {

NormalDecomposition from_opposite(const GarsideTables& self, const NormalDecomposition& nd) {
  std::vector<int> rev(nd.factors.rbegin(), nd.factors.rend());
  return self.normalize_elements(rev, nd.target);
}

}  // namespace

std::optional<NormalDecomposition> GarsideTables::left_lcm(const NormalDecomposition& u,
                                                           const NormalDecomposition& v) const {
  if (u.target != v.target) throw CompositionError("left_lcm: elements have different targets");
  auto op = opposite();
  if (!op) throw Unsupported("the opposite family is not Garside");
  auto l = op->right_lcm(to_opposite(u), to_opposite(v));
  if (!l) return std::nullopt;
  return from_opposite(*this, *l);
}

NormalDecomposition GarsideTables::right_gcd(const NormalDecomposition& u,
                                             const NormalDecomposition& v) const {
  if (u.target != v.target) throw CompositionError("right_gcd: elements have different targets");
  auto op = opposite();
  if (!op) throw Unsupported("the opposite family is not Garside");
  return from_opposite(*this, op->gcd(to_opposite(u), to_opposite(v)));
}

SymmetricNormal GarsideTables::symmetric_normalize(const NormalDecomposition& negative,
                                                   const NormalDecomposition& positive) const {
  auto g = gcd(negative, positive);
  SymmetricNormal out{negative, positive};
  for (int f : g.factors) {
    out.negative = left_divide(f, out.negative);
    out.positive = left_divide(f, out.positive);
  }
  return out;
}

SymmetricNormal GarsideTables::symmetric_normalize(const SignedWord& w) const {
  auto op = opposite();
  NormalDecomposition neg = identity_nd(w.source), pos = identity_nd(w.source);
  for (const auto& l : w.letters) {
    int s = element_of(l.gen);
    if (!l.inverse) {
      pos = right_multiply(pos, s);
      continue;
    }
    if (!op) throw Unsupported("symmetric normal forms need left-lcms");
    NormalDecomposition single{{s}, source(s), target(s)};
    auto c = op->complements(to_opposite(pos), to_opposite(single));
    if (!c) throw Unsupported("no common left-multiple: fraction undefined");
    auto n2 = from_opposite(*this, c->first);
    auto p2 = from_opposite(*this, c->second);
    neg = multiply(n2, neg);
    pos = p2;
  }
  return symmetric_normalize(neg, pos);
}

}  // namespace gk
