#include "gk/reversing.hpp"

#include <algorithm>

namespace gk {

std::variant<Complement, std::string> extract_complement(const Presentation& p) {
  Complement c;
  c.n = p.generator_count();
  for (const auto& g : p.generators()) {
    c.source.push_back(g.source);
    c.target.push_back(g.target);
  }
  c.table.assign(c.n * c.n, std::nullopt);
  for (std::size_t i = 0; i < c.n; ++i) c.table[i * c.n + i] = std::vector<GenId>{};
  for (const auto& rel : p.relations()) {
    if (rel.lhs.empty() || rel.rhs.empty()) return std::string("relation with an empty side");
    GenId s = rel.lhs.letters.front();
    GenId t = rel.rhs.letters.front();
    const auto& ns = p.generator(s).name;
    const auto& nt = p.generator(t).name;
    if (s == t) return "relation with both sides starting with '" + ns + "'";
    if (c.at(s, t) || c.at(t, s))
      return "two relations share the head pair (" + ns + ", " + nt + ")";
    c.at(s, t) = std::vector<GenId>(rel.lhs.letters.begin() + 1, rel.lhs.letters.end());
    c.at(t, s) = std::vector<GenId>(rel.rhs.letters.begin() + 1, rel.rhs.letters.end());
  }
  return c;
}

ReverseResult reverse(const Complement& comp, const SignedWord& w, std::size_t fuel) {
  std::vector<SignedLetter> cur = w.letters;
  ReversingGrid grid{w, {}};
  std::size_t i = 0;
  while (i + 1 < cur.size()) {
    if (!(cur[i].inverse && !cur[i + 1].inverse)) {
      ++i;
      continue;
    }
    GenId s = cur[i].gen;
    GenId t = cur[i + 1].gen;
    const auto& st = comp.at(s, t);
    const auto& ts = comp.at(t, s);
    if (!st || !ts) return Stuck{s, t};
    if (grid.cells.size() >= fuel) return Diverged{grid.cells.size()};
    grid.cells.push_back({s, t, *st, *ts});
    std::vector<SignedLetter> repl;
    repl.reserve(st->size() + ts->size());
    for (auto g : *st) repl.push_back({g, false});
    for (auto it = ts->rbegin(); it != ts->rend(); ++it) repl.push_back({*it, true});
    cur.erase(cur.begin() + static_cast<long>(i), cur.begin() + static_cast<long>(i + 2));
    cur.insert(cur.begin() + static_cast<long>(i), repl.begin(), repl.end());
    i = i > 0 ? i - 1 : 0;
  }

  Reversed out;
  out.pos.source = w.source;
  ObjectId apex = w.source;
  std::size_t k = 0;
  for (; k < cur.size() && !cur[k].inverse; ++k) {
    out.pos.letters.push_back(cur[k].gen);
    apex = comp.target[idx(cur[k].gen)];
  }
  out.pos.target = apex;
  for (std::size_t j = cur.size(); j > k; --j) out.neg.letters.push_back(cur[j - 1].gen);
  out.neg.source = w.target;
  out.neg.target = apex;
  out.grid = std::move(grid);
  return out;
}

namespace {

// Positive part of the reversal of u^-1 v; nullopt when stuck or out of fuel.
std::optional<std::vector<GenId>> word_complement(const Complement& comp,
                                                  const std::vector<GenId>& u,
                                                  const std::vector<GenId>& v,
                                                  bool* diverged) {
  SignedWord w;
  for (auto it = u.rbegin(); it != u.rend(); ++it) w.letters.push_back({*it, true});
  for (auto g : v) w.letters.push_back({g, false});
  std::size_t len = std::max<std::size_t>(w.letters.size(), 1);
  auto r = reverse(comp, w, 16 * len * len + 64);
  if (auto* ok = std::get_if<Reversed>(&r)) return ok->pos.letters;
  if (std::holds_alternative<Diverged>(r) && diverged) *diverged = true;
  return std::nullopt;
}

bool cube_holds(const Complement& comp, const std::vector<GenId>& r, const std::vector<GenId>& s,
                const std::vector<GenId>& t) {
  bool div = false;
  auto rs = word_complement(comp, r, s, &div);
  auto rt = word_complement(comp, r, t, &div);
  auto sr = word_complement(comp, s, r, &div);
  auto st = word_complement(comp, s, t, &div);
  if (div) return false;
  std::optional<std::vector<GenId>> a, b;
  if (rs && rt) a = word_complement(comp, *rs, *rt, &div);
  if (sr && st) b = word_complement(comp, *sr, *st, &div);
  if (div) return false;
  if (!a && !b) return true;
  if (!a || !b) return false;
  auto ab = word_complement(comp, *a, *b, &div);
  auto ba = word_complement(comp, *b, *a, &div);
  return !div && ab && ba && ab->empty() && ba->empty();
}

void enumerate_words(const Complement& comp, std::size_t max_len,
                     std::vector<std::vector<GenId>>& out) {
  std::vector<std::vector<GenId>> layer;
  for (std::size_t g = 0; g < comp.n; ++g) layer.push_back({gen_id(g)});
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::vector<GenId>> next;
    for (const auto& w : layer)
      for (std::size_t g = 0; g < comp.n; ++g)
        if (comp.source[g] == comp.target[idx(w.back())]) {
          auto x = w;
          x.push_back(gen_id(g));
          next.push_back(std::move(x));
        }
    layer = std::move(next);
  }
}

}  // namespace

CubeVerdict check_cube_condition(const Complement& comp, int depth) {
  std::vector<std::vector<GenId>> words;
  enumerate_words(comp, static_cast<std::size_t>(std::max(depth, 1)), words);
  for (const auto& r : words)
    for (const auto& s : words) {
      if (comp.source[idx(r.front())] != comp.source[idx(s.front())]) continue;
      for (const auto& t : words) {
        if (comp.source[idx(r.front())] != comp.source[idx(t.front())]) continue;
        if (!cube_holds(comp, r, s, t)) return CubeCounterExample{r, s, t};
      }
    }
  return CubeComplete{};
}

namespace {

const Complement& require_complement(const CategoryContext& ctx) {
  if (!ctx.complement()) throw Unsupported("the presentation is not complemented");
  return *ctx.complement();
}

}  // namespace

std::optional<Word> right_lcm(const CategoryContext& ctx, const Word& u, const Word& v) {
  if (u.source != v.source) throw CompositionError("right_lcm: words have different sources");
  const auto& comp = require_complement(ctx);
  auto r = reverse(comp, concat(inverse(u), to_signed(v)), ctx.fuel_for(u.size() + v.size()));
  if (auto* ok = std::get_if<Reversed>(&r)) return concat(u, ok->pos);
  if (std::holds_alternative<Stuck>(r)) return std::nullopt;
  throw Inconclusive("reversing ran out of fuel in right_lcm");
}

std::optional<Word> left_lcm(const CategoryContext& ctx, const Word& u, const Word& v) {
  if (u.target != v.target) throw CompositionError("left_lcm: words have different targets");
  auto mirror = ctx.presentation().mirrored();
  auto comp = extract_complement(mirror);
  auto* c = std::get_if<Complement>(&comp);
  if (!c || !std::holds_alternative<CubeComplete>(check_cube_condition(*c, 1)))
    throw Unsupported("mirrored presentation has no complete complement");
  Word ru = reversed(u), rv = reversed(v);
  auto r = reverse(*c, concat(inverse(ru), to_signed(rv)), ctx.fuel_for(u.size() + v.size()));
  if (auto* ok = std::get_if<Reversed>(&r)) return reversed(concat(ru, ok->pos));
  if (std::holds_alternative<Stuck>(r)) return std::nullopt;
  throw Inconclusive("reversing ran out of fuel in left_lcm");
}

bool word_equal_via_reversing(const CategoryContext& ctx, const Word& u, const Word& v) {
  if (u.source != v.source || u.target != v.target) return false;
  const auto& comp = require_complement(ctx);
  auto r = reverse(comp, concat(inverse(u), to_signed(v)), ctx.fuel_for(u.size() + v.size()));
  if (auto* ok = std::get_if<Reversed>(&r)) return ok->pos.empty() && ok->neg.empty();
  if (std::holds_alternative<Stuck>(r)) return false;
  throw Inconclusive("reversing ran out of fuel in word equality");
}

bool groupoid_equal(const CategoryContext& ctx, const SignedWord& w1, const SignedWord& w2) {
  if (w1.source != w2.source || w1.target != w2.target) return false;
  const auto& comp = require_complement(ctx);
  auto r = reverse(comp, concat(inverse(w1), w2), ctx.fuel_for(w1.size() + w2.size()));
  if (auto* ok = std::get_if<Reversed>(&r)) return word_equal_via_reversing(ctx, ok->pos, ok->neg);
  if (std::holds_alternative<Stuck>(r))
    throw Unsupported("no common multiple: groupoid equality undecided by reversing");
  throw Inconclusive("reversing ran out of fuel in groupoid equality");
}

}  // namespace gk
