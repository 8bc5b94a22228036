#include "gk/category.hpp"

#include <algorithm>
#include <numeric>

#include "gk/reversing.hpp"

namespace gk {

bool valid_token(std::string_view name) {
  if (name.empty() || name == "1") return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

Presentation Presentation::monoid(const std::vector<std::string>& generator_names) {
  Presentation p;
  p.add_object("*");
  for (const auto& n : generator_names) p.add_generator(n);
  return p;
}

ObjectId Presentation::add_object(std::string name) {
  if (find_object(name)) throw ValidationError("duplicate object '" + name + "'");
  objects_.push_back(std::move(name));
  return object_id(objects_.size() - 1);
}

GenId Presentation::add_generator(std::string name, ObjectId source, ObjectId target) {
  if (!valid_token(name)) throw ValidationError("invalid generator name '" + name + "'");
  if (find_generator(name)) throw ValidationError("duplicate generator '" + name + "'");
  if (idx(source) >= objects_.size() || idx(target) >= objects_.size())
    throw ValidationError("generator '" + name + "' has an unknown endpoint");
  generators_.push_back({std::move(name), source, target});
  weights_.reset();
  return gen_id(generators_.size() - 1);
}

GenId Presentation::add_generator(std::string name) {
  if (objects_.empty()) add_object("*");
  if (objects_.size() != 1)
    throw ValidationError("generator '" + name + "' needs explicit endpoints");
  return add_generator(std::move(name), object_id(0), object_id(0));
}

void Presentation::add_relation(Word lhs, Word rhs) {
  if (lhs.source != rhs.source || lhs.target != rhs.target)
    throw CompositionError("relation sides have different endpoints");
  relations_.push_back({std::move(lhs), std::move(rhs)});
}

std::optional<GenId> Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return gen_id(i);
  return std::nullopt;
}

std::optional<ObjectId> Presentation::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return object_id(i);
  return std::nullopt;
}

bool Presentation::single_char_names() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const GeneratorInfo& g) { return g.name.size() == 1; });
}

Word Presentation::letter(GenId g) const {
  const auto& info = generator(g);
  return Word{{g}, info.source, info.target};
}

Word Presentation::word(const std::vector<std::string>& names) const {
  if (names.empty()) {
    if (objects_.size() != 1) throw CompositionError("empty word needs an explicit object");
    return identity(object_id(0));
  }
  Word w;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto g = find_generator(names[i]);
    if (!g) throw ValidationError("unknown generator '" + names[i] + "'");
    const auto& info = generator(*g);
    if (i == 0) {
      w.source = info.source;
    } else if (info.source != w.target) {
      throw CompositionError("'" + names[i] + "' does not compose with the preceding letter");
    }
    w.letters.push_back(*g);
    w.target = info.target;
  }
  return w;
}

SignedWord Presentation::signed_letter(GenId g, bool inv) const {
  const auto& info = generator(g);
  return inv ? SignedWord{{{g, true}}, info.target, info.source}
             : SignedWord{{{g, false}}, info.source, info.target};
}

bool Presentation::homogeneous() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Relation& r) { return r.lhs.size() == r.rhs.size(); });
}

void Presentation::set_weights(std::vector<int> w) {
  if (w.size() != generators_.size()) throw ValidationError("one weight per generator required");
  if (std::any_of(w.begin(), w.end(), [](int x) { return x <= 0; }))
    throw ValidationError("weights must be positive");
  auto weight = [&](const Word& u) {
    int s = 0;
    for (auto g : u.letters) s += w[idx(g)];
    return s;
  };
  for (const auto& r : relations_)
    if (weight(r.lhs) != weight(r.rhs)) throw ValidationError("relation does not preserve weights");
  weights_ = std::move(w);
}

Presentation Presentation::mirrored() const {
  Presentation m;
  m.objects_ = objects_;
  for (const auto& g : generators_) m.generators_.push_back({g.name, g.target, g.source});
  for (const auto& r : relations_) m.relations_.push_back({reversed(r.lhs), reversed(r.rhs)});
  m.weights_ = weights_;
  return m;
}

Word concat(const Word& u, const Word& v) {
  if (u.target != v.source) throw CompositionError("words do not compose");
  Word w{u.letters, u.source, v.target};
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

SignedWord concat(const SignedWord& u, const SignedWord& v) {
  if (u.target != v.source) throw CompositionError("signed words do not compose");
  SignedWord w{u.letters, u.source, v.target};
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

SignedWord to_signed(const Word& w) {
  SignedWord s{{}, w.source, w.target};
  s.letters.reserve(w.size());
  for (auto g : w.letters) s.letters.push_back({g, false});
  return s;
}

SignedWord inverse(const SignedWord& w) {
  SignedWord s{{}, w.target, w.source};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    s.letters.push_back({it->gen, !it->inverse});
  return s;
}

SignedWord inverse(const Word& w) { return inverse(to_signed(w)); }

Word reversed(const Word& w) {
  Word r{{w.letters.rbegin(), w.letters.rend()}, w.target, w.source};
  return r;
}

Closure rewriting_closure(const Presentation& p, const Word& w, std::size_t max_steps,
                          std::size_t max_nodes) {
  Closure out;
  out.words.insert(w.letters);
  std::vector<std::vector<GenId>> frontier{w.letters};
  for (std::size_t step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<std::vector<GenId>> next;
    for (const auto& cur : frontier) {
      for (const auto& rel : p.relations()) {
        for (int dir = 0; dir < 2; ++dir) {
          const auto& from = dir == 0 ? rel.lhs.letters : rel.rhs.letters;
          const auto& to = dir == 0 ? rel.rhs.letters : rel.lhs.letters;
          if (from.size() > cur.size()) continue;
          for (std::size_t pos = 0; pos + from.size() <= cur.size(); ++pos) {
            if (!std::equal(from.begin(), from.end(), cur.begin() + static_cast<long>(pos)))
              continue;
            std::vector<GenId> cand(cur.begin(), cur.begin() + static_cast<long>(pos));
            cand.insert(cand.end(), to.begin(), to.end());
            cand.insert(cand.end(), cur.begin() + static_cast<long>(pos + from.size()), cur.end());
            if (out.words.insert(cand).second) {
              if (out.words.size() > max_nodes) return out;
              next.push_back(std::move(cand));
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  out.complete = frontier.empty();
  return out;
}

CategoryContext::CategoryContext(Presentation p, ContextOptions opts)
    : pres_(std::move(p)), opts_(opts) {
  auto comp = extract_complement(pres_);
  if (auto* c = std::get_if<Complement>(&comp)) {
    complement_ = std::make_unique<Complement>(std::move(*c));
    complete_ = std::holds_alternative<CubeComplete>(
        check_cube_condition(*complement_, std::max(1, opts_.cube_depth)));
  }
  noetherian_ = pres_.homogeneous() || pres_.weights().has_value();
}

CategoryContext::~CategoryContext() = default;
CategoryContext::CategoryContext(CategoryContext&&) noexcept = default;
CategoryContext& CategoryContext::operator=(CategoryContext&&) noexcept = default;
CategoryContext::CategoryContext(const CategoryContext& o)
    : pres_(o.pres_),
      opts_(o.opts_),
      complement_(o.complement_ ? std::make_unique<Complement>(*o.complement_) : nullptr),
      complete_(o.complete_),
      noetherian_(o.noetherian_) {}
CategoryContext& CategoryContext::operator=(const CategoryContext& o) {
  if (this != &o) *this = CategoryContext(o);
  return *this;
}

std::size_t CategoryContext::fuel_for(std::size_t length) const {
  std::size_t l = std::max<std::size_t>(length, 1);
  return opts_.fuel_factor * l * l;
}

Closure CategoryContext::closure(const Word& w) const {
  return rewriting_closure(pres_, w, w.size() + opts_.closure_extra_steps,
                           opts_.max_closure_nodes);
}

bool CategoryContext::equal(const Word& u, const Word& v) const {
  if (u.source != v.source || u.target != v.target) return false;
  if (u.letters == v.letters) return true;
  if (complete_) return word_equal_via_reversing(*this, u, v);
  auto longer = u.size() >= v.size() ? u : v;
  auto other = u.size() >= v.size() ? v : u;
  auto c = rewriting_closure(pres_, longer, longer.size() + opts_.closure_extra_steps,
                             opts_.max_closure_nodes);
  if (c.words.count(other.letters)) return true;
  if (c.complete) return false;
  throw Inconclusive("rewriting closure exhausted its bound before deciding equality");
}

bool CategoryContext::left_divides(const Word& u, const Word& v) const {
  if (u.source != v.source) throw CompositionError("left_divides: words have different sources");
  if (u.empty()) return true;
  if (complete_) {
    auto r = reverse(*complement_, concat(inverse(u), to_signed(v)), fuel_for(u.size() + v.size()));
    if (auto* ok = std::get_if<Reversed>(&r)) return ok->neg.empty();
    if (std::holds_alternative<Stuck>(r)) return false;
    throw Inconclusive("reversing ran out of fuel in left_divides");
  }
  auto c = closure(v);
  for (const auto& w : c.words)
    if (w.size() >= u.size() && std::equal(u.letters.begin(), u.letters.end(), w.begin()))
      return true;
  if (c.complete) return false;
  throw Inconclusive("rewriting closure exhausted its bound before deciding divisibility");
}

std::optional<std::vector<GenId>> CategoryContext::canonical_key(const Word& w) const {
  auto c = closure(w);
  if (!c.complete) return std::nullopt;
  return *c.words.begin();
}

std::vector<Word> CategoryContext::atoms() const {
  if (!noetherian_) throw Unsupported("atoms require a Noetherian context");
  std::vector<Word> out;
  std::vector<bool> merged(pres_.generator_count(), false);
  for (std::size_t i = 0; i < pres_.generator_count(); ++i) {
    if (merged[i]) continue;
    auto w = pres_.letter(gen_id(i));
    auto c = closure(w);
    if (!c.complete) throw Inconclusive("closure of a generator did not terminate");
    bool atom = std::all_of(c.words.begin(), c.words.end(),
                            [](const auto& x) { return x.size() == 1; });
    for (const auto& x : c.words)
      if (x.size() == 1) merged[idx(x[0])] = true;
    if (atom) out.push_back(w);
  }
  return out;
}

int CategoryContext::height(const Word& g) const {
  if (!noetherian_) throw Unsupported("height requires a Noetherian context");
  if (g.empty()) return 0;
  auto c = closure(g);
  if (!c.complete) throw Inconclusive("closure did not terminate while computing height");
  std::size_t best = 0;
  for (const auto& w : c.words) best = std::max(best, w.size());
  return static_cast<int>(best);
}

}  // namespace gk
