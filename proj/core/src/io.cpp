#include "gk/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "gk/reversing.hpp"

namespace gk {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool is_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct Line {
  int number;
  std::string text;
};

// Section name -> content lines, comments and blank lines removed.
std::map<std::string, std::vector<Line>> split_sections(std::string_view text,
                                                        const std::vector<std::string>& allowed) {
  std::map<std::string, std::vector<Line>> out;
  std::string current;
  int number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("malformed section header", number);
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (std::find(allowed.begin(), allowed.end(), current) == allowed.end())
        throw ParseError("unknown section [" + current + "]", number);
      if (out.count(current)) throw ParseError("duplicate section [" + current + "]", number);
      out[current];
      continue;
    }
    if (current.empty()) throw ParseError("content before the first section", number);
    out[current].push_back({number, std::string(line)});
  }
  return out;
}

// `name : src -> tgt` or a bare name.
struct Endpoints {
  std::string name;
  std::optional<std::pair<std::string, std::string>> ends;
};

Endpoints parse_endpoints(const Line& l) {
  auto colon = l.text.find(':');
  if (colon == std::string::npos) return {std::string(trim(l.text)), std::nullopt};
  std::string name(trim(std::string_view(l.text).substr(0, colon)));
  std::string_view rest = std::string_view(l.text).substr(colon + 1);
  auto arrow = rest.find("->");
  if (arrow == std::string_view::npos) throw ParseError("expected 'name : source -> target'", l.number);
  std::string src(trim(rest.substr(0, arrow))), tgt(trim(rest.substr(arrow + 2)));
  if (src.empty() || tgt.empty()) throw ParseError("missing endpoint", l.number);
  return {name, std::make_pair(src, tgt)};
}

template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), line);
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

SignedWord parse_signed_word(const Presentation& p, std::string_view text, ObjectId empty_at) {
  std::vector<SignedLetter> letters;
  auto tokens = split_ws(text);
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const std::string& tok = tokens[k];
    if (tok == "1") continue;
    std::string base = tok;
    bool inv = false;
    if (base.size() > 3 && base.compare(base.size() - 3, 3, "^-1") == 0) {
      inv = true;
      base.resize(base.size() - 3);
    }
    const std::string where = " (token " + std::to_string(k + 1) + ")";
    if (auto g = p.find_generator(base)) {
      letters.push_back({*g, inv});
      continue;
    }
    if (!p.single_char_names() || !is_token(base) || base.size() == 1)
      throw ParseError("unknown generator '" + base + "'" + where);
    for (std::size_t i = 0; i < base.size(); ++i) {
      auto g = p.find_generator(std::string(1, base[i]));
      if (!g)
        throw ParseError("unknown generator '" + std::string(1, base[i]) + "' in '" + tok + "'" + where);
      letters.push_back({*g, inv && i + 1 == base.size()});
    }
  }
  SignedWord w{{}, empty_at, empty_at};
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto& info = p.generator(letters[i].gen);
    ObjectId s = letters[i].inverse ? info.target : info.source;
    ObjectId t = letters[i].inverse ? info.source : info.target;
    if (i == 0)
      w.source = s;
    else if (s != w.target)
      throw CompositionError("letter " + std::to_string(i + 1) + " ('" + info.name +
                             "') does not compose with the preceding letters");
    w.target = t;
  }
  w.letters = std::move(letters);
  return w;
}

Word parse_word(const Presentation& p, std::string_view text, ObjectId empty_at) {
  auto sw = parse_signed_word(p, text, empty_at);
  Word w{{}, sw.source, sw.target};
  for (const auto& l : sw.letters) {
    if (l.inverse) throw ParseError("inverse letter in a positive word");
    w.letters.push_back(l.gen);
  }
  return w;
}

std::string format_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (auto g : w.letters) {
    if (!out.empty()) out += ' ';
    out += p.generator(g).name;
  }
  return out;
}

std::string format_signed_word(const Presentation& p, const SignedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += p.generator(l.gen).name;
    if (l.inverse) out += "^-1";
  }
  return out;
}

StructureFile parse_structure(std::string_view text) {
  auto sec = split_sections(text, {"objects", "generators", "relations", "garside"});
  StructureFile s;
  Presentation& p = s.presentation;
  if (auto it = sec.find("objects"); it != sec.end()) {
    for (const auto& l : it->second)
      for (const auto& name : split_ws(l.text)) {
        if (name != "*" && !is_token(name)) throw ParseError("invalid object name '" + name + "'", l.number);
        at_line(l.number, [&] { return p.add_object(name); });
      }
  }
  if (p.object_count() == 0) p.add_object("*");
  if (auto it = sec.find("generators"); it != sec.end()) {
    for (const auto& l : it->second) {
      auto e = parse_endpoints(l);
      if (!e.ends) {
        for (const auto& name : split_ws(e.name)) at_line(l.number, [&] { return p.add_generator(name); });
        continue;
      }
      auto src = p.find_object(e.ends->first), tgt = p.find_object(e.ends->second);
      if (!src) throw ParseError("unknown object '" + e.ends->first + "'", l.number);
      if (!tgt) throw ParseError("unknown object '" + e.ends->second + "'", l.number);
      at_line(l.number, [&] { return p.add_generator(e.name, *src, *tgt); });
    }
  }
  if (auto it = sec.find("relations"); it != sec.end()) {
    for (const auto& l : it->second) {
      auto eq = l.text.find('=');
      if (eq == std::string::npos || l.text.find('=', eq + 1) != std::string::npos)
        throw ParseError("expected 'lhs = rhs'", l.number);
      at_line(l.number, [&] {
        std::string_view lhs = trim(std::string_view(l.text).substr(0, eq));
        std::string_view rhs = trim(std::string_view(l.text).substr(eq + 1));
        if (lhs.empty() || rhs.empty()) throw ParseError("empty side in relation (write 1 for the empty word)");
        Word a = parse_word(p, lhs), b = parse_word(p, rhs);
        if (a.empty() && b.empty()) throw ParseError("trivial relation 1 = 1");
        if (a.empty()) a = p.identity(b.source);
        if (b.empty()) b = p.identity(a.source);
        p.add_relation(a, b);
        return 0;
      });
    }
  }
  if (auto it = sec.find("garside"); it != sec.end()) {
    if (it->second.size() != 1) throw ParseError("[garside] takes exactly one directive",
                                                 it->second.empty() ? 0 : it->second[1].number);
    const Line& l = it->second.front();
    auto& g = s.garside;
    if (l.text == "auto") {
      g.kind = GarsideDirective::Kind::Auto;
    } else if (l.text.rfind("delta:", 0) == 0) {
      g.kind = GarsideDirective::Kind::Delta;
      g.delta = at_line(l.number, [&] { return parse_word(p, l.text.substr(6)); });
    } else if (l.text.rfind("family:", 0) == 0) {
      g.kind = GarsideDirective::Kind::Family;
      std::string body = l.text.substr(7);
      std::vector<std::string> items;
      if (body.find(',') != std::string::npos) {
        std::istringstream in(body);
        for (std::string item; std::getline(in, item, ',');) items.push_back(item);
      } else {
        items = split_ws(body);
      }
      for (const auto& item : items) {
        if (trim(item).empty()) throw ParseError("empty family element", l.number);
        g.family.push_back(at_line(l.number, [&] { return parse_word(p, item); }));
      }
    } else {
      throw ParseError("expected 'family: ...', 'delta: ...' or 'auto'", l.number);
    }
  }
  return s;
}

std::string emit_structure(const StructureFile& s) {
  const Presentation& p = s.presentation;
  std::ostringstream out;
  const bool plain = p.object_count() == 1 && p.objects()[0] == "*";
  if (!plain) {
    out << "[objects]\n";
    for (const auto& o : p.objects()) out << o << "\n";
    out << "\n";
  }
  out << "[generators]\n";
  for (const auto& g : p.generators()) {
    out << g.name;
    if (!plain) out << " : " << p.objects()[idx(g.source)] << " -> " << p.objects()[idx(g.target)];
    out << "\n";
  }
  if (!p.relations().empty()) {
    out << "\n[relations]\n";
    for (const auto& r : p.relations()) out << format_word(p, r.lhs) << " = " << format_word(p, r.rhs) << "\n";
  }
  switch (s.garside.kind) {
    case GarsideDirective::Kind::None:
      break;
    case GarsideDirective::Kind::Auto:
      out << "\n[garside]\nauto\n";
      break;
    case GarsideDirective::Kind::Delta:
      out << "\n[garside]\ndelta: " << format_word(p, *s.garside.delta) << "\n";
      break;
    case GarsideDirective::Kind::Family: {
      out << "\n[garside]\nfamily:";
      for (std::size_t i = 0; i < s.garside.family.size(); ++i)
        out << (i ? ", " : " ") << format_word(p, s.garside.family[i]);
      out << "\n";
      break;
    }
  }
  return out.str();
}

Germ parse_germ(std::string_view text) {
  auto sec = split_sections(text, {"elements", "identity", "product"});
  Germ g;
  auto object = [&](const std::string& name) {
    auto it = std::find(g.objects.begin(), g.objects.end(), name);
    if (it != g.objects.end()) return object_id(static_cast<std::size_t>(it - g.objects.begin()));
    g.objects.push_back(name);
    return object_id(g.objects.size() - 1);
  };
  auto element = [&](const std::string& name, int line) {
    auto e = g.find(name);
    if (!e) throw ParseError("unknown element '" + name + "'", line);
    return *e;
  };
  if (auto it = sec.find("elements"); it != sec.end()) {
    for (const auto& l : it->second) {
      auto e = parse_endpoints(l);
      std::vector<std::string> names = e.ends ? std::vector<std::string>{e.name} : split_ws(e.name);
      for (const auto& name : names) {
        if (!is_token(name)) throw ParseError("invalid element name '" + name + "'", l.number);
        if (g.find(name)) throw ParseError("duplicate element '" + name + "'", l.number);
        ObjectId s = object(e.ends ? e.ends->first : "*");
        ObjectId t = object(e.ends ? e.ends->second : "*");
        g.elements.push_back({name, s, t});
      }
    }
  }
  if (g.elements.empty()) throw ParseError("germ has no [elements]");
  g.identities.assign(g.objects.size(), -1);
  auto it_id = sec.find("identity");
  if (it_id == sec.end()) throw ParseError("germ has no [identity] section");
  for (const auto& l : it_id->second)
    for (const auto& name : split_ws(l.text)) {
      int e = element(name, l.number);
      const auto& el = g.elements[static_cast<std::size_t>(e)];
      if (el.source != el.target) throw ParseError("identity '" + name + "' is not a loop", l.number);
      if (g.identities[idx(el.source)] >= 0)
        throw ParseError("second identity at object '" + g.objects[idx(el.source)] + "'", l.number);
      g.identities[idx(el.source)] = e;
    }
  for (std::size_t o = 0; o < g.objects.size(); ++o)
    if (g.identities[o] < 0) throw ParseError("object '" + g.objects[o] + "' has no identity");
  g.reset_product();
  const int n = static_cast<int>(g.size());
  for (int s = 0; s < n; ++s) {
    const auto& el = g.elements[static_cast<std::size_t>(s)];
    g.set_product(g.identities[idx(el.source)], s, s);
    g.set_product(s, g.identities[idx(el.target)], s);
  }
  if (auto it = sec.find("product"); it != sec.end()) {
    for (const auto& l : it->second) {
      auto star = l.text.find('*');
      auto eq = l.text.find('=');
      if (star == std::string::npos || eq == std::string::npos || eq < star)
        throw ParseError("expected 'r * s = t'", l.number);
      int r = element(std::string(trim(std::string_view(l.text).substr(0, star))), l.number);
      int s = element(std::string(trim(std::string_view(l.text).substr(star + 1, eq - star - 1))), l.number);
      int t = element(std::string(trim(std::string_view(l.text).substr(eq + 1))), l.number);
      const auto& er = g.elements[static_cast<std::size_t>(r)];
      const auto& es = g.elements[static_cast<std::size_t>(s)];
      const auto& et = g.elements[static_cast<std::size_t>(t)];
      if (er.target != es.source) throw ParseError("factors do not compose", l.number);
      if (et.source != er.source || et.target != es.target)
        throw ParseError("product has the wrong endpoints", l.number);
      if (g.defined(r, s) && g.product(r, s) != t)
        throw ParseError("conflicting product for " + er.name + " * " + es.name, l.number);
      g.set_product(r, s, t);
    }
  }
  return g;
}

std::string emit_germ(const Germ& g) {
  std::ostringstream out;
  const bool plain = g.objects.size() == 1 && g.objects[0] == "*";
  out << "[elements]\n";
  for (const auto& e : g.elements) {
    out << e.name;
    if (!plain) out << " : " << g.objects[idx(e.source)] << " -> " << g.objects[idx(e.target)];
    out << "\n";
  }
  out << "\n[identity]\n";
  for (int e : g.identities) out << g.elements[static_cast<std::size_t>(e)].name << "\n";
  std::ostringstream products;
  const int n = static_cast<int>(g.size());
  for (int r = 0; r < n; ++r) {
    if (g.is_identity(r)) continue;
    for (int s = 0; s < n; ++s) {
      if (g.is_identity(s) || !g.defined(r, s)) continue;
      products << g.elements[static_cast<std::size_t>(r)].name << " * "
               << g.elements[static_cast<std::size_t>(s)].name << " = "
               << g.elements[static_cast<std::size_t>(g.product(r, s))].name << "\n";
    }
  }
  if (!products.str().empty()) out << "\n[product]\n" << products.str();
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_germ(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    return line == "[elements]";
  }
  return false;
}

namespace {

std::vector<Word> divisors_of(const CategoryContext& ctx, const Word& delta) {
  const auto& p = ctx.presentation();
  const bool homogeneous = p.homogeneous();
  std::vector<Word> out;
  std::vector<Word> level{p.identity(delta.source)};
  while (!level.empty()) {
    std::vector<Word> next;
    for (const auto& x : level)
      for (std::size_t g = 0; g < p.generator_count(); ++g) {
        if (p.generator(gen_id(g)).source != x.target) continue;
        Word y = concat(x, p.letter(gen_id(g)));
        if (!ctx.left_divides(y, delta)) continue;
        auto same = [&](const Word& z) { return z.target == y.target && ctx.equal(z, y); };
        bool known = std::any_of(next.begin(), next.end(), same) ||
                     (!homogeneous && std::any_of(out.begin(), out.end(), same));
        if (!known) next.push_back(std::move(y));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

void attach_map(Realized& r) {
  auto gm = GarsideMap::build(r.tables);
  if (auto* u = std::get_if<Unbounded>(&gm)) {
    r.note = u->reason;
    return;
  }
  r.map = std::get<GarsideMap>(std::move(gm));
}

void fill_family(Realized& r) {
  for (int s = 0; s < static_cast<int>(r.tables->size()); ++s)
    if (!r.tables->is_identity(s)) r.family.push_back(r.tables->word(s));
}

}  // namespace

Realized realize(const StructureFile& s, const ContextOptions& opts, std::size_t family_budget) {
  Realized r;
  r.context = std::make_shared<CategoryContext>(s.presentation, opts);
  const auto& ctx = *r.context;
  std::vector<Word> family;
  switch (s.garside.kind) {
    case GarsideDirective::Kind::None:
      r.note = "no [garside] section";
      return r;
    case GarsideDirective::Kind::Family:
      family = s.garside.family;
      break;
    case GarsideDirective::Kind::Delta:
      family = divisors_of(ctx, *s.garside.delta);
      break;
    case GarsideDirective::Kind::Auto: {
      auto cf = closure_family(ctx, family_budget);
      if (auto* u = std::get_if<Unbounded>(&cf)) {
        r.note = u->reason;
        return r;
      }
      family = std::get<std::vector<Word>>(std::move(cf));
      break;
    }
  }
  try {
    std::vector<int> gens;
    Germ germ = germ_from_family(ctx, family, &gens);
    auto tables = GarsideTables::from_germ(germ, s.presentation, gens);
    for (const auto& rel : s.presentation.relations())
      if (!tables->word_problem(rel.lhs, rel.rhs))
        throw ValidationError("the family does not account for the relation " +
                              format_word(s.presentation, rel.lhs) + " = " +
                              format_word(s.presentation, rel.rhs));
    r.tables = std::move(tables);
    r.germ = std::move(germ);
  } catch (const ValidationError& e) {
    r.note = e.what();
    r.family = std::move(family);
    return r;
  }
  fill_family(r);
  attach_map(r);
  if (r.map && s.garside.delta &&
      !ctx.equal(r.tables->word(r.map->delta(s.garside.delta->source)), *s.garside.delta)) {
    r.map.reset();
    r.note = "the declared delta is not the Garside element of its divisor family";
  }
  return r;
}

Realized realize(const Germ& g, const ContextOptions& opts) {
  Realized r;
  r.context = std::make_shared<CategoryContext>(germ_category(g), opts);
  r.germ = g;
  try {
    r.tables = GarsideTables::from_germ(g);
  } catch (const ValidationError& e) {
    r.note = e.what();
    return r;
  }
  fill_family(r);
  attach_map(r);
  return r;
}

Realized realize(const CatalogEntry& e) {
  Realized r;
  r.context = e.context;
  r.tables = e.tables;
  r.map = e.map;
  r.family = e.family;
  r.germ = e.germ;
  if (!e.tables) r.note = e.description;
  return r;
}

StructureFile to_structure_file(const CatalogEntry& e) {
  StructureFile s{e.context->presentation(), {}};
  if (e.map) {
    s.garside.kind = GarsideDirective::Kind::Delta;
    s.garside.delta = e.tables->word(e.map->delta(object_id(0)));
  } else if (e.tables) {
    s.garside.kind = GarsideDirective::Kind::Family;
    s.garside.family = e.family;
  }
  return s;
}

}  // namespace gk
