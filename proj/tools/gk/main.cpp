// gk: command-line front end for the Garside calculus library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gk/catalog.hpp"
#include "gk/conjugacy.hpp"
#include "gk/io.hpp"
#include "gk/reversing.hpp"

namespace {

struct Limits {
  std::size_t fuel_factor = 16;
  int cube_depth = 1;
  std::size_t nodes = gk::kDefaultNodeBudget;
  std::size_t search = 200000;
  std::size_t family = 1000;
  std::size_t check_family = 200;

  gk::ContextOptions options() const {
    gk::ContextOptions o;
    o.fuel_factor = fuel_factor;
    o.cube_depth = cube_depth;
    o.max_closure_nodes = search;
    return o;
  }
};

struct Loaded {
  gk::Realized r;
  bool from_germ = false;
  bool delta_declared = false;
};

// FILE is a structure file, a germ file, or `catalog:KEY`.
Loaded load(const std::string& file, const Limits& lim) {
  Loaded l;
  if (file.rfind("catalog:", 0) == 0) {
    l.r = gk::realize(gk::catalog(file.substr(8)));
    l.delta_declared = l.r.map.has_value();
    return l;
  }
  std::string text = gk::read_file(file);
  if (gk::looks_like_germ(text)) {
    l.from_germ = true;
    l.r = gk::realize(gk::parse_germ(text), lim.options());
  } else {
    auto s = gk::parse_structure(text);
    l.delta_declared = s.garside.kind == gk::GarsideDirective::Kind::Delta;
    l.r = gk::realize(s, lim.options(), lim.family);
  }
  return l;
}

const gk::Presentation& pres(const Loaded& l) { return l.r.context->presentation(); }

const gk::GarsideTables& need_tables(const Loaded& l) {
  if (!l.r.tables) throw gk::Unsupported("no Garside family: " + l.r.note);
  return *l.r.tables;
}

const gk::GarsideMap& need_map(const Loaded& l) {
  if (!l.r.map) throw gk::Unsupported("no Garside map: " + l.r.note);
  return *l.r.map;
}

void need_words(const std::vector<std::string>& w, std::size_t n) {
  if (w.size() != n)
    throw gk::ParseError("expected " + std::to_string(n) + " word(s) given with -w, got " +
                         std::to_string(w.size()));
}

bool positive(const gk::SignedWord& w) {
  for (const auto& l : w.letters)
    if (l.inverse) return false;
  return true;
}

gk::Word unsigned_word(const gk::SignedWord& w) {
  gk::Word out{{}, w.source, w.target};
  for (const auto& l : w.letters) out.letters.push_back(l.gen);
  return out;
}

void line(const std::string& name, const std::string& status, const std::string& detail = {}) {
  std::cout << name << ": " << status;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
}

int cmd_check(const Loaded& l, const Limits& lim) {
  bool failed = false;
  auto report = [&](const std::string& name, const std::string& status, const std::string& detail = {}) {
    failed = failed || status == "FAIL";
    line(name, status, detail);
  };
  const auto& ctx = *l.r.context;

  if (l.r.germ) {
    auto v = gk::validate_germ(*l.r.germ);
    if (auto* bad = std::get_if<gk::GermViolation>(&v))
      report("germ", "FAIL", bad->reason);
    else
      report("germ", "PASS");
    auto w = gk::is_garside_germ(*l.r.germ);
    report("garside-germ", w.garside ? "PASS" : "FAIL", w.reason);
  } else {
    report("germ", "N/A", l.r.note);
    report("garside-germ", "N/A");
  }

  if (!ctx.complement()) {
    report("cube-condition", "N/A", "no complement: relations are not of the form s... = t...");
  } else {
    auto cube = gk::check_cube_condition(*ctx.complement(), lim.cube_depth);
    if (auto* ce = std::get_if<gk::CubeCounterExample>(&cube)) {
      const auto& p = ctx.presentation();
      auto name = [&](const std::vector<gk::GenId>& w) {
        return gk::format_word(p, gk::Word{w, gk::object_id(0), gk::object_id(0)});
      };
      report("cube-condition", "FAIL", name(ce->a) + ", " + name(ce->b) + ", " + name(ce->c));
    } else {
      report("cube-condition", "PASS");
    }
  }

  if (l.r.family.empty() && !l.r.tables) {
    report("garside-family", l.r.germ ? "FAIL" : "N/A", l.r.note);
  } else if (!ctx.noetherian() || !ctx.complete()) {
    report("garside-family", "N/A", "needs a Noetherian context with a complete complement");
  } else if (l.r.family.size() > lim.check_family) {
    report("garside-family", "N/A", "family larger than --limit-check-family");
  } else {
    auto v = gk::is_garside_family(ctx, l.r.family);
    std::string detail = v.failing_condition;
    if (v.witness) detail += ": " + gk::format_word(ctx.presentation(), *v.witness);
    report("garside-family", v.yes ? "PASS" : "FAIL", detail);
  }

  if (l.r.map)
    report("garside-map", "PASS");
  else if (l.r.tables)
    report("garside-map", l.delta_declared ? "FAIL" : "N/A", l.r.note);
  else
    report("garside-map", l.delta_declared ? "FAIL" : "N/A");
  return failed ? 1 : 0;
}

int cmd_nf(const Loaded& l, const std::vector<std::string>& words, bool delta) {
  need_words(words, 1);
  if (delta) {
    const auto& gm = need_map(l);
    auto w = gk::parse_signed_word(pres(l), words[0]);
    std::cout << gk::display(gm, gk::delta_normalize(gm, w)) << "\n";
  } else {
    const auto& t = need_tables(l);
    std::cout << t.display(t.normalize(gk::parse_word(pres(l), words[0]))) << "\n";
  }
  return 0;
}

int cmd_eq(const Loaded& l, const std::vector<std::string>& words) {
  need_words(words, 2);
  const auto& p = pres(l);
  auto u = gk::parse_signed_word(p, words[0]);
  auto v = gk::parse_signed_word(p, words[1]);
  bool equal;
  if (u.source != v.source || u.target != v.target) {
    equal = false;
  } else if (positive(u) && positive(v)) {
    equal = l.r.tables ? l.r.tables->word_problem(unsigned_word(u), unsigned_word(v))
                       : l.r.context->equal(unsigned_word(u), unsigned_word(v));
  } else if (l.r.map && l.r.tables->object_count() == 1) {
    equal = gk::delta_normalize(*l.r.map, u) == gk::delta_normalize(*l.r.map, v);
  } else {
    equal = gk::groupoid_equal(*l.r.context, u, v);
  }
  std::cout << (equal ? "equal" : "distinct") << "\n";
  return equal ? 0 : 1;
}

int cmd_lcm(const Loaded& l, const std::vector<std::string>& words, bool left) {
  need_words(words, 2);
  const auto& p = pres(l);
  auto u = gk::parse_word(p, words[0]), v = gk::parse_word(p, words[1]);
  std::optional<gk::Word> out;
  if (l.r.map && l.r.tables->object_count() == 1) {
    out = left ? gk::left_lcm(*l.r.map, u, v) : gk::right_lcm(*l.r.map, u, v);
  } else if (l.r.tables) {
    const auto& t = *l.r.tables;
    auto nd = left ? t.left_lcm(t.normalize(u), t.normalize(v)) : t.right_lcm(t.normalize(u), t.normalize(v));
    if (nd) out = t.to_word(*nd);
  } else {
    out = left ? gk::left_lcm(*l.r.context, u, v) : gk::right_lcm(*l.r.context, u, v);
  }
  std::cout << (out ? gk::format_word(p, *out) : "none") << "\n";
  return 0;
}

int cmd_gcd(const Loaded& l, const std::vector<std::string>& words, bool right) {
  need_words(words, 2);
  const auto& t = need_tables(l);
  const auto& p = pres(l);
  auto u = t.normalize(gk::parse_word(p, words[0]));
  auto v = t.normalize(gk::parse_word(p, words[1]));
  std::cout << gk::format_word(p, t.to_word(right ? t.right_gcd(u, v) : t.gcd(u, v))) << "\n";
  return 0;
}

int cmd_reverse(const Loaded& l, const std::vector<std::string>& words) {
  need_words(words, 1);
  const auto& ctx = *l.r.context;
  if (!ctx.complement()) throw gk::Unsupported("the presentation has no complement for reversing");
  auto w = gk::parse_signed_word(ctx.presentation(), words[0]);
  auto res = gk::reverse(*ctx.complement(), w, ctx.fuel_for(w.size()));
  const auto& p = ctx.presentation();
  if (auto* r = std::get_if<gk::Reversed>(&res)) {
    std::cout << gk::format_word(p, r->pos) << " | " << gk::format_word(p, r->neg) << "\n";
    return 0;
  }
  if (auto* s = std::get_if<gk::Stuck>(&res)) {
    std::cout << "stuck: " << p.generator(s->left).name << "^-1 " << p.generator(s->right).name
              << " has no complement\n";
    return 1;
  }
  throw gk::Inconclusive("reversing did not terminate within " +
                         std::to_string(std::get<gk::Diverged>(res).cells) + " cells");
}

int cmd_conj(const Loaded& l, const std::vector<std::string>& words, const Limits& lim) {
  need_words(words, 2);
  const auto& gm = need_map(l);
  const auto& p = pres(l);
  auto r = gk::are_conjugate(gm, gk::parse_signed_word(p, words[0]), gk::parse_signed_word(p, words[1]),
                             lim.nodes);
  if (!r.conjugate) {
    std::cout << "no\n";
    return 1;
  }
  std::cout << "yes witness: " << gk::format_word(p, *r.witness) << "\n";
  return 0;
}

int cmd_sss(const Loaded& l, const std::vector<std::string>& words, const Limits& lim) {
  need_words(words, 1);
  const auto& gm = need_map(l);
  const auto& p = pres(l);
  auto g = gk::delta_normalize(gm, gk::parse_signed_word(p, words[0]));
  auto sc = gk::sliding_circuit_set(gm, g, lim.nodes);
  for (const auto& n : sc.nodes) std::cout << gk::display(gm, n.element) << "\n";
  for (const auto& n : sc.nodes)
    std::cout << "witness: " << gk::format_word(p, gk::positive_representative(gm, n.conjugator).first)
              << "\n";
  return 0;
}

int cmd_catalog(const std::string& key, const std::string& emit, const std::string& format) {
  if (key == "list") {
    for (const auto& k : gk::catalog_examples()) std::cout << k << "\n";
    return 0;
  }
  auto e = gk::catalog(key);
  if (emit.empty()) {
    std::cout << e.key << ": " << e.description << "\n";
    std::cout << "generators: " << e.context->presentation().generator_count() << "\n";
    std::cout << "relations: " << e.context->presentation().relations().size() << "\n";
    if (e.tables) std::cout << "simples: " << e.tables->size() << "\n";
    if (e.map) std::cout << "delta: " << e.tables->name(e.map->delta(gk::object_id(0))) << "\n";
    return 0;
  }
  std::string text;
  if (format == "germ") {
    if (!e.germ) throw gk::Unsupported("catalog entry '" + key + "' has no germ");
    text = gk::emit_germ(*e.germ);
  } else {
    text = gk::emit_structure(gk::to_structure_file(e));
  }
  if (emit == "-") {
    std::cout << text;
  } else {
    std::ofstream out(emit, std::ios::binary);
    if (!out) throw gk::Error("cannot write '" + emit + "'");
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside calculus: normal forms, word and conjugacy problems, reversing"};
  app.require_subcommand(1);
  app.fallthrough();
  Limits lim;
  app.add_option("--limit-fuel", lim.fuel_factor, "reversing fuel factor k (fuel k*L^2)")->capture_default_str();
  app.add_option("--limit-depth", lim.cube_depth, "word length for the cube condition")->capture_default_str();
  app.add_option("--limit-nodes", lim.nodes, "node budget of sliding circuit enumeration")->capture_default_str();
  app.add_option("--limit-search", lim.search, "node budget of rewriting-closure searches")->capture_default_str();
  app.add_option("--limit-family", lim.family, "element budget when closing a family automatically")->capture_default_str();
  app.add_option("--limit-check-family", lim.check_family,
                 "largest family checked word by word in `check`")->capture_default_str();

  std::string file;
  std::vector<std::string> words;
  bool delta = false, side = false;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "structure file, germ file, or catalog:KEY")->required();
    sub->add_option("-w,--word", words, "word (space-separated tokens, a^-1 for inverses)");
  };
  auto* check = app.add_subcommand("check", "run validity checks");
  with_file(check);
  auto* nf = app.add_subcommand("nf", "greedy normal form");
  with_file(nf);
  nf->add_flag("--delta", delta, "Delta-normal form (signed words allowed)");
  auto* eq = app.add_subcommand("eq", "word problem");
  with_file(eq);
  auto* lcm = app.add_subcommand("lcm", "least common right-multiple");
  with_file(lcm);
  lcm->add_flag("--left", side, "least common left-multiple instead");
  auto* gcd = app.add_subcommand("gcd", "greatest common left-divisor");
  with_file(gcd);
  gcd->add_flag("--right", side, "greatest common right-divisor instead");
  auto* rev = app.add_subcommand("reverse", "right-reverse a signed word");
  with_file(rev);
  auto* conj = app.add_subcommand("conj", "conjugacy problem");
  with_file(conj);
  auto* sss = app.add_subcommand("sss", "sliding circuit set");
  with_file(sss);
  auto* cat = app.add_subcommand("catalog", "built-in structures (KEY `list` lists them)");
  std::string key, emit, format = "structure";
  cat->add_option("KEY", key)->required();
  cat->add_option("--emit", emit, "write the entry to PATH (`-` for standard output)");
  cat->add_option("--format", format, "structure or germ")
      ->check(CLI::IsMember({"structure", "germ"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cat->parsed()) return cmd_catalog(key, emit, format);
    Loaded l = load(file, lim);
    if (check->parsed()) return cmd_check(l, lim);
    if (nf->parsed()) return cmd_nf(l, words, delta);
    if (eq->parsed()) return cmd_eq(l, words);
    if (lcm->parsed()) return cmd_lcm(l, words, side);
    if (gcd->parsed()) return cmd_gcd(l, words, side);
    if (rev->parsed()) return cmd_reverse(l, words);
    if (conj->parsed()) return cmd_conj(l, words, lim);
    if (sss->parsed()) return cmd_sss(l, words, lim);
  } catch (const std::exception& e) {
    std::cerr << "gk: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
