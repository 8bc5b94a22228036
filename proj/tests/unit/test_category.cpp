#include <doctest.h>

#include "gk/category.hpp"
#include "helpers.hpp"

using namespace gk;
using testutil::w;

TEST_SUITE("category") {
  TEST_CASE("presentation bookkeeping") {
    auto p = Presentation::monoid({"a", "b"});
    CHECK(p.object_count() == 1);
    CHECK(p.generator_count() == 2);
    CHECK(p.find_generator("b") == gen_id(1));
    CHECK_FALSE(p.find_generator("c"));
    CHECK(p.single_char_names());
    CHECK_THROWS_AS(p.add_generator("a"), ValidationError);
    CHECK_THROWS_AS(p.add_generator("1"), ValidationError);
    CHECK_THROWS_AS(p.add_generator("x-y"), ValidationError);
  }

  TEST_CASE("composition in a two-object category") {
    Presentation p;
    auto x = p.add_object("X");
    auto y = p.add_object("Y");
    p.add_generator("f", x, y);
    p.add_generator("g", y, x);
    auto fg = p.word({"f", "g"});
    CHECK(fg.source == x);
    CHECK(fg.target == x);
    CHECK_THROWS_AS(p.word({"f", "f"}), CompositionError);
    CHECK_THROWS_AS(concat(p.letter(gen_id(0)), p.letter(gen_id(0))), CompositionError);
    auto inv = inverse(p.letter(gen_id(0)));
    CHECK(inv.source == y);
    CHECK(inv.target == x);
    auto m = p.mirrored();
    CHECK(m.generator(gen_id(0)).source == y);
  }

  TEST_CASE("homogeneity and weights") {
    auto b3 = testutil::braid_presentation(3);
    CHECK(b3.homogeneous());
    auto p = Presentation::monoid({"a", "b"});
    p.add_relation(w(p, "a"), w(p, "b b"));
    CHECK_FALSE(p.homogeneous());
    p.set_weights({2, 1});
    REQUIRE(p.weights());
    CHECK(CategoryContext(p).noetherian());
    CHECK_THROWS_AS(p.set_weights({1, 1}), ValidationError);
  }

  TEST_CASE("rewriting closure of the half twist") {
    auto p = testutil::braid_presentation(3);
    auto c = rewriting_closure(p, w(p, "a b a"), 10);
    CHECK(c.complete);
    CHECK(c.words.size() == 2);
    auto b4 = testutil::braid_presentation(4);
    auto d = rewriting_closure(b4, w(b4, "a b a c b a"), 20);
    CHECK(d.complete);
    CHECK(d.words.size() == 16);
  }

  TEST_CASE("equality agrees with the closure oracle on B3 words of length <= 5") {
    auto p = testutil::braid_presentation(3);
    CategoryContext ctx(p);
    CHECK(ctx.complete());
    CHECK(ctx.noetherian());
    auto rules = oracle::braid_rules(3);
    auto words = oracle::all_words(2, 5);
    for (const auto& u : words)
      for (const auto& v : words) {
        if (u.size() != v.size()) continue;
        bool expected = oracle::closure(rules, u).count(v) > 0;
        CHECK(ctx.equal(testutil::to_word(p, u), testutil::to_word(p, v)) == expected);
      }
  }

  TEST_CASE("left divisibility agrees with the closure oracle") {
    auto p = testutil::braid_presentation(3);
    CategoryContext ctx(p);
    auto rules = oracle::braid_rules(3);
    auto words = oracle::all_words(2, 4);
    for (const auto& u : words)
      for (const auto& v : words)
        CHECK(ctx.left_divides(testutil::to_word(p, u), testutil::to_word(p, v)) ==
              oracle::left_divides(rules, u, v));
  }

  TEST_CASE("atoms and height") {
    auto p = testutil::braid_presentation(4);
    CategoryContext ctx(p);
    CHECK(ctx.atoms().size() == 3);
    CHECK(ctx.height(w(p, "a b a c")) == 4);
    auto q = Presentation::monoid({"a", "b", "c"});
    q.add_relation(w(q, "c"), w(q, "a b"));
    CHECK_THROWS_AS(CategoryContext(q).atoms(), Unsupported);
    q.set_weights({1, 1, 2});
    CategoryContext cq(q);
    CHECK(cq.atoms().size() == 2);
    CHECK(cq.height(w(q, "c")) == 2);
  }

  TEST_CASE("closure fallback is inconclusive when the budget runs out") {
    auto p = Presentation::monoid({"a", "b"});
    p.add_relation(w(p, "a b"), w(p, "b b a"));
    p.add_relation(w(p, "a"), w(p, "a a"));
    ContextOptions o;
    o.max_closure_nodes = 50;
    CategoryContext ctx(p, o);
    CHECK_FALSE(ctx.complete());
    CHECK_THROWS_AS((void)ctx.equal(w(p, "a b"), w(p, "b")), Inconclusive);
  }
}
