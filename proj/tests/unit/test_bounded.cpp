#include <doctest.h>

#include "gk/bounded.hpp"
#include "gk/catalog.hpp"
#include "gk/io.hpp"
#include "gk/reversing.hpp"
#include "helpers.hpp"

using namespace gk;
using testutil::sw;
using testutil::w;

TEST_SUITE("bounded") {
  TEST_CASE("Garside map of B3") {
    auto e = braid_classical(3);
    const auto& gm = *e.map;
    const auto& t = gm.tables();
    const auto& p = e.context->presentation();
    int delta = gm.delta(object_id(0));
    CHECK(t.word(delta).size() == 3);
    CHECK(gm.divisors(object_id(0)).size() == 6);
    int a = t.element_of(gen_id(0)), b = t.element_of(gen_id(1));
    CHECK(gm.phi(a) == b);
    CHECK(gm.phi(b) == a);
    CHECK(e.context->equal(t.word(gm.complement(a)), w(p, "b a")));
    CHECK(gm.complement(delta) == t.identity(object_id(0)));
  }

  TEST_CASE("conjugation law and complement duality") {
    for (auto e : {braid_classical(3), braid_classical(4), braid_dual(4), free_abelian(3), artin_tits("B3")}) {
      const auto& gm = *e.map;
      const auto& t = gm.tables();
      const Word& delta = t.word(gm.delta(object_id(0)));
      for (int g : gm.divisors(object_id(0))) {
        CHECK(e.context->equal(concat(delta, t.word(gm.phi(g))), concat(t.word(g), delta)));
        CHECK(e.context->equal(concat(t.word(g), t.word(gm.complement(g))), delta));
        CHECK(gm.phi_inverse(gm.phi(g)) == g);
      }
    }
  }

  TEST_CASE("Delta-normal forms") {
    auto e = braid_classical(3);
    const auto& gm = *e.map;
    const auto& p = e.context->presentation();
    CHECK(display(gm, delta_normalize(gm, w(p, "a b a b"))) == "D^1 . b");
    CHECK(display(gm, delta_normalize(gm, w(p, "a b a a b a"))) == "D^2");
    CHECK(display(gm, delta_normalize(gm, w(p, "a b"))) == "ab");
    CHECK(display(gm, delta_normalize(gm, sw(p, "1"))) == "D^0");
    auto inv = delta_normalize(gm, sw(p, "a^-1"));
    CHECK(inv.inf == -1);
    CHECK(inv.sup() == 0);
    CHECK(groupoid_equal(*e.context, to_signed_word(gm, inv), sw(p, "a^-1")));
  }

  TEST_CASE("Delta-normal forms agree with the Burau oracle") {
    auto e = braid_classical(3);
    const auto& gm = *e.map;
    const auto& p = e.context->presentation();
    for (const auto& sl : oracle::reduced_signed_words(2, 5)) {
      auto d = delta_normalize(gm, testutil::to_signed(p, sl));
      auto back = testutil::signed_letters(to_signed_word(gm, d));
      CHECK(oracle::burau3(back) == oracle::burau3(sl));
      CHECK(delta_normal(gm, gm.tables().normalize(gm.tables().to_word(
                                 NormalDecomposition{d.factors, object_id(0), object_id(0)}))) ==
            DeltaNormal{0, d.factors});
      auto i = inverse(gm, d);
      CHECK(multiply(gm, d, i) == DeltaNormal{});
    }
  }

  TEST_CASE("free Abelian Delta") {
    for (int n : {1, 2, 3}) {
      auto e = free_abelian(n);
      CHECK(e.map->divisors(object_id(0)).size() == (std::size_t{1} << n));
      CHECK(e.tables->word(e.map->delta(object_id(0))).size() == static_cast<std::size_t>(n));
      for (int g : e.map->divisors(object_id(0))) CHECK(e.map->phi(g) == g);
    }
  }

  TEST_CASE("building a Garside map from a presentation") {
    auto b3 = testutil::braid_presentation(3);
    CategoryContext ctx(b3);
    auto gm = build_garside_map(ctx);
    REQUIRE(std::holds_alternative<GarsideMap>(gm));
    CHECK(std::get<GarsideMap>(gm).divisors(object_id(0)).size() == 6);

    auto q = Presentation::monoid({"a", "b", "c"});
    q.add_relation(w(q, "a b"), w(q, "b a"));
    CategoryContext cq(q);
    auto none = build_garside_map(cq);
    REQUIRE(std::holds_alternative<Unbounded>(none));
  }

  TEST_CASE("lcm and gcd of positive words") {
    auto e = braid_classical(4);
    const auto& gm = *e.map;
    const auto& ctx = *e.context;
    const auto& p = ctx.presentation();
    CHECK(ctx.equal(right_lcm(gm, w(p, "a"), w(p, "c")), w(p, "a c")));
    CHECK(ctx.equal(right_lcm(gm, w(p, "a"), w(p, "b")), w(p, "a b a")));
    CHECK(ctx.equal(gcd(gm, w(p, "a b c"), w(p, "a c")), w(p, "a")));
    CHECK(ctx.equal(gcd(gm, w(p, "a c b"), w(p, "c a")), w(p, "a c")));
    CHECK(ctx.equal(left_lcm(gm, w(p, "a"), w(p, "b")), w(p, "a b a")));
    CHECK(ctx.equal(right_gcd(gm, w(p, "a b c"), w(p, "b c")), w(p, "b c")));
  }
}
