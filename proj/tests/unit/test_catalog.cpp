#include <doctest.h>

#include "gk/catalog.hpp"
#include "helpers.hpp"

using namespace gk;
using testutil::w;

namespace {

std::size_t delta_length(const CatalogEntry& e) {
  return e.tables->word(e.map->delta(object_id(0))).size();
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("free Abelian monoids") {
    CHECK(free_abelian(1).tables->size() == 2);
    CHECK(free_abelian(2).tables->size() == 4);
    CHECK(free_abelian(3).tables->size() == 8);
    CHECK(free_abelian(2).tables->name(free_abelian(2).map->delta(object_id(0))) == "xy");
    CHECK_THROWS_AS(free_abelian(0), ValidationError);
    CHECK_THROWS_AS(free_abelian(9), ValidationError);
  }

  TEST_CASE("classical braid monoids") {
    long long fact = 1;
    for (int n = 2; n <= 5; ++n) {
      fact *= n;
      auto e = braid_classical(n);
      CHECK(static_cast<long long>(e.tables->size()) == fact);
      CHECK(delta_length(e) == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(e.context->presentation().generator_count() == static_cast<std::size_t>(n - 1));
    }
    auto b2 = braid_classical(2);
    CHECK(b2.context->atoms().size() == 1);
    CHECK(b2.tables->name(b2.map->delta(object_id(0))) == "a");
    CHECK_THROWS_AS(braid_classical(7), ValidationError);
  }

  TEST_CASE("dual braid monoids") {
    for (int n = 2; n <= 5; ++n) {
      auto e = braid_dual(n);
      CHECK(static_cast<long long>(e.tables->size()) == oracle::catalan(n));
      CHECK(delta_length(e) == static_cast<std::size_t>(n - 1));
      CHECK(e.context->presentation().generator_count() == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(e.context->complete());
    }
  }

  TEST_CASE("Artin-Tits monoids") {
    auto b2 = artin_tits("B2");
    CHECK(b2.tables->size() == 8);
    CHECK(delta_length(b2) == 4);
    auto g2 = artin_tits("G2");
    CHECK(g2.tables->size() == 12);
    CHECK(artin_tits("A3").tables->size() == 24);
    CHECK(artin_tits("B3").tables->size() == 48);
    CHECK(artin_tits("D4").tables->size() == 192);
    auto affine = artin_tits("Atilde1");
    CHECK_FALSE(affine.bounded());
    CHECK_FALSE(affine.tables);
    CHECK(affine.context->presentation().relations().empty());
    CHECK_THROWS_AS(artin_tits(std::vector<std::vector<int>>{{1, 5}, {5, 1}}), ValidationError);
    CHECK_THROWS_AS(artin_tits(std::vector<std::vector<int>>{{1, 3}, {2, 1}}), ValidationError);
    CHECK_THROWS_AS(artin_tits("E8"), ValidationError);
  }

  TEST_CASE("A2 and braid_classical(3) agree") {
    auto a = artin_tits("A2");
    auto b = braid_classical(3);
    const auto& pa = a.context->presentation();
    const auto& pb = b.context->presentation();
    auto words = oracle::all_words(2, 5);
    for (const auto& u : words)
      for (std::size_t i = 0; i < words.size(); i += 3) {
        bool ea = a.tables->word_problem(testutil::to_word(pa, u), testutil::to_word(pa, words[i]));
        bool eb = b.tables->word_problem(testutil::to_word(pb, u), testutil::to_word(pb, words[i]));
        CHECK(ea == eb);
      }
  }

  TEST_CASE("Klein bottle monoid") {
    auto k = klein_bottle();
    const auto& p = k.context->presentation();
    CHECK_FALSE(k.bounded());
    CHECK(k.context->equal(w(p, "a"), w(p, "b a b")));
    CHECK_FALSE(k.context->equal(w(p, "a b"), w(p, "b a")));
    CHECK(k.context->left_divides(w(p, "b b"), w(p, "a")));
  }

  TEST_CASE("catalog keys") {
    CHECK(catalog("braid-3").tables->size() == 6);
    CHECK(catalog("dual-4").tables->size() == 14);
    CHECK(catalog("free_abelian-2").tables->size() == 4);
    CHECK(catalog("artin-B2").tables->size() == 8);
    CHECK_FALSE(catalog("klein").bounded());
    CHECK_THROWS_AS(catalog("braid"), ValidationError);
    CHECK_THROWS_AS(catalog("nope-3"), ValidationError);
  }
}
