#include <benchmark/benchmark.h>

#include <random>

#include "gk/catalog.hpp"
#include "gk/conjugacy.hpp"
#include "gk/reversing.hpp"

namespace {

gk::Word random_word(const gk::Presentation& p, std::size_t len, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, p.generator_count() - 1);
  gk::Word w{{}, gk::object_id(0), gk::object_id(0)};
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back(gk::gen_id(pick(rng)));
  return w;
}

gk::SignedWord random_signed(const gk::Presentation& p, std::size_t len, std::mt19937& rng) {
  std::bernoulli_distribution neg(0.5);
  gk::SignedWord s{{}, gk::object_id(0), gk::object_id(0)};
  for (auto g : random_word(p, len, rng).letters) s.letters.push_back({g, neg(rng)});
  return s;
}

const gk::CatalogEntry& braid(int n) {
  static const gk::CatalogEntry b4 = gk::braid_classical(4);
  static const gk::CatalogEntry b5 = gk::braid_classical(5);
  return n == 4 ? b4 : b5;
}

void BM_Normalize(benchmark::State& state) {
  const auto& e = braid(static_cast<int>(state.range(0)));
  std::mt19937 rng(7);
  auto w = random_word(e.context->presentation(), static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(e.tables->normalize(w));
}
BENCHMARK(BM_Normalize)->ArgsProduct({{4, 5}, {16, 64, 256}});

void BM_DeltaNormalizeSigned(benchmark::State& state) {
  const auto& e = braid(static_cast<int>(state.range(0)));
  std::mt19937 rng(11);
  auto w = random_signed(e.context->presentation(), static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(gk::delta_normalize(*e.map, w));
}
BENCHMARK(BM_DeltaNormalizeSigned)->ArgsProduct({{4, 5}, {16, 64, 256}});

void BM_ReversingEquality(benchmark::State& state) {
  const auto& e = braid(4);
  std::mt19937 rng(13);
  const auto& p = e.context->presentation();
  auto u = random_word(p, static_cast<std::size_t>(state.range(0)), rng);
  auto v = e.tables->to_word(e.tables->normalize(u));
  for (auto _ : state) benchmark::DoNotOptimize(gk::word_equal_via_reversing(*e.context, u, v));
}
BENCHMARK(BM_ReversingEquality)->Arg(8)->Arg(16)->Arg(32);

void BM_Conjugacy(benchmark::State& state) {
  const auto& e = braid(4);
  std::mt19937 rng(17);
  const auto& p = e.context->presentation();
  auto g = random_signed(p, static_cast<std::size_t>(state.range(0)), rng);
  auto c = random_signed(p, 6, rng);
  auto dg = gk::delta_normalize(*e.map, g);
  auto h = gk::conj(*e.map, dg, gk::delta_normalize(*e.map, c));
  for (auto _ : state) benchmark::DoNotOptimize(gk::are_conjugate(*e.map, dg, h));
}
BENCHMARK(BM_Conjugacy)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
