#include <benchmark/benchmark.h>

#include <braidloom/codec.hpp>
#include <braidloom/invariants.hpp>
#include <braidloom/moves.hpp>
#include <braidloom/pure.hpp>
#include <braidloom/tables.hpp>
#include <braidloom/weave.hpp>

#include <random>
#include <vector>

using namespace braidloom;

namespace {

std::vector<BraidWord> random_words(int strands, int length, int count) {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> index(1, strands - 1), sign(0, 1);
  std::vector<BraidWord> out;
  for (int k = 0; k < count; ++k) {
    std::vector<int> l;
    for (int t = 0; t < length; ++t) l.push_back(sign(gen) ? index(gen) : -index(gen));
    out.emplace_back(strands, l);
  }
  return out;
}

void BM_Weave(benchmark::State& state) {
  const auto words = random_words(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(weave(words[k++ % words.size()]));
}
BENCHMARK(BM_Weave)->Args({4, 12})->Args({6, 16})->Args({8, 16});

void BM_Comb(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<BraidWord> pure;
  for (const auto& w : random_words(n, static_cast<int>(state.range(1)), 64))
    pure.push_back(w * permutation_lift(permutation_of(w)).inverse());
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(comb(pure[k++ % pure.size()], CombOrder::descending));
}
BENCHMARK(BM_Comb)->Args({4, 12})->Args({5, 20})->Args({6, 30});

void BM_MoveI(benchmark::State& state) {
  const WovenBraid omega = WovenBraid::single(AWord::parse("A[1,5] A[3,5]^-1 A[2,5]", 5));
  const AWord kappa = kn_element(AWord::parse("A[2,5] A[4,5]^-1", 5));
  for (auto _ : state) benchmark::DoNotOptimize(move_I(omega, kappa));
}
BENCHMARK(BM_MoveI);

void BM_Homfly(benchmark::State& state) {
  const auto words = random_words(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 16);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(homfly(words[k++ % words.size()]));
}
BENCHMARK(BM_Homfly)->Args({3, 12})->Args({4, 20})->Args({5, 24});

void BM_Bracket(benchmark::State& state) {
  const auto words = random_words(4, static_cast<int>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(jones_via_bracket(words[k++ % words.size()]));
}
BENCHMARK(BM_Bracket)->Arg(10)->Arg(14)->Arg(18);

void BM_DecodeTable(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& row : load_table())
      for (const auto& e : row.entries) benchmark::DoNotOptimize(decode_int(WebCode{e.code}));
}
BENCHMARK(BM_DecodeTable);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_webs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
