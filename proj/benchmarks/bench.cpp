#include <benchmark/benchmark.h>

#include "cwb/enumerability.hpp"
#include "cwb/lambda.hpp"
#include "cwb/library.hpp"
#include "cwb/numbering.hpp"
#include "cwb/oracle.hpp"
#include "cwb/pairing.hpp"
#include "cwb/representation.hpp"

namespace cwb {
namespace {

Tape unary(unsigned n) { return rep_unary().encode(Natural(n)); }

void BM_LeftMover(benchmark::State& state) {
  Machine m = left_mover();
  const auto fuel = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(m, unary(0), fuel));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LeftMover)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void BM_UnarySuccessor(benchmark::State& state) {
  Machine m = unary_successor();
  Tape in = unary(static_cast<unsigned>(state.range(0)));
  std::uint64_t steps = 0;
  for (auto _ : state) steps += run(m, in, 1u << 30).steps;
  state.SetItemsProcessed(static_cast<std::int64_t>(steps));
}
BENCHMARK(BM_UnarySuccessor)->Arg(10)->Arg(1000)->Arg(10000);

void BM_Proj2(benchmark::State& state) {
  Machine m = machine_proj2();
  const auto n = static_cast<unsigned>(state.range(0));
  Tape in = pair_mach(*unenc(unary(n)), *unenc(unary(n)));
  for (auto _ : state) benchmark::DoNotOptimize(run(m, in, 1u << 30));
}
BENCHMARK(BM_Proj2)->Arg(10)->Arg(100)->Arg(300);

void BM_PairMachRoundTrip(benchmark::State& state) {
  Tape a = unary(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unpair_mach(pair_mach(a, a)));
}
BENCHMARK(BM_PairMachRoundTrip)->Arg(10)->Arg(1000);

void BM_TapeNumber(benchmark::State& state) {
  Tape t = unary(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tape_of_number(tape_number(t), t.alphabet()));
}
BENCHMARK(BM_TapeNumber)->Arg(10)->Arg(200);

void BM_Dovetail(benchmark::State& state) {
  const auto rounds = static_cast<std::uint64_t>(state.range(0));
  Acceptor a{starts_with_one_acceptor(), Conventions::yes(Alphabet::delimited())};
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerator_from_acceptor(a, enc_word_universe(), rounds));
}
BENCHMARK(BM_Dovetail)->Arg(100)->Arg(1000);

void BM_JumpChain(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(empty_jump_chain(2, 1000, bound));
}
BENCHMARK(BM_JumpChain)->Arg(100)->Arg(1000);

void BM_LambdaDemo(benchmark::State& state) {
  auto w = lambda::parse_term("\\x.x x");
  for (auto _ : state) benchmark::DoNotOptimize(lambda::demo_halting(w, w, 1000));
}
BENCHMARK(BM_LambdaDemo);

void BM_ChurchArithmetic(benchmark::State& state) {
  // 2^n with Church numerals.
  std::string two = "(\\f x.f (f x))";
  std::string term = two;
  for (int i = 1; i < state.range(0); ++i) term = "(" + term + " " + two + ")";
  auto t = lambda::parse_term(term);
  for (auto _ : state) benchmark::DoNotOptimize(lambda::reduce_normal_order(t, 1u << 20));
}
BENCHMARK(BM_ChurchArithmetic)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
}  // namespace cwb

BENCHMARK_MAIN();
