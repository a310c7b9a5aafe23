#include <benchmark/benchmark.h>

#include "ringdef/constructions.hpp"
#include "ringdef/eval.hpp"
#include "ringdef/hensel.hpp"
#include "ringdef/normal_form.hpp"
#include "ringdef/verify.hpp"

using namespace ringdef;

static void BM_ClassicWitnessSearch(benchmark::State& state) {
  Certificate c = cert_int_classic();
  EvalSession ses;
  long t = 97;
  for (auto _ : state) {
    Verdict v = eval_formula(c.ring, c.formula, {{"t", Elem(t)}},
                             SearchBudget::defaults(), &ses);
    benchmark::DoNotOptimize(v.nodes);
  }
}
BENCHMARK(BM_ClassicWitnessSearch);

static void BM_HenselLift(benchmark::State& state) {
  IntPoly P = IntPoly::parse("X^2-8");
  for (auto _ : state) {
    BigInt r = hensel_lift(P, 7, 1, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_HenselLift)->Arg(4)->Arg(12)->Arg(48);

static void BM_PolyEnumeration(benchmark::State& state) {
  RingSpec P5 = RingSpec::poly(RingSpec::prime_field(5), "X");
  for (auto _ : state) {
    const auto& v = P5.enumerate(static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(v.size());
  }
}
BENCHMARK(BM_PolyEnumeration)->Arg(2)->Arg(4);

static void BM_ExhaustiveTruthSet(benchmark::State& state) {
  RingSpec Z12 = RingSpec::zmod(12);
  FiltrationData F = composition_series(Z12);
  std::vector<Certificate> certs;
  for (const Ideal& p : F.primes) {
    auto [Q, pi] = quotient(Z12, p);
    (void)pi;
    certs.push_back(cert_field(Q));
  }
  Certificate c = filtration_cert(F, certs);
  for (auto _ : state) {
    auto ts = truth_set_exhaustive(c.ring, c.formula);
    benchmark::DoNotOptimize(ts.size());
  }
}
BENCHMARK(BM_ExhaustiveTruthSet);

static void BM_UnionNormalForm(benchmark::State& state) {
  RingSpec Z6 = RingSpec::zmod(6);
  Report rep = random_formula_equivalence(Z6, 42, 1);
  Certificate c = cert_finite(Z6);
  for (auto _ : state) {
    NormalForm nf = union_normal_form(c.formula);
    benchmark::DoNotOptimize(nf.blocks.size());
  }
  (void)rep;
}
BENCHMARK(BM_UnionNormalForm);

BENCHMARK_MAIN();
