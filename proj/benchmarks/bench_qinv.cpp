#include <benchmark/benchmark.h>

#include "qinv/algebras.hpp"
#include "qinv/braiding.hpp"
#include "qinv/invariants.hpp"
#include "qinv/linalg.hpp"

using namespace qinv;

// straighten Ψ^{(1,2)} Ψ^{(1,2)} ... in A_2
static void BM_NormalFormPsiPower(benchmark::State& state) {
  Handle h = build_am({Family::D, 2}, 2);
  NCPolynomial p = psi_word_form(*h, 1, 2), acc(Scalar(1L));
  for (int i = 0; i < state.range(0); ++i) acc = acc * p;
  for (auto _ : state) benchmark::DoNotOptimize(h->reduce(acc));
}
BENCHMARK(BM_NormalFormPsiPower)->Arg(1)->Arg(2)->Arg(3);

// reverse-ordered word of every letter: worst case for the rewriting order
static void BM_NormalFormReversed(benchmark::State& state) {
  Handle h = build_am({Family::B, 1}, 2);
  Word w;
  for (int i = static_cast<int>(h->alphabet.size()) - 1; i >= 0 && static_cast<int>(w.size()) < state.range(0); --i)
    w.push_back(static_cast<LetterId>(i));
  NCPolynomial p = NCPolynomial::monomial(w);
  for (auto _ : state) benchmark::DoNotOptimize(h->reduce(p));
}
BENCHMARK(BM_NormalFormReversed)->Arg(3)->Arg(4)->Arg(5);

// exact nullspace of the invariance equations in one multidegree
static void BM_InvariantBasis(benchmark::State& state) {
  Handle h = build_am({Family::D, 2}, 2);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_basis(*h, {d, d}));
}
BENCHMARK(BM_InvariantBasis)->Arg(1)->Arg(2);

// nullspace of (Ř - q): the symmetric summand of V⊗V
static void BM_NullspaceRcheck(benchmark::State& state) {
  const LieTypeSpec s{Family::D, static_cast<int>(state.range(0))};
  const LinearOperator& R = rcheck(s);
  const auto rows = rows_of(R - LinearOperator::identity(R.rows()).scaled(Scalar::q()));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(rows, R.cols()));
}
BENCHMARK(BM_NullspaceRcheck)->Arg(2)->Arg(3);

static void BM_OracleProduct(benchmark::State& state) {
  Handle h = build_am({Family::C, 2}, 2);
  NCPolynomial x = h->X(2, 1) * h->X(2, 4), y = h->X(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_oracle_product(*h, x, y));
}
BENCHMARK(BM_OracleProduct);

BENCHMARK_MAIN();
