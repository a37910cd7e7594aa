// Benchmarks for the hot paths: normal-form expansion (including the
// exponential union-of-tensors family), cube construction, and the greedy
// solve over exhaustive criteria.

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "tselect/normalize.hpp"
#include "tselect/parse.hpp"
#include "tselect/solver.hpp"

namespace {

using namespace tselect;

// N parameters, criterion tensor of N copies of the N-way union "some
// parameter is zero": expands to exactly 2^N - 1 terms.
Instance blowup_instance(std::uint32_t n) {
  Instance inst;
  for (std::uint32_t i = 0; i < n; ++i)
    inst.decls.params.push_back(
        ParameterDecl{"q" + std::to_string(i + 1), {"0", "1"}});
  inst.constraint = ConstraintExpr::make_true();
  std::vector<CriterionExpr> factors;
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<CriterionExpr> alts;
    for (std::uint32_t i = 0; i < n; ++i)
      alts.push_back(CriterionExpr::atom(CriterionExpr::Kind::Eq, i, 0));
    factors.push_back(CriterionExpr::node(CriterionExpr::Kind::Union, std::move(alts)));
  }
  inst.criterion =
      CriterionExpr::node(CriterionExpr::Kind::Tensor, std::move(factors));
  return inst;
}

// k parameters with v values each, criterion EXHAUSTIVE over all of them:
// v^k singleton cubes.
Instance exhaustive_instance(std::uint32_t k, std::uint32_t v) {
  Instance inst;
  std::vector<std::uint32_t> all;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<std::string> range;
    for (std::uint32_t j = 0; j < v; ++j) range.push_back(std::to_string(j));
    inst.decls.params.push_back(ParameterDecl{"p" + std::to_string(i + 1), range});
    all.push_back(i);
  }
  inst.constraint = ConstraintExpr::make_true();
  inst.criterion = CriterionExpr::exhaustive(all);
  return inst;
}

const std::string kSampleDocument = R"(declaration
  separator_1 : {"/", "z"}
  separator_2 : {"/", "x"}
  string_1 : {"", "a", "ab", "abcd"}
  string_2 : {"", "a", "ab", "abcd"}

constraint
  separator_1 = "/" or separator_2 = "/"

criterion
  EACH(string_1 : "", "a", "ab", "abcd") ++ EXHAUSTIVE(separator_1, separator_2)
)";

void BM_NormalizeBlowup(benchmark::State& state) {
  Instance inst = blowup_instance((std::uint32_t)state.range(0));
  for (auto _ : state) {
    NormalizedInstance ni = normalize_instance(inst, 1u << 21);
    benchmark::DoNotOptimize(ni.s_cubes.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalizeBlowup)->DenseRange(4, 12, 2)->Complexity();

void BM_SolveExhaustive(benchmark::State& state) {
  Instance inst =
      exhaustive_instance((std::uint32_t)state.range(0), (std::uint32_t)state.range(1));
  NormalizedInstance ni = normalize_instance(inst, 1u << 21);
  for (auto _ : state) {
    auto points = minimal_adequate_set(ni);
    benchmark::DoNotOptimize(points.size());
  }
}
BENCHMARK(BM_SolveExhaustive)->Args({2, 8})->Args({3, 8})->Args({4, 8});

void BM_ParseDocument(benchmark::State& state) {
  for (auto _ : state) {
    Instance inst = parse_instance(kSampleDocument);
    benchmark::DoNotOptimize(inst.decls.size());
  }
}
BENCHMARK(BM_ParseDocument);

void BM_EndToEndSample(benchmark::State& state) {
  Instance inst = parse_instance(kSampleDocument);
  for (auto _ : state) {
    NormalizedInstance ni = normalize_instance(inst);
    auto points = minimal_adequate_set(ni);
    benchmark::DoNotOptimize(points.size());
  }
}
BENCHMARK(BM_EndToEndSample);

}  // namespace

BENCHMARK_MAIN();
