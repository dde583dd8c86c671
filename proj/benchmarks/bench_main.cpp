// Copyright 2026 The MathSculpt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "mathsculpt/expr.hpp"
#include "mathsculpt/implicit.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/tessellate.hpp"

using namespace mathsculpt;
namespace ts = mathsculpt::tessellate;
namespace im = mathsculpt::implicit;

static void BM_IcosphereBudget(benchmark::State& state) {
  ts::QualityParams q;
  q.max_cell_area = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::primitive(ts::SphereSpec{}, q));
}
BENCHMARK(BM_IcosphereBudget)->Arg(100)->Arg(2000)->Arg(20000);

static void BM_MarchingCubesBall(benchmark::State& state) {
  const auto ball = im::CsgNode::leaf(
      expr::to_signed_field(expr::parse_expression("x^2 + y^2 + z^2 <= 1")));
  im::GridSpec g;
  g.box = {{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}};
  const int n = static_cast<int>(state.range(0));
  g.resolution = {n, n, n};
  for (auto _ : state) benchmark::DoNotOptimize(im::marching_cubes(ball, g));
  state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_MarchingCubesBall)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_EncodeBinaryStl(benchmark::State& state) {
  const TriangleMesh m = ts::icosphere(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(meshio::encode_stl(m, meshio::StlFormat::kBinary));
  }
  state.SetBytesProcessed(state.iterations() * (84 + 50 * static_cast<int64_t>(m.triangle_count())));
}
BENCHMARK(BM_EncodeBinaryStl)->Arg(4)->Arg(6);

static void BM_ParityField(benchmark::State& state) {
  const SignedField f = im::mesh_to_field(ts::icosphere(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (auto _ : state) benchmark::DoNotOptimize(f({u(rng), u(rng), u(rng)}));
}
BENCHMARK(BM_ParityField)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
