// Copyright 2026 The ckah authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ckah/downward_closure.h"
#include "ckah/pomset.h"
#include "ckah/poset.h"

namespace {

// a1 || a2 || ... || an: the worst case, every total order is below it.
ckah::Pomset Antichain(int n) {
  std::vector<ckah::Pomset> parts;
  for (int i = 0; i < n; ++i) parts.push_back(ckah::Letter("a" + std::to_string(i)));
  return ckah::ParAll(parts);
}

// (a;b || c;d);(e || f);... built from n pairs.
ckah::Pomset Ladder(int n) {
  std::vector<ckah::Pomset> rungs;
  for (int i = 0; i < n; ++i) {
    rungs.push_back(ckah::Par(ckah::Letter("l" + std::to_string(i)),
                              ckah::Letter("r" + std::to_string(i))));
  }
  return ckah::SeqAll(rungs);
}

void BM_DownwardClosureAntichain(benchmark::State& state) {
  const ckah::Pomset v = Antichain(static_cast<int>(state.range(0)));
  size_t members = 0;
  for (auto _ : state) {
    members = ckah::DownwardClosure(v).size();
    benchmark::DoNotOptimize(members);
  }
  state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_DownwardClosureAntichain)->DenseRange(2, 6);

void BM_DownwardClosureLadder(benchmark::State& state) {
  const ckah::Pomset v = Ladder(static_cast<int>(state.range(0)));
  size_t members = 0;
  for (auto _ : state) {
    members = ckah::DownwardClosure(v).size();
    benchmark::DoNotOptimize(members);
  }
  state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_DownwardClosureLadder)->DenseRange(1, 6);

void BM_SubsumesSearch(benchmark::State& state) {
  const ckah::Pomset v = Ladder(static_cast<int>(state.range(0)));
  std::vector<ckah::Pomset> chain;
  for (const ckah::Pomset& rung : v.SeqComponents()) {
    for (const ckah::Pomset& c : rung.ParComponents()) chain.push_back(c);
  }
  const ckah::Pomset u = ckah::SeqAll(chain);
  const ckah::LabelledPoset pv = ckah::ToPoset(v), pu = ckah::ToPoset(u);
  for (auto _ : state) benchmark::DoNotOptimize(ckah::PosetSubsumes(pv, pu));
}
BENCHMARK(BM_SubsumesSearch)->DenseRange(2, 6, 2);

void BM_SubsumesStructural(benchmark::State& state) {
  const ckah::Pomset v = Ladder(static_cast<int>(state.range(0)));
  std::vector<ckah::Pomset> chain;
  for (const ckah::Pomset& rung : v.SeqComponents()) {
    for (const ckah::Pomset& c : rung.ParComponents()) chain.push_back(c);
  }
  const ckah::Pomset u = ckah::SeqAll(chain);
  for (auto _ : state) benchmark::DoNotOptimize(ckah::SubsumesStructural(v, u));
}
BENCHMARK(BM_SubsumesStructural)->DenseRange(2, 12, 2);

}  // namespace

BENCHMARK_MAIN();
