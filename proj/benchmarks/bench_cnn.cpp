// Copyright 2026 The hofnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "hofnet/cnn.hpp"

namespace {

// Arg 0: base filter count (256 gives the full 256/256/512 model).
hofnet::CnnModel make_model(int base) {
  hofnet::CnnConfig c = hofnet::CnnConfig::scaled(200, base, 256);
  hofnet::CnnModel m(c, 5000);
  m.initialize(1);
  return m;
}

std::vector<std::int32_t> tweet(std::size_t len) {
  std::vector<std::int32_t> ids(len);
  for (std::size_t i = 0; i < len; ++i) ids[i] = static_cast<std::int32_t>(2 + (i * 37) % 4990);
  return ids;
}

void BM_CnnForward(benchmark::State& state) {
  const auto m = make_model(static_cast<int>(state.range(0)));
  const auto ids = tweet(30);
  for (auto _ : state) benchmark::DoNotOptimize(hofnet::predict_probability(ids, m));
}
BENCHMARK(BM_CnnForward)->Arg(32)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_CnnForwardBackward(benchmark::State& state) {
  const auto m = make_model(static_cast<int>(state.range(0)));
  const auto ids = tweet(30);
  hofnet::Rng rng(3);
  std::vector<hofnet::ForwardTrace<float>> traces(1);
  const std::vector<int> labels{1};
  hofnet::CnnModel grad = m;
  for (auto _ : state) {
    hofnet::forward<float>(ids, m, hofnet::Mode::Train, rng, &traces[0]);
    grad.set_zero();
    hofnet::backward<float>(traces, labels, m, grad);
    benchmark::DoNotOptimize(grad.output_bias[0]);
  }
}
BENCHMARK(BM_CnnForwardBackward)->Arg(32)->Arg(256)->Unit(benchmark::kMicrosecond);

}  // namespace
