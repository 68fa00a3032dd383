// Copyright 2026 The tempoflow Authors
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

#ifndef TEMPOFLOW_FIXTURES_HPP_
#define TEMPOFLOW_FIXTURES_HPP_

#include <cstdint>

#include "tempoflow/flow.hpp"
#include "tempoflow/instance.hpp"

namespace tempoflow::fixtures {

// Two nodes s, t and one arc with c_e = u_e = 2t on [0, 1], tau = 0,
// U_s = U_t = 1, b_s = -b_t = t. The unique feasible flow is x_e = t.
Instance example_one();
FlowOverTime example_one_flow();

// Three nodes s, v, t in a line, T = 2, step costs and kinked capacities,
// one unit of initial storage at s. Matches the worked three-node network
// with flow 2t into the first arc on [0,1) and 2t-2 into the second on
// [1,2]. By itself carries no demand encoding (b = 0).
Instance example_a1();
FlowOverTime example_a1_flow();

// Same network plus an explicit demand profile at t (rate -4 on
// [7/4, 2]) so solvers are forced to deliver the stored unit. The
// reference flow above stays feasible for it.
Instance example_a1_with_demand();

// Deterministic small piecewise-linear instances for property testing:
// built around a known feasible flow, continuous costs, integral transit
// times, zero storage costs and zero initial storage.
struct CorpusEntry {
  Instance instance;
  FlowOverTime witness;  // feasible by construction
  std::string source;    // designated source node id
};
CorpusEntry corpus_instance(uint64_t seed);

// Tiny deterministic PRNG (splitmix64) so fixtures never depend on
// platform RNG details.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  // uniform integer in [lo, hi]
  int64_t range(int64_t lo, int64_t hi);
  // rational with denominator in {1, 2, 4}
  Rat small_rat(int64_t lo, int64_t hi);
};

}  // namespace tempoflow::fixtures

#endif  // TEMPOFLOW_FIXTURES_HPP_
