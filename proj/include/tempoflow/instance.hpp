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

#ifndef TEMPOFLOW_INSTANCE_HPP_
#define TEMPOFLOW_INSTANCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tempoflow/piecewise.hpp"

namespace tempoflow {

struct NodeData {
  std::string id;
  PiecewisePoly storage_cost;                    // c_v, per unit per time
  std::optional<PiecewisePoly> storage_capacity; // U_v; nullopt = +infinity
  PiecewisePoly supply_rate;                     // b_v, sign = supply/demand
  Rat initial_storage = Rat(0);                  // s_v >= 0
};

struct ArcData {
  std::string tail, head;
  Rat transit_time;        // tau_e, rational, >= 0 on input
  PiecewisePoly cost;      // c_e, per flow unit
  PiecewisePoly capacity;  // u_e >= 0, flow units per time
};

// A minimum-cost flow-over-time instance: directed graph with a time
// horizon and time-varying node/arc data.
struct Instance {
  Rat horizon;  // T > 0
  std::vector<NodeData> nodes;
  std::vector<ArcData> arcs;

  int node_index(const std::string& id) const;  // -1 if absent
  int arc_index(const std::string& tail, const std::string& head) const;
  std::vector<int> out_arcs(int v) const;
  std::vector<int> in_arcs(int v) const;

  // s_v + integral of b_v: cumulative supply/demand.
  PiecewisePoly cumulative_supply(int v) const;
};

struct Violation {
  std::string code;      // e.g. "parallel-arc", "negative-capacity"
  std::string location;  // node/arc id or "instance"
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
  std::vector<Violation> warnings;  // e.g. supply/demand imbalance
};

ValidationReport validate(const Instance& inst);

// Equivalent instance whose transit times and horizon are integers.
// scale maps new time units back: t_old = scale * t_new. Objective values
// are preserved exactly (rates rescale, amounts do not).
struct Rescaled {
  Instance instance;
  Rat scale;
};
Rescaled rescale_integral(const Instance& inst);

// 1 + (T*|E|) * sum_e sup|c_e|: large enough that no artificial arc appears
// in a least-cost augmenting path when a real one exists.
Rat default_big_m(const Instance& inst);

// The artificial-node construction: node "a*" with free unbounded storage,
// arc (s, a*) and arcs (a*, v) for v != s, all with zero transit time,
// cost bigM and capacity bigM. stock seeds a* with initial storage (the
// solver uses it to serve demands in phase 1).
Instance add_artificial(const Instance& inst, const std::string& source,
                        const Rat& big_m, const Rat& stock = Rat(0),
                        const std::string& name = "a*");

}  // namespace tempoflow

#endif  // TEMPOFLOW_INSTANCE_HPP_
