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

#ifndef TEMPOFLOW_FLOW_HPP_
#define TEMPOFLOW_FLOW_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tempoflow/instance.hpp"

namespace tempoflow {

// Arc inflow rates x_e, one per instance arc, defined on [0, T].
struct FlowOverTime {
  std::vector<PiecewisePoly> rates;

  static FlowOverTime zero(const Instance& inst);
};

// Node storage induced by the conservation constraint:
// Y_v = B_v - sum_out X_e + sum_in shift(X_e, tau_e), with Y_v(0) = s_v.
std::vector<PiecewisePoly> storage(const Instance& inst,
                                   const FlowOverTime& x);

struct FeasibilityViolation {
  std::string constraint;  // "x>=0" | "x<=u" | "Y>=0" | "Y<=U"
  std::string location;    // arc or node id
  Rat from, to;            // violating interval
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<FeasibilityViolation> violations;
};

FeasibilityReport check_feasible(const Instance& inst, const FlowOverTime& x);

// Exact rational value of the transit-cost and storage-cost integrals.
Rat primal_objective(const Instance& inst, const FlowOverTime& x);

// Residual network of a feasible flow: forward slack, backward (shifted)
// rates, storage headroom and stored amounts, and the signed backward
// costs c_rev(t) = -c_e(t - tau_e).
struct ResidualNetwork {
  const Instance* inst = nullptr;
  FlowOverTime flow;
  std::vector<PiecewisePoly> storage_fn;              // Y_v
  std::vector<PiecewisePoly> fwd_residual;            // u_e - x_e
  std::vector<PiecewisePoly> bwd_residual;            // shift(x_e, tau_e)
  std::vector<PiecewisePoly> fwd_cost;                // c_e
  std::vector<PiecewisePoly> bwd_cost;                // -shift(c_e, tau_e)
  std::vector<std::optional<PiecewisePoly>> upper_storage;  // U_v - Y_v
  std::vector<PiecewisePoly> lower_storage;           // Y_v

  const Rat& horizon() const { return inst->horizon; }
};

ResidualNetwork residual(const Instance& inst, const FlowOverTime& x);

}  // namespace tempoflow

#endif  // TEMPOFLOW_FLOW_HPP_
