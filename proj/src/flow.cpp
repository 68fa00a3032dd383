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

#include "tempoflow/flow.hpp"

namespace tempoflow {

FlowOverTime FlowOverTime::zero(const Instance& inst) {
  FlowOverTime x;
  x.rates.assign(inst.arcs.size(),
                 PiecewisePoly::zero(Rat(0), inst.horizon));
  return x;
}

std::vector<PiecewisePoly> storage(const Instance& inst,
                                   const FlowOverTime& x) {
  if (x.rates.size() != inst.arcs.size())
    throw DomainError("storage: flow has wrong arc count");
  std::vector<PiecewisePoly> cumulative;
  cumulative.reserve(inst.arcs.size());
  for (const auto& rate : x.rates)
    cumulative.push_back(rate.antiderivative());
  std::vector<PiecewisePoly> Y;
  for (size_t v = 0; v < inst.nodes.size(); ++v) {
    PiecewisePoly acc = inst.cumulative_supply(static_cast<int>(v));
    for (int e : inst.out_arcs(static_cast<int>(v)))
      acc = acc - cumulative[e];
    for (int e : inst.in_arcs(static_cast<int>(v)))
      acc = acc + cumulative[e].shift(inst.arcs[e].transit_time);
    Y.push_back(acc.normalized());
  }
  return Y;
}

namespace {

void report_negative(const PiecewisePoly& f, const std::string& constraint,
                     const std::string& where, FeasibilityReport* rep) {
  if (f.nonnegative_on_domain()) return;
  rep->feasible = false;
  size_t before = rep->violations.size();
  for (const auto& [a, b] : f.negative_regions())
    rep->violations.push_back({constraint, where, a, b});
  if (f.terminal_value() < 0)
    rep->violations.push_back({constraint, where, f.hi(), f.hi()});
  for (const Rat& bp : f.breakpoints())
    if (bp < f.hi() && f.eval(bp) < 0 && rep->violations.size() == before)
      rep->violations.push_back({constraint, where, bp, bp});
  if (rep->violations.size() == before)  // fall back to a coarse report
    rep->violations.push_back({constraint, where, f.lo(), f.hi()});
}

}  // namespace

FeasibilityReport check_feasible(const Instance& inst, const FlowOverTime& x) {
  FeasibilityReport rep;
  for (size_t e = 0; e < inst.arcs.size(); ++e) {
    const std::string id = inst.arcs[e].tail + "->" + inst.arcs[e].head;
    report_negative(x.rates[e], "x>=0", id, &rep);
    report_negative(inst.arcs[e].capacity - x.rates[e], "x<=u", id, &rep);
  }
  auto Y = storage(inst, x);
  for (size_t v = 0; v < inst.nodes.size(); ++v) {
    report_negative(Y[v], "Y>=0", inst.nodes[v].id, &rep);
    if (inst.nodes[v].storage_capacity)
      report_negative(*inst.nodes[v].storage_capacity - Y[v], "Y<=U",
                      inst.nodes[v].id, &rep);
  }
  return rep;
}

Rat primal_objective(const Instance& inst, const FlowOverTime& x) {
  if (x.rates.size() != inst.arcs.size())
    throw DomainError("primal_objective: flow has wrong arc count");
  Rat total(0);
  for (size_t e = 0; e < inst.arcs.size(); ++e)
    total += (inst.arcs[e].cost * x.rates[e]).integral();
  auto Y = storage(inst, x);
  for (size_t v = 0; v < inst.nodes.size(); ++v)
    if (!inst.nodes[v].storage_cost.is_identically_zero())
      total += (inst.nodes[v].storage_cost * Y[v]).integral();
  return total;
}

ResidualNetwork residual(const Instance& inst, const FlowOverTime& x) {
  auto rep = check_feasible(inst, x);
  if (!rep.feasible)
    throw ContractViolation("residual: flow is infeasible");
  ResidualNetwork R;
  R.inst = &inst;
  R.flow = x;
  R.storage_fn = storage(inst, x);
  for (size_t e = 0; e < inst.arcs.size(); ++e) {
    const auto& arc = inst.arcs[e];
    R.fwd_residual.push_back((arc.capacity - x.rates[e]).normalized());
    R.bwd_residual.push_back(x.rates[e].shift(arc.transit_time).normalized());
    R.fwd_cost.push_back(arc.cost);
    R.bwd_cost.push_back((-arc.cost.shift(arc.transit_time)).normalized());
  }
  for (size_t v = 0; v < inst.nodes.size(); ++v) {
    if (inst.nodes[v].storage_capacity)
      R.upper_storage.push_back(
          (*inst.nodes[v].storage_capacity - R.storage_fn[v]).normalized());
    else
      R.upper_storage.push_back(std::nullopt);
    R.lower_storage.push_back(R.storage_fn[v]);
  }
  return R;
}

}  // namespace tempoflow
