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

#include "tempoflow/instance.hpp"

#include <map>
#include <set>

namespace tempoflow {

int Instance::node_index(const std::string& id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return static_cast<int>(i);
  return -1;
}

int Instance::arc_index(const std::string& tail,
                        const std::string& head) const {
  for (size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].tail == tail && arcs[i].head == head)
      return static_cast<int>(i);
  return -1;
}

std::vector<int> Instance::out_arcs(int v) const {
  std::vector<int> out;
  for (size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].tail == nodes[v].id) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Instance::in_arcs(int v) const {
  std::vector<int> out;
  for (size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].head == nodes[v].id) out.push_back(static_cast<int>(i));
  return out;
}

PiecewisePoly Instance::cumulative_supply(int v) const {
  PiecewisePoly B = nodes[v].supply_rate.antiderivative();
  return B + PiecewisePoly::constant(nodes[v].initial_storage, Rat(0), horizon);
}

ValidationReport validate(const Instance& inst) {
  ValidationReport rep;
  auto fail = [&](std::string code, std::string loc, std::string det) {
    rep.valid = false;
    rep.violations.push_back({std::move(code), std::move(loc), std::move(det)});
  };
  if (!(inst.horizon > 0)) fail("horizon", "instance", "T must be positive");

  std::set<std::string> ids;
  for (const auto& n : inst.nodes) {
    if (!ids.insert(n.id).second)
      fail("duplicate-node", n.id, "node id repeats");
    if (n.initial_storage < 0)
      fail("negative-initial-storage", n.id, "s_v must be >= 0");
    auto check_fn = [&](const PiecewisePoly& f, const char* what) {
      if (f.lo() != 0 || f.hi() != inst.horizon)
        fail("horizon-mismatch", n.id,
             std::string(what) + " not defined on [0, T]");
    };
    check_fn(n.storage_cost, "storage_cost");
    check_fn(n.supply_rate, "supply_rate");
    if (n.storage_capacity) {
      check_fn(*n.storage_capacity, "storage_capacity");
      if (!n.storage_capacity->nonnegative_on_domain())
        fail("negative-storage-capacity", n.id, "U_v must be >= 0 on [0, T]");
      if (n.storage_capacity->eval(Rat(0)) < n.initial_storage)
        fail("initial-storage-overflow", n.id, "s_v exceeds U_v(0)");
    }
  }

  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& a : inst.arcs) {
    std::string id = a.tail + "->" + a.head;
    if (inst.node_index(a.tail) < 0 || inst.node_index(a.head) < 0)
      fail("dangling-arc", id, "endpoint not a node");
    if (a.tail == a.head) fail("self-loop", id, "self loops not allowed");
    // Backward arcs live in the opposite orientation, so both (v,w) and
    // (w,v) in E would collide in the residual network.
    auto key = a.tail < a.head ? std::make_pair(a.tail, a.head)
                               : std::make_pair(a.head, a.tail);
    if (!pairs.insert(key).second) fail("parallel-arc", id, "node pair reused");
    if (a.transit_time < 0)
      fail("negative-transit", id, "tau_e must be >= 0 on input");
    if (a.cost.lo() != 0 || a.cost.hi() != inst.horizon ||
        a.capacity.lo() != 0 || a.capacity.hi() != inst.horizon)
      fail("horizon-mismatch", id, "arc functions not defined on [0, T]");
    else if (!a.capacity.nonnegative_on_domain())
      fail("negative-capacity", id, "u_e must be >= 0 on [0, T]");
  }

  // Exact balance is a warning: the solver must detect infeasibility
  // rather than reject up front.
  if (rep.valid) {
    Rat total(0);
    for (size_t v = 0; v < inst.nodes.size(); ++v)
      total += inst.cumulative_supply(static_cast<int>(v)).eval(inst.horizon);
    if (total != 0)
      rep.warnings.push_back(
          {"imbalance", "instance",
           "sum of B_v(T) is " + rat_str(total) + ", not 0"});
  }
  return rep;
}

namespace {

Int lcm(const Int& a, const Int& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// time reparameterization t_old = scale * t_new for one function;
// rate = true multiplies values by scale (so integrals are preserved).
PiecewisePoly retime(const PiecewisePoly& f, const Rat& scale,
                     bool rate_like) {
  std::vector<Rat> nb;
  nb.reserve(f.breakpoints().size());
  for (const Rat& b : f.breakpoints()) nb.push_back(b / scale);
  std::vector<Poly> np;
  for (const auto& p : f.pieces()) {
    // q(t) = p(scale * t)
    std::vector<Rat> c = p.coeffs();
    Rat pow(1);
    for (auto& coef : c) {
      coef *= pow;
      pow *= scale;
    }
    Poly q(std::move(c));
    np.push_back(rate_like ? q.scaled(scale) : q);
  }
  Rat term = f.terminal_value();
  if (rate_like) term *= scale;
  return PiecewisePoly(std::move(nb), std::move(np), std::move(term));
}

}  // namespace

Rescaled rescale_integral(const Instance& inst) {
  Int denominators(1);
  denominators = lcm(denominators, den(inst.horizon));
  for (const auto& a : inst.arcs)
    denominators = lcm(denominators, den(a.transit_time));
  Rat scale(Int(1), denominators);
  if (scale == 1) return {inst, Rat(1)};

  Instance out;
  out.horizon = inst.horizon / scale;
  for (const auto& n : inst.nodes) {
    NodeData nd;
    nd.id = n.id;
    nd.storage_cost = retime(n.storage_cost, scale, true);
    if (n.storage_capacity)
      nd.storage_capacity = retime(*n.storage_capacity, scale, false);
    nd.supply_rate = retime(n.supply_rate, scale, true);
    nd.initial_storage = n.initial_storage;
    out.nodes.push_back(std::move(nd));
  }
  for (const auto& a : inst.arcs) {
    ArcData ad;
    ad.tail = a.tail;
    ad.head = a.head;
    ad.transit_time = a.transit_time / scale;
    ad.cost = retime(a.cost, scale, false);      // cost per unit: a value
    ad.capacity = retime(a.capacity, scale, true);  // a rate
    out.arcs.push_back(std::move(ad));
  }
  return {std::move(out), scale};
}

Rat default_big_m(const Instance& inst) {
  Rat cost_sum(0);
  for (const auto& a : inst.arcs) cost_sum += a.cost.sup_abs();
  return 1 + inst.horizon * Rat(Int(inst.arcs.size())) * cost_sum;
}

Instance add_artificial(const Instance& inst, const std::string& source,
                        const Rat& big_m, const Rat& stock,
                        const std::string& name) {
  if (inst.node_index(name) >= 0)
    throw DomainError("artificial node name '" + name + "' already in use");
  if (inst.node_index(source) < 0)
    throw DomainError("source node '" + source + "' does not exist");
  Instance out = inst;
  const Rat& T = inst.horizon;
  NodeData a;
  a.id = name;
  a.storage_cost = PiecewisePoly::zero(Rat(0), T);
  a.storage_capacity = std::nullopt;  // infinite
  a.supply_rate = PiecewisePoly::zero(Rat(0), T);
  a.initial_storage = stock;
  out.nodes.push_back(std::move(a));
  auto mk_arc = [&](const std::string& tail, const std::string& head) {
    ArcData e;
    e.tail = tail;
    e.head = head;
    e.transit_time = 0;
    e.cost = PiecewisePoly::constant(big_m, Rat(0), T);
    e.capacity = PiecewisePoly::constant(big_m, Rat(0), T);
    out.arcs.push_back(std::move(e));
  };
  mk_arc(source, name);
  for (const auto& n : inst.nodes)
    if (n.id != source) mk_arc(name, n.id);
  return out;
}

}  // namespace tempoflow
