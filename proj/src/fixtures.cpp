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

#include "tempoflow/fixtures.hpp"

#include <set>

namespace tempoflow::fixtures {

namespace {

PiecewisePoly pw(std::vector<Rat> bps, std::vector<std::vector<Rat>> pieces,
                 Rat terminal) {
  std::vector<Poly> polys;
  polys.reserve(pieces.size());
  for (auto& c : pieces) polys.push_back(Poly(std::move(c)));
  return PiecewisePoly(std::move(bps), std::move(polys), std::move(terminal));
}

NodeData node(std::string id, std::optional<PiecewisePoly> capacity,
              PiecewisePoly supply, Rat s0, const Rat& T) {
  NodeData n;
  n.id = std::move(id);
  n.storage_cost = PiecewisePoly::zero(Rat(0), T);
  n.storage_capacity = std::move(capacity);
  n.supply_rate = std::move(supply);
  n.initial_storage = std::move(s0);
  return n;
}

ArcData arc(std::string tail, std::string head, Rat tau, PiecewisePoly cost,
            PiecewisePoly cap) {
  ArcData a;
  a.tail = std::move(tail);
  a.head = std::move(head);
  a.transit_time = std::move(tau);
  a.cost = std::move(cost);
  a.capacity = std::move(cap);
  return a;
}

}  // namespace

Instance example_one() {
  const Rat T(1);
  Instance inst;
  inst.horizon = T;
  PiecewisePoly two_t = pw({0, T}, {{Rat(0), Rat(2)}}, Rat(2));
  PiecewisePoly t_fn = pw({0, T}, {{Rat(0), Rat(1)}}, Rat(1));
  inst.nodes.push_back(node("s", PiecewisePoly::constant(1, 0, T), t_fn,
                            Rat(0), T));
  inst.nodes.push_back(node("t", PiecewisePoly::constant(1, 0, T),
                            -t_fn, Rat(0), T));
  inst.arcs.push_back(arc("s", "t", Rat(0), two_t, two_t));
  return inst;
}

FlowOverTime example_one_flow() {
  FlowOverTime x;
  x.rates.push_back(pw({0, 1}, {{Rat(0), Rat(1)}}, Rat(1)));
  return x;
}

Instance example_a1() {
  const Rat T(2);
  const Rat half(1, 2), one(1), three_half(3, 2);
  Instance inst;
  inst.horizon = T;
  PiecewisePoly zero = PiecewisePoly::zero(0, T);
  inst.nodes.push_back(node("s", std::nullopt, zero, Rat(1), T));
  inst.nodes.push_back(node("v", PiecewisePoly::constant(1, 0, T), zero,
                            Rat(0), T));
  inst.nodes.push_back(node("t", std::nullopt, zero, Rat(0), T));

  PiecewisePoly c1 = pw({0, half, one, T},
                        {{Rat(1)}, {Rat(2)}, {Rat(1)}}, Rat(1));
  PiecewisePoly u1 = pw({0, one, three_half, T},
                        {{Rat(0), Rat(4)}, {Rat(0)}, {Rat(1)}}, Rat(1));
  PiecewisePoly c2 = pw({0, one, three_half, T},
                        {{Rat(1)}, {Rat(2)}, {Rat(1)}}, Rat(1));
  PiecewisePoly u2 = pw({0, half, one, T},
                        {{Rat(1)}, {Rat(0)}, {Rat(-2), Rat(4)}}, Rat(6));
  inst.arcs.push_back(arc("s", "v", Rat(0), c1, u1));
  inst.arcs.push_back(arc("v", "t", Rat(0), c2, u2));
  return inst;
}

FlowOverTime example_a1_flow() {
  FlowOverTime x;
  x.rates.push_back(pw({0, 1, 2}, {{Rat(0), Rat(2)}, {}}, Rat(0)));
  x.rates.push_back(pw({0, 1, 2}, {{}, {Rat(-2), Rat(2)}}, Rat(2)));
  return x;
}

Instance example_a1_with_demand() {
  Instance inst = example_a1();
  const Rat T(2);
  // one unit of demand at t, concentrated at the end of the horizon so
  // the reference flow (arrivals (t-1)^2 from time 1 on) stays feasible
  inst.nodes[2].supply_rate =
      pw({0, Rat(7, 4), T}, {{}, {Rat(-4)}}, Rat(-4));
  return inst;
}

uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int64_t Rng::range(int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
}

Rat Rng::small_rat(int64_t lo, int64_t hi) {
  return Rat(Int(range(lo * 4, hi * 4)), Int(4));
}

CorpusEntry corpus_instance(uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 17);
  const int n_nodes = static_cast<int>(rng.range(3, 5));
  const Rat T(rng.range(2, 3));
  Instance inst;
  inst.horizon = T;
  for (int v = 0; v < n_nodes; ++v) {
    std::optional<PiecewisePoly> cap;
    int64_t kind = rng.range(0, 2);
    if (kind == 1) cap = PiecewisePoly::constant(Rat(2), 0, T);
    if (kind == 2) cap = PiecewisePoly::constant(Rat(4), 0, T);
    inst.nodes.push_back(node("n" + std::to_string(v), std::move(cap),
                              PiecewisePoly::zero(0, T), Rat(0), T));
  }

  // arcs: unordered-unique pairs, tau in {0, 1}
  std::set<std::pair<int, int>> used;
  const int want_arcs = static_cast<int>(rng.range(n_nodes, 7));
  // a backbone path keeps things connected
  for (int v = 0; v + 1 < n_nodes; ++v) used.insert({v, v + 1});
  for (int tries = 0; tries < 40 && static_cast<int>(used.size()) < want_arcs;
       ++tries) {
    int a = static_cast<int>(rng.range(0, n_nodes - 1));
    int b = static_cast<int>(rng.range(0, n_nodes - 1));
    if (a == b) continue;
    if (used.count({a, b}) || used.count({b, a})) continue;
    used.insert({a, b});
  }
  std::vector<std::pair<int, int>> pairs(used.begin(), used.end());
  for (auto [a, b] : pairs) {
    if (rng.range(0, 3) == 0) std::swap(a, b);
    Rat tau(rng.range(0, 1));
    // continuous piecewise-linear cost >= 0 with breakpoints on halves
    std::vector<Rat> grid;
    for (Rat t(0); t <= T; t += Rat(1, 2)) grid.push_back(t);
    std::vector<Rat> values;
    for (size_t i = 0; i < grid.size(); ++i)
      values.push_back(Rat(rng.range(0, 8), 2));
    std::vector<Poly> cost_pieces;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
      Rat slope = (values[i + 1] - values[i]) / (grid[i + 1] - grid[i]);
      // piece: values[i] + slope * (t - grid[i])
      cost_pieces.push_back(
          Poly({values[i] - slope * grid[i], slope}));
    }
    PiecewisePoly cost(std::vector<Rat>(grid), std::move(cost_pieces),
                       values.back());
    PiecewisePoly cap = PiecewisePoly::zero(0, T);  // filled after pulses
    inst.arcs.push_back(arc(inst.nodes[a].id, inst.nodes[b].id, tau,
                            std::move(cost), std::move(cap)));
  }

  // witness flow: a few constant-rate pulses along short arc paths,
  // timed so everything arrives within the horizon
  FlowOverTime witness = FlowOverTime::zero(inst);
  const int n_pulses = static_cast<int>(rng.range(2, 4));
  for (int p = 0; p < n_pulses; ++p) {
    // random walk over arcs
    int start = static_cast<int>(rng.range(0, n_nodes - 1));
    std::vector<int> path;
    int cur = start;
    Rat path_tau(0);
    for (int hop = 0; hop < 3; ++hop) {
      std::vector<int> options;
      for (size_t e = 0; e < inst.arcs.size(); ++e)
        if (inst.arcs[e].tail == inst.nodes[cur].id)
          options.push_back(static_cast<int>(e));
      if (options.empty()) break;
      int e = options[rng.range(0, static_cast<int64_t>(options.size()) - 1)];
      path.push_back(e);
      path_tau += inst.arcs[e].transit_time;
      cur = inst.node_index(inst.arcs[e].head);
      if (rng.range(0, 1) == 0) break;
    }
    if (path.empty()) continue;
    if (path_tau + 1 > T) continue;  // window of length 1 must fit
    Rat w0(rng.range(0, (T - path_tau - 1).convert_to<int64_t>()));
    Rat rate(rng.range(1, 4), 2);
    // rate on [w0 + offset, w0 + offset + 1) for each hop
    Rat offset(0);
    for (int e : path) {
      Rat lo = w0 + offset, hi = lo + 1;
      PiecewisePoly bump =
          lo == 0 ? (hi == T ? PiecewisePoly::constant(rate, 0, T)
                             : pw({0, hi, T}, {{rate}, {}}, Rat(0)))
                  : (hi == T ? pw({0, lo, T}, {{}, {rate}}, rate)
                             : pw({0, lo, hi, T}, {{}, {rate}, {}}, Rat(0)));
      witness.rates[e] = witness.rates[e] + bump;
      offset += inst.arcs[e].transit_time;
    }
    // supply at the path start, demand at its end, same windows
    {
      auto add_supply = [&](int v, const Rat& lo, const Rat& hi, Rat r) {
        PiecewisePoly bump =
            lo == 0 ? (hi == T ? PiecewisePoly::constant(r, 0, T)
                               : pw({0, hi, T}, {{r}, {}}, Rat(0)))
                    : (hi == T ? pw({0, lo, T}, {{}, {r}}, r)
                               : pw({0, lo, hi, T}, {{}, {r}, {}}, Rat(0)));
        inst.nodes[v].supply_rate = inst.nodes[v].supply_rate + bump;
      };
      add_supply(start, w0, w0 + 1, rate);
      add_supply(cur, w0 + path_tau, w0 + path_tau + 1, -rate);
    }
  }

  // capacities: witness plus constant headroom
  for (size_t e = 0; e < inst.arcs.size(); ++e) {
    Rat margin(rng.range(1, 4), 2);
    inst.arcs[e].capacity =
        (witness.rates[e] + PiecewisePoly::constant(margin, 0, T))
            .normalized();
    witness.rates[e] = witness.rates[e].normalized();
  }
  for (auto& n : inst.nodes) n.supply_rate = n.supply_rate.normalized();

  CorpusEntry entry{std::move(inst), std::move(witness), "n0"};
  return entry;
}

}  // namespace tempoflow::fixtures
