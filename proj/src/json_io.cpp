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

#include "tempoflow/json_io.hpp"

namespace tempoflow {

Json rat_to_json(const Rat& r) { return Json(rat_str(r)); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return parse_rat(j.get<std::string>());
}

Json piecewise_to_json(const PiecewisePoly& f) {
  Json j;
  Json bps = Json::array();
  for (const Rat& b : f.breakpoints()) bps.push_back(rat_str(b));
  Json pieces = Json::array();
  for (const Poly& p : f.pieces()) {
    Json coeffs = Json::array();
    if (p.is_zero()) coeffs.push_back("0");
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_str(c));
    pieces.push_back(coeffs);
  }
  j["breakpoints"] = std::move(bps);
  j["pieces"] = std::move(pieces);
  j["terminal"] = rat_str(f.terminal_value());
  return j;
}

PiecewisePoly piecewise_from_json(const Json& j) {
  std::vector<Rat> bps;
  for (const auto& b : j.at("breakpoints")) bps.push_back(rat_from_json(b));
  std::vector<Poly> pieces;
  for (const auto& pj : j.at("pieces")) {
    std::vector<Rat> coeffs;
    for (const auto& c : pj) coeffs.push_back(rat_from_json(c));
    pieces.push_back(Poly(std::move(coeffs)));
  }
  Rat terminal = j.contains("terminal")
                     ? rat_from_json(j.at("terminal"))
                     : (pieces.empty() ? Rat(0) : pieces.back().eval(bps.back()));
  return PiecewisePoly(std::move(bps), std::move(pieces), std::move(terminal));
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["format"] = 1;
  j["horizon"] = rat_str(inst.horizon);
  Json nodes = Json::array();
  for (const auto& n : inst.nodes) {
    Json nj;
    nj["id"] = n.id;
    nj["storage_cost"] = piecewise_to_json(n.storage_cost);
    if (n.storage_capacity)
      nj["storage_capacity"] = piecewise_to_json(*n.storage_capacity);
    else
      nj["storage_capacity"] = "inf";
    nj["supply_rate"] = piecewise_to_json(n.supply_rate);
    nj["initial_storage"] = rat_str(n.initial_storage);
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  Json arcs = Json::array();
  for (const auto& a : inst.arcs) {
    Json aj;
    aj["from"] = a.tail;
    aj["to"] = a.head;
    aj["transit_time"] = rat_str(a.transit_time);
    aj["cost"] = piecewise_to_json(a.cost);
    aj["capacity"] = piecewise_to_json(a.capacity);
    arcs.push_back(std::move(aj));
  }
  j["arcs"] = std::move(arcs);
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.horizon = rat_from_json(j.at("horizon"));
  for (const auto& nj : j.at("nodes")) {
    NodeData n;
    n.id = nj.at("id").get<std::string>();
    n.storage_cost = piecewise_from_json(nj.at("storage_cost"));
    const auto& cap = nj.at("storage_capacity");
    if (cap.is_string() && cap.get<std::string>() == "inf")
      n.storage_capacity = std::nullopt;
    else
      n.storage_capacity = piecewise_from_json(cap);
    n.supply_rate = piecewise_from_json(nj.at("supply_rate"));
    n.initial_storage = rat_from_json(nj.at("initial_storage"));
    inst.nodes.push_back(std::move(n));
  }
  for (const auto& aj : j.at("arcs")) {
    ArcData a;
    a.tail = aj.at("from").get<std::string>();
    a.head = aj.at("to").get<std::string>();
    a.transit_time = rat_from_json(aj.at("transit_time"));
    a.cost = piecewise_from_json(aj.at("cost"));
    a.capacity = piecewise_from_json(aj.at("capacity"));
    inst.arcs.push_back(std::move(a));
  }
  return inst;
}

Json flow_to_json(const Instance& inst, const FlowOverTime& x) {
  Json j;
  j["format"] = 1;
  Json arcs = Json::object();
  for (size_t e = 0; e < inst.arcs.size(); ++e)
    arcs[inst.arcs[e].tail + "->" + inst.arcs[e].head] =
        piecewise_to_json(x.rates[e]);
  j["arcs"] = std::move(arcs);
  return j;
}

FlowOverTime flow_from_json(const Instance& inst, const Json& j) {
  FlowOverTime x = FlowOverTime::zero(inst);
  for (const auto& [key, fj] : j.at("arcs").items()) {
    auto sep = key.find("->");
    if (sep == std::string::npos)
      throw ParseError("flow arc key must be \"tail->head\": " + key);
    int e = inst.arc_index(key.substr(0, sep), key.substr(sep + 2));
    if (e < 0) throw ParseError("flow references unknown arc " + key);
    x.rates[e] = piecewise_from_json(fj);
  }
  return x;
}

Json feasibility_to_json(const FeasibilityReport& rep) {
  Json j;
  j["format"] = 1;
  j["feasible"] = rep.feasible;
  Json v = Json::array();
  for (const auto& viol : rep.violations) {
    Json vj;
    vj["constraint"] = viol.constraint;
    vj["location"] = viol.location;
    vj["interval"] = Json::array({rat_str(viol.from), rat_str(viol.to)});
    v.push_back(std::move(vj));
  }
  j["violations"] = std::move(v);
  return j;
}

Json validation_to_json(const ValidationReport& rep) {
  Json j;
  j["format"] = 1;
  j["valid"] = rep.valid;
  auto items = [](const std::vector<Violation>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs)
      arr.push_back(Json{{"code", v.code},
                         {"location", v.location},
                         {"detail", v.detail}});
    return arr;
  };
  j["violations"] = items(rep.violations);
  j["warnings"] = items(rep.warnings);
  return j;
}

namespace {

bool looks_rational(const std::string& s) {
  if (s.empty() || s == "inf") return false;
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      return false;
  return true;
}

}  // namespace

void add_float_renderings(Json& j) {
  if (j.is_object()) {
    Json extras = Json::object();
    for (auto& [key, val] : j.items()) {
      if (val.is_string() && looks_rational(val.get<std::string>()))
        extras[key + "_float"] = rat_double(parse_rat(val.get<std::string>()));
      else
        add_float_renderings(val);
    }
    for (auto& [key, val] : extras.items()) j[key] = val;
  } else if (j.is_array()) {
    for (auto& el : j) add_float_renderings(el);
  }
}

}  // namespace tempoflow
