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

#ifndef TEMPOFLOW_JSON_IO_HPP_
#define TEMPOFLOW_JSON_IO_HPP_

#include <json.hpp>

#include "tempoflow/flow.hpp"
#include "tempoflow/instance.hpp"

namespace tempoflow {

using Json = nlohmann::ordered_json;

// All rationals serialize as exact "p/q" strings; round-trips are
// bit-exact. with_float adds decimal renderings for plotting.

Json piecewise_to_json(const PiecewisePoly& f);
PiecewisePoly piecewise_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json flow_to_json(const Instance& inst, const FlowOverTime& x);
FlowOverTime flow_from_json(const Instance& inst, const Json& j);

Json feasibility_to_json(const FeasibilityReport& rep);
Json validation_to_json(const ValidationReport& rep);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

void add_float_renderings(Json& j);  // recursive "p/q" -> number twins

}  // namespace tempoflow

#endif  // TEMPOFLOW_JSON_IO_HPP_
