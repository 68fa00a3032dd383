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

#ifndef TEMPOFLOW_RAT_HPP_
#define TEMPOFLOW_RAT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tempoflow {

// Exact rational arithmetic. cpp_rational keeps values in canonical reduced
// form (gcd 1, positive denominator), which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

Rat parse_rat(const std::string& s);   // "p/q" or "p"; throws ParseError
std::string rat_str(const Rat& r);     // canonical "p/q" (or "p" when q == 1)
double rat_double(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline int rat_sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Nearest rational to x with denominator <= max_den (Stern-Brocot walk).
// Used to snap numerically isolated roots back onto the rational lattice.
Rat snap_to_rational(double x, const Int& max_den);

// Error taxonomy. Report-style APIs (validation, feasibility, certificates)
// do not throw; these are for genuine contract breaches.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tempoflow

#endif  // TEMPOFLOW_RAT_HPP_
