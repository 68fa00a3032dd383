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

#ifndef TEMPOFLOW_PIECEWISE_HPP_
#define TEMPOFLOW_PIECEWISE_HPP_

#include <utility>
#include <vector>

#include "tempoflow/poly.hpp"

namespace tempoflow {

enum class Side { At, LeftLimit, RightLimit };

// Right-continuous piecewise polynomial on a closed rational interval.
// Piece k lives on [breakpoint k, breakpoint k+1); the value at the right
// end of the domain is stored separately. This is the canonical
// representative used everywhere: pointwise reads always go through it.
class PiecewisePoly {
 public:
  PiecewisePoly();
  PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces,
                Rat terminal);

  static PiecewisePoly constant(const Rat& v, const Rat& lo, const Rat& hi);
  static PiecewisePoly zero(const Rat& lo, const Rat& hi);
  static PiecewisePoly from_poly(const Poly& p, const Rat& lo, const Rat& hi);

  const Rat& lo() const { return bps_.front(); }
  const Rat& hi() const { return bps_.back(); }
  const std::vector<Rat>& breakpoints() const { return bps_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  const Rat& terminal_value() const { return terminal_; }
  size_t piece_count() const { return pieces_.size(); }

  Rat eval(const Rat& t, Side side = Side::At) const;

  // (f - tau)(t) := f(t - tau) where t - tau stays in the domain, 0 outside.
  PiecewisePoly shift(const Rat& tau) const;

  PiecewisePoly restrict(const Rat& a, const Rat& b) const;
  PiecewisePoly antiderivative() const;  // continuous, 0 at lo
  PiecewisePoly derivative() const;

  PiecewisePoly operator+(const PiecewisePoly& o) const;
  PiecewisePoly operator-(const PiecewisePoly& o) const;
  PiecewisePoly operator-() const;
  PiecewisePoly operator*(const PiecewisePoly& o) const;
  PiecewisePoly scaled(const Rat& k) const;
  PiecewisePoly min_with(const PiecewisePoly& o) const;
  PiecewisePoly max_with(const PiecewisePoly& o) const;

  // Same underlying function (breakpoint layout may differ).
  bool same_function(const PiecewisePoly& o) const;
  // Drop breakpoints separating identical polynomials.
  PiecewisePoly normalized() const;
  // Insert extra breakpoints (values outside the domain are ignored).
  PiecewisePoly refined(const std::vector<Rat>& extra) const;

  Rat integral() const;
  Rat integral(const Rat& a, const Rat& b) const;

  // -- exact sign analysis ---------------------------------------------

  bool is_identically_zero() const;
  bool pos_at(const Rat& t) const { return eval(t) > 0; }
  bool pos_left(const Rat& t) const;   // f > 0 on (t - d, t) for some d > 0
  bool pos_right(const Rat& t) const;  // f > 0 on (t, t + d) for some d > 0
  bool positive_on_open(const Rat& a, const Rat& b) const;
  bool nonnegative_on_domain() const;
  // Appendix condition style: every open interval containing t meets
  // { f != 0 }.
  bool not_identically_zero_near(const Rat& t) const;

  // Maximal [a, b] containing t0 with f > 0 on (a, b) \ {t0}.
  std::pair<Rat, Rat> strict_open_interval(const Rat& t0) const;

  // Best-effort list of maximal open intervals where f < 0 (for reports).
  std::vector<std::pair<Rat, Rat>> negative_regions() const;

  struct MinResult {
    Rat value;
    Rat arg;
    bool exact;
  };
  // Infimum of the function over [a, b] (right-continuous representative;
  // one-sided limits at piece seams count, matching the closed-interval
  // minima in residual capacities).
  MinResult min_on(const Rat& a, const Rat& b) const;

  struct ConstRun {
    Rat lo, hi;
    Rat value;
  };
  struct LocalMinima {
    std::vector<std::pair<Rat, Rat>> points;  // (theta, envelope value)
    std::vector<ConstRun> constancy;          // maximal constant stretches
    Rat min_value;                            // global inf over [a, b]
  };
  // Local minimizers of the lower-semicontinuous envelope on [a, b];
  // points inside constancy runs are reported via the runs, not singly.
  LocalMinima local_minima(const Rat& a, const Rat& b) const;

  // F = F(lo) + plus - minus with both parts nondecreasing and 0 at lo.
  struct Jordan;
  Jordan jordan() const;

  bool nondecreasing() const;

  // Rational upper bound on |f| over the domain.
  Rat sup_abs() const;

  // Roots and interior critical points of all pieces (snapped when
  // irrational); grist for the event grid.
  std::vector<Rat> sign_events(const Int& max_den) const;

 private:
  size_t piece_index(const Rat& t) const;  // piece whose [b_k,b_{k+1}) has t
  void check_invariants() const;

  std::vector<Rat> bps_;
  std::vector<Poly> pieces_;
  Rat terminal_;
};

struct PiecewisePoly::Jordan {
  PiecewisePoly plus;
  PiecewisePoly minus;
};

// Lebesgue-Stieltjes integral of U against nondecreasing integrator F:
// smooth part + sum of jumps, U read right-continuously at jump points.
Rat stieltjes(const PiecewisePoly& U, const PiecewisePoly& F);

extern const Int kSnapDen;  // denominator cap for snapped irrational points

}  // namespace tempoflow

#endif  // TEMPOFLOW_PIECEWISE_HPP_
