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

#ifndef TEMPOFLOW_POLY_HPP_
#define TEMPOFLOW_POLY_HPP_

#include <optional>
#include <vector>

#include "tempoflow/rat.hpp"

namespace tempoflow {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree. Instance data is capped at cubic pieces but intermediate values
// (products, antiderivatives) run higher, so nothing here assumes a bound.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& v) { return Poly({v}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rat constant_value() const { return c_.empty() ? Rat(0) : c_[0]; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly antiderivative() const;  // constant term 0

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& k) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // p(x + s): shift the argument. compose_linear(s) gives q with
  // q(x) = p(x + s).
  Poly compose_linear_shift(const Rat& s) const;

  // Exact integral over [a, b].
  Rat integral(const Rat& a, const Rat& b) const;

  // Number of distinct real roots in the open interval (a, b), via Sturm.
  int count_roots_open(const Rat& a, const Rat& b) const;

  // Strict positivity / nonnegativity on an open interval, exact.
  bool positive_on_open(const Rat& a, const Rat& b) const;
  bool nonnegative_on_open(const Rat& a, const Rat& b) const;

  // All real roots in [a, b]: exact rationals where the root is rational
  // (degree <= 2 handled symbolically, higher degrees via isolation); an
  // irrational root is reported snapped to denominator <= max_den together
  // with exact = false.
  struct RootInfo {
    Rat value;
    bool exact;
  };
  std::vector<RootInfo> roots_in(const Rat& a, const Rat& b,
                                 const Int& max_den) const;

  // Minimum of p over the closed interval [a, b]. exact = false means value
  // is a certified lower bound within 2^-40 of the true minimum (possible
  // only for degree >= 3 pieces with irrational critical points).
  struct MinResult {
    Rat value;
    Rat arg;
    bool exact;
  };
  MinResult min_on_closed(const Rat& a, const Rat& b, const Int& max_den) const;

  // Upper bound for |p| on [a, b] (exact for degree <= 2).
  Rat abs_bound_on(const Rat& a, const Rat& b) const;

 private:
  void trim();
  std::vector<Poly> sturm_chain() const;
  static int sign_variations(const std::vector<Poly>& chain, const Rat& x);

  std::vector<Rat> c_;
};

}  // namespace tempoflow

#endif  // TEMPOFLOW_POLY_HPP_
