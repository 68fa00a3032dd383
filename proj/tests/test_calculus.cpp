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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tempoflow/fixtures.hpp"
#include "tempoflow/json_io.hpp"
#include "tempoflow/piecewise.hpp"

using namespace tempoflow;

namespace {

PiecewisePoly pw(std::vector<Rat> bps, std::vector<std::vector<Rat>> pieces,
                 Rat terminal) {
  std::vector<Poly> polys;
  for (auto& c : pieces) polys.push_back(Poly(std::move(c)));
  return PiecewisePoly(std::move(bps), std::move(polys), std::move(terminal));
}

// random piecewise polynomial of degree <= 3 on [0, T]
PiecewisePoly random_pw(fixtures::Rng& rng, const Rat& T, int max_deg = 3) {
  int n_pieces = static_cast<int>(rng.range(1, 4));
  std::vector<Rat> bps = {Rat(0)};
  for (int i = 1; i < n_pieces; ++i)
    bps.push_back(Rat(Int(i) * num(T), Int(n_pieces) * den(T)));
  bps.push_back(T);
  std::vector<Poly> pieces;
  for (int i = 0; i < n_pieces; ++i) {
    std::vector<Rat> c;
    int deg = static_cast<int>(rng.range(0, max_deg));
    for (int k = 0; k <= deg; ++k) c.push_back(rng.small_rat(-3, 3));
    pieces.push_back(Poly(std::move(c)));
  }
  Rat terminal = rng.small_rat(-3, 3);
  return PiecewisePoly(std::move(bps), std::move(pieces), std::move(terminal));
}

double simpson(const PiecewisePoly& f, double a, double b, int n) {
  // composite Simpson per subinterval; exact for cubics up to rounding
  double h = (b - a) / n, acc = 0;
  auto val = [&](double x) {
    // clamp into the domain and evaluate the piece polynomial numerically
    Rat t = snap_to_rational(x, Int(1) << 40);
    if (t < f.lo()) t = f.lo();
    if (t > f.hi()) t = f.hi();
    return rat_double(f.eval(t));
  };
  for (int i = 0; i < n; ++i) {
    double x0 = a + i * h, x1 = x0 + h;
    acc += (x1 - x0) / 6.0 * (val(x0) + 4 * val((x0 + x1) / 2) + val(x1 - 1e-13));
  }
  return acc;
}

}  // namespace

TEST_CASE("rational parse and format round-trip") {
  CHECK(rat_str(parse_rat("3/6")) == "1/2");
  CHECK(rat_str(parse_rat("-4/2")) == "-2");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
}

TEST_CASE("polynomial roots and sturm") {
  Poly p({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
  CHECK(p.count_roots_open(Rat(-2), Rat(2)) == 2);
  CHECK(p.count_roots_open(Rat(0), Rat(1)) == 0);  // root at 1 excluded
  CHECK(p.positive_on_open(Rat(1), Rat(3)));
  CHECK_FALSE(p.positive_on_open(Rat(0), Rat(2)));
  Poly q({Rat(2), Rat(-3), Rat(1)});  // (x-1)(x-2)
  auto roots = q.roots_in(Rat(0), Rat(5), Int(1000));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value == 1);
  CHECK(roots[1].value == 2);
  CHECK(roots[0].exact);
  // irrational roots of x^2 - 2 get snapped
  Poly r({Rat(-2), Rat(0), Rat(1)});
  auto rr = r.roots_in(Rat(0), Rat(2), Int(1000000));
  REQUIRE(rr.size() == 1);
  CHECK_FALSE(rr[0].exact);
  CHECK(std::fabs(rat_double(rr[0].value) - std::sqrt(2.0)) < 1e-6);
}

TEST_CASE("eval with one-sided limits") {
  // f(t) = 2t on [0, 1]
  PiecewisePoly f = pw({0, 1}, {{Rat(0), Rat(2)}}, Rat(2));
  CHECK(f.eval(Rat(1, 2)) == 1);
  CHECK(f.eval(Rat(1)) == 2);
  CHECK_THROWS_AS(f.eval(Rat(0), Side::LeftLimit), DomainError);
  CHECK_THROWS_AS(f.eval(Rat(2)), DomainError);

  // the first arc cost of the three-node example: 1, 2, 1 steps
  Instance a1 = fixtures::example_a1();
  const PiecewisePoly& c1 = a1.arcs[0].cost;
  CHECK(c1.eval(Rat(1, 2), Side::LeftLimit) == 1);
  CHECK(c1.eval(Rat(1, 2)) == 2);
  CHECK(c1.eval(Rat(1, 2), Side::RightLimit) == 2);
  CHECK(c1.eval(Rat(2)) == 1);
}

TEST_CASE("shift") {
  PiecewisePoly f = pw({0, 2}, {{Rat(0), Rat(1)}}, Rat(2));  // f(t) = t
  CHECK(f.shift(Rat(0)).same_function(f));
  PiecewisePoly g = f.shift(Rat(1));
  CHECK(g.eval(Rat(1, 2)) == 0);
  CHECK(g.eval(Rat(3, 2)) == Rat(1, 2));
  CHECK(g.eval(Rat(2)) == 1);
  // negative shift
  PiecewisePoly h = f.shift(Rat(-1));
  CHECK(h.eval(Rat(0)) == 1);
  CHECK(h.eval(Rat(1, 2)) == Rat(3, 2));
  // shifted flow from the appendix example: x_e2 shifted by 1/2 at 3/2
  FlowOverTime x = fixtures::example_a1_flow();
  CHECK(x.rates[1].shift(Rat(1, 2)).eval(Rat(3, 2)) == x.rates[1].eval(Rat(1)));
  CHECK(x.rates[1].shift(Rat(1, 2)).eval(Rat(3, 2)) == 0);
}

TEST_CASE("antiderivative") {
  PiecewisePoly f = pw({0, 1}, {{Rat(0), Rat(2)}}, Rat(2));
  PiecewisePoly F = f.antiderivative();
  CHECK(F.eval(Rat(1)) == 1);
  CHECK(F.eval(Rat(1, 2)) == Rat(1, 4));
  // b_s = t integrates to t^2/2
  Instance ex1 = fixtures::example_one();
  PiecewisePoly B = ex1.nodes[0].supply_rate.antiderivative();
  CHECK(B.eval(Rat(1)) == Rat(1, 2));
  CHECK(B.eval(Rat(1, 2)) == Rat(1, 8));
  // x_e1 of the appendix example: t^2 then constant 1
  FlowOverTime x = fixtures::example_a1_flow();
  PiecewisePoly X1 = x.rates[0].antiderivative();
  CHECK(X1.eval(Rat(1, 2)) == Rat(1, 4));
  CHECK(X1.eval(Rat(1)) == 1);
  CHECK(X1.eval(Rat(3, 2)) == 1);
  CHECK(X1.eval(Rat(2)) == 1);
}

TEST_CASE("antiderivative agrees with numeric quadrature") {
  fixtures::Rng rng(42);
  int checked = 0;
  for (int it = 0; it < 1000; ++it) {
    PiecewisePoly f = random_pw(rng, Rat(2));
    PiecewisePoly F = f.antiderivative();
    // quadrature piece by piece so discontinuities are respected
    double numeric = 0;
    for (size_t k = 0; k < f.pieces().size(); ++k) {
      double a = rat_double(f.breakpoints()[k]);
      double b = rat_double(f.breakpoints()[k + 1]);
      Poly p = f.pieces()[k];
      double h = (b - a) / 8, acc = 0;
      for (int i = 0; i < 8; ++i) {
        double x0 = a + i * h, x1 = x0 + h;
        auto val = [&](double xx) {
          return rat_double(p.eval(snap_to_rational(xx, Int(1) << 40)));
        };
        acc += (x1 - x0) / 6.0 * (val(x0) + 4 * val((x0 + x1) / 2) + val(x1));
      }
      numeric += acc;
    }
    double exact = rat_double(F.eval(F.hi())) - rat_double(F.eval(F.lo()));
    CHECK(std::fabs(numeric - exact) < 1e-9);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("algebra") {
  const Rat T(1);
  PiecewisePoly f = pw({0, T}, {{Rat(0), Rat(2)}}, Rat(2));
  PiecewisePoly zero = PiecewisePoly::zero(0, T);
  CHECK((f + zero).same_function(f));
  PiecewisePoly one = PiecewisePoly::constant(1, 0, T);
  PiecewisePoly m = f.min_with(one);
  CHECK(m.eval(Rat(1, 4)) == Rat(1, 2));
  CHECK(m.eval(Rat(1, 2)) == 1);
  CHECK(m.eval(Rat(3, 4)) == 1);
  // min breakpoint inserted exactly at the crossing 1/2
  bool has_half = false;
  for (const auto& b : m.breakpoints()) has_half |= (b == Rat(1, 2));
  CHECK(has_half);

  // u_e1 - x_e1 of the appendix example: 2t, 0, 1
  Instance a1 = fixtures::example_a1();
  FlowOverTime x = fixtures::example_a1_flow();
  PiecewisePoly res = (a1.arcs[0].capacity - x.rates[0]).normalized();
  PiecewisePoly expect =
      pw({0, 1, Rat(3, 2), 2}, {{Rat(0), Rat(2)}, {}, {Rat(1)}}, Rat(1));
  CHECK(res.same_function(expect));

  CHECK_THROWS_AS(f + PiecewisePoly::constant(1, 0, Rat(2)), DomainError);
}

TEST_CASE("pointwise min matches pointwise evaluation") {
  fixtures::Rng rng(7);
  for (int it = 0; it < 60; ++it) {
    PiecewisePoly f = random_pw(rng, Rat(2), 2);
    PiecewisePoly g = random_pw(rng, Rat(2), 2);
    PiecewisePoly m = f.min_with(g);
    for (const Rat& b : m.breakpoints())
      CHECK(m.eval(b) == rat_min(f.eval(b), g.eval(b)));
    for (int i = 0; i < 100; ++i) {
      Rat t(rng.range(0, 256), 128);
      CHECK(m.eval(t) == rat_min(f.eval(t), g.eval(t)));
    }
  }
}

TEST_CASE("positivity analysis") {
  // 1 - t^2 on [0, 2], strict interval around 0 reaches the root at 1
  PiecewisePoly f = pw({0, 2}, {{Rat(1), Rat(0), Rat(-1)}}, Rat(-3));
  auto [a, b] = f.strict_open_interval(Rat(0));
  CHECK(a == 0);
  CHECK(b == 1);

  // residual u_e2 - x_e2 at 1: zero value, positive to the right
  Instance a1 = fixtures::example_a1();
  FlowOverTime x = fixtures::example_a1_flow();
  PiecewisePoly res = (a1.arcs[1].capacity - x.rates[1]).normalized();
  CHECK(res.eval(Rat(1)) == 2);
  CHECK(res.not_identically_zero_near(Rat(1)));
  CHECK(res.pos_right(Rat(1)));
  CHECK_FALSE(res.pos_left(Rat(1)));

  PiecewisePoly z = PiecewisePoly::zero(0, 2);
  CHECK_FALSE(z.not_identically_zero_near(Rat(1, 2)));
}

TEST_CASE("local minima") {
  // monotone: single minimum at the left endpoint
  PiecewisePoly f = pw({0, 1}, {{Rat(0), Rat(2)}}, Rat(2));
  auto lm = f.local_minima(Rat(0), Rat(1));
  REQUIRE(lm.points.size() == 1);
  CHECK(lm.points[0].first == 0);
  CHECK(lm.points[0].second == 0);

  // (t-1)^2 on [0, 2]: vertex at 1
  PiecewisePoly g = pw({0, 2}, {{Rat(1), Rat(-2), Rat(1)}}, Rat(1));
  auto lmg = g.local_minima(Rat(0), Rat(2));
  bool found = false;
  for (auto& [t, v] : lmg.points) found |= (t == 1 && v == 0);
  CHECK(found);
  CHECK(lmg.min_value == 0);

  // the step cost: constancy runs 1 | 2 | 1, min value 1 on two runs
  Instance a1 = fixtures::example_a1();
  auto lmc = a1.arcs[0].cost.local_minima(Rat(0), Rat(2));
  REQUIRE(lmc.constancy.size() == 3);
  CHECK(lmc.constancy[0].value == 1);
  CHECK(lmc.constancy[1].value == 2);
  CHECK(lmc.constancy[2].value == 1);
  CHECK(lmc.constancy[0].lo == 0);
  CHECK(lmc.constancy[0].hi == Rat(1, 2));
  CHECK(lmc.constancy[2].lo == 1);
  CHECK(lmc.constancy[2].hi == 2);
  CHECK(lmc.min_value == 1);
}

TEST_CASE("jordan decomposition") {
  PiecewisePoly f = pw({0, 1}, {{Rat(0), Rat(1)}}, Rat(1));  // t
  auto j = f.jordan();
  CHECK(j.plus.same_function(f));
  CHECK(j.minus.is_identically_zero());
  auto jn = (-f).jordan();
  CHECK(jn.minus.same_function(f));
  CHECK(jn.plus.is_identically_zero());

  // (t-1)^2 on [0,2]: falls by 1 then rises by 1
  PiecewisePoly g = pw({0, 2}, {{Rat(1), Rat(-2), Rat(1)}}, Rat(1));
  auto jg = g.jordan();
  CHECK(jg.minus.eval(Rat(1)) == 1);
  CHECK(jg.minus.eval(Rat(2)) == 1);
  CHECK(jg.plus.eval(Rat(1)) == 0);
  CHECK(jg.plus.eval(Rat(2)) == 1);
  CHECK(jg.plus.nondecreasing());
  CHECK(jg.minus.nondecreasing());
}

TEST_CASE("jordan reconstruction on random functions") {
  fixtures::Rng rng(11);
  int samples = 0;
  for (int it = 0; it < 25; ++it) {
    PiecewisePoly f = random_pw(rng, Rat(2), 2);
    auto j = f.jordan();
    CHECK(j.plus.nondecreasing());
    CHECK(j.minus.nondecreasing());
    for (int i = 0; i < 40; ++i) {
      Rat t(rng.range(0, 512), 256);
      Rat recon = f.eval(Rat(0)) + j.plus.eval(t) - j.minus.eval(t);
      CHECK(recon == f.eval(t));
      ++samples;
    }
  }
  CHECK(samples == 1000);
}

TEST_CASE("stieltjes") {
  const Rat T(1);
  PiecewisePoly one = PiecewisePoly::constant(1, 0, T);
  PiecewisePoly id = pw({0, T}, {{Rat(0), Rat(1)}}, Rat(1));
  CHECK(stieltjes(one, id) == 1);
  // constant integrand: c * (F(T) - F(0))
  PiecewisePoly c = PiecewisePoly::constant(Rat(5, 2), 0, T);
  PiecewisePoly F = pw({0, Rat(1, 2), T}, {{Rat(0)}, {Rat(3)}}, Rat(3));
  CHECK(stieltjes(c, F) == Rat(5, 2) * 3);
  // unit step at 1/2 against U = t: picks up U(1/2) = 1/2
  PiecewisePoly step = pw({0, Rat(1, 2), T}, {{Rat(0)}, {Rat(1)}}, Rat(1));
  CHECK(stieltjes(id, step) == Rat(1, 2));
  // absolutely continuous case ties back to the antiderivative
  PiecewisePoly U = pw({0, T}, {{Rat(1), Rat(2)}}, Rat(3));
  CHECK(stieltjes(U, id) == U.antiderivative().eval(T));
  // decreasing integrator rejected
  CHECK_THROWS_AS(stieltjes(one, -id), ContractViolation);
}

TEST_CASE("shift/eval interplay on random functions") {
  fixtures::Rng rng(3);
  for (int it = 0; it < 50; ++it) {
    PiecewisePoly f = random_pw(rng, Rat(2));
    Rat tau(rng.range(-4, 4), 4);
    PiecewisePoly g = f.shift(tau);
    for (int i = 0; i < 20; ++i) {
      Rat t(rng.range(0, 8), 4);
      Rat back = t - tau;
      Rat expect =
          (back >= 0 && back <= 2) ? f.eval(back) : Rat(0);
      if (t == g.hi() && back >= 0 && back <= 2) expect = f.eval(back);
      CHECK(g.eval(t) == expect);
    }
  }
}

TEST_CASE("piecewise json round-trip is bit exact") {
  fixtures::Rng rng(99);
  for (int it = 0; it < 50; ++it) {
    PiecewisePoly f = random_pw(rng, Rat(3, 2));
    Json j = piecewise_to_json(f);
    PiecewisePoly g = piecewise_from_json(j);
    CHECK(piecewise_to_json(g) == j);
    CHECK(g.same_function(f));
  }
  // the documented fragment shape
  Json j = Json::parse(
      R"({"breakpoints":["0","1/2","1"],"pieces":[["1"],["2"]],"terminal":"2"})");
  PiecewisePoly f = piecewise_from_json(j);
  CHECK(f.eval(Rat(1, 4)) == 1);
  CHECK(f.eval(Rat(3, 4)) == 2);
  CHECK(f.eval(Rat(1)) == 2);
}
