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

#include "tempoflow/poly.hpp"

#include <algorithm>

namespace tempoflow {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(Int(i));
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  if (c_.empty()) return Poly();
  std::vector<Rat> d(c_.size() + 1);
  d[0] = 0;
  for (size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / Rat(Int(i + 1));
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> d(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
  return Poly(std::move(d));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> d(c_);
  for (auto& v : d) v = -v;
  return Poly(std::move(d));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rat> d(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(d));
}

Poly Poly::scaled(const Rat& k) const {
  std::vector<Rat> d(c_);
  for (auto& v : d) v *= k;
  return Poly(std::move(d));
}

Poly Poly::compose_linear_shift(const Rat& s) const {
  // Horner on (x + s).
  if (c_.empty()) return Poly();
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    // acc = acc * (x + s) + *it
    Poly shifted;
    {
      std::vector<Rat> m = {s, Rat(1)};
      shifted = acc * Poly(std::move(m));
    }
    acc = shifted + Poly::constant(*it);
  }
  return acc;
}

Rat Poly::integral(const Rat& a, const Rat& b) const {
  Poly F = antiderivative();
  return F.eval(b) - F.eval(a);
}

std::vector<Poly> Poly::sturm_chain() const {
  std::vector<Poly> chain;
  if (is_zero()) return chain;
  chain.push_back(*this);
  Poly d = derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && !chain.back().is_zero()) {
    // negative remainder of division
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      Rat k = rem.coeffs().back() / b.coeffs().back();
      int shift = rem.degree() - b.degree();
      std::vector<Rat> m(shift + 1, Rat(0));
      m[shift] = k;
      rem = rem - b * Poly(std::move(m));
    }
    if (rem.is_zero()) break;
    chain.push_back(-rem);
  }
  return chain;
}

int Poly::sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int variations = 0, prev = 0;
  for (const auto& p : chain) {
    int s = rat_sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int Poly::count_roots_open(const Rat& a, const Rat& b) const {
  if (is_zero() || a >= b) return 0;
  // Deflate roots at the endpoints so the Sturm count is clean.
  Poly p = *this;
  for (const Rat& e : {a, b}) {
    while (!p.is_zero() && p.degree() >= 1 && p.eval(e) == 0) {
      // exact synthetic division by (x - e)
      const auto& c = p.coeffs();
      std::vector<Rat> q(c.size() - 1, Rat(0));
      Rat carry(0);
      for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i) {
        carry = c[i] + carry * e;
        q[i - 1] = carry;
      }
      p = Poly(std::move(q));
    }
  }
  if (p.is_zero() || p.degree() < 1) return 0;
  auto chain = p.sturm_chain();
  int count = sign_variations(chain, a) - sign_variations(chain, b);
  return std::max(count, 0);
}

bool Poly::positive_on_open(const Rat& a, const Rat& b) const {
  if (a >= b) return true;  // empty interval, vacuous
  if (is_zero()) return false;
  if (count_roots_open(a, b) > 0) return false;
  Rat mid = (a + b) / 2;
  return eval(mid) > 0;
}

bool Poly::nonnegative_on_open(const Rat& a, const Rat& b) const {
  if (a >= b) return true;
  if (is_zero()) return true;
  if (count_roots_open(a, b) == 0) return eval((a + b) / 2) >= 0;
  // Roots inside: sign on every root-free subinterval must be >= 0.
  // Bisect down to root-isolating pieces.
  struct Seg {
    Rat lo, hi;
  };
  std::vector<Seg> stack = {{a, b}};
  int guard = 0;
  while (!stack.empty()) {
    if (++guard > 4096) throw InternalError("nonnegative_on_open: too deep");
    Seg s = stack.back();
    stack.pop_back();
    int n = count_roots_open(s.lo, s.hi);
    if (n == 0) {
      if (eval((s.lo + s.hi) / 2) < 0) return false;
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (eval(mid) < 0) return false;
    stack.push_back({s.lo, mid});
    stack.push_back({mid, s.hi});
  }
  return true;
}

std::vector<Poly::RootInfo> Poly::roots_in(const Rat& a, const Rat& b,
                                           const Int& max_den) const {
  std::vector<RootInfo> out;
  if (is_zero() || a > b) return out;
  if (degree() <= 0) return out;
  if (degree() == 1) {
    Rat r = -c_[0] / c_[1];
    if (r >= a && r <= b) out.push_back({r, true});
    return out;
  }
  if (degree() == 2) {
    const Rat &A = c_[2], &B = c_[1], &C = c_[0];
    Rat disc = B * B - 4 * A * C;
    if (disc < 0) return out;
    // rational roots iff disc is the square of a rational
    Int dn = num(disc), dd = den(disc);
    Int sn = boost::multiprecision::sqrt(dn), sd = boost::multiprecision::sqrt(dd);
    if (sn * sn == dn && sd * sd == dd) {
      Rat sq(sn, sd);
      Rat r1 = (-B - sq) / (2 * A);
      Rat r2 = (-B + sq) / (2 * A);
      for (const Rat& r : {r1, r2}) {
        if (r >= a && r <= b &&
            (out.empty() || out.back().value != r))
          out.push_back({r, true});
      }
      std::sort(out.begin(), out.end(),
                [](const RootInfo& x, const RootInfo& y) { return x.value < y.value; });
      return out;
    }
  }
  // General case: isolate by bisection on root counts, then snap.
  struct Seg {
    Rat lo, hi;
  };
  std::vector<Seg> isolating;
  std::vector<Seg> stack = {{a, b}};
  int guard = 0;
  while (!stack.empty()) {
    if (++guard > 8192) throw InternalError("roots_in: isolation too deep");
    Seg s = stack.back();
    stack.pop_back();
    int n = count_roots_open(s.lo, s.hi);
    if (n == 0) continue;
    if (n == 1 && (s.hi - s.lo) < Rat(1, 1024)) {
      isolating.push_back(s);
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (eval(mid) == 0) out.push_back({mid, true});
    stack.push_back({s.lo, mid});
    stack.push_back({mid, s.hi});
  }
  if (eval(a) == 0) out.push_back({a, true});
  if (eval(b) == 0) out.push_back({b, true});
  for (auto seg : isolating) {
    // refine then snap
    for (int i = 0; i < 80 && (seg.hi - seg.lo) > 0; ++i) {
      Rat mid = (seg.lo + seg.hi) / 2;
      Rat v = eval(mid);
      if (v == 0) {
        out.push_back({mid, true});
        seg.lo = seg.hi = mid;
        break;
      }
      if (rat_sign(v) == rat_sign(eval(seg.lo)))
        seg.lo = mid;
      else
        seg.hi = mid;
    }
    if (seg.lo != seg.hi) {
      Rat approx = (seg.lo + seg.hi) / 2;
      out.push_back({snap_to_rational(rat_double(approx), max_den), false});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInfo& x, const RootInfo& y) { return x.value < y.value; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RootInfo& x, const RootInfo& y) {
                          return x.value == y.value;
                        }),
            out.end());
  return out;
}

Poly::MinResult Poly::min_on_closed(const Rat& a, const Rat& b,
                                    const Int& max_den) const {
  if (a > b) throw DomainError("min_on_closed: empty interval");
  std::vector<std::pair<Rat, bool>> candidates = {{a, true}, {b, true}};
  Poly d = derivative();
  if (!d.is_zero()) {
    for (const auto& r : d.roots_in(a, b, max_den))
      candidates.push_back({r.value, r.exact});
  }
  MinResult best{eval(a), a, true};
  bool all_exact = true;
  for (const auto& [x, exact] : candidates) {
    Rat v = eval(x);
    if (v < best.value) best = {v, x, true};
    if (!exact) all_exact = false;
  }
  if (all_exact) {
    best.exact = true;
    return best;
  }
  // Irrational critical point: certify a lower bound by bisection on the
  // level c with p - c nonnegative on the interval.
  Rat lo = best.value - 1, hi = best.value;
  for (int i = 0; i < 48; ++i) {
    Rat mid = (lo + hi) / 2;
    Poly shifted = *this - Poly::constant(mid);
    bool ok = shifted.eval(a) >= 0 && shifted.eval(b) >= 0 &&
              shifted.nonnegative_on_open(a, b);
    if (ok)
      lo = mid;
    else
      hi = mid;
  }
  best.value = lo;
  best.exact = false;
  return best;
}

Rat Poly::abs_bound_on(const Rat& a, const Rat& b) const {
  if (is_zero()) return Rat(0);
  MinResult lo = min_on_closed(a, b, Int(1) << 30);
  MinResult hi = (-*this).min_on_closed(a, b, Int(1) << 30);
  Rat bound = rat_max(rat_abs(lo.value), rat_abs(hi.value));
  if (!lo.exact || !hi.exact) bound += 1;  // pad the certified bound
  return bound;
}

}  // namespace tempoflow
