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

#include "tempoflow/piecewise.hpp"

#include <algorithm>
#include <set>

namespace tempoflow {

const Int kSnapDen = Int(1000000000);

PiecewisePoly::PiecewisePoly()
    : bps_{Rat(0), Rat(1)}, pieces_{Poly()}, terminal_(0) {}

PiecewisePoly::PiecewisePoly(std::vector<Rat> breakpoints,
                             std::vector<Poly> pieces, Rat terminal)
    : bps_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      terminal_(std::move(terminal)) {
  check_invariants();
}

void PiecewisePoly::check_invariants() const {
  if (bps_.size() < 2) throw DomainError("piecewise: need >= 2 breakpoints");
  if (pieces_.size() + 1 != bps_.size())
    throw DomainError("piecewise: piece count must be breakpoints - 1");
  for (size_t i = 0; i + 1 < bps_.size(); ++i)
    if (!(bps_[i] < bps_[i + 1]))
      throw DomainError("piecewise: breakpoints must strictly increase");
}

PiecewisePoly PiecewisePoly::constant(const Rat& v, const Rat& lo,
                                      const Rat& hi) {
  return PiecewisePoly({lo, hi}, {Poly::constant(v)}, v);
}

PiecewisePoly PiecewisePoly::zero(const Rat& lo, const Rat& hi) {
  return PiecewisePoly({lo, hi}, {Poly()}, Rat(0));
}

PiecewisePoly PiecewisePoly::from_poly(const Poly& p, const Rat& lo,
                                       const Rat& hi) {
  return PiecewisePoly({lo, hi}, {p}, p.eval(hi));
}

size_t PiecewisePoly::piece_index(const Rat& t) const {
  // largest k with bps_[k] <= t, clamped to a valid piece
  auto it = std::upper_bound(bps_.begin(), bps_.end(), t);
  size_t k = static_cast<size_t>(it - bps_.begin());
  if (k == 0) throw DomainError("piecewise: t below domain");
  --k;
  if (k >= pieces_.size()) k = pieces_.size() - 1;  // t == hi
  return k;
}

Rat PiecewisePoly::eval(const Rat& t, Side side) const {
  if (t < lo() || t > hi()) throw DomainError("piecewise eval: t outside domain");
  switch (side) {
    case Side::At:
      if (t == hi()) return terminal_;
      return pieces_[piece_index(t)].eval(t);
    case Side::LeftLimit: {
      if (t == lo()) throw DomainError("left limit at domain start");
      auto it = std::lower_bound(bps_.begin(), bps_.end(), t);
      size_t k;
      if (it != bps_.end() && *it == t) {
        k = static_cast<size_t>(it - bps_.begin());
        if (k == 0) throw DomainError("left limit at domain start");
        --k;
      } else {
        k = piece_index(t);
      }
      return pieces_[k].eval(t);
    }
    case Side::RightLimit:
      if (t == hi()) throw DomainError("right limit at domain end");
      return pieces_[piece_index(t)].eval(t);
  }
  throw InternalError("unreachable");
}

PiecewisePoly PiecewisePoly::shift(const Rat& tau) const {
  // support of f(t - tau) inside the domain
  Rat a = rat_max(lo(), lo() + tau);
  Rat b = rat_min(hi(), hi() + tau);
  std::set<Rat> cuts = {lo(), hi()};
  if (a > lo() && a < hi()) cuts.insert(a);
  if (b > lo() && b < hi()) cuts.insert(b);
  for (const Rat& bp : bps_) {
    Rat s = bp + tau;
    if (s > lo() && s < hi()) cuts.insert(s);
  }
  std::vector<Rat> nb(cuts.begin(), cuts.end());
  std::vector<Poly> np;
  for (size_t i = 0; i + 1 < nb.size(); ++i) {
    const Rat& u = nb[i];
    if (u < a || u >= b) {
      np.push_back(Poly());
      continue;
    }
    // f(t - tau) on [u, next): same piece of f throughout by construction.
    size_t k = piece_index(u - tau);
    np.push_back(pieces_[k].compose_linear_shift(-tau));
  }
  Rat term(0);
  Rat src = hi() - tau;
  if (src >= lo() && src <= hi()) term = eval(src);
  return PiecewisePoly(std::move(nb), std::move(np), term);
}

PiecewisePoly PiecewisePoly::restrict(const Rat& a, const Rat& b) const {
  if (a < lo() || b > hi() || a >= b)
    throw DomainError("piecewise restrict: bad subinterval");
  std::vector<Rat> nb = {a};
  std::vector<Poly> np;
  for (size_t k = 0; k < pieces_.size(); ++k) {
    Rat u = rat_max(bps_[k], a), v = rat_min(bps_[k + 1], b);
    if (u >= v) continue;
    np.push_back(pieces_[k]);
    nb.push_back(v);
  }
  return PiecewisePoly(std::move(nb), std::move(np), eval(b));
}

PiecewisePoly PiecewisePoly::antiderivative() const {
  std::vector<Poly> np;
  Rat acc(0);
  for (size_t k = 0; k < pieces_.size(); ++k) {
    Poly F = pieces_[k].antiderivative();
    // piece value: acc + F(t) - F(b_k)
    Poly piece = F + Poly::constant(acc - F.eval(bps_[k]));
    np.push_back(piece);
    acc = piece.eval(bps_[k + 1]);
  }
  return PiecewisePoly(bps_, std::move(np), acc);
}

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<Poly> np;
  np.reserve(pieces_.size());
  for (const auto& p : pieces_) np.push_back(p.derivative());
  Rat term = np.back().eval(hi());
  return PiecewisePoly(bps_, std::move(np), term);
}

namespace {

std::vector<Rat> merged_breakpoints(const PiecewisePoly& f,
                                    const PiecewisePoly& g) {
  if (f.lo() != g.lo() || f.hi() != g.hi())
    throw DomainError("piecewise algebra: domains differ");
  std::set<Rat> cuts(f.breakpoints().begin(), f.breakpoints().end());
  cuts.insert(g.breakpoints().begin(), g.breakpoints().end());
  return std::vector<Rat>(cuts.begin(), cuts.end());
}

}  // namespace

PiecewisePoly PiecewisePoly::operator+(const PiecewisePoly& o) const {
  auto nb = merged_breakpoints(*this, o);
  std::vector<Poly> np;
  for (size_t i = 0; i + 1 < nb.size(); ++i) {
    const Rat& u = nb[i];
    np.push_back(pieces_[piece_index(u)] + o.pieces()[o.piece_index(u)]);
  }
  return PiecewisePoly(std::move(nb), std::move(np), terminal_ + o.terminal_);
}

PiecewisePoly PiecewisePoly::operator-(const PiecewisePoly& o) const {
  return *this + (-o);
}

PiecewisePoly PiecewisePoly::operator-() const {
  std::vector<Poly> np;
  np.reserve(pieces_.size());
  for (const auto& p : pieces_) np.push_back(-p);
  return PiecewisePoly(bps_, std::move(np), -terminal_);
}

PiecewisePoly PiecewisePoly::operator*(const PiecewisePoly& o) const {
  auto nb = merged_breakpoints(*this, o);
  std::vector<Poly> np;
  for (size_t i = 0; i + 1 < nb.size(); ++i) {
    const Rat& u = nb[i];
    np.push_back(pieces_[piece_index(u)] * o.pieces()[o.piece_index(u)]);
  }
  return PiecewisePoly(std::move(nb), std::move(np), terminal_ * o.terminal_);
}

PiecewisePoly PiecewisePoly::scaled(const Rat& k) const {
  std::vector<Poly> np;
  np.reserve(pieces_.size());
  for (const auto& p : pieces_) np.push_back(p.scaled(k));
  return PiecewisePoly(bps_, std::move(np), terminal_ * k);
}

namespace {

PiecewisePoly envelope(const PiecewisePoly& f, const PiecewisePoly& g,
                       bool take_min) {
  std::set<Rat> cuts(f.breakpoints().begin(), f.breakpoints().end());
  if (f.lo() != g.lo() || f.hi() != g.hi())
    throw DomainError("piecewise min/max: domains differ");
  cuts.insert(g.breakpoints().begin(), g.breakpoints().end());
  // crossings of the two polynomials inside each merged piece
  {
    std::vector<Rat> base(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < base.size(); ++i) {
      const Rat &u = base[i], &v = base[i + 1];
      size_t kf = std::upper_bound(f.breakpoints().begin(),
                                   f.breakpoints().end(), u) -
                  f.breakpoints().begin() - 1;
      if (kf >= f.pieces().size()) kf = f.pieces().size() - 1;
      size_t kg = std::upper_bound(g.breakpoints().begin(),
                                   g.breakpoints().end(), u) -
                  g.breakpoints().begin() - 1;
      if (kg >= g.pieces().size()) kg = g.pieces().size() - 1;
      Poly diff = f.pieces()[kf] - g.pieces()[kg];
      for (const auto& r : diff.roots_in(u, v, kSnapDen)) {
        if (r.value > u && r.value < v) cuts.insert(r.value);
      }
    }
  }
  std::vector<Rat> nb(cuts.begin(), cuts.end());
  std::vector<Poly> np;
  for (size_t i = 0; i + 1 < nb.size(); ++i) {
    Rat mid = (nb[i] + nb[i + 1]) / 2;
    Rat fv = f.eval(mid), gv = g.eval(mid);
    bool pick_f = take_min ? (fv <= gv) : (fv >= gv);
    const PiecewisePoly& src = pick_f ? f : g;
    size_t k = std::upper_bound(src.breakpoints().begin(),
                                src.breakpoints().end(), nb[i]) -
               src.breakpoints().begin() - 1;
    if (k >= src.pieces().size()) k = src.pieces().size() - 1;
    np.push_back(src.pieces()[k]);
  }
  Rat term = take_min ? rat_min(f.terminal_value(), g.terminal_value())
                      : rat_max(f.terminal_value(), g.terminal_value());
  return PiecewisePoly(std::move(nb), std::move(np), term);
}

}  // namespace

PiecewisePoly PiecewisePoly::min_with(const PiecewisePoly& o) const {
  return envelope(*this, o, true);
}

PiecewisePoly PiecewisePoly::max_with(const PiecewisePoly& o) const {
  return envelope(*this, o, false);
}

bool PiecewisePoly::same_function(const PiecewisePoly& o) const {
  if (lo() != o.lo() || hi() != o.hi()) return false;
  if (terminal_ != o.terminal_) return false;
  auto nb = merged_breakpoints(*this, o);
  for (size_t i = 0; i + 1 < nb.size(); ++i) {
    const Rat& u = nb[i];
    if (!(pieces_[piece_index(u)] == o.pieces()[o.piece_index(u)]))
      return false;
  }
  return true;
}

PiecewisePoly PiecewisePoly::normalized() const {
  std::vector<Rat> nb = {bps_.front()};
  std::vector<Poly> np = {pieces_.front()};
  for (size_t k = 1; k < pieces_.size(); ++k) {
    if (pieces_[k] == np.back()) continue;
    nb.push_back(bps_[k]);
    np.push_back(pieces_[k]);
  }
  nb.push_back(bps_.back());
  return PiecewisePoly(std::move(nb), std::move(np), terminal_);
}

PiecewisePoly PiecewisePoly::refined(const std::vector<Rat>& extra) const {
  std::set<Rat> cuts(bps_.begin(), bps_.end());
  for (const Rat& t : extra)
    if (t > lo() && t < hi()) cuts.insert(t);
  std::vector<Rat> nb(cuts.begin(), cuts.end());
  std::vector<Poly> np;
  for (size_t i = 0; i + 1 < nb.size(); ++i)
    np.push_back(pieces_[piece_index(nb[i])]);
  return PiecewisePoly(std::move(nb), std::move(np), terminal_);
}

Rat PiecewisePoly::integral() const { return integral(lo(), hi()); }

Rat PiecewisePoly::integral(const Rat& a, const Rat& b) const {
  if (a < lo() || b > hi() || a > b)
    throw DomainError("piecewise integral: bad range");
  Rat acc(0);
  for (size_t k = 0; k < pieces_.size(); ++k) {
    Rat u = rat_max(bps_[k], a), v = rat_min(bps_[k + 1], b);
    if (u < v) acc += pieces_[k].integral(u, v);
  }
  return acc;
}

bool PiecewisePoly::is_identically_zero() const {
  for (const auto& p : pieces_)
    if (!p.is_zero()) return false;
  return terminal_ == 0;
}

bool PiecewisePoly::pos_left(const Rat& t) const {
  if (t <= lo()) return false;
  auto it = std::lower_bound(bps_.begin(), bps_.end(), t);
  size_t k;
  if (it != bps_.end() && *it == t) {
    k = static_cast<size_t>(it - bps_.begin()) - 1;
  } else {
    k = piece_index(t);
  }
  const Poly& p = pieces_[k];
  // sign of p just left of t: first nonzero derivative, parity-adjusted
  Poly d = p;
  Rat v = d.eval(t);
  int order = 0;
  while (v == 0 && !d.is_zero()) {
    d = d.derivative();
    v = d.eval(t);
    ++order;
  }
  if (v == 0) return false;  // identically zero piece
  int s = rat_sign(v);
  if (order % 2 == 1) s = -s;
  return s > 0;
}

bool PiecewisePoly::pos_right(const Rat& t) const {
  if (t >= hi()) return false;
  const Poly& p = pieces_[piece_index(t)];
  Poly d = p;
  Rat v = d.eval(t);
  int order = 0;
  while (v == 0 && !d.is_zero()) {
    d = d.derivative();
    v = d.eval(t);
    ++order;
  }
  if (v == 0) return false;
  return rat_sign(v) > 0;
}

bool PiecewisePoly::positive_on_open(const Rat& a, const Rat& b) const {
  if (a >= b) return true;
  for (size_t k = 0; k < pieces_.size(); ++k) {
    Rat u = rat_max(bps_[k], a), v = rat_min(bps_[k + 1], b);
    if (u >= v) continue;
    if (!pieces_[k].positive_on_open(u, v)) return false;
    // interior seam value belongs to this piece
    if (u > a && pieces_[k].eval(u) <= 0) return false;
  }
  return true;
}

bool PiecewisePoly::nonnegative_on_domain() const {
  for (size_t k = 0; k < pieces_.size(); ++k) {
    if (pieces_[k].eval(bps_[k]) < 0) return false;
    if (!pieces_[k].nonnegative_on_open(bps_[k], bps_[k + 1])) return false;
  }
  return terminal_ >= 0;
}

bool PiecewisePoly::not_identically_zero_near(const Rat& t) const {
  if (eval(t) != 0) return true;
  if (t > lo()) {
    auto it = std::lower_bound(bps_.begin(), bps_.end(), t);
    size_t k = (it != bps_.end() && *it == t)
                   ? static_cast<size_t>(it - bps_.begin()) - 1
                   : piece_index(t);
    if (!pieces_[k].is_zero()) return true;
  }
  if (t < hi()) {
    if (!pieces_[piece_index(t)].is_zero()) return true;
  }
  return false;
}

std::pair<Rat, Rat> PiecewisePoly::strict_open_interval(const Rat& t0) const {
  if (t0 < lo() || t0 > hi())
    throw DomainError("strict_open_interval: t0 outside");

  // Left walk: largest a <= t0 with f > 0 on (a, t0).
  Rat a = t0;
  {
    Rat cursor = t0;
    while (cursor > lo()) {
      auto it = std::lower_bound(bps_.begin(), bps_.end(), cursor);
      size_t k = (it != bps_.end() && *it == cursor)
                     ? static_cast<size_t>(it - bps_.begin()) - 1
                     : piece_index(cursor);
      const Rat& u = bps_[k];
      const Poly& p = pieces_[k];
      if (p.is_zero()) {
        a = cursor;
        break;
      }
      if (!p.positive_on_open(u, cursor)) {
        // largest z in (u, cursor) with p clean on (z, cursor)
        auto roots = p.roots_in(u, cursor, kSnapDen);
        std::sort(roots.begin(), roots.end(),
                  [](const Poly::RootInfo& x, const Poly::RootInfo& y) {
                    return x.value > y.value;
                  });
        Rat boundary = cursor;
        for (const auto& r : roots) {
          if (r.value <= u || r.value >= cursor) continue;
          if (p.positive_on_open(r.value, cursor)) boundary = r.value;
          break;
        }
        a = boundary;
        break;
      }
      a = u;
      if (u == lo()) break;
      if (p.eval(u) <= 0) break;  // seam value is this piece's value
      cursor = u;
    }
  }

  // Right walk: smallest obstruction above t0.
  Rat b = t0;
  {
    Rat cursor = t0;
    while (cursor < hi()) {
      size_t k = piece_index(cursor);
      const Rat& v = bps_[k + 1];
      const Poly& p = pieces_[k];
      if (p.is_zero()) {
        b = cursor;
        break;
      }
      if (cursor > t0 && p.eval(cursor) <= 0) {
        b = cursor;  // seam value blocks
        break;
      }
      if (!p.positive_on_open(cursor, v)) {
        auto roots = p.roots_in(cursor, v, kSnapDen);
        std::sort(roots.begin(), roots.end(),
                  [](const Poly::RootInfo& x, const Poly::RootInfo& y) {
                    return x.value < y.value;
                  });
        Rat boundary = cursor;
        for (const auto& r : roots) {
          if (r.value <= cursor || r.value >= v) continue;
          if (p.positive_on_open(cursor, r.value)) boundary = r.value;
          break;
        }
        b = boundary;
        break;
      }
      b = v;
      cursor = v;
    }
  }
  return {a, b};
}

std::vector<std::pair<Rat, Rat>> PiecewisePoly::negative_regions() const {
  std::vector<std::pair<Rat, Rat>> out;
  for (size_t k = 0; k < pieces_.size(); ++k) {
    const Poly& p = pieces_[k];
    Rat u = bps_[k], v = bps_[k + 1];
    std::vector<Rat> cuts = {u, v};
    for (const auto& r : p.roots_in(u, v, kSnapDen))
      if (r.value > u && r.value < v) cuts.push_back(r.value);
    std::sort(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (p.eval((cuts[i] + cuts[i + 1]) / 2) < 0)
        out.push_back({cuts[i], cuts[i + 1]});
    }
  }
  // merge adjacent
  std::vector<std::pair<Rat, Rat>> merged;
  for (auto& seg : out) {
    if (!merged.empty() && merged.back().second == seg.first)
      merged.back().second = seg.second;
    else
      merged.push_back(seg);
  }
  return merged;
}

PiecewisePoly::MinResult PiecewisePoly::min_on(const Rat& a,
                                               const Rat& b) const {
  if (a < lo() || b > hi() || a > b) throw DomainError("min_on: bad range");
  MinResult best{eval(a), a, true};
  if (b == hi() && terminal_ < best.value) best = {terminal_, b, true};
  for (size_t k = 0; k < pieces_.size(); ++k) {
    Rat u = rat_max(bps_[k], a), v = rat_min(bps_[k + 1], b);
    if (u > v) continue;
    if (u == v && u != a) continue;
    auto m = pieces_[k].min_on_closed(u, v, kSnapDen);
    if (m.value < best.value) best = {m.value, m.arg, m.exact};
  }
  return best;
}

PiecewisePoly::LocalMinima PiecewisePoly::local_minima(const Rat& a,
                                                       const Rat& b) const {
  if (a < lo() || b > hi() || a >= b)
    throw DomainError("local_minima: bad range");
  LocalMinima out;
  out.min_value = min_on(a, b).value;

  // constancy runs: maximal stretches of equal constant pieces
  {
    size_t k = piece_index(a);
    Rat run_lo = a;
    bool in_run = pieces_[k].is_constant();
    Rat run_val = pieces_[k].constant_value();
    for (;; ++k) {
      Rat v = rat_min(bps_[k + 1], b);
      bool last = (v >= b) || (k + 1 >= pieces_.size());
      bool next_same =
          !last && pieces_[k + 1].is_constant() &&
          pieces_[k + 1].constant_value() == run_val && in_run;
      if (in_run && (last || !next_same)) {
        out.constancy.push_back({run_lo, v, run_val});
      }
      if (last) break;
      if (!next_same) {
        in_run = pieces_[k + 1].is_constant();
        run_val = pieces_[k + 1].constant_value();
        run_lo = bps_[k + 1];
      }
    }
  }

  // candidate isolated minimizers: endpoints, breakpoints, critical points
  std::set<Rat> cand = {a, b};
  for (const Rat& bp : bps_)
    if (bp > a && bp < b) cand.insert(bp);
  for (size_t k = 0; k < pieces_.size(); ++k) {
    Rat u = rat_max(bps_[k], a), v = rat_min(bps_[k + 1], b);
    if (u >= v) continue;
    Poly d = pieces_[k].derivative();
    if (d.is_zero()) continue;  // constant: handled as runs
    for (const auto& r : d.roots_in(u, v, kSnapDen))
      if (r.value >= u && r.value <= v) cand.insert(r.value);
  }
  auto inside_run = [&](const Rat& t) {
    for (const auto& run : out.constancy)
      if (t >= run.lo && t < run.hi) return true;
    return false;
  };
  for (const Rat& t : cand) {
    if (inside_run(t)) continue;
    // lower semicontinuous envelope value
    Rat g = eval(t);
    if (t > lo()) g = rat_min(g, eval(t, Side::LeftLimit));
    if (t < hi()) g = rat_min(g, eval(t, Side::RightLimit));
    // left behavior: values just left must be >= g
    bool ok = true;
    if (t > a) {
      auto it = std::lower_bound(bps_.begin(), bps_.end(), t);
      size_t k = (it != bps_.end() && *it == t)
                     ? static_cast<size_t>(it - bps_.begin()) - 1
                     : piece_index(t);
      Poly diff = pieces_[k] - Poly::constant(g);
      if (!diff.is_zero()) {
        Poly d = diff;
        Rat v = d.eval(t);
        int order = 0;
        while (v == 0 && !d.is_zero()) {
          d = d.derivative();
          v = d.eval(t);
          ++order;
        }
        int s = (v == 0) ? 0 : rat_sign(v);
        if (order % 2 == 1) s = -s;
        if (s < 0) ok = false;
      }
    }
    if (ok && t < b) {
      size_t k = piece_index(t);
      Poly diff = pieces_[k] - Poly::constant(g);
      if (!diff.is_zero()) {
        Poly d = diff;
        Rat v = d.eval(t);
        int order = 0;
        while (v == 0 && !d.is_zero()) {
          d = d.derivative();
          v = d.eval(t);
          ++order;
        }
        int s = (v == 0) ? 0 : rat_sign(v);
        if (s < 0) ok = false;
      }
    }
    if (ok) out.points.push_back({t, g});
  }
  return out;
}

PiecewisePoly::Jordan PiecewisePoly::jordan() const {
  std::set<Rat> cuts(bps_.begin(), bps_.end());
  for (size_t k = 0; k < pieces_.size(); ++k) {
    Poly d = pieces_[k].derivative();
    if (d.is_zero()) continue;
    for (const auto& r : d.roots_in(bps_[k], bps_[k + 1], kSnapDen))
      if (r.value > bps_[k] && r.value < bps_[k + 1]) cuts.insert(r.value);
  }
  std::vector<Rat> nb(cuts.begin(), cuts.end());
  std::vector<Poly> plus_pieces, minus_pieces;
  Rat plus_acc(0), minus_acc(0);
  for (size_t i = 0; i + 1 < nb.size(); ++i) {
    const Rat &u = nb[i], &v = nb[i + 1];
    size_t k = piece_index(u);
    const Poly& p = pieces_[k];
    // jump into this segment (seam between pieces)
    if (i > 0) {
      Rat jump = eval(u) - eval(u, Side::LeftLimit);
      if (jump > 0) plus_acc += jump;
      if (jump < 0) minus_acc -= jump;
    }
    // monotone on (u, v): sign of derivative at midpoint
    Poly d = p.derivative();
    Rat ds = d.is_zero() ? Rat(0) : d.eval((u + v) / 2);
    if (ds >= 0) {
      plus_pieces.push_back(p + Poly::constant(plus_acc - p.eval(u)));
      minus_pieces.push_back(Poly::constant(minus_acc));
      plus_acc += p.eval(v) - p.eval(u);
    } else {
      plus_pieces.push_back(Poly::constant(plus_acc));
      minus_pieces.push_back(-p + Poly::constant(minus_acc + p.eval(u)));
      minus_acc += p.eval(u) - p.eval(v);
    }
  }
  // terminal jump
  {
    Rat jump = terminal_ - pieces_.back().eval(hi());
    if (jump > 0) plus_acc += jump;
    if (jump < 0) minus_acc -= jump;
  }
  PiecewisePoly plus(nb, std::move(plus_pieces), plus_acc);
  PiecewisePoly minus(nb, std::move(minus_pieces), minus_acc);
  return {std::move(plus), std::move(minus)};
}

bool PiecewisePoly::nondecreasing() const {
  for (size_t k = 0; k < pieces_.size(); ++k) {
    Poly d = pieces_[k].derivative();
    if (!d.is_zero() && !d.nonnegative_on_open(bps_[k], bps_[k + 1]))
      return false;
    if (k > 0 && eval(bps_[k]) < eval(bps_[k], Side::LeftLimit)) return false;
  }
  if (terminal_ < pieces_.back().eval(hi())) return false;
  return true;
}

Rat PiecewisePoly::sup_abs() const {
  Rat bound = rat_abs(terminal_);
  for (size_t k = 0; k < pieces_.size(); ++k)
    bound = rat_max(bound, pieces_[k].abs_bound_on(bps_[k], bps_[k + 1]));
  return bound;
}

std::vector<Rat> PiecewisePoly::sign_events(const Int& max_den) const {
  std::vector<Rat> out;
  for (size_t k = 0; k < pieces_.size(); ++k) {
    const Rat &u = bps_[k], &v = bps_[k + 1];
    for (const auto& r : pieces_[k].roots_in(u, v, max_den))
      out.push_back(r.value);
    Poly d = pieces_[k].derivative();
    if (!d.is_zero())
      for (const auto& r : d.roots_in(u, v, max_den)) out.push_back(r.value);
  }
  return out;
}

Rat stieltjes(const PiecewisePoly& U, const PiecewisePoly& F) {
  if (U.lo() != F.lo() || U.hi() != F.hi())
    throw DomainError("stieltjes: domains differ");
  if (!F.nondecreasing())
    throw ContractViolation("stieltjes: integrator not nondecreasing");
  Rat acc(0);
  // smooth part
  PiecewisePoly dF = F.derivative();
  acc += (U * dF).integral();
  // interior jumps
  const auto& bps = F.breakpoints();
  for (size_t k = 1; k + 1 < bps.size(); ++k) {
    Rat jump = F.eval(bps[k]) - F.eval(bps[k], Side::LeftLimit);
    if (jump != 0) acc += U.eval(bps[k]) * jump;
  }
  // terminal jump
  Rat tj = F.terminal_value() - F.pieces().back().eval(F.hi());
  if (tj != 0) acc += U.eval(F.hi()) * tj;
  return acc;
}

}  // namespace tempoflow
