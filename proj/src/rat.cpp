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

#include "tempoflow/rat.hpp"

#include <cmath>
#include <cstdlib>

namespace tempoflow {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(p, q);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

std::string rat_str(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

double rat_double(const Rat& r) { return r.convert_to<double>(); }

Rat snap_to_rational(double x, const Int& max_den) {
  if (!std::isfinite(x)) throw DomainError("cannot snap non-finite value");
  bool neg = x < 0;
  if (neg) x = -x;
  double intpart;
  double frac = std::modf(x, &intpart);
  Int whole = Int(static_cast<long long>(intpart));
  // Stern-Brocot search for the best approximation of frac in [0,1].
  Int pl = 0, ql = 1, pr = 1, qr = 1;
  Int best_p = 0, best_q = 1;
  double best_err = frac;
  for (int it = 0; it < 256; ++it) {
    Int pm = pl + pr, qm = ql + qr;
    if (qm > max_den) break;
    double mid = pm.convert_to<double>() / qm.convert_to<double>();
    double err = std::fabs(mid - frac);
    if (err < best_err) {
      best_err = err;
      best_p = pm;
      best_q = qm;
    }
    if (mid < frac) {
      pl = pm;
      ql = qm;
    } else if (mid > frac) {
      pr = pm;
      qr = qm;
    } else {
      break;
    }
  }
  Rat out = Rat(whole) + Rat(best_p, best_q);
  return neg ? Rat(-out) : out;
}

}  // namespace tempoflow
