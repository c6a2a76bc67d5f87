// Copyright 2026 ballfield developers
//
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

#ifndef BALLFIELD_QUADPREC_HPP
#define BALLFIELD_QUADPREC_HPP

// __float128 helpers for the two-term 1F2 closed forms, whose terms cancel
// to ~12 digits at z = (a r)^2 = 100. Internal only.

#include <quadmath.h>

#include <stdexcept>

namespace ballfield::detail {

using qfloat = __float128;

inline qfloat q_hyp1f2(qfloat a1, qfloat b1, qfloat b2, qfloat z) {
  qfloat sum = 1.0Q, term = 1.0Q;
  int below = 0;
  for (int k = 0; k < 20000; ++k) {
    term *= (a1 + k) / ((b1 + k) * (b2 + k)) * z / (k + 1);
    sum += term;
    const qfloat mag = fabsq(sum) > 1.0Q ? fabsq(sum) : 1.0Q;
    if (fabsq(term) < 1e-36Q * mag) {
      if (++below >= 3) return sum;
    } else {
      below = 0;
    }
  }
  throw std::runtime_error("q_hyp1f2: series did not converge");
}

}  // namespace ballfield::detail

#endif
