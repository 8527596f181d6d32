// Copyright 2026 The qumul Authors
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

#pragma once

#include <algorithm>
#include <stdexcept>

#include "qumul/digit_vector.hpp"
#include "qumul/natural.hpp"

namespace qumul {

/// Top-level intermediates of one Karatsuba step:
///   u = x1*y1, v = x2*y2, w = (x1+x2)*(y1+y2), z = w - (u + v).
struct KaratsubaTrace {
  Natural u, v, w, z;
};

namespace detail {

inline Natural karatsuba_rec(const Natural& x, const Natural& y, std::size_t w,
                             KaratsubaTrace* trace) {
  if (w < 4) return x * y;
  const std::size_t h = w / 2;
  const Natural x1 = x >> h, x2 = x.low_bits(h);
  const Natural y1 = y >> h, y2 = y.low_bits(h);
  const Natural u = karatsuba_rec(x1, y1, w - h, nullptr);
  const Natural v = karatsuba_rec(x2, y2, h, nullptr);
  // x1+x2 and y1+y2 need one extra bit; the sub-multiplier is widened
  // rather than reduced.
  const Natural s = karatsuba_rec(x1 + x2, y1 + y2, std::max(w - h, h) + 1,
                                  nullptr);
  const Natural z = s - (u + v);
  if (trace != nullptr) *trace = KaratsubaTrace{u, v, s, z};
  // x = 2^h x1 + x2, so u carries weight 2^{2h} (= 2^w only when w is even)
  return (u << (2 * h)) + (z << h) + v;
}

}  // namespace detail

/// Classical Karatsuba product of two n-bit integers (n a power of two),
/// following the split X = 2^{n/2} X1 + X2 and the recombination
/// P = 2^n U + 2^{n/2} Z + V. Splits whenever the width is at least 4.
inline Natural karatsuba_classical(const Natural& x, const Natural& y,
                                   std::size_t n,
                                   KaratsubaTrace* trace = nullptr) {
  if (n == 0 || !is_power_of_two(n))
    throw std::invalid_argument("karatsuba_classical: n must be a power of two");
  if (x.bit_length() > n || y.bit_length() > n)
    throw std::invalid_argument("karatsuba_classical: operand exceeds n bits");
  return detail::karatsuba_rec(x, y, n, trace);
}

}  // namespace qumul
