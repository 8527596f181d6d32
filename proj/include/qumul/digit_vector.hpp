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

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qumul/natural.hpp"

namespace qumul {

/// Digit vector, little-endian: index j carries weight 2^j. Input encodings
/// are 0/1 bit vectors; convolution outputs carry small non-negative
/// coefficients whose carry propagation is deferred to from_coefficients().
using DigitVector = std::vector<std::uint64_t>;

inline bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

/// Binary digit vector of x, zero-padded to length d (d a power of two).
inline DigitVector to_digit_vector(const Natural& x, std::size_t d) {
  if (!is_power_of_two(d))
    throw std::invalid_argument("to_digit_vector: length must be a power of two");
  if (d < x.bit_length())
    throw std::length_error("to_digit_vector: length below bit length");
  DigitVector v(d, 0);
  for (std::size_t j = 0; j < x.bit_length(); ++j) v[j] = x.bit(j) ? 1 : 0;
  return v;
}

/// Sum_j c[j] * 2^j in arbitrary precision. This is the classical carry
/// propagation step that turns convolution coefficients back into an integer.
inline Natural from_coefficients(const DigitVector& c) {
  Natural r;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) r = r + (Natural(c[j]) << j);
  return r;
}

/// Cyclic convolution: result[j] = Sum_i f[i] * g[(j - i) mod D].
/// With enough zero padding this coincides with linear convolution and
/// from_coefficients(result) = value(f) * value(g).
inline DigitVector convolve_direct(const DigitVector& f, const DigitVector& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("convolve_direct: length mismatch");
  const std::size_t d = f.size();
  DigitVector r(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < d; ++i)
      acc += f[i] * g[(j + d - i) % d];
    r[j] = acc;
  }
  return r;
}

/// Hamming weight of an input encoding (number of nonzero digits).
inline std::size_t vector_weight(const DigitVector& v) {
  std::size_t w = 0;
  for (auto c : v)
    if (c != 0) ++w;
  return w;
}

}  // namespace qumul
