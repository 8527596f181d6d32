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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qumul/digit_vector.hpp"
#include "qumul/errors.hpp"
#include "qumul/natural.hpp"

namespace qumul {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Unitary DFT with entry (j,k) = omega^{jk} / sqrt(D), omega = e^{2*pi*i/D}.
/// The positive-exponent forward convention matches the QFT, so the
/// convolution identity reads F(f) .* F(g) = F(f*g) / sqrt(D).
/// Radix-2 in-place Cooley-Tukey; D must be a power of two.
inline ComplexVector dft(ComplexVector v, bool inverse = false) {
  const std::size_t d = v.size();
  if (!is_power_of_two(d) || d == 0)
    throw std::invalid_argument("dft: size must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < d; ++i) {
    std::size_t bit = d >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  const double sign = inverse ? -1.0 : 1.0;
  for (std::size_t len = 2; len <= d; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < d; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex u = v[i + j];
        const Complex t = w * v[i + j + len / 2];
        v[i + j] = u + t;
        v[i + j + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Complex& a : v) a *= scale;
  return v;
}

/// Multiplies two integers through the convolution theorem: digit vectors,
/// forward DFTs, element-wise product, inverse DFT, round, carry-propagate.
/// Throws PrecisionError when any coefficient is more than 0.5 away from an
/// integer (double precision no longer suffices at the chosen length).
inline Natural fft_multiply(const Natural& x, const Natural& y) {
  if (x.is_zero() || y.is_zero()) return Natural{};
  std::size_t d = 2;
  while (d < x.bit_length() + y.bit_length()) d <<= 1;
  const DigitVector f = to_digit_vector(x, d), g = to_digit_vector(y, d);
  ComplexVector fc(d), gc(d);
  for (std::size_t i = 0; i < d; ++i) {
    fc[i] = Complex(static_cast<double>(f[i]), 0.0);
    gc[i] = Complex(static_cast<double>(g[i]), 0.0);
  }
  fc = dft(std::move(fc));
  gc = dft(std::move(gc));
  const double root_d = std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) fc[i] *= gc[i] * root_d;
  fc = dft(std::move(fc), /*inverse=*/true);
  DigitVector c(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const double re = fc[i].real();
    const double rounded = std::round(re);
    if (std::abs(re - rounded) >= 0.5 || std::abs(fc[i].imag()) >= 0.5 ||
        rounded < 0.0)
      throw PrecisionError("fft_multiply: rounding residue too large");
    c[i] = static_cast<std::uint64_t>(rounded);
  }
  return from_coefficients(c);
}

}  // namespace qumul
