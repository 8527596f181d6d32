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
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qumul {

/// Arbitrary-precision non-negative integer.
///
/// Limbs are base 2^32, little-endian, with no trailing zero limbs
/// (zero is the empty limb vector). Multiplication is deliberately
/// schoolbook: this type is the ground-truth oracle the fancier
/// multipliers are checked against.
class Natural {
 public:
  Natural() = default;

  Natural(std::uint64_t v) {  // NOLINT: implicit by design, value semantics
    while (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v & 0xFFFFFFFFu));
      v >>= 32;
    }
  }

  /// Parses a decimal string, or hexadecimal with a 0x/0X prefix.
  static Natural from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Natural: empty string");
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      Natural r;
      for (char ch : s.substr(2)) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw std::invalid_argument("Natural: bad hex digit");
        r = (r << 4) + Natural(static_cast<std::uint64_t>(d));
      }
      return r;
    }
    Natural r;
    for (char ch : s) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("Natural: bad decimal digit");
      r.mul_small_add(10, static_cast<std::uint32_t>(ch - '0'));
    }
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }

  /// Number of bits in the binary representation; 0 for zero.
  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
  }

  bool bit(std::size_t i) const {
    const std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (std::uint32_t w : limbs_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Low k bits as a Natural (x mod 2^k).
  Natural low_bits(std::size_t k) const {
    Natural r;
    const std::size_t full = k / 32, rem = k % 32;
    const std::size_t n = std::min(limbs_.size(), full + (rem ? 1 : 0));
    r.limbs_.assign(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(n));
    if (rem && n == full + 1)
      r.limbs_.back() &= (rem == 32) ? 0xFFFFFFFFu : ((1u << rem) - 1u);
    r.trim();
    return r;
  }

  std::uint64_t to_uint64() const {
    if (bit_length() > 64) throw std::overflow_error("Natural: exceeds 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
  }

  friend bool operator==(const Natural& a, const Natural& b) = default;

  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
  }

  friend Natural operator+(const Natural& a, const Natural& b) {
    Natural r;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.resize(n + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = carry;
      if (i < a.limbs_.size()) s += a.limbs_[i];
      if (i < b.limbs_.size()) s += b.limbs_[i];
      r.limbs_[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    r.limbs_[n] = static_cast<std::uint32_t>(carry);
    r.trim();
    return r;
  }

  friend Natural operator-(const Natural& a, const Natural& b) {
    if (a < b) throw std::underflow_error("Natural: subtraction underflow");
    Natural r;
    r.limbs_.resize(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                       (i < b.limbs_.size() ? b.limbs_[i] : 0);
      borrow = 0;
      if (d < 0) {
        d += (1ll << 32);
        borrow = 1;
      }
      r.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    r.trim();
    return r;
  }

  friend Natural operator*(const Natural& a, const Natural& b) {
    Natural r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                            r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.trim();
    return r;
  }

  friend Natural operator<<(const Natural& a, std::size_t k) {
    if (a.is_zero() || k == 0) return a;
    Natural r;
    const std::size_t limb_shift = k / 32, bit_shift = k % 32;
    r.limbs_.assign(a.limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      const std::uint64_t w = static_cast<std::uint64_t>(a.limbs_[i]) << bit_shift;
      r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(w);
      r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(w >> 32);
    }
    r.trim();
    return r;
  }

  friend Natural operator>>(const Natural& a, std::size_t k) {
    const std::size_t limb_shift = k / 32, bit_shift = k % 32;
    if (limb_shift >= a.limbs_.size()) return Natural{};
    Natural r;
    r.limbs_.assign(a.limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift),
                    a.limbs_.end());
    if (bit_shift != 0) {
      for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        r.limbs_[i] >>= bit_shift;
        if (i + 1 < r.limbs_.size())
          r.limbs_[i] |= r.limbs_[i + 1] << (32 - bit_shift);
      }
    }
    r.trim();
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
      // divide by 10^9, collecting the remainder as one output chunk
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
        rem = cur % 1000000000ull;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      std::string chunk = std::to_string(rem);
      if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
      out.insert(0, chunk);
    }
    return out;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  void mul_small_add(std::uint32_t m, std::uint32_t add) {
    std::uint64_t carry = add;
    for (std::uint32_t& w : limbs_) {
      const std::uint64_t cur = static_cast<std::uint64_t>(w) * m + carry;
      w = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
  }

  std::vector<std::uint32_t> limbs_;
};

/// 2^k as a Natural.
inline Natural pow2(std::size_t k) { return Natural(1) << k; }

}  // namespace qumul
