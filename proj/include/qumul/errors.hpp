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

#include <stdexcept>
#include <string>

namespace qumul {

/// Floating-point residue too large to round a coefficient safely.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested statevector would exceed the configured amplitude budget.
class MemoryCapError : public std::runtime_error {
 public:
  explicit MemoryCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Postselected branch has (numerically) zero probability.
class ImpossibleBranchError : public std::runtime_error {
 public:
  explicit ImpossibleBranchError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A sampled run kept no shots, so nothing can be decoded.
class InsufficientShotsError : public std::runtime_error {
 public:
  explicit InsufficientShotsError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qumul
