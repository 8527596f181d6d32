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

// Prints how the good-branch probability rotates with Grover iterations,
// next to the sin^2((2m+1) theta) closed form.

#include <cstdio>

#include "qumul/qumul.hpp"

int main() {
  using namespace qumul;
  const Natural a(8616), b(4532);
  const AmplificationPlan plan =
      plan_amplification(success_probability(a, b));
  std::printf("p0 = %.6f, theta = %.6f, n_opt = %u\n", plan.p0, plan.theta,
              plan.n_opt);
  std::printf("%4s  %12s  %12s\n", "m", "measured", "sin^2((2m+1)t)");
  for (const auto& row : amplification_sweep(a, b, 6))
    std::printf("%4u  %12.9f  %12.9f\n", row.m, row.measured,
                row.closed_form);
  return 0;
}
