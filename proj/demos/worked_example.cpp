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

// Walks the convolution multiplier through 8616 x 4532 stage by stage:
// register plan, digit states, postselection probability, decoded
// coefficients, and the carry-propagated product.

#include <cstdio>

#include "qumul/qumul.hpp"

int main() {
  using namespace qumul;
  const Natural a(8616), b(4532);

  const RegisterPlan plan = plan_registers(a, b);
  std::printf("operands       %s x %s\n", a.to_string().c_str(),
              b.to_string().c_str());
  std::printf("plan           k=%d qubits per register, D=%zu digits, "
              "weights %zu and %zu\n",
              plan.k, plan.d, plan.weight_a, plan.weight_b);

  const Statevector sa = prepare_digit_state(a, plan.k);
  std::printf("digit state a  amplitude %.6f on indices:", 1.0 / plan.z_a);
  for (std::size_t j = 0; j < plan.d; ++j)
    if (std::abs(sa.amplitude(j)) > 1e-12) std::printf(" %zu", j);
  std::printf("\n");

  std::printf("postselection  p = %.6f (exact %.6f)\n",
              success_probability(a, b), 66.0 / 960.0);

  const ConvolutionOutcome out = multiply_exact(a, b);
  std::printf("coefficients  ");
  for (std::size_t j = 0; j < out.d; ++j)
    if (out.coefficients[j] != 0)
      std::printf(" %zu:%llu", j,
                  static_cast<unsigned long long>(out.coefficients[j]));
  std::printf("\nproduct        %s\n", out.product.to_string().c_str());

  const ConvolutionOutcome boosted = amplified_multiply(a, b);
  std::printf("amplified      p = %.6f after n_opt iterations\n",
              boosted.success_probability);
  return out.product == a * b ? 0 : 1;
}
