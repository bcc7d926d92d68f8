// Copyright 2026 The coexsim Authors
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

#include <cmath>
#include <stdexcept>

#include "coexsim/kernels.hpp"

namespace coexsim::kernels {

namespace {
// Below this |sin(ψ/2)| the ratio is replaced by its limit.
constexpr double kSingularSin = 1e-9;
}  // namespace

double axis_factor(int n, double psi) {
  if (n == 1) return 1.0;
  const double den = std::sin(0.5 * psi);
  if (std::fabs(den) < kSingularSin) return static_cast<double>(n);
  const double num = std::sin(0.5 * n * psi);
  return (num * num) / (den * den) / n;
}

void array_factor_scalar(const ArrayFactorArgs& args, std::span<double> out) {
  const std::size_t n = out.size();
  if (args.beta_x.size() < n || args.beta_y.size() < n) {
    throw std::invalid_argument("array_factor: phase spans shorter than output");
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = axis_factor(args.rows, args.geo_x + args.beta_x[i]) *
             axis_factor(args.cols, args.geo_y + args.beta_y[i]);
  }
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace coexsim::kernels
