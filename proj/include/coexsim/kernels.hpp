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

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace coexsim::kernels {

// Batched planar array factor over a codebook sweep. For one look direction
// the geometric phases are fixed, so each entry i evaluates
//
//   AF_i = (1/M) sin²(M ψx_i / 2) / sin²(ψx_i / 2)
//        · (1/L) sin²(L ψy_i / 2) / sin²(ψy_i / 2)
//
// with ψx_i = geo_x + beta_x[i] and ψy_i = geo_y + beta_y[i]. The removable
// singularity sin(ψ/2) = 0 evaluates to the limit M (resp. L).

struct ArrayFactorArgs {
  int rows = 1;
  int cols = 1;
  double geo_x = 0.0;
  double geo_y = 0.0;
  std::span<const double> beta_x;
  std::span<const double> beta_y;
};

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Reference implementation built on std::sin.
void array_factor_scalar(const ArrayFactorArgs& args, std::span<double> out);

/// AVX2 variant. Only callable when avx2_supported() is true.
void array_factor_avx2(const ArrayFactorArgs& args, std::span<double> out);

/// True when the AVX2 variant was compiled in and the CPU reports AVX2.
bool avx2_supported();

/// ISA picked at first use: COEXSIM_KERNEL=scalar|avx2|auto, defaulting to
/// the widest supported variant. An unsupported request falls back to scalar.
Isa active_isa();

/// Overrides the selection for the rest of the process (tests, benchmarks).
void set_active_isa(Isa isa);

/// Dispatches to the active variant.
void array_factor(const ArrayFactorArgs& args, std::span<double> out);

/// One-axis factor (1/n) sin²(nψ/2)/sin²(ψ/2); shared by both variants'
/// tests and the single-beam API.
double axis_factor(int n, double psi);

}  // namespace coexsim::kernels
