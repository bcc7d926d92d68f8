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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "coexsim/kernels.hpp"

namespace coexsim::kernels {

#ifndef COEXSIM_HAVE_AVX2
void array_factor_avx2(const ArrayFactorArgs&, std::span<double>) {
  throw std::logic_error("array_factor_avx2: not compiled for this target");
}
#endif

bool avx2_supported() {
#if defined(COEXSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

namespace {

Isa detect() {
  const char* env = std::getenv("COEXSIM_KERNEL");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return Isa::kScalar;
  return avx2_supported() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<int>& selected() {
  static std::atomic<int> isa{static_cast<int>(detect())};
  return isa;
}

}  // namespace

Isa active_isa() { return static_cast<Isa>(selected().load(std::memory_order_relaxed)); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2_supported()) isa = Isa::kScalar;
  selected().store(static_cast<int>(isa), std::memory_order_relaxed);
}

void array_factor(const ArrayFactorArgs& args, std::span<double> out) {
  if (active_isa() == Isa::kAvx2) {
    array_factor_avx2(args, out);
  } else {
    array_factor_scalar(args, out);
  }
}

}  // namespace coexsim::kernels
