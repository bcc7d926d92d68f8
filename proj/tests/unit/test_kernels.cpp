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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "coexsim/kernels.hpp"
#include "coexsim/rng.hpp"
#include "coexsim/units.hpp"

using namespace coexsim;
namespace k = coexsim::kernels;

namespace {

struct Batch {
  std::vector<double> bx, by;
};

Batch random_phases(std::size_t n, std::uint64_t seed) {
  UniformStream rng(seed);
  Batch b;
  for (std::size_t i = 0; i < n; ++i) {
    b.bx.push_back(rng.uniform(-kPi, kPi));
    b.by.push_back(rng.uniform(-kPi, kPi));
  }
  return b;
}

}  // namespace

TEST_CASE("axis_factor limits and nulls") {
  CHECK(k::axis_factor(1, 0.7) == 1.0);
  CHECK(k::axis_factor(4, 0.0) == doctest::Approx(4.0));
  CHECK(k::axis_factor(16, 2.0 * kPi) == doctest::Approx(16.0));
  CHECK(k::axis_factor(4, kPi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(k::axis_factor(4, kPi / 2.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("scalar kernel matches the per-entry axis factor product") {
  const Batch b = random_phases(67, 5);
  k::ArrayFactorArgs args{4, 16, 0.3, -1.1, b.bx, b.by};
  std::vector<double> out(b.bx.size());
  k::array_factor_scalar(args, out);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double ref = k::axis_factor(4, 0.3 + b.bx[i]) * k::axis_factor(16, -1.1 + b.by[i]);
    CHECK(out[i] == doctest::Approx(ref).epsilon(1e-14));
  }
}

TEST_CASE("scalar kernel rejects short phase spans") {
  std::vector<double> bx(3), by(2), out(3);
  k::ArrayFactorArgs args{4, 4, 0, 0, bx, by};
  CHECK_THROWS_AS(k::array_factor_scalar(args, out), std::invalid_argument);
}

TEST_CASE("AVX2 kernel agrees with the scalar kernel") {
  if (!k::avx2_supported()) {
    MESSAGE("AVX2 not available on this machine; equivalence check skipped");
    return;
  }
  const int shapes[][2] = {{1, 1}, {1, 4}, {4, 4}, {4, 16}, {16, 16}, {3, 5}};
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (const auto& sh : shapes) {
      // Odd lengths exercise the tail path.
      const std::size_t n = 1 + seed % 37 + 4 * (seed % 5);
      const Batch b = random_phases(n, seed * 977);
      UniformStream rng(seed);
      k::ArrayFactorArgs args{sh[0], sh[1], rng.uniform(-7, 7), rng.uniform(-7, 7), b.bx, b.by};
      std::vector<double> s(n), v(n);
      k::array_factor_scalar(args, s);
      k::array_factor_avx2(args, v);
      for (std::size_t i = 0; i < n; ++i) {
        const double bound = sh[0] * sh[1];
        REQUIRE(std::fabs(s[i] - v[i]) <= 1e-9 * bound);
      }
    }
  }
}

TEST_CASE("AVX2 kernel handles the removable singularity") {
  if (!k::avx2_supported()) return;
  // Phase sums that land exactly on 0 and 2π.
  std::vector<double> bx{0.0, 2.0 * kPi, -2.0 * kPi, 0.0, 1e-13};
  std::vector<double> by{0.0, 0.0, 2.0 * kPi, 4.0 * kPi, -1e-13};
  k::ArrayFactorArgs args{4, 16, 0.0, 0.0, bx, by};
  std::vector<double> s(bx.size()), v(bx.size());
  k::array_factor_scalar(args, s);
  k::array_factor_avx2(args, v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i] == doctest::Approx(64.0));
    CHECK(v[i] == doctest::Approx(64.0));
  }
}

TEST_CASE("dispatch honours an explicit selection") {
  const k::Isa before = k::active_isa();
  k::set_active_isa(k::Isa::kScalar);
  CHECK(k::active_isa() == k::Isa::kScalar);
  CHECK(k::isa_name(k::Isa::kScalar) == "scalar");
  CHECK(k::isa_name(k::Isa::kAvx2) == "avx2");

  const Batch b = random_phases(9, 3);
  k::ArrayFactorArgs args{4, 4, 0.2, 0.4, b.bx, b.by};
  std::vector<double> via_dispatch(9), direct(9);
  k::array_factor(args, via_dispatch);
  k::array_factor_scalar(args, direct);
  CHECK(via_dispatch == direct);
  k::set_active_isa(before);
}
