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

// Compiled with -mavx2 only; FMA stays off so products round like the scalar
// reference.
#include <immintrin.h>

#include <array>
#include <stdexcept>

#include "coexsim/kernels.hpp"

namespace coexsim::kernels {

namespace {

// Cephes sin/cos minimax coefficients on [-π/4, π/4].
constexpr double kSinCof[] = {1.58962301576546568060e-10,
                              -2.50507477628578072866e-8,
                              2.75573136213857245213e-6,
                              -1.98412698295895385996e-4,
                              8.33333333332211858878e-3,
                              -1.66666666666666307295e-1};
constexpr double kCosCof[] = {-1.13585365213876817300e-11,
                              2.08757008419747316778e-9,
                              -2.75573141792967388112e-7,
                              2.48015872888517045348e-5,
                              -1.38888888888730564116e-3,
                              4.16666666666665929218e-2};
// π/4 split into three parts for extended-precision range reduction.
constexpr double kDp1 = 7.85398125648498535156e-1;
constexpr double kDp2 = 3.77489470793079817668e-8;
constexpr double kDp3 = 2.69515142907905952645e-15;
constexpr double kFourOverPi = 1.27323954473516268615;

inline __m256d polevl(__m256d z, const double (&c)[6]) {
  __m256d acc = _mm256_set1_pd(c[0]);
  for (int i = 1; i < 6; ++i) {
    acc = _mm256_add_pd(_mm256_mul_pd(acc, z), _mm256_set1_pd(c[i]));
  }
  return acc;
}

// sin²(x). The sign of sin never matters here, so the octant logic only has
// to pick between the sine and cosine polynomials.
inline __m256d sin_squared(__m256d x) {
  x = _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
  __m256d j = _mm256_floor_pd(_mm256_mul_pd(x, _mm256_set1_pd(kFourOverPi)));
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d odd = _mm256_sub_pd(
      j, _mm256_mul_pd(two, _mm256_floor_pd(_mm256_mul_pd(j, _mm256_set1_pd(0.5)))));
  j = _mm256_add_pd(j, odd);

  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(j, _mm256_set1_pd(kDp1)));
  r = _mm256_sub_pd(r, _mm256_mul_pd(j, _mm256_set1_pd(kDp2)));
  r = _mm256_sub_pd(r, _mm256_mul_pd(j, _mm256_set1_pd(kDp3)));

  // j is even; j mod 4 == 2 selects the cosine polynomial.
  const __m256d q = _mm256_sub_pd(
      j, _mm256_mul_pd(_mm256_set1_pd(4.0),
                       _mm256_floor_pd(_mm256_mul_pd(j, _mm256_set1_pd(0.25)))));
  const __m256d use_cos = _mm256_cmp_pd(q, two, _CMP_EQ_OQ);

  const __m256d z = _mm256_mul_pd(r, r);
  const __m256d sin_poly =
      _mm256_add_pd(r, _mm256_mul_pd(_mm256_mul_pd(r, z), polevl(z, kSinCof)));
  const __m256d cos_poly = _mm256_add_pd(
      _mm256_sub_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(_mm256_set1_pd(0.5), z)),
      _mm256_mul_pd(_mm256_mul_pd(z, z), polevl(z, kCosCof)));
  const __m256d s = _mm256_blendv_pd(sin_poly, cos_poly, use_cos);
  return _mm256_mul_pd(s, s);
}

inline __m256d axis_factor_v(int n, __m256d psi) {
  if (n == 1) return _mm256_set1_pd(1.0);
  const __m256d nd = _mm256_set1_pd(static_cast<double>(n));
  const __m256d den2 = sin_squared(_mm256_mul_pd(_mm256_set1_pd(0.5), psi));
  const __m256d num2 = sin_squared(_mm256_mul_pd(_mm256_set1_pd(0.5 * n), psi));
  const __m256d ratio = _mm256_div_pd(_mm256_div_pd(num2, den2), nd);
  const __m256d singular = _mm256_cmp_pd(den2, _mm256_set1_pd(1e-18), _CMP_LT_OQ);
  return _mm256_blendv_pd(ratio, nd, singular);
}

inline __m256d af4(const ArrayFactorArgs& a, const double* bx, const double* by) {
  const __m256d px = _mm256_add_pd(_mm256_set1_pd(a.geo_x), _mm256_loadu_pd(bx));
  const __m256d py = _mm256_add_pd(_mm256_set1_pd(a.geo_y), _mm256_loadu_pd(by));
  return _mm256_mul_pd(axis_factor_v(a.rows, px), axis_factor_v(a.cols, py));
}

}  // namespace

void array_factor_avx2(const ArrayFactorArgs& args, std::span<double> out) {
  const std::size_t n = out.size();
  if (args.beta_x.size() < n || args.beta_y.size() < n) {
    throw std::invalid_argument("array_factor: phase spans shorter than output");
  }
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i,
                     af4(args, args.beta_x.data() + i, args.beta_y.data() + i));
  }
  if (i < n) {
    std::array<double, 4> bx{}, by{}, res{};
    for (std::size_t t = 0; i + t < n; ++t) {
      bx[t] = args.beta_x[i + t];
      by[t] = args.beta_y[i + t];
    }
    _mm256_storeu_pd(res.data(), af4(args, bx.data(), by.data()));
    for (std::size_t t = 0; i + t < n; ++t) out[i + t] = res[t];
  }
}

}  // namespace coexsim::kernels
