#if defined(CHEAPTALK_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "cheaptalk/kernels.hpp"

namespace cheaptalk::kernels::avx2 {

namespace {

// ((lane0 + lane1) + (lane2 + lane3)), matching the scalar reduction.
inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  double l0 = _mm_cvtsd_f64(lo);
  double l1 = _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
  double l2 = _mm_cvtsd_f64(hi);
  double l3 = _mm_cvtsd_f64(_mm_unpackhi_pd(hi, hi));
  return (l0 + l1) + (l2 + l3);
}

}  // namespace

double weighted_sum(const double* w, const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  const std::size_t main_n = n & ~static_cast<std::size_t>(15);
  for (std::size_t i = 0; i < main_n; i += 16) {
    acc0 = _mm256_add_pd(
        acc0, _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(w + i + 4),
                                             _mm256_loadu_pd(x + i + 4)));
    acc2 = _mm256_add_pd(acc2, _mm256_mul_pd(_mm256_loadu_pd(w + i + 8),
                                             _mm256_loadu_pd(x + i + 8)));
    acc3 = _mm256_add_pd(acc3, _mm256_mul_pd(_mm256_loadu_pd(w + i + 12),
                                             _mm256_loadu_pd(x + i + 12)));
  }
  __m256d v = _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3));
  double total = hsum(v);
  double tail = 0.0;
  for (std::size_t i = main_n; i < n; ++i) tail += w[i] * x[i];
  return total + tail;
}

double mix_expectation(const double* mu, const double* p, const double* x0,
                       const double* x1, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc[4] = {_mm256_setzero_pd(), _mm256_setzero_pd(),
                    _mm256_setzero_pd(), _mm256_setzero_pd()};
  const std::size_t main_n = n & ~static_cast<std::size_t>(15);
  for (std::size_t i = 0; i < main_n; i += 16) {
    for (int k = 0; k < 4; ++k) {
      const std::size_t o = i + 4 * static_cast<std::size_t>(k);
      __m256d pv = _mm256_loadu_pd(p + o);
      __m256d mix = _mm256_add_pd(
          _mm256_mul_pd(pv, _mm256_loadu_pd(x0 + o)),
          _mm256_mul_pd(_mm256_sub_pd(one, pv), _mm256_loadu_pd(x1 + o)));
      acc[k] = _mm256_add_pd(acc[k], _mm256_mul_pd(_mm256_loadu_pd(mu + o), mix));
    }
  }
  __m256d v =
      _mm256_add_pd(_mm256_add_pd(acc[0], acc[1]), _mm256_add_pd(acc[2], acc[3]));
  double total = hsum(v);
  double tail = 0.0;
  for (std::size_t i = main_n; i < n; ++i) {
    tail += mu[i] * (p[i] * x0[i] + (1.0 - p[i]) * x1[i]);
  }
  return total + tail;
}

void obedience_slacks(const double* mu, const double* p, const double* v0,
                      const double* v1, std::size_t n, double& slack0,
                      double& slack1) {
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  const std::size_t main_n = n & ~static_cast<std::size_t>(3);
  for (std::size_t i = 0; i < main_n; i += 4) {
    __m256d muv = _mm256_loadu_pd(mu + i);
    __m256d pv = _mm256_loadu_pd(p + i);
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(v0 + i), _mm256_loadu_pd(v1 + i));
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_mul_pd(muv, pv), d));
    a1 = _mm256_sub_pd(
        a1, _mm256_mul_pd(_mm256_mul_pd(muv, _mm256_sub_pd(one, pv)), d));
  }
  double t0 = hsum(a0);
  double t1 = hsum(a1);
  double tail0 = 0.0, tail1 = 0.0;
  for (std::size_t i = main_n; i < n; ++i) {
    const double d = v0[i] - v1[i];
    tail0 += (mu[i] * p[i]) * d;
    tail1 -= (mu[i] * (1.0 - p[i])) * d;
  }
  slack0 = t0 + tail0;
  slack1 = t1 + tail1;
}

void value_summary(const double* mu, const double* p, const double* v0,
                   const double* v1, std::size_t n, double& slack0,
                   double& slack1, double& w0, double& w1) {
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  __m256d b0 = _mm256_setzero_pd();
  __m256d b1 = _mm256_setzero_pd();
  const std::size_t main_n = n & ~static_cast<std::size_t>(3);
  for (std::size_t i = 0; i < main_n; i += 4) {
    __m256d muv = _mm256_loadu_pd(mu + i);
    __m256d pv = _mm256_loadu_pd(p + i);
    __m256d v0v = _mm256_loadu_pd(v0 + i);
    __m256d v1v = _mm256_loadu_pd(v1 + i);
    __m256d d = _mm256_sub_pd(v0v, v1v);
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_mul_pd(muv, pv), d));
    a1 = _mm256_sub_pd(
        a1, _mm256_mul_pd(_mm256_mul_pd(muv, _mm256_sub_pd(one, pv)), d));
    b0 = _mm256_add_pd(b0, _mm256_mul_pd(muv, v0v));
    b1 = _mm256_add_pd(b1, _mm256_mul_pd(muv, v1v));
  }
  double t0 = hsum(a0);
  double t1 = hsum(a1);
  double u0 = hsum(b0);
  double u1 = hsum(b1);
  for (std::size_t i = main_n; i < n; ++i) {
    const double d = v0[i] - v1[i];
    t0 += (mu[i] * p[i]) * d;
    t1 -= (mu[i] * (1.0 - p[i])) * d;
    u0 += mu[i] * v0[i];
    u1 += mu[i] * v1[i];
  }
  slack0 = t0;
  slack1 = t1;
  w0 = u0;
  w1 = u1;
}

void class_minmax(const double* p, const std::int32_t* cls, std::size_t n,
                  double mins[4], double maxs[4]) {
  const double inf = std::numeric_limits<double>::infinity();
  __m256d vmin[4], vmax[4];
  for (int c = 0; c < 4; ++c) {
    vmin[c] = _mm256_set1_pd(inf);
    vmax[c] = _mm256_set1_pd(-inf);
  }
  const std::size_t main_n = n & ~static_cast<std::size_t>(3);
  for (std::size_t i = 0; i < main_n; i += 4) {
    __m256d pv = _mm256_loadu_pd(p + i);
    __m256i cv =
        _mm256_cvtepi32_epi64(_mm_loadu_si128(
            reinterpret_cast<const __m128i*>(cls + i)));
    for (int c = 0; c < 4; ++c) {
      __m256d mask = _mm256_castsi256_pd(
          _mm256_cmpeq_epi64(cv, _mm256_set1_epi64x(c)));
      __m256d lo = _mm256_blendv_pd(_mm256_set1_pd(inf), pv, mask);
      __m256d hi = _mm256_blendv_pd(_mm256_set1_pd(-inf), pv, mask);
      vmin[c] = _mm256_min_pd(vmin[c], lo);
      vmax[c] = _mm256_max_pd(vmax[c], hi);
    }
  }
  for (int c = 0; c < 4; ++c) {
    alignas(32) double tmp[4];
    _mm256_storeu_pd(tmp, vmin[c]);
    mins[c] = std::min(std::min(tmp[0], tmp[1]), std::min(tmp[2], tmp[3]));
    _mm256_storeu_pd(tmp, vmax[c]);
    maxs[c] = std::max(std::max(tmp[0], tmp[1]), std::max(tmp[2], tmp[3]));
  }
  for (std::size_t i = main_n; i < n; ++i) {
    const int c = cls[i];
    if (p[i] < mins[c]) mins[c] = p[i];
    if (p[i] > maxs[c]) maxs[c] = p[i];
  }
}

}  // namespace cheaptalk::kernels::avx2

#endif  // CHEAPTALK_HAVE_AVX2
