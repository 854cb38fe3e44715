#include <limits>

#include "cheaptalk/kernels.hpp"

// Reference implementations. The accumulator layout (16 partial sums
// reduced as ((0+1)+(2+3)) per lane, then across lanes) mirrors the AVX2
// variant exactly, so both paths produce bit-identical results.

namespace cheaptalk::kernels::scalar {

double weighted_sum(const double* w, const double* x, std::size_t n) {
  double acc[16] = {};
  const std::size_t main_n = n & ~static_cast<std::size_t>(15);
  for (std::size_t i = 0; i < main_n; i += 16) {
    for (std::size_t m = 0; m < 16; ++m) acc[m] += w[i + m] * x[i + m];
  }
  double lane[4];
  for (int j = 0; j < 4; ++j) {
    lane[j] = (acc[j] + acc[4 + j]) + (acc[8 + j] + acc[12 + j]);
  }
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  double tail = 0.0;
  for (std::size_t i = main_n; i < n; ++i) tail += w[i] * x[i];
  return total + tail;
}

double mix_expectation(const double* mu, const double* p, const double* x0,
                       const double* x1, std::size_t n) {
  double acc[16] = {};
  const std::size_t main_n = n & ~static_cast<std::size_t>(15);
  for (std::size_t i = 0; i < main_n; i += 16) {
    for (std::size_t m = 0; m < 16; ++m) {
      const std::size_t k = i + m;
      acc[m] += mu[k] * (p[k] * x0[k] + (1.0 - p[k]) * x1[k]);
    }
  }
  double lane[4];
  for (int j = 0; j < 4; ++j) {
    lane[j] = (acc[j] + acc[4 + j]) + (acc[8 + j] + acc[12 + j]);
  }
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  double tail = 0.0;
  for (std::size_t i = main_n; i < n; ++i) {
    tail += mu[i] * (p[i] * x0[i] + (1.0 - p[i]) * x1[i]);
  }
  return total + tail;
}

void obedience_slacks(const double* mu, const double* p, const double* v0,
                      const double* v1, std::size_t n, double& slack0,
                      double& slack1) {
  double a0[4] = {}, a1[4] = {};
  const std::size_t main_n = n & ~static_cast<std::size_t>(3);
  for (std::size_t i = 0; i < main_n; i += 4) {
    for (std::size_t m = 0; m < 4; ++m) {
      const std::size_t k = i + m;
      const double d = v0[k] - v1[k];
      a0[m] += (mu[k] * p[k]) * d;
      a1[m] -= (mu[k] * (1.0 - p[k])) * d;
    }
  }
  double t0 = (a0[0] + a0[1]) + (a0[2] + a0[3]);
  double t1 = (a1[0] + a1[1]) + (a1[2] + a1[3]);
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
  double a0[4] = {}, a1[4] = {}, b0[4] = {}, b1[4] = {};
  const std::size_t main_n = n & ~static_cast<std::size_t>(3);
  for (std::size_t i = 0; i < main_n; i += 4) {
    for (std::size_t m = 0; m < 4; ++m) {
      const std::size_t k = i + m;
      const double d = v0[k] - v1[k];
      a0[m] += (mu[k] * p[k]) * d;
      a1[m] -= (mu[k] * (1.0 - p[k])) * d;
      b0[m] += mu[k] * v0[k];
      b1[m] += mu[k] * v1[k];
    }
  }
  double t0 = (a0[0] + a0[1]) + (a0[2] + a0[3]);
  double t1 = (a1[0] + a1[1]) + (a1[2] + a1[3]);
  double u0 = (b0[0] + b0[1]) + (b0[2] + b0[3]);
  double u1 = (b1[0] + b1[1]) + (b1[2] + b1[3]);
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
  for (int c = 0; c < 4; ++c) {
    mins[c] = std::numeric_limits<double>::infinity();
    maxs[c] = -std::numeric_limits<double>::infinity();
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cls[i];
    if (p[i] < mins[c]) mins[c] = p[i];
    if (p[i] > maxs[c]) maxs[c] = p[i];
  }
}

}  // namespace cheaptalk::kernels::scalar
