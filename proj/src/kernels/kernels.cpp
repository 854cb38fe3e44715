#include "cheaptalk/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cheaptalk::kernels {

namespace scalar {
double weighted_sum(const double*, const double*, std::size_t);
double mix_expectation(const double*, const double*, const double*,
                       const double*, std::size_t);
void obedience_slacks(const double*, const double*, const double*,
                      const double*, std::size_t, double&, double&);
void value_summary(const double*, const double*, const double*, const double*,
                   std::size_t, double&, double&, double&, double&);
void class_minmax(const double*, const std::int32_t*, std::size_t, double[4],
                  double[4]);
}  // namespace scalar

#if defined(CHEAPTALK_HAVE_AVX2)
namespace avx2 {
double weighted_sum(const double*, const double*, std::size_t);
double mix_expectation(const double*, const double*, const double*,
                       const double*, std::size_t);
void obedience_slacks(const double*, const double*, const double*,
                      const double*, std::size_t, double&, double&);
void value_summary(const double*, const double*, const double*, const double*,
                   std::size_t, double&, double&, double&, double&);
void class_minmax(const double*, const std::int32_t*, std::size_t, double[4],
                  double[4]);
}  // namespace avx2
#endif

namespace {

struct Ops {
  double (*weighted_sum)(const double*, const double*, std::size_t);
  double (*mix_expectation)(const double*, const double*, const double*,
                            const double*, std::size_t);
  void (*obedience_slacks)(const double*, const double*, const double*,
                           const double*, std::size_t, double&, double&);
  void (*value_summary)(const double*, const double*, const double*,
                        const double*, std::size_t, double&, double&, double&,
                        double&);
  void (*class_minmax)(const double*, const std::int32_t*, std::size_t,
                       double[4], double[4]);
  Isa isa;
};

constexpr Ops kScalarOps{scalar::weighted_sum, scalar::mix_expectation,
                         scalar::obedience_slacks, scalar::value_summary,
                         scalar::class_minmax, Isa::scalar};

#if defined(CHEAPTALK_HAVE_AVX2)
constexpr Ops kAvx2Ops{avx2::weighted_sum, avx2::mix_expectation,
                       avx2::obedience_slacks, avx2::value_summary,
                       avx2::class_minmax, Isa::avx2};
#endif

const Ops* detect() {
#if defined(CHEAPTALK_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return &kAvx2Ops;
#endif
  return &kScalarOps;
}

std::atomic<const Ops*> g_ops{nullptr};

const Ops& ops() {
  const Ops* current = g_ops.load(std::memory_order_acquire);
  if (!current) {
    current = detect();
    g_ops.store(current, std::memory_order_release);
  }
  return *current;
}

// Arrays of this size no longer fit the last-level cache, so the reduction
// is DRAM-bound and a second thread adds usable bandwidth. The midpoint is
// a pure function of n, and the halves combine in a fixed order, so
// results do not depend on scheduling.
constexpr std::size_t kSplitThreshold = std::size_t{1} << 18;

inline std::size_t split_point(std::size_t n) {
  return (n / 2) & ~static_cast<std::size_t>(15);
}

}  // namespace

bool avx2_available() {
#if defined(CHEAPTALK_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active() { return ops().isa; }

void force(Isa isa) {
  if (isa == Isa::avx2 && avx2_available()) {
#if defined(CHEAPTALK_HAVE_AVX2)
    g_ops.store(&kAvx2Ops, std::memory_order_release);
#endif
  } else {
    g_ops.store(&kScalarOps, std::memory_order_release);
  }
}

double weighted_sum(const double* w, const double* x, std::size_t n) {
  const Ops& k = ops();
  if (n < kSplitThreshold) return k.weighted_sum(w, x, n);
  const std::size_t mid = split_point(n);
  double hi = 0.0;
  std::thread worker(
      [&] { hi = k.weighted_sum(w + mid, x + mid, n - mid); });
  const double lo = k.weighted_sum(w, x, mid);
  worker.join();
  return lo + hi;
}

double mix_expectation(const double* mu, const double* p, const double* x0,
                       const double* x1, std::size_t n) {
  const Ops& k = ops();
  if (n < kSplitThreshold) return k.mix_expectation(mu, p, x0, x1, n);
  const std::size_t mid = split_point(n);
  double hi = 0.0;
  std::thread worker([&] {
    hi = k.mix_expectation(mu + mid, p + mid, x0 + mid, x1 + mid, n - mid);
  });
  const double lo = k.mix_expectation(mu, p, x0, x1, mid);
  worker.join();
  return lo + hi;
}

void obedience_slacks(const double* mu, const double* p, const double* v0,
                      const double* v1, std::size_t n, double& slack0,
                      double& slack1) {
  const Ops& k = ops();
  if (n < kSplitThreshold) {
    k.obedience_slacks(mu, p, v0, v1, n, slack0, slack1);
    return;
  }
  const std::size_t mid = split_point(n);
  double h0 = 0.0, h1 = 0.0;
  std::thread worker([&] {
    k.obedience_slacks(mu + mid, p + mid, v0 + mid, v1 + mid, n - mid, h0, h1);
  });
  double l0 = 0.0, l1 = 0.0;
  k.obedience_slacks(mu, p, v0, v1, mid, l0, l1);
  worker.join();
  slack0 = l0 + h0;
  slack1 = l1 + h1;
}

void value_summary(const double* mu, const double* p, const double* v0,
                   const double* v1, std::size_t n, double& slack0,
                   double& slack1, double& w0, double& w1) {
  const Ops& k = ops();
  if (n < kSplitThreshold) {
    k.value_summary(mu, p, v0, v1, n, slack0, slack1, w0, w1);
    return;
  }
  const std::size_t mid = split_point(n);
  double hs0 = 0.0, hs1 = 0.0, hw0 = 0.0, hw1 = 0.0;
  std::thread worker([&] {
    k.value_summary(mu + mid, p + mid, v0 + mid, v1 + mid, n - mid, hs0, hs1,
                    hw0, hw1);
  });
  double ls0 = 0.0, ls1 = 0.0, lw0 = 0.0, lw1 = 0.0;
  k.value_summary(mu, p, v0, v1, mid, ls0, ls1, lw0, lw1);
  worker.join();
  slack0 = ls0 + hs0;
  slack1 = ls1 + hs1;
  w0 = lw0 + hw0;
  w1 = lw1 + hw1;
}

void class_minmax(const double* p, const std::int32_t* cls, std::size_t n,
                  double mins[4], double maxs[4]) {
  const Ops& k = ops();
  if (n < kSplitThreshold) {
    k.class_minmax(p, cls, n, mins, maxs);
    return;
  }
  const std::size_t mid = split_point(n);
  double hmins[4], hmaxs[4];
  std::thread worker(
      [&] { k.class_minmax(p + mid, cls + mid, n - mid, hmins, hmaxs); });
  k.class_minmax(p, cls, mid, mins, maxs);
  worker.join();
  for (int c = 0; c < 4; ++c) {
    mins[c] = std::min(mins[c], hmins[c]);
    maxs[c] = std::max(maxs[c], hmaxs[c]);
  }
}

}  // namespace cheaptalk::kernels
