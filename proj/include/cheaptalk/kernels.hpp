#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel reductions used by the solvers. Every kernel exists as a
// scalar reference implementation and, on x86-64 CPUs that support it, an
// AVX2 variant selected once at runtime; the two are bit-identical by
// construction and equivalence-tested. Inputs past the last-level-cache
// scale are DRAM-bound, so they split across two threads at a fixed
// midpoint with a fixed combination order, keeping results deterministic
// for a given length.

namespace cheaptalk::kernels {

enum class Isa { scalar, avx2 };

/// Instruction set the dispatcher resolved to.
Isa active();

/// Pins the implementation (used by the equivalence tests and for
/// benchmarking the scalar path). Passing avx2 on a CPU without AVX2
/// keeps the scalar path.
void force(Isa isa);

bool avx2_available();

/// sum_i w[i] * x[i]
double weighted_sum(const double* w, const double* x, std::size_t n);

/// sum_i mu[i] * (p[i] * x0[i] + (1 - p[i]) * x1[i])
double mix_expectation(const double* mu, const double* p, const double* x0,
                       const double* x1, std::size_t n);

/// Unnormalized obedience slacks of both recommendations:
///   slack0 = sum_i mu[i] * p[i] * (v0[i] - v1[i])
///   slack1 = sum_i mu[i] * (1 - p[i]) * (v1[i] - v0[i])
void obedience_slacks(const double* mu, const double* p, const double* v0,
                      const double* v1, std::size_t n, double& slack0,
                      double& slack1);

/// One-pass receiver summary: the two obedience slacks (same arithmetic as
/// obedience_slacks) plus the constant-action expectations
/// w0 = sum mu*v0 and w1 = sum mu*v1.
void value_summary(const double* mu, const double* p, const double* v0,
                   const double* v1, std::size_t n, double& slack0,
                   double& slack1, double& w0, double& w1);

/// Per-class minimum and maximum of p. cls[i] must be in {0,1,2,3};
/// classes that never occur report +inf/-inf.
void class_minmax(const double* p, const std::int32_t* cls, std::size_t n,
                  double mins[4], double maxs[4]);

}  // namespace cheaptalk::kernels
