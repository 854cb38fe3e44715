#pragma once

#include <optional>
#include <vector>

#include "cheaptalk/sender_opt.hpp"

namespace cheaptalk {

enum class BoundaryCase {
  alpha_zero,
  alpha_one,
  gamma_zero,
  gamma_one,
  alpha_equals_gamma,
  corner,
};

/// A candidate (alpha, gamma) pair: the pooled levels of the
/// mixed-preference classes at which, with the first `prefix` disagreement
/// states moved to their pooled targets, the receiver's utility equals her
/// guarantee. line_a * alpha + line_c * gamma = line_b holds for valid
/// candidates.
struct BoundaryCandidate {
  std::size_t prefix = 0;
  BoundaryCase kind = BoundaryCase::alpha_equals_gamma;
  double alpha = 0.0;
  double gamma = 0.0;
  bool valid = false;
  double line_a = 0.0;
  double line_c = 0.0;
  double line_b = 0.0;
};

/// Sender 1's favorite policy: 1 wherever sender 1 strictly prefers
/// action 0, 0 elsewhere.
Policy sender1_favorite(const GameInstance& game, double epsilon = 0.0);

/// Best policy for sender 1 with the mixed classes pinned at alpha
/// (sender 1 prefers 1 / sender 2 prefers 0) and gamma (the reverse):
/// greedy sweep over the states where the senders jointly disagree with
/// the receiver. Empty when the receiver guarantee is unreachable.
std::optional<Policy> compute_p_alpha_gamma(const GameInstance& game,
                                            double alpha, double gamma,
                                            double epsilon = 0.0);

/// Boundary candidates of the piecewise-linear search region, one line per
/// resistance prefix intersected with the five boundary cases.
std::vector<BoundaryCandidate> boundary_candidates(const GameInstance& game,
                                                   double epsilon = 0.0);

/// Sender-1-optimal implementable policy for general (possibly divergent)
/// sender interests. Requires strict sender preferences. O(n log n).
DesignReport solve_sender1(const GameInstance& game, double epsilon = 0.0);

}  // namespace cheaptalk
