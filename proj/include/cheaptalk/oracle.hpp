#pragma once

#include <optional>

#include "cheaptalk/game.hpp"

namespace cheaptalk {

// Brute-force cross-checks, deliberately kept independent of the solvers'
// breakpoint and boundary-candidate machinery: they only call the sweep
// subroutines and evaluate utilities directly. They search over feasible
// points, so they can only approach the true optimum from below.

struct GridResult {
  bool found = false;
  double utility = 0.0;
  double alpha = 0.0;
  std::optional<double> gamma;
  Policy policy;
};

/// One-dimensional grid over the pooled level, plus golden-section
/// refinement around the best cell.
GridResult grid_oracle_common(const GameInstance& game,
                              unsigned resolution = 2000,
                              double epsilon = 0.0);

/// Two-dimensional grid over both pooled levels, plus coordinate-descent
/// refinement.
GridResult grid_oracle_general(const GameInstance& game,
                               unsigned resolution = 64,
                               double epsilon = 0.0);

struct BruteResult {
  double utility = 0.0;
  Policy policy;
};

/// Exhaustive receiver optimum over all pure sender-implementable
/// policies. Guarded to 20 states.
BruteResult brute_force_receiver(const GameInstance& game,
                                 double epsilon = 0.0);

}  // namespace cheaptalk
