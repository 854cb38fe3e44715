#pragma once

#include <optional>
#include <vector>

#include "cheaptalk/game.hpp"

namespace cheaptalk {

struct DesignReport {
  Policy policy;
  double eu1 = 0.0;
  double eu2 = 0.0;
  double ev = 0.0;
  double beta = 0.0;
  std::optional<double> alpha;
  std::optional<double> gamma;
  std::size_t breakpoints_examined = 0;
  bool certified = false;
};

struct AlphaBreakpoint {
  std::size_t prefix = 0;  // 1-based length into the sorted disagreement set
  double alpha = 0.0;
  bool valid = false;
};

bool common_interest(const GameInstance& game, double epsilon = 0.0);

/// The senders' favorite policy: 1 where both strictly prefer action 0,
/// 0 elsewhere.
Policy senders_favorite(const GameInstance& game, double epsilon = 0.0);

/// Best policy for the senders constrained to pool the disagreement states
/// at alpha: greedy sweep in decreasing resistance order, stopping exactly
/// when the receiver reaches her guarantee. Empty when the guarantee is
/// unreachable.
std::optional<Policy> compute_p_alpha(const GameInstance& game, double alpha,
                                      double epsilon = 0.0);

/// Candidate pool levels: for each resistance prefix, the alpha at which
/// the receiver's utility meets the guarantee exactly. Out-of-range and
/// degenerate entries carry valid=false.
std::vector<AlphaBreakpoint> alpha_breakpoints(const GameInstance& game,
                                               double epsilon = 0.0);

/// Sender-optimal implementable policy for common-interest senders.
/// O(n log n).
DesignReport solve_common(const GameInstance& game, double epsilon = 0.0);

}  // namespace cheaptalk
