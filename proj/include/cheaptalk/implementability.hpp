#pragma once

#include <array>
#include <optional>
#include <utility>

#include "cheaptalk/classify.hpp"
#include "cheaptalk/game.hpp"

namespace cheaptalk {

/// Slack applied to the order comparisons of the sender-side check.
inline constexpr double kOrderTol = 1e-12;
/// Slack applied to the receiver obedience comparisons.
inline constexpr double kSlackTol = 1e-9;

/// A violating pair: precedes(omega_prime, omega) holds but
/// p(omega_prime) > p(omega).
struct Witness {
  std::size_t omega_prime = 0;
  std::size_t omega = 0;
};

struct ImplementabilityVerdict {
  bool sender_ok = false;
  bool receiver_ok = false;
  std::optional<Witness> witness;
  std::array<double, 2> ic_slack{0.0, 0.0};
  double ev_minus_beta = 0.0;
  // Class extrema diagnostics (absent when the class is empty).
  std::optional<double> min_p_omega00;
  std::optional<double> max_p_omega11;
  bool implementable() const { return sender_ok && receiver_ok; }
};

/// Order-condition check. Runs in O(n) through per-class extrema when no
/// sender is ever indifferent, otherwise falls back to the pairwise
/// definition.
std::pair<bool, std::optional<Witness>> check_sender_implementable(
    const GameInstance& game, const Policy& policy, double epsilon = 0.0,
    double tol = kOrderTol);

/// Obedience slacks for both recommendations; true iff both >= -tol.
std::pair<bool, std::array<double, 2>> check_receiver_ic(
    const GameInstance& game, const Policy& policy, double tol = kSlackTol);

ImplementabilityVerdict check_implementable(const GameInstance& game,
                                            const Policy& policy,
                                            double epsilon = 0.0,
                                            double order_tol = kOrderTol,
                                            double slack_tol = kSlackTol);

/// Variant for callers that already hold the column view; avoids a second
/// extraction on large instances.
ImplementabilityVerdict check_implementable(const GameInstance& game,
                                            const GameColumns& cols,
                                            const Policy& policy,
                                            double epsilon = 0.0,
                                            double order_tol = kOrderTol,
                                            double slack_tol = kSlackTol);

/// Independent oracle for the sender-side check: every off-diagonal
/// mechanism entry must have a nonempty feasible interval. Agrees exactly
/// with check_sender_implementable.
bool entrywise_feasibility(const GameInstance& game, const Policy& policy,
                           double epsilon = 0.0, double tol = kOrderTol);

}  // namespace cheaptalk
