#pragma once

#include <optional>
#include <vector>

#include "cheaptalk/game.hpp"

namespace cheaptalk {

/// Sender preference pair (sender 1's action, sender 2's action), defined
/// only when both are strict.
enum class SenderClass { zero_zero, one_zero, zero_one, one_one };

struct StateClassification {
  Preference sender1 = Preference::indifferent;
  Preference sender2 = Preference::indifferent;
  Preference receiver = Preference::indifferent;
  std::optional<SenderClass> strict_class;
  bool sender_indifferent = false;
  /// Sender 1 and the receiver do not strictly disagree.
  bool in_agreement = false;
  /// Both senders strictly prefer the same action and the receiver does
  /// not strictly oppose it.
  bool in_consensus = false;
  /// Receiver gain per unit of sender-1 loss when the recommendation moves
  /// toward the receiver's preference; present iff not in_agreement.
  std::optional<double> resistance;
};

std::vector<StateClassification> classify(const GameInstance& game,
                                          double epsilon = 0.0);

/// Indifference resolved as prefers-zero (the tie rule of the mediator
/// construction).
inline bool resolved_prefers_zero(Preference p) {
  return p != Preference::prefers_one;
}

}  // namespace cheaptalk
