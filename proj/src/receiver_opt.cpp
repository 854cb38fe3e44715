#include "cheaptalk/receiver_opt.hpp"

#include <limits>

#include "cheaptalk/classify.hpp"
#include "cheaptalk/implementability.hpp"

namespace cheaptalk {

namespace {

int class_slot(SenderClass c) {
  switch (c) {
    case SenderClass::zero_zero: return 0;
    case SenderClass::one_zero: return 1;
    case SenderClass::zero_one: return 2;
    case SenderClass::one_one: return 3;
  }
  return 0;
}

}  // namespace

std::array<Policy, 4> enumerate_pstar(const GameInstance& game,
                                      double epsilon) {
  const auto cls = classify(game, epsilon);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].sender_indifferent) {
      throw error(errc::indifferent_sender_state,
                  "sender indifferent at state " + game.states[i].label);
    }
  }
  std::array<Policy, 4> out;
  for (std::size_t v = 0; v < kPstarVectors.size(); ++v) {
    const ClassVector& vec = kPstarVectors[v];
    Policy p(game.size());
    for (std::size_t i = 0; i < game.size(); ++i) {
      if (cls[i].in_consensus) {
        p[i] = cls[i].sender1 == Preference::prefers_zero ? 1.0 : 0.0;
      } else {
        p[i] = static_cast<double>(vec[class_slot(*cls[i].strict_class)]);
      }
    }
    out[v] = std::move(p);
  }
  return out;
}

DesignReport solve_receiver(const GameInstance& game, double epsilon) {
  const auto candidates = enumerate_pstar(game, epsilon);
  const GameColumns cols = GameColumns::from(game);

  std::size_t best = 0;
  double best_ev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double ev = expected_utilities(cols, candidates[i]).v;
    if (ev > best_ev) {
      best_ev = ev;
      best = i;
    }
  }

  DesignReport report;
  report.policy = candidates[best];
  const ExpectedUtilities eu = expected_utilities(cols, report.policy);
  report.eu1 = eu.u1;
  report.eu2 = eu.u2;
  report.ev = eu.v;
  report.beta = beta(cols);
  report.breakpoints_examined = candidates.size();
  report.certified =
      check_implementable(game, cols, report.policy, epsilon).implementable();
  if (!report.certified) {
    throw error(errc::internal,
                "receiver-optimal candidate failed certification");
  }
  return report;
}

}  // namespace cheaptalk
