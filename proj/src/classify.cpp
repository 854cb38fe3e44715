#include "cheaptalk/classify.hpp"

namespace cheaptalk {

std::vector<StateClassification> classify(const GameInstance& game,
                                          double epsilon) {
  std::vector<StateClassification> out;
  out.reserve(game.size());
  for (const State& s : game.states) {
    StateClassification c;
    c.sender1 = preference(s.u1[0], s.u1[1], epsilon);
    c.sender2 = preference(s.u2[0], s.u2[1], epsilon);
    c.receiver = preference(s.v[0], s.v[1], epsilon);
    c.sender_indifferent = c.sender1 == Preference::indifferent ||
                           c.sender2 == Preference::indifferent;
    if (!c.sender_indifferent) {
      if (c.sender1 == Preference::prefers_zero) {
        c.strict_class = c.sender2 == Preference::prefers_zero
                             ? SenderClass::zero_zero
                             : SenderClass::zero_one;
      } else {
        c.strict_class = c.sender2 == Preference::prefers_zero
                             ? SenderClass::one_zero
                             : SenderClass::one_one;
      }
    }
    const bool disagree =
        (c.sender1 == Preference::prefers_zero &&
         c.receiver == Preference::prefers_one) ||
        (c.sender1 == Preference::prefers_one &&
         c.receiver == Preference::prefers_zero);
    c.in_agreement = !disagree;
    if (!c.in_agreement) {
      c.resistance = (s.v[1] - s.v[0]) / (s.u1[0] - s.u1[1]);
    }
    c.in_consensus =
        !c.sender_indifferent && c.sender1 == c.sender2 &&
        (c.receiver == c.sender1 || c.receiver == Preference::indifferent);
    out.push_back(c);
  }
  return out;
}

}  // namespace cheaptalk
