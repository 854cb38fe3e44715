#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "cheaptalk/classify.hpp"
#include "cheaptalk/io.hpp"

namespace cheaptalk::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline GameInstance load_g1() {
  return parse_game(read_file(std::string(CHEAPTALK_DATA_DIR) + "/g1.json"));
}

inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform policy, not necessarily implementable.
inline Policy random_policy(std::size_t n, std::mt19937_64& rng) {
  Policy p(n);
  for (double& x : p) x = u01(rng);
  return p;
}

/// Random policy satisfying the order constraints by construction: the
/// both-prefer-0 class sits above a threshold, the both-prefer-1 class
/// below another, everything else between them (one shared value whenever
/// indifferent senders create cross constraints).
inline Policy random_implementable_policy(const GameInstance& game,
                                          std::mt19937_64& rng) {
  const auto cls = classify(game);
  bool any_indifferent = false;
  for (const auto& c : cls) any_indifferent |= c.sender_indifferent;
  double a = u01(rng), b = u01(rng);
  if (a < b) std::swap(a, b);
  const double mid = b + u01(rng) * (a - b);
  const double c10 = any_indifferent ? mid : b + u01(rng) * (a - b);
  const double c01 = any_indifferent ? mid : b + u01(rng) * (a - b);
  Policy p(game.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (cls[i].strict_class == SenderClass::zero_zero) {
      p[i] = a + u01(rng) * (1.0 - a);
    } else if (cls[i].strict_class == SenderClass::one_one) {
      p[i] = u01(rng) * b;
    } else if (cls[i].strict_class == SenderClass::one_zero) {
      p[i] = c10;
    } else if (cls[i].strict_class == SenderClass::zero_one) {
      p[i] = c01;
    } else {
      p[i] = mid;
    }
  }
  return p;
}

/// Force a sender tie at `state` so indifference paths get exercised.
inline GameInstance with_indifference(const GameInstance& game,
                                      std::size_t state, bool both_senders) {
  std::vector<State> states = game.states;
  states[state].u1[1] = states[state].u1[0];
  if (both_senders) states[state].u2[1] = states[state].u2[0];
  return validate_game(std::move(states));
}

}  // namespace cheaptalk::testing
