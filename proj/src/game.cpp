#include "cheaptalk/game.hpp"

#include <cmath>
#include <unordered_set>

#include "cheaptalk/kernels.hpp"

namespace cheaptalk {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_positive_prior: return "NonPositivePrior";
    case errc::prior_sum_mismatch: return "PriorSumMismatch";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::non_finite_value: return "NonFiniteValue";
    case errc::empty_state_list: return "EmptyStateList";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_common_interest: return "NotCommonInterest";
    case errc::alpha_out_of_range: return "AlphaOutOfRange";
    case errc::gamma_out_of_range: return "GammaOutOfRange";
    case errc::indifferent_sender_state: return "IndifferentSenderState";
    case errc::not_sender_implementable: return "NotSenderImplementable";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invalid_strategy: return "InvalidStrategy";
    case errc::too_many_states: return "TooManyStates";
    case errc::schema_version_unsupported: return "SchemaVersionUnsupported";
    case errc::malformed_json: return "MalformedJson";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

GameColumns GameColumns::from(const GameInstance& game) {
  GameColumns cols;
  const std::size_t n = game.size();
  cols.prior.reserve(n);
  cols.u1_0.reserve(n);
  cols.u1_1.reserve(n);
  cols.u2_0.reserve(n);
  cols.u2_1.reserve(n);
  cols.v0.reserve(n);
  cols.v1.reserve(n);
  for (const State& s : game.states) {
    cols.prior.push_back(s.prior);
    cols.u1_0.push_back(s.u1[0]);
    cols.u1_1.push_back(s.u1[1]);
    cols.u2_0.push_back(s.u2[0]);
    cols.u2_1.push_back(s.u2[1]);
    cols.v0.push_back(s.v[0]);
    cols.v1.push_back(s.v[1]);
  }
  return cols;
}

Preference preference(double payoff0, double payoff1, double epsilon) {
  if (payoff0 > payoff1 + epsilon) return Preference::prefers_zero;
  if (payoff1 > payoff0 + epsilon) return Preference::prefers_one;
  return Preference::indifferent;
}

namespace {

const std::array<double, 2>& payoffs(const State& s, Agent agent) {
  switch (agent) {
    case Agent::sender1: return s.u1;
    case Agent::sender2: return s.u2;
    case Agent::receiver: return s.v;
  }
  throw error(errc::internal, "unknown agent");
}

}  // namespace

Preference prefers(const GameInstance& game, Agent agent, std::size_t state,
                   double epsilon) {
  const auto& pay = payoffs(game.states.at(state), agent);
  return preference(pay[0], pay[1], epsilon);
}

bool precedes(const GameInstance& game, std::size_t omega_prime,
              std::size_t omega, double epsilon) {
  const Preference s1_at = prefers(game, Agent::sender1, omega, epsilon);
  const Preference s2_at = prefers(game, Agent::sender2, omega, epsilon);
  const Preference s1_from = prefers(game, Agent::sender1, omega_prime, epsilon);
  const Preference s2_from = prefers(game, Agent::sender2, omega_prime, epsilon);
  return (s1_at == Preference::prefers_zero &&
          s2_from == Preference::prefers_one) ||
         (s2_at == Preference::prefers_zero &&
          s1_from == Preference::prefers_one);
}

GameInstance validate_game(std::vector<State> states) {
  if (states.empty()) {
    throw error(errc::empty_state_list, "game has no states");
  }
  std::unordered_set<std::string> labels;
  double prior_sum = 0.0;
  for (const State& s : states) {
    if (!labels.insert(s.label).second) {
      throw error(errc::duplicate_label, "duplicate state label: " + s.label);
    }
    if (!std::isfinite(s.prior)) {
      throw error(errc::non_finite_value, "prior of " + s.label + " not finite");
    }
    if (s.prior <= 0.0) {
      throw error(errc::non_positive_prior,
                  "prior of " + s.label + " must be strictly positive");
    }
    for (const auto* pay : {&s.u1, &s.u2, &s.v}) {
      if (!std::isfinite((*pay)[0]) || !std::isfinite((*pay)[1])) {
        throw error(errc::non_finite_value,
                    "payoff of " + s.label + " not finite");
      }
    }
    prior_sum += s.prior;
  }
  if (std::fabs(prior_sum - 1.0) > 1e-9) {
    throw error(errc::prior_sum_mismatch,
                "priors sum to " + std::to_string(prior_sum) +
                    " (deviation " + std::to_string(prior_sum - 1.0) + ")");
  }
  GameInstance game;
  game.states = std::move(states);
  return game;
}

double beta(const GameColumns& cols) {
  const std::size_t n = cols.size();
  const double e0 = kernels::weighted_sum(cols.prior.data(), cols.v0.data(), n);
  const double e1 = kernels::weighted_sum(cols.prior.data(), cols.v1.data(), n);
  return e0 > e1 ? e0 : e1;
}

double beta(const GameInstance& game) { return beta(GameColumns::from(game)); }

ExpectedUtilities expected_utilities(const GameColumns& cols,
                                     const Policy& policy) {
  const std::size_t n = cols.size();
  if (policy.size() != n) {
    throw error(errc::length_mismatch, "policy length does not match game");
  }
  ExpectedUtilities out;
  out.u1 = kernels::mix_expectation(cols.prior.data(), policy.data(),
                                    cols.u1_0.data(), cols.u1_1.data(), n);
  out.u2 = kernels::mix_expectation(cols.prior.data(), policy.data(),
                                    cols.u2_0.data(), cols.u2_1.data(), n);
  out.v = kernels::mix_expectation(cols.prior.data(), policy.data(),
                                   cols.v0.data(), cols.v1.data(), n);
  return out;
}

ExpectedUtilities expected_utilities(const GameInstance& game,
                                     const Policy& policy) {
  return expected_utilities(GameColumns::from(game), policy);
}

}  // namespace cheaptalk
