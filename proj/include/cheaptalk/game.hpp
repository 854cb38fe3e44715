#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cheaptalk {

enum class errc {
  non_positive_prior,
  prior_sum_mismatch,
  duplicate_label,
  non_finite_value,
  empty_state_list,
  length_mismatch,
  not_common_interest,
  alpha_out_of_range,
  gamma_out_of_range,
  indifferent_sender_state,
  not_sender_implementable,
  dimension_mismatch,
  invalid_strategy,
  too_many_states,
  schema_version_unsupported,
  malformed_json,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

const char* errc_name(errc code);

/// One state of the world: prior mass and the (action 0, action 1) payoff
/// pair of each player.
struct State {
  std::string label;
  double prior = 0.0;
  std::array<double, 2> u1{};  // sender 1
  std::array<double, 2> u2{};  // sender 2
  std::array<double, 2> v{};   // receiver
};

struct GameInstance {
  std::vector<State> states;
  std::size_t size() const { return states.size(); }
};

/// Column-major (per-field) view of a game, extracted once so the numeric
/// kernels can run over contiguous arrays.
struct GameColumns {
  std::vector<double> prior;
  std::vector<double> u1_0, u1_1;
  std::vector<double> u2_0, u2_1;
  std::vector<double> v0, v1;

  std::size_t size() const { return prior.size(); }
  static GameColumns from(const GameInstance& game);
};

/// Probability of recommending action 0, one entry per state.
using Policy = std::vector<double>;

enum class Preference { prefers_zero, prefers_one, indifferent };

enum class Agent { sender1, sender2, receiver };

/// Strict preference between the two actions, with comparison slack
/// `epsilon` (default: exact compare).
Preference preference(double payoff0, double payoff1, double epsilon = 0.0);

Preference prefers(const GameInstance& game, Agent agent, std::size_t state,
                   double epsilon = 0.0);

/// The order relation over states: omega_prime precedes omega iff one
/// sender strictly prefers action 0 at omega while the other strictly
/// prefers action 1 at omega_prime. Asymmetric; indifference never
/// triggers it.
bool precedes(const GameInstance& game, std::size_t omega_prime,
              std::size_t omega, double epsilon = 0.0);

/// Checks structural invariants (positive priors summing to one, unique
/// labels, finite payoffs) and returns the instance unchanged.
GameInstance validate_game(std::vector<State> states);

/// Receiver's no-information guarantee: best constant-action expectation.
double beta(const GameInstance& game);
double beta(const GameColumns& cols);

struct ExpectedUtilities {
  double u1 = 0.0;
  double u2 = 0.0;
  double v = 0.0;
};

ExpectedUtilities expected_utilities(const GameInstance& game,
                                     const Policy& policy);
ExpectedUtilities expected_utilities(const GameColumns& cols,
                                     const Policy& policy);

}  // namespace cheaptalk
