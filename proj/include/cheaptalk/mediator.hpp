#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cheaptalk/implementability.hpp"

namespace cheaptalk {

/// The mediator mechanism. entry(m1, m2) is the probability of
/// recommending action 0 when sender 1 reports m1 and sender 2 reports m2
/// (messages are state indices). The diagonal carries the target policy.
struct TauMatrix {
  std::size_t n = 0;
  std::vector<double> entries;  // row-major, row = sender-1 message

  double at(std::size_t m1, std::size_t m2) const {
    return entries[m1 * n + m2];
  }
  double& at(std::size_t m1, std::size_t m2) { return entries[m1 * n + m2]; }
  Policy diagonal() const;
};

struct Deviation {
  int sender = 0;  // 1 or 2
  std::size_t true_state = 0;
  std::size_t report = 0;
  double gain = 0.0;
};

struct AuditReport {
  double sender1_max_gain = 0.0;
  double sender2_max_gain = 0.0;
  std::array<double, 2> receiver_obedience_slacks{0.0, 0.0};
  std::optional<Deviation> worst_deviation;
  bool certified = false;
};

/// Builds the mechanism realizing a sender-implementable policy: diagonal
/// = policy, off-diagonal entries by resolved preferences (midpoint when
/// the two senders pull apart, 0 or 1 when they pull together).
TauMatrix build_tau(const GameInstance& game, const Policy& policy,
                    double epsilon = 0.0);

/// Exhaustive deviation check: every (true state, misreport) pair for both
/// senders, plus receiver obedience under truthful reporting.
AuditReport audit_equilibrium(const GameInstance& game, const TauMatrix& tau,
                              double gain_tol = kOrderTol,
                              double slack_tol = kSlackTol);

using ReportingStrategy = std::vector<std::size_t>;  // state -> message

ReportingStrategy truthful_strategy(std::size_t n);

struct SimulationReport {
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> state_counts;
  std::vector<std::uint64_t> action0_counts;
  /// Empirical per-state frequency of recommending action 0 (NaN for
  /// states never drawn).
  std::vector<double> empirical_p;
  double avg_u1 = 0.0;
  double avg_u2 = 0.0;
  double avg_v = 0.0;
};

/// Monte Carlo run of the protocol; fully determined by the seed.
SimulationReport simulate(const GameInstance& game, const TauMatrix& tau,
                          std::uint64_t rounds, std::uint64_t seed,
                          const ReportingStrategy& strategy1,
                          const ReportingStrategy& strategy2);

}  // namespace cheaptalk
