#include "cheaptalk/mediator.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace cheaptalk {

Policy TauMatrix::diagonal() const {
  Policy p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = at(i, i);
  return p;
}

TauMatrix build_tau(const GameInstance& game, const Policy& policy,
                    double epsilon) {
  auto [ok, witness] = check_sender_implementable(game, policy, epsilon);
  if (!ok) {
    throw error(errc::not_sender_implementable,
                "policy violates the order condition: p(" +
                    game.states[witness->omega_prime].label + ") > p(" +
                    game.states[witness->omega].label + ")");
  }
  const auto cls = classify(game, epsilon);
  const std::size_t n = game.size();
  TauMatrix tau;
  tau.n = n;
  tau.entries.assign(n * n, 0.0);
  for (std::size_t m1 = 0; m1 < n; ++m1) {
    for (std::size_t m2 = 0; m2 < n; ++m2) {
      if (m1 == m2) {
        tau.at(m1, m2) = policy[m1];
        continue;
      }
      // Sender 1's preference applies at the column state, sender 2's at
      // the row state; ties resolve to prefers-zero.
      const bool s1_zero = resolved_prefers_zero(cls[m2].sender1);
      const bool s2_zero = resolved_prefers_zero(cls[m1].sender2);
      if (s1_zero != s2_zero) {
        tau.at(m1, m2) = (policy[m1] + policy[m2]) / 2.0;
      } else if (s1_zero) {
        tau.at(m1, m2) = 0.0;
      } else {
        tau.at(m1, m2) = 1.0;
      }
    }
  }
  return tau;
}

AuditReport audit_equilibrium(const GameInstance& game, const TauMatrix& tau,
                              double gain_tol, double slack_tol) {
  const std::size_t n = game.size();
  if (tau.n != n || tau.entries.size() != n * n) {
    throw error(errc::dimension_mismatch,
                "mechanism dimensions do not match game");
  }
  AuditReport report;
  report.sender1_max_gain = -std::numeric_limits<double>::infinity();
  report.sender2_max_gain = -std::numeric_limits<double>::infinity();
  if (n == 1) {
    report.sender1_max_gain = 0.0;
    report.sender2_max_gain = 0.0;
  }
  for (std::size_t truth = 0; truth < n; ++truth) {
    const State& s = game.states[truth];
    const double d1 = s.u1[0] - s.u1[1];
    const double d2 = s.u2[0] - s.u2[1];
    const double diag = tau.at(truth, truth);
    for (std::size_t lie = 0; lie < n; ++lie) {
      if (lie == truth) continue;
      const double gain1 = s.prior * (tau.at(lie, truth) - diag) * d1;
      const double gain2 = s.prior * (tau.at(truth, lie) - diag) * d2;
      if (gain1 > report.sender1_max_gain) {
        report.sender1_max_gain = gain1;
        if (!report.worst_deviation || gain1 > report.worst_deviation->gain) {
          report.worst_deviation = Deviation{1, truth, lie, gain1};
        }
      }
      if (gain2 > report.sender2_max_gain) {
        report.sender2_max_gain = gain2;
        if (!report.worst_deviation || gain2 > report.worst_deviation->gain) {
          report.worst_deviation = Deviation{2, truth, lie, gain2};
        }
      }
    }
  }
  auto [ic_ok, slack] = check_receiver_ic(game, tau.diagonal(), slack_tol);
  report.receiver_obedience_slacks = slack;
  report.certified = report.sender1_max_gain <= gain_tol &&
                     report.sender2_max_gain <= gain_tol && ic_ok;
  return report;
}

ReportingStrategy truthful_strategy(std::size_t n) {
  ReportingStrategy s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

namespace {

// Uniform double in [0,1) with 53 bits, fully determined by the engine.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SimulationReport simulate(const GameInstance& game, const TauMatrix& tau,
                          std::uint64_t rounds, std::uint64_t seed,
                          const ReportingStrategy& strategy1,
                          const ReportingStrategy& strategy2) {
  const std::size_t n = game.size();
  if (tau.n != n) {
    throw error(errc::dimension_mismatch,
                "mechanism dimensions do not match game");
  }
  if (strategy1.size() != n || strategy2.size() != n) {
    throw error(errc::invalid_strategy, "strategy length does not match game");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (strategy1[i] >= n || strategy2[i] >= n) {
      throw error(errc::invalid_strategy, "report outside the message space");
    }
  }
  std::vector<double> cumulative(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += game.states[i].prior;
    cumulative[i] = acc;
  }
  cumulative[n - 1] = std::numeric_limits<double>::infinity();

  SimulationReport report;
  report.rounds = rounds;
  report.seed = seed;
  report.state_counts.assign(n, 0);
  report.action0_counts.assign(n, 0);
  std::mt19937_64 rng(seed);
  double total_u1 = 0.0, total_u2 = 0.0, total_v = 0.0;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    const double draw = uniform01(rng);
    std::size_t state = 0;
    while (cumulative[state] <= draw) ++state;
    const std::size_t m1 = strategy1[state];
    const std::size_t m2 = strategy2[state];
    const bool action0 = uniform01(rng) < tau.at(m1, m2);
    report.state_counts[state]++;
    const State& s = game.states[state];
    if (action0) {
      report.action0_counts[state]++;
      total_u1 += s.u1[0];
      total_u2 += s.u2[0];
      total_v += s.v[0];
    } else {
      total_u1 += s.u1[1];
      total_u2 += s.u2[1];
      total_v += s.v[1];
    }
  }
  report.empirical_p.assign(n, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < n; ++i) {
    if (report.state_counts[i] > 0) {
      report.empirical_p[i] = static_cast<double>(report.action0_counts[i]) /
                              static_cast<double>(report.state_counts[i]);
    }
  }
  const double m = rounds > 0 ? static_cast<double>(rounds) : 1.0;
  report.avg_u1 = total_u1 / m;
  report.avg_u2 = total_u2 / m;
  report.avg_v = total_v / m;
  return report;
}

}  // namespace cheaptalk
