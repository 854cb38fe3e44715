#include <cmath>
#include <random>

#include "cheaptalk/mediator.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cheaptalk;
using namespace cheaptalk::testing;

namespace {

const Policy kOptimal{0, 1, 10.0 / 19.0, 0, 0, 0};

}  // namespace

TEST_CASE("mechanism entries follow the construction cases") {
  const GameInstance g1 = load_g1();
  const TauMatrix tau = build_tau(g1, kOptimal);

  for (std::size_t i = 0; i < 6; ++i) CHECK(tau.at(i, i) == kOptimal[i]);

  // sender 1 prefers 0 at omega3, sender 2 prefers 1 at omega5: midpoint
  CHECK(tau.at(4, 2) == doctest::Approx(5.0 / 19.0).epsilon(1e-15));
  // both prefer 0 (sender 1 at omega3, sender 2 at omega2)
  CHECK(tau.at(1, 2) == 0.0);
  // both prefer 1 (sender 1 at omega6, sender 2 at omega5)
  CHECK(tau.at(4, 5) == 1.0);
}

TEST_CASE("build_tau refuses non-implementable targets") {
  const GameInstance g1 = load_g1();
  CHECK_THROWS_AS((void)build_tau(g1, Policy{0, 1, 1, 0, 0, 0.45}), error);
}

TEST_CASE("audit certifies the constructed mechanism") {
  const GameInstance g1 = load_g1();
  const AuditReport report = audit_equilibrium(g1, build_tau(g1, kOptimal));
  CHECK(report.certified);
  CHECK(report.sender1_max_gain <= 1e-12);
  CHECK(report.sender2_max_gain <= 1e-12);
  CHECK(report.receiver_obedience_slacks[0] >= -1e-9);
  CHECK(report.receiver_obedience_slacks[1] >= -1e-9);
}

TEST_CASE("audit flags a manually corrupted mechanism") {
  const GameInstance g1 = load_g1();
  TauMatrix tau = build_tau(g1, kOptimal);
  // Sender 1 reporting omega3 when the truth is omega4 now turns the
  // recommendation toward action 0, which sender 1 strictly prefers there.
  tau.at(2, 3) = 1.0;
  const AuditReport report = audit_equilibrium(g1, tau);
  CHECK(!report.certified);
  CHECK(report.sender1_max_gain > 0.0);
  REQUIRE(report.worst_deviation.has_value());
  CHECK(report.worst_deviation->sender == 1);
}

TEST_CASE("audit of a single-state mechanism is trivial") {
  const GameInstance one = validate_game({[] {
    State s;
    s.label = "only";
    s.prior = 1.0;
    s.u1 = {1.0, 0.0};
    s.u2 = {1.0, 0.0};
    s.v = {1.0, 1.0};
    return s;
  }()});
  TauMatrix tau;
  tau.n = 1;
  tau.entries = {0.35};
  const AuditReport report = audit_equilibrium(one, tau);
  CHECK(report.certified);
  CHECK(report.sender1_max_gain == 0.0);
  CHECK(!report.worst_deviation.has_value());
}

TEST_CASE("random implementable policies certify without sender deviations") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    GameInstance g = random_game(rng(), 1 + round % 10,
                                 round % 2 ? Profile::general
                                           : Profile::strict);
    if (round % 4 == 3) {
      g = with_indifference(g, rng() % g.size(), rng() % 2 == 0);
    }
    const Policy p = random_implementable_policy(g, rng);
    REQUIRE(check_sender_implementable(g, p).first);
    const AuditReport report = audit_equilibrium(g, build_tau(g, p));
    CHECK(report.sender1_max_gain <= 1e-12);
    CHECK(report.sender2_max_gain <= 1e-12);
    if (expected_utilities(g, p).v >= beta(g)) {
      CHECK(report.receiver_obedience_slacks[0] >= -1e-9);
      CHECK(report.receiver_obedience_slacks[1] >= -1e-9);
    }
  }
}

TEST_CASE("diagonal reproduction is exact") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 100; ++round) {
    const GameInstance g = random_game(rng(), 1 + round % 10,
                                       Profile::general);
    const Policy p = random_implementable_policy(g, rng);
    const TauMatrix tau = build_tau(g, p);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(tau.at(i, i) == p[i]);
  }
}

TEST_CASE("simulation is deterministic and matches the target policy") {
  const GameInstance g1 = load_g1();
  const TauMatrix tau = build_tau(g1, kOptimal);
  const auto truthful = truthful_strategy(6);

  const SimulationReport a = simulate(g1, tau, 200000, 99, truthful, truthful);
  const SimulationReport b = simulate(g1, tau, 200000, 99, truthful, truthful);
  CHECK(a.action0_counts == b.action0_counts);
  CHECK(a.avg_u1 == b.avg_u1);

  for (std::size_t i = 0; i < 6; ++i) {
    const double n = static_cast<double>(a.state_counts[i]);
    REQUIRE(n > 0);
    const double se = std::sqrt(kOptimal[i] * (1.0 - kOptimal[i]) / n);
    CHECK(std::fabs(a.empirical_p[i] - kOptimal[i]) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("a constant mechanism always recommends action 0") {
  const GameInstance g1 = load_g1();
  TauMatrix tau;
  tau.n = 6;
  tau.entries.assign(36, 1.0);
  const auto truthful = truthful_strategy(6);
  ReportingStrategy scrambled{3, 2, 1, 0, 5, 4};
  const SimulationReport report =
      simulate(g1, tau, 5000, 123, scrambled, truthful);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(report.action0_counts[i] == report.state_counts[i]);
  }
}

TEST_CASE("misreporting against a certified mechanism never helps") {
  const GameInstance g1 = load_g1();
  const TauMatrix tau = build_tau(g1, kOptimal);
  const auto truthful = truthful_strategy(6);
  ReportingStrategy always_omega2(6, 1);

  const SimulationReport honest =
      simulate(g1, tau, 400000, 5, truthful, truthful);
  const SimulationReport deviant =
      simulate(g1, tau, 400000, 6, always_omega2, truthful);
  // Bernoulli-style bound on the standard error of each average.
  const double se = 1.0 / std::sqrt(400000.0);
  CHECK(deviant.avg_u1 <= honest.avg_u1 + 3.0 * se);
}

TEST_CASE("invalid strategies are rejected") {
  const GameInstance g1 = load_g1();
  const TauMatrix tau = build_tau(g1, kOptimal);
  ReportingStrategy bad(6, 9);
  CHECK_THROWS_AS(
      (void)simulate(g1, tau, 10, 1, bad, truthful_strategy(6)), error);
}
