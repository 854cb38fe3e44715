#include "cheaptalk/sender_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cheaptalk/classify.hpp"
#include "cheaptalk/implementability.hpp"
#include "cheaptalk/kernels.hpp"

namespace cheaptalk {

namespace {

constexpr double kRangeSlack = 1e-9;  // breakpoints this close to [0,1] count

struct DisState {
  std::size_t idx = 0;
  double resistance = 0.0;
  bool from_one = false;  // starts at 1 (senders prefer 0, receiver 1)
  double gain_unit = 0.0;  // receiver gain per unit moved toward her action
  double cost_unit = 0.0;  // sender loss per unit moved
};

struct CommonPlan {
  std::size_t n = 0;
  double beta_v = 0.0;
  double ev_favorite = 0.0;
  double u_favorite = 0.0;
  Policy favorite;
  std::vector<DisState> dis;  // sorted by resistance, largest first
};

// One pass over the columns: common-interest validation, the senders'
// favorite policy, and the disagreement states with their sweep rates.
CommonPlan make_plan(const GameInstance& game, const GameColumns& cols,
                     double epsilon) {
  CommonPlan plan;
  plan.n = cols.size();
  plan.favorite.assign(plan.n, 0.0);
  plan.dis.reserve(plan.n / 2);
  for (std::size_t i = 0; i < plan.n; ++i) {
    if (std::fabs(cols.u1_0[i] - cols.u2_0[i]) > epsilon ||
        std::fabs(cols.u1_1[i] - cols.u2_1[i]) > epsilon) {
      throw error(errc::not_common_interest,
                  "senders do not share a utility function at state " +
                      game.states[i].label);
    }
    const Preference s1 = preference(cols.u1_0[i], cols.u1_1[i], epsilon);
    const Preference s2 = preference(cols.u2_0[i], cols.u2_1[i], epsilon);
    const Preference rec = preference(cols.v0[i], cols.v1[i], epsilon);
    if (s1 == Preference::prefers_zero && s2 == Preference::prefers_zero) {
      plan.favorite[i] = 1.0;
    }
    const bool disagree = (s1 == Preference::prefers_zero &&
                           rec == Preference::prefers_one) ||
                          (s1 == Preference::prefers_one &&
                           rec == Preference::prefers_zero);
    if (disagree) {
      DisState d;
      d.idx = i;
      d.from_one = s1 == Preference::prefers_zero;
      const double mu = cols.prior[i];
      if (d.from_one) {
        d.gain_unit = mu * (cols.v1[i] - cols.v0[i]);
        d.cost_unit = mu * (cols.u1_0[i] - cols.u1_1[i]);
      } else {
        d.gain_unit = mu * (cols.v0[i] - cols.v1[i]);
        d.cost_unit = mu * (cols.u1_1[i] - cols.u1_0[i]);
      }
      d.resistance = (cols.v1[i] - cols.v0[i]) / (cols.u1_0[i] - cols.u1_1[i]);
      plan.dis.push_back(d);
    }
  }
  std::sort(plan.dis.begin(), plan.dis.end(),
            [](const DisState& a, const DisState& b) {
              if (a.resistance != b.resistance) {
                return a.resistance > b.resistance;
              }
              return a.idx < b.idx;
            });
  double s0 = 0.0, s1 = 0.0, w0 = 0.0, w1 = 0.0;
  kernels::value_summary(cols.prior.data(), plan.favorite.data(),
                         cols.v0.data(), cols.v1.data(), plan.n, s0, s1, w0,
                         w1);
  plan.beta_v = std::max(w0, w1);
  plan.ev_favorite = w1 + s0;
  plan.u_favorite = kernels::mix_expectation(
      cols.prior.data(), plan.favorite.data(), cols.u1_0.data(),
      cols.u1_1.data(), plan.n);
  return plan;
}

// Runs the pooled sweep at alpha. Returns the senders' utility, or empty
// when the receiver guarantee is out of reach; fills *out when given.
std::optional<double> run_sweep(const CommonPlan& plan, double alpha,
                                Policy* out) {
  if (out) *out = plan.favorite;
  double remaining = plan.beta_v - plan.ev_favorite;
  double utility = plan.u_favorite;
  if (remaining <= 0.0) return utility;
  for (const DisState& d : plan.dis) {
    const double full_len = d.from_one ? 1.0 - alpha : alpha;
    const double gain = full_len * d.gain_unit;
    if (gain >= remaining) {
      const double step = std::min(remaining / d.gain_unit, full_len);
      utility -= step * d.cost_unit;
      if (out) (*out)[d.idx] = d.from_one ? 1.0 - step : step;
      return utility;
    }
    utility -= full_len * d.cost_unit;
    if (out) (*out)[d.idx] = alpha;
    remaining -= gain;
  }
  if (remaining <= 1e-12 * (1.0 + std::fabs(plan.beta_v))) return utility;
  return std::nullopt;
}

}  // namespace

bool common_interest(const GameInstance& game, double epsilon) {
  for (const State& s : game.states) {
    if (std::fabs(s.u1[0] - s.u2[0]) > epsilon ||
        std::fabs(s.u1[1] - s.u2[1]) > epsilon) {
      return false;
    }
  }
  return true;
}

Policy senders_favorite(const GameInstance& game, double epsilon) {
  const auto cls = classify(game, epsilon);
  Policy p(game.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (cls[i].strict_class == SenderClass::zero_zero) p[i] = 1.0;
  }
  return p;
}

std::optional<Policy> compute_p_alpha(const GameInstance& game, double alpha,
                                      double epsilon) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw error(errc::alpha_out_of_range, "alpha must lie in [0,1]");
  }
  const GameColumns cols = GameColumns::from(game);
  const CommonPlan plan = make_plan(game, cols, epsilon);
  Policy p;
  if (!run_sweep(plan, alpha, &p)) return std::nullopt;
  return p;
}

std::vector<AlphaBreakpoint> alpha_breakpoints(const GameInstance& game,
                                               double epsilon) {
  const GameColumns cols = GameColumns::from(game);
  const CommonPlan plan = make_plan(game, cols, epsilon);
  std::vector<AlphaBreakpoint> out;
  out.reserve(plan.dis.size());
  const double need = plan.beta_v - plan.ev_favorite;
  double gain_one = 0.0;   // prefix sum over states starting at 1
  double gain_zero = 0.0;  // prefix sum over states starting at 0
  for (std::size_t j = 0; j < plan.dis.size(); ++j) {
    const DisState& d = plan.dis[j];
    (d.from_one ? gain_one : gain_zero) += d.gain_unit;
    AlphaBreakpoint bp;
    bp.prefix = j + 1;
    const double denom = gain_zero - gain_one;
    if (denom == 0.0) {
      bp.alpha = std::numeric_limits<double>::quiet_NaN();
      bp.valid = false;
    } else {
      bp.alpha = (need - gain_one) / denom;
      bp.valid = bp.alpha >= -kRangeSlack && bp.alpha <= 1.0 + kRangeSlack;
      if (bp.valid) bp.alpha = std::clamp(bp.alpha, 0.0, 1.0);
    }
    out.push_back(bp);
  }
  return out;
}

DesignReport solve_common(const GameInstance& game, double epsilon) {
  const GameColumns cols = GameColumns::from(game);
  const CommonPlan plan = make_plan(game, cols, epsilon);
  const std::size_t k = plan.dis.size();

  DesignReport report;
  report.beta = plan.beta_v;
  report.breakpoints_examined = k;

  auto finish = [&](Policy p, std::optional<double> alpha) -> DesignReport& {
    const ExpectedUtilities eu = expected_utilities(cols, p);
    report.policy = std::move(p);
    report.eu1 = eu.u1;
    report.eu2 = eu.u2;
    report.ev = eu.v;
    report.alpha = alpha;
    report.certified =
        check_implementable(game, cols, report.policy, epsilon)
            .implementable();
    return report;
  };

  // Step 1: the senders' favorite, when the receiver already clears her
  // guarantee.
  if (plan.ev_favorite >= plan.beta_v) {
    return finish(plan.favorite, std::nullopt);
  }

  struct Candidate {
    double utility = -std::numeric_limits<double>::infinity();
    double alpha = 0.0;
    int rank = 0;
  };
  Candidate best;
  auto offer = [&](double utility, double alpha, int rank) {
    const bool better =
        utility > best.utility ||
        (utility == best.utility &&
         (alpha < best.alpha || (alpha == best.alpha && rank < best.rank)));
    if (better) best = Candidate{utility, alpha, rank};
  };

  // Step 2: the two endpoint sweeps.
  if (auto u = run_sweep(plan, 0.0, nullptr)) offer(*u, 0.0, 0);
  if (auto u = run_sweep(plan, 1.0, nullptr)) offer(*u, 1.0, 1);

  // Step 3: one candidate per resistance prefix, scored incrementally.
  {
    const double need = plan.beta_v - plan.ev_favorite;
    double gain_one = 0.0, gain_zero = 0.0;
    double cost_one = 0.0, cost_zero = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const DisState& d = plan.dis[j];
      (d.from_one ? gain_one : gain_zero) += d.gain_unit;
      (d.from_one ? cost_one : cost_zero) += d.cost_unit;
      const double denom = gain_zero - gain_one;
      if (denom == 0.0) continue;
      double alpha = (need - gain_one) / denom;
      if (alpha < -kRangeSlack || alpha > 1.0 + kRangeSlack) continue;
      alpha = std::clamp(alpha, 0.0, 1.0);
      offer(plan.u_favorite - (1.0 - alpha) * cost_one - alpha * cost_zero,
            alpha, 2 + static_cast<int>(j));
    }
  }

  // A constant policy at the receiver's guaranteed action is always
  // implementable; it backstops degenerate instances (e.g. indifferent
  // senders blocking both endpoint sweeps).
  const double e0 =
      kernels::weighted_sum(cols.prior.data(), cols.v0.data(), cols.size());
  const double e1 =
      kernels::weighted_sum(cols.prior.data(), cols.v1.data(), cols.size());
  const Policy constant(plan.n, e0 >= e1 ? 1.0 : 0.0);
  offer(kernels::mix_expectation(cols.prior.data(), constant.data(),
                                 cols.u1_0.data(), cols.u1_1.data(), plan.n),
        constant[0], std::numeric_limits<int>::max());

  Policy winner;
  if (best.rank == std::numeric_limits<int>::max()) {
    winner = constant;
  } else if (!run_sweep(plan, best.alpha, &winner)) {
    throw error(errc::internal, "winning sweep became infeasible");
  }
  finish(std::move(winner), best.alpha);
  if (std::fabs(report.eu1 - best.utility) >
      1e-7 * (1.0 + std::fabs(best.utility))) {
    throw error(errc::internal,
                "incremental candidate score disagrees with the policy");
  }
  return report;
}

}  // namespace cheaptalk
