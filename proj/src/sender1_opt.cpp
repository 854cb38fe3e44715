#include "cheaptalk/sender1_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cheaptalk/classify.hpp"
#include "cheaptalk/implementability.hpp"

namespace cheaptalk {

namespace {

constexpr double kRangeSlack = 1e-9;

struct DisState {
  std::size_t idx = 0;
  double resistance = 0.0;
  bool from_one = false;   // in the both-prefer-0 class, starts at 1
  double gain_unit = 0.0;  // receiver gain per unit moved toward her action
  double cost_unit = 0.0;  // sender-1 loss per unit moved
};

// Block aggregates and the sorted disagreement prefix of the general
// sweep. Base policy: 1 on the both-prefer-0 class, alpha where sender 1
// prefers 1 and sender 2 prefers 0, gamma on the reverse class, 0
// elsewhere.
struct GeneralPlan {
  std::size_t n = 0;
  double beta_v = 0.0;
  double ev_const = 0.0;  // receiver utility of the base policy at (0, 0)
  double av = 0.0;        // d ev / d alpha
  double cv = 0.0;        // d ev / d gamma
  double u_const = 0.0;   // sender-1 utility of the base policy at (0, 0)
  double au = 0.0;        // d u1 / d alpha
  double cu = 0.0;        // d u1 / d gamma
  std::vector<StateClassification> cls;
  std::vector<DisState> dis;  // sorted by resistance, largest first
  // Prefix sums over dis, index j = first j states.
  std::vector<double> gain00, gain11, cost00, cost11;

  double ev_base(double alpha, double gamma) const {
    return ev_const + alpha * av + gamma * cv;
  }
  double u_base(double alpha, double gamma) const {
    return u_const + alpha * au + gamma * cu;
  }
};

GeneralPlan make_plan(const GameInstance& game, double epsilon) {
  GeneralPlan plan;
  plan.n = game.size();
  plan.cls = classify(game, epsilon);
  plan.beta_v = beta(game);
  for (std::size_t i = 0; i < plan.n; ++i) {
    const State& s = game.states[i];
    const StateClassification& c = plan.cls[i];
    const double mu = s.prior;
    if (c.strict_class == SenderClass::zero_zero) {
      plan.ev_const += mu * s.v[0];
      plan.u_const += mu * s.u1[0];
      if (!c.in_agreement) {
        plan.dis.push_back({i, *c.resistance, true,
                            mu * (s.v[1] - s.v[0]),
                            mu * (s.u1[0] - s.u1[1])});
      }
    } else if (c.strict_class == SenderClass::one_zero) {
      plan.ev_const += mu * s.v[1];
      plan.av += mu * (s.v[0] - s.v[1]);
      plan.u_const += mu * s.u1[1];
      plan.au += mu * (s.u1[0] - s.u1[1]);
    } else if (c.strict_class == SenderClass::zero_one) {
      plan.ev_const += mu * s.v[1];
      plan.cv += mu * (s.v[0] - s.v[1]);
      plan.u_const += mu * s.u1[1];
      plan.cu += mu * (s.u1[0] - s.u1[1]);
    } else {  // both-prefer-1 class or an indifferent sender: starts at 0
      plan.ev_const += mu * s.v[1];
      plan.u_const += mu * s.u1[1];
      if (c.strict_class == SenderClass::one_one && !c.in_agreement) {
        plan.dis.push_back({i, *c.resistance, false,
                            mu * (s.v[0] - s.v[1]),
                            mu * (s.u1[1] - s.u1[0])});
      }
    }
  }
  std::stable_sort(plan.dis.begin(), plan.dis.end(),
                   [](const DisState& a, const DisState& b) {
                     return a.resistance > b.resistance;
                   });
  const std::size_t k = plan.dis.size();
  plan.gain00.assign(k + 1, 0.0);
  plan.gain11.assign(k + 1, 0.0);
  plan.cost00.assign(k + 1, 0.0);
  plan.cost11.assign(k + 1, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    const DisState& d = plan.dis[j];
    plan.gain00[j + 1] = plan.gain00[j] + (d.from_one ? d.gain_unit : 0.0);
    plan.gain11[j + 1] = plan.gain11[j] + (d.from_one ? 0.0 : d.gain_unit);
    plan.cost00[j + 1] = plan.cost00[j] + (d.from_one ? d.cost_unit : 0.0);
    plan.cost11[j + 1] = plan.cost11[j] + (d.from_one ? 0.0 : d.cost_unit);
  }
  return plan;
}

void base_policy(const GeneralPlan& plan, double alpha, double gamma,
                 Policy& p) {
  p.assign(plan.n, 0.0);
  for (std::size_t i = 0; i < plan.n; ++i) {
    if (plan.cls[i].strict_class == SenderClass::zero_zero) {
      p[i] = 1.0;
    } else if (plan.cls[i].strict_class == SenderClass::one_zero) {
      p[i] = alpha;
    } else if (plan.cls[i].strict_class == SenderClass::zero_one) {
      p[i] = gamma;
    }
  }
}

// Sweep at pinned (alpha, gamma). Returns sender 1's utility or empty when
// the receiver guarantee is unreachable; fills *out when given.
std::optional<double> run_sweep(const GeneralPlan& plan, double alpha,
                                double gamma, Policy* out) {
  const double hi = std::max(alpha, gamma);
  const double lo = std::min(alpha, gamma);
  if (out) base_policy(plan, alpha, gamma, *out);
  double remaining = plan.beta_v - plan.ev_base(alpha, gamma);
  double utility = plan.u_base(alpha, gamma);
  if (remaining <= 0.0) return utility;
  for (const DisState& d : plan.dis) {
    const double full_len = d.from_one ? 1.0 - hi : lo;
    const double gain = full_len * d.gain_unit;
    if (gain >= remaining) {
      const double step = std::min(remaining / d.gain_unit, full_len);
      utility -= step * d.cost_unit;
      if (out) (*out)[d.idx] = d.from_one ? 1.0 - step : step;
      return utility;
    }
    utility -= full_len * d.cost_unit;
    if (out) (*out)[d.idx] = d.from_one ? hi : lo;
    remaining -= gain;
  }
  if (remaining <= 1e-12 * (1.0 + std::fabs(plan.beta_v))) return utility;
  return std::nullopt;
}

struct Line {
  double a = 0.0;  // alpha coefficient
  double c = 0.0;  // gamma coefficient
  double b = 0.0;
  double ap = 0.0;  // sender-1 utility gradient and offset on the line
  double cp = 0.0;
  double bp = 0.0;
};

// Receiver-equality line for prefix j. In the alpha >= gamma regime the
// swept both-prefer-0 states pool at alpha; for alpha <= gamma they pool
// at gamma, which regroups the coefficients.
Line line_for(const GeneralPlan& plan, std::size_t j, bool alpha_ge_gamma) {
  Line ln;
  ln.b = plan.beta_v - plan.ev_const - plan.gain00[j];
  ln.bp = plan.u_const - plan.cost00[j];
  if (alpha_ge_gamma) {
    ln.a = plan.av - plan.gain00[j];
    ln.c = plan.cv + plan.gain11[j];
    ln.ap = plan.au + plan.cost00[j];
    ln.cp = plan.cu - plan.cost11[j];
  } else {
    ln.a = plan.av + plan.gain11[j];
    ln.c = plan.cv - plan.gain00[j];
    ln.ap = plan.au - plan.cost11[j];
    ln.cp = plan.cu + plan.cost00[j];
  }
  return ln;
}

}  // namespace

Policy sender1_favorite(const GameInstance& game, double epsilon) {
  Policy p(game.size(), 0.0);
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (prefers(game, Agent::sender1, i, epsilon) ==
        Preference::prefers_zero) {
      p[i] = 1.0;
    }
  }
  return p;
}

std::optional<Policy> compute_p_alpha_gamma(const GameInstance& game,
                                            double alpha, double gamma,
                                            double epsilon) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw error(errc::alpha_out_of_range, "alpha must lie in [0,1]");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw error(errc::gamma_out_of_range, "gamma must lie in [0,1]");
  }
  const GeneralPlan plan = make_plan(game, epsilon);
  Policy p;
  if (!run_sweep(plan, alpha, gamma, &p)) return std::nullopt;
  return p;
}

std::vector<BoundaryCandidate> boundary_candidates(const GameInstance& game,
                                                   double epsilon) {
  const GeneralPlan plan = make_plan(game, epsilon);
  std::vector<BoundaryCandidate> out;
  const std::size_t k = plan.dis.size();
  for (std::size_t j = 0; j <= k; ++j) {
    const Line ge = line_for(plan, j, true);
    const Line le = line_for(plan, j, false);

    auto emit = [&](BoundaryCase kind, const Line& ln, double alpha,
                    double gamma, bool in_range) {
      BoundaryCandidate c;
      c.prefix = j;
      c.kind = kind;
      c.line_a = ln.a;
      c.line_c = ln.c;
      c.line_b = ln.b;
      c.alpha = in_range ? std::clamp(alpha, 0.0, 1.0) : alpha;
      c.gamma = in_range ? std::clamp(gamma, 0.0, 1.0) : gamma;
      c.valid = in_range;
      out.push_back(c);
    };
    auto in_range = [](double x) {
      return std::isfinite(x) && x >= -kRangeSlack && x <= 1.0 + kRangeSlack;
    };

    // (a) alpha = 0 and (d) gamma = 1 live in the alpha <= gamma regime;
    // (b) alpha = 1 and (c) gamma = 0 in alpha >= gamma; (e) alpha = gamma
    // is regime-independent.
    if (le.c != 0.0) {
      const double g = le.b / le.c;
      emit(BoundaryCase::alpha_zero, le, 0.0, g, in_range(g));
    }
    if (ge.c != 0.0) {
      const double g = (ge.b - ge.a) / ge.c;
      emit(BoundaryCase::alpha_one, ge, 1.0, g, in_range(g));
    }
    if (ge.a != 0.0) {
      const double a = ge.b / ge.a;
      emit(BoundaryCase::gamma_zero, ge, a, 0.0, in_range(a));
    }
    if (le.a != 0.0) {
      const double a = (le.b - le.c) / le.a;
      emit(BoundaryCase::gamma_one, le, a, 1.0, in_range(a));
    }
    if (ge.a + ge.c != 0.0) {
      const double t = ge.b / (ge.a + ge.c);
      emit(BoundaryCase::alpha_equals_gamma, ge, t, t, in_range(t));
    }
    if (ge.a == 0.0 && ge.c == 0.0 && std::fabs(ge.b) <= 1e-9) {
      for (auto [a, g] : {std::pair{0.0, 0.0}, std::pair{0.0, 1.0},
                          std::pair{1.0, 1.0}, std::pair{1.0, 0.0}}) {
        emit(BoundaryCase::corner, ge, a, g, true);
      }
    }
  }
  return out;
}

DesignReport solve_sender1(const GameInstance& game, double epsilon) {
  const auto cls = classify(game, epsilon);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].sender_indifferent) {
      throw error(errc::indifferent_sender_state,
                  "sender indifferent at state " + game.states[i].label);
    }
  }
  const GeneralPlan plan = make_plan(game, epsilon);
  const GameColumns cols = GameColumns::from(game);

  DesignReport report;
  report.beta = plan.beta_v;

  auto finish = [&](Policy p, double alpha, double gamma) -> DesignReport& {
    const ExpectedUtilities eu = expected_utilities(cols, p);
    report.policy = std::move(p);
    report.eu1 = eu.u1;
    report.eu2 = eu.u2;
    report.ev = eu.v;
    report.alpha = alpha;
    report.gamma = gamma;
    report.certified =
        check_implementable(game, cols, report.policy, epsilon)
            .implementable();
    return report;
  };

  // Step 1: sender 1's favorite is the base policy at (0, 1).
  if (plan.ev_base(0.0, 1.0) >= plan.beta_v) {
    Policy fav;
    base_policy(plan, 0.0, 1.0, fav);
    return finish(std::move(fav), 0.0, 1.0);
  }

  struct Scored {
    double utility;
    double alpha;
    double gamma;
    std::size_t prefix;
    int rank;       // corners first within ties of everything else
    bool realized;  // corners carry sweep results already
  };
  std::vector<Scored> scored;

  int corner_rank = 0;
  for (auto [a, g] : {std::pair{0.0, 0.0}, std::pair{0.0, 1.0},
                      std::pair{1.0, 1.0}, std::pair{1.0, 0.0}}) {
    if (auto u = run_sweep(plan, a, g, nullptr)) {
      scored.push_back({*u, a, g, 0, corner_rank, true});
    }
    ++corner_rank;
  }

  const auto candidates = boundary_candidates(game, epsilon);
  report.breakpoints_examined = candidates.size();
  for (const BoundaryCandidate& c : candidates) {
    if (!c.valid || c.kind == BoundaryCase::corner) continue;
    const Line ln =
        line_for(plan, c.prefix,
                 c.kind == BoundaryCase::alpha_one ||
                     c.kind == BoundaryCase::gamma_zero ||
                     c.kind == BoundaryCase::alpha_equals_gamma);
    const double utility = ln.ap * c.alpha + ln.cp * c.gamma + ln.bp;
    scored.push_back({utility, c.alpha, c.gamma, c.prefix, 4, false});
  }

  std::stable_sort(scored.begin(), scored.end(),
                   [](const Scored& x, const Scored& y) {
                     if (x.utility != y.utility) return x.utility > y.utility;
                     if (x.alpha != y.alpha) return x.alpha < y.alpha;
                     if (x.gamma != y.gamma) return x.gamma < y.gamma;
                     return x.rank < y.rank;
                   });

  for (const Scored& s : scored) {
    Policy realized;
    if (!run_sweep(plan, s.alpha, s.gamma, &realized)) continue;
    if (!s.realized) {
      // Revalidate: the sweep must land exactly on the assumed prefix
      // structure, otherwise the line constants do not describe this
      // point and the score is unreliable.
      Policy predicted;
      base_policy(plan, s.alpha, s.gamma, predicted);
      const double hi = std::max(s.alpha, s.gamma);
      const double lo = std::min(s.alpha, s.gamma);
      for (std::size_t j = 0; j < s.prefix; ++j) {
        predicted[plan.dis[j].idx] = plan.dis[j].from_one ? hi : lo;
      }
      bool match = true;
      for (std::size_t i = 0; i < plan.n && match; ++i) {
        match = std::fabs(predicted[i] - realized[i]) <= 1e-9;
      }
      if (!match) continue;
      const ExpectedUtilities eu = expected_utilities(cols, realized);
      if (std::fabs(eu.u1 - s.utility) > 1e-7 * (1.0 + std::fabs(eu.u1))) {
        throw error(errc::internal,
                    "candidate score disagrees with its policy");
      }
    }
    finish(std::move(realized), s.alpha, s.gamma);
    return report;
  }
  throw error(errc::internal, "no feasible candidate; this cannot happen "
                              "for strict-preference games");
}

}  // namespace cheaptalk
