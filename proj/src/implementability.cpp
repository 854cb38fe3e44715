#include "cheaptalk/implementability.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "cheaptalk/kernels.hpp"

namespace cheaptalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SenderCheck {
  bool ok = false;
  std::optional<Witness> witness;
  std::optional<double> min_p00;
  std::optional<double> max_p11;
};

// Class ids for the extrema kernel: 0 both-prefer-0, 1 sender1-one,
// 2 sender2-one, 3 both-prefer-1; -1 marks an indifferent sender.
std::int32_t class_id(Preference s1, Preference s2) {
  if (s1 == Preference::indifferent || s2 == Preference::indifferent) {
    return -1;
  }
  if (s1 == Preference::prefers_zero) {
    return s2 == Preference::prefers_zero ? 0 : 2;
  }
  return s2 == Preference::prefers_zero ? 1 : 3;
}

std::size_t scan_min(const Policy& p, const std::vector<std::int32_t>& ids,
                     std::initializer_list<std::int32_t> classes) {
  double best = kInf;
  std::size_t at = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::int32_t c : classes) {
      if (ids[i] == c && p[i] < best) {
        best = p[i];
        at = i;
      }
    }
  }
  return at;
}

std::size_t scan_max(const Policy& p, const std::vector<std::int32_t>& ids,
                     std::initializer_list<std::int32_t> classes) {
  double best = -kInf;
  std::size_t at = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::int32_t c : classes) {
      if (ids[i] == c && p[i] > best) {
        best = p[i];
        at = i;
      }
    }
  }
  return at;
}

SenderCheck sender_check(const GameColumns& cols, const Policy& p,
                         double epsilon, double tol) {
  const std::size_t n = cols.size();
  std::vector<std::int32_t> ids(n);
  bool any_indifferent = false;
  double min00 = kInf, max11 = -kInf;
  for (std::size_t i = 0; i < n; ++i) {
    const Preference s1 = preference(cols.u1_0[i], cols.u1_1[i], epsilon);
    const Preference s2 = preference(cols.u2_0[i], cols.u2_1[i], epsilon);
    ids[i] = class_id(s1, s2);
    any_indifferent |= ids[i] < 0;
    if (ids[i] == 0) min00 = std::min(min00, p[i]);
    if (ids[i] == 3) max11 = std::max(max11, p[i]);
  }

  SenderCheck out;
  if (min00 != kInf) out.min_p00 = min00;
  if (max11 != -kInf) out.max_p11 = max11;

  if (!any_indifferent) {
    double mins[4], maxs[4];
    kernels::class_minmax(p.data(), ids.data(), n, mins, maxs);
    const double max_not00 = std::max(maxs[1], std::max(maxs[2], maxs[3]));
    const double min_not11 = std::min(mins[0], std::min(mins[1], mins[2]));
    const bool viol1 = max_not00 > mins[0] + tol;
    const bool viol2 = maxs[3] > min_not11 + tol;
    const bool viol3 = maxs[1] > mins[1] + tol;
    const bool viol4 = maxs[2] > mins[2] + tol;
    out.ok = !(viol1 || viol2 || viol3 || viol4);
    if (!out.ok) {
      Witness w;
      if (viol1) {
        w.omega = scan_min(p, ids, {0});
        w.omega_prime = scan_max(p, ids, {1, 2, 3});
      } else if (viol2) {
        w.omega_prime = scan_max(p, ids, {3});
        w.omega = scan_min(p, ids, {0, 1, 2});
      } else if (viol3) {
        w.omega_prime = scan_max(p, ids, {1});
        w.omega = scan_min(p, ids, {1});
      } else {
        w.omega_prime = scan_max(p, ids, {2});
        w.omega = scan_min(p, ids, {2});
      }
      out.witness = w;
    }
    return out;
  }

  // Indifference disables the class-extrema shortcut; fall back to the
  // pairwise definition of the order relation.
  std::vector<Preference> s1(n), s2(n);
  for (std::size_t i = 0; i < n; ++i) {
    s1[i] = preference(cols.u1_0[i], cols.u1_1[i], epsilon);
    s2[i] = preference(cols.u2_0[i], cols.u2_1[i], epsilon);
  }
  for (std::size_t at = 0; at < n; ++at) {
    for (std::size_t from = 0; from < n; ++from) {
      const bool rel = (s1[at] == Preference::prefers_zero &&
                        s2[from] == Preference::prefers_one) ||
                       (s2[at] == Preference::prefers_zero &&
                        s1[from] == Preference::prefers_one);
      if (rel && p[from] > p[at] + tol) {
        out.ok = false;
        out.witness = Witness{from, at};
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

void require_length(const GameInstance& game, const Policy& policy) {
  if (policy.size() != game.size()) {
    throw error(errc::length_mismatch, "policy length does not match game");
  }
}

}  // namespace

std::pair<bool, std::optional<Witness>> check_sender_implementable(
    const GameInstance& game, const Policy& policy, double epsilon,
    double tol) {
  require_length(game, policy);
  const SenderCheck result =
      sender_check(GameColumns::from(game), policy, epsilon, tol);
  return {result.ok, result.witness};
}

std::pair<bool, std::array<double, 2>> check_receiver_ic(
    const GameInstance& game, const Policy& policy, double tol) {
  require_length(game, policy);
  const GameColumns cols = GameColumns::from(game);
  std::array<double, 2> slack{};
  kernels::obedience_slacks(cols.prior.data(), policy.data(), cols.v0.data(),
                            cols.v1.data(), cols.size(), slack[0], slack[1]);
  const bool ok = slack[0] >= -tol && slack[1] >= -tol;
  return {ok, slack};
}

ImplementabilityVerdict check_implementable(const GameInstance& game,
                                            const GameColumns& cols,
                                            const Policy& policy,
                                            double epsilon, double order_tol,
                                            double slack_tol) {
  require_length(game, policy);
  ImplementabilityVerdict verdict;
  const SenderCheck sender = sender_check(cols, policy, epsilon, order_tol);
  verdict.sender_ok = sender.ok;
  verdict.witness = sender.witness;
  verdict.min_p_omega00 = sender.min_p00;
  verdict.max_p_omega11 = sender.max_p11;

  double w0 = 0.0, w1 = 0.0;
  kernels::value_summary(cols.prior.data(), policy.data(), cols.v0.data(),
                         cols.v1.data(), cols.size(), verdict.ic_slack[0],
                         verdict.ic_slack[1], w0, w1);
  verdict.receiver_ok =
      verdict.ic_slack[0] >= -slack_tol && verdict.ic_slack[1] >= -slack_tol;
  verdict.ev_minus_beta = (w1 + verdict.ic_slack[0]) - std::max(w0, w1);
  return verdict;
}

ImplementabilityVerdict check_implementable(const GameInstance& game,
                                            const Policy& policy,
                                            double epsilon, double order_tol,
                                            double slack_tol) {
  return check_implementable(game, GameColumns::from(game), policy, epsilon,
                             order_tol, slack_tol);
}

bool entrywise_feasibility(const GameInstance& game, const Policy& policy,
                           double epsilon, double tol) {
  require_length(game, policy);
  const auto cls = classify(game, epsilon);
  const std::size_t n = policy.size();
  for (std::size_t m1 = 0; m1 < n; ++m1) {
    for (std::size_t m2 = 0; m2 < n; ++m2) {
      if (m1 == m2) continue;
      double lo = 0.0, hi = 1.0;
      // Sender 1's preference at the column state binds the column
      // diagonal; sender 2's at the row state binds the row diagonal.
      if (cls[m2].sender1 == Preference::prefers_one) {
        lo = std::max(lo, policy[m2]);
      } else if (cls[m2].sender1 == Preference::prefers_zero) {
        hi = std::min(hi, policy[m2]);
      }
      if (cls[m1].sender2 == Preference::prefers_one) {
        lo = std::max(lo, policy[m1]);
      } else if (cls[m1].sender2 == Preference::prefers_zero) {
        hi = std::min(hi, policy[m1]);
      }
      if (lo > hi + tol) return false;
    }
  }
  return true;
}

}  // namespace cheaptalk
