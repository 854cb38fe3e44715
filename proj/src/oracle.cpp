#include "cheaptalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "cheaptalk/implementability.hpp"
#include "cheaptalk/sender1_opt.hpp"
#include "cheaptalk/sender_opt.hpp"

namespace cheaptalk {

namespace {

constexpr double kGolden = 0.6180339887498949;

}  // namespace

GridResult grid_oracle_common(const GameInstance& game, unsigned resolution,
                              double epsilon) {
  const GameColumns cols = GameColumns::from(game);
  GridResult best;
  best.utility = -std::numeric_limits<double>::infinity();

  auto consider = [&](double alpha) {
    alpha = std::clamp(alpha, 0.0, 1.0);
    auto p = compute_p_alpha(game, alpha, epsilon);
    if (!p) return;
    const double u = expected_utilities(cols, *p).u1;
    if (u > best.utility) {
      best.found = true;
      best.utility = u;
      best.alpha = alpha;
      best.policy = std::move(*p);
    }
  };

  for (unsigned i = 0; i <= resolution; ++i) {
    consider(static_cast<double>(i) / resolution);
  }
  if (best.found) {
    const double cell = 1.0 / resolution;
    double lo = std::max(0.0, best.alpha - cell);
    double hi = std::min(1.0, best.alpha + cell);
    for (int it = 0; it < 20; ++it) {
      const double m1 = hi - kGolden * (hi - lo);
      const double m2 = lo + kGolden * (hi - lo);
      consider(m1);
      consider(m2);
      if (std::fabs(best.alpha - m1) <= std::fabs(best.alpha - m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
  }
  return best;
}

GridResult grid_oracle_general(const GameInstance& game, unsigned resolution,
                               double epsilon) {
  const GameColumns cols = GameColumns::from(game);
  GridResult best;
  best.utility = -std::numeric_limits<double>::infinity();

  auto consider = [&](double alpha, double gamma) {
    alpha = std::clamp(alpha, 0.0, 1.0);
    gamma = std::clamp(gamma, 0.0, 1.0);
    auto p = compute_p_alpha_gamma(game, alpha, gamma, epsilon);
    if (!p) return;
    const double u = expected_utilities(cols, *p).u1;
    if (u > best.utility) {
      best.found = true;
      best.utility = u;
      best.alpha = alpha;
      best.gamma = gamma;
      best.policy = std::move(*p);
    }
  };

  for (unsigned i = 0; i <= resolution; ++i) {
    for (unsigned j = 0; j <= resolution; ++j) {
      consider(static_cast<double>(i) / resolution,
               static_cast<double>(j) / resolution);
    }
  }
  if (best.found) {
    const double cell = 1.0 / resolution;
    for (int round = 0; round < 3; ++round) {
      for (int axis = 0; axis < 2; ++axis) {
        const double center = axis == 0 ? best.alpha : *best.gamma;
        double lo = std::max(0.0, center - cell);
        double hi = std::min(1.0, center + cell);
        for (int it = 0; it < 24; ++it) {
          const double m1 = hi - kGolden * (hi - lo);
          const double m2 = lo + kGolden * (hi - lo);
          if (axis == 0) {
            consider(m1, *best.gamma);
            consider(m2, *best.gamma);
          } else {
            consider(best.alpha, m1);
            consider(best.alpha, m2);
          }
          const double at = axis == 0 ? best.alpha : *best.gamma;
          if (std::fabs(at - m1) <= std::fabs(at - m2)) {
            hi = m2;
          } else {
            lo = m1;
          }
        }
      }
    }
  }
  return best;
}

BruteResult brute_force_receiver(const GameInstance& game, double epsilon) {
  const std::size_t n = game.size();
  if (n > 20) {
    throw error(errc::too_many_states,
                "exhaustive enumeration guarded to 20 states");
  }
  const GameColumns cols = GameColumns::from(game);
  BruteResult best;
  best.utility = -std::numeric_limits<double>::infinity();
  Policy p(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = (mask >> i) & 1 ? 1.0 : 0.0;
    }
    if (!check_sender_implementable(game, p, epsilon).first) continue;
    const double ev = expected_utilities(cols, p).v;
    if (ev > best.utility) {
      best.utility = ev;
      best.policy = p;
    }
  }
  return best;
}

}  // namespace cheaptalk
