#pragma once

#include <array>

#include "cheaptalk/sender_opt.hpp"

namespace cheaptalk {

/// Pure policy value per preference class, in the order (both prefer 0,
/// sender 1 prefers 1 / sender 2 prefers 0, the reverse, both prefer 1).
/// Feasibility: the first entry is the maximum, the last the minimum.
using ClassVector = std::array<int, 4>;

/// The four class-constant pure policies surviving dominance elimination.
inline constexpr std::array<ClassVector, 4> kPstarVectors{
    ClassVector{1, 1, 1, 1},
    ClassVector{0, 0, 0, 0},
    ClassVector{1, 1, 0, 0},
    ClassVector{1, 0, 1, 0},
};

/// Materializes the four candidates; full-consensus states always get the
/// consensus action. Requires strict sender preferences.
std::array<Policy, 4> enumerate_pstar(const GameInstance& game,
                                      double epsilon = 0.0);

/// Receiver-optimal implementable policy: argmax over the four candidates.
DesignReport solve_receiver(const GameInstance& game, double epsilon = 0.0);

}  // namespace cheaptalk
