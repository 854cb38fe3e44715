#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cheaptalk/implementability.hpp"
#include "cheaptalk/mediator.hpp"
#include "cheaptalk/oracle.hpp"
#include "cheaptalk/sender_opt.hpp"

namespace cheaptalk {

// Game file schema, version 1:
//   {"schema_version": 1,
//    "states": [{"label": "...", "prior": x,
//                "u1": [a0, a1], "u2": [a0, a1], "v": [a0, a1]}, ...]}
// Index 0 holds the payoff of action 0. Doubles round-trip exactly.

GameInstance parse_game(std::string_view text);
std::string serialize_game(const GameInstance& game);

/// Accepts a JSON array in state order or an object keyed by state label.
Policy parse_policy(std::string_view text, const GameInstance& game);
std::string serialize_policy(const Policy& policy);

/// Row-major array of arrays; row = sender-1 message in state order.
TauMatrix parse_tau(std::string_view text, const GameInstance& game);
std::string serialize_tau(const TauMatrix& tau);

std::string serialize_verdict(const GameInstance& game,
                              const ImplementabilityVerdict& verdict);
std::string serialize_report(const DesignReport& report);
std::string serialize_audit(const GameInstance& game,
                            const AuditReport& report);
std::string serialize_simulation(const SimulationReport& report);
std::string serialize_grid_result(const GridResult& result);
std::string serialize_brute_result(const BruteResult& result);

enum class Profile { common_interest, general, strict };

Profile parse_profile(std::string_view name);

/// Deterministic random instance: Dirichlet(1) prior, payoffs uniform on
/// [-1, 1]. The common-interest profile copies sender 1's payoffs to
/// sender 2; the strict profile resamples states until no agent is close
/// to indifferent.
GameInstance random_game(std::uint64_t seed, std::size_t n, Profile profile);

}  // namespace cheaptalk
