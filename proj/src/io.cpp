#include "cheaptalk/io.hpp"

#include <cmath>
#include <random>

#include "json.hpp"

namespace cheaptalk {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw error(errc::malformed_json, "input is not valid JSON");
  }
  return j;
}

std::array<double, 2> payoff_pair(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != 2 ||
      !j[field][0].is_number() || !j[field][1].is_number()) {
    throw error(errc::malformed_json,
                std::string(field) + " must be a pair of numbers");
  }
  return {j[field][0].get<double>(), j[field][1].get<double>()};
}

json state_to_json(const State& s) {
  return json{{"label", s.label},
              {"prior", s.prior},
              {"u1", {s.u1[0], s.u1[1]}},
              {"u2", {s.u2[0], s.u2[1]}},
              {"v", {s.v[0], s.v[1]}}};
}

}  // namespace

GameInstance parse_game(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("schema_version")) {
    throw error(errc::malformed_json, "expected an object with schema_version");
  }
  if (!j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != 1) {
    throw error(errc::schema_version_unsupported,
                "unsupported schema_version (expected 1)");
  }
  if (!j.contains("states") || !j["states"].is_array()) {
    throw error(errc::malformed_json, "missing states array");
  }
  std::vector<State> states;
  states.reserve(j["states"].size());
  for (const json& js : j["states"]) {
    if (!js.is_object() || !js.contains("label") || !js["label"].is_string() ||
        !js.contains("prior") || !js["prior"].is_number()) {
      throw error(errc::malformed_json,
                  "each state needs a label and a numeric prior");
    }
    State s;
    s.label = js["label"].get<std::string>();
    s.prior = js["prior"].get<double>();
    s.u1 = payoff_pair(js, "u1");
    s.u2 = payoff_pair(js, "u2");
    s.v = payoff_pair(js, "v");
    states.push_back(std::move(s));
  }
  return validate_game(std::move(states));
}

std::string serialize_game(const GameInstance& game) {
  json states = json::array();
  for (const State& s : game.states) states.push_back(state_to_json(s));
  json j{{"schema_version", 1}, {"states", std::move(states)}};
  return j.dump(2) + "\n";
}

Policy parse_policy(std::string_view text, const GameInstance& game) {
  const json j = parse_json(text);
  Policy p;
  if (j.is_array()) {
    if (j.size() != game.size()) {
      throw error(errc::length_mismatch,
                  "policy length does not match the game");
    }
    for (const json& v : j) {
      if (!v.is_number()) {
        throw error(errc::malformed_json, "policy entries must be numbers");
      }
      p.push_back(v.get<double>());
    }
  } else if (j.is_object()) {
    p.resize(game.size());
    if (j.size() != game.size()) {
      throw error(errc::length_mismatch,
                  "policy object must cover every state label once");
    }
    for (std::size_t i = 0; i < game.size(); ++i) {
      const std::string& label = game.states[i].label;
      if (!j.contains(label) || !j[label].is_number()) {
        throw error(errc::malformed_json,
                    "policy object is missing state " + label);
      }
      p[i] = j[label].get<double>();
    }
  } else {
    throw error(errc::malformed_json,
                "policy must be an array or a label-keyed object");
  }
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw error(errc::malformed_json, "policy entries must lie in [0,1]");
    }
  }
  return p;
}

std::string serialize_policy(const Policy& policy) {
  return json(policy).dump() + "\n";
}

TauMatrix parse_tau(std::string_view text, const GameInstance& game) {
  const json j = parse_json(text);
  const std::size_t n = game.size();
  if (!j.is_array() || j.size() != n) {
    throw error(errc::dimension_mismatch,
                "mechanism must be an n x n array of rows");
  }
  TauMatrix tau;
  tau.n = n;
  tau.entries.reserve(n * n);
  for (const json& row : j) {
    if (!row.is_array() || row.size() != n) {
      throw error(errc::dimension_mismatch, "mechanism rows must have n entries");
    }
    for (const json& v : row) {
      if (!v.is_number()) {
        throw error(errc::malformed_json, "mechanism entries must be numbers");
      }
      const double x = v.get<double>();
      if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
        throw error(errc::malformed_json, "mechanism entries must lie in [0,1]");
      }
      tau.entries.push_back(x);
    }
  }
  return tau;
}

std::string serialize_tau(const TauMatrix& tau) {
  json rows = json::array();
  for (std::size_t m1 = 0; m1 < tau.n; ++m1) {
    json row = json::array();
    for (std::size_t m2 = 0; m2 < tau.n; ++m2) row.push_back(tau.at(m1, m2));
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

std::string serialize_verdict(const GameInstance& game,
                              const ImplementabilityVerdict& verdict) {
  json j{{"implementable", verdict.implementable()},
         {"sender_ok", verdict.sender_ok},
         {"receiver_ok", verdict.receiver_ok},
         {"ic_slack", {verdict.ic_slack[0], verdict.ic_slack[1]}},
         {"ev_minus_beta", verdict.ev_minus_beta}};
  if (verdict.witness) {
    j["witness"] = {
        {"omega_prime", game.states[verdict.witness->omega_prime].label},
        {"omega", game.states[verdict.witness->omega].label}};
  } else {
    j["witness"] = nullptr;
  }
  j["min_p_omega00"] = verdict.min_p_omega00
                           ? json(*verdict.min_p_omega00)
                           : json(nullptr);
  j["max_p_omega11"] = verdict.max_p_omega11
                           ? json(*verdict.max_p_omega11)
                           : json(nullptr);
  return j.dump(2) + "\n";
}

std::string serialize_report(const DesignReport& report) {
  json j{{"policy", report.policy},
         {"eu1", report.eu1},
         {"eu2", report.eu2},
         {"ev", report.ev},
         {"beta", report.beta},
         {"alpha", report.alpha ? json(*report.alpha) : json(nullptr)},
         {"gamma", report.gamma ? json(*report.gamma) : json(nullptr)},
         {"certified", report.certified}};
  return j.dump(2) + "\n";
}

std::string serialize_audit(const GameInstance& game,
                            const AuditReport& report) {
  json j{{"sender1_max_gain", report.sender1_max_gain},
         {"sender2_max_gain", report.sender2_max_gain},
         {"receiver_obedience_slacks",
          {report.receiver_obedience_slacks[0],
           report.receiver_obedience_slacks[1]}},
         {"certified", report.certified}};
  if (report.worst_deviation) {
    j["worst_deviation"] = {
        {"sender", report.worst_deviation->sender},
        {"true_state", game.states[report.worst_deviation->true_state].label},
        {"report", game.states[report.worst_deviation->report].label},
        {"gain", report.worst_deviation->gain}};
  } else {
    j["worst_deviation"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string serialize_simulation(const SimulationReport& report) {
  json empirical = json::array();
  for (double p : report.empirical_p) {
    empirical.push_back(std::isnan(p) ? json(nullptr) : json(p));
  }
  json j{{"rounds", report.rounds},
         {"seed", report.seed},
         {"state_counts", report.state_counts},
         {"action0_counts", report.action0_counts},
         {"empirical_p", std::move(empirical)},
         {"avg_u1", report.avg_u1},
         {"avg_u2", report.avg_u2},
         {"avg_v", report.avg_v}};
  return j.dump(2) + "\n";
}

std::string serialize_grid_result(const GridResult& result) {
  json j{{"found", result.found},
         {"utility", result.utility},
         {"alpha", result.alpha},
         {"gamma", result.gamma ? json(*result.gamma) : json(nullptr)},
         {"policy", result.policy}};
  return j.dump(2) + "\n";
}

std::string serialize_brute_result(const BruteResult& result) {
  json j{{"utility", result.utility}, {"policy", result.policy}};
  return j.dump(2) + "\n";
}

Profile parse_profile(std::string_view name) {
  if (name == "common-interest") return Profile::common_interest;
  if (name == "general") return Profile::general;
  if (name == "strict") return Profile::strict;
  throw error(errc::malformed_json,
              "unknown profile: " + std::string(name) +
                  " (expected common-interest, general, or strict)");
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_pm1(std::mt19937_64& rng) { return 2.0 * uniform01(rng) - 1.0; }

bool nearly_tied(const std::array<double, 2>& pay) {
  return std::fabs(pay[0] - pay[1]) <= 1e-9;
}

}  // namespace

GameInstance random_game(std::uint64_t seed, std::size_t n, Profile profile) {
  std::mt19937_64 rng(seed);
  std::vector<State> states(n);
  double prior_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double u = uniform01(rng);
    while (u == 0.0) u = uniform01(rng);
    const double e = -std::log(u);
    states[i].prior = e;
    prior_sum += e;
  }
  for (std::size_t i = 0; i < n; ++i) {
    states[i].prior /= prior_sum;
    states[i].label = "s" + std::to_string(i + 1);
    while (true) {
      State& s = states[i];
      s.u1 = {uniform_pm1(rng), uniform_pm1(rng)};
      if (profile == Profile::common_interest) {
        s.u2 = s.u1;
      } else {
        s.u2 = {uniform_pm1(rng), uniform_pm1(rng)};
      }
      s.v = {uniform_pm1(rng), uniform_pm1(rng)};
      if (profile != Profile::strict) break;
      if (!nearly_tied(s.u1) && !nearly_tied(s.u2) && !nearly_tied(s.v)) break;
    }
  }
  return validate_game(std::move(states));
}

}  // namespace cheaptalk
