#include "cheaptalk/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "cheaptalk/io.hpp"
#include "cheaptalk/receiver_opt.hpp"
#include "cheaptalk/sender1_opt.hpp"

namespace cheaptalk {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw error(errc::malformed_json, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw error(errc::malformed_json, "cannot write " + path);
  }
  out << payload;
}

struct CommonArgs {
  std::string game_path;
  std::string output;
  double epsilon = 0.0;
  double tolerance = kSlackTol;
};

GameInstance load_game(const CommonArgs& args) {
  return parse_game(read_input(args.game_path));
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Mediated two-sender recommendation design"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string policy_path, tau_path, mode = "common";
  std::string profile_name = "strict";
  std::string strategy1_path, strategy2_path;
  std::uint64_t rounds = 1000000, seed = 0;
  std::size_t gen_n = 4;
  unsigned resolution = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_game) {
    if (needs_game) {
      cmd->add_option("--game", args.game_path,
                      "game file (JSON, '-' for stdin)")
          ->required();
    }
    cmd->add_option("--output", args.output, "output file (default stdout)");
    cmd->add_option("--epsilon", args.epsilon,
                    "preference comparison tolerance");
    cmd->add_option("--tolerance", args.tolerance,
                    "verdict slack tolerance");
  };

  CLI::App* check = app.add_subcommand("check", "verify a policy");
  add_common(check, true);
  check->add_option("--policy", policy_path, "policy file")->required();

  CLI::App* tau = app.add_subcommand("tau", "build the mediator mechanism");
  add_common(tau, true);
  tau->add_option("--policy", policy_path, "policy file")->required();

  CLI::App* solve_senders_cmd =
      app.add_subcommand("solve-senders", "common-interest sender optimum");
  add_common(solve_senders_cmd, true);

  CLI::App* solve_sender1_cmd =
      app.add_subcommand("solve-sender1", "sender-1 optimum, general case");
  add_common(solve_sender1_cmd, true);

  CLI::App* solve_receiver_cmd =
      app.add_subcommand("solve-receiver", "receiver optimum");
  add_common(solve_receiver_cmd, true);

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force reference search");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--mode", mode, "common | general | receiver");
  oracle_cmd->add_option("--resolution", resolution, "grid resolution");

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo protocol run");
  add_common(simulate_cmd, true);
  simulate_cmd->add_option("--policy", policy_path,
                           "policy file (mechanism built from it)");
  simulate_cmd->add_option("--tau", tau_path, "mechanism file");
  simulate_cmd->add_option("--rounds", rounds, "number of rounds");
  simulate_cmd->add_option("--seed", seed, "RNG seed")->required();
  simulate_cmd->add_option("--strategy1", strategy1_path,
                           "sender-1 reports (JSON array of state indices)");
  simulate_cmd->add_option("--strategy2", strategy2_path,
                           "sender-2 reports");

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  add_common(gen, false);
  gen->add_option("--seed", seed, "RNG seed")->required();
  gen->add_option("--n", gen_n, "number of states")->required();
  gen->add_option("--profile", profile_name,
                  "common-interest | general | strict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int rc = app.exit(e, out, err);
    std::cout << out.str();
    std::cerr << err.str();
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      const GameInstance game = load_game(args);
      const Policy policy = parse_policy(read_input(policy_path), game);
      const ImplementabilityVerdict verdict = check_implementable(
          game, policy, args.epsilon, kOrderTol, args.tolerance);
      write_output(args.output, serialize_verdict(game, verdict));
      return verdict.implementable() ? 0 : 1;
    }
    if (tau->parsed()) {
      const GameInstance game = load_game(args);
      const Policy policy = parse_policy(read_input(policy_path), game);
      try {
        write_output(args.output,
                     serialize_tau(build_tau(game, policy, args.epsilon)));
      } catch (const error& e) {
        if (e.code() == errc::not_sender_implementable) {
          std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
          return 1;
        }
        throw;
      }
      return 0;
    }
    if (solve_senders_cmd->parsed()) {
      const GameInstance game = load_game(args);
      const DesignReport report = solve_common(game, args.epsilon);
      write_output(args.output, serialize_report(report));
      return report.certified ? 0 : 3;
    }
    if (solve_sender1_cmd->parsed()) {
      const GameInstance game = load_game(args);
      const DesignReport report = solve_sender1(game, args.epsilon);
      write_output(args.output, serialize_report(report));
      return report.certified ? 0 : 3;
    }
    if (solve_receiver_cmd->parsed()) {
      const GameInstance game = load_game(args);
      const DesignReport report = solve_receiver(game, args.epsilon);
      write_output(args.output, serialize_report(report));
      return report.certified ? 0 : 3;
    }
    if (oracle_cmd->parsed()) {
      const GameInstance game = load_game(args);
      if (mode == "common") {
        const GridResult r = grid_oracle_common(
            game, resolution ? resolution : 2000, args.epsilon);
        write_output(args.output, serialize_grid_result(r));
      } else if (mode == "general") {
        const GridResult r = grid_oracle_general(
            game, resolution ? resolution : 64, args.epsilon);
        write_output(args.output, serialize_grid_result(r));
      } else if (mode == "receiver") {
        write_output(args.output, serialize_brute_result(
                                      brute_force_receiver(game, args.epsilon)));
      } else {
        std::cerr << "unknown oracle mode: " << mode << "\n";
        return 2;
      }
      return 0;
    }
    if (simulate_cmd->parsed()) {
      const GameInstance game = load_game(args);
      TauMatrix mechanism;
      if (!tau_path.empty()) {
        mechanism = parse_tau(read_input(tau_path), game);
      } else if (!policy_path.empty()) {
        mechanism = build_tau(
            game, parse_policy(read_input(policy_path), game), args.epsilon);
      } else {
        std::cerr << "simulate needs --policy or --tau\n";
        return 2;
      }
      auto load_strategy = [&](const std::string& path) -> ReportingStrategy {
        if (path.empty()) return truthful_strategy(game.size());
        const nlohmann::json j =
            nlohmann::json::parse(read_input(path), nullptr, false);
        if (j.is_discarded() || !j.is_array()) {
          throw error(errc::invalid_strategy,
                      "strategy must be a JSON array of state indices");
        }
        ReportingStrategy s;
        for (const auto& v : j) s.push_back(v.get<std::size_t>());
        return s;
      };
      const SimulationReport report =
          simulate(game, mechanism, rounds, seed, load_strategy(strategy1_path),
                   load_strategy(strategy2_path));
      write_output(args.output, serialize_simulation(report));
      return 0;
    }
    if (gen->parsed()) {
      const GameInstance game =
          random_game(seed, gen_n, parse_profile(profile_name));
      write_output(args.output, serialize_game(game));
      return 0;
    }
  } catch (const error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == errc::internal ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace cheaptalk
