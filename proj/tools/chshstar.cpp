// chshstar: command-line driver for the CHSH* game library.
//
// Exit codes: 0 success, 1 verification/consistency failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "chshstar/cli/commands.hpp"

namespace {

using chshstar::cli::Format;

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

const std::map<std::string, chshstar::SettingKind> kSettings{
    {"unitary", chshstar::SettingKind::unitary},
    {"clifford", chshstar::SettingKind::clifford},
    {"classical-reversible", chshstar::SettingKind::classical_reversible},
    {"irreversible", chshstar::SettingKind::classical_irreversible},
    {"clifford-rz", chshstar::SettingKind::clifford_plus_rz},
    {"qutrit", chshstar::SettingKind::qutrit_unitary_fixed},
    {"classical-q3", chshstar::SettingKind::classical_q3_reversible},
    {"classical-q3-shift", chshstar::SettingKind::classical_q3_shift},
};

struct Options {
  std::string format = "text";
  std::string output_path;
  std::optional<std::uint64_t> seed;
  // value / reproduce-all
  std::string setting;
  std::size_t dimension = 0;
  double epsilon = chshstar::gates::pi / 4;
  std::size_t restarts = 32;
  std::size_t iterations = 20000;
  double tolerance = 1e-12;
  bool free = false;
  // verify-lemma1
  std::size_t n_random = 1000;
  double tol = 1e-10;
  // sweep-epsilon
  std::size_t steps = 1001;
  // landauer
  std::optional<double> p;
  std::optional<std::string> target;
};

void add_common(CLI::App* cmd, Options& o, bool with_csv) {
  std::vector<std::string> formats{"text", "json"};
  if (with_csv) formats.push_back("csv");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--output", o.output_path, "Write output to this file instead of stdout");
}

void add_optimizer(CLI::App* cmd, Options& o) {
  cmd->add_option("--restarts", o.restarts, "Random restarts for the unitary optimizer (>= 32)");
  cmd->add_option("--iterations", o.iterations, "Objective evaluations per local search");
  cmd->add_option("--tolerance", o.tolerance, "Convergence tolerance on the objective");
  cmd->add_option("--seed", o.seed, "RNG seed (default: CHSHSTAR_SEED or built-in constant)");
}

chshstar::OptimizerConfig optimizer_config(const Options& o) {
  chshstar::OptimizerConfig cfg;
  cfg.restarts = o.restarts;
  cfg.max_iterations = o.iterations;
  cfg.tolerance = o.tolerance;
  cfg.seed = chshstar::cli::resolve_seed(o.seed);
  cfg.free_state_and_measurement = o.free;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CHSH* single-system game: values, lemma checks, sweeps and erasure accounting"};
  app.require_subcommand(1);
  Options o;

  auto* value = app.add_subcommand("value", "Game value for one setting");
  value->add_option("--setting", o.setting, "Setting name")->required()->check(CLI::IsMember(
      std::vector<std::string>{"unitary", "clifford", "classical-reversible", "irreversible", "clifford-rz", "qutrit",
                               "classical-q3", "classical-q3-shift"}));
  value->add_option("--dimension", o.dimension, "System dimension (default: 2, or 3 for the q=3 settings)");
  value->add_option("--epsilon", o.epsilon, "Rotation angle for clifford-rz, in (0, pi/2)");
  value->add_flag("--free", o.free, "Unitary setting: also optimize initial state and measurement axis");
  add_optimizer(value, o);
  add_common(value, o, false);

  auto* lemma = app.add_subcommand("verify-lemma1", "Check single-system vs lifted CHSH success per input");
  lemma->add_option("--n-random", o.n_random, "Number of random unitary strategies");
  lemma->add_option("--seed", o.seed, "RNG seed (default: CHSHSTAR_SEED or built-in constant)");
  lemma->add_option("--tol", o.tol, "Per-input tolerance");
  add_common(lemma, o, false);

  auto* sweep = app.add_subcommand("sweep-epsilon", "Clifford + Rz(eps) success probability over an open grid");
  sweep->add_option("--steps", o.steps, "Number of interior grid points (>= 2)");
  add_common(sweep, o, true);

  auto* land = app.add_subcommand("landauer", "Partial-erasure value and entropy ledger");
  land->add_option("--p", o.p, "Erasure probability in [0, 1]");
  land->add_option("--target", o.target, "Target value in [0.75, 1], or bell | tsirelson | pr");
  add_common(land, o, false);

  auto* q3 = app.add_subcommand("q3", "Mod-3 game: classical trit bound and the qutrit strategy");
  add_common(q3, o, false);

  auto* all = app.add_subcommand("reproduce-all", "Every setting in one table");
  add_optimizer(all, o);
  add_common(all, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  chshstar::cli::CommandResult result;
  try {
    const Format format = kFormats.at(o.format);
    if (*value) {
      chshstar::SettingSpec s;
      s.kind = kSettings.at(o.setting);
      const bool qutrit = s.kind == chshstar::SettingKind::qutrit_unitary_fixed ||
                          s.kind == chshstar::SettingKind::classical_q3_reversible ||
                          s.kind == chshstar::SettingKind::classical_q3_shift;
      s.dimension = o.dimension ? o.dimension : (qutrit ? 3 : 2);
      s.epsilon = o.epsilon;
      result = chshstar::cli::cmd_value(s, optimizer_config(o), format);
    } else if (*lemma) {
      result = chshstar::cli::cmd_verify_lemma1(o.n_random, chshstar::cli::resolve_seed(o.seed), o.tol, format);
    } else if (*sweep) {
      result = chshstar::cli::cmd_sweep_epsilon(o.steps, format);
    } else if (*land) {
      result = chshstar::cli::cmd_landauer(o.p, o.target, format);
    } else if (*q3) {
      result = chshstar::cli::cmd_q3(format);
    } else if (*all) {
      result = chshstar::cli::cmd_reproduce_all(optimizer_config(o), format);
    }
  } catch (const chshstar::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (!o.output_path.empty()) {
    std::ofstream f(o.output_path, std::ios::binary);
    if (!f || !(f << result.output) || !f.flush()) {
      std::cerr << "error: cannot write " << o.output_path << "\n";
      return 2;
    }
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
