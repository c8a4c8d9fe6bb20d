// Copyright 2026 The Discordium Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discordium/cli.hpp"

#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discordium/discord.hpp"
#include "discordium/entangle.hpp"
#include "discordium/entropy.hpp"
#include "discordium/io.hpp"
#include "discordium/verify.hpp"

namespace discordium {

namespace {

constexpr double kKoashiWinterTolerance = 1e-4;

std::string fmt12(double v) {
  if (std::isinf(v)) {
    return "inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Table {
 public:
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) {
      width = std::max(width, k.size());
    }
    for (const auto& [k, v] : rows_) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string describe(const StateFile& f) {
  std::ostringstream s;
  s << (f.label.empty() ? "(unlabelled)" : f.label) << " [" << f.state.n_a() << "x" << f.state.n_b() << "]";
  return s.str();
}

struct EntropyArgs {
  std::string file;
  bool json = false;
};

struct DiscordArgs {
  std::string file;
  std::string variant = "P";
  std::optional<Index> n;
  std::optional<Index> n_b;
  int restarts = OptimizerConfig{}.restarts;
  int max_iters = OptimizerConfig{}.max_iters;
  std::uint64_t seed = 0;
  bool json = false;
  bool table = false;
};

struct EofArgs {
  std::string file;
  std::string method = "wootters";
  Index k = kDefaultDecompositionSize;
  int restarts = OptimizerConfig{}.restarts;
  std::uint64_t seed = 0;
  bool json = false;
};

struct VerifyArgs {
  std::vector<std::string> batteries;
  bool all = false;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::string ensemble = "random";
  std::string kw_file;
  Index kw_n = 4;
  bool json = false;
};

struct MakeArgs {
  std::string kind;
  double p = 0.5;
  std::vector<Index> dims{2, 2};
  std::optional<Index> rank;
  std::uint64_t seed = 0;
  std::string output;
  std::string label;
};

int cmd_entropy(const EntropyArgs& a, std::ostream& out) {
  const StateFile f = load_state(a.file);
  const DensityMatrix ra = partial_trace(f.state, Subsystem::A);
  const DensityMatrix rb = partial_trace(f.state, Subsystem::B);
  const double s_ab = von_neumann(f.state.state()).value;
  const double s_a = von_neumann(ra).value;
  const double s_b = von_neumann(rb).value;
  const double cond = conditional_entropy(f.state).value;
  const double info = mutual_information(f.state).value;
  if (a.json) {
    const Json j{{"input", input_json(f)},
                 {"quantity", "entropy"},
                 {"values_bits",
                  {{"S_AB", bits_to_json(s_ab)},
                   {"S_A", bits_to_json(s_a)},
                   {"S_B", bits_to_json(s_b)},
                   {"S_B_given_A", bits_to_json(cond)},
                   {"I_AB", bits_to_json(info)}}},
                 {"library_version", library_version()}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  Table t;
  t.row("input", describe(f));
  t.row("S(AB)", fmt12(s_ab));
  t.row("S(A)", fmt12(s_a));
  t.row("S(B)", fmt12(s_b));
  t.row("S(B|A)", fmt12(cond));
  t.row("I(A:B)", fmt12(info));
  t.print(out);
  return kExitOk;
}

int cmd_discord(const DiscordArgs& a, std::ostream& out) {
  const StateFile f = load_state(a.file);
  OptimizerConfig cfg;
  cfg.restarts = a.restarts;
  cfg.max_iters = a.max_iters;
  cfg.seed = a.seed;
  cfg.validate();
  const BipartiteState& rho = f.state;
  const Index n = a.n.value_or(default_extension_dim(rho));
  DiscordResult r = [&] {
    if (a.variant == "P") {
      return discord_P(rho, cfg);
    }
    if (a.variant == "PE") {
      return discord_PE(rho, n, cfg);
    }
    if (a.variant == "R") {
      return discord_R(rho, n, cfg);
    }
    return discord_two_sided(rho, n, a.n_b.value_or(default_extension_dim_b(rho)), cfg);
  }();
  if (a.json && !a.table) {
    out << discord_report(f, r, cfg).dump(2) << '\n';
    return kExitOk;
  }
  Table t;
  t.row("input", describe(f));
  t.row("sha256", state_digest(rho));
  t.row("variant", r.variant.label());
  t.row("value_bits", fmt12(r.value.value));
  t.row("restarts", std::to_string(cfg.restarts));
  t.row("seed", std::to_string(cfg.seed));
  t.row("evaluations", std::to_string(r.outcome.evaluations));
  t.row("converged", r.outcome.converged ? "yes" : "no");
  t.print(out);
  return kExitOk;
}

int cmd_eof(const EofArgs& a, std::ostream& out) {
  const StateFile f = load_state(a.file);
  if (f.state.n_a() != 2 || f.state.n_b() != 2) {
    throw DimensionError("eof: expected a two-qubit state");
  }
  OptimizerConfig cfg;
  cfg.restarts = a.restarts;
  cfg.seed = a.seed;
  cfg.validate();
  const EntanglementResult r =
      a.method == "wootters" ? eof_2q(f.state.state()) : eof_via_decomposition(f.state.state(), 2, 2, a.k, cfg);
  if (a.json) {
    out << eof_report(f, r, cfg).dump(2) << '\n';
    return kExitOk;
  }
  Table t;
  t.row("input", describe(f));
  t.row("method", a.method);
  if (r.concurrence) {
    t.row("concurrence", fmt12(*r.concurrence));
  }
  t.row("eof_bits", fmt12(r.eof.value));
  t.print(out);
  return kExitOk;
}

int cmd_kw_check(const VerifyArgs& a, std::ostream& out) {
  const StateFile f = load_state(a.kw_file);
  const KoashiWinterReport r = koashi_winter_residual(f.state, a.kw_n, OptimizerConfig{.seed = a.seed});
  const bool ok = r.residual <= a.tolerance.value_or(kKoashiWinterTolerance);
  if (a.json) {
    Json j{{"input", input_json(f)},
           {"quantity", "koashi_winter_residual"},
           {"residual", r.residual},
           {"discord_pe", bits_to_json(r.discord_pe)},
           {"eof_bc", bits_to_json(r.eof_bc)},
           {"entropy_a", bits_to_json(r.entropy_a)},
           {"entropy_ab", bits_to_json(r.entropy_ab)},
           {"rhs", bits_to_json(r.rhs)},
           {"pass", ok}};
    if (r.projective_residual) {
      j["projective_residual"] = *r.projective_residual;
    }
    out << j.dump(2) << '\n';
  } else {
    Table t;
    t.row("input", describe(f));
    t.row("D_PE", fmt12(r.discord_pe));
    t.row("E(BC)", fmt12(r.eof_bc));
    t.row("S(A)", fmt12(r.entropy_a));
    t.row("S(AB)", fmt12(r.entropy_ab));
    t.row("rhs", fmt12(r.rhs));
    t.row("residual", fmt12(r.residual));
    if (r.projective_residual) {
      t.row("residual_P", fmt12(*r.projective_residual));
    }
    t.row("status", ok ? "PASS" : "FAIL");
    t.print(out);
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (!a.kw_file.empty()) {
    return cmd_kw_check(a, out);
  }
  std::vector<std::string> names = a.batteries;
  if (a.all) {
    names.clear();
    for (const auto& b : battery_table()) {
      names.emplace_back(b.name);
    }
  }
  if (names.empty()) {
    throw std::invalid_argument("verify: give --battery, --all or --kw-check");
  }
  const StateEnsemble ensemble = a.ensemble == "classical" ? StateEnsemble::Classical : StateEnsemble::Random;
  std::vector<BatteryReport> reports;
  for (const auto& name : names) {
    reports.push_back(run_battery(name, a.trials, a.seed, a.tolerance, ensemble));
  }
  bool failed = false;
  for (const auto& r : reports) {
    failed = failed || r.failures > 0;
  }
  if (a.json) {
    Json j = Json::array();
    for (const auto& r : reports) {
      j.push_back(battery_to_json(r));
    }
    out << Json{{"seed", a.seed}, {"batteries", std::move(j)}}.dump(2) << '\n';
  } else {
    out << std::left << std::setw(32) << "battery" << std::setw(8) << "trials" << std::setw(10) << "failures"
        << std::setw(20) << "worst_violation" << "tolerance" << '\n';
    for (const auto& r : reports) {
      out << std::setw(32) << r.name << std::setw(8) << r.trials << std::setw(10) << r.failures << std::setw(20)
          << fmt12(r.worst_violation) << fmt12(r.tolerance) << '\n';
      if (!r.seeds_of_failures.empty()) {
        out << "  failing seeds:";
        for (auto s : r.seeds_of_failures) {
          out << ' ' << s;
        }
        out << '\n';
      }
    }
  }
  return failed ? kExitVerificationFailure : kExitOk;
}

int cmd_make(const MakeArgs& a, std::ostream& out) {
  if (a.dims.size() != 2 || a.dims[0] < 1 || a.dims[1] < 1) {
    throw std::invalid_argument("make: --dims takes two positive integers");
  }
  const Index n_a = a.dims[0];
  const Index n_b = a.dims[1];
  Rng rng = make_rng(a.seed);
  BipartiteState rho = [&]() -> BipartiteState {
    if (a.kind == "bell") {
      return bell_state();
    }
    if (a.kind == "werner") {
      return werner_state(a.p);
    }
    if (a.kind == "classical") {
      return random_classical_state(n_a, n_b, rng);
    }
    if (a.kind == "product") {
      return random_product_state(n_a, n_b, rng);
    }
    return ginibre_state(n_a, n_b, a.rank.value_or(n_a * n_b), a.seed);
  }();
  std::string label = a.label;
  if (label.empty()) {
    label = a.kind == "werner" ? "werner(" + fmt12(a.p) + ")" : a.kind;
  }
  if (a.output.empty()) {
    out << format_state(rho, label);
  } else {
    save_state(a.output, rho, label);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum discord, entanglement of formation and their verification batteries", "discordium"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);

  EntropyArgs ea;
  auto* entropy = app.add_subcommand("entropy", "S(AB), S(A), S(B), S(B|A) and I(A:B) of a state file");
  entropy->add_option("state", ea.file, "StateFile JSON")->required();
  entropy->add_flag("--json", ea.json, "emit JSON");

  DiscordArgs da;
  auto* discord = app.add_subcommand("discord", "discord of a state under one measurement class");
  discord->add_option("state", da.file, "StateFile JSON")->required();
  discord->add_option("--variant", da.variant, "P, R, PE or two-sided")
      ->check(CLI::IsMember({"P", "R", "PE", "two-sided"}));
  discord->add_option("--N", da.n, "extension dimension (side A for two-sided)");
  discord->add_option("--NB", da.n_b, "extension dimension of side B (two-sided only)");
  discord->add_option("--restarts", da.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  discord->add_option("--max-iters", da.max_iters, "simplex iterations per restart")->check(CLI::PositiveNumber);
  discord->add_option("--seed", da.seed, "optimizer seed");
  discord->add_flag("--json", da.json, "emit the JSON report");
  discord->add_flag("--table", da.table, "emit an aligned text table (default)");

  EofArgs fa;
  auto* eof = app.add_subcommand("eof", "entanglement of formation of a two-qubit state");
  eof->add_option("state", fa.file, "StateFile JSON")->required();
  eof->add_option("--method", fa.method, "wootters or decomposition")
      ->check(CLI::IsMember({"wootters", "decomposition"}));
  eof->add_option("--K", fa.k, "decomposition size")->check(CLI::PositiveNumber);
  eof->add_option("--restarts", fa.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  eof->add_option("--seed", fa.seed, "optimizer seed");
  eof->add_flag("--json", fa.json, "emit the JSON report");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification batteries");
  verify->add_option("--battery", va.batteries, "battery name (repeatable)");
  verify->add_flag("--all", va.all, "run every battery");
  verify->add_option("--trials", va.trials, "trials per battery");
  verify->add_option("--seed", va.seed, "base seed");
  verify->add_option("--tolerance", va.tolerance, "override the battery tolerance");
  verify->add_option("--ensemble", va.ensemble, "random or classical")->check(CLI::IsMember({"random", "classical"}));
  verify->add_option("--kw-check", va.kw_file, "check the Koashi-Winter relation on one state file");
  verify->add_option("--N", va.kw_n, "extension dimension for --kw-check");
  verify->add_flag("--json", va.json, "emit JSON");

  MakeArgs ma;
  auto* make = app.add_subcommand("make", "write a StateFile");
  make->add_option("--kind", ma.kind, "bell, werner, classical, product or ginibre")
      ->required()
      ->check(CLI::IsMember({"bell", "werner", "classical", "product", "ginibre"}));
  make->add_option("--p", ma.p, "Werner mixing weight");
  make->add_option("--dims", ma.dims, "n_A n_B")->expected(2);
  make->add_option("--rank", ma.rank, "Ginibre rank");
  make->add_option("--seed", ma.seed, "generator seed");
  make->add_option("-o,--output", ma.output, "output file (stdout if omitted)");
  make->add_option("--label", ma.label, "label stored in the file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << (argc > 1 && std::string(argv[argc - 1]) == "--version" ? std::string(library_version()) + "\n"
                                                                    : app.help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*entropy) {
      return cmd_entropy(ea, out);
    }
    if (*discord) {
      return cmd_discord(da, out);
    }
    if (*eof) {
      return cmd_eof(fa, out);
    }
    if (*verify) {
      return cmd_verify(va, out);
    }
    return cmd_make(ma, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace discordium
