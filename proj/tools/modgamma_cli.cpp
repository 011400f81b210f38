/* Copyright 2026 The modgamma Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command-line front end: Gauss sums, single gamma factors, block
// partitions, the q = 5 counterexample and the completeness demo.

#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "modgamma/explorer.hpp"

namespace {

using namespace modgamma;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_consistency = 3;
constexpr int exit_chain_disagreement = 4;

struct gauss_options {
  u64 q = 25;
  i64 exponent = 8;
  unsigned trace_to = 1;
  u64 ell = 0;
  unsigned seed = 0;
};

struct gamma_options {
  u64 q = 5;
  u64 ell = 2;
  std::string kind = "cuspidal";
  std::vector<i64> data{8};
  i64 twist_exponent = 0;
  u64 unipotent_power = 0;
  unsigned depth = 1;
  unsigned seed = 0;
  bool char0 = false;
};

struct blocks_options {
  scenario_config config;
  std::string mode = "up_to_monomial";
  std::string format = "json";
};

struct counterexample_options {
  bool strict = false;
  unsigned seed = 0;
  std::string format = "json";
};

struct completeness_options {
  u64 ell = 2;
  unsigned a = 2;
  unsigned n = 4;
};

int run_gauss(const gauss_options& o) {
  const auto pp = as_prime_power(o.q);
  if (!pp) throw std::invalid_argument("q is not a prime power");
  if (pp->second % o.trace_to != 0) throw std::invalid_argument("--trace-to must divide the degree of q");
  auto field = fq_field::build(pp->first, pp->second);
  const mult_char chi(field, o.exponent);
  const add_char psi = add_char(field, o.trace_to, o.trace_to).compose_trace(pp->second);
  const cyc_int tau = gauss_sum(chi, psi);
  json out = json::object();
  out["q"] = o.q;
  out["exponent"] = chi.exponent();
  out["character_order"] = chi.order();
  out["cyclotomic_order"] = tau.ring()->order();
  out["tau"] = tau.to_string();
  const cyc_int sq = tau * tau;
  if (auto v = sq.as_integer()) out["tau_squared"] = v->str();
  else out["tau_squared"] = sq.to_string();
  if (o.ell != 0) {
    auto map = reduction_map::build(tau.ring()->order(), o.ell, o.seed);
    out["ell"] = o.ell;
    out["reduction"] = map(tau).to_string();
  }
  std::cout << out.dump(2) << '\n';
  return exit_ok;
}

inertial_support support_from(const gamma_options& o) {
  if (o.kind == "cuspidal" && o.data.size() == 1) return inertial_support::cuspidal(o.q, o.data[0]);
  if (o.kind == "principal" && o.data.size() == 2) return inertial_support::principal(o.q, o.data[0], o.data[1]);
  if (o.kind == "special" && o.data.size() == 1) return inertial_support::special(o.q, o.data[0]);
  throw std::invalid_argument("--kind/--data mismatch: cuspidal and special take one exponent, principal two");
}

int run_gamma(const gamma_options& o) {
  json out = json::object();
  out["q"] = o.q;
  out["kind"] = o.kind;
  if (o.kind == "gl1") {
    if (o.data.size() != 1) throw std::invalid_argument("gl1 takes one exponent");
  } else {
    out["support"] = support_from(o).label();
  }
  if (o.char0) {
    if (o.unipotent_power != 0) throw std::invalid_argument("unipotent twists need a mod-ell context");
    const auto ctx = make_char0_context(o.q);
    const auto twist = tame_from_exponent(ctx, o.twist_exponent);
    const auto g = o.kind == "gl1" ? gamma_gl1(ctx, tame_from_exponent(ctx, o.data[0]) * twist)
                                   : gamma_of_support(ctx, support_from(o), twist);
    out["ring"] = "Z[zeta_" + std::to_string(ctx.root_order()) + "][1/" + std::to_string(ctx.p) + "]";
    out["gamma"] = g.simplified().to_string();
    out["gamma_json"] = to_json(g);
  } else {
    scenario_config config;
    config.q = o.q;
    config.ell = o.ell;
    config.depth = o.depth;
    config.seed = o.seed;
    const auto sc = scenario::build(config);
    if (o.depth > sc.menu().depth) throw std::invalid_argument("--depth exceeds the nilpotency of the reduction");
    const twist_entry entry{o.depth, 0, o.unipotent_power, 0};
    const auto& ctx = sc.context(o.depth);
    auto twist = sc.twist(entry);
    twist.value_at_generator = twist.value_at_generator * ctx.root_of_unity(o.q - 1, o.twist_exponent);
    const auto g = o.kind == "gl1" ? gamma_gl1(ctx, tame_from_exponent(ctx, o.data[0]) * twist)
                                   : gamma_of_support(ctx, support_from(o), twist);
    out["ell"] = o.ell;
    out["depth"] = o.depth;
    out["convention"] = convention_block(sc);
    out["twist_value_at_generator"] = twist.value_at_generator.to_string();
    out["gamma"] = g.simplified().to_string();
    out["gamma_json"] = to_json(g);
  }
  std::cout << out.dump(2) << '\n';
  return exit_ok;
}

int run_blocks_command(blocks_options o) {
  o.config.mode = parse_compare_mode(o.mode);
  const auto sc = scenario::build(o.config);
  std::vector<fingerprint> fps;
  for (const auto& s : enumerate_supports(o.config.q, o.config.ell)) fps.push_back(sc.fingerprint_of(s));
  const auto report = partition_blocks(sc, std::move(fps));
  if (o.format == "json") {
    std::cout << report_json(sc, report).dump(2) << '\n';
  } else if (o.format == "csv") {
    std::cout << report_csv(report);
  } else {
    std::cout << report_table(report);
  }
  return exit_ok;
}

int run_counterexample_command(const counterexample_options& o) {
  const auto rep = run_counterexample(o.seed);
  if (rep.tau_theta_squared != 25) throw consistency_error("tau(theta)^2 != 25");
  if (!rep.naive_all_equal || !rep.naive_reduce_to_one)
    throw consistency_error("residue-valued twists do not reproduce the naive coincidence");
  if (!rep.separated) throw consistency_error("no nilpotent twist separates the two classes");
  if (o.format == "json") {
    std::cout << counterexample_json(rep).dump(2) << '\n';
  } else {
    std::cout << "tau(theta, psi~)^2 = " << rep.tau_theta_squared.str() << '\n';
    std::cout << "residue-valued twists agree: " << (rep.naive_all_equal ? "yes" : "no") << '\n';
    std::cout << "separated by nilpotent twist: " << (rep.separated ? rep.witness : "none") << '\n';
    std::cout << "gamma(lift x cusp)^2 = " << rep.chain_cuspidal_squared << '\n';
    std::cout << "gamma(lift x Sp2)    = " << rep.chain_special << '\n';
    std::cout << "zeta^2               = " << rep.chain_zeta_squared << '\n';
    std::cout << "chain agrees: " << (rep.chain_agrees ? "yes" : "no") << '\n';
  }
  if (o.strict && !rep.chain_agrees) return exit_chain_disagreement;
  return exit_ok;
}

int run_completeness(const completeness_options& o) {
  const auto r = completeness_demo(o.ell, o.a, o.n);
  json out = json::object();
  out["ell"] = o.ell;
  out["a"] = o.a;
  out["N"] = o.n;
  out["k_character_count"] = r.k_character_count;
  out["k_sum"] = r.k_sum.to_string();
  out["lift_sum"] = r.lift_sum.to_string();
  out["lift_is_character"] = r.lift_is_character;
  std::cout << out.dump(2) << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modgamma: mod-ell gamma factors of tame and level-zero data"};
  app.require_subcommand(1);

  gauss_options gauss;
  auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum of a multiplicative character of F_q");
  gauss_cmd->add_option("--q", gauss.q, "field size")->check(CLI::PositiveNumber);
  gauss_cmd->add_option("--exp", gauss.exponent, "character exponent on the field generator");
  gauss_cmd->add_option("--trace-to", gauss.trace_to, "degree of the subfield carrying the canonical psi");
  gauss_cmd->add_option("--ell", gauss.ell, "also reduce modulo this prime");
  gauss_cmd->add_option("--seed", gauss.seed, "residue-field generator rank");

  gamma_options gamma;
  auto* gamma_cmd = app.add_subcommand("gamma", "one twisted gamma factor");
  gamma_cmd->add_option("--q", gamma.q, "residue field size");
  gamma_cmd->add_option("--ell", gamma.ell, "modular characteristic");
  gamma_cmd->add_option("--kind", gamma.kind, "cuspidal | principal | special | gl1")
      ->check(CLI::IsMember({"cuspidal", "principal", "special", "gl1"}));
  gamma_cmd->add_option("--data", gamma.data, "support exponents")->delimiter(',');
  gamma_cmd->add_option("--twist-exp", gamma.twist_exponent, "residue exponent of the twist on F_q^x");
  gamma_cmd->add_option("--unipotent-power", gamma.unipotent_power, "twist by (1+Y)^k on the generator");
  gamma_cmd->add_option("--depth", gamma.depth, "nilpotency order N")->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--seed", gamma.seed, "residue-field generator rank");
  gamma_cmd->add_flag("--char0", gamma.char0, "evaluate over Z[zeta][1/p] instead");

  blocks_options blocks;
  auto* blocks_cmd = app.add_subcommand("blocks", "partition inertial supports into gamma-factor blocks");
  blocks_cmd->add_option("--q", blocks.config.q, "residue field size");
  blocks_cmd->add_option("--ell", blocks.config.ell, "modular characteristic");
  blocks_cmd->add_option("--depth", blocks.config.depth, "maximal nilpotency order")->check(CLI::PositiveNumber);
  blocks_cmd->add_option("--mode", blocks.mode, "exact | up_to_monomial")
      ->check(CLI::IsMember({"exact", "up_to_monomial"}));
  blocks_cmd->add_option("--seed", blocks.config.seed, "residue-field generator rank");
  blocks_cmd->add_option("--format", blocks.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  counterexample_options ce;
  auto* ce_cmd = app.add_subcommand("counterexample", "the q = 5, ell = 2 counterexample");
  ce_cmd->add_flag("--strict", ce.strict, "exit 4 if the quoted chain disagrees with the computation");
  ce_cmd->add_option("--seed", ce.seed, "residue-field generator rank");
  ce_cmd->add_option("--format", ce.format, "json | table")->check(CLI::IsMember({"json", "table"}));

  completeness_options demo;
  auto* demo_cmd = app.add_subcommand("demo-completeness", "character sums over a cyclic ell-group");
  demo_cmd->add_option("--ell", demo.ell, "prime");
  demo_cmd->add_option("--a", demo.a, "group order ell^a")->check(CLI::PositiveNumber);
  demo_cmd->add_option("--N", demo.n, "nilpotency order")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*gauss_cmd) return run_gauss(gauss);
    if (*gamma_cmd) return run_gamma(gamma);
    if (*blocks_cmd) return run_blocks_command(blocks);
    if (*ce_cmd) return run_counterexample_command(ce);
    if (*demo_cmd) return run_completeness(demo);
  } catch (const consistency_error& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return exit_consistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::length_error& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::logic_error& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::overflow_error& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}
