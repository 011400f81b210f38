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

/**
 * @file explorer.hpp
 * @brief Level-zero GL(2) supports, twist menus, gamma fingerprints and
 * gamma-factor ell-blocks, plus the q = 5, ell = 2 counterexample.
 */

#ifndef MODGAMMA_EXPLORER_HPP
#define MODGAMMA_EXPLORER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "modgamma/gamma.hpp"

namespace modgamma {

inline constexpr int report_schema_version = 1;

/// Cuspidal orbits, then principal pairs, then special classes, each sorted
/// by exponent.
inline std::vector<inertial_support> enumerate_supports(u64 q, u64 ell) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (!is_prime(ell)) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not prime");
  if (pp->first == ell) throw std::invalid_argument("ell must differ from the residue characteristic");
  if (q * q > max_field_size) throw size_error("q^2 exceeds the finite-field size guard");
  std::vector<inertial_support> out;
  const u64 n = q * q - 1;
  for (u64 e = 0; e < n; ++e) {
    const u64 e1 = mul_mod(e, q, n);
    if (e1 != e && e < e1) out.push_back(inertial_support::cuspidal(q, static_cast<i64>(e)));
  }
  for (u64 a = 0; a + 1 < q; ++a)
    for (u64 b = a; b + 1 < q; ++b) out.push_back(inertial_support::principal(q, static_cast<i64>(a), static_cast<i64>(b)));
  for (u64 e = 0; e + 1 < q; ++e) out.push_back(inertial_support::special(q, static_cast<i64>(e)));
  return out;
}

/// A twisting character of F_q^x: residue exponent r (prime-to-ell order),
/// times (1 + Y)^unipotent_power, valued in F_{ell^d}[Y]/(Y^depth).
struct twist_entry {
  unsigned depth;
  u64 residue_exponent;
  u64 unipotent_power;
  u64 unipotent_order;

  bool is_naive() const { return depth == 1; }
  std::string label() const {
    std::ostringstream os;
    os << "N=" << depth << ",r=" << residue_exponent << ",u=(1+Y)^" << unipotent_power << ",ord(u)=" << unipotent_order;
    return os.str();
  }
  friend bool operator==(const twist_entry&, const twist_entry&) = default;
};

struct twist_menu {
  u64 q;
  u64 ell;
  unsigned requested_depth;
  unsigned depth;
  std::vector<twist_entry> entries;

  std::size_t naive_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.is_naive(); }));
  }
};

/// Residue exponents are multiples of the ell-part of q - 1 (characters of
/// prime-to-ell order). Nilpotent entries at depth N carry unipotent parts of
/// order ell^j with ell^j dividing q - 1 and ell^j <= ell^ceil(log_ell N).
/// Ordered by (depth, residue exponent, unipotent order).
inline twist_menu build_twist_menu(u64 q, u64 ell, unsigned depth, unsigned requested_depth = 0) {
  if (depth == 0) throw std::invalid_argument("menu depth must be positive");
  twist_menu menu{q, ell, requested_depth == 0 ? depth : requested_depth, depth, {}};
  const prime_part split = split_prime_part(q - 1, ell);
  std::vector<u64> residues;
  for (u64 r = 0; r + 1 < q; r += split.power) residues.push_back(r);
  for (u64 r : residues) menu.entries.push_back({1, r, 0, 1});
  for (unsigned n = 2; n <= depth; ++n) {
    const u64 c = ceil_log(ell, n);
    for (u64 r : residues) {
      u64 order = ell;
      for (u64 j = 1; j <= c && j <= split.exponent; ++j, order *= ell) {
        const u64 power = checked_pow(ell, static_cast<unsigned>(c - j), ~u64{0});
        menu.entries.push_back({n, r, power, order});
      }
    }
  }
  return menu;
}

struct scenario_config {
  u64 q = 5;
  u64 ell = 2;
  unsigned depth = 4;
  compare_mode mode = compare_mode::up_to_monomial;
  unsigned seed = 0;
};

using artin_gamma = gamma_factor<artin_elem>;

struct fingerprint {
  inertial_support support;
  std::vector<artin_gamma> values;
};

/// Reduction data and one gamma context per truncation depth.
class scenario {
 public:
  static scenario build(const scenario_config& config) {
    const auto pp = as_prime_power(config.q);
    if (!pp) throw std::invalid_argument("q = " + std::to_string(config.q) + " is not a prime power");
    if (!is_prime(config.ell)) throw std::invalid_argument("ell = " + std::to_string(config.ell) + " is not prime");
    if (pp->first == config.ell) throw std::invalid_argument("ell must differ from the residue characteristic");
    if (config.depth == 0) throw std::invalid_argument("depth must be positive");
    auto map = reduction_with_sqrt_q(scenario_order(config.q), config.q, config.ell, config.seed);
    const unsigned depth = std::min(config.depth, map.target()->nilpotency());
    std::vector<gamma_context<artin_elem>> contexts;
    for (unsigned n = 1; n <= depth; ++n) contexts.push_back(make_artin_context(config.q, map, n, config.mode));
    auto menu = build_twist_menu(config.q, config.ell, depth, config.depth);
    return scenario(config, std::move(map), std::move(contexts), std::move(menu));
  }

  const scenario_config& config() const { return config_; }
  const reduction_map& map() const { return map_; }
  const twist_menu& menu() const { return menu_; }
  const gamma_context<artin_elem>& context(unsigned depth) const { return contexts_.at(depth - 1); }

  /// The twisting character of a menu entry, with chi(uniformizer) = 1.
  tame_char<artin_elem> twist(const twist_entry& entry) const {
    const auto& ctx = context(entry.depth);
    const artin_elem y = ctx.unit.alg()->y();
    const artin_elem u = (ctx.unit + y).pow(static_cast<i64>(entry.unipotent_power));
    const artin_elem residue = ctx.root_of_unity(config_.q - 1, static_cast<i64>(entry.residue_exponent));
    if (!residue.is_nilpotent_free()) throw consistency_error("menu residue value has a unipotent component");
    return {residue * (entry.unipotent_power == 0 ? ctx.unit : u), ctx.unit};
  }

  artin_gamma gamma(const inertial_support& support, const twist_entry& entry) const {
    return gamma_of_support(context(entry.depth), support, twist(entry));
  }

  fingerprint fingerprint_of(const inertial_support& support) const {
    fingerprint fp{support, {}};
    fp.values.reserve(menu_.entries.size());
    for (const auto& entry : menu_.entries) fp.values.push_back(gamma(support, entry));
    return fp;
  }

 private:
  scenario(scenario_config config, reduction_map map, std::vector<gamma_context<artin_elem>> contexts, twist_menu menu)
      : config_(config), map_(std::move(map)), contexts_(std::move(contexts)), menu_(std::move(menu)) {}

  scenario_config config_;
  reduction_map map_;
  std::vector<gamma_context<artin_elem>> contexts_;
  twist_menu menu_;
};

/// First menu index (among the selected ones) on which two fingerprints
/// differ, or -1.
inline long first_difference(const fingerprint& a, const fingerprint& b, const twist_menu& menu, compare_mode mode,
                             bool naive_only) {
  for (std::size_t i = 0; i < menu.entries.size(); ++i) {
    if (naive_only && !menu.entries[i].is_naive()) continue;
    if (!gamma_eq(mode, a.values[i], b.values[i])) return static_cast<long>(i);
  }
  return -1;
}

/// Equivalence classes of indices; classes ordered by smallest member.
inline std::vector<std::vector<std::size_t>> partition_by(const std::vector<fingerprint>& fps, const twist_menu& menu,
                                                          compare_mode mode, bool naive_only) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (first_difference(fps[cls.front()], fps[i], menu, mode, naive_only) < 0) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

struct separation_witness {
  std::size_t first;
  std::size_t second;
  std::size_t entry;
};

struct block_report {
  scenario_config config;
  twist_menu menu;
  std::vector<inertial_support> supports;
  std::vector<fingerprint> fingerprints;
  std::vector<std::vector<std::size_t>> naive_blocks;
  std::vector<std::vector<std::size_t>> refined_blocks;
  std::vector<separation_witness> witnesses;

  static std::vector<std::size_t> size_multiset(const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<std::size_t> sizes;
    for (const auto& b : blocks) sizes.push_back(b.size());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
  }
  std::size_t block_of(const std::vector<std::vector<std::size_t>>& blocks, std::size_t i) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (std::find(blocks[b].begin(), blocks[b].end(), i) != blocks[b].end()) return b;
    throw std::out_of_range("support index not in any block");
  }
};

/// Throws consistency_error unless every refined block sits inside one naive block.
inline void check_refinement(const block_report& r) {
  for (const auto& cls : r.refined_blocks) {
    const std::size_t b = r.block_of(r.naive_blocks, cls.front());
    for (std::size_t i : cls)
      if (r.block_of(r.naive_blocks, i) != b) throw consistency_error("refined blocks do not refine naive blocks");
  }
}

inline block_report partition_blocks(const scenario& sc, std::vector<fingerprint> fps) {
  block_report r{sc.config(), sc.menu(), {}, std::move(fps), {}, {}, {}};
  for (const auto& fp : r.fingerprints) r.supports.push_back(fp.support);
  const compare_mode mode = sc.config().mode;
  r.naive_blocks = partition_by(r.fingerprints, r.menu, mode, true);
  r.refined_blocks = partition_by(r.fingerprints, r.menu, mode, false);
  check_refinement(r);
  for (const auto& cls : r.naive_blocks)
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        const long k = first_difference(r.fingerprints[cls[a]], r.fingerprints[cls[b]], r.menu, mode, false);
        if (k >= 0) r.witnesses.push_back({cls[a], cls[b], static_cast<std::size_t>(k)});
      }
  return r;
}

inline block_report run_blocks(const scenario_config& config) {
  const auto sc = scenario::build(config);
  std::vector<fingerprint> fps;
  for (const auto& s : enumerate_supports(config.q, config.ell)) fps.push_back(sc.fingerprint_of(s));
  return partition_blocks(sc, std::move(fps));
}

// ---------------------------------------------------------------------------
// Serialization

using json = nlohmann::ordered_json;

inline json to_json(const artin_elem& x) { return x.coefficient_strings(); }

template <coefficient_ring E>
json to_json(const laurent_poly<E>& p) {
  json out = json::object();
  for (const auto& [k, c] : p.terms()) out[std::to_string(k)] = to_json(c);
  return out;
}

inline json to_json(const cyc_local& x) {
  json out = json::object();
  out["numerator"] = x.numerator().to_string();
  out["p_power"] = x.p_power();
  return out;
}

template <coefficient_ring E>
json to_json(const laurent_rational<E>& g) {
  return json{{"num", to_json(g.numerator())}, {"den", to_json(g.denominator())}};
}

/// "t^4 + t + 1" style rendering of the residue field's modulus.
inline std::string modulus_string(const fq_field& k) {
  const auto& m = k.modulus();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || m[i] != 1) os << m[i];
    if (i > 0) os << (m[i] != 1 ? "*t" : "t");
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

inline json convention_block(const scenario& sc) {
  const auto& k = *sc.map().target()->residue_field();
  json c = json::object();
  c["gl1_tame_ramified"] = "s^-1 * tau(chi^-1, psi) * chi(uniformizer)^-1 * X^-1";
  c["gl1_unramified"] = "(c^-1 X^-1 - s^-1) / (1 - c^-1 s^-1 X^-1), c = chi(uniformizer)";
  c["gl2_cuspidal"] = "-q * tau((chi_E theta)^-1, psi~) * chi(uniformizer)^-2 * X^-1";
  c["gl2_special"] = "gamma1(chi)(s^-1 X) * gamma1(chi)(s X)";
  c["gl2_principal"] = "gamma1(chi1 chi) * gamma1(chi2 chi)";
  c["sqrt_q"] = "square root of q in the residue field via discrete-log halving";
  c["uniformizer_in_fingerprints"] = "chi(uniformizer) = 1";
  c["additive_character"] = "psi(x) = zeta_p^Tr(x); psi~ = psi o Tr_{q^2/q}";
  c["comparison"] = to_string(sc.config().mode);
  c["residue_field"] = "F_" + std::to_string(k.size());
  c["residue_modulus"] = modulus_string(k);
  c["residue_generator"] = k.format(k.exp(1));
  c["generator_seed"] = sc.config().seed;
  c["root_image"] = sc.map().root_image().to_string();
  c["cyclotomic_order"] = sc.map().order();
  return c;
}

inline json menu_json(const twist_menu& menu) {
  json out = json::array();
  for (std::size_t i = 0; i < menu.entries.size(); ++i) {
    const auto& e = menu.entries[i];
    out.push_back({{"index", i},
                   {"depth", e.depth},
                   {"residue_exponent", e.residue_exponent},
                   {"unipotent_power", e.unipotent_power},
                   {"unipotent_order", e.unipotent_order}});
  }
  return out;
}

inline json classes_json(const std::vector<std::vector<std::size_t>>& blocks,
                         const std::vector<inertial_support>& supports) {
  json out = json::array();
  for (const auto& cls : blocks) {
    json labels = json::array();
    for (std::size_t i : cls) labels.push_back(supports[i].label());
    out.push_back(labels);
  }
  return out;
}

inline json report_json(const scenario& sc, const block_report& r) {
  json out = json::object();
  out["schema_version"] = report_schema_version;
  out["report"] = "blocks";
  out["convention"] = convention_block(sc);
  out["q"] = r.config.q;
  out["ell"] = r.config.ell;
  out["requested_depth"] = r.menu.requested_depth;
  out["depth"] = r.menu.depth;
  out["menu"] = menu_json(r.menu);
  json supports = json::array();
  for (std::size_t i = 0; i < r.supports.size(); ++i)
    supports.push_back({{"label", r.supports[i].label()},
                        {"kind", r.supports[i].kind_name()},
                        {"naive_block", r.block_of(r.naive_blocks, i)},
                        {"refined_block", r.block_of(r.refined_blocks, i)}});
  out["supports"] = supports;
  out["naive_blocks"] = classes_json(r.naive_blocks, r.supports);
  out["refined_blocks"] = classes_json(r.refined_blocks, r.supports);
  out["naive_block_sizes"] = block_report::size_multiset(r.naive_blocks);
  out["refined_block_sizes"] = block_report::size_multiset(r.refined_blocks);
  json w = json::array();
  for (const auto& s : r.witnesses)
    w.push_back({{"first", r.supports[s.first].label()},
                 {"second", r.supports[s.second].label()},
                 {"menu_entry", s.entry},
                 {"twist", r.menu.entries[s.entry].label()}});
  out["separation_witnesses"] = w;
  return out;
}

inline std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

/// One row per (support, twist).
inline std::string report_csv(const block_report& r) {
  std::ostringstream os;
  os << "support,kind,naive_block,refined_block,menu_entry,depth,residue_exponent,unipotent_order,gamma\n";
  for (std::size_t i = 0; i < r.fingerprints.size(); ++i) {
    const auto& fp = r.fingerprints[i];
    for (std::size_t k = 0; k < r.menu.entries.size(); ++k) {
      const auto& e = r.menu.entries[k];
      os << fp.support.label() << ',' << fp.support.kind_name() << ',' << r.block_of(r.naive_blocks, i) << ','
         << r.block_of(r.refined_blocks, i) << ',' << k << ',' << e.depth << ',' << e.residue_exponent << ','
         << e.unipotent_order << ',' << csv_escape(fp.values[k].simplified().to_string()) << '\n';
    }
  }
  return os.str();
}

inline std::string report_table(const block_report& r) {
  std::ostringstream os;
  os << "q=" << r.config.q << " ell=" << r.config.ell << " depth=" << r.menu.depth << " mode=" << to_string(r.config.mode)
     << " seed=" << r.config.seed << '\n';
  os << "menu entries: " << r.menu.entries.size() << " (" << r.menu.naive_count() << " residue-valued)\n";
  os << "supports: " << r.supports.size() << '\n';
  auto print = [&](const char* title, const std::vector<std::vector<std::size_t>>& blocks) {
    os << title << " (" << blocks.size() << "):\n";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      os << "  [" << b << "]";
      for (std::size_t i : blocks[b]) os << ' ' << r.supports[i].label();
      os << '\n';
    }
  };
  print("naive blocks", r.naive_blocks);
  print("refined blocks", r.refined_blocks);
  os << "separation witnesses: " << r.witnesses.size() << '\n';
  constexpr std::size_t shown = 20;
  for (std::size_t i = 0; i < r.witnesses.size() && i < shown; ++i) {
    const auto& w = r.witnesses[i];
    os << "  " << r.supports[w.first].label() << " / " << r.supports[w.second].label() << " by "
       << r.menu.entries[w.entry].label() << '\n';
  }
  if (r.witnesses.size() > shown) os << "  ... " << r.witnesses.size() - shown << " more\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// The q = 5, ell = 2 counterexample

struct counterexample_row {
  std::string twist;
  artin_gamma cuspidal;
  artin_gamma special;
  bool equal_exact;
  bool equal_up_to_monomial;
};

struct counterexample_report {
  u64 q = 5;
  u64 ell = 2;
  u64 theta_exponent = 8;
  bigint tau_theta_squared;
  std::string char0_cuspidal;
  std::vector<counterexample_row> naive_rows;
  bool naive_all_equal = false;
  bool naive_reduce_to_one = false;
  std::vector<counterexample_row> nilpotent_rows;
  bool separated = false;
  std::string witness;
  std::string chain_cuspidal_squared;
  std::string chain_special;
  std::string chain_zeta_squared;
  bool chain_cuspidal_matches_zeta_squared = false;
  bool chain_special_matches_zeta_squared = false;
  bool chain_agrees = false;
  json convention;
};

inline counterexample_report run_counterexample(unsigned seed = 0) {
  counterexample_report rep;
  const u64 q = rep.q;
  const auto cusp = inertial_support::cuspidal(q, static_cast<i64>(rep.theta_exponent));
  const auto sp = inertial_support::special(q, 0);

  // tau(theta, psi~)^2 in Z[zeta].
  auto top = fq_field::build(5, 2);
  const mult_char theta(top, static_cast<i64>(rep.theta_exponent));
  const add_char psi_tilde = add_char(top, 1, 1).compose_trace(2);
  const cyc_int tau = gauss_sum(theta, psi_tilde);
  const auto sq = (tau * tau).as_integer();
  if (!sq) throw consistency_error("tau(theta)^2 is not a rational integer");
  rep.tau_theta_squared = *sq;
  const auto c0 = make_char0_context(q);
  rep.char0_cuspidal = gamma_cuspidal_twist(c0, rep.theta_exponent, tame_from_exponent(c0, 0)).to_string();

  scenario_config config;
  config.q = q;
  config.ell = rep.ell;
  config.depth = 4;
  config.seed = seed;
  const auto sc = scenario::build(config);
  rep.convention = convention_block(sc);

  // Every character of F_5^x has 2-power order, so all residue-valued
  // twists reduce to the trivial one; evaluate each exponent anyway.
  const auto& k_ctx = sc.context(1);
  const auto one_gamma = artin_gamma::monomial(k_ctx.unit, 0);
  rep.naive_all_equal = true;
  rep.naive_reduce_to_one = true;
  for (i64 e = 0; e + 1 < static_cast<i64>(q); ++e) {
    const auto chi = tame_from_exponent(k_ctx, e);
    auto a = gamma_of_support(k_ctx, cusp, chi);
    auto b = gamma_of_support(k_ctx, sp, chi);
    counterexample_row row{"chi^" + std::to_string(e), a, b, gamma_eq(compare_mode::exact, a, b),
                           gamma_eq(compare_mode::up_to_monomial, a, b)};
    rep.naive_all_equal = rep.naive_all_equal && row.equal_up_to_monomial;
    rep.naive_reduce_to_one = rep.naive_reduce_to_one && gamma_eq(compare_mode::up_to_monomial, a, one_gamma) &&
                              gamma_eq(compare_mode::up_to_monomial, b, one_gamma);
    rep.naive_rows.push_back(std::move(row));
  }

  for (const auto& entry : sc.menu().entries) {
    if (entry.is_naive()) continue;
    auto a = sc.gamma(cusp, entry);
    auto b = sc.gamma(sp, entry);
    counterexample_row row{entry.label(), a, b, gamma_eq(compare_mode::exact, a, b),
                           gamma_eq(compare_mode::up_to_monomial, a, b)};
    if (!row.equal_exact && !row.equal_up_to_monomial && !rep.separated) {
      rep.separated = true;
      rep.witness = entry.label();
    }
    rep.nilpotent_rows.push_back(std::move(row));
  }

  // The chain for the lift with value zeta = 1 + Y on the generator of F_5^x.
  const auto& ctx = sc.context(4);
  const artin_elem zeta = ctx.unit + ctx.unit.alg()->y();
  const tame_char<artin_elem> lift{zeta, ctx.unit};
  const auto g_cusp = gamma_of_support(ctx, cusp, lift);
  const auto g_cusp_sq = g_cusp * g_cusp;
  const auto g_sp = gamma_of_support(ctx, sp, lift);
  const auto zeta_sq = artin_gamma::monomial(zeta * zeta, 0);
  rep.chain_cuspidal_squared = g_cusp_sq.simplified().to_string();
  rep.chain_special = g_sp.simplified().to_string();
  rep.chain_zeta_squared = zeta_sq.to_string();
  rep.chain_cuspidal_matches_zeta_squared = gamma_eq(compare_mode::up_to_monomial, g_cusp_sq, zeta_sq);
  rep.chain_special_matches_zeta_squared = gamma_eq(compare_mode::up_to_monomial, g_sp, zeta_sq);
  rep.chain_agrees = rep.chain_cuspidal_matches_zeta_squared && rep.chain_special_matches_zeta_squared;
  return rep;
}

inline json counterexample_json(const counterexample_report& r) {
  auto rows = [](const std::vector<counterexample_row>& v) {
    json out = json::array();
    for (const auto& row : v)
      out.push_back({{"twist", row.twist},
                     {"cuspidal", row.cuspidal.simplified().to_string()},
                     {"special", row.special.simplified().to_string()},
                     {"equal_exact", row.equal_exact},
                     {"equal_up_to_monomial", row.equal_up_to_monomial}});
    return out;
  };
  json out = json::object();
  out["schema_version"] = report_schema_version;
  out["report"] = "counterexample";
  out["convention"] = r.convention;
  out["q"] = r.q;
  out["ell"] = r.ell;
  out["theta_exponent"] = r.theta_exponent;
  out["tau_theta_squared"] = r.tau_theta_squared.str();
  out["char0_cuspidal_gamma"] = r.char0_cuspidal;
  out["naive_table"] = rows(r.naive_rows);
  out["naive_all_equal"] = r.naive_all_equal;
  out["naive_reduce_to_one"] = r.naive_reduce_to_one;
  out["nilpotent_table"] = rows(r.nilpotent_rows);
  out["separated"] = r.separated;
  out["separation_witness"] = r.witness;
  out["chain"] = {{"cuspidal_squared", r.chain_cuspidal_squared},
                  {"special", r.chain_special},
                  {"zeta_squared", r.chain_zeta_squared},
                  {"cuspidal_squared_matches_zeta_squared", r.chain_cuspidal_matches_zeta_squared},
                  {"special_matches_zeta_squared", r.chain_special_matches_zeta_squared},
                  {"agree", r.chain_agrees}};
  return out;
}

}  // namespace modgamma

#endif  // MODGAMMA_EXPLORER_HPP
