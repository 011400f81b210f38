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


// Acceptance checks: one PASS/FAIL line per criterion. argv[1], when given,
// is the modgamma executable used for the determinism check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "modgamma/explorer.hpp"

namespace {

using namespace modgamma;

struct criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> check;
};

bool gauss_pair_identity(std::string& note) {
  std::size_t checked = 0;
  for (auto [p, f] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    auto k = fq_field::build(p, f);
    const add_char psi(k);
    const u64 n = k->group_order();
    const bigint q = checked_pow(p, f, max_field_size);
    for (u64 e = 1; e < n; ++e) {
      const mult_char chi(k, static_cast<i64>(e));
      const auto prod = gauss_sum(chi, psi) * gauss_sum(chi.inverse(), psi);
      const bigint sign = e % 2 == 0 ? 1 : -1;  // chi(-1) = chi(g^(n/2)) = (-1)^e
      if (!(prod == prod.ring()->integer(sign * q))) {
        note = "failed at " + std::to_string(p) + "^" + std::to_string(f) + " e=" + std::to_string(e);
        return false;
      }
      ++checked;
    }
  }
  note = std::to_string(checked) + " characters";
  return true;
}

bool theta_gauss_square(std::string& note) {
  auto k = fq_field::build(5, 2);
  const auto psi_tilde = add_char(k, 1, 1).compose_trace(2);
  const auto tau = gauss_sum(mult_char(k, 8), psi_tilde);
  const auto sq = (tau * tau).as_integer();
  note = sq ? "tau^2 = " + sq->str() : "tau^2 not rational";
  return sq && *sq == 25;
}

bool frobenius_invariance(std::string& note) {
  auto k = fq_field::build(5, 2);
  const auto psi_tilde = add_char(k, 1, 1).compose_trace(2);
  for (i64 e = 0; e < 24; ++e) {
    const mult_char chi(k, e);
    if (!(gauss_sum(chi.compose_frobenius(1), psi_tilde) == gauss_sum(chi, psi_tilde))) {
      note = "failed at e=" + std::to_string(e);
      return false;
    }
  }
  note = "24 characters";
  return true;
}

cyc_int random_element(const cyc_ring_ptr& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<bigint> c(ring->degree());
  for (auto& x : c) x = coeff(rng);
  return ring->from_polynomial(std::move(c));
}

bool reduction_homomorphism(std::string& note) {
  std::mt19937_64 rng(20261018);
  std::size_t sums = 0;
  for (auto [mm, ell] : std::vector<std::pair<u64, u64>>{{120, 2}, {24, 5}, {80, 3}}) {
    const auto m = reduction_map::build(mm, ell);
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_element(m.source(), rng);
      const auto b = random_element(m.source(), rng);
      if (!(m(a + b) == m(a) + m(b)) || !(m(a * b) == m(a) * m(b))) {
        note = "homomorphism failed for M=" + std::to_string(mm);
        return false;
      }
    }
    const auto& k = *m.target()->residue_field();
    const u64 residue_order = k.group_order() / std::gcd<u64>(k.group_order(), k.log(m.root_image().residue()));
    const auto unipotent = m.root_image().pow(static_cast<i64>(m.prime_to_ell_part()));
    if (residue_order != m.prime_to_ell_part() || unipotent.residue() != 1 ||
        unit_order(unipotent) != m.target()->unipotent_exponent() ||
        !(m.root_image().pow(static_cast<i64>(mm)) == m.target()->one())) {
      note = "root image order check failed for M=" + std::to_string(mm);
      return false;
    }
    for (auto [p, f] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
      if (p == ell) continue;
      auto field = fq_field::build(p, f);
      if (mm % std::lcm(field->group_order(), p) != 0) continue;
      const add_char psi(field);
      const artin_add_char psi_r(psi, m);
      for (i64 e = 0; e < static_cast<i64>(field->group_order()); ++e) {
        const mult_char chi(field, e);
        if (!(m(gauss_sum(chi, psi, m.source())) == gauss_sum_artin(nil_char_lift::reduce(chi, m), psi_r))) {
          note = "reduce/sum mismatch M=" + std::to_string(mm) + " q=" + std::to_string(field->size());
          return false;
        }
        ++sums;
      }
    }
  }
  note = "3000 sample pairs, " + std::to_string(sums) + " Gauss sums";
  return true;
}

bool naive_counterexample(std::string& note) {
  const auto r = run_counterexample();
  bool unramified = true;
  const auto sc = scenario::build(scenario_config{});
  for (i64 e = 0; e < 4; ++e) unramified = unramified && tame_from_exponent(sc.context(1), e).is_unramified();
  note = "tau^2=" + r.tau_theta_squared.str() + ", " + std::to_string(r.naive_rows.size()) + " twists";
  return unramified && r.naive_all_equal && r.naive_reduce_to_one && r.tau_theta_squared == 25;
}

bool nilpotent_separation(std::string& note) {
  const auto r = run_counterexample();
  note = "witness " + r.witness + "; chain " + (r.chain_agrees ? "agrees" : "disagrees");
  return r.separated;
}

bool unramified_gl1(std::string& note) {
  for (auto [q, ell] : std::vector<std::pair<u64, u64>>{{5, 2}, {7, 3}, {11, 5}, {13, 3}}) {
    const u64 p = as_prime_power(q)->first;
    const auto ctx = make_artin_context(q, reduction_with_sqrt_q(std::lcm(q - 1, p), q, ell), 1, compare_mode::exact);
    const auto g = gamma_gl1(ctx, tame_char<artin_elem>{ctx.unit, ctx.unit});
    if (!gamma_eq(compare_mode::exact, g, gamma_factor<artin_elem>::monomial(-ctx.unit, 0))) {
      note = "q=" + std::to_string(q) + " gives " + g.to_string();
      return false;
    }
  }
  note = "4 pairs";
  return true;
}

bool completeness(std::string& note) {
  std::size_t cases = 0;
  for (u64 ell : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (unsigned a = 1; checked_pow(ell, a, max_field_size) <= 16; ++a) {
      const u64 g = checked_pow(ell, a, max_field_size);
      for (unsigned n = 1; n <= 20; ++n) {
        const auto r = completeness_demo(ell, a, n);
        const bool expect_nonzero = n >= g;
        bool ok = r.k_sum.is_zero() && (!r.lift_sum.is_zero()) == expect_nonzero;
        if (ok && expect_nonzero) ok = r.lift_sum.valuation() == g - 1;
        if (!ok) {
          note = "failed at ell=" + std::to_string(ell) + " a=" + std::to_string(a) + " N=" + std::to_string(n);
          return false;
        }
        ++cases;
      }
    }
  }
  const auto b0 = completeness_demo(2, 2, 2);
  const auto b1 = completeness_demo(2, 2, 4);
  note = std::to_string(cases) + " cases";
  return b0.lift_sum.is_zero() && b1.lift_sum.to_string() == "Y^3";
}

bool enumeration_counts(std::string& note) {
  auto count = [](const std::vector<inertial_support>& v, inertial_support::kind k) {
    return std::count_if(v.begin(), v.end(), [k](const auto& s) { return s.type == k; });
  };
  using k = inertial_support::kind;
  const auto s5 = enumerate_supports(5, 2);
  const auto s7 = enumerate_supports(7, 2);
  note = std::to_string(count(s5, k::cuspidal)) + "/" + std::to_string(count(s5, k::principal)) + "/" +
         std::to_string(count(s5, k::special)) + ", q=7 cuspidal " + std::to_string(count(s7, k::cuspidal));
  return count(s5, k::cuspidal) == 10 && count(s5, k::principal) == 10 && count(s5, k::special) == 4 &&
         count(s7, k::cuspidal) == 21;
}

std::string run_command(const std::string& cmd, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

bool determinism(const std::string& cli, std::string& note) {
  std::vector<std::vector<std::size_t>> sizes;
  for (unsigned seed : {0u, 1u}) {
    std::string first;
    std::string second;
    if (cli.empty()) {
      scenario_config cfg;
      cfg.seed = seed;
      const auto sc = scenario::build(cfg);
      first = report_json(sc, run_blocks(cfg)).dump(2);
      second = report_json(sc, run_blocks(cfg)).dump(2);
    } else {
      const std::string cmd = "\"" + cli + "\" blocks --q 5 --ell 2 --format json --seed " + std::to_string(seed);
      int s1 = 0;
      int s2 = 0;
      first = run_command(cmd, s1);
      second = run_command(cmd, s2);
      if (s1 != 0 || s2 != 0) {
        note = "cli exited with failure";
        return false;
      }
    }
    if (first != second) {
      note = "reports differ for seed " + std::to_string(seed);
      return false;
    }
    sizes.push_back(json::parse(first)["refined_block_sizes"].get<std::vector<std::size_t>>());
  }
  note = cli.empty() ? "in-process" : "via cli";
  return sizes[0] == sizes[1];
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<criterion> criteria{
      {1, "gauss pair identity", 10, gauss_pair_identity},
      {2, "theta gauss sum squared", 1, theta_gauss_square},
      {3, "frobenius invariance", 5, frobenius_invariance},
      {4, "reduction homomorphism", 10, reduction_homomorphism},
      {5, "naive counterexample", 5, naive_counterexample},
      {6, "nilpotent separation", 30, nilpotent_separation},
      {7, "unramified gl1 reduction", 5, unramified_gl1},
      {8, "completeness demo", 1, completeness},
      {9, "enumeration counts", 1, enumeration_counts},
      {10, "determinism and seed invariance", 60, [&](std::string& note) { return determinism(cli, note); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_seconds) {
      ok = false;
      note += "; over time budget";
    }
    failures += ok ? 0 : 1;
    std::printf("%s %d %s (%.2f s) %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, note.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
