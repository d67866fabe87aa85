#include "galsym/verify.hpp"

#include <functional>
#include <stdexcept>

#include "galsym/random.hpp"

namespace galsym {

namespace {

constexpr int kTwoAdicPrecision = 20;
constexpr int kOddPrecision = 12;

// Each trial returns an empty string on success, else a failure message.
using Trial = std::function<std::string(Rng&, int)>;

std::string group_laws_trial(Rng& rng, int) {
  for (std::uint64_t p : {3u, 5u}) {
    const SpaceModel space = random_space(rng, 4);
    const auto [x, s] = random_odd_pair(rng, space, p, kOddPrecision);
    const PadicUnit sigma = random_unit(rng, p, kOddPrecision);
    const PadicUnit tau = random_unit(rng, p, kOddPrecision);
    const std::string tag = "p=" + std::to_string(p) + " on " + space.label();

    const auto id = galois_odd(x, s, PadicUnit::one(p, kOddPrecision));
    if (!(id.manifold == x) || !(id.structure == s)) return tag + ": identity law fails";

    const auto once = galois_odd(x, s, sigma);
    const auto twice = galois_odd(once.manifold, once.structure, tau);
    const auto direct = galois_odd(x, s, sigma * tau);
    if (!(twice.manifold == direct.manifold) || !(twice.structure == direct.structure)) {
      return tag + ": composition law fails";
    }
    if (!validate_odd(x, s)) return tag + ": generated structure is invalid";
    if (!validate_odd(once.manifold, once.structure)) return tag + ": constraint not transported";
  }

  // Prime 2; the preset is only defined through f_5, i.e. m <= 14.
  const SpaceModel space = random_space(rng, 4);
  const auto [x, s] = random_two_pair(rng, space, kTwoAdicPrecision);
  const bool preset_ok = coefficients_needed(space.dimension() - 1) <= 3;
  const KervaireRule rule = kervaire_rule(preset_ok && rng.coin() ? KervaireMode::paper_preset
                                                                  : KervaireMode::constant_invariant);
  const PadicUnit sigma = random_unit(rng, 2, kTwoAdicPrecision);
  const PadicUnit tau = random_unit(rng, 2, kTwoAdicPrecision);
  const std::string tag = "p=2 on " + space.label();

  const auto id = galois_two(x, s, PadicUnit::one(2, kTwoAdicPrecision), rule);
  if (!(id.manifold == x) || !(id.structure == s)) return tag + ": identity law fails";

  const auto once = galois_two(x, s, sigma, rule);
  const auto twice = galois_two(once.manifold, once.structure, tau, rule);
  const auto direct = galois_two(x, s, sigma * tau, rule);
  if (!(twice.manifold == direct.manifold) || !(twice.structure == direct.structure)) {
    return tag + ": composition law fails";
  }
  return {};
}

std::string additivity_trial(Rng& rng, int) {
  const SpaceModel space = random_product(rng, 6);
  const RootData a = random_roots(rng, space, 4);
  const RootData b = random_roots(rng, space, 4);
  const int max_m = coefficients_needed(space.dimension()) - 1;
  std::vector<int> table;
  for (int m = 0; m <= max_m; ++m) table.push_back(rng.coin());
  const KervaireCoeffs coeffs = solve_coeffs(table_oracle(table), max_m);
  if (!(kervaire_class(coeffs, a + b) == kervaire_class(coeffs, a) + kervaire_class(coeffs, b))) {
    return "additivity fails on " + space.label();
  }
  return {};
}

std::string roundtrip_trial(Rng& rng, int) {
  const int max_m = rng.range(0, 8);
  std::vector<int> table;
  for (int m = 0; m <= max_m; ++m) table.push_back(rng.coin());
  const KervaireCoeffs coeffs = solve_coeffs(table_oracle(table), max_m);
  for (int m = 0; m <= max_m; ++m) {
    if (check_pairing(coeffs, m) != table[m]) {
      return "pairing round trip fails at m=" + std::to_string(m);
    }
  }
  return {};
}

std::string integrality_trial(Rng& rng, int) {
  const PadicUnit u = random_unit(rng, 2, kTwoAdicPrecision);
  const Integer one_minus = Integer(1) - unit_pow(u, -2).residue();
  if (one_minus % 8 != 0) return "(1 - u^-2) not divisible by 8 for u=" + u.residue().str();
  const SpaceModel space = random_space(rng, 4);
  const auto [x, s] = random_two_pair(rng, space, kTwoAdicPrecision);
  try {
    galois_two(x, s, u, kervaire_rule(KervaireMode::constant_invariant));
  } catch (const std::domain_error& e) {
    return e.what();
  }
  return {};
}

std::string wu_trial(Rng&, int index) {
  const int m = index % 11;
  if (!(wu_square_formula(m) == wu_square_oracle(m))) {
    return "Wu formula disagrees with oracle at m=" + std::to_string(m);
  }
  return {};
}

const std::vector<std::pair<std::string, Trial>>& suites() {
  static const std::vector<std::pair<std::string, Trial>> table{
      {"group-laws", group_laws_trial},
      {"additivity", additivity_trial},
      {"kervaire-roundtrip", roundtrip_trial},
      {"integrality", integrality_trial},
      {"wu", wu_trial},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, trial] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, int trials) {
  if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
  for (const auto& [name, trial] : suites()) {
    if (name != suite) continue;
    SuiteReport report;
    report.suite = suite;
    Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
      std::string failure;
      try {
        failure = trial(rng, i);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure.empty()) {
        ++report.passed;
      } else {
        ++report.failed;
        report.failures.push_back("trial " + std::to_string(i) + ": " + failure);
      }
    }
    return report;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace galsym
