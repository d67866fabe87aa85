#include "galsym/kervaire.hpp"

#include <stdexcept>

namespace galsym {

const char* const kPaperPresetNote =
    "preset (f1,f3,f5)=(1,0,1) for sigma2 = +-3 mod 8 is taken as stated; reading the pairing "
    "equation with the constant right-hand side (2/sigma2) for every m instead forces "
    "(1,1,0) (on CP^3, V^2 = 1 so f3 = 1). Entries past f5 are not defined by the preset.";

std::string to_string(KervaireMode mode) {
  switch (mode) {
    case KervaireMode::paper_preset: return "paper-preset";
    case KervaireMode::constant_invariant: return "constant-invariant";
    case KervaireMode::custom_oracle: return "custom-oracle";
  }
  return "unknown";
}

KervaireMode parse_kervaire_mode(const std::string& text) {
  if (text == "paper-preset" || text == "preset") return KervaireMode::paper_preset;
  if (text == "constant-invariant" || text == "constant") return KervaireMode::constant_invariant;
  if (text == "custom-oracle" || text == "custom") return KervaireMode::custom_oracle;
  throw std::invalid_argument("unknown Kervaire mode: " + text);
}

InvariantOracle constant_oracle(int bit) {
  return [bit = bit & 1](int) { return bit; };
}

InvariantOracle table_oracle(std::vector<int> table) {
  return [table = std::move(table)](int m) {
    if (m < 0 || m >= static_cast<int>(table.size())) {
      throw std::out_of_range("invariant table has no entry for m = " + std::to_string(m));
    }
    return table[m] & 1;
  };
}

int KervaireCoeffs::at(int i) const {
  if (i < 1 || i % 2 == 0) throw std::invalid_argument("Kervaire coefficients have odd index");
  const std::size_t slot = static_cast<std::size_t>(i / 2);
  if (slot >= f.size()) {
    throw std::out_of_range("no Kervaire coefficient f_" + std::to_string(i) + " (have through f_" +
                            std::to_string(max_index()) + ")");
  }
  return f[slot];
}

int coefficients_needed(int max_degree) {
  if (max_degree < 2) return 0;
  return (max_degree / 2 + 1) / 2;
}

KervaireCoeffs solve_coeffs(const InvariantOracle& oracle, int max_m) {
  if (max_m < 0) throw std::invalid_argument("max_m must be non-negative");
  KervaireCoeffs out;
  out.mode = KervaireMode::custom_oracle;
  out.f.assign(max_m + 1, 0);
  for (int m = 0; m <= max_m; ++m) {
    int rhs = oracle(m) & 1;
    for (int j = 1; j <= m; ++j) {
      rhs ^= binom_mod2(2 * m + 1 - j, j) & out.f[m - j];
    }
    out.f[m] = rhs;
  }
  return out;
}

KervaireCoeffs constant_invariant_coeffs(const PadicUnit& sigma2, int max_m) {
  KervaireCoeffs out = solve_coeffs(constant_oracle(legendre_mod8(sigma2)), max_m);
  out.sigma2 = sigma2;
  out.mode = KervaireMode::constant_invariant;
  return out;
}

KervaireCoeffs paper_preset_coeffs(const PadicUnit& sigma2, int max_m) {
  if (max_m < 0) throw std::invalid_argument("max_m must be non-negative");
  KervaireCoeffs out;
  out.sigma2 = sigma2;
  out.mode = KervaireMode::paper_preset;
  if (legendre_mod8(sigma2) == 0) {
    out.f.assign(max_m + 1, 0);
    return out;
  }
  static const std::vector<int> preset{1, 0, 1};
  if (max_m >= static_cast<int>(preset.size())) {
    throw std::domain_error("preset Kervaire coefficients are only defined through f_5; f_" +
                            std::to_string(2 * max_m + 1) + " requested");
  }
  out.f.assign(preset.begin(), preset.begin() + max_m + 1);
  return out;
}

KervaireRule kervaire_rule(KervaireMode mode) {
  switch (mode) {
    case KervaireMode::paper_preset: return paper_preset_coeffs;
    case KervaireMode::constant_invariant: return constant_invariant_coeffs;
    case KervaireMode::custom_oracle: break;
  }
  throw std::invalid_argument("custom-oracle coefficients do not depend on a unit; pass them "
                              "explicitly");
}

GradedClass kervaire_class(const KervaireCoeffs& coeffs, const RootData& roots,
                           std::optional<int> max_degree) {
  const int top = max_degree.value_or(roots.space().dimension());
  const int needed = coefficients_needed(top);
  if (needed > static_cast<int>(coeffs.f.size())) {
    throw std::invalid_argument("Kervaire coefficients stop at f_" +
                                std::to_string(coeffs.max_index()) + " but degree " +
                                std::to_string(top) + " needs f_" + std::to_string(2 * needed - 1));
  }
  GradedClass k = GradedClass::zero(roots.space(), CoeffRing::z2());
  for (int slot = 0; slot < needed; ++slot) {
    if (coeffs.f[slot]) k = k + power_sum(roots, 2 * slot + 1);
  }
  return k.truncated_to(top);
}

int check_pairing(const KervaireCoeffs& coeffs, int m) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  const int n = 2 * m + 1;
  const int big = n + 1;
  const RootData normal = RootData::generator_copies(SpaceModel::cp(big), 0, big + 1);
  const GradedClass k = restrict(kervaire_class(coeffs, normal, 2 * n), SpaceModel::cp(n));
  const Rational value = pair_fundamental(k * wu_square_formula(m));
  return value == 0 ? 0 : 1;
}

}  // namespace galsym
