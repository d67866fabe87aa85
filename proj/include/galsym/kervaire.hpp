#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galsym/char_classes.hpp"

namespace galsym {

/// Where a coefficient vector came from.
enum class KervaireMode { paper_preset, constant_invariant, custom_oracle };

std::string to_string(KervaireMode mode);
KervaireMode parse_kervaire_mode(const std::string& text);

/// Kervaire invariant of the degree-sigma self map over CP^{2m+1}, as a bit.
using InvariantOracle = std::function<int(int m)>;

InvariantOracle constant_oracle(int bit);
/// table[m] is the invariant over CP^{2m+1}; querying past the end throws.
InvariantOracle table_oracle(std::vector<int> table);

/// Explanation attached to the preset (1, 0, 1).
extern const char* const kPaperPresetNote;

/**
 * Coefficients f_1, f_3, ..., f_{2M+1} of the Kervaire class written in odd
 * power sums of the roots. Only odd indices exist.
 */
struct KervaireCoeffs {
  std::optional<PadicUnit> sigma2;
  std::vector<int> f;
  KervaireMode mode = KervaireMode::custom_oracle;

  /// f_i for odd i; throws std::out_of_range past the stored length.
  int at(int i) const;
  /// Largest stored odd index, or -1 when empty.
  int max_index() const { return 2 * static_cast<int>(f.size()) - 1; }
};

/// Number of odd i with 2i <= max_degree.
int coefficients_needed(int max_degree);

/// Forward substitution in the unitriangular system
/// sum_{j=0}^{m} C(2m+1-j, j) f_{2m+1-2j} = oracle(m), m = 0..max_m.
KervaireCoeffs solve_coeffs(const InvariantOracle& oracle, int max_m);

/// Solution of the system with oracle(m) = (2/sigma2) for every m.
KervaireCoeffs constant_invariant_coeffs(const PadicUnit& sigma2, int max_m);

/// All zeros for sigma2 = +-1 mod 8; (1, 0, 1) for sigma2 = +-3 mod 8, which
/// is only defined for max_m <= 2.
KervaireCoeffs paper_preset_coeffs(const PadicUnit& sigma2, int max_m);

/// Produces the coefficients of k^{u} for a 2-adic unit u.
using KervaireRule = std::function<KervaireCoeffs(const PadicUnit& u, int max_m)>;
KervaireRule kervaire_rule(KervaireMode mode);

/// sum_i f_i * power_sum(roots, i) through `max_degree` (default: the top
/// degree of the space). Lands in degrees 2 mod 4 only.
GradedClass kervaire_class(const KervaireCoeffs& coeffs, const RootData& roots,
                           std::optional<int> max_degree = std::nullopt);

/// <k|_{CP^{2m+1}} * V^2, [CP^{2m+1}]>, with k computed on the normal data
/// (2N+1) w of CP^{2N}, N = m + 1.
int check_pairing(const KervaireCoeffs& coeffs, int m);

}  // namespace galsym
