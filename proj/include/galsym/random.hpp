#pragma once

#include <cstdint>
#include <random>

#include "galsym/structure.hpp"

namespace galsym {

/// Seeded generator with platform-independent draws (std distributions
/// are implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Integer in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  bool coin() { return (engine_() >> 17) & 1; }
  /// Residue in [0, modulus).
  Integer residue(const Integer& modulus);

 private:
  std::mt19937_64 engine_;
};

PadicUnit random_unit(Rng& rng, std::uint64_t prime, int precision);

/// CP^a or CP^a x CP^b with 1 <= a, b <= max_trunc.
SpaceModel random_space(Rng& rng, int max_trunc);
/// CP^a x CP^b with 1 <= a, b <= max_trunc.
SpaceModel random_product(Rng& rng, int max_trunc);

/// Random element with terms only in degrees d with d % modulus == residue
/// and lo <= d <= hi; roughly half the candidate monomials are populated.
GradedClass random_class(Rng& rng, const SpaceModel& space, const CoeffRing& ring, int residue,
                         int modulus, int lo, int hi);

/// Degrees 0 mod 4, constant term 1.
GradedClass random_unit_class(Rng& rng, const SpaceModel& space, const CoeffRing& ring);

/// Between 1 and max_roots random nonzero linear classes.
RootData random_roots(Rng& rng, const SpaceModel& space, int max_roots);

/// Odd-prime manifold over Z/p^k and a structure satisfying the beta
/// constraint (when 4 | m, phi's top coefficient is solved for).
ActionResult<FormalManifoldOdd, OddStructure> random_odd_pair(Rng& rng, const SpaceModel& space,
                                                              std::uint64_t prime, int precision);

/// 2-adic manifold with L over Z/2^k and a structure with l over Z/2^{k-3}.
ActionResult<FormalManifold2, TwoAdicStructure> random_two_pair(Rng& rng, const SpaceModel& space,
                                                                int precision);

}  // namespace galsym
