#pragma once

#include <cstdint>
#include <map>
#include <variant>

#include "galsym/kervaire.hpp"

namespace galsym {

/// Cohomological Adams operation: multiplies the degree-2n part by sigma^n.
/// Rational input is first mapped to Z/p^k (k = sigma's precision); residues
/// mod p^j come back at precision min(j, k).
GradedClass adams_H(const PadicUnit& sigma, const GradedClass& a);

/**
 * p-adic formal manifold at an odd prime, recorded by the normalized
 * Pontryagin character ph(Delta_X)/U of its KO-orientation.
 *
 * delta_hat is over Q (denominators prime to p) or Z/p^k, lives in degrees
 * 0 mod 4 and has constant term 1.
 */
class FormalManifoldOdd {
 public:
  FormalManifoldOdd(std::uint64_t prime, GradedClass delta_hat);

  std::uint64_t prime() const { return prime_; }
  const SpaceModel& space() const { return delta_hat_.space(); }
  int dimension() const { return space().dimension(); }
  const GradedClass& delta_hat() const { return delta_hat_; }

  bool operator==(const FormalManifoldOdd&) const = default;

 private:
  std::uint64_t prime_;
  GradedClass delta_hat_;
};

/// 2-adic formal manifold: an integral lift L_X of the Z/8 class l~, over
/// Z/2^k with k >= 3, plus the root data of its normal fibration.
class FormalManifold2 {
 public:
  FormalManifold2(GradedClass l_genus, RootData normal_roots, bool kg_vanishes = true);

  const SpaceModel& space() const { return l_genus_.space(); }
  int dimension() const { return space().dimension(); }
  const GradedClass& l_genus() const { return l_genus_; }
  const RootData& normal_roots() const { return normal_roots_; }
  bool kg_vanishes() const { return true; }
  /// The Z/8 reduction that L_X lifts.
  GradedClass l_tilde() const { return coefficient_map(l_genus_, CoeffRing::z8()); }

  bool operator==(const FormalManifold2&) const = default;

 private:
  GradedClass l_genus_;
  RootData normal_roots_;
};

/// Odd-prime structure (phi, beta): phi by its Pontryagin character.
class OddStructure {
 public:
  OddStructure(GradedClass phi_char, PadicUnit beta);

  const GradedClass& phi_char() const { return phi_char_; }
  const PadicUnit& beta() const { return beta_; }
  std::uint64_t prime() const { return beta_.prime(); }

  bool operator==(const OddStructure&) const = default;

 private:
  GradedClass phi_char_;
  PadicUnit beta_;
};

/// 2-adic structure (l, k): l over Z/2^j in degrees 4k' (0 < 4k' < m),
/// k over Z/2 in degrees 4k'+2 < m. Degree-m classes are never stored.
class TwoAdicStructure {
 public:
  TwoAdicStructure(GradedClass l, GradedClass k);

  static TwoAdicStructure trivial(const SpaceModel& space, int l_precision);

  const GradedClass& l() const { return l_; }
  const GradedClass& k() const { return k_; }
  const SpaceModel& space() const { return l_.space(); }

  bool operator==(const TwoAdicStructure&) const = default;

 private:
  GradedClass l_;
  GradedClass k_;
};

template <class Manifold, class Structure>
struct ActionResult {
  Manifold manifold;
  Structure structure;
};

/// X^sigma: same space, delta_hat replaced by adams_H(sigma^{-1}, delta_hat).
FormalManifoldOdd galois_conjugate(const FormalManifoldOdd& x, const PadicUnit& sigma);
/// X^sigma at 2: L_X replaced by adams_H(sigma^{-1}, L_X).
FormalManifold2 galois_conjugate(const FormalManifold2& x, const PadicUnit& sigma2);

/// Checks <phi * D, [X]> = beta^{m/2} <D, [X]> modulo p^k when 4 | m; other
/// dimensions carry no constraint. Throws std::domain_error when a pairing has
/// a denominator divisible by p.
bool validate_odd(const FormalManifoldOdd& x, const OddStructure& s);

/// (phi, beta) -> (phi * D / psi^{sigma^{-1}} D, beta * sigma), together with
/// X^sigma.
ActionResult<FormalManifoldOdd, OddStructure> galois_odd(const FormalManifoldOdd& x,
                                                         const OddStructure& s,
                                                         const PadicUnit& sigma);

/**
 * Action of sigma2 on a 2-adic structure. l' solves
 *   (1 + 8 l') * psi^{sigma2^{-1}} L_X = (1 + 8 l) * L_X
 * and k' = k + k_X, where k_X is the Kervaire class of the normal roots
 * computed from `coeffs` (the coefficients belonging to sigma2^{-1}).
 *
 * With w = min(prec L_X, prec sigma2, prec l + 3), l' has precision w - 3
 * and X^sigma carries L at precision w. Requires w >= 4.
 */
ActionResult<FormalManifold2, TwoAdicStructure> galois_two(const FormalManifold2& x,
                                                           const TwoAdicStructure& s,
                                                           const PadicUnit& sigma2,
                                                           const KervaireCoeffs& coeffs);

/// galois_two with coefficients from `rule` evaluated at sigma2^{-1}.
ActionResult<FormalManifold2, TwoAdicStructure> galois_two(const FormalManifold2& x,
                                                           const TwoAdicStructure& s,
                                                           const PadicUnit& sigma2,
                                                           const KervaireRule& rule);

using PrimeManifold = std::variant<FormalManifoldOdd, FormalManifold2>;
using PrimeStructure = std::variant<OddStructure, TwoAdicStructure>;

/// Formal manifold data at finitely many primes over one space model.
class EtaleManifold {
 public:
  EtaleManifold(SpaceModel space, std::map<std::uint64_t, PrimeManifold> components);

  const SpaceModel& space() const { return space_; }
  const std::map<std::uint64_t, PrimeManifold>& components() const { return components_; }
  bool operator==(const EtaleManifold&) const = default;

 private:
  SpaceModel space_;
  std::map<std::uint64_t, PrimeManifold> components_;
};

/// One structure per prime: TwoAdicStructure at 2, OddStructure elsewhere.
class EtaleStructure {
 public:
  explicit EtaleStructure(std::map<std::uint64_t, PrimeStructure> components);

  const std::map<std::uint64_t, PrimeStructure>& components() const { return components_; }
  bool operator==(const EtaleStructure&) const = default;

 private:
  std::map<std::uint64_t, PrimeStructure> components_;
};

/// Acts prime by prime; primes where sigma has no component are left alone.
ActionResult<EtaleManifold, EtaleStructure> galois_etale(const EtaleManifold& x,
                                                         const EtaleStructure& s,
                                                         const AdelicUnit& sigma,
                                                         const KervaireRule& rule);

}  // namespace galsym
