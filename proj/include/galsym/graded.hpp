#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galsym/arith.hpp"

namespace galsym {

/**
 * Coefficient ring of a graded class: the rationals, or Z/p^k.
 *
 * Ring elements are carried as Rational values. In Z/p^k they are always
 * integers in [0, p^k).
 */
class CoeffRing {
 public:
  static CoeffRing rationals() { return CoeffRing(); }
  static CoeffRing modular(std::uint64_t prime, int precision);
  static CoeffRing z2() { return modular(2, 1); }
  static CoeffRing z8() { return modular(2, 3); }
  /// Accepts "Q", "Z/8", "Z/2^20", "Z/3^12".
  static CoeffRing parse(const std::string& name);

  bool is_rational() const { return prime_ == 0; }
  std::uint64_t prime() const { return prime_; }
  int precision() const { return precision_; }
  const Integer& modulus() const { return modulus_; }

  /// Image of q in this ring; throws std::domain_error when q has a
  /// denominator divisible by the prime.
  Rational from_rational(const Rational& q) const;
  bool is_unit(const Rational& c) const;
  Rational inverse(const Rational& c) const;
  Rational add(const Rational& a, const Rational& b) const { return from_rational(a + b); }
  Rational mul(const Rational& a, const Rational& b) const { return from_rational(a * b); }

  /// "Q" or "Z/<modulus>".
  std::string name() const;

  bool operator==(const CoeffRing& other) const {
    return prime_ == other.prime_ && precision_ == other.precision_;
  }

 private:
  CoeffRing() = default;

  std::uint64_t prime_ = 0;
  int precision_ = 0;
  Integer modulus_ = 0;
};

struct Generator {
  std::string name;
  int trunc;
  bool operator==(const Generator&) const = default;
};

/// H^*(CP^{N_1} x ... x CP^{N_r}): one degree-2 generator per factor,
/// truncated above its N_i.
class SpaceModel {
 public:
  explicit SpaceModel(std::vector<Generator> gens);
  /// CP^n with generator "w".
  static SpaceModel cp(int n);
  /// CP^a x CP^b with generators "w1", "w2".
  static SpaceModel cp_product(int a, int b);

  const std::vector<Generator>& gens() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  int trunc(std::size_t i) const { return gens_[i].trunc; }
  /// Real dimension 2 * sum N_i, which is also the top cohomological degree.
  int dimension() const;
  std::vector<int> top_exponents() const;
  /// "CP^5" or "CP^2xCP^3".
  std::string label() const;

  /// True when `sub` has the same generator names with truncations <= ours.
  bool is_truncation(const SpaceModel& sub) const;

  bool operator==(const SpaceModel& other) const = default;

 private:
  std::vector<Generator> gens_;
};

using Exponents = std::vector<int>;

inline int cohomological_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += 2 * x;
  return d;
}

/**
 * Element of the truncated polynomial ring R[w_1..w_r]/(w_i^{N_i+1}).
 *
 * Terms are kept in a sorted map keyed by exponent vector; zero
 * coefficients and monomials beyond truncation are never stored.
 */
class GradedClass {
 public:
  using Terms = std::map<Exponents, Rational>;

  GradedClass(SpaceModel space, CoeffRing ring);
  GradedClass(SpaceModel space, CoeffRing ring, const Terms& terms);

  static GradedClass zero(const SpaceModel& space, const CoeffRing& ring) {
    return GradedClass(space, ring);
  }
  static GradedClass constant(const SpaceModel& space, const CoeffRing& ring,
                              const Rational& c);
  static GradedClass one(const SpaceModel& space, const CoeffRing& ring) {
    return constant(space, ring, 1);
  }
  static GradedClass monomial(const SpaceModel& space, const CoeffRing& ring,
                              const Exponents& exps, const Rational& c = 1);
  /// The generator w_i.
  static GradedClass generator(const SpaceModel& space, const CoeffRing& ring, std::size_t i);

  const SpaceModel& space() const { return space_; }
  const CoeffRing& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;
  bool is_zero() const { return terms_.empty(); }

  /// Component in cohomological degree `degree`.
  GradedClass component(int degree) const;
  GradedClass without_component(int degree) const;
  /// Sum of components with degree <= max_degree.
  GradedClass truncated_to(int max_degree) const;
  /// True when every term has degree congruent to `residue` mod `modulus`.
  bool degrees_congruent(int residue, int modulus) const;

  GradedClass operator+(const GradedClass& other) const;
  GradedClass operator-(const GradedClass& other) const;
  GradedClass operator-() const;
  GradedClass operator*(const GradedClass& other) const;
  GradedClass scaled(const Rational& c) const;

  bool operator==(const GradedClass& other) const = default;

 private:
  void require_compatible(const GradedClass& other) const;
  void add_term(const Exponents& exps, const Rational& c);

  SpaceModel space_;
  CoeffRing ring_;
  Terms terms_;
};

GradedClass ring_mul(const GradedClass& a, const GradedClass& b);

/// Two-sided inverse of a class whose constant term is a unit of its ring.
GradedClass ring_inverse(const GradedClass& a);

/// Coefficient of the top monomial, i.e. evaluation on the fundamental
/// class dual to w_1^{N_1}...w_r^{N_r}.
Rational pair_fundamental(const GradedClass& a);

/// Image under the surjection onto the cohomology of a smaller product.
GradedClass restrict(const GradedClass& a, const SpaceModel& sub);

/// Applies the canonical ring map to every coefficient. Supported: Q -> Z/p^k
/// (denominators prime to p), Z/p^k -> Z/p^j for j <= k, identity.
GradedClass coefficient_map(const GradedClass& a, const CoeffRing& target);

}  // namespace galsym
