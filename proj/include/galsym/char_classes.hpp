#pragma once

#include <vector>

#include "galsym/graded.hpp"

namespace galsym {

/// A root of a split bundle: a degree-2 class and how many times it occurs.
struct Root {
  GradedClass klass;
  int multiplicity;

  bool operator==(const Root&) const = default;
};

/**
 * Bundle data given by its Chern/Stiefel-Whitney roots, a sum of line
 * bundles, kept mod 2. Root data is always read as normal data; mod 2 the tangent and
 * stable normal Kervaire-type classes agree.
 */
class RootData {
 public:
  RootData(SpaceModel space, std::vector<Root> roots);

  /// `copies` copies of the generator of CP^n (e.g. 2N+1 for the normal
  /// bundle of CP^{2N}).
  static RootData generator_copies(const SpaceModel& space, std::size_t generator, int copies);

  const SpaceModel& space() const { return space_; }
  const std::vector<Root>& roots() const { return roots_; }

  /// Whitney sum: concatenation of the root lists.
  RootData operator+(const RootData& other) const;

  bool operator==(const RootData&) const = default;

 private:
  SpaceModel space_;
  std::vector<Root> roots_;
};

/// Sum of multiplicity * root^i over Z/2, for odd i >= 1.
GradedClass power_sum(const RootData& roots, int i);

/// V^2 of CP^{2m+1} over Z/2 as sum_j C(2m+1-j, j) w^{2j}.
GradedClass wu_square_formula(int m);

/// V^2 of CP^{2m+1} obtained by solving Sq(v) = w(CP^{2m+1}) degree by
/// degree and squaring; does not use the binomial formula above.
GradedClass wu_square_oracle(int m);

/// Coefficients of x^{2n} in x/tanh(x) for n = 0..max_n.
std::vector<Rational> l_series(int max_n);

/// Total L-class of a product of projective spaces over Q:
/// prod_i (w_i / tanh w_i)^{N_i + 1}.
GradedClass l_class_cp(const SpaceModel& space);

}  // namespace galsym
