#include "galsym/char_classes.hpp"

#include <stdexcept>

namespace galsym {

RootData::RootData(SpaceModel space, std::vector<Root> roots)
    : space_(std::move(space)), roots_(std::move(roots)) {
  for (auto& r : roots_) {
    if (!(r.klass.space() == space_)) {
      throw std::invalid_argument("root lives on " + r.klass.space().label() + ", expected " +
                                  space_.label());
    }
    if (r.multiplicity < 1) throw std::invalid_argument("root multiplicity must be >= 1");
    if (!(r.klass.component(2) == r.klass)) {
      throw std::invalid_argument("roots must be homogeneous of degree 2");
    }
    r.klass = coefficient_map(r.klass, CoeffRing::z2());
  }
}

RootData RootData::generator_copies(const SpaceModel& space, std::size_t generator,
                                    int copies) {
  return RootData(space, {{GradedClass::generator(space, CoeffRing::z2(), generator), copies}});
}

RootData RootData::operator+(const RootData& other) const {
  if (!(space_ == other.space_)) {
    throw std::invalid_argument("root data on different spaces");
  }
  std::vector<Root> all = roots_;
  all.insert(all.end(), other.roots_.begin(), other.roots_.end());
  return RootData(space_, std::move(all));
}

GradedClass power_sum(const RootData& roots, int i) {
  if (i < 1 || i % 2 == 0) {
    throw std::invalid_argument("power sums are taken for odd i >= 1, got " + std::to_string(i));
  }
  const CoeffRing z2 = CoeffRing::z2();
  GradedClass sum = GradedClass::zero(roots.space(), z2);
  for (const auto& r : roots.roots()) {
    if (r.multiplicity % 2 == 0) continue;
    const GradedClass& x = r.klass;
    GradedClass p = x;
    for (int k = 1; k < i && !p.is_zero(); ++k) p = p * x;
    sum = sum + p;
  }
  return sum;
}

GradedClass wu_square_formula(int m) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  const SpaceModel space = SpaceModel::cp(2 * m + 1);
  GradedClass v2 = GradedClass::zero(space, CoeffRing::z2());
  for (int j = 0; j <= m; ++j) {
    if (binom_mod2(2 * m + 1 - j, j)) {
      v2 = v2 + GradedClass::monomial(space, CoeffRing::z2(), {2 * j});
    }
  }
  return v2;
}

GradedClass wu_square_oracle(int m) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  const int n = 2 * m + 1;
  const SpaceModel space = SpaceModel::cp(n);
  const CoeffRing z2 = CoeffRing::z2();
  const GradedClass one = GradedClass::one(space, z2);
  const GradedClass w = GradedClass::generator(space, z2, 0);
  const GradedClass one_plus_w = one + w;

  auto power = [&](const GradedClass& x, int e) {
    GradedClass r = one;
    for (int k = 0; k < e; ++k) r = r * x;
    return r;
  };

  // Total Steenrod square of w^a is w^a (1 + w)^a.
  std::vector<GradedClass> sq_of_power;
  for (int a = 0; a <= n; ++a) sq_of_power.push_back(power(w, a) * power(one_plus_w, a));

  const GradedClass total_sw = power(one_plus_w, n + 1);

  // Sq is unitriangular on the monomial basis; solve Sq(v) = w(CP^n).
  std::vector<int> v(n + 1, 0);
  for (int d = 0; d <= n; ++d) {
    GradedClass partial = GradedClass::zero(space, z2);
    for (int a = 0; a < d; ++a) {
      if (v[a]) partial = partial + sq_of_power[a];
    }
    const Rational target = total_sw.coefficient({d});
    const Rational have = partial.coefficient({d});
    v[d] = (target != have) ? 1 : 0;
  }
  GradedClass wu = GradedClass::zero(space, z2);
  for (int a = 0; a <= n; ++a) {
    if (v[a]) wu = wu + power(w, a);
  }
  return wu * wu;
}

std::vector<Rational> l_series(int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  // x/tanh x = (sum x^{2i}/(2i)!) / (sum x^{2i}/(2i+1)!), both in y = x^2.
  std::vector<Rational> num(max_n + 1), den(max_n + 1);
  Integer fact = 1;  // (2i)!
  for (int i = 0; i <= max_n; ++i) {
    if (i > 0) fact *= Integer(2 * i - 1) * Integer(2 * i);
    num[i] = Rational(1, fact);
    den[i] = Rational(1, fact * (2 * i + 1));
  }
  std::vector<Rational> q(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    Rational acc = num[n];
    for (int k = 0; k < n; ++k) acc -= q[k] * den[n - k];
    q[n] = acc / den[0];
  }
  return q;
}

GradedClass l_class_cp(const SpaceModel& space) {
  const CoeffRing q = CoeffRing::rationals();
  GradedClass total = GradedClass::one(space, q);
  int max_trunc = 0;
  for (const auto& g : space.gens()) max_trunc = std::max(max_trunc, g.trunc);
  const std::vector<Rational> series = l_series(max_trunc / 2);
  for (std::size_t i = 0; i < space.rank(); ++i) {
    GradedClass factor = GradedClass::zero(space, q);
    Exponents e(space.rank(), 0);
    for (int n = 0; 2 * n <= space.trunc(i); ++n) {
      e[i] = 2 * n;
      factor = factor + GradedClass::monomial(space, q, e, series[n]);
    }
    for (int k = 0; k <= space.trunc(i); ++k) total = total * factor;
  }
  return total;
}

}  // namespace galsym
