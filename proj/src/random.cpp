#include "galsym/random.hpp"

namespace galsym {

Integer Rng::residue(const Integer& modulus) {
  Integer acc = 0;
  Integer span = 1;
  // Two extra words keep the modulo bias negligible.
  while (span < modulus * (Integer(1) << 128)) {
    acc = (acc << 64) + next();
    span <<= 64;
  }
  return acc % modulus;
}

PadicUnit random_unit(Rng& rng, std::uint64_t prime, int precision) {
  const Integer modulus = PadicInt(prime, precision, 0).modulus();
  while (true) {
    Integer r = rng.residue(modulus);
    if (r % prime != 0) return PadicUnit(prime, precision, r);
  }
}

SpaceModel random_space(Rng& rng, int max_trunc) {
  if (rng.coin()) return SpaceModel::cp(rng.range(1, max_trunc));
  return random_product(rng, max_trunc);
}

SpaceModel random_product(Rng& rng, int max_trunc) {
  return SpaceModel::cp_product(rng.range(1, max_trunc), rng.range(1, max_trunc));
}

GradedClass random_class(Rng& rng, const SpaceModel& space, const CoeffRing& ring, int residue,
                         int modulus, int lo, int hi) {
  GradedClass::Terms terms;
  Exponents e(space.rank(), 0);
  // Odometer over all monomials of the truncated ring.
  while (true) {
    const int d = cohomological_degree(e);
    if (d % modulus == residue && d >= lo && d <= hi && rng.coin()) {
      Rational c;
      if (ring.is_rational()) {
        // Small numerators, denominators from {1, 2, 4, 7}: prime to 3 and 5.
        static const int dens[] = {1, 2, 4, 7};
        c = Rational(rng.range(-9, 9), dens[rng.below(4)]);
      } else {
        c = Rational(rng.residue(ring.modulus()));
      }
      terms.emplace(e, c);
    }
    std::size_t i = 0;
    while (i < e.size() && e[i] == space.trunc(i)) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return GradedClass(space, ring, terms);
}

GradedClass random_unit_class(Rng& rng, const SpaceModel& space, const CoeffRing& ring) {
  const GradedClass rest = random_class(rng, space, ring, 0, 4, 4, space.dimension());
  return GradedClass::one(space, ring) + rest;
}

RootData random_roots(Rng& rng, const SpaceModel& space, int max_roots) {
  std::vector<Root> roots;
  const int count = rng.range(1, max_roots);
  while (static_cast<int>(roots.size()) < count) {
    GradedClass x = random_class(rng, space, CoeffRing::z2(), 2, 4, 2, 2);
    if (x.is_zero()) continue;
    roots.push_back({x, rng.range(1, 4)});
  }
  return RootData(space, roots);
}

ActionResult<FormalManifoldOdd, OddStructure> random_odd_pair(Rng& rng, const SpaceModel& space,
                                                              std::uint64_t prime, int precision) {
  const CoeffRing ring = CoeffRing::modular(prime, precision);
  const GradedClass delta = random_unit_class(rng, space, ring);
  GradedClass phi = random_unit_class(rng, space, ring);
  const PadicUnit beta = random_unit(rng, prime, precision);
  const int m = space.dimension();
  if (m % 4 == 0) {
    // delta has constant term 1, so the top coefficient of phi enters the
    // pairing <phi * delta> with coefficient 1.
    const Exponents top = space.top_exponents();
    const GradedClass phi_low = phi - GradedClass::monomial(space, ring, top, phi.coefficient(top));
    const Rational target =
        ring.mul(Rational(unit_pow(beta, m / 2).residue()), pair_fundamental(delta));
    const Rational fix = ring.from_rational(target - pair_fundamental(phi_low * delta));
    phi = phi_low + GradedClass::monomial(space, ring, top, fix);
  }
  return {FormalManifoldOdd(prime, delta), OddStructure(phi, beta)};
}

ActionResult<FormalManifold2, TwoAdicStructure> random_two_pair(Rng& rng, const SpaceModel& space,
                                                                int precision) {
  const CoeffRing ring = CoeffRing::modular(2, precision);
  const int m = space.dimension();
  FormalManifold2 x(random_unit_class(rng, space, ring), random_roots(rng, space, 3));
  TwoAdicStructure s(
      random_class(rng, space, CoeffRing::modular(2, precision - 3), 0, 4, 4, m - 1),
      random_class(rng, space, CoeffRing::z2(), 2, 4, 2, m - 1));
  return {x, s};
}

}  // namespace galsym
