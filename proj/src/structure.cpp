#include "galsym/structure.hpp"

#include <stdexcept>

namespace galsym {

namespace {

void require_odd_class(std::uint64_t prime, const GradedClass& c, const char* what) {
  const CoeffRing& ring = c.ring();
  if (!ring.is_rational() && ring.prime() != prime) {
    throw std::invalid_argument(std::string(what) + " has coefficients in " + ring.name() +
                                ", expected Q or Z/" + std::to_string(prime) + "^k");
  }
  if (ring.is_rational()) {
    for (const auto& [e, q] : c.terms()) {
      if (denominator(q) % prime == 0) {
        throw std::invalid_argument(std::string(what) + " has coefficient " + to_string(q) +
                                    " with denominator divisible by " + std::to_string(prime));
      }
    }
  }
  if (!c.degrees_congruent(0, 4)) {
    throw std::invalid_argument(std::string(what) + " must live in degrees divisible by 4");
  }
  if (c.constant_term() != 1) {
    throw std::invalid_argument(std::string(what) + " must have constant term 1, got " +
                                to_string(c.constant_term()));
  }
}

bool is_two_adic(const CoeffRing& r) { return !r.is_rational() && r.prime() == 2; }

/// Precision p^w at which data from several rings and units can be combined.
int working_precision(int unit_precision, std::initializer_list<const GradedClass*> classes) {
  int w = unit_precision;
  for (const GradedClass* c : classes) {
    if (!c->ring().is_rational()) w = std::min(w, c->ring().precision());
  }
  return w;
}

}  // namespace

GradedClass adams_H(const PadicUnit& sigma, const GradedClass& a) {
  const CoeffRing& source = a.ring();
  int precision = sigma.precision();
  if (!source.is_rational()) {
    if (source.prime() != sigma.prime()) {
      throw std::invalid_argument("Adams operation at prime " + std::to_string(sigma.prime()) +
                                  " applied to a class over " + source.name());
    }
    precision = std::min(precision, source.precision());
  }
  const CoeffRing target = CoeffRing::modular(sigma.prime(), precision);
  const PadicUnit u = sigma.reduce(precision);
  const GradedClass mapped = coefficient_map(a, target);
  GradedClass::Terms scaled;
  for (const auto& [e, c] : mapped.terms()) {
    const int weight = cohomological_degree(e) / 2;
    scaled.emplace(e, c * Rational(unit_pow(u, weight).residue()));
  }
  return GradedClass(a.space(), target, scaled);
}

// FormalManifoldOdd

FormalManifoldOdd::FormalManifoldOdd(std::uint64_t prime, GradedClass delta_hat)
    : prime_(prime), delta_hat_(std::move(delta_hat)) {
  if (prime == 2 || !is_prime(prime)) {
    throw std::invalid_argument("odd formal manifolds need an odd prime, got " +
                                std::to_string(prime));
  }
  require_odd_class(prime_, delta_hat_, "delta_hat");
}

// FormalManifold2

FormalManifold2::FormalManifold2(GradedClass l_genus, RootData normal_roots, bool kg_vanishes)
    : l_genus_(std::move(l_genus)), normal_roots_(std::move(normal_roots)) {
  if (!kg_vanishes) {
    throw std::invalid_argument("a 2-adic formal manifold needs vanishing k^G");
  }
  if (!is_two_adic(l_genus_.ring()) || l_genus_.ring().precision() < 3) {
    throw std::invalid_argument("L_X must be over Z/2^k with k >= 3, got " +
                                l_genus_.ring().name());
  }
  if (!l_genus_.degrees_congruent(0, 4)) {
    throw std::invalid_argument("L_X must live in degrees divisible by 4");
  }
  if (l_genus_.constant_term() != 1) {
    throw std::invalid_argument("L_X must have constant term 1");
  }
  if (!(normal_roots_.space() == l_genus_.space())) {
    throw std::invalid_argument("normal roots live on " + normal_roots_.space().label() +
                                ", expected " + l_genus_.space().label());
  }
}

// OddStructure

OddStructure::OddStructure(GradedClass phi_char, PadicUnit beta)
    : phi_char_(std::move(phi_char)), beta_(std::move(beta)) {
  if (beta_.prime() == 2) throw std::invalid_argument("odd structures need an odd prime");
  require_odd_class(beta_.prime(), phi_char_, "phi");
}

// TwoAdicStructure

TwoAdicStructure::TwoAdicStructure(GradedClass l, GradedClass k)
    : l_(std::move(l)), k_(std::move(k)) {
  if (!(l_.space() == k_.space())) throw std::invalid_argument("l and k live on different spaces");
  if (!is_two_adic(l_.ring())) {
    throw std::invalid_argument("l must be over Z/2^k, got " + l_.ring().name());
  }
  if (!(k_.ring() == CoeffRing::z2())) {
    throw std::invalid_argument("k must be over Z/2, got " + k_.ring().name());
  }
  const int m = l_.space().dimension();
  for (const auto& [e, c] : l_.terms()) {
    const int d = cohomological_degree(e);
    if (d % 4 != 0 || d == 0 || d >= m) {
      throw std::invalid_argument("l has a term in degree " + std::to_string(d) +
                                  "; allowed degrees are 4k with 0 < 4k < " + std::to_string(m));
    }
  }
  for (const auto& [e, c] : k_.terms()) {
    const int d = cohomological_degree(e);
    if (d % 4 != 2 || d >= m) {
      throw std::invalid_argument("k has a term in degree " + std::to_string(d) +
                                  "; allowed degrees are 4k+2 < " + std::to_string(m));
    }
  }
}

TwoAdicStructure TwoAdicStructure::trivial(const SpaceModel& space, int l_precision) {
  return TwoAdicStructure(GradedClass::zero(space, CoeffRing::modular(2, l_precision)),
                          GradedClass::zero(space, CoeffRing::z2()));
}

// Actions

FormalManifoldOdd galois_conjugate(const FormalManifoldOdd& x, const PadicUnit& sigma) {
  if (sigma.prime() != x.prime()) {
    throw std::invalid_argument("unit at prime " + std::to_string(sigma.prime()) +
                                " acting on a manifold at prime " + std::to_string(x.prime()));
  }
  return FormalManifoldOdd(x.prime(), adams_H(unit_inverse(sigma), x.delta_hat()));
}

FormalManifold2 galois_conjugate(const FormalManifold2& x, const PadicUnit& sigma2) {
  if (sigma2.prime() != 2) throw std::invalid_argument("expected a 2-adic unit");
  return FormalManifold2(adams_H(unit_inverse(sigma2), x.l_genus()), x.normal_roots());
}

bool validate_odd(const FormalManifoldOdd& x, const OddStructure& s) {
  if (x.prime() != s.prime()) {
    throw std::invalid_argument("structure at prime " + std::to_string(s.prime()) +
                                " over a manifold at prime " + std::to_string(x.prime()));
  }
  if (!(x.space() == s.phi_char().space())) {
    throw std::invalid_argument("phi lives on " + s.phi_char().space().label() + ", expected " +
                                x.space().label());
  }
  const int m = x.dimension();
  if (m % 4 != 0) return true;

  const int w = working_precision(s.beta().precision(), {&x.delta_hat(), &s.phi_char()});
  const CoeffRing ring = CoeffRing::modular(x.prime(), w);

  Rational lhs, rhs;
  if (x.delta_hat().ring().is_rational() && s.phi_char().ring().is_rational()) {
    lhs = pair_fundamental(s.phi_char() * x.delta_hat());
    rhs = pair_fundamental(x.delta_hat());
  } else {
    const GradedClass d = coefficient_map(x.delta_hat(), ring);
    lhs = pair_fundamental(coefficient_map(s.phi_char(), ring) * d);
    rhs = pair_fundamental(d);
  }
  for (const Rational* q : {&lhs, &rhs}) {
    if (denominator(*q) % x.prime() != 0) continue;
    throw std::domain_error("indeterminate: pairing " + to_string(*q) +
                            " has a denominator divisible by " + std::to_string(x.prime()));
  }
  const Rational scale(unit_pow(s.beta().reduce(w), m / 2).residue());
  return ring.from_rational(lhs) == ring.mul(scale, ring.from_rational(rhs));
}

ActionResult<FormalManifoldOdd, OddStructure> galois_odd(const FormalManifoldOdd& x,
                                                         const OddStructure& s,
                                                         const PadicUnit& sigma) {
  if (sigma.prime() != x.prime() || s.prime() != x.prime()) {
    throw std::invalid_argument("galois_odd needs manifold, structure and unit at one prime");
  }
  if (!(x.space() == s.phi_char().space())) {
    throw std::invalid_argument("phi and delta_hat live on different spaces");
  }
  const int w = working_precision(sigma.precision(), {&x.delta_hat(), &s.phi_char()});
  const CoeffRing ring = CoeffRing::modular(x.prime(), w);
  const PadicUnit u = sigma.reduce(w);

  const GradedClass delta = coefficient_map(x.delta_hat(), ring);
  const GradedClass twisted = adams_H(unit_inverse(u), delta);
  const GradedClass phi = coefficient_map(s.phi_char(), ring) * delta * ring_inverse(twisted);

  const int beta_precision = std::min(s.beta().precision(), sigma.precision());
  const PadicUnit beta = s.beta().reduce(beta_precision) * sigma.reduce(beta_precision);
  return {FormalManifoldOdd(x.prime(), twisted), OddStructure(phi, beta)};
}

ActionResult<FormalManifold2, TwoAdicStructure> galois_two(const FormalManifold2& x,
                                                           const TwoAdicStructure& s,
                                                           const PadicUnit& sigma2,
                                                           const KervaireCoeffs& coeffs) {
  if (sigma2.prime() != 2) throw std::invalid_argument("galois_two needs a 2-adic unit");
  if (!(x.space() == s.space())) {
    throw std::invalid_argument("structure lives on " + s.space().label() + ", expected " +
                                x.space().label());
  }
  if (coeffs.sigma2 && legendre_mod8(*coeffs.sigma2) != legendre_mod8(sigma2)) {
    throw std::invalid_argument("Kervaire coefficients belong to a unit with a different "
                                "Legendre symbol");
  }
  const int w = std::min({x.l_genus().ring().precision(), sigma2.precision(),
                          s.l().ring().precision() + 3});
  if (w < 4) {
    throw std::invalid_argument("insufficient 2-adic precision: division by 8 needs at least "
                                "4 bits, have " + std::to_string(w));
  }
  const CoeffRing ring = CoeffRing::modular(2, w);
  const CoeffRing out_ring = CoeffRing::modular(2, w - 3);
  const SpaceModel& space = x.space();
  const int m = space.dimension();

  const GradedClass l_genus = coefficient_map(x.l_genus(), ring);
  const GradedClass twisted = adams_H(unit_inverse(sigma2.reduce(w)), l_genus);

  // 8 l is determined mod 2^w by l mod 2^{w-3}.
  GradedClass::Terms eight_l_terms;
  for (const auto& [e, c] : s.l().terms()) eight_l_terms.emplace(e, 8 * c);
  const GradedClass one = GradedClass::one(space, ring);
  const GradedClass eight_l(space, ring, eight_l_terms);

  const GradedClass excess = (one + eight_l) * l_genus * ring_inverse(twisted) - one;
  GradedClass::Terms l_terms;
  for (const auto& [e, c] : excess.terms()) {
    const Integer& r = numerator(c);
    if (r % 8 != 0) {
      throw std::domain_error("division by 8 is not exact in degree " +
                              std::to_string(cohomological_degree(e)));
    }
    l_terms.emplace(e, Rational(r / 8));
  }
  const GradedClass l_new = GradedClass(space, out_ring, l_terms).without_component(m);

  const GradedClass k_x = kervaire_class(coeffs, x.normal_roots(), m - 1);
  const GradedClass k_new = (s.k() + k_x).without_component(m);

  return {FormalManifold2(twisted, x.normal_roots()), TwoAdicStructure(l_new, k_new)};
}

ActionResult<FormalManifold2, TwoAdicStructure> galois_two(const FormalManifold2& x,
                                                           const TwoAdicStructure& s,
                                                           const PadicUnit& sigma2,
                                                           const KervaireRule& rule) {
  const int needed = coefficients_needed(x.dimension() - 1);
  KervaireCoeffs coeffs;
  if (needed > 0) coeffs = rule(unit_inverse(sigma2), needed - 1);
  return galois_two(x, s, sigma2, coeffs);
}

// Etale

EtaleManifold::EtaleManifold(SpaceModel space, std::map<std::uint64_t, PrimeManifold> components)
    : space_(std::move(space)), components_(std::move(components)) {
  for (const auto& [p, c] : components_) {
    const bool two = std::holds_alternative<FormalManifold2>(c);
    if ((p == 2) != two) {
      throw std::invalid_argument("manifold component at prime " + std::to_string(p) +
                                  " has the wrong kind");
    }
    const SpaceModel& sp = two ? std::get<FormalManifold2>(c).space()
                               : std::get<FormalManifoldOdd>(c).space();
    if (!(sp == space_)) {
      throw std::invalid_argument("manifold component at prime " + std::to_string(p) +
                                  " lives on " + sp.label() + ", expected " + space_.label());
    }
    if (!two && std::get<FormalManifoldOdd>(c).prime() != p) {
      throw std::invalid_argument("manifold component keyed by " + std::to_string(p) +
                                  " is at another prime");
    }
  }
}

EtaleStructure::EtaleStructure(std::map<std::uint64_t, PrimeStructure> components)
    : components_(std::move(components)) {
  for (const auto& [p, c] : components_) {
    const bool two = std::holds_alternative<TwoAdicStructure>(c);
    if ((p == 2) != two) {
      throw std::invalid_argument("structure component at prime " + std::to_string(p) +
                                  " has the wrong kind");
    }
    if (!two && std::get<OddStructure>(c).prime() != p) {
      throw std::invalid_argument("structure component keyed by " + std::to_string(p) +
                                  " is at another prime");
    }
  }
}

ActionResult<EtaleManifold, EtaleStructure> galois_etale(const EtaleManifold& x,
                                                         const EtaleStructure& s,
                                                         const AdelicUnit& sigma,
                                                         const KervaireRule& rule) {
  for (const auto& [p, c] : s.components()) {
    if (!x.components().count(p)) {
      throw std::invalid_argument("no manifold data at prime " + std::to_string(p));
    }
  }
  std::map<std::uint64_t, PrimeManifold> manifolds;
  std::map<std::uint64_t, PrimeStructure> structures;
  for (const auto& [p, m] : x.components()) {
    const PadicUnit* u = sigma.find(p);
    auto st = s.components().find(p);
    if (u == nullptr) {
      manifolds.emplace(p, m);
      if (st != s.components().end()) structures.emplace(p, st->second);
      continue;
    }
    if (p == 2) {
      const auto& x2 = std::get<FormalManifold2>(m);
      if (st == s.components().end()) {
        manifolds.emplace(p, galois_conjugate(x2, *u));
      } else {
        auto r = galois_two(x2, std::get<TwoAdicStructure>(st->second), *u, rule);
        manifolds.emplace(p, std::move(r.manifold));
        structures.emplace(p, std::move(r.structure));
      }
    } else {
      const auto& xp = std::get<FormalManifoldOdd>(m);
      if (st == s.components().end()) {
        manifolds.emplace(p, galois_conjugate(xp, *u));
      } else {
        auto r = galois_odd(xp, std::get<OddStructure>(st->second), *u);
        manifolds.emplace(p, std::move(r.manifold));
        structures.emplace(p, std::move(r.structure));
      }
    }
  }
  return {EtaleManifold(x.space(), std::move(manifolds)), EtaleStructure(std::move(structures))};
}

}  // namespace galsym
