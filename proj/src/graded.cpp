#include "galsym/graded.hpp"

#include <set>
#include <stdexcept>

#include <boost/integer/mod_inverse.hpp>

namespace galsym {

namespace {

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

std::string describe(const Exponents& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

}  // namespace

// CoeffRing

CoeffRing CoeffRing::modular(std::uint64_t prime, int precision) {
  if (!is_prime(prime)) throw std::invalid_argument("not a prime: " + std::to_string(prime));
  if (precision < 1) throw std::invalid_argument("precision must be at least 1");
  CoeffRing r;
  r.prime_ = prime;
  r.precision_ = precision;
  r.modulus_ = 1;
  for (int i = 0; i < precision; ++i) r.modulus_ *= prime;
  return r;
}

CoeffRing CoeffRing::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.rfind("Z/", 0) != 0) throw std::invalid_argument("unknown coefficient ring: " + name);
  const std::string body = name.substr(2);
  auto digits = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("unknown coefficient ring: " + name);
    }
    return Integer(s);
  };
  auto caret = body.find('^');
  if (caret != std::string::npos) {
    Integer p = digits(body.substr(0, caret));
    Integer k = digits(body.substr(caret + 1));
    if (p > 0xffffffffu || k > 100000) throw std::invalid_argument("ring too large: " + name);
    return modular(p.convert_to<std::uint64_t>(), k.convert_to<int>());
  }
  Integer n = digits(body);
  if (n < 2) throw std::invalid_argument("unknown coefficient ring: " + name);
  // Smallest factor of n; n must be a power of it.
  Integer p = 2;
  while (n % p != 0) ++p;
  int k = 0;
  Integer rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw std::invalid_argument("modulus is not a prime power: " + name);
  return modular(p.convert_to<std::uint64_t>(), k);
}

Rational CoeffRing::from_rational(const Rational& q) const {
  if (is_rational()) return q;
  const Integer& den = denominator(q);
  if (den % prime_ == 0) {
    throw std::domain_error("coefficient " + to_string(q) + " has a denominator divisible by " +
                            std::to_string(prime_));
  }
  Integer num = floor_mod(numerator(q), modulus_);
  if (den != 1) num = floor_mod(num * boost::integer::mod_inverse(Integer(den % modulus_), modulus_), modulus_);
  return Rational(num);
}

bool CoeffRing::is_unit(const Rational& c) const {
  if (is_rational()) return c != 0;
  return numerator(from_rational(c)) % prime_ != 0;
}

Rational CoeffRing::inverse(const Rational& c) const {
  if (!is_unit(c)) throw std::domain_error(to_string(c) + " is not a unit in " + name());
  if (is_rational()) return 1 / c;
  return Rational(boost::integer::mod_inverse(numerator(from_rational(c)), modulus_));
}

std::string CoeffRing::name() const {
  if (is_rational()) return "Q";
  return "Z/" + modulus_.str();
}

// SpaceModel

SpaceModel::SpaceModel(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("space model needs at least one generator");
  std::set<std::string> names;
  for (const auto& g : gens_) {
    if (g.trunc < 1) {
      throw std::invalid_argument("truncation of '" + g.name + "' must be >= 1");
    }
    if (g.name.empty()) throw std::invalid_argument("generator names must be non-empty");
    if (!names.insert(g.name).second) {
      throw std::invalid_argument("duplicate generator name '" + g.name + "'");
    }
  }
}

SpaceModel SpaceModel::cp(int n) { return SpaceModel({{"w", n}}); }

SpaceModel SpaceModel::cp_product(int a, int b) { return SpaceModel({{"w1", a}, {"w2", b}}); }

int SpaceModel::dimension() const {
  int d = 0;
  for (const auto& g : gens_) d += 2 * g.trunc;
  return d;
}

std::vector<int> SpaceModel::top_exponents() const {
  std::vector<int> e;
  for (const auto& g : gens_) e.push_back(g.trunc);
  return e;
}

std::string SpaceModel::label() const {
  std::string s;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    s += (i ? "xCP^" : "CP^") + std::to_string(gens_[i].trunc);
  }
  return s;
}

bool SpaceModel::is_truncation(const SpaceModel& sub) const {
  if (sub.gens_.size() != gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (sub.gens_[i].name != gens_[i].name || sub.gens_[i].trunc > gens_[i].trunc) return false;
  }
  return true;
}

// GradedClass

GradedClass::GradedClass(SpaceModel space, CoeffRing ring)
    : space_(std::move(space)), ring_(std::move(ring)) {}

GradedClass::GradedClass(SpaceModel space, CoeffRing ring, const Terms& terms)
    : GradedClass(std::move(space), std::move(ring)) {
  for (const auto& [e, c] : terms) {
    if (e.size() != space_.rank()) {
      throw std::invalid_argument("exponent vector " + describe(e) + " has wrong length for " +
                                  space_.label());
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::invalid_argument("negative exponent in " + describe(e));
    }
    add_term(e, c);
  }
}

GradedClass GradedClass::constant(const SpaceModel& space, const CoeffRing& ring,
                                  const Rational& c) {
  return GradedClass(space, ring, {{Exponents(space.rank(), 0), c}});
}

GradedClass GradedClass::monomial(const SpaceModel& space, const CoeffRing& ring,
                                  const Exponents& exps, const Rational& c) {
  return GradedClass(space, ring, {{exps, c}});
}

GradedClass GradedClass::generator(const SpaceModel& space, const CoeffRing& ring,
                                   std::size_t i) {
  Exponents e(space.rank(), 0);
  e.at(i) = 1;
  return monomial(space, ring, e);
}

void GradedClass::add_term(const Exponents& exps, const Rational& c) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > space_.trunc(i)) return;
  }
  auto it = terms_.find(exps);
  Rational sum = ring_.from_rational(it == terms_.end() ? c : it->second + c);
  if (sum == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(exps, sum);
  } else {
    it->second = sum;
  }
}

void GradedClass::require_compatible(const GradedClass& other) const {
  if (!(space_ == other.space_)) {
    throw std::invalid_argument("classes live on different spaces: " + space_.label() + " and " +
                                other.space_.label());
  }
  if (!(ring_ == other.ring_)) {
    throw std::invalid_argument("classes have different coefficient rings: " + ring_.name() +
                                " and " + other.ring_.name());
  }
}

Rational GradedClass::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedClass::constant_term() const {
  return coefficient(Exponents(space_.rank(), 0));
}

GradedClass GradedClass::component(int degree) const {
  GradedClass out(space_, ring_);
  for (const auto& [e, c] : terms_) {
    if (cohomological_degree(e) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

GradedClass GradedClass::without_component(int degree) const {
  GradedClass out(space_, ring_);
  for (const auto& [e, c] : terms_) {
    if (cohomological_degree(e) != degree) out.terms_.emplace(e, c);
  }
  return out;
}

GradedClass GradedClass::truncated_to(int max_degree) const {
  GradedClass out(space_, ring_);
  for (const auto& [e, c] : terms_) {
    if (cohomological_degree(e) <= max_degree) out.terms_.emplace(e, c);
  }
  return out;
}

bool GradedClass::degrees_congruent(int residue, int modulus) const {
  for (const auto& [e, c] : terms_) {
    if (cohomological_degree(e) % modulus != residue) return false;
  }
  return true;
}

GradedClass GradedClass::operator+(const GradedClass& other) const {
  require_compatible(other);
  GradedClass out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

GradedClass GradedClass::operator-() const { return scaled(-1); }

GradedClass GradedClass::operator-(const GradedClass& other) const { return *this + (-other); }

GradedClass GradedClass::scaled(const Rational& c) const {
  GradedClass out(space_, ring_);
  const Rational k = ring_.from_rational(c);
  for (const auto& [e, x] : terms_) out.add_term(e, x * k);
  return out;
}

GradedClass GradedClass::operator*(const GradedClass& other) const {
  require_compatible(other);
  GradedClass out(space_, ring_);
  Exponents sum(space_.rank());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      bool alive = true;
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = ea[i] + eb[i];
        if (sum[i] > space_.trunc(i)) {
          alive = false;
          break;
        }
      }
      if (alive) out.add_term(sum, ca * cb);
    }
  }
  return out;
}

GradedClass ring_mul(const GradedClass& a, const GradedClass& b) { return a * b; }

GradedClass ring_inverse(const GradedClass& a) {
  const CoeffRing& ring = a.ring();
  const Rational c0 = a.constant_term();
  if (!ring.is_unit(c0)) {
    throw std::domain_error("constant term " + to_string(c0) + " is not a unit in " +
                            ring.name());
  }
  // a = c0 (1 - x) with x nilpotent, so a^{-1} = c0^{-1} (1 + x + x^2 + ...).
  const Rational c0_inv = ring.inverse(c0);
  const GradedClass one = GradedClass::one(a.space(), ring);
  const GradedClass x = one - a.scaled(c0_inv);
  GradedClass sum = one;
  GradedClass power = one;
  while (true) {
    power = power * x;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum.scaled(c0_inv);
}

Rational pair_fundamental(const GradedClass& a) {
  return a.coefficient(a.space().top_exponents());
}

GradedClass restrict(const GradedClass& a, const SpaceModel& sub) {
  if (!a.space().is_truncation(sub)) {
    throw std::invalid_argument(sub.label() + " is not a truncation of " + a.space().label());
  }
  return GradedClass(sub, a.ring(), a.terms());
}

GradedClass coefficient_map(const GradedClass& a, const CoeffRing& target) {
  const CoeffRing& source = a.ring();
  if (source == target) return a;
  if (target.is_rational()) {
    throw std::invalid_argument("no ring map from " + source.name() + " to Q");
  }
  if (!source.is_rational() &&
      (source.prime() != target.prime() || source.precision() < target.precision())) {
    throw std::invalid_argument("no ring map from " + source.name() + " to " + target.name());
  }
  // from_rational reduces both rationals and residues correctly.
  return GradedClass(a.space(), target, a.terms());
}

}  // namespace galsym
