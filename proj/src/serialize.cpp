#include "galsym/serialize.hpp"

#include <stdexcept>

namespace galsym::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw std::invalid_argument(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument(std::string("field '") + key + "' must be a decimal string");
}

std::uint64_t prime_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !v.is_number_integer()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  }
  const long long p = v.get<long long>();
  if (p < 2) throw std::invalid_argument(std::string("field '") + key + "' must be >= 2");
  return static_cast<std::uint64_t>(p);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

std::uint64_t prime_key(const std::string& key) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 18) {
    throw std::invalid_argument("prime keys must be decimal strings, got '" + key + "'");
  }
  return std::stoull(key);
}

Integer integer_from(const std::string& s) {
  const Rational q = parse_rational(s);
  if (denominator(q) != 1) throw std::invalid_argument("expected an integer, got " + s);
  return numerator(q);
}

}  // namespace

json to_json(const PadicInt& x) {
  return {{"prime", x.prime()}, {"precision", x.precision()}, {"residue", x.residue().str()}};
}

json to_json(const PadicUnit& u) { return to_json(u.value()); }

json to_json(const Rational& q) {
  return {{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

json to_json(const SpaceModel& space) {
  json gens = json::array();
  for (const auto& g : space.gens()) gens.push_back({{"name", g.name}, {"trunc", g.trunc}});
  return {{"gens", gens}};
}

json terms_to_json(const GradedClass& c) {
  json terms = json::array();
  for (const auto& [e, q] : c.terms()) terms.push_back({{"exps", e}, {"coeff", to_string(q)}});
  return terms;
}

json to_json(const GradedClass& c) {
  return {{"space", to_json(c.space())}, {"ring", c.ring().name()}, {"terms", terms_to_json(c)}};
}

json to_json(const RootData& roots) {
  json list = json::array();
  for (const auto& r : roots.roots()) {
    list.push_back({{"class", terms_to_json(r.klass)}, {"mult", r.multiplicity}});
  }
  return {{"space", to_json(roots.space())}, {"roots", list}};
}

json to_json(const KervaireCoeffs& coeffs) {
  json j = {{"f", coeffs.f}, {"mode", to_string(coeffs.mode)}};
  j["sigma2"] = coeffs.sigma2 ? to_json(*coeffs.sigma2) : json(nullptr);
  return j;
}

json to_json(const AdelicUnit& sigma) {
  json j = json::object();
  for (const auto& [p, u] : sigma.components()) j[std::to_string(p)] = to_json(u);
  return j;
}

json to_json(const FormalManifoldOdd& x) {
  return {{"prime", x.prime()}, {"delta_hat", to_json(x.delta_hat())}};
}

json to_json(const FormalManifold2& x) {
  return {{"prime", 2},
          {"L", to_json(x.l_genus())},
          {"kG_vanishes", x.kg_vanishes()},
          {"normal_roots", to_json(x.normal_roots())}};
}

json to_json(const OddStructure& s) {
  return {{"phi", to_json(s.phi_char())}, {"beta", to_json(s.beta())}};
}

json to_json(const TwoAdicStructure& s) { return {{"l", to_json(s.l())}, {"k", to_json(s.k())}}; }

json to_json(const EtaleManifold& x) {
  json primes = json::object();
  for (const auto& [p, c] : x.components()) {
    primes[std::to_string(p)] = std::visit([](const auto& m) { return to_json(m); }, c);
  }
  return {{"space", to_json(x.space())}, {"primes", primes}};
}

json to_json(const EtaleStructure& s) {
  json j = json::object();
  for (const auto& [p, c] : s.components()) {
    j[std::to_string(p)] = std::visit([](const auto& st) { return to_json(st); }, c);
  }
  return j;
}

PadicInt padic_from_json(const json& j) {
  return PadicInt(prime_field(j, "prime"), int_field(j, "precision"),
                  integer_from(string_field(j, "residue")));
}

PadicUnit unit_from_json(const json& j) { return PadicUnit(padic_from_json(j)); }

Rational rational_from_json(const json& j) {
  const Integer num = integer_from(string_field(j, "num"));
  const Integer den = integer_from(string_field(j, "den"));
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  return Rational(num, den);
}

SpaceModel space_from_json(const json& j) {
  const json& gens = field(j, "gens");
  if (!gens.is_array()) throw std::invalid_argument("'gens' must be an array");
  std::vector<Generator> out;
  for (const auto& g : gens) {
    const json& name = field(g, "name");
    if (!name.is_string()) throw std::invalid_argument("generator name must be a string");
    out.push_back({name.get<std::string>(), int_field(g, "trunc")});
  }
  return SpaceModel(std::move(out));
}

GradedClass terms_from_json(const SpaceModel& space, const CoeffRing& ring, const json& terms) {
  if (!terms.is_array()) throw std::invalid_argument("'terms' must be an array");
  GradedClass out(space, ring);
  for (const auto& t : terms) {
    const json& exps = field(t, "exps");
    if (!exps.is_array()) throw std::invalid_argument("'exps' must be an array");
    Exponents e;
    for (const auto& x : exps) {
      if (!x.is_number_integer()) throw std::invalid_argument("exponents must be integers");
      e.push_back(x.get<int>());
    }
    // Summing through the constructor merges repeated exponent vectors.
    out = out + GradedClass(space, ring, {{e, parse_rational(string_field(t, "coeff"))}});
  }
  return out;
}

GradedClass class_from_json(const json& j) {
  const SpaceModel space = space_from_json(field(j, "space"));
  const json& ring = field(j, "ring");
  if (!ring.is_string()) throw std::invalid_argument("'ring' must be a string");
  return terms_from_json(space, CoeffRing::parse(ring.get<std::string>()), field(j, "terms"));
}

RootData roots_from_json(const json& j) {
  const SpaceModel space = space_from_json(field(j, "space"));
  const json& list = field(j, "roots");
  if (!list.is_array()) throw std::invalid_argument("'roots' must be an array");
  std::vector<Root> roots;
  for (const auto& r : list) {
    roots.push_back({terms_from_json(space, CoeffRing::rationals(), field(r, "class")),
                     int_field(r, "mult")});
  }
  return RootData(space, std::move(roots));
}

KervaireCoeffs coeffs_from_json(const json& j) {
  KervaireCoeffs out;
  out.mode = parse_kervaire_mode(field(j, "mode").get<std::string>());
  for (const auto& b : field(j, "f")) {
    if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) {
      throw std::invalid_argument("Kervaire coefficients must be bits");
    }
    out.f.push_back(b.get<int>());
  }
  auto it = j.find("sigma2");
  if (it != j.end() && !it->is_null()) out.sigma2 = unit_from_json(*it);
  return out;
}

AdelicUnit adelic_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("adelic unit must be an object keyed by prime");
  std::vector<PadicUnit> parts;
  for (const auto& [key, v] : j.items()) {
    const std::uint64_t p = prime_key(key);
    if (v.contains("prime") && prime_field(v, "prime") != p) {
      throw std::invalid_argument("component keyed by " + key + " names another prime");
    }
    parts.emplace_back(p, int_field(v, "precision"), integer_from(string_field(v, "residue")));
  }
  return AdelicUnit(parts);
}

FormalManifoldOdd odd_manifold_from_json(const json& j) {
  return FormalManifoldOdd(prime_field(j, "prime"), class_from_json(field(j, "delta_hat")));
}

FormalManifold2 two_manifold_from_json(const json& j) {
  if (prime_field(j, "prime") != 2) throw std::invalid_argument("2-adic manifold needs prime 2");
  bool kg = true;
  if (auto it = j.find("kG_vanishes"); it != j.end()) {
    if (!it->is_boolean()) throw std::invalid_argument("'kG_vanishes' must be a boolean");
    kg = it->get<bool>();
  }
  return FormalManifold2(class_from_json(field(j, "L")), roots_from_json(field(j, "normal_roots")),
                         kg);
}

OddStructure odd_structure_from_json(const json& j) {
  return OddStructure(class_from_json(field(j, "phi")), unit_from_json(field(j, "beta")));
}

TwoAdicStructure two_structure_from_json(const json& j) {
  return TwoAdicStructure(class_from_json(field(j, "l")), class_from_json(field(j, "k")));
}

EtaleManifold etale_manifold_from_json(const json& j) {
  const SpaceModel space = space_from_json(field(j, "space"));
  const json& primes = field(j, "primes");
  if (!primes.is_object()) throw std::invalid_argument("'primes' must be an object");
  std::map<std::uint64_t, PrimeManifold> parts;
  for (const auto& [key, v] : primes.items()) {
    const std::uint64_t p = prime_key(key);
    if (p == 2) {
      parts.emplace(p, two_manifold_from_json(v));
    } else {
      parts.emplace(p, odd_manifold_from_json(v));
    }
  }
  return EtaleManifold(space, std::move(parts));
}

EtaleStructure etale_structure_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("structure must be an object keyed by prime");
  std::map<std::uint64_t, PrimeStructure> parts;
  for (const auto& [key, v] : j.items()) {
    const std::uint64_t p = prime_key(key);
    if (p == 2) {
      parts.emplace(p, two_structure_from_json(v));
    } else {
      parts.emplace(p, odd_structure_from_json(v));
    }
  }
  return EtaleStructure(std::move(parts));
}

}  // namespace galsym::io
