#pragma once

#include "json.hpp"

#include "galsym/structure.hpp"

namespace galsym::io {

using nlohmann::json;

// Numbers are written as decimal strings; primes and precisions as JSON
// integers. Parsers throw std::invalid_argument on malformed input.

json to_json(const PadicInt& x);
json to_json(const PadicUnit& u);
json to_json(const Rational& q);
json to_json(const SpaceModel& space);
/// Term list [{"exps": [...], "coeff": "..."}] in exponent order.
json terms_to_json(const GradedClass& c);
json to_json(const GradedClass& c);
json to_json(const RootData& roots);
json to_json(const KervaireCoeffs& coeffs);
json to_json(const AdelicUnit& sigma);
json to_json(const FormalManifoldOdd& x);
json to_json(const FormalManifold2& x);
json to_json(const OddStructure& s);
json to_json(const TwoAdicStructure& s);
json to_json(const EtaleManifold& x);
json to_json(const EtaleStructure& s);

PadicInt padic_from_json(const json& j);
PadicUnit unit_from_json(const json& j);
Rational rational_from_json(const json& j);
SpaceModel space_from_json(const json& j);
GradedClass terms_from_json(const SpaceModel& space, const CoeffRing& ring, const json& terms);
GradedClass class_from_json(const json& j);
RootData roots_from_json(const json& j);
KervaireCoeffs coeffs_from_json(const json& j);
/// Object keyed by prime strings: {"2": {"precision": 20, "residue": "3"}}.
AdelicUnit adelic_from_json(const json& j);
FormalManifoldOdd odd_manifold_from_json(const json& j);
FormalManifold2 two_manifold_from_json(const json& j);
OddStructure odd_structure_from_json(const json& j);
TwoAdicStructure two_structure_from_json(const json& j);
/// {"space": {...}, "primes": {"2": {...}, "3": {...}}}
EtaleManifold etale_manifold_from_json(const json& j);
/// {"2": {"l": ..., "k": ...}, "3": {"phi": ..., "beta": ...}}
EtaleStructure etale_structure_from_json(const json& j);

}  // namespace galsym::io
