#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace galsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n" or "n/d" into a reduced rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

bool is_prime(std::uint64_t n);

/// Binomial coefficient C(n, j) mod 2 by Lucas: 1 iff the bits of j are a
/// subset of the bits of n. j > n yields 0.
int binom_mod2(std::uint64_t n, std::uint64_t j);

/**
 * Fixed-precision p-adic integer: a residue modulo p^k.
 *
 * Binary operations require equal primes and return the smaller of the two
 * precisions, so precision never grows silently.
 */
class PadicInt {
 public:
  PadicInt(std::uint64_t prime, int precision, const Integer& value);

  std::uint64_t prime() const { return prime_; }
  int precision() const { return precision_; }
  const Integer& residue() const { return residue_; }
  Integer modulus() const;

  /// Same residue reduced to a lower precision. Raising precision throws.
  PadicInt reduce(int precision) const;
  bool is_unit() const { return residue_ % prime_ != 0; }

  PadicInt operator+(const PadicInt& other) const;
  PadicInt operator-(const PadicInt& other) const;
  PadicInt operator*(const PadicInt& other) const;
  PadicInt operator-() const;

  bool operator==(const PadicInt& other) const = default;

 private:
  std::uint64_t prime_;
  int precision_;
  Integer residue_;
};

/// A PadicInt whose residue is coprime to the prime.
class PadicUnit {
 public:
  explicit PadicUnit(PadicInt value);
  PadicUnit(std::uint64_t prime, int precision, const Integer& value)
      : PadicUnit(PadicInt(prime, precision, value)) {}

  static PadicUnit one(std::uint64_t prime, int precision) {
    return PadicUnit(prime, precision, 1);
  }

  const PadicInt& value() const { return value_; }
  std::uint64_t prime() const { return value_.prime(); }
  int precision() const { return value_.precision(); }
  const Integer& residue() const { return value_.residue(); }

  PadicUnit reduce(int precision) const { return PadicUnit(value_.reduce(precision)); }
  PadicUnit operator*(const PadicUnit& other) const { return PadicUnit(value_ * other.value_); }
  bool operator==(const PadicUnit& other) const = default;

 private:
  PadicInt value_;
};

PadicUnit unit_inverse(const PadicUnit& u);
PadicUnit unit_pow(const PadicUnit& u, std::int64_t exponent);

/// Modified Legendre symbol (2/u) as a bit: 0 for u = +-1 mod 8, 1 for
/// u = +-3 mod 8. Needs a 2-adic unit of precision at least 3.
int legendre_mod8(const PadicUnit& sigma2);
int legendre_mod8(const PadicInt& sigma2);

/**
 * Element of the profinite units restricted to finitely many primes.
 * Primes without a stored component act as 1.
 */
class AdelicUnit {
 public:
  AdelicUnit() = default;
  explicit AdelicUnit(const std::vector<PadicUnit>& components);

  /// The integer n viewed in each listed completion; n must be prime to all.
  static AdelicUnit from_integer(const Integer& n,
                                 const std::map<std::uint64_t, int>& precisions);

  bool supports(std::uint64_t prime) const { return components_.count(prime) != 0; }
  /// Stored component, or nullptr when the prime is unsupported.
  const PadicUnit* find(std::uint64_t prime) const;
  /// Stored component, or 1 at the requested precision.
  PadicUnit at(std::uint64_t prime, int precision) const;

  const std::map<std::uint64_t, PadicUnit>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  AdelicUnit operator*(const AdelicUnit& other) const;
  AdelicUnit inverse() const;

 private:
  std::map<std::uint64_t, PadicUnit> components_;
};

}  // namespace galsym
