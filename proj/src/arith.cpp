#include "galsym/arith.hpp"

#include <stdexcept>

#include <boost/integer/mod_inverse.hpp>

namespace galsym {

namespace {

Integer power(std::uint64_t base, int exponent) {
  Integer result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

void require_same_prime(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument("p-adic operands at different primes: " +
                                std::to_string(a.prime()) + " and " +
                                std::to_string(b.prime()));
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("malformed number: '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed number: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("malformed number: '" + text + "'");
      }
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int binom_mod2(std::uint64_t n, std::uint64_t j) { return (j & ~n) == 0 ? 1 : 0; }

PadicInt::PadicInt(std::uint64_t prime, int precision, const Integer& value)
    : prime_(prime), precision_(precision) {
  if (!is_prime(prime)) {
    throw std::invalid_argument("not a prime: " + std::to_string(prime));
  }
  if (precision < 1) {
    throw std::invalid_argument("precision must be at least 1, got " +
                                std::to_string(precision));
  }
  residue_ = floor_mod(value, modulus());
}

Integer PadicInt::modulus() const { return power(prime_, precision_); }

PadicInt PadicInt::reduce(int precision) const {
  if (precision > precision_) {
    throw std::invalid_argument("cannot raise precision from " + std::to_string(precision_) +
                                " to " + std::to_string(precision));
  }
  return PadicInt(prime_, precision, residue_);
}

PadicInt PadicInt::operator+(const PadicInt& other) const {
  require_same_prime(*this, other);
  return PadicInt(prime_, std::min(precision_, other.precision_), residue_ + other.residue_);
}

PadicInt PadicInt::operator-(const PadicInt& other) const {
  require_same_prime(*this, other);
  return PadicInt(prime_, std::min(precision_, other.precision_), residue_ - other.residue_);
}

PadicInt PadicInt::operator*(const PadicInt& other) const {
  require_same_prime(*this, other);
  return PadicInt(prime_, std::min(precision_, other.precision_), residue_ * other.residue_);
}

PadicInt PadicInt::operator-() const { return PadicInt(prime_, precision_, -residue_); }

PadicUnit::PadicUnit(PadicInt value) : value_(std::move(value)) {
  if (!value_.is_unit()) {
    throw std::domain_error("not a unit: " + value_.residue().str() + " is divisible by " +
                            std::to_string(value_.prime()));
  }
}

PadicUnit unit_inverse(const PadicUnit& u) {
  Integer inv = boost::integer::mod_inverse(u.residue(), u.value().modulus());
  return PadicUnit(u.prime(), u.precision(), inv);
}

PadicUnit unit_pow(const PadicUnit& u, std::int64_t exponent) {
  const PadicUnit base = exponent < 0 ? unit_inverse(u) : u;
  // Unsigned magnitude so that INT64_MIN does not overflow.
  std::uint64_t e = exponent < 0 ? std::uint64_t(0) - std::uint64_t(exponent)
                                 : std::uint64_t(exponent);
  Integer r = boost::multiprecision::powm(base.residue(), Integer(e), u.value().modulus());
  return PadicUnit(u.prime(), u.precision(), r);
}

int legendre_mod8(const PadicInt& sigma2) {
  if (sigma2.prime() != 2) {
    throw std::invalid_argument("modified Legendre symbol needs a 2-adic unit, got prime " +
                                std::to_string(sigma2.prime()));
  }
  if (!sigma2.is_unit()) {
    throw std::domain_error("not a unit: " + sigma2.residue().str() + " is even");
  }
  if (sigma2.precision() < 3) {
    throw std::invalid_argument("modified Legendre symbol needs precision >= 3, got " +
                                std::to_string(sigma2.precision()));
  }
  const int r = static_cast<int>(sigma2.residue() % 8);
  return (r == 1 || r == 7) ? 0 : 1;
}

int legendre_mod8(const PadicUnit& sigma2) { return legendre_mod8(sigma2.value()); }

AdelicUnit::AdelicUnit(const std::vector<PadicUnit>& components) {
  for (const auto& u : components) {
    if (!components_.emplace(u.prime(), u).second) {
      throw std::invalid_argument("duplicate adelic component at prime " +
                                  std::to_string(u.prime()));
    }
  }
}

AdelicUnit AdelicUnit::from_integer(const Integer& n,
                                    const std::map<std::uint64_t, int>& precisions) {
  std::vector<PadicUnit> parts;
  for (const auto& [p, k] : precisions) parts.emplace_back(p, k, n);
  return AdelicUnit(parts);
}

const PadicUnit* AdelicUnit::find(std::uint64_t prime) const {
  auto it = components_.find(prime);
  return it == components_.end() ? nullptr : &it->second;
}

PadicUnit AdelicUnit::at(std::uint64_t prime, int precision) const {
  if (const PadicUnit* u = find(prime)) return *u;
  return PadicUnit::one(prime, precision);
}

AdelicUnit AdelicUnit::operator*(const AdelicUnit& other) const {
  AdelicUnit out = *this;
  for (const auto& [p, u] : other.components_) {
    auto it = out.components_.find(p);
    if (it == out.components_.end()) {
      out.components_.emplace(p, u);
    } else {
      it->second = it->second * u;
    }
  }
  return out;
}

AdelicUnit AdelicUnit::inverse() const {
  AdelicUnit out;
  for (const auto& [p, u] : components_) out.components_.emplace(p, unit_inverse(u));
  return out;
}

}  // namespace galsym
