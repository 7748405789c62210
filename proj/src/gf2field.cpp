#include "trimaps/gf2field.hpp"

#include <bit>
#include <string>

namespace trimaps {

int poly_degree(BinaryPoly p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

BinaryPoly poly_mod(BinaryPoly a, BinaryPoly m) {
  require(m != 0, "polynomial division by zero");
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

bool is_irreducible(BinaryPoly p) {
  const int d = poly_degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  if ((p & 1) == 0) return false;  // X divides p
  const BinaryPoly limit = BinaryPoly{1} << (d / 2 + 1);
  for (BinaryPoly divisor = 0b11; divisor < limit; ++divisor) {
    if (poly_mod(p, divisor) == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::standard(unsigned degree) {
  require(degree >= 1 && degree <= kMaxFieldDegree,
          "field degree must lie in 1.." + std::to_string(kMaxFieldDegree));
  const BinaryPoly lead = BinaryPoly{1} << degree;
  for (BinaryPoly tail = 1; tail < lead; ++tail) {
    if (is_irreducible(lead | tail)) return FieldSpec(degree, lead | tail);
  }
  throw InvariantViolation("no irreducible polynomial of degree " + std::to_string(degree));
}

FieldSpec::FieldSpec(unsigned degree, BinaryPoly modulus) : degree_(degree), modulus_(modulus) {
  require(degree >= 1 && degree <= kMaxFieldDegree,
          "field degree must lie in 1.." + std::to_string(kMaxFieldDegree));
  require(poly_degree(modulus) == static_cast<int>(degree),
          "modulus degree does not match field degree");
  require(is_irreducible(modulus), "modulus is not irreducible over GF(2)");
}

unsigned FieldSpec::cubic_degree() const {
  require(has_cubic_subfield(), "field degree " + std::to_string(degree_) + " is not divisible by 3");
  return degree_ / 3;
}

FieldElement::FieldElement(const FieldSpec& spec, std::uint64_t bits) : spec_(spec), bits_(bits) {
  require(bits < spec.order(), "field element has coefficients beyond the field degree");
}

FieldElement FieldElement::generator(const FieldSpec& spec) {
  // In GF(2) the indeterminate reduces to 1.
  return {spec, poly_mod(0b10, spec.modulus())};
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require(spec_ == other.spec_, "field elements belong to different fields");
  bits_ ^= other.bits_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require(spec_ == other.spec_, "field elements belong to different fields");
  const unsigned e = spec_.degree();
  const std::uint64_t top = std::uint64_t{1} << e;
  std::uint64_t a = bits_;
  std::uint64_t b = other.bits_;
  std::uint64_t product = 0;
  while (b != 0) {
    if (b & 1) product ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= spec_.modulus();
  }
  bits_ = product;
  return *this;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = one_like();
  FieldElement base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  require(!is_zero(), "zero has no multiplicative inverse");
  return pow(spec_.order() - 2);
}

FieldElement FieldElement::square_root() const {
  // Squaring is an automorphism of order e, so its inverse is the (e-1)-th power.
  return frobenius_power(*this, spec_.degree() - 1);
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement fe_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement frobenius_power(const FieldElement& a, unsigned k) {
  FieldElement result = a;
  for (unsigned i = 0; i < k; ++i) result *= result;
  return result;
}

FieldElement trace_to_cubic_subfield(const FieldElement& x) {
  const unsigned f = x.spec().cubic_degree();
  const FieldElement xr = frobenius_power(x, f);
  return x + xr + frobenius_power(xr, f);
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

bool generates_field(const FieldElement& x) {
  const unsigned e = x.spec().degree();
  if (e == 1) return x.bits() == 1;  // GF(2) = <1>; zero generates nothing new
  for (const std::uint64_t p : prime_divisors(e)) {
    if (frobenius_power(x, static_cast<unsigned>(e / p)) == x) return false;
  }
  return true;
}

bool is_useful_generator(const FieldElement& x) {
  return trace_to_cubic_subfield(x).is_zero() && generates_field(x);
}

std::vector<FieldElement> enumerate_useful_generators(const FieldSpec& spec) {
  spec.cubic_degree();
  require(spec.degree() <= kMaxEnumerationDegree,
          "field too large for exhaustive enumeration; use count_useful_generators");
  std::vector<FieldElement> useful;
  for (std::uint64_t bits = 0; bits < spec.order(); ++bits) {
    FieldElement x(spec, bits);
    if (is_useful_generator(x)) useful.push_back(x);
  }
  return useful;
}

int moebius(std::uint64_t n) {
  require(n >= 1, "Moebius function is defined on positive integers");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt count_useful_generators(unsigned e) {
  require(e >= 3 && e % 3 == 0, "useful generators need a degree divisible by 3");
  unsigned coprime_part = e;
  while (coprime_part % 3 == 0) coprime_part /= 3;

  BigInt total = 0;
  for (unsigned c = 1; c <= coprime_part; ++c) {
    if (coprime_part % c != 0) continue;
    const int mu = moebius(c);
    if (mu == 0) continue;
    const BigInt term = BigInt(1) << (2 * e / (3 * c));
    total += mu > 0 ? term : BigInt(-term);
  }
  if (coprime_part == 1) total -= 1;
  return total;
}

FieldElement evaluate(BinaryPoly poly, const FieldElement& x) {
  FieldElement value = x.zero_like();
  for (int i = poly_degree(poly); i >= 0; --i) {
    value *= x;
    if ((poly >> i) & 1) value += x.one_like();
  }
  return value;
}

FieldElement find_root_of(BinaryPoly poly, const FieldSpec& spec) {
  require(poly_degree(poly) >= 1, "polynomial must have positive degree");
  require(spec.degree() <= kMaxEnumerationDegree, "field too large for exhaustive root search");
  for (std::uint64_t bits = 0; bits < spec.order(); ++bits) {
    FieldElement x(spec, bits);
    if (evaluate(poly, x).is_zero()) return x;
  }
  throw DomainError("polynomial has no root in GF(2^" + std::to_string(spec.degree()) + ")");
}

}  // namespace trimaps
