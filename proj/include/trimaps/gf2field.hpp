#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "trimaps/common.hpp"

namespace trimaps {

/// Binary polynomials are stored as bit-vectors: bit i is the coefficient of X^i.
using BinaryPoly = std::uint64_t;

/// Largest extension degree accepted by the field model.
inline constexpr unsigned kMaxFieldDegree = 31;
/// Largest degree for which exhaustive searches over the field are allowed.
inline constexpr unsigned kMaxEnumerationDegree = 24;

int poly_degree(BinaryPoly p);
BinaryPoly poly_mod(BinaryPoly a, BinaryPoly m);
/// Trial division against every polynomial of degree <= deg(p)/2.
bool is_irreducible(BinaryPoly p);

/// GF(2^e) in a fixed polynomial basis. Two specs are the same field exactly
/// when degree and modulus agree.
class FieldSpec {
 public:
  /// Field defined by the lexicographically least irreducible polynomial of
  /// degree e (so GF(8) is F2[t]/(t^3+t+1)).
  static FieldSpec standard(unsigned degree);

  FieldSpec(unsigned degree, BinaryPoly modulus);

  unsigned degree() const { return degree_; }
  BinaryPoly modulus() const { return modulus_; }
  std::uint64_t order() const { return std::uint64_t{1} << degree_; }

  bool has_cubic_subfield() const { return degree_ % 3 == 0; }
  /// f = e/3; throws unless 3 divides e.
  unsigned cubic_degree() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  unsigned degree_;
  BinaryPoly modulus_;
};

/// Element of GF(2^e). Coefficients are always fully reduced.
class FieldElement {
 public:
  FieldElement(const FieldSpec& spec, std::uint64_t bits);

  static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }
  /// Class of the indeterminate X.
  static FieldElement generator(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  FieldElement zero_like() const { return zero(spec_); }
  FieldElement one_like() const { return one(spec_); }
  FieldElement pow(std::uint64_t exponent) const;
  FieldElement inverse() const;
  FieldElement square_root() const;

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(const FieldElement& a) { return a; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.bits_ == b.bits_;
  }
  /// Ordering by bit-vector value; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  FieldSpec spec_;
  std::uint64_t bits_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);

/// a^(2^k), by k squarings.
FieldElement frobenius_power(const FieldElement& a, unsigned k);

/// x + x^r + x^(r^2) with r = 2^(e/3); lands in the subfield of order r.
FieldElement trace_to_cubic_subfield(const FieldElement& x);

/// True iff x lies in no proper subfield of GF(2^e).
bool generates_field(const FieldElement& x);

/// Generates the field and has zero trace to the cubic subfield.
bool is_useful_generator(const FieldElement& x);

/// Every useful generator of the field, ascending by bit value.
std::vector<FieldElement> enumerate_useful_generators(const FieldSpec& spec);

int moebius(std::uint64_t n);

/// Closed-form count of useful generators in GF(2^e):
///   sum over c | e' of mu(c) 2^(2e/3c), minus 1 when e is a power of 3,
/// where e = 3^i e' with e' coprime to 3.
BigInt count_useful_generators(unsigned e);

/// Value of a binary polynomial at a field element (Horner).
FieldElement evaluate(BinaryPoly poly, const FieldElement& x);

/// Least root (by bit value) of poly in the field; throws if there is none.
FieldElement find_root_of(BinaryPoly poly, const FieldSpec& spec);

}  // namespace trimaps
