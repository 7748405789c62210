#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "trimaps/gf2field.hpp"
#include "trimaps/permgroup.hpp"

namespace trimaps {

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p (p odd).
class PrimeFieldElement {
 public:
  /// Reduces `value` mod p; throws unless p is an odd prime.
  PrimeFieldElement(std::uint32_t p, std::int64_t value);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  PrimeFieldElement zero_like() const { return {p_, 0u, Unchecked{}}; }
  PrimeFieldElement one_like() const { return {p_, 1u, Unchecked{}}; }
  PrimeFieldElement pow(std::uint64_t exponent) const;
  PrimeFieldElement inverse() const;
  /// Euler's criterion; zero counts as a square.
  bool is_square() const;
  /// Least r in 0..p-1 with r^2 = this; throws for non-squares.
  PrimeFieldElement square_root() const;
  /// Representative in -(p-1)/2 .. (p-1)/2.
  std::int64_t signed_value() const;

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b);
  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b);
  friend PrimeFieldElement operator-(const PrimeFieldElement& a);
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b);
  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

 private:
  struct Unchecked {};
  PrimeFieldElement(std::uint32_t p, std::uint32_t value, Unchecked) : p_(p), value_(value) {}
  std::uint32_t p_;
  std::uint32_t value_;
};

// Uniform access used by the matrix template: field size, the element with a
// given point index (bit value / residue), and the inverse of that numbering.
inline std::uint64_t field_size(const FieldElement& x) { return x.spec().order(); }
inline std::uint64_t field_size(const PrimeFieldElement& x) { return x.modulus(); }
inline std::uint64_t field_index(const FieldElement& x) { return x.bits(); }
inline std::uint64_t field_index(const PrimeFieldElement& x) { return x.value(); }
inline FieldElement field_element_like(const FieldElement& like, std::uint64_t index) {
  return {like.spec(), index};
}
inline PrimeFieldElement field_element_like(const PrimeFieldElement& like, std::uint64_t index) {
  return {like.modulus(), static_cast<std::int64_t>(index)};
}

/// Rescales a 2x2 matrix (row-major a, b, c, d) to the canonical representative
/// of its scalar class. Characteristic 2: determinant 1 (square roots are
/// unique). Odd characteristic: determinant 1 with the first nonzero entry in
/// 1..(p-1)/2 when the determinant is a square, otherwise first nonzero entry 1.
void normalize_projective(std::array<FieldElement, 4>& m);
void normalize_projective(std::array<PrimeFieldElement, 4>& m);

/// A 2x2 invertible matrix over a finite field, up to scalar multiples.
///
/// Products read left to right in the same sense as permutations: the
/// projective line action sends a point z to A^-1(z), so that the permutation
/// of A*B is the permutation of A followed by that of B.
template <class Scalar>
class ProjMatrix2 {
 public:
  ProjMatrix2(Scalar a, Scalar b, Scalar c, Scalar d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    require(!determinant().is_zero(), "singular matrix has no projective class");
    normalize_projective(m_);
  }

  static ProjMatrix2 identity(const Scalar& like) {
    return {like.one_like(), like.zero_like(), like.zero_like(), like.one_like()};
  }

  const Scalar& a() const { return m_[0]; }
  const Scalar& b() const { return m_[1]; }
  const Scalar& c() const { return m_[2]; }
  const Scalar& d() const { return m_[3]; }
  const std::array<Scalar, 4>& entries() const { return m_; }

  Scalar determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  ProjMatrix2 inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }
  bool is_identity() const { return *this == identity(m_[0]); }

  /// Projective equality; representatives are canonical, so entrywise.
  friend bool operator==(const ProjMatrix2&, const ProjMatrix2&) = default;

  friend ProjMatrix2 operator*(const ProjMatrix2& x, const ProjMatrix2& y) {
    return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
            x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d()};
  }

 private:
  std::array<Scalar, 4> m_;
};

using BinaryMatrix = ProjMatrix2<FieldElement>;
using PrimeMatrix = ProjMatrix2<PrimeFieldElement>;

template <class Scalar>
ProjMatrix2<Scalar> pm_mul(const ProjMatrix2<Scalar>& x, const ProjMatrix2<Scalar>& y) {
  return x * y;
}

template <class Scalar>
bool pm_eq(const ProjMatrix2<Scalar>& x, const ProjMatrix2<Scalar>& y) {
  return x == y;
}

template <class Scalar>
ProjMatrix2<Scalar> pm_power(const ProjMatrix2<Scalar>& x, std::uint64_t exponent) {
  auto result = ProjMatrix2<Scalar>::identity(x.a());
  auto base = x;
  while (exponent != 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

template <class Scalar>
bool is_involution(const ProjMatrix2<Scalar>& x) {
  return !x.is_identity() && (x * x).is_identity();
}

/// Trace of the determinant-1 representative (in characteristic 2 the trace
/// of a projective class is well defined).
inline FieldElement pm_trace(const BinaryMatrix& x) { return x.a() + x.d(); }

/// Odd characteristic: the trace is only defined up to sign; `value` is the
/// representative in 0..(p-1)/2 of the pair {t, -t}.
struct SignedTrace {
  std::uint32_t value;
  std::uint32_t modulus;
  /// True when t or -t equals v mod p.
  bool matches(std::int64_t v) const;
  friend bool operator==(const SignedTrace&, const SignedTrace&) = default;
};
SignedTrace pm_trace(const PrimeMatrix& x);

/// t_n = Tr(A^n) for A = (0 1; 1 x): t_0 = 0, t_1 = x, t_n = t_(n-2) + x t_(n-1).
FieldElement trace_power(const FieldElement& x, std::uint64_t n);

/// Order of A = (0 1; 1 x) in L2(2^e). Uses A^n = (d_(n-2) d_(n-1); d_(n-1) d_n)
/// with d_0 = 1, d_1 = x and the same recurrence, stopping at the first n with
/// d_(n-1) = 0 and d_n = 1.
std::uint64_t order_from_trace(const FieldElement& x);

/// Least n >= 1 with A^n projectively trivial, by repeated multiplication.
/// The search is capped at q+1 (element orders never exceed it).
template <class Scalar>
std::uint64_t matrix_order(const ProjMatrix2<Scalar>& x) {
  const std::uint64_t cap = field_size(x.a()) + 1;
  auto power = x;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (power.is_identity()) return n;
    power = power * x;
  }
  throw InvariantViolation("matrix order exceeds q+1; input is not a unimodular class");
}

/// Action on the projective line: points 0..q-1 are field elements by index,
/// point q is infinity. Point z goes to A^-1(z) under z -> (az+b)/(cz+d), which
/// coincides with A(z) for involutions and makes the map a homomorphism for
/// left-to-right composition.
template <class Scalar>
Permutation projective_line_permutation(const ProjMatrix2<Scalar>& x) {
  const auto inv = x.inverse();
  const std::uint64_t q = field_size(x.a());
  std::vector<Point> images(q + 1);
  auto apply = [&](const Scalar& num, const Scalar& den) -> Point {
    if (den.is_zero()) return static_cast<Point>(q);
    return static_cast<Point>(field_index(num * den.inverse()));
  };
  for (std::uint64_t i = 0; i < q; ++i) {
    const Scalar z = field_element_like(x.a(), i);
    images[i] = apply(inv.a() * z + inv.b(), inv.c() * z + inv.d());
  }
  images[q] = apply(inv.a(), inv.c());
  return Permutation(std::move(images));
}

enum class GenerationFailure {
  kNone,
  kSylowNormalizer,   // r0 and r1 commute
  kNoKleinFourGroup,  // <r0, r2> is not a Klein four-group
  kSubfieldTrace,     // trace of r0 r1 lies in a proper subfield
};

struct GenerationCheck {
  bool generates;
  GenerationFailure failure;
  std::string reason() const;
};

/// Decides whether three involutions of L2(2^e) (with r0 r2 = r2 r0) generate
/// the whole group by excluding each family of maximal subgroups in turn.
GenerationCheck l2q_generation_check(const BinaryMatrix& r0, const BinaryMatrix& r1, const BinaryMatrix& r2);

}  // namespace trimaps
