#include "trimaps/linfrac.hpp"

namespace trimaps {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeFieldElement::PrimeFieldElement(std::uint32_t p, std::int64_t value) : p_(p), value_(0) {
  require(p > 2 && is_prime(p), "prime field modulus must be an odd prime");
  const std::int64_t r = value % static_cast<std::int64_t>(p);
  value_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  require(a.p_ == b.p_, "prime field elements have different moduli");
  return {a.p_, static_cast<std::uint32_t>((std::uint64_t{a.value_} + b.value_) % a.p_),
          PrimeFieldElement::Unchecked{}};
}

PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  require(a.p_ == b.p_, "prime field elements have different moduli");
  return {a.p_, static_cast<std::uint32_t>((std::uint64_t{a.value_} + a.p_ - b.value_) % a.p_),
          PrimeFieldElement::Unchecked{}};
}

PrimeFieldElement operator-(const PrimeFieldElement& a) {
  return {a.p_, a.value_ == 0 ? 0u : a.p_ - a.value_, PrimeFieldElement::Unchecked{}};
}

PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  require(a.p_ == b.p_, "prime field elements have different moduli");
  return {a.p_, static_cast<std::uint32_t>((std::uint64_t{a.value_} * b.value_) % a.p_),
          PrimeFieldElement::Unchecked{}};
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t exponent) const {
  PrimeFieldElement result = one_like();
  PrimeFieldElement base = *this;
  while (exponent != 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  require(!is_zero(), "zero has no multiplicative inverse");
  return pow(p_ - 2);
}

bool PrimeFieldElement::is_square() const { return is_zero() || pow((p_ - 1) / 2).is_one(); }

PrimeFieldElement PrimeFieldElement::square_root() const {
  for (std::uint32_t r = 0; r < p_; ++r) {
    const PrimeFieldElement candidate{p_, r, Unchecked{}};
    if (candidate * candidate == *this) return candidate;
  }
  throw DomainError(std::to_string(value_) + " is not a square mod " + std::to_string(p_));
}

std::int64_t PrimeFieldElement::signed_value() const {
  return value_ <= p_ / 2 ? std::int64_t{value_} : std::int64_t{value_} - p_;
}

namespace {

template <class Scalar>
void scale(std::array<Scalar, 4>& m, const Scalar& factor) {
  for (auto& entry : m) entry = entry * factor;
}

template <class Scalar>
const Scalar& first_nonzero(const std::array<Scalar, 4>& m) {
  for (const auto& entry : m) {
    if (!entry.is_zero()) return entry;
  }
  throw InvariantViolation("zero matrix");
}

}  // namespace

void normalize_projective(std::array<FieldElement, 4>& m) {
  const FieldElement det = m[0] * m[3] + m[1] * m[2];
  scale(m, det.square_root().inverse());
}

void normalize_projective(std::array<PrimeFieldElement, 4>& m) {
  const PrimeFieldElement det = m[0] * m[3] - m[1] * m[2];
  if (det.is_square()) {
    scale(m, det.inverse().square_root());
    if (first_nonzero(m).value() > m[0].modulus() / 2) scale(m, -m[0].one_like());
  } else {
    scale(m, first_nonzero(m).inverse());
  }
}

bool SignedTrace::matches(std::int64_t v) const {
  const std::int64_t p = modulus;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return r == value || (p - r) % p == value;
}

SignedTrace pm_trace(const PrimeMatrix& x) {
  const PrimeFieldElement t = x.a() + x.d();
  const std::uint32_t p = t.modulus();
  const std::uint32_t v = t.value() <= p / 2 ? t.value() : p - t.value();
  return {v, p};
}

FieldElement trace_power(const FieldElement& x, std::uint64_t n) {
  FieldElement previous = x.zero_like();  // t_0
  if (n == 0) return previous;
  FieldElement current = x;  // t_1
  for (std::uint64_t k = 2; k <= n; ++k) {
    FieldElement next = previous + x * current;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

std::uint64_t order_from_trace(const FieldElement& x) {
  const std::uint64_t cap = x.spec().order() + 1;
  FieldElement previous = x.one_like();  // d_0
  FieldElement current = x;              // d_1
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (previous.is_zero() && current.is_one()) return n;
    FieldElement next = previous + x * current;
    previous = std::move(current);
    current = std::move(next);
  }
  throw InvariantViolation("companion matrix order exceeds q+1");
}

std::string GenerationCheck::reason() const {
  switch (failure) {
    case GenerationFailure::kNone:
      return "generates L2(q)";
    case GenerationFailure::kSylowNormalizer:
      return "r0 and r1 commute, so all three lie in a Sylow 2-normalizer";
    case GenerationFailure::kNoKleinFourGroup:
      return "<r0, r2> is not a Klein four-group, so a dihedral maximal subgroup is possible";
    case GenerationFailure::kSubfieldTrace:
      return "trace of r0 r1 lies in a proper subfield";
  }
  return "unknown";
}

GenerationCheck l2q_generation_check(const BinaryMatrix& r0, const BinaryMatrix& r1, const BinaryMatrix& r2) {
  require(is_involution(r0) && is_involution(r1) && is_involution(r2), "generators must be involutions");
  require(r0 * r2 == r2 * r0, "r0 and r2 must commute");
  if (r0 * r1 == r1 * r0) return {false, GenerationFailure::kSylowNormalizer};
  if (r0 == r2) return {false, GenerationFailure::kNoKleinFourGroup};
  if (!generates_field(pm_trace(r0 * r1))) return {false, GenerationFailure::kSubfieldTrace};
  return {true, GenerationFailure::kNone};
}

}  // namespace trimaps
