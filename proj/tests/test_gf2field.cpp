#include <doctest.h>

#include <random>
#include <set>

#include "trimaps/gf2field.hpp"

using namespace trimaps;

namespace {

// Schoolbook carry-less product followed by bitwise long division.
std::uint64_t naive_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, unsigned e) {
  unsigned __int128 product = 0;
  for (unsigned i = 0; i < 64; ++i) {
    if ((b >> i) & 1) product ^= static_cast<unsigned __int128>(a) << i;
  }
  for (int bit = 127; bit >= static_cast<int>(e); --bit) {
    if ((product >> bit) & 1) product ^= static_cast<unsigned __int128>(modulus) << (bit - static_cast<int>(e));
  }
  return static_cast<std::uint64_t>(product);
}

bool naive_irreducible(std::uint64_t p) {
  const int d = 63 - __builtin_clzll(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; q < (std::uint64_t{1} << (d / 2 + 1)); ++q) {
    std::uint64_t r = p;
    const int dq = 63 - __builtin_clzll(q);
    if (dq < 1 || dq > d / 2) continue;
    for (int bit = d; bit >= dq; --bit) {
      if ((r >> bit) & 1) r ^= q << (bit - dq);
    }
    if (r == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("irreducibility agrees with naive trial division up to degree 10") {
  for (std::uint64_t p = 2; p < 2048; ++p) CHECK(is_irreducible(p) == naive_irreducible(p));
}

TEST_CASE("standard moduli are the least irreducible polynomials") {
  CHECK(FieldSpec::standard(3).modulus() == 0b1011);
  CHECK(FieldSpec::standard(2).modulus() == 0b111);
  CHECK(FieldSpec::standard(6).modulus() == 0b1000011);
  // Degree 1 uses x + 1 so that the reduction of x is a nonzero generator.
  CHECK(FieldSpec::standard(1).modulus() == 0b11);
  for (unsigned e = 2; e <= 12; ++e) {
    std::uint64_t least = std::uint64_t{1} << e;
    while (!naive_irreducible(least)) ++least;
    CHECK(FieldSpec::standard(e).modulus() == least);
  }
  CHECK_THROWS_AS(FieldSpec(3, 0b1111), DomainError);
  CHECK_THROWS_AS(FieldSpec(0, 0b1), DomainError);
}

TEST_CASE("multiplication matches the naive product") {
  std::mt19937_64 rng(7);
  for (unsigned e : {3u, 6u, 9u, 12u, 24u, 31u}) {
    const FieldSpec spec = FieldSpec::standard(e);
    for (int k = 0; k < 200; ++k) {
      const std::uint64_t a = rng() & (spec.order() - 1);
      const std::uint64_t b = rng() & (spec.order() - 1);
      CHECK((FieldElement(spec, a) * FieldElement(spec, b)).bits() == naive_mul(a, b, spec.modulus(), e));
      CHECK(fe_mul(FieldElement(spec, a), FieldElement(spec, b)).bits() == naive_mul(a, b, spec.modulus(), e));
      CHECK(fe_add(FieldElement(spec, a), FieldElement(spec, b)).bits() == (a ^ b));
    }
  }
}

TEST_CASE("inverse, square root and Frobenius") {
  const FieldSpec spec = FieldSpec::standard(9);
  for (std::uint64_t a = 1; a < spec.order(); ++a) {
    const FieldElement x(spec, a);
    CHECK((x * x.inverse()).is_one());
    CHECK(x.square_root() * x.square_root() == x);
    CHECK(frobenius_power(x, 9) == x);
    CHECK(frobenius_power(x, 2) == x * x * x * x);
  }
  CHECK_THROWS_AS(FieldElement::zero(spec).inverse(), DomainError);
  CHECK_THROWS_AS(FieldElement(spec, 1) + FieldElement(FieldSpec::standard(6), 1), DomainError);
  CHECK_THROWS_AS(FieldElement(spec, spec.order()), DomainError);
}

TEST_CASE("trace to the cubic subfield lands in it") {
  const FieldSpec spec = FieldSpec::standard(6);
  for (std::uint64_t a = 0; a < spec.order(); ++a) {
    const FieldElement t = trace_to_cubic_subfield(FieldElement(spec, a));
    CHECK(frobenius_power(t, spec.cubic_degree()) == t);
  }
  CHECK_THROWS_AS(FieldSpec::standard(4).cubic_degree(), DomainError);
}

TEST_CASE("GF(8): the useful generators are t, t^2, t^4") {
  const FieldSpec spec = FieldSpec::standard(3);
  const FieldElement t = FieldElement::generator(spec);
  std::set<std::uint64_t> expected{t.bits(), (t * t).bits(), t.pow(4).bits()};
  std::set<std::uint64_t> got;
  for (const auto& x : enumerate_useful_generators(spec)) got.insert(x.bits());
  CHECK(got == expected);
  CHECK(is_useful_generator(t));
  CHECK_FALSE(is_useful_generator(t + FieldElement::one(spec)));
}

TEST_CASE("trace kernel has 2^(2e/3) elements") {
  for (unsigned e : {3u, 6u, 9u, 12u}) {
    const FieldSpec spec = FieldSpec::standard(e);
    std::uint64_t kernel = 0;
    for (std::uint64_t a = 0; a < spec.order(); ++a) kernel += trace_to_cubic_subfield(FieldElement(spec, a)).is_zero();
    CHECK(kernel == (std::uint64_t{1} << (2 * e / 3)));
  }
}

TEST_CASE("closed-form count equals enumeration") {
  // Oracle: x useful iff trace zero and not in a proper subfield (x^(2^d) != x for d | e, d < e).
  for (unsigned e : {3u, 6u, 9u, 12u}) {
    const FieldSpec spec = FieldSpec::standard(e);
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < spec.order(); ++a) {
      const FieldElement x(spec, a);
      if (!trace_to_cubic_subfield(x).is_zero()) continue;
      bool proper = false;
      for (unsigned d = 1; d < e; ++d) proper = proper || (e % d == 0 && frobenius_power(x, d) == x);
      count += !proper;
    }
    CHECK(count_useful_generators(e) == count);
    CHECK(enumerate_useful_generators(spec).size() == count);
  }
  CHECK(count_useful_generators(3) == 3);
  CHECK(count_useful_generators(6) == 12);
  CHECK(count_useful_generators(9) == 63);
  CHECK(count_useful_generators(12) == 240);
}

TEST_CASE("dual pair counts") {
  const std::array<std::pair<unsigned, int>, 5> expected{{{3, 1}, {6, 2}, {9, 7}, {12, 20}, {15, 68}}};
  for (const auto& [e, pairs] : expected) {
    CHECK(count_useful_generators(e) % e == 0);
    CHECK(count_useful_generators(e) / e == pairs);
  }
  CHECK(count_useful_generators(27) == (BigInt(1) << 18) - 1);
}

TEST_CASE("Moebius function") {
  const std::array<int, 13> mu{0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (std::uint64_t n = 1; n < mu.size(); ++n) CHECK(moebius(n) == mu[n]);
}

TEST_CASE("roots and evaluation") {
  const FieldSpec spec = FieldSpec::standard(6);
  const FieldElement t = find_root_of(0b1011, spec);
  CHECK((t * t * t + t + FieldElement::one(spec)).is_zero());
  CHECK(evaluate(0b1011, t).is_zero());
  const FieldElement u = find_root_of(0b111, spec);
  CHECK((u * u + u + FieldElement::one(spec)).is_zero());
  CHECK_THROWS_AS(find_root_of(0b1011, FieldSpec::standard(4)), DomainError);
}

TEST_CASE("generates_field") {
  const FieldSpec spec = FieldSpec::standard(6);
  CHECK_FALSE(generates_field(find_root_of(0b1011, spec)));
  CHECK_FALSE(generates_field(find_root_of(0b111, spec)));
  CHECK(generates_field(FieldElement::generator(spec)));
  CHECK(generates_field(FieldElement::one(FieldSpec::standard(1))));
}
