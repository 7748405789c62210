#include "trimaps/constructions.hpp"

#include <limits>
#include <numeric>

#include "trimaps/census.hpp"

namespace trimaps {

std::string_view certificate_name(ClassCertificate c) {
  switch (c) {
    case ClassCertificate::kNone: return "none";
    case ClassCertificate::kExplicitClassified: return "explicit-classified";
    case ClassCertificate::kAlmostSimpleProduct: return "almost-simple-product";
  }
  return "?";
}

nlohmann::json bigint_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

nlohmann::json provenance_json(const ConstructionRecord& record) {
  nlohmann::json j;
  j["construction"] = record.name;
  j["params"] = record.params;
  j["group_order"] = bigint_to_json(record.group_order);
  j["type"] = {record.type.p, record.type.q, record.type.r};
  j["chi"] = bigint_to_json(record.chi);
  j["orientable"] = record.orientable ? nlohmann::json(*record.orientable) : nlohmann::json(nullptr);
  if (record.certificate == ClassCertificate::kAlmostSimpleProduct) {
    j["class"] = "certified-III";
  } else if (record.wilson_class) {
    j["class"] = wilson_class_name(*record.wilson_class);
  } else {
    j["class"] = nullptr;
  }
  j["certificate"] = certificate_name(record.certificate);
  return j;
}

MapTriple map_from_group_triple(const Permutation& r0, const Permutation& r1, const Permutation& r2,
                                std::size_t cap) {
  const std::array<Permutation, 3> gens{r0, r1, r2};
  const FiniteGroup group(gens, cap);
  MapTriple m(group.right_multiplication(r0), group.right_multiplication(r1), group.right_multiplication(r2));
  validate(m);
  return m;
}

BigInt chi_from_type(const BigInt& group_order, const MapType& type) {
  const BigInt faces2 = BigInt(2) * type.p;
  const BigInt vertices2 = BigInt(2) * type.q;
  ensure(group_order % faces2 == 0 && group_order % vertices2 == 0 && group_order % 4 == 0,
         "group order is not divisible by the face, vertex and edge stabilizers");
  return group_order / vertices2 - group_order / 4 + group_order / faces2;
}

ConstructionRecord record_from_map(std::string name, nlohmann::json params, MapTriple map) {
  validate(map);
  const RegularityReport regularity = is_regular(map);
  ensure(regularity.regular, name + " construction produced a non-regular map");
  ConstructionRecord record;
  record.name = std::move(name);
  record.params = std::move(params);
  record.group_order = BigInt(map.degree());
  record.type = map_type(map);
  record.chi = BigInt(euler_characteristic(map));
  ensure(record.chi == chi_from_type(record.group_order, record.type), "V - E + F disagrees with the type formula");
  record.orientable = orientability(map);
  record.wilson_class = classify(map, RegularityCheck::kAssume).wilson_class;
  record.certificate = ClassCertificate::kExplicitClassified;
  record.map = std::move(map);
  return record;
}

namespace {

bool is_even_permutation(const Permutation& p) {
  const std::array<Permutation, 1> gens{p};
  const std::size_t cycles = orbit_partition(gens, p.degree()).count;
  return (p.degree() - cycles) % 2 == 0;
}

// Explicit map when |G| fits under the cap, otherwise invariants from the
// permutation representation alone.
ConstructionRecord record_from_generators(std::string name, nlohmann::json params,
                                          const std::array<Permutation, 3>& gens, std::size_t explicit_cap) {
  const BigInt order = group_order(gens);
  if (order <= explicit_cap) {
    return record_from_map(std::move(name), std::move(params),
                           map_from_group_triple(gens[0], gens[1], gens[2], explicit_cap));
  }
  ConstructionRecord record;
  record.name = std::move(name);
  record.params = std::move(params);
  record.group_order = order;
  const Permutation r0r1 = gens[0] * gens[1];
  record.type = {order_of(r0r1), order_of(gens[1] * gens[2]), order_of(r0r1 * gens[2])};
  record.chi = chi_from_type(order, record.type);
  const std::array<Permutation, 2> even{r0r1, gens[1] * gens[2]};
  record.orientable = group_order(even) * 2 == order;
  return record;
}

Permutation involution_from_pairs(std::size_t degree, const std::vector<std::pair<Point, Point>>& pairs) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& [a, b] : pairs) {
    images[a] = b;
    images[b] = a;
  }
  return Permutation(std::move(images));
}

// Reflection i <-> shift - i on 0..n-1 (0-indexed), for the i with both ends in range.
Permutation reflection(unsigned n, unsigned shift, unsigned first) {
  std::vector<std::pair<Point, Point>> pairs;
  for (unsigned i = first; i < n; ++i) {
    const unsigned j = shift - i;
    if (i < j && j < n) pairs.emplace_back(i, j);
  }
  return involution_from_pairs(n, pairs);
}

}  // namespace

L2qGenerators l2q_generators(const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  require(spec.has_cubic_subfield(), "the field degree must be divisible by 3");
  const FieldElement one = x.one_like();
  const FieldElement zero = x.zero_like();
  const FieldElement xr = frobenius_power(x, spec.cubic_degree());
  return {BinaryMatrix(one, x, zero, one), BinaryMatrix(one, zero, one, one), BinaryMatrix(one, xr, zero, one)};
}

FieldElement auto_useful_generator(unsigned e) {
  require(e >= 3 && e % 3 == 0 && e <= kMaxEnumerationDegree, "field degree must be a multiple of 3 in 3..24");
  const FieldSpec spec = FieldSpec::standard(e);
  if (e % 9 != 0) {
    const unsigned f = e / 3;
    const FieldElement t = find_root_of(0b1011, spec);
    const FieldElement u = f == 1 ? FieldElement::one(spec) : find_root_of(FieldSpec::standard(f).modulus(), spec);
    return t * u;
  }
  const auto useful = enumerate_useful_generators(spec);
  ensure(!useful.empty(), "no useful generator found");
  return useful.front();
}

ConstructionRecord build_l2q_class3(unsigned e, std::optional<FieldElement> x, std::size_t explicit_cap) {
  require(e >= 3 && e % 3 == 0 && e <= kMaxFieldDegree, "field degree must be a positive multiple of 3");
  const bool automatic = !x.has_value();
  const FieldElement xv = automatic ? auto_useful_generator(e) : *x;
  require(xv.spec().degree() == e, "x lies in a field of the wrong degree");
  require(is_useful_generator(xv), "x is not a useful generator");

  const L2qGenerators gens = l2q_generators(xv);
  const GenerationCheck check = l2q_generation_check(gens.r0, gens.r1, gens.r2);
  ensure(check.generates, "generation check failed for a useful generator: " + check.reason());

  const std::uint64_t n = order_from_trace(xv);
  const BigInt q = BigInt(1) << e;
  const BigInt order = q * (q * q - 1);
  nlohmann::json params{{"e", e}, {"modulus", xv.spec().modulus()}, {"x", xv.bits()},
                        {"x_source", automatic ? (e % 9 != 0 ? "tu" : "least") : "given"}};

  if (order <= explicit_cap) {
    ConstructionRecord record =
        record_from_map("l2q", std::move(params),
                        map_from_group_triple(projective_line_permutation(gens.r0), projective_line_permutation(gens.r1),
                                              projective_line_permutation(gens.r2), explicit_cap));
    ensure(record.group_order == order, "the generators do not generate L2(q)");
    ensure(record.type == MapType{n, n, n}, "map type differs from the order read off the trace");
    ensure(record.chi == chi_formula(order, n), "V - E + F differs from the characteristic formula");
    return record;
  }
  ConstructionRecord record;
  record.name = "l2q";
  record.params = std::move(params);
  record.group_order = order;
  record.type = {n, n, n};
  record.chi = chi_formula(order, n);
  // L2(q) is perfect for q >= 4, so there is no index-2 subgroup.
  record.orientable = false;
  return record;
}

bool verify_wilson_relations(const MapTriple& m) {
  const Permutation R = m.r0() * m.r1();
  const Permutation S = m.r2() * m.r1();
  const Permutation T = m.r0() * m.r2() * m.r1();
  const Permutation R3 = power(R, 3);
  const Permutation S3 = power(S, 3);
  const Permutation T3 = power(T, 3);
  const std::array<Permutation, 9> relators{
      power(R, 9),      power(S, 9),      power(T, 9),      power(R * S3, 3), power(S * T3, 3),
      power(T * R3, 3), power(S * R3, 7), power(T * S3, 7), power(R * T3, 7)};
  for (const auto& w : relators) {
    if (!w.is_identity()) return false;
  }
  return true;
}

std::array<Permutation, 3> sn_generators(unsigned n) {
  require(n >= 3, "n must be at least 3");
  return {reflection(n, n - 1, 0), reflection(n, n, 1), involution_from_pairs(n, {{0, n - 1}})};
}

ConstructionRecord build_sn_map(unsigned n, std::size_t explicit_cap) {
  require(n >= 5, "symmetric group maps need n >= 5");
  const auto gens = sn_generators(n);
  return record_from_generators("sn", {{"n", n}}, gens, n <= 8 ? explicit_cap : 0);
}

std::array<Permutation, 3> an_generators(unsigned n, AnVariant variant) {
  require(n > 5 && n % 4 == 1, "alternating group maps need n = 1 mod 4 and n > 5");
  auto gens = sn_generators(n);
  gens[2] = variant == AnVariant::kA ? involution_from_pairs(n, {{0, n - 1}, {2, n - 3}})
                                     : involution_from_pairs(n, {{0, 1}, {n - 2, n - 1}});
  for (const auto& g : gens) require(is_even_permutation(g), "generators must be even permutations");
  return gens;
}

ConstructionRecord build_an_map(unsigned n, AnVariant variant, std::size_t explicit_cap) {
  const auto gens = an_generators(n, variant);
  ConstructionRecord record = record_from_generators(
      "an", {{"n", n}, {"variant", variant == AnVariant::kA ? "A" : "B"}}, gens, explicit_cap);
  BigInt half_factorial = 1;
  for (unsigned k = 3; k <= n; ++k) half_factorial *= k;
  ensure(record.group_order == half_factorial, "generators do not generate the alternating group");
  return record;
}

std::array<PrimeMatrix, 3> l2p_generators(std::uint32_t p) {
  require(is_prime(p) && p % 4 == 1 && p > 5, "p must be a prime with p = 1 mod 4 and p > 5");
  const PrimeFieldElement i = PrimeFieldElement(p, -1).square_root();
  const PrimeFieldElement zero = i.zero_like();
  return {PrimeMatrix(zero, i, i, zero), PrimeMatrix(i, i, zero, -i), PrimeMatrix(i, zero, zero, -i)};
}

ConstructionRecord build_l2p_map(std::uint32_t p, std::size_t explicit_cap) {
  const auto mats = l2p_generators(p);
  const std::array<Permutation, 3> gens{projective_line_permutation(mats[0]), projective_line_permutation(mats[1]),
                                        projective_line_permutation(mats[2])};
  ConstructionRecord record = record_from_generators("l2p", {{"p", p}}, gens, explicit_cap);
  ensure(record.type.p == 3 && record.type.q == p, "r0r1 and r1r2 must have orders 3 and p");
  ensure(record.group_order == BigInt(p) * (BigInt(p) * p - 1) / 2, "generators do not generate L2(p)");
  return record;
}

ConstructionRecord build_klein_map() {
  CensusQuery query;
  query.generators = pgl2_group_generators(7);
  query.type = MapType{3, 7, 8};
  const CensusResult census = enumerate_maps(query);
  for (const auto& entry : census.entries) {
    if (entry.classification.wilson_class == WilsonClass::kI && entry.invariants.orientable) {
      return record_from_map("klein", {{"group", "PGL2(7)"}, {"type", {3, 7, 8}}}, entry.map);
    }
  }
  throw InvariantViolation("no orientable class I map of type {3,7}_8 on PGL2(7)");
}

std::string_view cover_preset_name(CoverPreset preset) {
  switch (preset) {
    case CoverPreset::kGamma02: return "gamma02";
    case CoverPreset::kGammaStar: return "gamma-star";
    case CoverPreset::kGammaPrime: return "gamma-prime";
    case CoverPreset::kEven: return "even";
  }
  return "?";
}

CoverPreset parse_cover_preset(std::string_view name) {
  for (const auto preset : {CoverPreset::kGamma02, CoverPreset::kGammaStar, CoverPreset::kGammaPrime, CoverPreset::kEven}) {
    if (cover_preset_name(preset) == name) return preset;
  }
  throw DomainError("unknown cover preset '" + std::string(name) + "'");
}

CoverImages cover_images(CoverPreset preset) {
  switch (preset) {
    case CoverPreset::kGamma02: return {1, {0b0, 0b1, 0b0}};
    case CoverPreset::kGammaStar: return {2, {0b01, 0b00, 0b10}};
    case CoverPreset::kGammaPrime: return {3, {0b001, 0b010, 0b100}};
    case CoverPreset::kEven: return {1, {0b1, 0b1, 0b1}};
  }
  throw DomainError("unknown cover preset");
}

CoverResult covering_by_character(const MapTriple& m, const CoverImages& images) {
  validate(m);
  require(images.rank <= 3, "character rank must be at most 3");
  const unsigned sheets = 1u << images.rank;
  for (const unsigned v : images.images) require(v < sheets, "character image outside GF(2)^k");

  const std::size_t total = m.degree() * sheets;
  constexpr Point kUnseen = std::numeric_limits<Point>::max();
  std::vector<Point> index(total, kUnseen);
  std::vector<std::size_t> order;  // encoded (w, v) in discovery order
  order.reserve(total);
  index[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t code = order[head];
    const std::size_t w = code / sheets;
    const std::size_t v = code % sheets;
    for (int i = 0; i < 3; ++i) {
      const std::size_t next = m.r(i)[static_cast<Point>(w)] * std::size_t{sheets} + (v ^ images.images[static_cast<std::size_t>(i)]);
      if (index[next] == kUnseen) {
        index[next] = static_cast<Point>(order.size());
        order.push_back(next);
      }
    }
  }
  std::array<std::vector<Point>, 3> r;
  for (int i = 0; i < 3; ++i) {
    auto& images_i = r[static_cast<std::size_t>(i)];
    images_i.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t w = order[k] / sheets;
      const std::size_t v = order[k] % sheets;
      images_i[k] = index[m.r(i)[static_cast<Point>(w)] * std::size_t{sheets} + (v ^ images.images[static_cast<std::size_t>(i)])];
    }
  }
  MapTriple cover(Permutation(std::move(r[0])), Permutation(std::move(r[1])), Permutation(std::move(r[2])));
  validate(cover);
  return {std::move(cover), order.size() / m.degree()};
}

MapTriple parallel_product_explicit(const std::vector<MapTriple>& maps, std::size_t cap) {
  require(!maps.empty(), "parallel product needs at least one map");
  std::size_t total = 1;
  for (const auto& m : maps) {
    validate(m);
    require(total <= cap / m.degree(), "product of degrees exceeds the explicit blade cap");
    total *= m.degree();
  }
  const std::size_t k = maps.size();
  constexpr Point kUnseen = std::numeric_limits<Point>::max();
  std::vector<Point> index(total, kUnseen);
  std::vector<std::size_t> order;
  std::vector<Point> coords(k);

  // Mixed radix: the last map is the least significant digit.
  auto step = [&](std::size_t code, int i) {
    for (std::size_t j = k; j-- > 0;) {
      coords[j] = static_cast<Point>(code % maps[j].degree());
      code /= maps[j].degree();
    }
    std::size_t next = 0;
    for (std::size_t j = 0; j < k; ++j) next = next * maps[j].degree() + maps[j].r(i)[coords[j]];
    return next;
  };

  index[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i = 0; i < 3; ++i) {
      const std::size_t next = step(order[head], i);
      if (index[next] == kUnseen) {
        index[next] = static_cast<Point>(order.size());
        order.push_back(next);
      }
    }
  }
  std::array<std::vector<Point>, 3> r;
  for (int i = 0; i < 3; ++i) {
    auto& images = r[static_cast<std::size_t>(i)];
    images.resize(order.size());
    for (std::size_t b = 0; b < order.size(); ++b) images[b] = index[step(order[b], i)];
  }
  return {Permutation(std::move(r[0])), Permutation(std::move(r[1])), Permutation(std::move(r[2]))};
}

MapTriple sigma_plus_product(const MapTriple& m, std::size_t cap) {
  return parallel_product_explicit({m, sigma_apply(m, Sigma::kDP), sigma_apply(m, Sigma::kPD)}, cap);
}

std::optional<ParityVector> parity_vector(const MapTriple& m) {
  const auto characters = factoring_characters(m);
  if (characters.size() == 1) return std::nullopt;
  require(characters.size() == 2, "more than one homomorphism to C2: the quotient by S is larger than C2");
  const unsigned c = characters[1];
  ParityVector parity;
  for (std::size_t i = 0; i < 3; ++i) parity.in_simple[i] = ((c >> i) & 1u) == 0;
  return parity;
}

std::string_view closure_name(SigmaPlusClosure h) {
  switch (h) {
    case SigmaPlusClosure::kGamma: return "Gamma";
    case SigmaPlusClosure::kGamma02: return "Gamma02";
    case SigmaPlusClosure::kGammaStar: return "Gamma*";
    case SigmaPlusClosure::kGammaPrime: return "Gamma'";
  }
  return "?";
}

SigmaPlusClosure sigma_plus_closure(const std::optional<ParityVector>& parity) {
  if (!parity) return SigmaPlusClosure::kGamma;
  const auto& in = parity->in_simple;
  require(!(in[0] && in[1] && in[2]), "all generators lie in S, so A = S");
  // Sigma+ orbits of the index-2 subgroups: {G_, G_0, G_2}, {G_1, G_01, G_12}, {G_02}.
  if (in[1]) return SigmaPlusClosure::kGammaStar;
  if (in[0] && in[2]) return SigmaPlusClosure::kGamma02;
  return SigmaPlusClosure::kGammaPrime;
}

ConstructionRecord parallel_product_symbolic(const ConstructionRecord& base, const BigInt& simple_order,
                                             const std::optional<ParityVector>& parity) {
  require(base.certificate == ClassCertificate::kExplicitClassified && base.wilson_class == WilsonClass::kI,
          "base map must be explicitly classified as class I");
  require(simple_order > 0, "simple subgroup order must be positive");
  if (parity) {
    require(base.group_order == 2 * simple_order, "parity vector given but |A| != 2|S|");
  } else {
    require(base.group_order == simple_order, "no parity vector given but |A| != |S|");
  }
  if (base.map) require(parity_vector(*base.map) == parity, "parity vector disagrees with the base map");

  const SigmaPlusClosure h = sigma_plus_closure(parity);
  unsigned index = 1;
  switch (h) {
    case SigmaPlusClosure::kGamma: index = 1; break;
    case SigmaPlusClosure::kGamma02: index = 2; break;
    case SigmaPlusClosure::kGammaStar: index = 4; break;
    case SigmaPlusClosure::kGammaPrime: index = 8; break;
  }
  const std::uint64_t n = std::lcm(std::lcm(base.type.p, base.type.q), base.type.r);

  ConstructionRecord record;
  record.name = "parallel-symbolic";
  nlohmann::json parity_json = nullptr;
  if (parity) parity_json = {parity->in_simple[0], parity->in_simple[1], parity->in_simple[2]};
  record.params = {{"base", base.name},       {"base_params", base.params}, {"simple_order", bigint_to_json(simple_order)},
                   {"parity", parity_json},   {"closure", closure_name(h)}};
  record.group_order = BigInt(index) * simple_order * simple_order * simple_order;
  record.type = {n, n, n};
  record.chi = chi_formula(record.group_order, n);
  if (h == SigmaPlusClosure::kGammaPrime) record.orientable = true;
  if (h == SigmaPlusClosure::kGammaStar) record.orientable = false;
  record.certificate = ClassCertificate::kAlmostSimpleProduct;
  record.wilson_class = WilsonClass::kIII;
  return record;
}

}  // namespace trimaps
