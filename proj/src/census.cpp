#include "trimaps/census.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "trimaps/constructions.hpp"
#include "trimaps/map_io.hpp"

namespace trimaps {

namespace {

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc{} && end == text.data() + text.size(), "bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldElement primitive_element(const FieldSpec& spec) {
  const std::uint64_t group = spec.order() - 1;
  const auto factors = prime_factors(group);
  for (std::uint64_t bits = 1; bits < spec.order(); ++bits) {
    const FieldElement w(spec, bits);
    if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) { return !w.pow(group / r).is_one(); })) {
      return w;
    }
  }
  throw InvariantViolation("no primitive element");
}

PrimeFieldElement primitive_root(std::uint32_t p) {
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    const PrimeFieldElement x(p, g);
    if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) { return !x.pow((p - 1) / r).is_one(); })) {
      return x;
    }
  }
  throw InvariantViolation("no primitive root");
}

template <class Scalar>
std::vector<Permutation> line_permutations(const std::vector<ProjMatrix2<Scalar>>& mats) {
  std::vector<Permutation> out;
  for (const auto& m : mats) out.push_back(projective_line_permutation(m));
  return out;
}

std::vector<Permutation> generators_from_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
  if (j.is_object() && j.contains("generators")) j = j["generators"];
  require(j.is_array() && !j.empty(), path + ": expected a non-empty array of permutations");
  std::vector<Permutation> gens;
  for (const auto& g : j) gens.push_back(permutation_from_json(g));
  for (const auto& g : gens) require(g.degree() == gens.front().degree(), path + ": generators differ in degree");
  return gens;
}

}  // namespace

std::vector<Permutation> l2q_group_generators(unsigned e) {
  require(e >= 2 && e <= 13, "l2q census degree must lie in 2..13");
  const FieldSpec spec = FieldSpec::standard(e);
  const FieldElement w = primitive_element(spec);
  const FieldElement one = FieldElement::one(spec);
  const FieldElement zero = FieldElement::zero(spec);
  return line_permutations<FieldElement>(
      {BinaryMatrix(w, zero, zero, w.inverse()), BinaryMatrix(one, one, zero, one), BinaryMatrix(zero, one, one, zero)});
}

std::vector<Permutation> l2p_group_generators(std::uint32_t p) {
  require(is_prime(p) && p > 3, "l2p census needs a prime p > 3");
  const PrimeFieldElement g = primitive_root(p);
  const PrimeFieldElement one = g.one_like();
  const PrimeFieldElement zero = g.zero_like();
  return line_permutations<PrimeFieldElement>(
      {PrimeMatrix(g, zero, zero, g.inverse()), PrimeMatrix(one, one, zero, one), PrimeMatrix(zero, -one, one, zero)});
}

std::vector<Permutation> pgl2_group_generators(std::uint32_t p) {
  require(is_prime(p) && p > 2, "PGL2 needs an odd prime");
  const PrimeFieldElement g = primitive_root(p);
  const PrimeFieldElement one = g.one_like();
  const PrimeFieldElement zero = g.zero_like();
  return line_permutations<PrimeFieldElement>(
      {PrimeMatrix(g, zero, zero, one), PrimeMatrix(one, one, zero, one), PrimeMatrix(zero, one, one, zero)});
}

std::vector<Permutation> symmetric_group_generators(unsigned n) {
  require(n >= 2, "symmetric group needs n >= 2");
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})};
}

std::vector<Permutation> alternating_group_generators(unsigned n) {
  require(n >= 3, "alternating group needs n >= 3");
  std::vector<Permutation> out;
  for (Point i = 0; i + 2 < n; ++i) out.push_back(Permutation::from_cycles(n, {{i, i + 1, i + 2}}));
  return out;
}

std::vector<Permutation> parse_group_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  require(colon != std::string_view::npos, "group spec must look like kind:value");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view value = spec.substr(colon + 1);
  if (kind == "l2q") return l2q_group_generators(parse_unsigned(value, "field degree"));
  if (kind == "l2p") return l2p_group_generators(parse_unsigned(value, "prime"));
  if (kind == "sym") return symmetric_group_generators(parse_unsigned(value, "degree"));
  if (kind == "alt") return alternating_group_generators(parse_unsigned(value, "degree"));
  if (kind == "file") return generators_from_file(std::string(value));
  throw DomainError("unknown group kind '" + std::string(kind) + "'");
}

namespace {

using BucketKey = std::array<std::uint64_t, 10>;

BucketKey bucket_key(const MapType& type, const MapTriple& m) {
  const MapCounts c = counts(m);
  const Multiplicities mult = multiplicities(m);
  return {type.p, type.q, type.r, c.vertices, c.edges, c.faces, c.petrie_polygons,
          orientability(m) ? 1u : 0u, mult.vertex, mult.face};
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

CensusResult enumerate_maps(const CensusQuery& query) {
  require(!query.generators.empty(), "census needs group generators");
  require(group_order(query.generators) <= query.cap, "group order exceeds the census cap");
  const FiniteGroup group(query.generators, query.cap);
  const std::size_t n = group.size();

  std::vector<Permutation> involutions;
  for (std::size_t i = 1; i < n; ++i) {
    Permutation g = group.element(i);
    if ((g * g).is_identity()) involutions.push_back(std::move(g));
  }
  std::vector<Permutation> blade_action;
  blade_action.reserve(involutions.size());
  for (const auto& g : involutions) blade_action.push_back(group.right_multiplication(g));

  CensusResult result;
  result.group_order = n;
  std::map<BucketKey, std::vector<std::size_t>> buckets;
  std::vector<char> seen(n);
  std::vector<Point> queue;

  const std::size_t k = involutions.size();
  for (std::size_t i0 = 0; i0 < k; ++i0) {
    for (std::size_t i2 = 0; i2 < k; ++i2) {
      if (i2 == i0) continue;
      const Permutation r0r2 = involutions[i0] * involutions[i2];
      if (r0r2 != involutions[i2] * involutions[i0]) continue;
      for (std::size_t i1 = 0; i1 < k; ++i1) {
        const Permutation r0r1 = involutions[i0] * involutions[i1];
        const MapType type{order_of(r0r1), order_of(involutions[i1] * involutions[i2]),
                           order_of(r0r1 * involutions[i2])};
        if (query.type && type != *query.type) continue;

        // <r0, r1, r2> = G iff the identity's orbit under right multiplication is everything.
        std::fill(seen.begin(), seen.end(), 0);
        queue.assign(1, 0);
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          for (const std::size_t g : {i0, i1, i2}) {
            const Point next = blade_action[g][queue[head]];
            if (!seen[next]) {
              seen[next] = 1;
              queue.push_back(next);
            }
          }
        }
        if (queue.size() != n) continue;
        ++result.generating_triples;

        MapTriple m(blade_action[i0], blade_action[i1], blade_action[i2]);
        auto& bucket = buckets[bucket_key(type, m)];
        const bool known = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t j) {
          return are_isomorphic(m, result.entries[j].map, true);
        });
        if (known) continue;
        bucket.push_back(result.entries.size());
        CensusEntry entry{std::move(m), {involutions[i0], involutions[i1], involutions[i2]}, {}, {}, 0};
        result.entries.push_back(std::move(entry));
      }
    }
  }

  for (auto& entry : result.entries) {
    entry.invariants = analyze(entry.map);
    entry.classification = classify(entry.map, RegularityCheck::kAssume);
  }

  // Sigma-orbits among the entries; images excluded by the type filter are skipped.
  const std::size_t count = result.entries.size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t j = 0; j < count; ++j) {
    for (const Sigma s : {Sigma::kD, Sigma::kP}) {
      const MapTriple image = sigma_apply(result.entries[j].map, s);
      const MapType type = map_type(image);
      for (std::size_t other = 0; other < count; ++other) {
        if (result.entries[other].invariants.type != type) continue;
        if (are_isomorphic(image, result.entries[other].map, true)) {
          parent[find_root(parent, j)] = find_root(parent, other);
          break;
        }
      }
    }
  }
  std::map<std::size_t, std::size_t> orbit_ids;
  for (std::size_t j = 0; j < count; ++j) {
    const auto [it, inserted] = orbit_ids.emplace(find_root(parent, j), orbit_ids.size());
    result.entries[j].sigma_orbit = it->second;
  }
  result.sigma_orbits = orbit_ids.size();
  return result;
}

L213Solution canonical_l213(const L213Solution& s) {
  auto residue = [](std::int64_t v) { return ((v % 13) + 13) % 13; };
  L213Solution best{13, 13, 13};
  for (const std::int64_t sa : {1, -1}) {
    for (const std::int64_t sbc : {1, -1}) {
      for (const bool swap : {false, true}) {
        const L213Solution candidate{residue(sa * s.a), residue(sbc * (swap ? s.c : s.b)),
                                     residue(sbc * (swap ? s.b : s.c))};
        best = std::min(best, candidate);
      }
    }
  }
  return best;
}

std::array<PrimeMatrix, 3> l213_generators(const L213Solution& s) {
  auto f = [](std::int64_t v) { return PrimeFieldElement(13, v); };
  return {PrimeMatrix(f(5), f(0), f(0), f(-5)), PrimeMatrix(f(s.a), f(s.b), f(s.c), f(-s.a)),
          PrimeMatrix(f(0), f(1), f(-1), f(0))};
}

MapTriple l213_map(const L213Solution& s) {
  const auto mats = l213_generators(s);
  return map_from_group_triple(projective_line_permutation(mats[0]), projective_line_permutation(mats[1]),
                               projective_line_permutation(mats[2]));
}

std::vector<L213Solution> solve_l213_traces() {
  std::set<L213Solution> found;
  for (std::int64_t a = 0; a < 13; ++a) {
    for (std::int64_t b = 0; b < 13; ++b) {
      for (std::int64_t c = 0; c < 13; ++c) {
        if ((a * a + b * c + 1) % 13 != 0) continue;
        const L213Solution s{a, b, c};
        const auto [r0, r1, r2] = l213_generators(s);
        const PrimeMatrix r0r1 = r0 * r1;
        if (matrix_order(r0r1) == 7 && matrix_order(r1 * r2) == 7 && matrix_order(r0r1 * r2) == 7) {
          found.insert(canonical_l213(s));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::string> exclusion_screen(const MapTriple& m) {
  require(is_regular(m).regular, "exclusion screen needs a regular map");
  std::vector<std::string> reasons;
  const Multiplicities mult = multiplicities(m);
  if (mult.vertex != mult.face || mult.vertex_loop != mult.face_loop) reasons.emplace_back("mV != mF");
  if (are_isomorphic(m, sigma_apply(m, Sigma::kD), true)) reasons.emplace_back("self-dual");

  // The characters through G/G' cut out the preimage of G'; it must be one of the
  // Sigma+-invariant subgroups Gamma, Gamma02, Gamma*, Gamma'.
  unsigned character_set = 0;
  for (const unsigned c : factoring_characters(m)) character_set |= 1u << c;
  constexpr std::array<unsigned, 4> kInvariant{
      0b00000001,  // {0}: G perfect
      0b00000101,  // {0, R1}
      0b00110011,  // {0, R0, R2, R0+R2}
      0b11111111,  // everything
  };
  if (std::find(kInvariant.begin(), kInvariant.end(), character_set) == kInvariant.end()) {
    reasons.emplace_back("abelianization pattern");
  }
  return reasons;
}

}  // namespace trimaps
