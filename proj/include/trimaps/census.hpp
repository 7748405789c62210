#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trimaps/linfrac.hpp"
#include "trimaps/mapcore.hpp"

namespace trimaps {

inline constexpr std::size_t kCensusGroupCap = 10'000;

/// Generators for the census group grammar: l2q:<e>, l2p:<p>, sym:<n>, alt:<n>,
/// file:<path> (a JSON array of image arrays, or {"generators": [...]}).
std::vector<Permutation> parse_group_spec(std::string_view spec);

std::vector<Permutation> l2q_group_generators(unsigned e);
std::vector<Permutation> l2p_group_generators(std::uint32_t p);
/// PGL2(p) on the projective line.
std::vector<Permutation> pgl2_group_generators(std::uint32_t p);
std::vector<Permutation> symmetric_group_generators(unsigned n);
std::vector<Permutation> alternating_group_generators(unsigned n);

struct CensusQuery {
  std::vector<Permutation> generators;
  std::optional<MapType> type;
  std::size_t cap = kCensusGroupCap;
};

struct CensusEntry {
  MapTriple map;
  /// The generating triple (r0, r1, r2) in the permutation representation of G.
  std::array<Permutation, 3> witness;
  InvariantsReport invariants;
  ClassificationReport classification;
  std::size_t sigma_orbit = 0;
};

struct CensusResult {
  std::vector<CensusEntry> entries;
  std::size_t sigma_orbits = 0;
  std::size_t group_order = 0;
  std::size_t generating_triples = 0;
};

/// All regular maps with automorphism group G up to isomorphism: triples of
/// involutions (r0, r1, r2) with r0 r2 = r2 r0, r0 != r2, generating G, taken
/// in element order and kept when not isomorphic to an earlier entry.
CensusResult enumerate_maps(const CensusQuery& query);

/// (a, b, c) with r1 = (a b; c -a) in L2(13), r0 = (5 0; 0 -5), r2 = (0 1; -1 0).
struct L213Solution {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  friend bool operator==(const L213Solution&, const L213Solution&) = default;
  friend auto operator<=>(const L213Solution&, const L213Solution&) = default;
};

/// Least representative (residues 0..12, lexicographic) under sign change and
/// conjugation by <r0, r2>, which act as a -> -a and b <-> c.
L213Solution canonical_l213(const L213Solution& s);
std::array<PrimeMatrix, 3> l213_generators(const L213Solution& s);
MapTriple l213_map(const L213Solution& s);

/// Solutions of a^2 + bc = -1 for which r0r1, r1r2, r0r1r2 (traces -3a, c-b,
/// -5(b+c) up to sign) all have order 7, one canonical representative each.
std::vector<L213Solution> solve_l213_traces();

/// Reasons a regular map of type {n,n}_n cannot be in class III:
/// "mV != mF", "self-dual", "abelianization pattern".
std::vector<std::string> exclusion_screen(const MapTriple& m);

}  // namespace trimaps
