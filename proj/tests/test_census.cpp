#include <doctest.h>

#include <algorithm>

#include "trimaps/census.hpp"
#include "trimaps/constructions.hpp"

using namespace trimaps;

namespace {

const CensusResult& l213_census() {
  static const CensusResult result = enumerate_maps({l2p_group_generators(13), MapType{7, 7, 7}, kCensusGroupCap});
  return result;
}

const CensusResult& l28_census() {
  static const CensusResult result = enumerate_maps({l2q_group_generators(3), std::nullopt, kCensusGroupCap});
  return result;
}

bool has_reason(const std::vector<std::string>& reasons, const std::string& reason) {
  return std::find(reasons.begin(), reasons.end(), reason) != reasons.end();
}

// Every Sigma-image of every entry is isomorphic to some entry (or fails the filter).
void check_sigma_closed(const CensusResult& result, const std::optional<MapType>& filter) {
  for (const auto& entry : result.entries) {
    for (Sigma s : kSigmaElements) {
      const MapTriple image = sigma_apply(entry.map, s);
      if (filter && map_type(image) != *filter) continue;
      const bool found = std::any_of(result.entries.begin(), result.entries.end(),
                                     [&](const CensusEntry& e) { return are_isomorphic(image, e.map, true); });
      CHECK(found);
    }
  }
}

}  // namespace

TEST_CASE("S4 census matches a brute-force oracle") {
  const std::vector<Permutation> gens = symmetric_group_generators(4);
  const std::vector<Permutation> elements = elements_of(gens);
  std::vector<Permutation> involutions;
  for (const auto& g : elements) {
    if (!g.is_identity() && (g * g).is_identity()) involutions.push_back(g);
  }
  // All triples, no ordering tricks; isomorphism tried at every root.
  std::vector<MapTriple> classes;
  for (const auto& a0 : involutions) {
    for (const auto& a2 : involutions) {
      if (a0 == a2 || a0 * a2 != a2 * a0) continue;
      for (const auto& a1 : involutions) {
        const std::vector<Permutation> triple{a0, a1, a2};
        if (group_order(triple) != 24) continue;
        const FiniteGroup group(triple);
        const MapTriple m(group.right_multiplication(a0), group.right_multiplication(a1),
                          group.right_multiplication(a2));
        const bool seen = std::any_of(classes.begin(), classes.end(),
                                      [&](const MapTriple& c) { return are_isomorphic(c, m, false); });
        if (!seen) classes.push_back(m);
      }
    }
  }
  const CensusResult result = enumerate_maps({gens, std::nullopt, kCensusGroupCap});
  CHECK(result.group_order == 24);
  CHECK(result.entries.size() == classes.size());
  for (const auto& c : classes) {
    const bool found = std::any_of(result.entries.begin(), result.entries.end(),
                                   [&](const CensusEntry& e) { return are_isomorphic(e.map, c, false); });
    CHECK(found);
  }
  for (const auto& e : result.entries) {
    const MapCounts& k = e.invariants.counts;
    CHECK(e.invariants.chi ==
          static_cast<std::int64_t>(k.vertices) - static_cast<std::int64_t>(k.edges) + static_cast<std::int64_t>(k.faces));
    CHECK(k.edges * 4 == e.map.degree());
  }
  check_sigma_closed(result, std::nullopt);
}

TEST_CASE("census entries are pairwise non-isomorphic with generating witnesses") {
  const CensusResult& result = l28_census();
  CHECK(result.group_order == 504);
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const auto& w = result.entries[i].witness;
    CHECK(group_order(std::vector<Permutation>(w.begin(), w.end())) == 504);
    CHECK(w[0] * w[2] == w[2] * w[0]);
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(result.entries[i].map, result.entries[j].map, true));
  }
}

TEST_CASE("L2(8): class III maps are exactly the type (9,9,9) dual pair") {
  const CensusResult& all = l28_census();
  std::size_t class3 = 0;
  for (const auto& e : all.entries) {
    if (e.classification.wilson_class != WilsonClass::kIII) continue;
    ++class3;
    CHECK(e.invariants.type == MapType{9, 9, 9});
    CHECK(exclusion_screen(e.map).empty());
  }
  CHECK(class3 == 2);
  check_sigma_closed(all, std::nullopt);

  const CensusResult filtered = enumerate_maps({l2q_group_generators(3), MapType{9, 9, 9}, kCensusGroupCap});
  REQUIRE(filtered.entries.size() == 2);
  CHECK(filtered.sigma_orbits == 1);
  const MapTriple w = *build_l2q_class3(3).map;
  const bool direct = are_isomorphic(filtered.entries[0].map, w, true);
  CHECK(direct != are_isomorphic(filtered.entries[1].map, w, true));
  CHECK(are_isomorphic(filtered.entries[direct ? 1 : 0].map, sigma_apply(w, Sigma::kD), true));
}

TEST_CASE("L2(13) type (7,7,7) census") {
  const CensusResult& result = l213_census();
  REQUIRE(result.entries.size() == 4);
  CHECK(result.sigma_orbits == 2);
  std::size_t class2 = 0, class4 = 0, self_dual = 0, unscreened = 0;
  for (const auto& e : result.entries) {
    class2 += e.classification.wilson_class == WilsonClass::kII;
    class4 += e.classification.wilson_class == WilsonClass::kIV;
    const bool sd = are_isomorphic(e.map, sigma_apply(e.map, Sigma::kD), true);
    if (e.classification.wilson_class == WilsonClass::kII) self_dual += sd;
    const auto reasons = exclusion_screen(e.map);
    CHECK(has_reason(reasons, "self-dual") == sd);
    // The non-self-dual pair passes every screen; only the full analysis excludes it.
    unscreened += reasons.empty();
    CHECK(e.invariants.chi == -117);
  }
  CHECK(unscreened == 2);
  CHECK(class2 == 3);
  CHECK(class4 == 1);
  CHECK(self_dual == 1);
  check_sigma_closed(result, MapType{7, 7, 7});
}

TEST_CASE("L2(13) trace equations") {
  const auto solutions = solve_l213_traces();
  REQUIRE(solutions.size() == 4);
  const L213Solution m4 = canonical_l213({2, 1, -5});
  const L213Solution m1 = canonical_l213({6, 4, -6});
  CHECK(std::count(solutions.begin(), solutions.end(), m4) == 1);
  CHECK(std::count(solutions.begin(), solutions.end(), m1) == 1);
  for (const auto& s : solutions) {
    CHECK((s.a * s.a + s.b * s.c + 1) % 13 == 0);
    CHECK(canonical_l213(s) == s);
    CHECK(canonical_l213({-s.a, -s.b, -s.c}) == s);
    CHECK(canonical_l213({-s.a, s.c, s.b}) == s);
  }
  const auto g4 = l213_generators(m4);
  CHECK(pm_trace(g4[0] * g4[1]).matches(6));
  CHECK(pm_trace(g4[1] * g4[2]).matches(6));
  CHECK(pm_trace(g4[0] * g4[1] * g4[2]).matches(6));
  const auto g1 = l213_generators(m1);
  CHECK(pm_trace(g1[0] * g1[1]).matches(5));
  CHECK(pm_trace(g1[1] * g1[2]).matches(3));
  CHECK(pm_trace(g1[0] * g1[1] * g1[2]).matches(3));

  CHECK(classify(l213_map(m4)).wilson_class == WilsonClass::kIV);
  CHECK(classify(l213_map(m1)).wilson_class == WilsonClass::kII);
  // The four solutions are the four census maps.
  const CensusResult& result = l213_census();
  for (const auto& entry : result.entries) {
    std::size_t matches = 0;
    for (const auto& s : solutions) matches += are_isomorphic(l213_map(s), entry.map, true);
    CHECK(matches == 1);
  }
}

TEST_CASE("abelianization screen") {
  // The tetrahedron's group S4 has only the sign character, which is not Sigma+-invariant.
  const CensusResult s4 = enumerate_maps({symmetric_group_generators(4), MapType{3, 3, 4}, kCensusGroupCap});
  REQUIRE(s4.entries.size() == 1);
  CHECK(has_reason(exclusion_screen(s4.entries[0].map), "abelianization pattern"));
  CHECK(s4.entries[0].classification.wilson_class != WilsonClass::kIII);

  // Sound on every small-group map: anything screened out is indeed not class III.
  for (const auto& spec : {"sym:4", "sym:5", "alt:5", "l2q:3"}) {
    for (const auto& e : enumerate_maps({parse_group_spec(spec), std::nullopt, kCensusGroupCap}).entries) {
      if (e.classification.wilson_class == WilsonClass::kIII) CHECK(exclusion_screen(e.map).empty());
    }
  }
  CHECK(exclusion_screen(*build_l2q_class3(3).map).empty());
  // Wilson-map covers with Sigma+-invariant kernels pass the character screen.
  const MapTriple w = *build_l2q_class3(3).map;
  for (CoverPreset p : {CoverPreset::kGamma02, CoverPreset::kGammaStar, CoverPreset::kGammaPrime}) {
    CHECK(exclusion_screen(covering_by_character(w, cover_images(p)).map).empty());
  }
  CHECK(has_reason(exclusion_screen(covering_by_character(w, cover_images(CoverPreset::kEven)).map),
                   "abelianization pattern"));
}

TEST_CASE("group specs") {
  CHECK(group_order(parse_group_spec("l2q:3")) == 504);
  CHECK(group_order(parse_group_spec("l2p:13")) == 1092);
  CHECK(group_order(parse_group_spec("sym:5")) == 120);
  CHECK(group_order(parse_group_spec("alt:6")) == 360);
  CHECK(group_order(pgl2_group_generators(7)) == 336);
  CHECK_THROWS_AS(parse_group_spec("foo:3"), DomainError);
  CHECK_THROWS_AS(parse_group_spec("l2p:9"), DomainError);
  CHECK_THROWS_AS(parse_group_spec("sym"), DomainError);
  CHECK_THROWS_AS(enumerate_maps({symmetric_group_generators(8), std::nullopt, kCensusGroupCap}), DomainError);
  // A group without generating involution triples has an empty census.
  CHECK(enumerate_maps({l2p_group_generators(7), std::nullopt, kCensusGroupCap}).entries.empty());
}
