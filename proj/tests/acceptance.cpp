// End-to-end acceptance run: one PASS/FAIL line per criterion, each with a time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trimaps/census.hpp"
#include "trimaps/cli.hpp"
#include "trimaps/constructions.hpp"

using namespace trimaps;
using nlohmann::json;

namespace {

// Every explicit regular map produced along the way, for the property suite.
std::vector<MapTriple> g_pool;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures_.push_back(s.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::ostream& operator<<(std::ostream& os, const MapType& t) {
  return os << "(" << t.p << "," << t.q << "," << t.r << ")";
}

json cli_json(std::vector<std::string> args, Check& check) {
  args.insert(args.begin(), {"--format", "json"});
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  check.equal(code, 0, "exit code of trimaps " + args[2]);
  return code == 0 ? json::parse(out.str()) : json{};
}

bool fixed_point_free(const Permutation& p) { return is_fixed_point_free(p); }

// ---- criteria ----

void wilson_map(Check& check) {
  const json record = cli_json({"construct", "l2q", "--e", "3"}, check);
  check.equal(record.value("group_order", 0), 504, "|Aut|");
  check.expect(record.value("type", json()) == json::array({9, 9, 9}), "type (9,9,9)");
  check.equal(record.value("chi", 0), -70, "chi");
  check.expect(record.value("orientable", json()) == false, "non-orientable");
  check.expect(record.value("class", json()) == "III", "class III");

  const MapTriple m = *build_l2q_class3(3).map;
  check.expect(is_regular(m).automorphisms == 504, "regular with 504 automorphisms");
  check.expect(verify_wilson_relations(m), "Wilson relations");
  const MapTriple dual = sigma_apply(m, Sigma::kD);
  check.expect(classify(dual).wilson_class == WilsonClass::kIII, "dual is class III");
  check.expect(!are_isomorphic(m, dual, true), "dual not isomorphic");
  g_pool.push_back(m);
  g_pool.push_back(dual);
}

void useful_counts(Check& check) {
  for (unsigned e : {3u, 6u, 9u, 12u}) {
    const FieldSpec spec = FieldSpec::standard(e);
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < spec.order(); ++a) {
      const FieldElement x(spec, a);
      if (!trace_to_cubic_subfield(x).is_zero()) continue;
      bool proper = false;
      for (unsigned d = 1; d < e && !proper; ++d) proper = e % d == 0 && frobenius_power(x, d) == x;
      count += !proper;
    }
    check.equal(count_useful_generators(e), BigInt(count), "N_e vs enumeration, e=" + std::to_string(e));
  }
  const std::vector<std::pair<unsigned, int>> pairs{{3, 1}, {6, 2}, {9, 7}, {12, 20}, {15, 68}};
  for (const auto& [e, want] : pairs) {
    check.equal(count_useful_generators(e) / e, BigInt(want), "dual pairs, e=" + std::to_string(e));
  }
}

void gf64_pair(Check& check) {
  const FieldSpec spec = FieldSpec::standard(6);
  const FieldElement t = find_root_of(0b1011, spec), u = find_root_of(0b111, spec);
  const FieldElement one = FieldElement::one(spec);
  const FieldElement x1 = t * u, x2 = t * t + t * u;
  check.equal(order_from_trace(x1), 65u, "order for tu");
  check.equal(order_from_trace(x2), 63u, "order for t^2+tu");
  check.expect(trace_power(x1, 13) == u + one, "t_13 = u+1");
  check.expect(trace_power(x2, 7) == t * t + t, "t_7 = t^2+t");
  const ConstructionRecord a = build_l2q_class3(6, x1, 0), b = build_l2q_class3(6, x2, 0);
  check.equal(a.chi, BigInt(-61488), "chi for tu");
  check.equal(b.chi, BigInt(-61360), "chi for t^2+tu");
  check.equal(a.type, MapType{65, 65, 65}, "type for tu");
  check.equal(b.type, MapType{63, 63, 63}, "type for t^2+tu");
}

void galois_invariance(Check& check) {
  const FieldSpec spec = FieldSpec::standard(3);
  const FieldElement t = FieldElement::generator(spec);
  const MapTriple m1 = *build_l2q_class3(3, t).map;
  const MapTriple m2 = *build_l2q_class3(3, t.pow(2)).map;
  const MapTriple m4 = *build_l2q_class3(3, t.pow(4)).map;
  check.expect(are_isomorphic(m1, m2, true), "M(t) = M(t^2)");
  check.expect(are_isomorphic(m2, m4, true), "M(t^2) = M(t^4)");
  const auto xs = enumerate_useful_generators(spec);
  check.equal(xs.size(), std::size_t{3}, "three useful generators");
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      const MapTriple a = *build_l2q_class3(3, x).map;
      const MapTriple b = sigma_apply(*build_l2q_class3(3, y).map, Sigma::kD);
      check.expect(!are_isomorphic(a, b, true), "M(x) not D(M(x'))");
    }
  }
}

void coverings(Check& check) {
  const MapTriple w = *build_l2q_class3(3).map;
  struct Row {
    CoverPreset preset;
    std::size_t degree;
    std::int64_t chi;
    bool orientable;
  };
  for (const Row& row : {Row{CoverPreset::kGamma02, 1008, -196, false}, Row{CoverPreset::kGammaStar, 2016, -392, false},
                         Row{CoverPreset::kGammaPrime, 4032, -784, true}}) {
    const std::string name(cover_preset_name(row.preset));
    const CoverResult cover = covering_by_character(w, cover_images(row.preset));
    const ConstructionRecord r = record_from_map("cover", {}, cover.map);
    check.equal(cover.map.degree(), row.degree, name + " degree");
    check.equal(r.chi, BigInt(row.chi), name + " chi");
    check.expect(r.orientable == row.orientable, name + " orientability");
    check.equal(r.type, MapType{18, 18, 18}, name + " type");
    check.expect(r.wilson_class == WilsonClass::kIII, name + " class III");
    g_pool.push_back(cover.map);
  }
}

void explicit_product(Check& check) {
  const ConstructionRecord base = build_sn_map(5);
  const MapTriple product = sigma_plus_product(*base.map);
  const ConstructionRecord r = record_from_map("parallel", {}, product);
  check.equal(product.degree(), std::size_t{864000}, "degree");
  check.equal(r.type, MapType{60, 60, 60}, "type");
  check.equal(r.chi, BigInt(-201600), "chi");
  check.expect(r.orientable == false, "non-orientable");
  check.expect(are_isomorphic(product, sigma_apply(product, Sigma::kDP), true), "Sigma+-invariant");

  const ConstructionRecord s = parallel_product_symbolic(base, 60, parity_vector(*base.map));
  check.equal(s.type, r.type, "symbolic type");
  check.equal(s.chi, r.chi, "symbolic chi");
  check.equal(s.group_order, r.group_order, "symbolic |Aut|");
  check.expect(s.orientable == r.orientable, "symbolic orientability");
  g_pool.push_back(product);
}

void symbolic_products(Check& check) {
  auto run = [&](const ConstructionRecord& base, std::size_t native, const BigInt& simple) {
    check.expect(base.map.has_value() && base.map->degree() == native,
                 base.name + " explicit at degree " + std::to_string(native));
    check.expect(base.wilson_class == WilsonClass::kI, base.name + " class I");
    if (base.map) g_pool.push_back(*base.map);
    return parallel_product_symbolic(base, simple, base.map ? parity_vector(*base.map) : std::nullopt);
  };
  const ConstructionRecord klein = run(build_klein_map(), 336, 168);
  check.equal(klein.chi, BigInt(-9257472), "klein chi");
  check.equal(klein.group_order, BigInt(336) * 336 * 336, "klein |Aut|");
  check.expect(klein.orientable == true, "klein orientable");

  const ConstructionRecord l2p = run(build_l2p_map(13), 1092, 1092);
  check.equal(l2p.type, MapType{273, 273, 273}, "L2(13) type");
  check.equal(l2p.chi, BigInt(-320772816), "L2(13) chi");

  const ConstructionRecord a = run(build_an_map(9, AnVariant::kA), 181440, 181440);
  check.equal(a.chi, BigInt("-1327353495552000"), "A9 variant A chi");
  const ConstructionRecord b = run(build_an_map(9, AnVariant::kB), 181440, 181440);
  check.equal(b.chi, BigInt("-1483791586099200"), "A9 variant B chi");
}

void census_l28(Check& check) {
  const CensusResult r = enumerate_maps({l2q_group_generators(3), MapType{9, 9, 9}, kCensusGroupCap});
  check.equal(r.entries.size(), std::size_t{2}, "map count");
  check.equal(r.sigma_orbits, std::size_t{1}, "Sigma-orbits");
  for (const auto& e : r.entries) {
    check.expect(e.classification.wilson_class == WilsonClass::kIII, "class III");
    g_pool.push_back(e.map);
  }
  if (r.entries.size() == 2) {
    check.expect(are_isomorphic(r.entries[1].map, sigma_apply(r.entries[0].map, Sigma::kD), true), "dual pair");
  }
}

void census_l213(Check& check) {
  const CensusResult r = enumerate_maps({l2p_group_generators(13), MapType{7, 7, 7}, kCensusGroupCap});
  check.equal(r.entries.size(), std::size_t{4}, "map count");
  std::map<std::size_t, std::vector<const CensusEntry*>> orbits;
  for (const auto& e : r.entries) {
    orbits[e.sigma_orbit].push_back(&e);
    g_pool.push_back(e.map);
  }
  std::multiset<std::size_t> sizes;
  for (const auto& [id, members] : orbits) {
    sizes.insert(members.size());
    const WilsonClass want = members.size() == 3 ? WilsonClass::kII : WilsonClass::kIV;
    std::size_t self_dual = 0;
    for (const auto* e : members) {
      check.expect(e->classification.wilson_class == want, "orbit class");
      self_dual += are_isomorphic(e->map, sigma_apply(e->map, Sigma::kD), true);
    }
    if (members.size() == 3) check.equal(self_dual, std::size_t{1}, "one self-dual map in the class II orbit");
  }
  check.expect(sizes == std::multiset<std::size_t>{1, 3}, "orbit sizes 3 + 1");

  const std::vector<L213Solution> expected{{6, 4, -6}, {1, 5, -3}, {1, 1, -2}, {2, 1, -5}};
  std::set<L213Solution> want;
  for (const auto& s : expected) want.insert(canonical_l213(s));
  const auto got = solve_l213_traces();
  check.expect(std::set<L213Solution>(got.begin(), got.end()) == want && got.size() == 4, "trace solutions");
  const std::vector<std::array<int, 3>> traces{{5, 3, 3}, {3, 5, 3}, {3, 3, 5}, {6, 6, 6}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto g = l213_generators(expected[i]);
    check.expect(pm_trace(g[0] * g[1]).matches(traces[i][0]) && pm_trace(g[1] * g[2]).matches(traces[i][1]) &&
                     pm_trace(g[0] * g[1] * g[2]).matches(traces[i][2]),
                 "trace pattern of solution " + std::to_string(i + 1));
  }
}

void property_suites(Check& check) {
  const MapTriple w = *build_l2q_class3(3).map;
  for (Sigma s : kSigmaElements) {
    for (Sigma t : kSigmaElements) {
      check.expect(sigma_apply(sigma_apply(w, s), t) == sigma_apply(w, s * t), "Sigma table");
    }
  }

  for (const MapTriple& m : g_pool) {
    const MapCounts c = counts(m);
    const MapType type = map_type(m);
    const std::int64_t vef = static_cast<std::int64_t>(c.vertices) - static_cast<std::int64_t>(c.edges) +
                             static_cast<std::int64_t>(c.faces);
    check.equal(chi_from_type(m.degree(), type), BigInt(vef), "chi formula vs V-E+F");
    check.equal(c.edges * 4, m.degree(), "E = N/4");
    check.expect(fixed_point_free(m.r0()) && fixed_point_free(m.r1()) && fixed_point_free(m.r2()) &&
                     fixed_point_free(m.r0() * m.r2()),
                 "fixed-point-free involutions");
    const WilsonClass k = classify(m, RegularityCheck::kAssume).wilson_class;
    if (k == WilsonClass::kIII || k == WilsonClass::kIV) {
      check.expect(type.p == type.q && type.q == type.r, "p = q = r for class III/IV");
      if (orientability(m)) check.expect(type.p % 2 == 0, "n even when orientable");
    }
  }

  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 200; ++k) {
    const unsigned e = 3 + static_cast<unsigned>(rng() % 8);
    const FieldSpec spec = FieldSpec::standard(e);
    const FieldElement x(spec, rng() & (spec.order() - 1));
    const BinaryMatrix a(x.zero_like(), x.one_like(), x.one_like(), x);
    check.equal(order_from_trace(x), matrix_order(a), "order from trace vs matrix order");
  }

  std::vector<MapTriple> a5;
  for (auto& e : enumerate_maps({alternating_group_generators(5), std::nullopt, kCensusGroupCap}).entries) {
    a5.push_back(e.map);
  }
  const auto l28 = enumerate_maps({l2q_group_generators(3), MapType{9, 9, 9}, kCensusGroupCap});
  check.equal(a5.size(), std::size_t{3}, "A5 maps");
  if (a5.size() == 3 && !l28.entries.empty()) {
    check.equal(parallel_product_explicit({a5[0], a5[1]}).degree(), std::size_t{60 * 60}, "A5^2 orbit");
    check.equal(parallel_product_explicit(a5).degree(), std::size_t{60 * 60 * 60}, "A5^3 orbit");
    check.equal(parallel_product_explicit({a5[0], l28.entries[0].map}).degree(), std::size_t{60 * 504},
                "A5 x L2(8) orbit");
  }
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "L2(8) class III map", 5, wilson_map},
      {2, "useful generator counts", 30, useful_counts},
      {3, "GF(64) pair", 5, gf64_pair},
      {4, "Galois invariance", 10, galois_invariance},
      {5, "coverings of the L2(8) map", 60, coverings},
      {6, "explicit Sigma+ product of the S5 map", 120, explicit_product},
      {7, "symbolic Sigma+ products", 180, symbolic_products},
      {8, "census of L2(8), type (9,9,9)", 120, census_l28},
      {9, "census of L2(13), type (7,7,7)", 180, census_l213},
      {10, "property suites", 300, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& err) {
      check.expect(false, std::string("exception: ") + err.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) check.expect(false, "over time budget");
    const bool pass = check.failures().empty();
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.3f s / %.0f s)", seconds, c.budget_seconds);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << " " << timing << "\n";
    for (const auto& f : check.failures()) std::cout << "       " << f << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
