#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trimaps/gf2field.hpp"
#include "trimaps/linfrac.hpp"
#include "trimaps/mapcore.hpp"

namespace trimaps {

inline constexpr std::size_t kExplicitBladeCap = 2'000'000;

enum class ClassCertificate { kNone, kExplicitClassified, kAlmostSimpleProduct };
std::string_view certificate_name(ClassCertificate c);

/// Output of every construction. When `map` is present, group_order equals its
/// degree and type, chi and orientability agree with values recomputed from it.
struct ConstructionRecord {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::optional<MapTriple> map;
  BigInt group_order;
  MapType type;
  BigInt chi;
  std::optional<bool> orientable;
  ClassCertificate certificate = ClassCertificate::kNone;
  std::optional<WilsonClass> wilson_class;
};

/// {"construction", "params", "group_order", "type", "chi", "orientable", "class"}.
nlohmann::json provenance_json(const ConstructionRecord& record);
/// Exact JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json bigint_to_json(const BigInt& value);

/// Right-regular blade action of <r0, r1, r2>: blades are group elements in
/// FiniteGroup order and blade g goes to g * r_i.
MapTriple map_from_group_triple(const Permutation& r0, const Permutation& r1, const Permutation& r2,
                                std::size_t cap = kExplicitBladeCap);

/// V - E + F = |G| (1/2q - 1/4 + 1/2p) for a regular map of type {p,q}.
BigInt chi_from_type(const BigInt& group_order, const MapType& type);

/// Record for an explicit regular map: invariants recomputed, Sigma-class computed.
ConstructionRecord record_from_map(std::string name, nlohmann::json params, MapTriple map);

// ---- class III maps over L2(2^e) ----

struct L2qGenerators {
  BinaryMatrix r0;
  BinaryMatrix r1;
  BinaryMatrix r2;
};
/// r0 = (1 x; 0 1), r1 = (1 0; 1 1), r2 = (1 x^r; 0 1) with r = 2^(e/3).
L2qGenerators l2q_generators(const FieldElement& x);

/// The default useful generator: t*u with t^3 + t + 1 = 0 and u a root of the
/// standard modulus of degree e/3 when 9 does not divide e (this is t for e = 3);
/// otherwise the least useful generator.
FieldElement auto_useful_generator(unsigned e);

ConstructionRecord build_l2q_class3(unsigned e, std::optional<FieldElement> x = std::nullopt,
                                    std::size_t explicit_cap = kExplicitBladeCap);

/// R^9 = S^9 = T^9 = (RS^3)^3 = (ST^3)^3 = (TR^3)^3 = (SR^3)^7 = (TS^3)^7 = (RT^3)^7 = 1
/// with R = r0r1, S = r2r1, T = r0r2r1.
bool verify_wilson_relations(const MapTriple& m);

// ---- class I seed maps ----

/// r0 = (1,n)(2,n-1)..., r1 = (2,n)(3,n-1)..., r2 = (1,n) on n points.
std::array<Permutation, 3> sn_generators(unsigned n);
ConstructionRecord build_sn_map(unsigned n, std::size_t explicit_cap = kExplicitBladeCap);

enum class AnVariant { kA, kB };
/// Same r0, r1; r2 = (1,n)(3,n-2) for A, (1,2)(n-1,n) for B. Needs n = 1 mod 4, n > 5.
std::array<Permutation, 3> an_generators(unsigned n, AnVariant variant);
ConstructionRecord build_an_map(unsigned n, AnVariant variant, std::size_t explicit_cap = kExplicitBladeCap);

/// r0 = (0 i; i 0), r1 = (i i; 0 -i), r2 = (i 0; 0 -i) in L2(p), i the least
/// square root of -1. Needs p = 1 mod 4, p > 5.
std::array<PrimeMatrix, 3> l2p_generators(std::uint32_t p);
ConstructionRecord build_l2p_map(std::uint32_t p, std::size_t explicit_cap = kExplicitBladeCap);

/// Klein's orientable map of type {3,7}_8 with automorphism group PGL2(7),
/// found by a census of PGL2(7) acting on the projective line.
ConstructionRecord build_klein_map();

// ---- coverings ----

enum class CoverPreset { kGamma02, kGammaStar, kGammaPrime, kEven };
std::string_view cover_preset_name(CoverPreset preset);
CoverPreset parse_cover_preset(std::string_view name);

/// Images of R0, R1, R2 in GF(2)^k, each a k-bit mask.
struct CoverImages {
  unsigned rank = 0;
  std::array<unsigned, 3> images{};
};
CoverImages cover_images(CoverPreset preset);

struct CoverResult {
  MapTriple map;
  /// Orbit size divided by the base degree.
  std::size_t sheets = 0;
};
/// Blades (w, v) with (w, v) r_i = (w r_i, v + images[i]); the constituent of
/// (0, 0), numbered in BFS discovery order.
CoverResult covering_by_character(const MapTriple& m, const CoverImages& images);

// ---- parallel products ----

/// Componentwise action on the product of the blade sets, restricted to the
/// orbit of (0, ..., 0) and numbered in BFS discovery order.
MapTriple parallel_product_explicit(const std::vector<MapTriple>& maps, std::size_t cap = kExplicitBladeCap);
/// Product of m, DP(m) and PD(m).
MapTriple sigma_plus_product(const MapTriple& m, std::size_t cap = kExplicitBladeCap);

/// Which r_i lie in the simple normal subgroup S when |A/S| = 2.
struct ParityVector {
  std::array<bool, 3> in_simple{};
  friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

/// Read off the unique nonzero homomorphism A -> C2: nullopt when A has none,
/// DomainError when there are several (then |A/S| > 2 or A is not almost simple).
std::optional<ParityVector> parity_vector(const MapTriple& m);

enum class SigmaPlusClosure { kGamma, kGamma02, kGammaStar, kGammaPrime };
std::string_view closure_name(SigmaPlusClosure h);
/// The Sigma+-closure of T = Gamma_w, w the set of r_i inside S; nullopt means A = S.
SigmaPlusClosure sigma_plus_closure(const std::optional<ParityVector>& parity);

/// Type, |Aut|, chi and (where settled) orientability of the product of N, DP(N),
/// PD(N) for a class I map N whose automorphism group A is almost simple with
/// simple normal subgroup of order simple_order and |A/S| <= 2.
ConstructionRecord parallel_product_symbolic(const ConstructionRecord& base, const BigInt& simple_order,
                                             const std::optional<ParityVector>& parity);

}  // namespace trimaps
