#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trimaps/common.hpp"
#include "trimaps/permgroup.hpp"

namespace trimaps {

/// A map given by its blade set {0..N-1} and the three involutions r0, r1, r2
/// (r_i changes the i-dimensional part of a blade). Nothing is checked on
/// construction beyond equal degrees; see validate().
class MapTriple {
 public:
  MapTriple(Permutation r0, Permutation r1, Permutation r2);

  std::size_t degree() const { return r_[0].degree(); }
  const Permutation& r0() const { return r_[0]; }
  const Permutation& r1() const { return r_[1]; }
  const Permutation& r2() const { return r_[2]; }
  const Permutation& r(int i) const { return r_[static_cast<std::size_t>(i)]; }
  const std::array<Permutation, 3>& involutions() const { return r_; }

  friend bool operator==(const MapTriple&, const MapTriple&) = default;

 private:
  std::array<Permutation, 3> r_;
};

class InvalidMapError : public DomainError {
 public:
  explicit InvalidMapError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Names of every violated map invariant: "r0^2 != 1", "(r0r2)^2 != 1",
/// "not transitive", "r1 has fixed points", ... Empty for a valid map.
std::vector<std::string> map_violations(const MapTriple& m);
/// Returns m, or throws InvalidMapError listing the violations.
const MapTriple& validate(const MapTriple& m);

/// Type {p,q}_r: orders of r0r1 (faces), r1r2 (vertices), r0r1r2 (Petrie polygons).
struct MapType {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  friend bool operator==(const MapType&, const MapType&) = default;
};
MapType map_type(const MapTriple& m);

struct MapCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t petrie_polygons = 0;
  friend bool operator==(const MapCounts&, const MapCounts&) = default;
};
MapCounts counts(const MapTriple& m);

std::int64_t euler_characteristic(const MapTriple& m);

/// |G| (4 - n) / 4n, the characteristic of a regular map of type {n,n}_n with
/// automorphism group G. Throws InvariantViolation when not integral.
BigInt chi_formula(const BigInt& group_order, std::uint64_t n);

/// Blades split into two classes by word parity, i.e. <r0r1, r1r2> has two orbits.
bool orientability(const MapTriple& m);

/// Edge multiplicities at the edge through blade 0: mV counts the edges joining
/// the same vertex set, mF the edges separating the same face set. A loop (or
/// an edge with the same face on both sides) is flagged separately.
struct Multiplicities {
  std::uint64_t vertex = 0;
  std::uint64_t face = 0;
  bool vertex_loop = false;
  bool face_loop = false;
  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};
Multiplicities multiplicities(const MapTriple& m);

/// Wilson's operations, acting on the involutions r0, r2, r0r2 of the Klein
/// four-group while fixing r1.
enum class Sigma { kId, kD, kP, kDPD, kDP, kPD };
inline constexpr std::array<Sigma, 6> kSigmaElements{Sigma::kId, Sigma::kD,  Sigma::kP,
                                                     Sigma::kDPD, Sigma::kDP, Sigma::kPD};
std::string_view sigma_name(Sigma s);
Sigma parse_sigma(std::string_view name);
/// Slot k of the result holds slot perm[k] of the input, slots being (r0, r2, r0r2).
std::array<int, 3> sigma_slots(Sigma s);
/// Product "s then t": sigma_apply(sigma_apply(m, s), t) == sigma_apply(m, s * t).
Sigma operator*(Sigma s, Sigma t);

MapTriple sigma_apply(const MapTriple& m, Sigma s);
/// The six direct derivates in the order Id, D, P, DPD, DP, PD.
std::array<MapTriple, 6> derivates(const MapTriple& m);

/// Blade bijection phi with phi(0) = root and phi(w r_i) = phi(w) r_i', if one exists.
std::optional<std::vector<Point>> rooted_isomorphism(const MapTriple& from, const MapTriple& to, Point root);

/// When assume_regular is set only root 0 is tried: if `to` is regular its
/// automorphisms move any isomorphism to every root.
bool are_isomorphic(const MapTriple& m1, const MapTriple& m2, bool assume_regular);

struct RegularityReport {
  bool regular = false;
  std::size_t automorphisms = 0;
};
/// Counts |Aut m| as the number of roots w admitting an automorphism 0 -> w.
/// Needs only transitivity. Automorphisms found so far are used to settle whole
/// orbits at once, so a regular map costs O(N log N) rather than O(N^2).
RegularityReport is_regular(const MapTriple& m);

enum class WilsonClass { kI, kII, kIII, kIV };
std::string_view wilson_class_name(WilsonClass c);

struct ClassificationReport {
  WilsonClass wilson_class = WilsonClass::kI;
  int derivate_count = 0;
  /// Parts of Sigma under "derivates are isomorphic", each in Sigma order.
  std::vector<std::vector<Sigma>> partition;
};

enum class RegularityCheck { kVerify, kAssume };
/// Throws DomainError for non-regular input unless the check is skipped.
ClassificationReport classify(const MapTriple& m, RegularityCheck check = RegularityCheck::kVerify);

struct InvariantsReport {
  std::size_t degree = 0;
  MapType type;
  MapCounts counts;
  std::int64_t chi = 0;
  bool orientable = false;
  /// 1 - chi/2 when orientable, 2 - chi otherwise.
  std::int64_t genus = 0;
  Multiplicities multiplicities;
};
InvariantsReport analyze(const MapTriple& m);

/// A homomorphism Gamma -> C2 given by its values on R0, R1, R2 (bit i = value on R_i).
/// It factors through the monodromy group of a regular map exactly when the
/// blades admit a consistent labelling label(w r_i) = label(w) + c_i.
bool character_factors(const MapTriple& m, unsigned character);
/// All such characters (including 0), ascending; a GF(2)-subspace.
std::vector<unsigned> factoring_characters(const MapTriple& m);

}  // namespace trimaps
